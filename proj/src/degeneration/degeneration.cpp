#include "affgr/degeneration.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "affgr/errors.hpp"

namespace affgr {

namespace {

bool connected(const RootDatum& d, const std::vector<int>& nodes) {
  if (nodes.empty()) return false;
  std::set<int> seen{nodes.front()};
  std::deque<int> queue{nodes.front()};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : nodes)
      if (u != v && d.cartan(v, u) != 0 && seen.insert(u).second) queue.push_back(u);
  }
  return seen.size() == nodes.size();
}

void require_dominant_pair(const Weight& lambda, const Weight& mu) {
  if (!(lambda.datum() == mu.datum())) throw DomainError("weights belong to different root data");
  if (!lambda.dominant()) throw DomainError("lambda = " + lambda.to_string() + " is not dominant");
  if (!mu.dominant()) throw DomainError("mu = " + mu.to_string() + " is not dominant");
}

// <gamma, alpha_i^vee> for gamma in root coordinates.
std::int64_t root_pairing(const RootDatum& d, const Coeffs& gamma, int i) {
  std::int64_t p = 0;
  for (int j = 0; j < d.rank(); ++j) p += gamma[j] * d.cartan(j, i);
  return p;
}

}  // namespace

int case_number(StembridgeCase c) {
  switch (c) {
    case StembridgeCase::simple: return 1;
    case StembridgeCase::short_dominant: return 2;
    case StembridgeCase::ac: return 3;
    case StembridgeCase::ag2: return 4;
    case StembridgeCase::cg2: return 5;
  }
  return 0;
}

std::string MinimalDegeneration::case_label() const {
  switch (kind) {
    case StembridgeCase::simple: return "simple";
    case StembridgeCase::short_dominant: return "short_dominant";
    case StembridgeCase::ac: return "ac_" + std::to_string(support_type.rank);
    case StembridgeCase::ag2: return "ag_2";
    case StembridgeCase::cg2: return "cg_2";
  }
  return {};
}

Support support(const RootDatum& datum, const RootVector& beta) {
  if (static_cast<int>(beta.coeffs.size()) != datum.rank()) throw DomainError("root vector rank mismatch");
  if (beta.is_zero()) throw DomainError("support of the zero vector");
  if (!beta.nonnegative()) throw DomainError("support needs nonnegative coefficients");
  Support s;
  for (int i = 0; i < datum.rank(); ++i)
    if (beta.coeffs[i] != 0) s.nodes.push_back(i);
  s.connected = connected(datum, s.nodes);
  return s;
}

LeviDatum levi_datum(const RootDatum& datum, std::span<const int> nodes) {
  std::vector<int> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw DomainError("empty Levi subset");
  for (int v : sorted)
    if (v < 0 || v >= datum.rank()) throw DomainError("Levi subset index out of range");
  const auto k = sorted.size();
  CartanMatrix sub(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) sub(a, b) = datum.cartan(sorted[a], sorted[b]);
  return {RootDatum::from_cartan(std::move(sub)), std::move(sorted)};
}

Weight restrict_to_levi(const Weight& lambda, const LeviDatum& levi) {
  Coeffs c;
  c.reserve(levi.nodes.size());
  for (int v : levi.nodes) c.push_back(lambda[v]);
  return Weight(levi.datum, std::move(c));
}

Weight restrict_to_levi(const Weight& lambda, std::span<const int> nodes) {
  return restrict_to_levi(lambda, levi_datum(lambda.datum(), nodes));
}

RootVector short_dominant_root(const RootDatum& datum, std::span<const int> nodes) {
  std::vector<int> in(nodes.begin(), nodes.end());
  std::sort(in.begin(), in.end());
  if (!connected(datum, in)) throw DomainError("short dominant root needs a connected subset");
  std::vector<bool> member(datum.rank(), false);
  for (int v : in) member[v] = true;

  const RootVector* best = nullptr;
  std::int64_t best_length = 0;
  for (const auto& gamma : datum.positive_roots()) {
    bool inside = true;
    for (int j = 0; j < datum.rank() && inside; ++j)
      if (gamma.coeffs[j] != 0 && !member[j]) inside = false;
    if (!inside) continue;
    bool dominant = true;
    for (int i : in)
      if (root_pairing(datum, gamma.coeffs, i) < 0) dominant = false;
    if (!dominant) continue;
    const std::int64_t len = scaled_inner(datum, datum.root_to_weight(gamma.coeffs), gamma.coeffs);
    if (!best || len < best_length) {
      best = &gamma;
      best_length = len;
    }
  }
  if (!best) throw ConsistencyError("no dominant root in a nonempty root subsystem");
  return *best;
}

std::optional<MinimalDegeneration> classify_pair(const Weight& lambda, const Weight& mu) {
  require_dominant_pair(lambda, mu);
  const auto& d = lambda.datum();
  auto beta = dominance_leq(mu, lambda);
  if (!beta || beta->is_zero()) return std::nullopt;
  // Every clause has beta a positive root (alpha_1 + alpha_2 in the G2 cases).
  if (!d.is_positive_root(beta->coeffs)) return std::nullopt;
  auto supp = support(d, *beta);
  if (!supp.connected) return std::nullopt;
  const auto& I = supp.nodes;

  const auto component = identify_diagram(d.cartan(), I).front();
  std::vector<StembridgeCase> matches;

  if (I.size() == 1) {
    // A one-node support also satisfies clause (2) (beta is the short dominant
    // root of A1 and mu_I = 0 when lambda_beta = 2); clause (1) takes it.
    matches.push_back(StembridgeCase::simple);
  } else {
    const bool is_short_dominant = short_dominant_root(d, I) == *beta;
    if (is_short_dominant) {
      if (std::all_of(I.begin(), I.end(), [&](int i) { return mu[i] == 0; }))
        matches.push_back(StembridgeCase::short_dominant);
      if (component.type.letter == 'B') {
        // Exactly one short simple root in a type-B diagram: the last Bourbaki node.
        const int short_node = component.nodes.back();
        int short_count = 0;
        for (int v : I) short_count += d.is_long(v) ? 0 : 1;
        if (short_count != 1 || d.is_long(short_node))
          throw ConsistencyError("type-B support without a unique short simple root");
        if (std::all_of(I.begin(), I.end(), [&](int i) { return mu[i] == (i == short_node ? 1 : 0); }))
          matches.push_back(StembridgeCase::ac);
      }
    }
    if (component.type.letter == 'G') {
      const int s = component.nodes[0], l = component.nodes[1];
      if (lambda[s] == 1 && lambda[l] == 1 && mu[s] == 2 && mu[l] == 0) matches.push_back(StembridgeCase::ag2);
      if (lambda[s] == 0 && lambda[l] == 1 && mu[s] == 1 && mu[l] == 0) matches.push_back(StembridgeCase::cg2);
    }
  }

  if (matches.empty()) return std::nullopt;
  if (matches.size() > 1)
    throw ConsistencyError("pair (" + lambda.to_string() + ") -> (" + mu.to_string() +
                           ") matches more than one clause");
  return MinimalDegeneration{lambda, mu, *beta, I, component.type, component, matches.front()};
}

std::vector<MinimalDegeneration> enumerate_minimal_degenerations_below(const Weight& lambda) {
  if (!lambda.dominant()) throw DomainError("lambda = " + lambda.to_string() + " is not dominant");
  std::vector<MinimalDegeneration> out;
  for (const auto& gamma : lambda.datum().positive_roots()) {
    Weight mu = lambda - gamma;
    if (!mu.dominant()) continue;
    if (auto deg = classify_pair(lambda, mu)) out.push_back(std::move(*deg));
  }
  std::sort(out.begin(), out.end(), [](const MinimalDegeneration& a, const MinimalDegeneration& b) {
    if (a.beta.height() != b.beta.height()) return a.beta.height() < b.beta.height();
    return a.mu.coeffs() > b.mu.coeffs();
  });
  return out;
}

LeviReduction levi_reduce(const MinimalDegeneration& d) {
  auto levi = levi_datum(d.lambda.datum(), d.support);
  Weight lam = restrict_to_levi(d.lambda, levi);
  Weight mu = restrict_to_levi(d.mu, levi);
  auto reduced = classify_pair(lam, mu);
  if (!reduced) throw ConsistencyError("Levi restriction of a cover is not a cover");
  if (reduced->kind != d.kind || reduced->support_type != d.support_type)
    throw ConsistencyError("Levi restriction changed the Stembridge case");
  return {std::move(levi), std::move(lam), std::move(mu), std::move(*reduced)};
}

}  // namespace affgr

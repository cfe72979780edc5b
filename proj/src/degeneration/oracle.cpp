#include <algorithm>
#include <numeric>

#include "affgr/degeneration.hpp"
#include "affgr/errors.hpp"

namespace affgr {

namespace {

// Calls visit(c) for every c with 0 <= c_i <= upper_i.
template <class Visit>
void for_each_in_box(const Coeffs& upper, Visit&& visit) {
  const std::size_t n = upper.size();
  Coeffs c(n, 0);
  for (;;) {
    visit(c);
    std::size_t i = 0;
    while (i < n && ++c[i] > upper[i]) c[i++] = 0;
    if (i == n) return;
  }
}

}  // namespace

std::vector<Weight> dominant_weights_below(const Weight& lambda) {
  if (!lambda.dominant()) throw DomainError("lambda = " + lambda.to_string() + " is not dominant");
  const auto& d = lambda.datum();
  const auto root = d.weight_to_root_rational(lambda.coeffs());
  Coeffs upper(root.size());
  for (std::size_t i = 0; i < root.size(); ++i) {
    // floor of a nonnegative rational
    upper[i] = static_cast<std::int64_t>(numerator(root[i]) / denominator(root[i]));
  }

  std::vector<std::pair<Coeffs, Coeffs>> found;  // (depth, weight)
  for_each_in_box(upper, [&](const Coeffs& c) {
    Coeffs nu = lambda.coeffs();
    const Coeffs drop = d.root_to_weight(c);
    for (std::size_t j = 0; j < nu.size(); ++j) nu[j] -= drop[j];
    if (std::all_of(nu.begin(), nu.end(), [](auto x) { return x >= 0; })) found.emplace_back(c, std::move(nu));
  });
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    const auto ha = std::accumulate(a.first.begin(), a.first.end(), std::int64_t{0});
    const auto hb = std::accumulate(b.first.begin(), b.first.end(), std::int64_t{0});
    if (ha != hb) return ha < hb;
    return a.second > b.second;
  });
  std::vector<Weight> out;
  out.reserve(found.size());
  for (auto& [c, nu] : found) out.emplace_back(lambda.datum_ptr(), std::move(nu));
  return out;
}

std::vector<Weight> covers_below(const Weight& lambda, Execution exec) {
  const auto below = dominant_weights_below(lambda);
  const auto& d = lambda.datum();
  const std::size_t rank = static_cast<std::size_t>(d.rank());
  std::vector<std::int64_t> depths;
  depths.reserve(below.size() * rank);
  for (const auto& nu : below) {
    Coeffs diff = lambda.coeffs();
    for (std::size_t j = 0; j < rank; ++j) diff[j] -= nu.coeffs()[j];
    const auto c = d.weight_to_root(diff);
    if (!c) throw ConsistencyError("box enumeration produced a weight outside lambda + Q");
    depths.insert(depths.end(), c->begin(), c->end());
  }
  const auto flags = cover_scan(depths, rank, exec);
  std::vector<Weight> out;
  for (std::size_t k = 0; k < below.size(); ++k)
    if (flags[k]) out.push_back(below[k]);
  return out;
}

bool brute_force_adjacent(const Weight& lambda, const Weight& mu) {
  if (!lambda.dominant() || !mu.dominant()) throw DomainError("adjacency is defined on dominant weights");
  const auto diff = dominance_leq(mu, lambda);
  if (!diff || diff->is_zero()) return false;
  bool adjacent = true;
  for_each_in_box(diff->coeffs, [&](const Coeffs& c) {
    if (!adjacent || c == diff->coeffs) return;
    if (std::all_of(c.begin(), c.end(), [](auto x) { return x == 0; })) return;
    if ((lambda - RootVector{c}).dominant()) adjacent = false;
  });
  return adjacent;
}

}  // namespace affgr

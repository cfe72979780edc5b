#include "affgr/root_core.hpp"

#include <numeric>

#include "affgr/errors.hpp"

namespace affgr {

namespace {

void require_same(const Weight& a, const Weight& b) {
  if (!(a.datum() == b.datum())) throw DomainError("weights belong to different root data");
}

}  // namespace

std::int64_t scaled_inner(const RootDatum& d, const Coeffs& weight, const Coeffs& root) {
  // (varpi_j | alpha_j) = (alpha_j|alpha_j) / 2
  std::int64_t acc = 0;
  for (int j = 0; j < d.rank(); ++j) acc += weight[j] * root[j] * d.scaled_length(j);
  return acc / 2;
}

std::int64_t pairing(const Weight& lambda, const RootVector& gamma) {
  const auto& d = lambda.datum();
  if (static_cast<int>(gamma.coeffs.size()) != d.rank() || !d.is_root(gamma.coeffs))
    throw DomainError("(" + gamma.to_string() + ") is not a root of " + d.label());
  const Coeffs gw = d.root_to_weight(gamma.coeffs);
  // 2(lambda|gamma)/(gamma|gamma); both sides carry the same scale.
  std::int64_t num = 0;
  for (int j = 0; j < d.rank(); ++j) num += lambda[j] * gamma.coeffs[j] * d.scaled_length(j);
  const std::int64_t den = scaled_inner(d, gw, gamma.coeffs);
  if (num % den != 0) throw ConsistencyError("non-integral pairing with a coroot");
  return num / den;
}

Rational inner_product(const Weight& x, const Weight& y) {
  require_same(x, y);
  const auto& d = x.datum();
  const auto cx = d.weight_to_root_rational(x.coeffs());
  Rational acc = 0;
  for (int j = 0; j < d.rank(); ++j) acc += cx[j] * y[j] * d.symmetrizer(j);
  return acc;
}

std::optional<RootVector> dominance_leq(const Weight& mu, const Weight& lambda) {
  require_same(mu, lambda);
  Coeffs diff(lambda.coeffs());
  for (int i = 0; i < lambda.rank(); ++i) diff[i] -= mu[i];
  auto root = lambda.datum().weight_to_root(diff);
  if (!root) return std::nullopt;
  RootVector r{*root};
  if (!r.nonnegative()) return std::nullopt;
  return r;
}

Weight reflect(const Weight& w, int i) {
  const auto& d = w.datum();
  Coeffs c = w.coeffs();
  const std::int64_t p = c.at(i);
  for (int j = 0; j < d.rank(); ++j) c[j] -= p * d.cartan(i, j);
  return Weight(w.datum_ptr(), std::move(c));
}

Coeffs dominant_conjugate(const RootDatum& d, Coeffs c) {
  const int n = d.rank();
  for (;;) {
    int i = 0;
    while (i < n && c[i] >= 0) ++i;
    if (i == n) return c;
    const std::int64_t p = c[i];
    for (int j = 0; j < n; ++j) c[j] -= p * d.cartan(i, j);
  }
}

Weight dominant_conjugate(const Weight& w) {
  return Weight(w.datum_ptr(), dominant_conjugate(w.datum(), w.coeffs()));
}

Integer parabolic_order(const RootDatum& d, std::span<const int> nodes) {
  Integer order = 1;
  for (const auto& c : identify_diagram(d.cartan(), nodes)) order *= type_tables(c.type).weyl_group_order;
  return order;
}

Integer orbit_size(const Weight& lambda) {
  if (!lambda.dominant()) throw DomainError("orbit_size needs a dominant weight, got " + lambda.to_string());
  std::vector<int> stabilizer;
  for (int i = 0; i < lambda.rank(); ++i)
    if (lambda[i] == 0) stabilizer.push_back(i);
  return lambda.datum().weyl_group_order() / parabolic_order(lambda.datum(), stabilizer);
}

SmithForm weight_lattice_quotient(const RootDatum& d, std::span<const int> nodes) {
  const auto k = nodes.size();
  Matrix<Integer> m(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) m(a, b) = d.cartan(nodes[a], nodes[b]);
  return smith_normal_form(std::move(m));
}

SmithForm weight_lattice_quotient(const RootDatum& d) {
  std::vector<int> all(d.rank());
  std::iota(all.begin(), all.end(), 0);
  return weight_lattice_quotient(d, all);
}

}  // namespace affgr

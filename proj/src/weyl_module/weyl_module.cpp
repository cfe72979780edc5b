#include "affgr/weyl_module.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

#include "affgr/degeneration.hpp"
#include "affgr/errors.hpp"

namespace affgr {

namespace {

Coeffs add(Coeffs a, const Coeffs& b, std::int64_t k = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
  return a;
}

// Shared Freudenthal data for one (datum, lambda).
struct FreudenthalContext {
  const RootDatum& d;
  Coeffs lambda;
  Coeffs rho;
  std::vector<Coeffs> root_weights;  // positive roots in the weight basis
  const std::unordered_map<Coeffs, std::size_t, CoeffsHash>& index;

  // Index of the dominant conjugate of nu in the table, if nu is a weight.
  std::optional<std::size_t> lookup(const Coeffs& nu) const {
    auto it = index.find(dominant_conjugate(d, nu));
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  // Right-hand side of Freudenthal's formula divided into the left factor.
  // value(k) must return the multiplicity of table entry k.
  template <class Value>
  Integer solve(const Coeffs& mu, const Coeffs& depth, Value&& value) const {
    // (lambda + rho|lambda + rho) - (mu + rho|mu + rho) = (lambda + mu + 2 rho | lambda - mu)
    const Coeffs lhs_weight = add(add(lambda, mu), rho, 2);
    const std::int64_t lhs = scaled_inner(d, lhs_weight, depth);
    if (lhs <= 0) throw ConsistencyError("non-positive Freudenthal denominator");

    Integer rhs = 0;
    const auto& roots = d.positive_roots();
    for (std::size_t a = 0; a < roots.size(); ++a) {
      Coeffs nu = mu;
      for (;;) {
        nu = add(std::move(nu), root_weights[a]);
        auto k = lookup(nu);
        if (!k) break;  // alpha-strings through a weight are unbroken
        rhs += Integer(scaled_inner(d, nu, roots[a].coeffs)) * value(*k);
      }
    }
    rhs *= 2;
    if (rhs % lhs != 0) throw ConsistencyError("non-integral Freudenthal quotient");
    return rhs / lhs;
  }
};

}  // namespace

FreudenthalTable::FreudenthalTable(Weight lambda, Execution exec) : lambda_(std::move(lambda)) {
  if (!lambda_.dominant()) throw DomainError("lambda = " + lambda_.to_string() + " is not dominant");
  const auto& d = lambda_.datum();
  const auto below = dominant_weights_below(lambda_);
  std::vector<Coeffs> depths;
  for (std::size_t k = 0; k < below.size(); ++k) {
    index_.emplace(below[k].coeffs(), k);
    depths.push_back(*d.weight_to_root(add(lambda_.coeffs(), below[k].coeffs(), -1)));
  }
  std::vector<Coeffs> root_weights;
  for (const auto& r : d.positive_roots()) root_weights.push_back(d.root_to_weight(r.coeffs));
  FreudenthalContext ctx{d, lambda_.coeffs(), Weight::rho(lambda_.datum_ptr()).coeffs(), root_weights, index_};

  std::vector<Integer> mult(below.size(), 0);
  if (exec == Execution::serial) {
    std::vector<char> done(below.size(), 0);
    std::function<Integer(std::size_t)> m = [&](std::size_t k) -> Integer {
      if (done[k]) return mult[k];
      mult[k] = k == 0 ? Integer(1) : ctx.solve(below[k].coeffs(), depths[k], m);
      done[k] = 1;
      return mult[k];
    };
    for (std::size_t k = 0; k < below.size(); ++k) m(k);
  } else {
    // Entries of one depth only read entries of smaller depth.
    std::map<std::int64_t, std::vector<std::size_t>> levels;
    for (std::size_t k = 0; k < below.size(); ++k)
      levels[std::accumulate(depths[k].begin(), depths[k].end(), std::int64_t{0})].push_back(k);
    for (const auto& [height, members] : levels) {
      for_each_index(
          members.size(),
          [&](std::size_t i) {
            const std::size_t k = members[i];
            mult[k] = height == 0 ? Integer(1) : ctx.solve(below[k].coeffs(), depths[k], [&](std::size_t j) {
              return mult[j];
            });
          },
          exec);
    }
  }
  for (std::size_t k = 0; k < below.size(); ++k) entries_.emplace_back(below[k], std::move(mult[k]));
}

Integer FreudenthalTable::multiplicity(const Weight& mu) const {
  if (!(mu.datum() == lambda_.datum())) throw DomainError("weight belongs to a different root datum");
  auto it = index_.find(dominant_conjugate(mu.datum(), mu.coeffs()));
  return it == index_.end() ? Integer(0) : entries_[it->second].second;
}

Integer freudenthal_multiplicity(const Weight& lambda, const Weight& mu) {
  return FreudenthalTable(lambda).multiplicity(mu);
}

Integer weyl_dimension(const Weight& lambda) {
  if (!lambda.dominant()) throw DomainError("lambda = " + lambda.to_string() + " is not dominant");
  const auto& d = lambda.datum();
  const Coeffs rho = Weight::rho(lambda.datum_ptr()).coeffs();
  const Coeffs shifted = add(lambda.coeffs(), rho);
  Rational prod = 1;
  for (const auto& a : d.positive_roots())
    prod *= Rational(scaled_inner(d, shifted, a.coeffs), scaled_inner(d, rho, a.coeffs));
  if (denominator(prod) != 1) throw ConsistencyError("non-integral Weyl dimension");
  return numerator(prod);
}

CharacterSupport weyl_character_support(const Weight& lambda, Execution exec) {
  FreudenthalTable table(lambda, exec);
  CharacterSupport out;
  out.dimension = 0;
  for (const auto& [mu, m] : table.dominant()) {
    Integer orbit = orbit_size(mu);
    out.dimension += m * orbit;
    out.terms.push_back({mu, m, orbit});
  }
  const Integer expected = weyl_dimension(lambda);
  if (out.dimension != expected)
    throw ConsistencyError("character total " + out.dimension.str() + " disagrees with the Weyl dimension " +
                           expected.str());
  return out;
}

Integer shapovalov_pair(const Monomial& left, const Monomial& right, const Weight& lambda) {
  const auto& d = lambda.datum();
  for (int i : left)
    if (i < 0 || i >= d.rank()) throw DomainError("monomial index out of range");
  for (int i : right)
    if (i < 0 || i >= d.rank()) throw DomainError("monomial index out of range");
  auto sorted_l = left, sorted_r = right;
  std::sort(sorted_l.begin(), sorted_l.end());
  std::sort(sorted_r.begin(), sorted_r.end());
  if (sorted_l != sorted_r) return 0;

  // (f_{l_s} ... f_{l_k} v | f_J v) = (f_{l_{s+1}} ... v | e_{l_s} f_J v)
  std::map<std::pair<std::size_t, Monomial>, Integer> memo;
  std::function<Integer(std::size_t, const Monomial&)> pair = [&](std::size_t s, const Monomial& j) -> Integer {
    if (s == left.size()) return j.empty() ? Integer(1) : Integer(0);
    const auto key = std::make_pair(s, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int i = left[s];
    Integer acc = 0;
    // e_i f_{j_1} ... f_{j_l} v = sum over t with j_t = i of
    //   <lambda - sum_{u > t} alpha_{j_u}, alpha_i^vee> f_{j_1} ... (no j_t) ... f_{j_l} v
    std::int64_t coef = lambda[i];
    for (std::size_t t = j.size(); t-- > 0;) {
      if (j[t] == i) {
        Monomial rest = j;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
        if (coef != 0) acc += coef * pair(s + 1, rest);
      }
      coef -= d.cartan(j[t], i);
    }
    memo.emplace(key, acc);
    return acc;
  };
  return pair(0, right);
}

std::vector<Monomial> ac_basis_monomials(int n) {
  if (n < 2) throw DomainError("the ac basis needs rank n >= 2");
  std::vector<Monomial> out;
  for (int i = 1; i <= n; ++i) {
    Monomial m;
    for (int k = i; k <= n; ++k) m.push_back(k - 1);
    for (int k = i - 1; k >= 1; --k) m.push_back(k - 1);
    out.push_back(std::move(m));
  }
  return out;
}

GramMatrix gram_matrix(const Weight& lambda, const std::vector<Monomial>& monomials) {
  if (!lambda.dominant()) throw DomainError("lambda = " + lambda.to_string() + " is not dominant");
  if (monomials.empty()) throw DomainError("empty monomial list");
  const auto& d = lambda.datum();
  auto drop = [&](const Monomial& m) {
    Coeffs c(d.rank(), 0);
    for (int i : m) {
      if (i < 0 || i >= d.rank()) throw DomainError("monomial index out of range");
      ++c[i];
    }
    return c;
  };
  const Coeffs common = drop(monomials.front());
  for (const auto& m : monomials)
    if (drop(m) != common) throw DomainError("monomials do not share a weight");
  const Weight mu = lambda - RootVector{common};

  const std::size_t k = monomials.size();
  Matrix<Integer> g(k, k, Integer(0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      g(a, b) = shapovalov_pair(monomials[a], monomials[b], lambda);
      g(b, a) = g(a, b);
    }
  const Integer mult = freudenthal_multiplicity(lambda, mu);
  if (Integer(rank_over_rationals(g)) != mult)
    throw DomainError("monomial list does not span V(lambda)_mu (rank " + std::to_string(rank_over_rationals(g)) +
                      ", multiplicity " + mult.str() + ")");
  return {std::move(g), lambda, mu, monomials};
}

SmithForm elementary_divisors(const GramMatrix& g) { return smith_normal_form(g.entries); }

std::int64_t decomposition_number_ac(int n, std::int64_t ell) {
  if (n < 2) throw DomainError("decomposition_number_ac needs n >= 2");
  if (!is_prime(ell)) throw DomainError(std::to_string(ell) + " is not prime");
  auto datum = build_root_datum("B" + std::to_string(n));
  Coeffs lambda(n, 0);
  lambda[0] = 1;
  lambda[n - 1] = 1;
  const auto g = gram_matrix(Weight(datum, lambda), ac_basis_monomials(n));
  return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(rank_mod_prime(g.entries, ell));
}

std::int64_t linkage_bound(const Weight& lambda, const Weight& mu) {
  if (!(lambda.datum() == mu.datum())) throw DomainError("weights belong to different root data");
  const auto beta = dominance_leq(mu, lambda);
  if (!beta || !lambda.datum().is_positive_root(beta->coeffs))
    throw DomainError("lambda - mu is not a positive root");
  return pairing(lambda + Weight::rho(lambda.datum_ptr()), *beta) - 1;
}

}  // namespace affgr

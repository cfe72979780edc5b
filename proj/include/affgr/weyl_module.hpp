#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "affgr/kernels.hpp"
#include "affgr/linalg.hpp"
#include "affgr/root_core.hpp"

namespace affgr {

/// Weight multiplicities of V(lambda) on the dominant weights below lambda,
/// by Freudenthal's formula with m(lambda) = 1. The serial path is a
/// memoized top-down recursion; the parallel path fills the table level by
/// level (depth of lambda - mu). Both produce the same table.
class FreudenthalTable {
 public:
  /// Throws DomainError if lambda is not dominant.
  explicit FreudenthalTable(Weight lambda, Execution exec = Execution::parallel);

  const Weight& lambda() const noexcept { return lambda_; }
  /// dim V(lambda)_mu for any weight mu of the datum (0 if mu is not a weight).
  Integer multiplicity(const Weight& mu) const;
  /// Dominant weights <= lambda with their multiplicities, lambda first.
  const std::vector<std::pair<Weight, Integer>>& dominant() const noexcept { return entries_; }

 private:
  Weight lambda_;
  std::vector<std::pair<Weight, Integer>> entries_;
  std::unordered_map<Coeffs, std::size_t, CoeffsHash> index_;
};

Integer freudenthal_multiplicity(const Weight& lambda, const Weight& mu);

struct CharacterTerm {
  Weight mu;
  Integer multiplicity;
  Integer orbit_size;
};

struct CharacterSupport {
  std::vector<CharacterTerm> terms;  // dominant mu <= lambda
  Integer dimension;                 // sum of multiplicity * orbit size
};

/// Orbit-sum presentation of ch V(lambda); throws ConsistencyError if the
/// total disagrees with the Weyl dimension formula.
CharacterSupport weyl_character_support(const Weight& lambda, Execution exec = Execution::parallel);

/// prod over positive roots of (lambda + rho | alpha) / (rho | alpha).
Integer weyl_dimension(const Weight& lambda);

/// f_{i_1} ... f_{i_k} v: indices[0] is applied last.
using Monomial = std::vector<int>;

/// Contravariant pairing (f_I v | f_J v) in the Verma module of highest
/// weight lambda, (v | v) = 1. Zero when the weights differ.
Integer shapovalov_pair(const Monomial& left, const Monomial& right, const Weight& lambda);

/// v_i = f_i f_{i+1} ... f_n f_{i-1} ... f_1 v for i = 1..n (0-based indices).
/// Throws DomainError for n < 2.
std::vector<Monomial> ac_basis_monomials(int n);

struct GramMatrix {
  Matrix<Integer> entries;
  Weight lambda;
  Weight mu;
  std::vector<Monomial> monomials;
};

/// Pairwise contravariant pairings. Throws DomainError if the monomials do
/// not share a weight or do not span V(lambda)_mu (rank over Q smaller than
/// the Freudenthal multiplicity).
GramMatrix gram_matrix(const Weight& lambda, const std::vector<Monomial>& monomials);

SmithForm elementary_divisors(const GramMatrix& g);

/// [V(w1 + wn) : L(wn)] in type B_n over a field of characteristic ell, as
/// n minus the rank mod ell of the Gram matrix on the ac basis. Throws
/// DomainError for n < 2 or composite ell.
std::int64_t decomposition_number_ac(int n, std::int64_t ell);

/// <lambda + rho, beta^vee> - 1 with beta = lambda - mu. Throws DomainError
/// unless beta is a positive root.
std::int64_t linkage_bound(const Weight& lambda, const Weight& mu);

}  // namespace affgr

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "affgr/integer.hpp"
#include "affgr/matrix.hpp"

namespace affgr {

/// Elementary divisors d_1 | d_2 | ... | d_k (k = min(rows, cols)), zeros last.
struct SmithForm {
  std::vector<Integer> divisors;
  std::size_t rank = 0;

  Integer product_of_nonzero() const;
  /// Number of divisors that the prime p divides (zeros included).
  std::size_t count_divisible_by(std::int64_t p) const;
  /// Invariant factors different from 1.
  std::vector<Integer> nontrivial() const;
};

SmithForm smith_normal_form(Matrix<Integer> m);

/// Fraction-free (Bareiss) determinant.
Integer determinant(Matrix<Integer> m);

std::size_t rank_over_rationals(Matrix<Integer> m);
std::size_t rank_mod_prime(const Matrix<Integer>& m, std::int64_t p);

Matrix<Integer> to_integer_matrix(const Matrix<std::int64_t>& m);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t bound);
/// Distinct prime divisors of |n| in increasing order; empty for 0 and ±1.
std::vector<std::int64_t> prime_factors(const Integer& n);

}  // namespace affgr

#pragma once

#include <cstdint>
#include <vector>

#include "affgr/integer.hpp"
#include "affgr/root_datum.hpp"

namespace affgr {

/// Standard constants of an irreducible finite type.
struct TypeTable {
  std::vector<int> exponents;  // increasing
  int coxeter_number = 0;
  int dual_coxeter_number = 0;
  std::vector<std::int64_t> bad_primes;
  Integer weyl_group_order;
  int positive_root_count = 0;

  bool is_bad_prime(std::int64_t p) const;
  bool is_good_prime(std::int64_t p) const { return !is_bad_prime(p); }
};

TypeTable type_tables(CartanType type);

/// Type of the dual root system (B_n <-> C_n).
CartanType dual_type(CartanType type);

}  // namespace affgr

#include "affgr/type_tables.hpp"

#include <algorithm>

#include "affgr/errors.hpp"

namespace affgr {

namespace {

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

bool TypeTable::is_bad_prime(std::int64_t p) const {
  return std::find(bad_primes.begin(), bad_primes.end(), p) != bad_primes.end();
}

TypeTable type_tables(CartanType type) {
  const int n = type.rank;
  TypeTable t;
  switch (type.letter) {
    case 'A':
      for (int i = 1; i <= n; ++i) t.exponents.push_back(i);
      t.coxeter_number = n + 1;
      t.dual_coxeter_number = n + 1;
      t.weyl_group_order = factorial(n + 1);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) t.exponents.push_back(2 * i - 1);
      t.coxeter_number = 2 * n;
      t.dual_coxeter_number = type.letter == 'B' ? 2 * n - 1 : n + 1;
      t.bad_primes = {2};
      t.weyl_group_order = Integer(1) << n;
      t.weyl_group_order *= factorial(n);
      break;
    case 'D':
      if (n == 3) return type_tables({'A', 3});
      for (int i = 1; i < n; ++i) t.exponents.push_back(2 * i - 1);
      t.exponents.push_back(n - 1);
      std::sort(t.exponents.begin(), t.exponents.end());
      t.coxeter_number = 2 * n - 2;
      t.dual_coxeter_number = 2 * n - 2;
      t.bad_primes = {2};
      t.weyl_group_order = Integer(1) << (n - 1);
      t.weyl_group_order *= factorial(n);
      break;
    case 'E':
      if (n == 6) {
        t.exponents = {1, 4, 5, 7, 8, 11};
        t.coxeter_number = t.dual_coxeter_number = 12;
        t.weyl_group_order = 51840;
        t.bad_primes = {2, 3};
      } else if (n == 7) {
        t.exponents = {1, 5, 7, 9, 11, 13, 17};
        t.coxeter_number = t.dual_coxeter_number = 18;
        t.weyl_group_order = 2903040;
        t.bad_primes = {2, 3};
      } else if (n == 8) {
        t.exponents = {1, 7, 11, 13, 17, 19, 23, 29};
        t.coxeter_number = t.dual_coxeter_number = 30;
        t.weyl_group_order = 696729600;
        t.bad_primes = {2, 3, 5};
      } else {
        throw DomainError("no type " + type.label());
      }
      break;
    case 'F':
      if (n != 4) throw DomainError("no type " + type.label());
      t.exponents = {1, 5, 7, 11};
      t.coxeter_number = 12;
      t.dual_coxeter_number = 9;
      t.weyl_group_order = 1152;
      t.bad_primes = {2, 3};
      break;
    case 'G':
      if (n != 2) throw DomainError("no type " + type.label());
      t.exponents = {1, 5};
      t.coxeter_number = 6;
      t.dual_coxeter_number = 4;
      t.weyl_group_order = 12;
      t.bad_primes = {2, 3};
      break;
    default:
      throw DomainError("no type " + type.label());
  }
  t.positive_root_count = n * t.coxeter_number / 2;
  return t;
}

CartanType dual_type(CartanType type) {
  if (type.letter == 'B') return {'C', type.rank};
  if (type.letter == 'C') return {'B', type.rank};
  return type;
}

}  // namespace affgr

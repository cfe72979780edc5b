#include "affgr/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace affgr {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Position of the smallest nonzero |entry| in the lower-right block starting at s.
bool find_pivot(const Matrix<Integer>& m, std::size_t s, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = s; i < m.rows(); ++i)
    for (std::size_t j = s; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Integer a = abs_value(m(i, j));
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

Integer SmithForm::product_of_nonzero() const {
  Integer p = 1;
  for (const auto& d : divisors)
    if (d != 0) p *= d;
  return p;
}

std::size_t SmithForm::count_divisible_by(std::int64_t p) const {
  std::size_t n = 0;
  for (const auto& d : divisors)
    if (d % p == 0) ++n;
  return n;
}

std::vector<Integer> SmithForm::nontrivial() const {
  std::vector<Integer> out;
  for (const auto& d : divisors)
    if (d != 1) out.push_back(d);
  return out;
}

SmithForm smith_normal_form(Matrix<Integer> m) {
  const std::size_t k = std::min(m.rows(), m.cols());
  for (std::size_t s = 0; s < k; ++s) {
    std::size_t pi = s, pj = s;
    if (!find_pivot(m, s, pi, pj)) break;
    m.swap_rows(s, pi);
    m.swap_cols(s, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = s + 1; i < m.rows(); ++i) {
        if (m(i, s) == 0) continue;
        Integer q = m(i, s) / m(s, s);
        for (std::size_t j = s; j < m.cols(); ++j) m(i, j) -= q * m(s, j);
        if (m(i, s) != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < m.cols(); ++j) {
        if (m(s, j) == 0) continue;
        Integer q = m(s, j) / m(s, s);
        for (std::size_t i = s; i < m.rows(); ++i) m(i, j) -= q * m(i, s);
        if (m(s, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder is smaller than the pivot: move the smallest entry of
        // row s / column s into the pivot and sweep again.
        std::size_t bi = s, bj = s;
        Integer best = abs_value(m(s, s));
        for (std::size_t i = s + 1; i < m.rows(); ++i)
          if (m(i, s) != 0 && abs_value(m(i, s)) < best) best = abs_value(m(i, s)), bi = i, bj = s;
        for (std::size_t j = s + 1; j < m.cols(); ++j)
          if (m(s, j) != 0 && abs_value(m(s, j)) < best) best = abs_value(m(s, j)), bi = s, bj = j;
        m.swap_rows(s, bi);
        m.swap_cols(s, bj);
        continue;
      }
      // Divisibility: fold any offending row into row s and repeat.
      bool divisible = true;
      for (std::size_t i = s + 1; i < m.rows() && divisible; ++i)
        for (std::size_t j = s + 1; j < m.cols(); ++j)
          if (m(i, j) % m(s, s) != 0) {
            for (std::size_t c = s; c < m.cols(); ++c) m(s, c) += m(i, c);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
  }

  SmithForm out;
  out.divisors.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.divisors.push_back(abs_value(m(i, i)));
    if (m(i, i) != 0) ++out.rank;
  }
  return out;
}

Integer determinant(Matrix<Integer> m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank_over_rationals(Matrix<Integer> m) {
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t r = rank;
    while (r < m.rows() && m(r, col) == 0) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(rank, r);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j)
        m(i, j) = (m(i, j) * m(rank, col) - m(i, col) * m(rank, j)) / prev;
      m(i, col) = 0;
    }
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_prime(const Matrix<Integer>& src, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("rank_mod_prime needs a prime modulus");
  Matrix<std::int64_t> m(src.rows(), src.cols());
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) {
      Integer r = src(i, j) % p;
      if (r < 0) r += p;
      m(i, j) = static_cast<std::int64_t>(r);
    }
  auto inverse = [p](std::int64_t a) {
    std::int64_t result = 1, e = p - 2;
    __int128 base = a;
    __int128 acc = 1;
    while (e > 0) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    result = static_cast<std::int64_t>(acc);
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t r = rank;
    while (r < m.rows() && m(r, col) == 0) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(rank, r);
    const std::int64_t inv = inverse(m(rank, col));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>(static_cast<__int128>(m(i, col)) * inv % p);
      for (std::size_t j = col; j < m.cols(); ++j) {
        __int128 v = m(i, j) - static_cast<__int128>(f) * m(rank, j);
        v %= p;
        if (v < 0) v += p;
        m(i, j) = static_cast<std::int64_t>(v);
      }
    }
    ++rank;
  }
  return rank;
}

Matrix<Integer> to_integer_matrix(const Matrix<std::int64_t>& m) { return m.cast<Integer>(); }

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= bound; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

std::vector<std::int64_t> prime_factors(const Integer& n) {
  Integer m = abs_value(n);
  std::vector<std::int64_t> out;
  if (m <= 1) return out;
  for (std::int64_t d = 2; Integer(d) * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(static_cast<std::int64_t>(m));
  return out;
}

}  // namespace affgr

#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace affgr {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Lattice coordinates (fundamental-weight or simple-root basis).
using Coeffs = std::vector<std::int64_t>;

struct CoeffsHash {
  std::size_t operator()(const Coeffs& c) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : c) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace affgr

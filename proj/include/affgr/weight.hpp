#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "affgr/integer.hpp"
#include "affgr/root_datum.hpp"

namespace affgr {

/// Element of the root lattice in simple-root coordinates.
struct RootVector {
  Coeffs coeffs;

  std::int64_t height() const;
  bool is_zero() const;
  bool nonnegative() const;
  std::string to_string() const;

  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

/// Integral weight in the fundamental-weight basis of a root datum.
class Weight {
 public:
  Weight(DatumPtr datum, Coeffs coeffs);

  static Weight zero(DatumPtr datum);
  static Weight fundamental(DatumPtr datum, int i);
  static Weight rho(DatumPtr datum);

  const RootDatum& datum() const noexcept { return *datum_; }
  const DatumPtr& datum_ptr() const noexcept { return datum_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  std::int64_t operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  int rank() const noexcept { return static_cast<int>(coeffs_.size()); }

  bool dominant() const;
  bool is_zero() const;
  std::string to_string() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator+(const RootVector& r) const;
  Weight operator-(const RootVector& r) const;

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.coeffs_ == b.coeffs_ && *a.datum_ == *b.datum_;
  }

 private:
  void require_same(const Weight& o) const;

  DatumPtr datum_;
  Coeffs coeffs_;
};

/// Parses "1,0,0,1". Throws ParseError on bad syntax or wrong length.
Weight parse_weight(DatumPtr datum, std::string_view literal);

}  // namespace affgr

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affgr/integer.hpp"
#include "affgr/matrix.hpp"

namespace affgr {

using CartanMatrix = Matrix<std::int64_t>;

/// An irreducible finite type such as B5 or G2.
struct CartanType {
  char letter = 'A';
  int rank = 1;

  std::string label() const { return std::string(1, letter) + std::to_string(rank); }
  bool simply_laced() const { return letter == 'A' || letter == 'D' || letter == 'E'; }

  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

/// Parses a single irreducible label ("B5"). Throws ParseError.
CartanType parse_cartan_type(std::string_view text);

/// Bourbaki Cartan matrix, A(i, j) = <alpha_i, alpha_j^vee>.
CartanMatrix standard_cartan(CartanType type);

/// A connected piece of a Dynkin diagram. nodes[k] is the index (in the
/// enclosing matrix) of the simple root that Bourbaki calls alpha_{k+1}.
struct DynkinComponent {
  CartanType type;
  std::vector<int> nodes;
};

/// Splits the subdiagram on `nodes` into connected components, identifies
/// each finite type and recovers the Bourbaki numbering. Components are
/// ordered by their smallest node. A rank-2 double bond is reported as B2
/// with order (long, short). Throws DomainError if a component is not of
/// finite type.
std::vector<DynkinComponent> identify_diagram(const CartanMatrix& cartan,
                                              std::span<const int> nodes);

struct RootVector;

class RootDatum;
using DatumPtr = std::shared_ptr<const RootDatum>;

/// Finite root system (possibly reducible) with its Cartan matrix, Bourbaki
/// labels and cached positive roots. Immutable after construction.
class RootDatum {
 public:
  /// Validates the generalized Cartan axioms, symmetrizability and positive
  /// definiteness, then identifies components. Throws DomainError.
  static DatumPtr from_cartan(CartanMatrix cartan);
  /// Same, but with explicitly supplied components (used to keep labels such
  /// as C2 that identification alone cannot distinguish from B2).
  static DatumPtr from_components(CartanMatrix cartan, std::vector<DynkinComponent> components);

  int rank() const noexcept { return static_cast<int>(cartan_.rows()); }
  const CartanMatrix& cartan() const noexcept { return cartan_; }
  std::int64_t cartan(int i, int j) const { return cartan_(i, j); }
  const std::vector<DynkinComponent>& components() const noexcept { return components_; }
  std::string label() const;

  int component_of(int node) const { return component_of_.at(node); }
  /// (alpha|alpha) in integer units where the shortest root of each component has length 2.
  std::int64_t scaled_length(int node) const { return scaled_length_.at(node); }
  /// d_i = (alpha_i|alpha_i)/2 with long roots of squared length 2.
  Rational symmetrizer(int node) const;
  bool is_long(int node) const;
  /// Symmetrized form on simple roots in scaled units: (alpha_i|alpha_j).
  std::int64_t scaled_form(int i, int j) const { return cartan_(i, j) * scaled_length_[j] / 2; }

  /// Positive roots in simple-root coordinates, ordered by height then
  /// lexicographically.
  const std::vector<RootVector>& positive_roots() const noexcept { return positive_roots_; }
  bool is_positive_root(const Coeffs& c) const;
  bool is_root(const Coeffs& c) const;

  Integer weyl_group_order() const;

  /// Simple-root coordinates -> fundamental-weight coordinates.
  Coeffs root_to_weight(const Coeffs& c) const;
  /// Fundamental-weight coordinates -> simple-root coordinates, if integral.
  std::optional<Coeffs> weight_to_root(const Coeffs& w) const;
  std::vector<Rational> weight_to_root_rational(const Coeffs& w) const;

  /// Simple-root coordinates of alpha_i in the weight basis (row i of A).
  Coeffs simple_root_weight(int i) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) { return a.cartan_ == b.cartan_; }

 private:
  RootDatum() = default;
  void finish();

  CartanMatrix cartan_;
  std::vector<DynkinComponent> components_;
  std::vector<int> component_of_;
  std::vector<std::int64_t> scaled_length_;
  std::vector<std::int64_t> long_length_;  // per component
  CartanMatrix adjugate_t_;                // det * (A^T)^{-1}
  std::int64_t det_ = 1;
  std::vector<RootVector> positive_roots_;
  std::vector<Coeffs> sorted_roots_;
};

/// Parses "B5", "A2xA1", ... into a root datum. Throws ParseError.
DatumPtr build_root_datum(std::string_view spec);

/// Transposed Cartan matrix: B_n <-> C_n, the other types self-dual.
DatumPtr langlands_dual(const RootDatum& datum);

}  // namespace affgr

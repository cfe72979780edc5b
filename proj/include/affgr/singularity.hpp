#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affgr/degeneration.hpp"

namespace affgr {

/// Singularity of Gr_lambda-bar along Gr_mu for a cover lambda -> mu.
struct SingularityClass {
  enum class Kind { kleinian, minimal, ac, ag2, cg2 };

  Kind kind = Kind::kleinian;
  int kleinian_m = 0;       // Kleinian A_m, m = lambda_beta - 1
  CartanType minimal_type;  // minimal singularity: dual type of Phi_I
  int ac_n = 0;             // ac_n

  /// "kleinian_A<m>", "<letter><rank>" in lower case for minimal
  /// singularities ("a2", "c2", "g2"), "ac<n>", "ag2", "cg2".
  std::string label() const;

  friend bool operator==(const SingularityClass&, const SingularityClass&) = default;
};

/// m_mu(lambda, q): coeffs[i] is the coefficient of q^i.
struct ICPolynomial {
  std::vector<std::int64_t> coeffs;

  std::int64_t at_one() const;
  bool is_one() const { return coeffs == std::vector<std::int64_t>{1}; }
  /// "1 + q + q^3".
  std::string to_string() const;

  friend bool operator==(const ICPolynomial&, const ICPolynomial&) = default;
};

/// d(l) = #{i : l divides moduli[i]}. Moduli equal to 1 are dropped, so an
/// empty list is the identically zero profile. A single-modulus profile
/// (N, v = 1) is stored as {N}.
struct DecompositionProfile {
  std::vector<std::int64_t> moduli;

  std::int64_t value(std::int64_t ell) const;
  bool identically_zero() const { return moduli.empty(); }
  /// Primes dividing some modulus, increasing.
  std::vector<std::int64_t> support_primes() const;
  /// Primes p <= bound with d(p) != 0.
  std::vector<std::int64_t> nonzero_primes(std::int64_t bound) const;

  friend bool operator==(const DecompositionProfile&, const DecompositionProfile&) = default;
};

struct NonSmoothnessWitness {
  enum class Kind { rational, modular };
  Kind kind = Kind::modular;
  std::optional<std::int64_t> prime;  // modular only
};

struct Obstruction {
  enum class Kind { rational, modular };
  Kind kind = Kind::rational;
  std::optional<std::int64_t> prime;  // modular only: smallest prime where the profiles differ
};

/// Everything the invariants below compute for one degeneration.
struct SingularityInvariants {
  SingularityClass cls;
  ICPolynomial ic;
  DecompositionProfile profile;
  int codimension = 0;
};

SingularityClass classify_singularity(const MinimalDegeneration& d);

/// 2 <beta, rho^vee> = 2 ht(beta), cross-checked against the per-case value
/// (2, 2h^vee(Phi_I^vee) - 2, 2n, 4, 4). Throws ConsistencyError on mismatch.
int codimension(const MinimalDegeneration& d);
/// Per-case table value of the codimension.
int codimension_table_value(const MinimalDegeneration& d);

ICPolynomial ic_polynomial(const MinimalDegeneration& d);
DecompositionProfile decomposition_profile(const MinimalDegeneration& d);

/// Smallest prime with nonzero decomposition number, or a rational witness
/// when the profile vanishes identically. Throws ConsistencyError if neither
/// exists.
NonSmoothnessWitness nonsmoothness_certificate(const MinimalDegeneration& d);

SingularityInvariants invariants(const MinimalDegeneration& d);

/// A reason the two singularities are not equivalent, if one is found.
/// Absence is not a proof of equivalence.
std::optional<Obstruction> equivalence_obstruction(const SingularityInvariants& a,
                                                   const SingularityInvariants& b);

/// Representative degeneration for a named singularity: "a2", "ac2", "ag2",
/// "c2", "cg2", "an:<n>", "acn:<n>". Throws ParseError.
MinimalDegeneration named_singularity(std::string_view name);

/// Primes with torsion in the cohomology of the minimal nilpotent orbit
/// (a fixed table, not recomputed).
std::vector<std::int64_t> minimal_orbit_torsion_primes(CartanType type);

struct TorsionAudit {
  CartanType type;
  std::vector<std::int64_t> torsion;
  std::vector<std::int64_t> bad;
  bool consistent = false;  // torsion primes are all bad
};

TorsionAudit conjecture_audit(CartanType type);

}  // namespace affgr

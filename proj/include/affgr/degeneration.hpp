#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "affgr/kernels.hpp"
#include "affgr/root_core.hpp"

namespace affgr {

/// The five clauses of Stembridge's classification of covers in the
/// dominance order on dominant weights.
enum class StembridgeCase {
  simple,          // beta is a simple root
  short_dominant,  // beta the short dominant root of Phi_I, mu_I = 0
  ac,              // Phi_I of type B_n, mu_I the short fundamental weight
  ag2,             // G2: lambda_I = w1 + w2, mu_I = 2 w1
  cg2,             // G2: lambda_I = w2, mu_I = w1
};

int case_number(StembridgeCase c);

/// A validated cover lambda -> mu of dominant weights.
struct MinimalDegeneration {
  Weight lambda;
  Weight mu;
  RootVector beta;           // lambda - mu, simple-root coordinates
  std::vector<int> support;  // supp(beta), ascending
  CartanType support_type;   // type of Phi_I (a rank-2 double bond is reported as B2)
  DynkinComponent support_component;
  StembridgeCase kind;

  /// "simple", "short_dominant", "ac_<n>", "ag_2", "cg_2".
  std::string case_label() const;
};

struct Support {
  std::vector<int> nodes;
  bool connected = false;
};

/// Simple roots with nonzero coefficient in beta. Throws DomainError for
/// beta = 0 or a negative coefficient.
Support support(const RootDatum& datum, const RootVector& beta);

/// Root datum generated by a subset of the simple roots. nodes[k] is the
/// index in the enclosing datum of the Levi's k-th simple root.
struct LeviDatum {
  DatumPtr datum;
  std::vector<int> nodes;
};

LeviDatum levi_datum(const RootDatum& datum, std::span<const int> nodes);
/// lambda_I as a weight of the Levi datum.
Weight restrict_to_levi(const Weight& lambda, const LeviDatum& levi);
Weight restrict_to_levi(const Weight& lambda, std::span<const int> nodes);

/// Dominant root of minimal length of Phi_I, in the coordinates of the
/// enclosing datum. Throws DomainError if I is empty or disconnected.
RootVector short_dominant_root(const RootDatum& datum, std::span<const int> nodes);

/// Returns the cover lambda -> mu if (lambda, mu) satisfies one of the five
/// clauses. Throws DomainError for mismatched data or non-dominant input.
std::optional<MinimalDegeneration> classify_pair(const Weight& lambda, const Weight& mu);

/// Every cover below lambda, ordered by height of beta and then by mu
/// (lexicographically decreasing).
std::vector<MinimalDegeneration> enumerate_minimal_degenerations_below(const Weight& lambda);

struct LeviReduction {
  LeviDatum levi;
  Weight lambda;  // lambda_I
  Weight mu;      // mu_I
  MinimalDegeneration reduced;
};

/// Restricts a degeneration to the Levi datum on its support and
/// reclassifies it there; the case must be preserved.
LeviReduction levi_reduce(const MinimalDegeneration& d);

// Brute-force dominance-poset oracle. Independent of the classifier: it only
// uses the root lattice and dominance.

/// All dominant nu <= lambda, by enumerating lambda - nu over the box
/// 0 <= c_i <= floor(root coordinate i of lambda). Sorted by depth, then
/// lexicographically. lambda itself comes first.
std::vector<Weight> dominant_weights_below(const Weight& lambda);

/// Dominant weights covered by lambda, via an all-pairs scan of the poset of
/// dominant weights below lambda.
std::vector<Weight> covers_below(const Weight& lambda, Execution exec = Execution::parallel);

/// Whether mu < lambda with no dominant weight strictly between, by
/// enumerating lambda - nu over the box [0, lambda - mu].
bool brute_force_adjacent(const Weight& lambda, const Weight& mu);

}  // namespace affgr

#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "affgr/integer.hpp"
#include "affgr/linalg.hpp"
#include "affgr/root_datum.hpp"
#include "affgr/type_tables.hpp"
#include "affgr/weight.hpp"

namespace affgr {

/// <lambda, gamma^vee> for a root gamma. Throws DomainError if gamma is not a root.
std::int64_t pairing(const Weight& lambda, const RootVector& gamma);

/// (x|y) with the per-component normalization "long roots have length 2".
Rational inner_product(const Weight& x, const Weight& y);
/// Same form in scaled integer units (shortest root of each component has length 2).
/// Only meaningful when the difference of the arguments lies in the root lattice
/// or when one argument is given in root coordinates.
std::int64_t scaled_inner(const RootDatum& d, const Coeffs& weight, const Coeffs& root);

/// If mu <= lambda in dominance order, returns lambda - mu in simple-root coordinates.
std::optional<RootVector> dominance_leq(const Weight& mu, const Weight& lambda);

/// s_i(w) = w - <w, alpha_i^vee> alpha_i.
Weight reflect(const Weight& w, int i);
/// Unique dominant weight in the Weyl orbit of w.
Weight dominant_conjugate(const Weight& w);
Coeffs dominant_conjugate(const RootDatum& d, Coeffs w);

/// |W| / |W_I| where I = {i : lambda_i = 0}. Throws DomainError if lambda is not dominant.
Integer orbit_size(const Weight& lambda);

/// Order of the parabolic subgroup W_I.
Integer parabolic_order(const RootDatum& d, std::span<const int> nodes);

/// Smith form of the Cartan matrix restricted to `nodes`; presents P/Q of that subsystem.
SmithForm weight_lattice_quotient(const RootDatum& d, std::span<const int> nodes);
SmithForm weight_lattice_quotient(const RootDatum& d);

}  // namespace affgr

#include "affgr/singularity.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "affgr/errors.hpp"

namespace affgr {

namespace {

// Nodes of minimal root length within `nodes`.
std::vector<int> short_nodes(const RootDatum& d, const std::vector<int>& nodes) {
  std::int64_t target = d.scaled_length(nodes.front());
  for (int v : nodes) target = std::min(target, d.scaled_length(v));
  std::vector<int> out;
  for (int v : nodes)
    if (d.scaled_length(v) == target) out.push_back(v);
  return out;
}

ICPolynomial geometric_series(int terms) {
  return ICPolynomial{std::vector<std::int64_t>(static_cast<std::size_t>(terms), 1)};
}

std::int64_t lambda_beta(const MinimalDegeneration& d) { return d.lambda[d.support.front()]; }

}  // namespace

std::string SingularityClass::label() const {
  switch (kind) {
    case Kind::kleinian: return "kleinian_A" + std::to_string(kleinian_m);
    case Kind::minimal: {
      std::string s = minimal_type.label();
      s[0] = static_cast<char>(s[0] - 'A' + 'a');
      return s;
    }
    case Kind::ac: return "ac" + std::to_string(ac_n);
    case Kind::ag2: return "ag2";
    case Kind::cg2: return "cg2";
  }
  return {};
}

std::int64_t ICPolynomial::at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs) s += c;
  return s;
}

std::string ICPolynomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool bare = coeffs[i] == 1 && i > 0;
    if (!bare) out += std::to_string(coeffs[i]);
    if (i == 0) continue;
    out += "q";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::int64_t DecompositionProfile::value(std::int64_t ell) const {
  if (!is_prime(ell)) throw DomainError(std::to_string(ell) + " is not prime");
  return std::count_if(moduli.begin(), moduli.end(), [&](auto n) { return n % ell == 0; });
}

std::vector<std::int64_t> DecompositionProfile::support_primes() const {
  std::set<std::int64_t> primes;
  for (auto n : moduli)
    for (auto p : prime_factors(Integer(n))) primes.insert(p);
  return {primes.begin(), primes.end()};
}

std::vector<std::int64_t> DecompositionProfile::nonzero_primes(std::int64_t bound) const {
  std::vector<std::int64_t> out;
  for (auto p : support_primes())
    if (p <= bound) out.push_back(p);
  return out;
}

SingularityClass classify_singularity(const MinimalDegeneration& d) {
  SingularityClass c;
  switch (d.kind) {
    case StembridgeCase::simple:
      c.kind = SingularityClass::Kind::kleinian;
      c.kleinian_m = static_cast<int>(lambda_beta(d) - 1);
      if (c.kleinian_m < 1) throw ConsistencyError("Kleinian singularity with lambda_beta < 2");
      break;
    case StembridgeCase::short_dominant:
      c.kind = SingularityClass::Kind::minimal;
      c.minimal_type = dual_type(d.support_type);
      break;
    case StembridgeCase::ac:
      c.kind = SingularityClass::Kind::ac;
      c.ac_n = d.support_type.rank;
      break;
    case StembridgeCase::ag2: c.kind = SingularityClass::Kind::ag2; break;
    case StembridgeCase::cg2: c.kind = SingularityClass::Kind::cg2; break;
  }
  return c;
}

int codimension_table_value(const MinimalDegeneration& d) {
  switch (d.kind) {
    case StembridgeCase::simple: return 2;
    case StembridgeCase::short_dominant: return 2 * type_tables(dual_type(d.support_type)).dual_coxeter_number - 2;
    case StembridgeCase::ac: return 2 * d.support_type.rank;
    case StembridgeCase::ag2:
    case StembridgeCase::cg2: return 4;
  }
  return 0;
}

int codimension(const MinimalDegeneration& d) {
  // <alpha_i, rho^vee> = 1 for every simple root, so <beta, rho^vee> = ht(beta).
  const int value = static_cast<int>(2 * d.beta.height());
  const int table = codimension_table_value(d);
  if (value != table)
    throw ConsistencyError("codimension " + std::to_string(value) + " disagrees with the case table value " +
                           std::to_string(table));
  return value;
}

ICPolynomial ic_polynomial(const MinimalDegeneration& d) {
  switch (d.kind) {
    case StembridgeCase::simple:
    case StembridgeCase::cg2: return ICPolynomial{{1}};
    case StembridgeCase::ag2: return ICPolynomial{{1, 1}};
    case StembridgeCase::ac: return geometric_series(d.support_type.rank);
    case StembridgeCase::short_dominant: {
      const auto& datum = d.lambda.datum();
      // t counts the long simple roots of Phi_I^vee, i.e. the short simple
      // roots of Phi_I (every node when Phi_I is simply laced).
      const auto t = short_nodes(datum, d.support).size();
      const auto exps = type_tables(d.support_type).exponents;
      ICPolynomial m;
      for (std::size_t k = 0; k < t; ++k) {
        const auto deg = static_cast<std::size_t>(exps[k] - 1);
        if (m.coeffs.size() <= deg) m.coeffs.resize(deg + 1, 0);
        m.coeffs[deg] += 1;
      }
      return m;
    }
  }
  return {};
}

DecompositionProfile decomposition_profile(const MinimalDegeneration& d) {
  DecompositionProfile p;
  auto keep = [&](std::int64_t n) {
    if (n != 1) p.moduli.push_back(n);
  };
  switch (d.kind) {
    case StembridgeCase::simple: keep(lambda_beta(d)); break;
    case StembridgeCase::short_dominant: {
      const auto& datum = d.lambda.datum();
      for (const auto& n : weight_lattice_quotient(datum, short_nodes(datum, d.support)).nontrivial())
        keep(static_cast<std::int64_t>(n));
      break;
    }
    case StembridgeCase::ac: keep(2 * d.support_type.rank + 1); break;
    case StembridgeCase::ag2: keep(7); break;
    case StembridgeCase::cg2: keep(3); break;
  }
  return p;
}

NonSmoothnessWitness nonsmoothness_certificate(const MinimalDegeneration& d) {
  const auto profile = decomposition_profile(d);
  const auto primes = profile.support_primes();
  if (!primes.empty()) return {NonSmoothnessWitness::Kind::modular, primes.front()};
  if (!ic_polynomial(d).is_one()) return {NonSmoothnessWitness::Kind::rational, std::nullopt};
  throw ConsistencyError("degeneration " + d.lambda.to_string() + " -> " + d.mu.to_string() +
                         " has a vanishing profile and m = 1");
}

SingularityInvariants invariants(const MinimalDegeneration& d) {
  return {classify_singularity(d), ic_polynomial(d), decomposition_profile(d), codimension(d)};
}

std::optional<Obstruction> equivalence_obstruction(const SingularityInvariants& a, const SingularityInvariants& b) {
  if (a.ic != b.ic) return Obstruction{Obstruction::Kind::rational, std::nullopt};
  std::set<std::int64_t> primes;
  for (auto p : a.profile.support_primes()) primes.insert(p);
  for (auto p : b.profile.support_primes()) primes.insert(p);
  for (auto p : primes)
    if (a.profile.value(p) != b.profile.value(p)) return Obstruction{Obstruction::Kind::modular, p};
  return std::nullopt;
}

MinimalDegeneration named_singularity(std::string_view name) {
  auto parse_rank = [&](std::string_view prefix, int min_rank) {
    const auto digits = name.substr(prefix.size());
    int n = 0;
    const auto* end = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(digits.data(), end, n);
    if (digits.empty() || ec != std::errc{} || ptr != end || n < min_rank || n > 64)
      throw ParseError("bad rank in singularity name '" + std::string(name) + "'");
    return n;
  };
  auto build = [](const std::string& type, Coeffs lambda, Coeffs mu) {
    auto datum = build_root_datum(type);
    auto deg = classify_pair(Weight(datum, std::move(lambda)), Weight(datum, std::move(mu)));
    if (!deg) throw ConsistencyError("representative of " + type + " is not a cover");
    return *deg;
  };
  auto a_n = [&](int n) {
    Coeffs lambda(n, 0);
    lambda[0] += 1;
    lambda[n - 1] += 1;
    return build("A" + std::to_string(n), lambda, Coeffs(n, 0));
  };
  auto ac_n = [&](int n) {
    Coeffs lambda(n, 0), mu(n, 0);
    lambda[0] = 1;
    lambda[n - 1] = 1;
    mu[n - 1] = 1;
    return build("B" + std::to_string(n), lambda, mu);
  };

  if (name == "a2") return a_n(2);
  if (name == "ac2") return ac_n(2);
  if (name == "ag2") return build("G2", {1, 1}, {2, 0});
  if (name == "cg2") return build("G2", {0, 1}, {1, 0});
  if (name == "c2") return build("B2", {1, 0}, {0, 0});
  if (name.starts_with("acn:")) return ac_n(parse_rank("acn:", 2));
  if (name.starts_with("an:")) return a_n(parse_rank("an:", 1));
  throw ParseError("unknown singularity name '" + std::string(name) + "'");
}

std::vector<std::int64_t> minimal_orbit_torsion_primes(CartanType type) {
  if (type.letter == 'D' && type.rank == 3) type = {'A', 3};
  switch (type.letter) {
    case 'A': return {};
    case 'B':
    case 'C':
    case 'D':
    case 'F': return {2};
    case 'E': return type.rank == 8 ? std::vector<std::int64_t>{2, 3, 5} : std::vector<std::int64_t>{2, 3};
    case 'G': return {3};
  }
  throw DomainError("unknown type " + type.label());
}

TorsionAudit conjecture_audit(CartanType type) {
  TorsionAudit audit{type, minimal_orbit_torsion_primes(type), type_tables(type).bad_primes, false};
  audit.consistent = std::all_of(audit.torsion.begin(), audit.torsion.end(), [&](auto p) {
    return std::find(audit.bad.begin(), audit.bad.end(), p) != audit.bad.end();
  });
  return audit;
}

}  // namespace affgr

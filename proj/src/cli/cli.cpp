#include "affgr/cli.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "affgr/errors.hpp"
#include "affgr/singularity.hpp"
#include "affgr/weyl_module.hpp"

namespace affgr::cli {

using nlohmann::ordered_json;

namespace {

// --- parsing ---------------------------------------------------------------

struct Raw {
  std::string type, lambda, mu, left, right, monomials, format = "json";
  std::int64_t ell = 0, max_prime = 100;
  int n = 0;
};

struct Spec {
  const char* name;
  const char* help;
  bool type, lambda, mu, left_right, n, ell, max_prime, monomials;
  bool type_required = true;
};

// Which options each command accepts.
const std::vector<Spec>& specs() {
  static const std::vector<Spec> s = {
      {"classify", "Classify a pair of dominant weights", true, true, true, false, false, false, false, false},
      {"degenerations", "List every minimal degeneration below lambda", true, true, false, false, false, false, false,
       false},
      {"profile", "Decomposition-number profile of a minimal degeneration", true, true, true, false, false, false,
       true, false},
      {"ic", "IC stalk polynomial and codimension", true, true, true, false, false, false, false, false},
      {"certify-nonsmooth", "Witness that the singularity is not smooth", true, true, true, false, false, false, false,
       false},
      {"distinguish", "Look for an obstruction to equivalence of two named singularities", false, false, false, true,
       false, false, true, false},
      {"gram", "Gram matrix of the contravariant form on lowering monomials", true, true, false, false, true, false,
       false, true, false},
      {"decomp-ac", "Decomposition number [V(w1+wn) : L(wn)] in type B_n", false, false, false, false, true, true,
       true, false},
      {"linkage", "Strong-linkage bound <lambda + rho, beta^vee> - 1", true, true, true, false, false, false, false,
       false},
      {"torsion-audit", "Torsion primes of the minimal orbit against the bad primes", true, false, false, false, false,
       false, false, false, false},
  };
  return s;
}

std::vector<Monomial> parse_monomials(const std::string& text, int rank) {
  // "1,2;2,1": 1-based simple-root indices, f applied right to left.
  std::vector<Monomial> out;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    Monomial m;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
        throw ParseError("bad monomial index '" + item + "'");
      if (v < 1 || v > rank) throw ParseError("monomial index " + item + " out of range 1.." + std::to_string(rank));
      m.push_back(v - 1);
    }
    out.push_back(std::move(m));
  }
  if (out.empty()) throw ParseError("empty monomial list");
  return out;
}

// --- output helpers --------------------------------------------------------

ordered_json int_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

ordered_json coeffs_json(const Coeffs& c) { return ordered_json(c); }

ordered_json one_based(const std::vector<int>& nodes) {
  ordered_json a = ordered_json::array();
  for (int v : nodes) a.push_back(v + 1);
  return a;
}

ordered_json degeneration_json(const MinimalDegeneration& d) {
  ordered_json j;
  j["lambda"] = coeffs_json(d.lambda.coeffs());
  j["mu"] = coeffs_json(d.mu.coeffs());
  j["beta"] = coeffs_json(d.beta.coeffs);
  j["support"] = one_based(d.support);
  j["support_type"] = d.support_type.label();
  j["case"] = d.case_label();
  j["case_number"] = case_number(d.kind);
  return j;
}

ordered_json profile_primes(const DecompositionProfile& p, std::int64_t bound) {
  ordered_json a = ordered_json::array();
  for (auto ell : p.nonzero_primes(bound)) a.push_back({{"ell", ell}, {"d", p.value(ell)}});
  return a;
}

Weight weight_of(const DatumPtr& d, const std::string& literal) { return parse_weight(d, literal); }

MinimalDegeneration require_cover(const CommandRequest& r) {
  auto d = build_root_datum(*r.type);
  auto lambda = weight_of(d, *r.lambda);
  auto mu = weight_of(d, *r.mu);
  auto deg = classify_pair(lambda, mu);
  if (!deg) throw DomainError("(" + lambda.to_string() + ") -> (" + mu.to_string() + ") is not a minimal degeneration");
  return *deg;
}

ordered_json torsion_json(CartanType t) {
  auto audit = conjecture_audit(t);
  ordered_json j;
  j["type"] = t.label();
  j["torsion"] = audit.torsion;
  j["bad"] = audit.bad;
  j["conjecture_consistent"] = audit.consistent;
  return j;
}

ordered_json named_json(const std::string& name, std::int64_t bound) {
  const auto deg = named_singularity(name);
  const auto inv = invariants(deg);
  ordered_json j;
  j["name"] = name;
  j["singularity"] = inv.cls.label();
  j["type"] = deg.lambda.datum().label();
  j["lambda"] = coeffs_json(deg.lambda.coeffs());
  j["mu"] = coeffs_json(deg.mu.coeffs());
  j["ic"] = inv.ic.coeffs;
  j["modulus_data"] = inv.profile.moduli;
  j["nonzero_primes"] = inv.profile.nonzero_primes(bound);
  return j;
}

// --- commands --------------------------------------------------------------

ordered_json run_classify(const CommandRequest& r) {
  auto d = build_root_datum(*r.type);
  auto lambda = weight_of(d, *r.lambda);
  auto mu = weight_of(d, *r.mu);
  auto deg = classify_pair(lambda, mu);
  ordered_json j;
  j["minimal_degeneration"] = deg.has_value();
  if (deg) {
    auto dj = degeneration_json(*deg);
    for (const auto* key : {"beta", "support", "support_type", "case", "case_number"}) j[key] = dj[key];
  } else {
    j["comparable"] = dominance_leq(mu, lambda).has_value();
  }
  return j;
}

ordered_json run_degenerations(const CommandRequest& r) {
  auto d = build_root_datum(*r.type);
  auto list = enumerate_minimal_degenerations_below(weight_of(d, *r.lambda));
  ordered_json j;
  j["count"] = list.size();
  j["degenerations"] = ordered_json::array();
  for (const auto& deg : list) {
    auto dj = degeneration_json(deg);
    dj.erase("lambda");
    j["degenerations"].push_back(std::move(dj));
  }
  return j;
}

ordered_json run_profile(const CommandRequest& r) {
  auto deg = require_cover(r);
  auto p = decomposition_profile(deg);
  ordered_json j;
  j["case"] = deg.case_label();
  j["singularity"] = classify_singularity(deg).label();
  j["modulus_data"] = p.moduli;
  j["nonzero_primes_upto"] = r.max_prime;
  j["nonzero_primes"] = profile_primes(p, r.max_prime);
  return j;
}

ordered_json run_ic(const CommandRequest& r) {
  auto deg = require_cover(r);
  auto m = ic_polynomial(deg);
  ordered_json j;
  j["case"] = deg.case_label();
  j["singularity"] = classify_singularity(deg).label();
  j["codimension"] = codimension(deg);
  j["coefficients"] = m.coeffs;
  j["polynomial"] = m.to_string();
  return j;
}

ordered_json run_certify(const CommandRequest& r) {
  auto deg = require_cover(r);
  auto w = nonsmoothness_certificate(deg);
  ordered_json j;
  j["case"] = deg.case_label();
  j["witness_kind"] = w.kind == NonSmoothnessWitness::Kind::modular ? "modular" : "rational";
  if (w.prime) j["prime"] = *w.prime;
  return j;
}

ordered_json run_distinguish(const CommandRequest& r) {
  ordered_json j;
  j["left"] = named_json(*r.left, r.max_prime);
  j["right"] = named_json(*r.right, r.max_prime);
  auto ob = equivalence_obstruction(invariants(named_singularity(*r.left)), invariants(named_singularity(*r.right)));
  if (!ob) {
    j["obstruction_kind"] = "none";
  } else {
    j["obstruction_kind"] = ob->kind == Obstruction::Kind::modular ? "modular" : "rational";
    if (ob->prime) j["prime"] = *ob->prime;
  }
  return j;
}

ordered_json run_gram(const CommandRequest& r) {
  DatumPtr d;
  Weight lambda = [&] {
    if (r.n) {
      if (*r.n < 2) throw DomainError("the ac configuration needs n >= 2");
      d = build_root_datum("B" + std::to_string(*r.n));
      Coeffs c(*r.n, 0);
      c.front() = 1;
      c.back() = 1;
      return Weight(d, c);
    }
    d = build_root_datum(*r.type);
    return weight_of(d, *r.lambda);
  }();
  const auto monomials = r.monomials ? parse_monomials(*r.monomials, d->rank()) : ac_basis_monomials(*r.n);
  const auto g = gram_matrix(lambda, monomials);
  ordered_json j;
  j["lambda"] = coeffs_json(g.lambda.coeffs());
  j["mu"] = coeffs_json(g.mu.coeffs());
  j["monomials"] = ordered_json::array();
  for (const auto& m : g.monomials) j["monomials"].push_back(one_based(m));
  j["matrix"] = ordered_json::array();
  for (std::size_t a = 0; a < g.entries.rows(); ++a) {
    ordered_json row = ordered_json::array();
    for (std::size_t b = 0; b < g.entries.cols(); ++b) row.push_back(int_json(g.entries(a, b)));
    j["matrix"].push_back(std::move(row));
  }
  ordered_json divs = ordered_json::array();
  for (const auto& v : elementary_divisors(g).divisors) divs.push_back(int_json(v));
  j["elementary_divisors"] = std::move(divs);
  j["determinant"] = int_json(determinant(g.entries));
  return j;
}

ordered_json run_decomp_ac(const CommandRequest& r) {
  if (*r.n < 2) throw DomainError("decomp-ac needs n >= 2");
  ordered_json j;
  j["n"] = *r.n;
  if (r.ell) {
    j["ell"] = *r.ell;
    j["decomposition_number"] = decomposition_number_ac(*r.n, *r.ell);
    return j;
  }
  j["nonzero_primes_upto"] = r.max_prime;
  ordered_json a = ordered_json::array();
  for (auto ell : primes_up_to(r.max_prime))
    if (auto v = decomposition_number_ac(*r.n, ell); v != 0) a.push_back({{"ell", ell}, {"d", v}});
  j["nonzero_primes"] = std::move(a);
  return j;
}

ordered_json run_linkage(const CommandRequest& r) {
  auto d = build_root_datum(*r.type);
  auto lambda = weight_of(d, *r.lambda);
  auto mu = weight_of(d, *r.mu);
  const auto bound = linkage_bound(lambda, mu);
  ordered_json j;
  j["beta"] = coeffs_json(dominance_leq(mu, lambda)->coeffs);
  j["linkage_bound"] = bound;
  j["prime_factors"] = prime_factors(Integer(bound));
  return j;
}

ordered_json run_torsion(const CommandRequest& r) {
  if (r.type) return torsion_json(parse_cartan_type(*r.type));
  ordered_json j;
  j["audits"] = ordered_json::array();
  bool all = true;
  std::vector<CartanType> types;
  for (int n = 1; n <= 8; ++n) types.push_back({'A', n});
  for (int n = 2; n <= 8; ++n) types.push_back({'B', n});
  for (int n = 3; n <= 8; ++n) types.push_back({'C', n});
  for (int n = 4; n <= 8; ++n) types.push_back({'D', n});
  for (int n = 6; n <= 8; ++n) types.push_back({'E', n});
  types.push_back({'F', 4});
  types.push_back({'G', 2});
  for (auto t : types) {
    auto tj = torsion_json(t);
    all = all && tj["conjecture_consistent"].get<bool>();
    j["audits"].push_back(std::move(tj));
  }
  j["conjecture_consistent"] = all;
  return j;
}

void flatten(const ordered_json& node, const std::string& path, std::ostream& out) {
  const bool scalar_array =
      node.is_array() && std::all_of(node.begin(), node.end(), [](const auto& e) { return e.is_primitive(); });
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (node.is_array() && !scalar_array) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : specs()) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

std::optional<CommandRequest> parse_request(const std::vector<std::string>& args, std::ostream& help) {
  CLI::App app{"Minimal degenerations of affine Grassmannian Schubert varieties", "affgr"};
  app.require_subcommand(1, 1);
  Raw raw;
  struct Bound {
    const Spec* spec;
    CLI::App* app;
    std::vector<std::pair<std::string, CLI::Option*>> opts;
  };
  std::vector<Bound> bound;
  for (const auto& s : specs()) {
    auto* sub = app.add_subcommand(s.name, s.help);
    Bound b{&s, sub, {}};
    auto add = [&](const char* flag, auto& target, const char* desc, bool required) {
      auto* o = sub->add_option(flag, target, desc);
      if (required) o->required();
      b.opts.emplace_back(flag, o);
    };
    if (s.type) add("--type", raw.type, "Root datum, e.g. B5 or A2xA1", s.type_required);
    if (s.lambda) add("--lambda", raw.lambda, "Weight literal in fundamental-weight coordinates", !s.n);
    if (s.mu) add("--mu", raw.mu, "Weight literal in fundamental-weight coordinates", true);
    if (s.left_right) {
      add("--left", raw.left, "a2, ac2, ag2, c2, cg2, an:<n> or acn:<n>", true);
      add("--right", raw.right, "a2, ac2, ag2, c2, cg2, an:<n> or acn:<n>", true);
    }
    if (s.n) add("--n", raw.n, "Rank n of B_n", std::string(s.name) == "decomp-ac");
    if (s.ell) add("--ell", raw.ell, "Prime characteristic", false);
    if (s.max_prime) add("--max-prime", raw.max_prime, "Largest prime to report (default 100)", false);
    if (s.monomials) add("--monomials", raw.monomials, "e.g. 1,2;2,1 (1-based)", false);
    sub->add_option("--format", raw.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    bound.push_back(std::move(b));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, help, help);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }

  CommandRequest req;
  for (const auto& b : bound) {
    if (!b.app->parsed()) continue;
    req.command = b.spec->name;
    for (const auto& [flag, opt] : b.opts) {
      if (opt->count() == 0) continue;
      if (flag == "--type") req.type = raw.type;
      if (flag == "--lambda") req.lambda = raw.lambda;
      if (flag == "--mu") req.mu = raw.mu;
      if (flag == "--left") req.left = raw.left;
      if (flag == "--right") req.right = raw.right;
      if (flag == "--n") req.n = raw.n;
      if (flag == "--ell") req.ell = raw.ell;
      if (flag == "--monomials") req.monomials = raw.monomials;
    }
  }
  req.format = raw.format;
  req.max_prime = raw.max_prime;

  // Cross-option validation.
  if (req.max_prime < 0) throw ParseError("--max-prime must be non-negative");
  if (req.ell && !is_prime(*req.ell)) throw ParseError("--ell " + std::to_string(*req.ell) + " is not prime");
  if (req.command == "gram") {
    const bool ac = req.n.has_value();
    const bool general = req.type && req.lambda && req.monomials;
    if (ac == general || (ac && (req.type || req.lambda)))
      throw ParseError("gram takes either --n [--monomials] or --type, --lambda and --monomials");
  }
  if (req.command == "torsion-audit") {
    if (req.type) parse_cartan_type(*req.type);
  } else if (req.type) {
    auto d = build_root_datum(*req.type);
    if (req.lambda) parse_weight(d, *req.lambda);
    if (req.mu) parse_weight(d, *req.mu);
    if (req.monomials) parse_monomials(*req.monomials, d->rank());
  } else if (req.monomials && req.n) {
    parse_monomials(*req.monomials, std::max(*req.n, 1));
  }
  if (req.left) named_singularity(*req.left);
  if (req.right) named_singularity(*req.right);
  return req;
}

ordered_json run(const CommandRequest& r) {
  ordered_json input;
  if (r.type) input["type"] = *r.type;
  if (r.lambda) input["lambda"] = *r.lambda;
  if (r.mu) input["mu"] = *r.mu;
  if (r.left) input["left"] = *r.left;
  if (r.right) input["right"] = *r.right;
  if (r.n) input["n"] = *r.n;
  if (r.ell) input["ell"] = *r.ell;
  if (r.monomials) input["monomials"] = *r.monomials;
  if (r.command == "profile" || r.command == "distinguish" || (r.command == "decomp-ac" && !r.ell))
    input["max_prime"] = r.max_prime;

  ordered_json result;
  if (r.command == "classify") result = run_classify(r);
  else if (r.command == "degenerations") result = run_degenerations(r);
  else if (r.command == "profile") result = run_profile(r);
  else if (r.command == "ic") result = run_ic(r);
  else if (r.command == "certify-nonsmooth") result = run_certify(r);
  else if (r.command == "distinguish") result = run_distinguish(r);
  else if (r.command == "gram") result = run_gram(r);
  else if (r.command == "decomp-ac") result = run_decomp_ac(r);
  else if (r.command == "linkage") result = run_linkage(r);
  else if (r.command == "torsion-audit") result = run_torsion(r);
  else throw ParseError("unknown command '" + r.command + "'");

  ordered_json doc;
  doc["command"] = r.command;
  doc["input"] = input.is_null() ? ordered_json::object() : input;
  doc["result"] = std::move(result);
  return doc;
}

std::string render_table(const ordered_json& doc) {
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto fail = [&](const std::string& message, int code) {
    err << ordered_json{{"error", message}}.dump() << "\n";
    return code;
  };
  try {
    auto req = parse_request(args, out);
    if (!req) return 0;
    const auto doc = run(*req);
    if (req->format == "table")
      out << render_table(doc);
    else
      out << doc.dump(2) << "\n";
    return 0;
  } catch (const ParseError& e) {
    return fail(e.what(), 2);
  } catch (const DomainError& e) {
    return fail(e.what(), 3);
  } catch (const ConsistencyError& e) {
    return fail(std::string("internal consistency failure: ") + e.what(), 3);
  } catch (const std::exception& e) {
    return fail(e.what(), 3);
  }
}

}  // namespace affgr::cli

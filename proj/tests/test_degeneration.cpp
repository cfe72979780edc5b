#include <algorithm>
#include <set>

#include "affgr/degeneration.hpp"
#include "affgr/errors.hpp"
#include "doctest.h"

using namespace affgr;

namespace {

Weight w(const DatumPtr& d, Coeffs c) { return Weight(d, std::move(c)); }

// All dominant weights with every coefficient <= bound.
std::vector<Weight> box_weights(const DatumPtr& d, std::int64_t bound) {
  std::vector<Weight> out;
  Coeffs c(d->rank(), 0);
  for (;;) {
    out.emplace_back(d, c);
    std::size_t i = 0;
    while (i < c.size() && ++c[i] > bound) c[i++] = 0;
    if (i == c.size()) return out;
  }
}

Coeffs fundamental_sum(int n, std::initializer_list<int> ones_one_based) {
  Coeffs c(n, 0);
  for (int i : ones_one_based) c[i - 1] += 1;
  return c;
}

}  // namespace

TEST_CASE("support: coordinates, connectivity and errors") {
  for (int n = 2; n <= 6; ++n) {
    auto b = build_root_datum("B" + std::to_string(n));
    auto s = support(*b, RootVector{Coeffs(n, 1)});
    CHECK(s.nodes.size() == static_cast<std::size_t>(n));
    CHECK(s.connected);
  }
  auto a4 = build_root_datum("A4");
  auto s = support(*a4, RootVector{{0, 0, 1, 0}});
  CHECK(s.nodes == std::vector<int>{2});
  CHECK(s.connected);

  auto dis = support(*a4, RootVector{{1, 0, 1, 0}});
  CHECK(dis.nodes == std::vector<int>{0, 2});
  CHECK_FALSE(dis.connected);
  // alpha1 + alpha3 is not a cover for any dominant pair.
  for (const auto& lambda : box_weights(a4, 2)) {
    Weight mu = lambda - RootVector{{1, 0, 1, 0}};
    if (!mu.dominant()) continue;
    CHECK_FALSE(classify_pair(lambda, mu).has_value());
    CHECK_FALSE(brute_force_adjacent(lambda, mu));
  }

  CHECK_THROWS_AS(support(*a4, RootVector{{0, 0, 0, 0}}), DomainError);
  CHECK_THROWS_AS(support(*a4, RootVector{{1, -1, 0, 0}}), DomainError);
}

TEST_CASE("restrict_to_levi projects coordinates onto the Levi datum") {
  auto a3 = build_root_datum("A3");
  const std::vector<int> one{0};
  Weight r = restrict_to_levi(w(a3, {2, 0, 1}), one);
  CHECK(r.datum().label() == "A1");
  CHECK(r.coeffs() == Coeffs{2});

  auto b4 = build_root_datum("B4");
  const std::vector<int> full{0, 1, 2, 3};
  Weight lam = w(b4, fundamental_sum(4, {1, 4}));
  CHECK(restrict_to_levi(lam, full).coeffs() == lam.coeffs());
  CHECK(restrict_to_levi(lam, full).datum() == lam.datum());

  auto levi = levi_datum(*b4, std::vector<int>{1, 2, 3});
  CHECK(levi.datum->label() == "B3");
  CHECK(levi.nodes == std::vector<int>{1, 2, 3});

  auto g2 = build_root_datum("G2");
  CHECK(restrict_to_levi(w(g2, {1, 1}), std::vector<int>{0, 1}).coeffs() == Coeffs{1, 1});
}

TEST_CASE("short_dominant_root") {
  for (int n = 1; n <= 6; ++n) {
    auto a = build_root_datum("A" + std::to_string(n));
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    CHECK(short_dominant_root(*a, all).coeffs == Coeffs(n, 1));
  }
  for (int n = 2; n <= 6; ++n) {
    auto b = build_root_datum("B" + std::to_string(n));
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    auto beta = short_dominant_root(*b, all);
    CHECK(beta.coeffs == Coeffs(n, 1));
    // The short dominant root of B_n is the first fundamental weight.
    CHECK(b->root_to_weight(beta.coeffs) == fundamental_sum(n, {1}));
  }
  auto g2 = build_root_datum("G2");
  CHECK(short_dominant_root(*g2, std::vector<int>{0, 1}).coeffs == Coeffs{2, 1});

  // Independent check: among dominant roots of Phi_I, minimal squared length.
  for (const auto* label : {"C3", "F4", "D4", "E6"}) {
    auto d = build_root_datum(label);
    std::vector<int> all(d->rank());
    for (int i = 0; i < d->rank(); ++i) all[i] = i;
    auto beta = short_dominant_root(*d, all);
    Weight as_weight(d, d->root_to_weight(beta.coeffs));
    CHECK(as_weight.dominant());
    for (const auto& g : d->positive_roots()) {
      Weight gw(d, d->root_to_weight(g.coeffs));
      if (gw.dominant()) CHECK(inner_product(as_weight, as_weight) <= inner_product(gw, gw));
    }
  }

  auto a4 = build_root_datum("A4");
  CHECK_THROWS_AS(short_dominant_root(*a4, std::vector<int>{0, 2}), DomainError);
  CHECK_THROWS_AS(short_dominant_root(*a4, std::vector<int>{}), DomainError);
}

TEST_CASE("classify_pair: worked examples") {
  for (int n = 2; n <= 8; ++n) {
    auto b = build_root_datum("B" + std::to_string(n));
    auto deg = classify_pair(w(b, fundamental_sum(n, {1, n})), w(b, fundamental_sum(n, {n})));
    REQUIRE(deg.has_value());
    CHECK(deg->kind == StembridgeCase::ac);
    CHECK(deg->support_type == CartanType{'B', n});
    CHECK(deg->case_label() == "ac_" + std::to_string(n));
    CHECK(deg->beta.coeffs == Coeffs(n, 1));
  }

  auto g2 = build_root_datum("G2");
  auto cg = classify_pair(w(g2, {0, 1}), w(g2, {1, 0}));
  REQUIRE(cg.has_value());
  CHECK(cg->kind == StembridgeCase::cg2);
  CHECK(cg->beta.coeffs == Coeffs{1, 1});

  auto ag = classify_pair(w(g2, {1, 1}), w(g2, {2, 0}));
  REQUIRE(ag.has_value());
  CHECK(ag->kind == StembridgeCase::ag2);

  auto a1 = build_root_datum("A1");
  auto simple = classify_pair(w(a1, {3}), w(a1, {1}));
  REQUIRE(simple.has_value());
  CHECK(simple->kind == StembridgeCase::simple);
  CHECK(simple->lambda[0] == 3);
  CHECK(brute_force_adjacent(w(a1, {3}), w(a1, {1})));
  CHECK_FALSE(classify_pair(w(a1, {3}), w(a1, {3})).has_value());
  CHECK_FALSE(classify_pair(w(a1, {1}), w(a1, {3})).has_value());
  CHECK_FALSE(classify_pair(w(a1, {4}), w(a1, {0})).has_value());

  auto a2 = build_root_datum("A2");
  CHECK_THROWS_AS(classify_pair(w(a2, {1, 0}), w(g2, {1, 0})), DomainError);
  CHECK_THROWS_AS(classify_pair(w(a2, {-1, 2}), w(a2, {0, 0})), DomainError);
  CHECK_THROWS_AS(classify_pair(w(a2, {1, 1}), w(a2, {2, -1})), DomainError);
}

TEST_CASE("enumerate_minimal_degenerations_below: worked examples") {
  auto g2 = build_root_datum("G2");
  auto below_w2 = enumerate_minimal_degenerations_below(w(g2, {0, 1}));
  REQUIRE(below_w2.size() == 1);
  CHECK(below_w2[0].mu.coeffs() == Coeffs{1, 0});
  CHECK(below_w2[0].kind == StembridgeCase::cg2);

  auto below_w1 = enumerate_minimal_degenerations_below(w(g2, {1, 0}));
  REQUIRE(below_w1.size() == 1);
  CHECK(below_w1[0].mu.is_zero());
  CHECK(below_w1[0].kind == StembridgeCase::short_dominant);
  CHECK(below_w1[0].beta.coeffs == Coeffs{2, 1});

  for (const auto* label : {"A3", "B2", "G2", "E6"}) {
    auto d = build_root_datum(label);
    CHECK(enumerate_minimal_degenerations_below(Weight::zero(d)).empty());
  }
  CHECK_THROWS_AS(enumerate_minimal_degenerations_below(w(g2, {-1, 1})), DomainError);
}

TEST_CASE("levi_reduce keeps the case") {
  auto b5 = build_root_datum("B5");
  // beta = alpha3: lambda_3 = 2, mu_3 = 0.
  Weight lam = w(b5, {0, 1, 2, 0, 0});
  Weight mu = lam - RootVector{{0, 0, 1, 0, 0}};
  auto deg = classify_pair(lam, mu);
  REQUIRE(deg.has_value());
  CHECK(deg->kind == StembridgeCase::simple);
  auto red = levi_reduce(*deg);
  CHECK(red.levi.datum->label() == "A1");
  CHECK(red.lambda.coeffs() == Coeffs{2});
  CHECK(red.mu.coeffs() == Coeffs{0});
  CHECK(red.reduced.kind == StembridgeCase::simple);

  // Full support: identity reduction.
  auto b3 = build_root_datum("B3");
  auto full = classify_pair(w(b3, {1, 0, 1}), w(b3, {0, 0, 1}));
  REQUIRE(full.has_value());
  auto same = levi_reduce(*full);
  CHECK(same.lambda.coeffs() == full->lambda.coeffs());
  CHECK(same.mu.coeffs() == full->mu.coeffs());
  CHECK(*same.levi.datum == *b3);

  // B4 with beta on {2,3,4}: the Levi is B3 and the pair is ac_3 there.
  auto b4 = build_root_datum("B4");
  auto ac3 = classify_pair(w(b4, {1, 1, 0, 1}), w(b4, {2, 0, 0, 1}));
  REQUIRE(ac3.has_value());
  CHECK(ac3->kind == StembridgeCase::ac);
  CHECK(ac3->support == std::vector<int>{1, 2, 3});
  auto r3 = levi_reduce(*ac3);
  CHECK(r3.levi.datum->label() == "B3");
  CHECK(r3.reduced.kind == StembridgeCase::ac);
  CHECK(r3.reduced.case_label() == "ac_3");
}

TEST_CASE("cover_scan: serial and parallel kernels agree") {
  for (const auto* label : {"A3", "B3", "C3", "G2", "F4"}) {
    auto d = build_root_datum(label);
    for (const auto& lambda : box_weights(d, 2)) {
      auto serial = covers_below(lambda, Execution::serial);
      auto parallel = covers_below(lambda, Execution::parallel);
      CHECK(serial == parallel);
    }
  }
}

TEST_CASE("dominant_weights_below: lambda first, all dominant, all comparable") {
  auto b3 = build_root_datum("B3");
  for (const auto& lambda : box_weights(b3, 2)) {
    auto below = dominant_weights_below(lambda);
    REQUIRE_FALSE(below.empty());
    CHECK(below.front() == lambda);
    std::set<Coeffs> seen;
    for (const auto& nu : below) {
      CHECK(nu.dominant());
      CHECK(dominance_leq(nu, lambda).has_value());
      CHECK(seen.insert(nu.coeffs()).second);
    }
  }
  auto a1 = build_root_datum("A1");
  auto chain = dominant_weights_below(w(a1, {5}));
  std::vector<Coeffs> got;
  for (const auto& nu : chain) got.push_back(nu.coeffs());
  CHECK(got == std::vector<Coeffs>{{5}, {3}, {1}});
}

TEST_CASE("classifier agrees with the dominance-poset oracle") {
  for (const auto* label : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(label);
    auto d = build_root_datum(label);
    const auto lambdas = box_weights(d, 2);
    std::size_t disagreements = 0, covers = 0;
    for (const auto& lambda : lambdas) {
      auto below = dominant_weights_below(lambda);
      auto cov = covers_below(lambda);
      std::set<Coeffs> oracle;
      for (const auto& nu : cov) oracle.insert(nu.coeffs());
      for (const auto& mu : below) {
        const bool adjacent = oracle.count(mu.coeffs()) > 0;
        auto deg = classify_pair(lambda, mu);
        if (deg.has_value() != adjacent) ++disagreements;
        if (deg) {
          ++covers;
          CHECK(support(*d, deg->beta).connected);
          CHECK(deg->support == support(*d, deg->beta).nodes);
        }
      }
      // Incomparable or reversed pairs inside the coefficient box.
      for (const auto& mu : lambdas)
        if (!dominance_leq(mu, lambda) && classify_pair(lambda, mu)) ++disagreements;

      std::set<Coeffs> enumerated;
      for (const auto& deg : enumerate_minimal_degenerations_below(lambda)) enumerated.insert(deg.mu.coeffs());
      CHECK(enumerated == oracle);
    }
    CHECK(disagreements == 0);
    CHECK(covers > 0);
  }
}

TEST_CASE("brute_force_adjacent matches the cover scan on small types") {
  for (const auto* label : {"A2", "B2", "C2", "G2", "A3"}) {
    auto d = build_root_datum(label);
    for (const auto& lambda : box_weights(d, 2)) {
      std::set<Coeffs> cov;
      for (const auto& nu : covers_below(lambda)) cov.insert(nu.coeffs());
      for (const auto& mu : dominant_weights_below(lambda))
        CHECK(brute_force_adjacent(lambda, mu) == (cov.count(mu.coeffs()) > 0));
    }
  }
}

TEST_CASE("enumeration order is canonical") {
  auto f4 = build_root_datum("F4");
  auto list = enumerate_minimal_degenerations_below(w(f4, {1, 1, 1, 1}));
  REQUIRE(list.size() > 1);
  for (std::size_t i = 1; i < list.size(); ++i) {
    const auto& a = list[i - 1];
    const auto& b = list[i];
    CHECK((a.beta.height() < b.beta.height() ||
           (a.beta.height() == b.beta.height() && a.mu.coeffs() > b.mu.coeffs())));
  }
  CHECK(case_number(StembridgeCase::simple) == 1);
  CHECK(case_number(StembridgeCase::cg2) == 5);
}

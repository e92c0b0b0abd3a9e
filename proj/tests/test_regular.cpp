#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braids/regular.hpp"

#include <random>

using namespace braids;

namespace {

BraidWord random_word(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<int> letters;
  for (int i = 0; i < len; ++i) letters.push_back(sgn(rng) ? idx(rng) : -idx(rng));
  return BraidWord(n, std::move(letters));
}

TubularDecomposition random_decomposition(std::mt19937_64& rng, int max_n) {
  while (true) {
    int n = 4 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 3));
    std::vector<std::pair<int, int>> intervals;
    int at = 1;
    while (at + 1 <= n) {
      if (rng() % 2) {
        int len = 2 + static_cast<int>(rng() % 2);
        if (at + len - 1 > n || len > n - 1) break;
        intervals.emplace_back(at, at + len - 1);
        at += len + 1;
      } else {
        ++at;
      }
    }
    if (intervals.empty()) continue;
    CurveSystem c = make_curves(n, intervals);
    auto strands = tubular_strands_of(c);
    int m = static_cast<int>(strands.size());
    if (m < 2) continue;
    for (int attempt = 0; attempt < 50; ++attempt) {
      BraidWord tub = random_word(rng, m, 1 + static_cast<int>(rng() % 4));
      Permutation motion = motion_permutation(tub);
      bool ok = true;
      for (int u = 1; u <= m; ++u) {
        auto& src = strands[static_cast<size_t>(u - 1)];
        auto& dst = strands[static_cast<size_t>(motion.image_one_based(u) - 1)];
        if (src.is_circle != dst.is_circle || src.size != dst.size) ok = false;
      }
      if (!ok) continue;
      std::vector<BraidWord> interiors;
      for (const auto& s : strands)
        if (s.is_circle) interiors.push_back(random_word(rng, s.size, static_cast<int>(rng() % 5)));
      return make_decomposition(n, c, tub, interiors);
    }
  }
}

}  // namespace

TEST_CASE("transfusion moves every interior to the last tube") {
  // one orbit of length 2 with interiors (x, y): mu has (xy, y), the
  // conjugated interiors are (trivial, xy)
  CurveSystem c = make_curves(4, {{1, 2}, {3, 4}});
  BraidWord x(2, {1});
  BraidWord y(2, {1, 1});
  TubularDecomposition d = make_decomposition(4, c, BraidWord(2, {1}), {x, y});
  TubularDecomposition mu = mu_element(d);
  CHECK(equals(mu.interior_at(1), multiply(x, y)));
  CHECK(equals(mu.interior_at(2), y));
  TubularDecomposition prime =
      dec_product(dec_inverse(mu), dec_product(d, mu));
  CHECK(equals(prime.interior_at(1), BraidWord(2)));
  CHECK(equals(prime.interior_at(2), multiply(x, y)));

  // trivial interiors give a trivial transfusion element
  TubularDecomposition e = make_decomposition(4, c, BraidWord(2, {1}), {BraidWord(2), BraidWord(2)});
  CHECK(embed(mu_element(e)).is_identity_word());
}

TEST_CASE("nu replaces last-tube interiors by canonical representatives") {
  CurveSystem c = make_curves(6, {{1, 3}, {4, 6}});
  // two orbits of length one whose interiors are conjugate but unequal
  BraidWord x(3, {-2, 1, 2});
  BraidWord y(3, {1});
  TubularDecomposition d = make_decomposition(6, c, BraidWord(2), {x, y});
  auto nu = nu_element(d);
  REQUIRE(nu.has_value());
  REQUIRE(nu->kappa.size() == 2);
  CHECK(normal_form(nu->kappa[0]) == normal_form(nu->kappa[1]));
  TubularDecomposition fixed =
      dec_product(dec_inverse(nu->nu), dec_product(d, nu->nu));
  CHECK(equals(fixed.interior_at(1), nu->kappa[0]));
  CHECK(equals(fixed.interior_at(2), nu->kappa[1]));
  CHECK(is_regular_form(fixed) == Check::Yes);

  // all trivial interiors: nu is the identity
  TubularDecomposition triv = make_decomposition(6, c, BraidWord(2), {BraidWord(3), BraidWord(3)});
  auto nu2 = nu_element(triv);
  REQUIRE(nu2.has_value());
  CHECK(embed(nu2->nu).is_identity_word());

  // precondition: a nontrivial interior away from the last tube
  CurveSystem c2 = make_curves(4, {{1, 2}, {3, 4}});
  TubularDecomposition bad =
      make_decomposition(4, c2, BraidWord(2, {1}), {BraidWord(2, {1}), BraidWord(2)});
  CHECK_THROWS(nu_element(bad));
}

TEST_CASE("budget exhaustion reports unknown") {
  CurveSystem c = make_curves(8, {{1, 4}, {5, 8}});
  BraidWord x(4, {1, -2, 3, 1, -2});
  TubularDecomposition d = make_decomposition(8, c, BraidWord(2), {x, BraidWord(4)});
  CHECK(!to_regular_form(d, 1).has_value());
  auto full = to_regular_form(d, 1000000);
  REQUIRE(full.has_value());
  CHECK(is_regular_form(full->regular, 1000000) == Check::Yes);
}

TEST_CASE("regular forms of the figure example") {
  CurveSystem c = make_curves(4, {{1, 2}, {3, 4}});
  TubularDecomposition d =
      make_decomposition(4, c, BraidWord(2, {1}), {BraidWord(2, {1}), BraidWord(2)});
  auto r = to_regular_form(d);
  REQUIRE(r.has_value());
  REQUIRE(r->kappa.size() == 1);  // single orbit of length 2
  CHECK(equals(r->kappa[0], BraidWord(2, {1})));
  CHECK(is_regular_form(r->regular) == Check::Yes);
  CHECK(equals(multiply(multiply(inverse(r->conjugator), embed(d)), r->conjugator),
               embed(r->regular)));
}

TEST_CASE("regular form contract on random decompositions") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 25; ++trial) {
    TubularDecomposition d = random_decomposition(rng, 9);
    auto r = to_regular_form(d, 200000);
    REQUIRE(r.has_value());
    CHECK(is_regular_form(r->regular, 200000) == Check::Yes);
    CHECK(equals(multiply(multiply(inverse(r->conjugator), embed(d)), r->conjugator),
                 embed(r->regular)));
    // each kappa is conjugate to its orbit's interior product
    OrbitStructure orb = orbits(d);
    for (size_t i = 0; i < orb.orbits.size(); ++i) {
      BraidWord prod = orbit_interior_product(d, orb.orbits[i]);
      ConjugacyResult cr = conjugacy_test(r->kappa[i], prod, 200000);
      CHECK(cr.status == ConjugacyStatus::Conjugate);
      CHECK(cr.certificate->verified);
    }
    // determinism
    auto r2 = to_regular_form(d, 200000);
    REQUIRE(r2.has_value());
    CHECK(r2->regular == r->regular);
    CHECK(r2->conjugator == r->conjugator);
  }
}

TEST_CASE("regular form detection") {
  CurveSystem c = make_curves(4, {{1, 2}, {3, 4}});
  // nontrivial interior away from the last tube of the orbit
  TubularDecomposition bad =
      make_decomposition(4, c, BraidWord(2, {1}), {BraidWord(2, {1}), BraidWord(2, {1})});
  CHECK(is_regular_form(bad) == Check::No);

  // equal representatives on two orbits are allowed
  TubularDecomposition equal_reps = make_decomposition(
      4, c, BraidWord(2), {BraidWord(2, {1}), BraidWord(2, {1})});
  CHECK(is_regular_form(equal_reps) == Check::Yes);

  CurveSystem c6 = make_curves(6, {{1, 3}, {4, 6}});
  // sigma2^-1 sigma1 sigma2 vs sigma1: conjugate, not equal
  TubularDecomposition bad3 = make_decomposition(
      6, c6, BraidWord(2), {BraidWord(3, {-2, 1, 2}), BraidWord(3, {1})});
  CHECK(is_regular_form(bad3) == Check::No);
  // sigma1 vs sigma1^-1: not conjugate, regular
  TubularDecomposition good = make_decomposition(
      6, c6, BraidWord(2), {BraidWord(3, {1}), BraidWord(3, {-1})});
  CHECK(is_regular_form(good) == Check::Yes);
}

TEST_CASE("orbit swap elements") {
  // S_1 = (sigma1 delta^2)^2 in B_4 commutes with delta^2 and swaps the
  // point orbits {1,3} and {2,4}
  BraidWord s1 = orbit_swap_element(StandardElement::Delta, 2, 2, 1, 4);
  BraidWord d2 = power(standard_element(StandardElement::Delta, 4), 2);
  CHECK(equals(multiply(s1, d2), multiply(d2, s1)));
  Permutation mo = motion_permutation(s1);
  for (int u : {1, 3}) {
    int v = mo.image_one_based(u);
    CHECK((v == 2 || v == 4));
  }
  for (int u : {2, 4}) {
    int v = mo.image_one_based(u);
    CHECK((v == 1 || v == 3));
  }

  // gamma^2 in B_5 has the fixed orbit {1} plus {2,4} and {3,5}
  BraidWord t2 = orbit_swap_element(StandardElement::Gamma, 2, 2, 2, 5);
  BraidWord g = power(standard_element(StandardElement::Gamma, 5), 2);
  CHECK(equals(multiply(t2, g), multiply(g, t2)));
  Permutation mg = motion_permutation(t2);
  for (int u : {2, 4}) {
    int v = mg.image_one_based(u);
    CHECK((v == 3 || v == 5));
  }
  CHECK(mg.image_one_based(1) == 1);

  CHECK_THROWS(orbit_swap_element(StandardElement::Delta, 2, 3, 1, 4));  // wrong r
  CHECK_THROWS(orbit_swap_element(StandardElement::Delta, 2, 2, 2, 4));  // bad index
  CHECK_THROWS(orbit_swap_element(StandardElement::Gamma, 2, 1, 2, 3));  // central gamma power
  CHECK_THROWS(orbit_swap_element(StandardElement::Gamma, 1, 2, 2, 3));  // no second movable orbit
}

TEST_CASE("swap elements commute and permute for many parameters") {
  for (int m = 3; m <= 7; ++m) {
    for (long long s = 1; s <= 4; ++s) {
      long long g = std::gcd<long long>(m, s);
      int r = static_cast<int>(m / g);
      BraidWord ds = power(standard_element(StandardElement::Delta, m), s);
      for (int i = 1; i < static_cast<int>(g); ++i) {
        BraidWord w = orbit_swap_element(StandardElement::Delta, s, r, i, m);
        CHECK(equals(multiply(w, ds), multiply(ds, w)));
      }
      long long g2 = std::gcd<long long>(m - 1, s);
      int r2 = static_cast<int>((m - 1) / g2);
      if (r2 > 1) {
        BraidWord gs = power(standard_element(StandardElement::Gamma, m), s);
        for (int i = 2; i < 1 + static_cast<int>(g2); ++i) {
          BraidWord w = orbit_swap_element(StandardElement::Gamma, s, r2, i, m);
          CHECK(equals(multiply(w, gs), multiply(gs, w)));
        }
      }
    }
  }
}

TEST_CASE("regular conjugacy: identical forms") {
  CurveSystem c = make_curves(4, {{1, 2}, {3, 4}});
  TubularDecomposition d =
      make_decomposition(4, c, BraidWord(2, {1}), {BraidWord(2, {1}), BraidWord(2)});
  auto r = to_regular_form(d);
  REQUIRE(r.has_value());
  ConjugacyResult res = regular_conjugacy_test(*r, *r);
  CHECK(res.status == ConjugacyStatus::Conjugate);
  CHECK(res.certificate->witness.is_identity_word());
}

TEST_CASE("regular conjugacy via orbit swaps") {
  // same tubular delta^2 on four tubes, equal kappa, interiors in different
  // orbits: conjugate through S_i products
  CurveSystem c = make_curves(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  BraidWord tub = power(standard_element(StandardElement::Delta, 4), 2);
  BraidWord w0(2, {1, 1});
  TubularDecomposition da = make_decomposition(
      8, c, tub, {w0, BraidWord(2), BraidWord(2), BraidWord(2)});
  TubularDecomposition db = make_decomposition(
      8, c, tub, {BraidWord(2), w0, BraidWord(2), BraidWord(2)});
  auto ra = to_regular_form(da);
  auto rb = to_regular_form(db);
  REQUIRE(ra.has_value());
  REQUIRE(rb.has_value());
  ConjugacyResult res = regular_conjugacy_test(*ra, *rb, 100000);
  CHECK(res.status == ConjugacyStatus::Conjugate);
  REQUIRE(res.certificate.has_value());
  CHECK(res.certificate->verified);
}

TEST_CASE("regular conjugacy refuted by interiors") {
  CurveSystem c = make_curves(4, {{1, 2}, {3, 4}});
  TubularDecomposition da =
      make_decomposition(4, c, BraidWord(2), {BraidWord(2, {1}), BraidWord(2, {-1})});
  TubularDecomposition db =
      make_decomposition(4, c, BraidWord(2), {BraidWord(2, {1, 1, 1}), BraidWord(2, {-1, -1, -1})});
  auto ra = to_regular_form(da);
  auto rb = to_regular_form(db);
  REQUIRE(ra.has_value());
  REQUIRE(rb.has_value());
  CHECK(regular_conjugacy_test(*ra, *rb).status == ConjugacyStatus::NotConjugate);
}

TEST_CASE("regular conjugacy agrees with the ambient test on small instances") {
  std::mt19937_64 rng(113);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 12; ++trial) {
    TubularDecomposition d1 = random_decomposition(rng, 7);
    TubularDecomposition d2 = random_decomposition(rng, 7);
    if (!(d1.curves() == d2.curves())) continue;
    auto r1 = to_regular_form(d1, 100000);
    auto r2 = to_regular_form(d2, 100000);
    if (!r1 || !r2) continue;
    ConjugacyResult reg = regular_conjugacy_test(*r1, *r2, 100000);
    ConjugacyResult amb = conjugacy_test(embed(d1), embed(d2), 100000);
    if (amb.status == ConjugacyStatus::Conjugate) {
      CHECK(reg.status != ConjugacyStatus::NotConjugate);
    }
    if (amb.status == ConjugacyStatus::NotConjugate) {
      CHECK(reg.status != ConjugacyStatus::Conjugate);
    }
    if (reg.status == ConjugacyStatus::Conjugate) {
      CHECK(reg.certificate->verified);
      CHECK(amb.status == ConjugacyStatus::Conjugate);
    }
    ++checked;
  }
  CHECK(checked > 0);
}

#include <doctest.h>

#include "reference.hpp"
#include "tracefield/error.hpp"
#include "tracefield/trace_sets.hpp"

using namespace tracefield;

namespace {

reference::PrimeExt reference_of(const TowerCtx& t) {
  std::vector<std::int64_t> m(t.minpoly().begin(), t.minpoly().end());
  return reference::PrimeExt{static_cast<std::int64_t>(t.q()), m};
}

void check_against_reference(const TowerPtr& t) {
  auto ref = reference_of(*t);
  for (Elem a = 0; a < t->q(); ++a)
    for (Elem b = 0; b < t->q(); ++b) {
      auto member = ref.products(a, b);
      for (std::uint64_t i = 0; i < t->size(); ++i) {
        MembershipVerdict v = decide(*t, a, b, t->element(i));
        CHECK_MESSAGE(v.member == member[i], "a=" << a << " b=" << b << " idx=" << i);
        if (v.member) {
          REQUIRE(v.certificate);
          CHECK(t->mul(v.certificate->x(), v.certificate->y()) == t->element(i));
        }
      }
    }
}

}  // namespace

TEST_CASE("decide matches brute-force products, degree 2") {
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    CAPTURE(q);
    check_against_reference(TowerCtx::make(field_of_order(q), 2));
  }
}

TEST_CASE("decide matches brute-force products, degree 3") {
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    CAPTURE(q);
    check_against_reference(TowerCtx::make(field_of_order(q), 3));
  }
  check_against_reference(find_irreducible_special(field_of_order(7), FormKind::PureCubic));
  check_against_reference(find_irreducible_special(field_of_order(3), FormKind::ArtinSchreierCubic));
}

TEST_CASE("decide matches brute-force products, degree 4") {
  for (std::uint32_t q : {2u, 3u}) check_against_reference(TowerCtx::make(field_of_order(q), 4));
  check_against_reference(find_irreducible_special(field_of_order(3), FormKind::Biquadratic));
  check_against_reference(find_irreducible_special(field_of_order(5), FormKind::PureQuartic));
}

TEST_CASE("products with both traces nonzero cover every nonzero element from degree 4 up") {
  // Only 0 is missing, and only when ab != 0.
  for (auto [q, n] : {std::pair<std::uint32_t, unsigned>{2, 4}, {3, 4}, {2, 5}}) {
    TowerPtr t = TowerCtx::make(field_of_order(q), n);
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) {
        SurveySummary s = survey(*t, a, b);
        CHECK(s.non_members == (a != 0 && b != 0 ? 1u : 0u));
      }
  }
}

TEST_CASE("certificates reject anything but a valid factorization") {
  TowerPtr t = TowerCtx::make(field_of_order(3), 3);
  FieldElem x = t->trace_preimage(1), y = t->trace_preimage(2);
  FieldElem target = t->mul(x, y);
  CHECK(TraceProductCertificate::make(*t, x, y, 1, 2, target, "test"));
  CHECK_FALSE(TraceProductCertificate::make(*t, x, y, 2, 2, target, "test"));
  CHECK_FALSE(TraceProductCertificate::make(*t, x, y, 1, 2, t->add(target, t->one()), "test"));
  CHECK_FALSE(TraceProductCertificate::make(*t, x, t->add(y, t->alpha()), 1, 2, target, "test"));
}

TEST_CASE("normalization") {
  TowerPtr t = TowerCtx::make(field_of_order(5), 2);
  FieldElem beta = t->element(13);
  Normalized nz = normalize(*t, 2, 3, beta);
  CHECK(nz.pair.canonical_case == CanonicalCase::T1T1);
  CHECK(nz.pair.scale == 1);  // 2 * 3 = 6 = 1 in F_5
  CHECK(nz.target == beta);
  CHECK(normalize(*t, 0, 4, beta).pair.canonical_case == CanonicalCase::T0T1);
  CHECK(normalize(*t, 4, 0, beta).pair.canonical_case == CanonicalCase::T0T1);
  CHECK(normalize(*t, 0, 0, beta).pair.canonical_case == CanonicalCase::T0T0);
  CHECK(case_traces(CanonicalCase::T0T1) == std::pair<Elem, Elem>{0, 1});
}

TEST_CASE("a proper subset in degree 3") {
  // Over F_{5^3}, T0T0 misses the nonzero elements of F_5.
  TowerPtr t = TowerCtx::make(field_of_order(5), 3);
  for (Elem c = 1; c < 5; ++c) CHECK_FALSE(decide(*t, 0, 0, t->from_base(c)).member);
  CHECK_FALSE(one_in(5, 3, CanonicalCase::T0T0));
}

TEST_CASE("membership of 1") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    TowerPtr t = TowerCtx::make(field_of_order(q), 4);
    CHECK(one_in(q, 4, CanonicalCase::T0T0));
    CHECK(oracle(*t, 0, 0, t->one()).member);
  }
}

TEST_CASE("product witnesses are least first factors") {
  TowerPtr t = TowerCtx::make(field_of_order(2), 4);
  IndexField fx(*t);
  auto w = product_witnesses(fx, 1, 1);
  CHECK(w[0] == kNoWitness);
  for (std::uint64_t i = 1; i < t->size(); ++i) {
    REQUIRE(w[i] != kNoWitness);
    for (std::int64_t x = 1; x < w[i]; ++x) {
      FieldElem xe = t->element(static_cast<std::uint64_t>(x));
      bool usable = t->trace(xe) == 1 && t->trace(t->div(t->element(i), xe)) == 1;
      CHECK_FALSE(usable);
    }
  }
}

TEST_CASE("even characteristic trace-one equation") {
  auto rep = deg3_even_char_t1t1_experiment(field_of_order(4));
  CHECK(rep.all_nonzero_solvable());
  CHECK(rep.nonzero_targets == 63);
  CHECK_THROWS_AS(deg3_even_char_t1t1_experiment(field_of_order(8)), Error);
}

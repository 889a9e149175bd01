#include <doctest.h>

#include "tracefield/curve_counter.hpp"
#include "tracefield/error.hpp"
#include "tracefield/linear_sets.hpp"
#include "tracefield/trace_sets.hpp"

using namespace tracefield;

TEST_CASE("integer envelope") {
  CHECK(hasse_weil_envelope(2, 5, 1) == std::pair<std::int64_t, std::int64_t>{21, 45});
  CHECK(hasse_weil_envelope(3, 4, 4) == std::pair<std::int64_t, std::int64_t>{10, 154});
  CHECK(hasse_weil_envelope(2, 4, 0) == std::pair<std::int64_t, std::int64_t>{17, 17});
  // 2 * 2 * sqrt(2^5) = 22.6..., rounded outward.
  CHECK(hasse_weil_envelope(2, 5, 2) == std::pair<std::int64_t, std::int64_t>{10, 56});
}

TEST_CASE("product curve count by direct enumeration") {
  TowerPtr t = TowerCtx::make(field_of_order(2), 4);
  FieldElem offset = t->trace_preimage(1), shift = t->trace_preimage(1);
  for (std::uint64_t ai : {1u, 5u, 9u}) {
    FieldElem alpha = t->element(ai);
    std::uint64_t direct = 0;
    for (std::uint64_t ti = 0; ti < t->size(); ++ti) {
      FieldElem tt = t->element(ti);
      FieldElem den = t->add(t->sub(t->frobenius(tt, 1), tt), shift);
      if (t->is_zero(den)) continue;
      FieldElem rhs = t->sub(t->div(alpha, den), offset);
      for (std::uint64_t zi = 0; zi < t->size(); ++zi) {
        FieldElem z = t->element(zi);
        if (t->sub(t->frobenius(z, 1), z) == rhs) ++direct;
      }
    }
    CountReport r = count_product_curve(*t, alpha, offset, shift);
    CHECK(r.affine_count == direct);
    CHECK(r.genus == 1);
    CHECK(r.within_bound);
  }
  CHECK_THROWS_AS(count_product_curve(*t, t->zero(), offset, shift), Error);
}

TEST_CASE("club curve") {
  TowerPtr t = TowerCtx::make(field_of_order(3), 4);
  LinearizedPoly f = LinearizedPoly::monomial(*t, 1);
  CountReport r = count_club_curve(*t, f, t->trace_preimage(1));
  CHECK(r.genus == 1);  // (3 - 2)(3 - 1)/2
  CHECK(r.affine_count % 3 == 0);
  CHECK_THROWS_AS(count_club_curve(*t, LinearizedPoly::monomial(*t, 0), t->one()), Error);
}

TEST_CASE("Artin-Schreier fibers") {
  TowerPtr t = TowerCtx::make(field_of_order(3), 3);
  for (std::uint64_t i = 0; i < t->size(); ++i) {
    FieldElem c = t->element(i);
    CHECK(artin_schreier_fiber(*t, c) == (t->trace(c) == 0 ? 3u : 0u));
  }
}

TEST_CASE("scattered linear set of y^q") {
  // Every point has weight 1, so there are (q^n - 1)/(q - 1) points.
  for (auto [q, n] : {std::pair<std::uint32_t, unsigned>{2, 4}, {3, 3}, {3, 4}}) {
    TowerPtr t = TowerCtx::make(field_of_order(q), n);
    LinearSet s = gamma(*t, LinearizedPoly::monomial(*t, 1));
    CHECK(s.points.size() == (t->size() - 1) / (q - 1));
    for (auto w : s.weights) CHECK(w == 1);
  }
}

TEST_CASE("club geometry") {
  TowerPtr t = TowerCtx::make(field_of_order(3), 3);
  LinearSet c = club(*t, t->one());
  CHECK(c.points.size() == 9 + 1);
  CHECK(c.weight_of(ProjPoint{t->one(), t->zero()}) == std::optional<unsigned>(2));
  for (std::size_t i = 0; i < c.points.size(); ++i)
    CHECK(weight_by_elimination(*t, c, c.points[i]) == c.weights[i]);
  LinearSet ct = club_transposed(*t, t->one());
  CHECK(ct.weight_of(ProjPoint{t->zero(), t->one()}) == std::optional<unsigned>(2));
  CHECK_THROWS_AS(club(*t, t->zero()), Error);
  // The clubs meet exactly when 1 is a product of two trace-one elements.
  CHECK(disjoint(c, ct) == !oracle(*t, 1, 1, t->one()).member);
}

TEST_CASE("disjoint club pairs") {
  CHECK(disjoint_clubs_exist(3, 2).exists);
  CHECK(disjoint_clubs_exist(3, 2).witness_verified);
  CHECK_FALSE(disjoint_clubs_exist(2, 4).exists);
}

TEST_CASE("meet check") {
  CHECK_THROWS_AS(club_linearset_meet_check(2, 4, 1), Error);
  MeetReport m = club_linearset_meet_check(2, 5, 1);
  CHECK(m.exhaustive);
  CHECK(m.checked == 1023);
  CHECK(m.violations_with_positive_q_degree() == 0);
  // Scalar maps c y with Tr(c) = 0, c != 0: 15 of them.
  CHECK(m.violations_by_q_degree[0] == 15);
}

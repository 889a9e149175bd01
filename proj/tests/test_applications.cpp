#include <doctest.h>

#include "tracefield/applications.hpp"
#include "tracefield/error.hpp"
#include "tracefield/text_io.hpp"

using namespace tracefield;

namespace {

// Planarity straight from the definition on FieldElem values.
bool planar_direct(const TowerCtx& t, const std::function<FieldElem(const FieldElem&)>& fn) {
  for (std::uint64_t yi = 1; yi < t.size(); ++yi) {
    FieldElem y = t.element(yi);
    std::vector<int> hits(t.size(), 0);
    for (std::uint64_t xi = 0; xi < t.size(); ++xi) {
      FieldElem x = t.element(xi);
      FieldElem d = t.sub(t.sub(fn(t.add(x, y)), fn(x)), fn(y));
      if (++hits[t.index(d)] > 1) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("planarity against the definition") {
  TowerPtr t = TowerCtx::make(field_of_order(3), 2);
  for (std::uint64_t ai = 0; ai < t->size(); ++ai) {
    FieldElem a = t->element(ai);
    auto fn = [&](const FieldElem& x) {
      FieldElem tr = t->from_base(t->trace(x));
      return t->add(t->mul(tr, tr), t->mul(a, t->mul(x, x)));
    };
    CHECK(is_planar(FunctionTable::from_function(t, fn)) == planar_direct(*t, fn));
  }
  TowerPtr t4 = TowerCtx::make(field_of_order(2), 2);
  CHECK_FALSE(is_planar(FunctionTable::from_function(t4, [&](const FieldElem& x) { return t4->mul(x, x); })));
}

TEST_CASE("planarity sweep over F_{3^5}") {
  TowerPtr t = TowerCtx::make(field_of_order(3), 5);
  PlanaritySweep s = pn_trace_square_sweep(*t);
  CHECK(s.planar_count == 0);
  CHECK_FALSE(s.zero_scale_planar);
  CHECK(s.criterion_disagreements == 0);
  CHECK_THROWS_AS(pn_trace_square_sweep(*TowerCtx::make(field_of_order(2), 3)), Error);
}

TEST_CASE("presemifield tests") {
  TowerPtr t = TowerCtx::make(field_of_order(2), 4);
  LinearizedPoly tr = trace_polynomial(*t);
  for (std::uint64_t c = 0; c < t->size(); ++c) {
    LinearizedPoly f{{t->element(c)}};
    bool expected = c == 0 || t->trace(t->element(c)) != 1;
    CHECK(is_presemifield(*t, tr, f) == expected);
    CHECK(is_presemifield_by_quotients(*t, tr, f) == expected);
  }
  SemifieldBoundReport r = trace_semifield_bound_check(*TowerCtx::make(field_of_order(2), 5));
  CHECK(r.counterexamples.empty());
  CHECK(r.max_q_degree == 1);
  CHECK(r.zero_map_presemifield);
  CHECK_THROWS_AS(trace_semifield_bound_check(*TowerCtx::make(field_of_order(2), 3)), Error);
}

TEST_CASE("prescribed coefficients") {
  TowerPtr t = TowerCtx::make(field_of_order(3), 5);
  PrescribedPoly p = irreducible_with_prescribed(*t, PrescribedRequest{0, 0});
  CHECK(p.verified);
  REQUIRE(p.leading_first.size() == 5);
  CHECK(p.leading_first[0] == 0);
  CHECK(p.leading_first[3] == 0);
  CHECK(p.constant_first.size() == 6);
  // 25 = 1 mod 3: a b = 1 is outside the guarantee.
  CHECK_FALSE(prescribed_guaranteed(t->base(), 5, PrescribedRequest{1, 1}));
  CHECK(prescribed_guaranteed(t->base(), 5, PrescribedRequest{1, 2}));
  CHECK_THROWS_AS(irreducible_with_prescribed(*TowerCtx::make(field_of_order(3), 4), PrescribedRequest{0, 0}), Error);
}

TEST_CASE("text formats") {
  FieldPtr f = parse_field("3^2");
  CHECK(f->q() == 9);
  CHECK(parse_field(format_field(*f))->modulus() == f->modulus());
  TowerPtr t = parse_tower(f, "3");
  CHECK(parse_tower(f, format_tower(*t))->minpoly() == t->minpoly());
  for (std::uint64_t i = 0; i < t->size(); i += 17) {
    FieldElem x = t->element(i);
    CHECK(parse_element(*t, format_element(*t, x)) == x);
  }
  CHECK(format_element(*t, t->alpha()) == "001000");
  CHECK_THROWS_AS(parse_element(*t, "0010"), Error);
  CHECK_THROWS_AS(parse_element(*t, "00300g"), Error);
  CHECK_THROWS_AS(parse_field("2^x"), Error);
  CHECK_THROWS_AS(parse_tower(f, "3", "Unknown"), Error);
  TowerPtr pc = parse_tower(parse_field("7"), "3", "PureCubic");
  CHECK(pc->tag().kind == FormKind::PureCubic);
}

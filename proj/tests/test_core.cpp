#include <doctest.h>

#include <set>

#include "reference.hpp"
#include "tracefield/error.hpp"
#include "tracefield/index_field.hpp"
#include "tracefield/tower.hpp"

using namespace tracefield;

namespace {

reference::PrimeExt reference_of(const TowerCtx& t) {
  std::vector<std::int64_t> m(t.minpoly().begin(), t.minpoly().end());
  return reference::PrimeExt{static_cast<std::int64_t>(t.q()), m};
}

// Moebius inversion count of monic irreducibles of degree n over F_q.
std::uint64_t irreducible_count(std::uint64_t q, unsigned n) {
  auto mobius = [](unsigned d) {
    int sign = 1;
    for (unsigned p = 2; p <= d; ++p) {
      if (d % p) continue;
      d /= p;
      if (d % p == 0) return 0;
      sign = -sign;
    }
    return sign;
  };
  std::int64_t total = 0;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    std::int64_t qp = 1;
    for (unsigned i = 0; i < n / d; ++i) qp *= static_cast<std::int64_t>(q);
    total += mobius(d) * qp;
  }
  return static_cast<std::uint64_t>(total) / n;
}

}  // namespace

TEST_CASE("prime power fields satisfy the field axioms") {
  for (std::uint32_t q : {4u, 8u, 9u, 25u, 27u}) {
    CAPTURE(q);
    FieldPtr f = field_of_order(q);
    for (Elem a = 0; a < q; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a) CHECK(f->mul(a, f->inv(a)) == 1);
      CHECK(f->pow(a, q) == a);
      CHECK(f->abs_trace(a) < f->p());
      for (Elem b = 0; b < q; b += 3)
        for (Elem c = 0; c < q; c += 5) CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
    }
  }
  CHECK_THROWS_AS(field_of_order(6), Error);
  CHECK_THROWS_AS(FieldCtx::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}), Error);  // X^2 + 1 = (X + 1)^2
  CHECK_THROWS_AS(field_of_order(3)->inv(0), Error);
}

TEST_CASE("irreducible polynomial counts") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    FieldPtr f = field_of_order(q);
    for (unsigned n : {2u, 3u}) {
      CAPTURE(q);
      CAPTURE(n);
      std::uint64_t count = 0, total = 1;
      for (unsigned i = 0; i < n; ++i) total *= q;
      for (std::uint64_t code = 0; code < total; ++code) {
        Poly m(n + 1, 0);
        std::uint64_t rest = code;
        for (unsigned i = 0; i < n; ++i) {
          m[i] = static_cast<Elem>(rest % q);
          rest /= q;
        }
        m[n] = 1;
        count += poly::is_irreducible(*f, m);
      }
      CHECK(count == irreducible_count(q, n));
    }
  }
}

TEST_CASE("tower arithmetic agrees with the schoolbook model") {
  for (auto [q, n] : {std::pair<std::uint32_t, unsigned>{2, 5}, {3, 3}, {5, 2}, {3, 4}, {7, 2}}) {
    CAPTURE(q);
    CAPTURE(n);
    TowerPtr t = TowerCtx::make(field_of_order(q), n);
    auto ref = reference_of(*t);
    for (std::uint64_t i = 0; i < t->size(); ++i) {
      FieldElem x = t->element(i);
      REQUIRE(t->index(x) == i);
      auto rx = ref.element(i);
      CHECK(static_cast<std::int64_t>(t->trace(x)) == ref.trace(rx));
      for (std::uint64_t j = 0; j < t->size(); j += 7) {
        FieldElem prod = t->mul(x, t->element(j));
        auto rp = ref.mul(rx, ref.element(j));
        for (unsigned k = 0; k < n; ++k) CHECK(static_cast<std::int64_t>(prod.coeffs[k]) == rp[k]);
      }
    }
  }
}

TEST_CASE("trace, norm and Frobenius over prime power bases") {
  for (auto [q, n] : {std::pair<std::uint32_t, unsigned>{4, 3}, {9, 2}, {8, 2}, {4, 4}}) {
    CAPTURE(q);
    CAPTURE(n);
    TowerPtr t = TowerCtx::make(field_of_order(q), n);
    std::vector<std::uint64_t> fiber(q, 0);
    for (std::uint64_t i = 0; i < t->size(); ++i) {
      FieldElem x = t->element(i);
      ++fiber[t->trace(x)];
      CHECK(t->trace_by_conjugates(x) == t->trace(x));
      CHECK(t->frobenius(x, 1) == t->pow(x, q));
      FieldElem prod = t->one();
      for (unsigned k = 0; k < n; ++k) prod = t->mul(prod, t->frobenius(x, k));
      CHECK(t->in_base(prod));
      CHECK(prod.coeffs[0] == t->norm(x));
      if (i) CHECK(t->mul(x, t->inv(x)) == t->one());
    }
    for (auto v : fiber) CHECK(v * q == t->size());
    for (Elem a = 0; a < q; ++a) CHECK(t->trace(t->trace_preimage(a)) == a);
  }
}

TEST_CASE("minimal polynomials") {
  TowerPtr t = TowerCtx::make(field_of_order(3), 4);
  std::set<Poly> seen;
  for (std::uint64_t i = 0; i < t->size(); ++i) {
    Poly m = minimal_polynomial(*t, t->element(i));
    CHECK(poly::is_irreducible(t->base(), m));
    CHECK(4 % poly::degree(m) == 0);
    seen.insert(m);
  }
  // 3 + 3 + 18 irreducibles of degrees 1, 2, 4 over F_3.
  CHECK(seen.size() == 3 + 3 + 18);
}

TEST_CASE("special towers") {
  TowerPtr cubic = find_irreducible_special(field_of_order(7), FormKind::PureCubic);
  CHECK(cubic->n() == 3);
  CHECK(cubic->minpoly()[1] == 0);
  CHECK(cubic->minpoly()[2] == 0);
  TowerPtr as = find_irreducible_special(field_of_order(3), FormKind::ArtinSchreierCubic);
  CHECK(as->tag().kind == FormKind::ArtinSchreierCubic);
  // q = 2 mod 3: every element of F_q is a cube.
  CHECK_THROWS_AS(find_irreducible_special(field_of_order(5), FormKind::PureCubic), Error);
  CHECK_THROWS_AS(TowerCtx::make(field_of_order(2), 2, Poly{1, 0, 1}), Error);
}

TEST_CASE("index field tables match the tower") {
  for (auto [q, n] : {std::pair<std::uint32_t, unsigned>{2, 6}, {3, 4}, {4, 3}, {9, 2}}) {
    CAPTURE(q);
    TowerPtr t = TowerCtx::make(field_of_order(q), n);
    IndexField fx(*t);
    REQUIRE(fx.size() == t->size());
    for (std::uint32_t a = 0; a < fx.size(); ++a) {
      CHECK(fx.trace(a) == t->trace(t->element(a)));
      CHECK(t->element(fx.frobenius(a)) == t->frobenius(t->element(a), 1));
      for (std::uint32_t b = 1; b < fx.size(); b += 11) {
        CHECK(t->element(fx.mul(a, b)) == t->mul(t->element(a), t->element(b)));
        CHECK(t->element(fx.add(a, b)) == t->add(t->element(a), t->element(b)));
      }
    }
    for (Elem c = 0; c < q; ++c) CHECK(t->element(fx.from_base(c)) == t->from_base(c));
  }
}

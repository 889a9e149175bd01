#pragma once

// Dense univariate polynomials over F_q, constant term first, no trailing zeros
// (the zero polynomial is the empty vector).

#include <cstdint>
#include <vector>

#include "tracefield/field.hpp"

namespace tracefield {

using Poly = std::vector<Elem>;

namespace poly {

void trim(Poly& a);
int degree(const Poly& a);  // -1 for zero
Poly add(const FieldCtx& f, const Poly& a, const Poly& b);
Poly sub(const FieldCtx& f, const Poly& a, const Poly& b);
Poly mul(const FieldCtx& f, const Poly& a, const Poly& b);
Poly scale(const FieldCtx& f, const Poly& a, Elem c);
// Remainder of a modulo nonzero m.
Poly mod(const FieldCtx& f, const Poly& a, const Poly& m);
void divmod(const FieldCtx& f, const Poly& a, const Poly& m, Poly& quot, Poly& rem);
Poly mulmod(const FieldCtx& f, const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const FieldCtx& f, const Poly& a, std::uint64_t e, const Poly& m);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const FieldCtx& f, Poly a, Poly b);
Elem eval(const FieldCtx& f, const Poly& a, Elem x);
Poly monic(const FieldCtx& f, const Poly& a);

// Checks gcd(X^{q^d} - X, m) = 1 for every d <= deg(m)/2.
bool is_irreducible(const FieldCtx& f, const Poly& m);
// Smallest monic irreducible of degree n, ordered by the integer sum c_i q^i
// of its lower coefficients.
Poly smallest_irreducible(const FieldCtx& f, unsigned n);

}  // namespace poly
}  // namespace tracefield

#pragma once

// Extension F_{q^n} = F_q[alpha]/(m) over a FieldCtx, with power-basis
// coordinates x_0 + x_1 alpha + ... + x_{n-1} alpha^{n-1}.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tracefield/field.hpp"
#include "tracefield/poly.hpp"

namespace tracefield {

struct FieldElem {
  std::vector<Elem> coeffs;
  bool operator==(const FieldElem&) const = default;
  auto operator<=>(const FieldElem&) const = default;
};

enum class FormKind { General, PureCubic, PureQuartic, Biquadratic, ArtinSchreierCubic };

const char* to_string(FormKind kind);
std::optional<FormKind> form_from_string(const std::string& s);

// PureCubic(d): X^3 - d; PureQuartic(d): X^4 - d; Biquadratic(d): X^4 + X^2 + d;
// ArtinSchreierCubic(a): X^3 - X + a.
struct TowerTag {
  FormKind kind = FormKind::General;
  Elem param = 0;
};

class TowerCtx;
using TowerPtr = std::shared_ptr<const TowerCtx>;

class TowerCtx {
 public:
  // Default minpoly: smallest monic irreducible of degree n.
  // Throws Reducible, SizeBudgetExceeded, InvalidArgument (tag mismatch).
  static TowerPtr make(FieldPtr base, unsigned n, std::optional<Poly> minpoly = std::nullopt,
                       TowerTag tag = {});

  const FieldCtx& base() const { return *base_; }
  const FieldPtr& base_ptr() const { return base_; }
  unsigned n() const { return n_; }
  std::uint32_t q() const { return base_->q(); }
  std::uint64_t size() const { return size_; }
  const Poly& minpoly() const { return minpoly_; }
  const TowerTag& tag() const { return tag_; }

  FieldElem zero() const { return FieldElem{std::vector<Elem>(n_, 0)}; }
  FieldElem one() const { return from_base(1); }
  FieldElem from_base(Elem c) const;
  FieldElem basis(unsigned i) const;
  FieldElem alpha() const { return basis(n_ > 1 ? 1 : 0); }
  bool is_zero(const FieldElem& x) const;
  bool in_base(const FieldElem& x) const;

  FieldElem add(const FieldElem& x, const FieldElem& y) const;
  FieldElem sub(const FieldElem& x, const FieldElem& y) const;
  FieldElem neg(const FieldElem& x) const;
  FieldElem scale(const FieldElem& x, Elem c) const;
  FieldElem mul(const FieldElem& x, const FieldElem& y) const;
  FieldElem inv(const FieldElem& x) const;  // DivisionByZero on 0
  FieldElem div(const FieldElem& x, const FieldElem& y) const { return mul(x, inv(y)); }
  FieldElem pow(const FieldElem& x, std::uint64_t e) const;

  // x^{q^i}; i is taken mod n.
  FieldElem frobenius(const FieldElem& x, unsigned i = 1) const;
  // Linear functional built from Tr(alpha^i).
  Elem trace(const FieldElem& x) const;
  // Sum of conjugates; throws if the sum leaves F_q.
  Elem trace_by_conjugates(const FieldElem& x) const;
  Elem norm(const FieldElem& x) const;
  const std::vector<Elem>& trace_basis() const { return trace_basis_; }
  // A fixed element with trace a: (a / Tr(alpha^k)) alpha^k for the least k with Tr(alpha^k) != 0.
  FieldElem trace_preimage(Elem a) const;

  // Canonical order: index = sum x_i q^i.
  std::uint64_t index(const FieldElem& x) const;
  FieldElem element(std::uint64_t idx) const;

 private:
  TowerCtx() = default;

  FieldPtr base_;
  unsigned n_ = 0;
  std::uint64_t size_ = 0;
  Poly minpoly_;
  TowerTag tag_;
  std::vector<FieldElem> frob_cols_;
  std::vector<Elem> trace_basis_;
  unsigned trace_pivot_ = 0;
};

// F_q arithmetic helpers.
bool is_square(const FieldCtx& f, Elem c);
std::optional<Elem> sqrt(const FieldCtx& f, Elem c);
// Distinct roots of A X^2 + B X + C in F_q, ascending. NotAField if A = 0.
std::vector<Elem> solve_quadratic(const FieldCtx& f, Elem a, Elem b, Elem c);

// Smallest admissible parameter in element order. NoSuchForm when the
// congruence condition fails or no parameter gives an irreducible.
TowerPtr find_irreducible_special(FieldPtr base, FormKind form);

// Monic, constant term first, degree d | n.
Poly minimal_polynomial(const TowerCtx& t, const FieldElem& x);

// F_q for a prime power q with the default modulus.
FieldPtr field_of_order(std::uint64_t q);

}  // namespace tracefield

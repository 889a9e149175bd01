#include "tracefield/tower.hpp"

#include <algorithm>

#include "tracefield/error.hpp"

namespace tracefield {

const char* to_string(FormKind kind) {
  switch (kind) {
    case FormKind::General: return "General";
    case FormKind::PureCubic: return "PureCubic";
    case FormKind::PureQuartic: return "PureQuartic";
    case FormKind::Biquadratic: return "Biquadratic";
    case FormKind::ArtinSchreierCubic: return "ArtinSchreierCubic";
  }
  return "General";
}

std::optional<FormKind> form_from_string(const std::string& s) {
  for (auto k : {FormKind::General, FormKind::PureCubic, FormKind::PureQuartic,
                 FormKind::Biquadratic, FormKind::ArtinSchreierCubic})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

namespace {

Poly tag_polynomial(const FieldCtx& f, const TowerTag& tag) {
  Elem d = tag.param;
  switch (tag.kind) {
    case FormKind::PureCubic: return {f.neg(d), 0, 0, 1};
    case FormKind::PureQuartic: return {f.neg(d), 0, 0, 0, 1};
    case FormKind::Biquadratic: return {d, 0, 1, 0, 1};
    case FormKind::ArtinSchreierCubic: return {d, f.neg(1), 0, 1};
    case FormKind::General: break;
  }
  return {};
}

// Inverse of a modulo m via the extended Euclidean algorithm.
Poly inverse_mod(const FieldCtx& f, const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = a, s0, s1{1};
  poly::trim(r1);
  if (r1.empty()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_{q^n}");
  while (poly::degree(r1) > 0) {
    Poly quot, rem;
    poly::divmod(f, r0, r1, quot, rem);
    Poly s2 = poly::sub(f, s0, poly::mul(f, quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw Error(ErrorKind::DivisionByZero, "element not invertible");
  return poly::scale(f, s1, f.inv(r1[0]));
}

}  // namespace

TowerPtr TowerCtx::make(FieldPtr base, unsigned n, std::optional<Poly> minpoly, TowerTag tag) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < n; ++i) {
    size *= base->q();
    if (size > kSizeBudget) throw Error(ErrorKind::SizeBudgetExceeded, "q^n exceeds 2^31");
  }
  const FieldCtx& f = *base;
  Poly m;
  if (tag.kind != FormKind::General) {
    Poly expected = tag_polynomial(f, tag);
    if (poly::degree(expected) != static_cast<int>(n))
      throw Error(ErrorKind::InvalidArgument, "tag degree does not match n");
    if (minpoly) {
      Poly given = *minpoly;
      poly::trim(given);
      if (given != expected) throw Error(ErrorKind::InvalidArgument, "tag does not match minpoly");
    }
    m = expected;
    if (!poly::is_irreducible(f, m)) throw Error(ErrorKind::Reducible, "tagged polynomial is reducible");
  } else if (minpoly) {
    m = *minpoly;
    for (auto c : m)
      if (c >= f.q()) throw Error(ErrorKind::InvalidArgument, "minpoly coefficient out of range");
    poly::trim(m);
    if (poly::degree(m) != static_cast<int>(n) || m.back() != 1)
      throw Error(ErrorKind::Reducible, "minpoly must be monic of degree n");
    if (!poly::is_irreducible(f, m)) throw Error(ErrorKind::Reducible, "minpoly is reducible over F_q");
  } else {
    m = poly::smallest_irreducible(f, n);
  }

  auto t = std::shared_ptr<TowerCtx>(new TowerCtx());
  t->base_ = std::move(base);
  t->n_ = n;
  t->size_ = size;
  t->minpoly_ = m;
  t->tag_ = tag;

  // Columns of the q-power map: (alpha^j)^q.
  t->frob_cols_.reserve(n);
  for (unsigned j = 0; j < n; ++j) t->frob_cols_.push_back(t->pow(t->basis(j), f.q()));

  t->trace_basis_.resize(n);
  for (unsigned j = 0; j < n; ++j) t->trace_basis_[j] = t->trace_by_conjugates(t->basis(j));
  t->trace_pivot_ = n;
  for (unsigned j = 0; j < n; ++j)
    if (t->trace_basis_[j] != 0) {
      t->trace_pivot_ = j;
      break;
    }
  if (t->trace_pivot_ == n) throw Error(ErrorKind::InseparableTower, "trace form vanishes");
  return t;
}

FieldElem TowerCtx::from_base(Elem c) const {
  FieldElem r = zero();
  r.coeffs[0] = c;
  return r;
}

FieldElem TowerCtx::basis(unsigned i) const {
  FieldElem r = zero();
  r.coeffs[i] = 1;
  return r;
}

bool TowerCtx::is_zero(const FieldElem& x) const {
  return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](Elem c) { return c == 0; });
}

bool TowerCtx::in_base(const FieldElem& x) const {
  for (unsigned i = 1; i < n_; ++i)
    if (x.coeffs[i] != 0) return false;
  return true;
}

FieldElem TowerCtx::add(const FieldElem& x, const FieldElem& y) const {
  FieldElem r{std::vector<Elem>(n_)};
  for (unsigned i = 0; i < n_; ++i) r.coeffs[i] = base_->add(x.coeffs[i], y.coeffs[i]);
  return r;
}

FieldElem TowerCtx::sub(const FieldElem& x, const FieldElem& y) const {
  FieldElem r{std::vector<Elem>(n_)};
  for (unsigned i = 0; i < n_; ++i) r.coeffs[i] = base_->sub(x.coeffs[i], y.coeffs[i]);
  return r;
}

FieldElem TowerCtx::neg(const FieldElem& x) const {
  FieldElem r{std::vector<Elem>(n_)};
  for (unsigned i = 0; i < n_; ++i) r.coeffs[i] = base_->neg(x.coeffs[i]);
  return r;
}

FieldElem TowerCtx::scale(const FieldElem& x, Elem c) const {
  FieldElem r{std::vector<Elem>(n_)};
  for (unsigned i = 0; i < n_; ++i) r.coeffs[i] = base_->mul(x.coeffs[i], c);
  return r;
}

FieldElem TowerCtx::mul(const FieldElem& x, const FieldElem& y) const {
  const FieldCtx& f = *base_;
  std::vector<Elem> prod(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    Elem xi = x.coeffs[i];
    if (xi == 0) continue;
    for (unsigned j = 0; j < n_; ++j) {
      Elem yj = y.coeffs[j];
      if (yj != 0) prod[i + j] = f.add(prod[i + j], f.mul(xi, yj));
    }
  }
  for (std::size_t k = prod.size(); k-- > n_;) {
    Elem c = prod[k];
    if (c == 0) continue;
    for (unsigned j = 0; j < n_; ++j)
      if (minpoly_[j] != 0) prod[k - n_ + j] = f.sub(prod[k - n_ + j], f.mul(c, minpoly_[j]));
  }
  prod.resize(n_);
  return FieldElem{std::move(prod)};
}

FieldElem TowerCtx::inv(const FieldElem& x) const {
  Poly a(x.coeffs.begin(), x.coeffs.end());
  Poly r = inverse_mod(*base_, a, minpoly_);
  FieldElem out = zero();
  for (std::size_t i = 0; i < r.size(); ++i) out.coeffs[i] = r[i];
  return out;
}

FieldElem TowerCtx::pow(const FieldElem& x, std::uint64_t e) const {
  FieldElem r = one(), b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

FieldElem TowerCtx::frobenius(const FieldElem& x, unsigned i) const {
  const FieldCtx& f = *base_;
  FieldElem cur = x;
  for (unsigned step = 0; step < i % n_; ++step) {
    FieldElem next = zero();
    for (unsigned j = 0; j < n_; ++j) {
      Elem c = cur.coeffs[j];
      if (c == 0) continue;
      for (unsigned k = 0; k < n_; ++k)
        next.coeffs[k] = f.add(next.coeffs[k], f.mul(c, frob_cols_[j].coeffs[k]));
    }
    cur = std::move(next);
  }
  return cur;
}

Elem TowerCtx::trace(const FieldElem& x) const {
  Elem s = 0;
  for (unsigned i = 0; i < n_; ++i)
    if (x.coeffs[i] != 0 && trace_basis_[i] != 0) s = base_->add(s, base_->mul(x.coeffs[i], trace_basis_[i]));
  return s;
}

Elem TowerCtx::trace_by_conjugates(const FieldElem& x) const {
  FieldElem s = zero(), c = x;
  for (unsigned i = 0; i < n_; ++i) {
    s = add(s, c);
    c = frobenius(c, 1);
  }
  if (!in_base(s)) throw Error(ErrorKind::NotAField, "trace left the base field");
  return s.coeffs[0];
}

Elem TowerCtx::norm(const FieldElem& x) const {
  FieldElem p = one(), c = x;
  for (unsigned i = 0; i < n_; ++i) {
    p = mul(p, c);
    c = frobenius(c, 1);
  }
  if (!in_base(p)) throw Error(ErrorKind::NotAField, "norm left the base field");
  return p.coeffs[0];
}

FieldElem TowerCtx::trace_preimage(Elem a) const {
  FieldElem r = zero();
  r.coeffs[trace_pivot_] = base_->div(a, trace_basis_[trace_pivot_]);
  return r;
}

std::uint64_t TowerCtx::index(const FieldElem& x) const {
  std::uint64_t idx = 0;
  for (unsigned i = n_; i-- > 0;) idx = idx * base_->q() + x.coeffs[i];
  return idx;
}

FieldElem TowerCtx::element(std::uint64_t idx) const {
  FieldElem r = zero();
  for (unsigned i = 0; i < n_; ++i) {
    r.coeffs[i] = static_cast<Elem>(idx % base_->q());
    idx /= base_->q();
  }
  return r;
}

bool is_square(const FieldCtx& f, Elem c) {
  if (f.p() == 2 || c == 0) return true;
  return f.pow(c, (f.q() - 1) / 2) == 1;
}

std::optional<Elem> sqrt(const FieldCtx& f, Elem c) {
  if (c == 0) return Elem{0};
  if (f.p() == 2) return f.pow(c, f.q() / 2);
  if (!is_square(f, c)) return std::nullopt;
  // Tonelli-Shanks with q - 1 = 2^s t, t odd.
  std::uint64_t t = f.q() - 1;
  unsigned s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  Elem z = 2;
  while (is_square(f, z)) ++z;
  Elem m_c = f.pow(z, t);
  Elem r = f.pow(c, (t + 1) / 2);
  Elem tt = f.pow(c, t);
  unsigned m = s;
  while (tt != 1) {
    unsigned i = 0;
    Elem probe = tt;
    while (probe != 1) {
      probe = f.mul(probe, probe);
      ++i;
    }
    Elem b = m_c;
    for (unsigned k = 0; k + 1 < m - i; ++k) b = f.mul(b, b);
    r = f.mul(r, b);
    m_c = f.mul(b, b);
    tt = f.mul(tt, m_c);
    m = i;
  }
  return r;
}

namespace {

// A root of Y^2 + Y + c over F_{2^h} when Tr(c) = 0.
Elem artin_schreier_root(const FieldCtx& f, Elem c) {
  unsigned h = f.h();
  if (h % 2 == 1) {
    Elem y = 0, term = c;
    for (unsigned i = 0; i <= (h - 1) / 2; ++i) {
      y = f.add(y, term);
      term = f.mul(term, term);
      term = f.mul(term, term);
    }
    return y;
  }
  Elem delta = 1;
  while (f.abs_trace(delta) != 1) ++delta;
  std::vector<Elem> c_pow(h), d_pow(h);
  c_pow[0] = c;
  d_pow[0] = delta;
  for (unsigned i = 1; i < h; ++i) {
    c_pow[i] = f.mul(c_pow[i - 1], c_pow[i - 1]);
    d_pow[i] = f.mul(d_pow[i - 1], d_pow[i - 1]);
  }
  Elem y = 0;
  for (unsigned i = 0; i + 1 < h; ++i) {
    Elem inner = 0;
    for (unsigned j = i + 1; j < h; ++j) inner = f.add(inner, d_pow[j]);
    y = f.add(y, f.mul(inner, c_pow[i]));
  }
  return y;
}

}  // namespace

std::vector<Elem> solve_quadratic(const FieldCtx& f, Elem a, Elem b, Elem c) {
  if (a == 0) throw Error(ErrorKind::NotAField, "leading coefficient is zero");
  std::vector<Elem> roots;
  if (f.p() == 2) {
    if (b == 0) {
      roots.push_back(*sqrt(f, f.div(c, a)));
    } else {
      Elem b_over_a = f.div(b, a);
      Elem k = f.div(f.mul(c, a), f.mul(b, b));
      if (f.abs_trace(k) != 0) return roots;
      Elem y = artin_schreier_root(f, k);
      roots.push_back(f.mul(b_over_a, y));
      roots.push_back(f.mul(b_over_a, f.add(y, 1)));
    }
  } else {
    Elem disc = f.sub(f.mul(b, b), f.mul(f.from_int(4), f.mul(a, c)));
    auto s = sqrt(f, disc);
    if (!s) return roots;
    Elem inv2a = f.inv(f.mul(f.from_int(2), a));
    roots.push_back(f.mul(f.sub(*s, b), inv2a));
    roots.push_back(f.mul(f.sub(f.neg(*s), b), inv2a));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

TowerPtr find_irreducible_special(FieldPtr base, FormKind form) {
  const FieldCtx& f = *base;
  std::uint32_t q = f.q(), p = f.p();
  unsigned n = 0;
  switch (form) {
    case FormKind::PureCubic:
      if (q % 3 != 1) throw Error(ErrorKind::NoSuchForm, "X^3 - d needs q = 1 mod 3");
      n = 3;
      break;
    case FormKind::PureQuartic:
      if (q % 4 != 1) throw Error(ErrorKind::NoSuchForm, "X^4 - d needs q = 1 mod 4");
      n = 4;
      break;
    case FormKind::Biquadratic:
      if (p == 2) throw Error(ErrorKind::NoSuchForm, "X^4 + X^2 + d is inseparable in characteristic 2");
      n = 4;
      break;
    case FormKind::ArtinSchreierCubic:
      if (p != 3) throw Error(ErrorKind::NoSuchForm, "X^3 - X + a needs characteristic 3");
      n = 3;
      break;
    case FormKind::General:
      throw Error(ErrorKind::NoSuchForm, "General is not a special form");
  }
  for (Elem d = 0; d < q; ++d) {
    TowerTag tag{form, d};
    Poly m = tag_polynomial(f, tag);
    if (poly::is_irreducible(f, m)) return TowerCtx::make(base, n, m, tag);
  }
  throw Error(ErrorKind::NoSuchForm, "no irreducible of the requested form");
}

Poly minimal_polynomial(const TowerCtx& t, const FieldElem& x) {
  std::vector<FieldElem> orbit{x};
  for (FieldElem c = t.frobenius(x, 1); !(c == x); c = t.frobenius(c, 1)) orbit.push_back(c);
  // Product of (X - conjugate) with coefficients in F_{q^n}.
  std::vector<FieldElem> coeffs{t.one()};
  for (const auto& c : orbit) {
    std::vector<FieldElem> next(coeffs.size() + 1, t.zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = t.add(next[i + 1], coeffs[i]);
      next[i] = t.sub(next[i], t.mul(coeffs[i], c));
    }
    coeffs = std::move(next);
  }
  Poly out;
  for (const auto& c : coeffs) {
    if (!t.in_base(c)) throw Error(ErrorKind::NotAField, "minimal polynomial left the base field");
    out.push_back(c.coeffs[0]);
  }
  return out;
}

FieldPtr field_of_order(std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "field order must be >= 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t h = 0;
  std::uint64_t v = q;
  while (v % p == 0) {
    v /= p;
    ++h;
  }
  if (v != 1) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  return FieldCtx::make(static_cast<std::uint32_t>(p), h);
}

}  // namespace tracefield

#include "tracefield/poly.hpp"

#include "tracefield/error.hpp"

namespace tracefield::poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly add(const FieldCtx& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

Poly sub(const FieldCtx& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

Poly mul(const FieldCtx& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Poly scale(const FieldCtx& f, const Poly& a, Elem c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  trim(r);
  return r;
}

void divmod(const FieldCtx& f, const Poly& a, const Poly& m, Poly& quot, Poly& rem) {
  int dm = degree(m);
  if (dm < 0) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  rem = a;
  trim(rem);
  int da = degree(rem);
  quot.assign(da >= dm ? da - dm + 1 : 0, 0);
  Elem lead_inv = f.inv(m[dm]);
  for (int k = da; k >= dm; --k) {
    Elem c = rem[k];
    if (c == 0) continue;
    c = f.mul(c, lead_inv);
    quot[k - dm] = c;
    for (int j = 0; j <= dm; ++j) rem[k - dm + j] = f.sub(rem[k - dm + j], f.mul(c, m[j]));
  }
  trim(rem);
  trim(quot);
}

Poly mod(const FieldCtx& f, const Poly& a, const Poly& m) {
  Poly q, r;
  divmod(f, a, m, q, r);
  return r;
}

Poly mulmod(const FieldCtx& f, const Poly& a, const Poly& b, const Poly& m) {
  return mod(f, mul(f, a, b), m);
}

Poly powmod(const FieldCtx& f, const Poly& a, std::uint64_t e, const Poly& m) {
  Poly r = mod(f, Poly{1}, m);
  Poly base = mod(f, a, m);
  while (e) {
    if (e & 1) r = mulmod(f, r, base, m);
    e >>= 1;
    if (e) base = mulmod(f, base, base, m);
  }
  return r;
}

Poly monic(const FieldCtx& f, const Poly& a) {
  Poly r = a;
  trim(r);
  if (r.empty()) return r;
  return scale(f, r, f.inv(r.back()));
}

Poly gcd(const FieldCtx& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

Elem eval(const FieldCtx& f, const Poly& a, Elem x) {
  Elem r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
  return r;
}

bool is_irreducible(const FieldCtx& f, const Poly& m) {
  int n = degree(m);
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly x{0, 1};
  Poly frob = mod(f, x, m);
  for (int d = 1; d <= n / 2; ++d) {
    frob = powmod(f, frob, f.q(), m);
    Poly g = gcd(f, sub(f, frob, x), m);
    if (degree(g) > 0) return false;
  }
  return true;
}

Poly smallest_irreducible(const FieldCtx& f, unsigned n) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    total *= f.q();
    if (total > kSizeBudget) throw Error(ErrorKind::SizeBudgetExceeded, "q^n exceeds 2^31");
  }
  for (std::uint64_t k = 0; k < total; ++k) {
    Poly m(n + 1, 0);
    std::uint64_t v = k;
    for (unsigned i = 0; i < n; ++i) {
      m[i] = static_cast<Elem>(v % f.q());
      v /= f.q();
    }
    m[n] = 1;
    if (is_irreducible(f, m)) return m;
  }
  throw Error(ErrorKind::Reducible, "no irreducible polynomial found");
}

}  // namespace tracefield::poly

#include "tracefield/field.hpp"

#include <string>

#include "tracefield/error.hpp"
#include "tracefield/poly.hpp"

namespace tracefield {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::NoSuchForm: return "NoSuchForm";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::InseparableTower: return "InseparableTower";
    case ErrorKind::CriterionUnavailable: return "CriterionUnavailable";
    case ErrorKind::UnsupportedCase: return "UnsupportedCase";
    case ErrorKind::ZeroTarget: return "ZeroTarget";
    case ErrorKind::DegenerateF: return "DegenerateF";
    case ErrorKind::ZeroGamma: return "ZeroGamma";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotGuaranteed: return "NotGuaranteed";
    case ErrorKind::NoWitnessFound: return "NoWitnessFound";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

namespace {

constexpr std::uint32_t kTableLimit = 256;

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

FieldPtr FieldCtx::make(std::uint32_t p, std::uint32_t h,
                        std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (h == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < h; ++i) {
    q *= p;
    if (q > kSizeBudget)
      throw Error(ErrorKind::SizeBudgetExceeded, "p^h exceeds 2^31");
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->h_ = h;
  ctx->q_ = static_cast<std::uint32_t>(q);

  if (h == 1) {
    if (modulus) {
      auto m = *modulus;
      if (m.size() != 2 || m[1] % p != 1 || m[0] >= p)
        throw Error(ErrorKind::Reducible, "degree-1 modulus must be monic X + c with c < p");
      ctx->modulus_ = m;
    } else {
      ctx->modulus_ = {0, 1};
    }
    return ctx;
  }

  FieldPtr prime = make(p, 1);
  Poly m;
  if (modulus) {
    for (auto c : *modulus) {
      if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
      m.push_back(c);
    }
    poly::trim(m);
    if (poly::degree(m) != static_cast<int>(h) || m.back() != 1)
      throw Error(ErrorKind::Reducible, "modulus must be monic of degree h");
    if (!poly::is_irreducible(*prime, m))
      throw Error(ErrorKind::Reducible, "modulus is reducible over F_p");
  } else {
    m = poly::smallest_irreducible(*prime, h);
  }
  ctx->modulus_.assign(m.begin(), m.end());

  if (ctx->q_ <= kTableLimit) {
    std::uint32_t qq = ctx->q_;
    ctx->add_table_.resize(std::size_t{qq} * qq);
    ctx->mul_table_.resize(std::size_t{qq} * qq);
    ctx->inv_table_.assign(qq, 0);
    for (Elem a = 0; a < qq; ++a) {
      auto da = ctx->digits(a);
      for (Elem b = 0; b < qq; ++b) {
        auto db = ctx->digits(b);
        std::vector<std::uint32_t> s(h);
        for (std::uint32_t j = 0; j < h; ++j) s[j] = (da[j] + db[j]) % p;
        ctx->add_table_[std::size_t{a} * qq + b] = ctx->from_digits(s);
        Elem prod = ctx->mul_slow(a, b);
        ctx->mul_table_[std::size_t{a} * qq + b] = prod;
        if (prod == 1) ctx->inv_table_[a] = b;
      }
    }
  }
  return ctx;
}

Elem FieldCtx::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> FieldCtx::digits(Elem a) const {
  std::vector<std::uint32_t> d(h_);
  for (std::uint32_t j = 0; j < h_; ++j) {
    d[j] = a % p_;
    a /= p_;
  }
  return d;
}

Elem FieldCtx::from_digits(const std::vector<std::uint32_t>& d) const {
  Elem v = 0;
  for (std::size_t j = d.size(); j-- > 0;) v = v * p_ + d[j];
  return v;
}

Elem FieldCtx::add(Elem a, Elem b) const {
  if (h_ == 1) {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
  if (p_ == 2) return a ^ b;
  Elem r = 0, scale = 1;
  for (std::uint32_t j = 0; j < h_; ++j) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Elem FieldCtx::neg(Elem a) const {
  if (h_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Elem r = 0, scale = 1;
  for (std::uint32_t j = 0; j < h_; ++j) {
    std::uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

Elem FieldCtx::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldCtx::mul_slow(Elem a, Elem b) const {
  auto da = digits(a), db = digits(b);
  std::vector<std::uint64_t> prod(2 * h_ - 1, 0);
  for (std::uint32_t i = 0; i < h_; ++i)
    for (std::uint32_t j = 0; j < h_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  for (std::size_t k = prod.size(); k-- > h_;) {
    std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::uint32_t j = 0; j < h_; ++j)
      prod[k - h_ + j] = (prod[k - h_ + j] + (p_ - c) * modulus_[j]) % p_;
    prod[k] = 0;
  }
  std::vector<std::uint32_t> r(h_);
  for (std::uint32_t j = 0; j < h_; ++j) r[j] = static_cast<std::uint32_t>(prod[j]);
  return from_digits(r);
}

Elem FieldCtx::mul(Elem a, Elem b) const {
  if (h_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
  if (!mul_table_.empty()) return mul_table_[std::size_t{a} * q_ + b];
  return mul_slow(a, b);
}

Elem FieldCtx::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_q");
  if (h_ == 1) return inv_mod_prime(a, p_);
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q_ - 2);
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem FieldCtx::abs_trace(Elem a) const {
  Elem s = 0, x = a;
  for (std::uint32_t i = 0; i < h_; ++i) {
    s = add(s, x);
    x = pow(x, p_);
  }
  return s;
}

}  // namespace tracefield

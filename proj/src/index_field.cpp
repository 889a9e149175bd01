#include "tracefield/index_field.hpp"

#include "tracefield/error.hpp"

namespace tracefield {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 2; r * r <= v; ++r) {
    if (v % r) continue;
    out.push_back(r);
    while (v % r == 0) v /= r;
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

IndexField::IndexField(const TowerCtx& t) {
  if (t.size() > kIndexTableLimit)
    throw Error(ErrorKind::SizeBudgetExceeded, "index tables limited to 2^22 elements");
  size_ = static_cast<std::uint32_t>(t.size());
  order_ = size_ - 1;
  p_ = t.base().p();
  for (std::uint32_t s = 1; s < size_; s *= p_) ++digits_;

  // Primitive element: first index whose order is q^n - 1.
  auto factors = prime_factors(order_);
  FieldElem gen = t.one();
  for (std::uint64_t idx = 2; size_ > 2 && idx < size_; ++idx) {
    FieldElem g = t.element(idx);
    bool primitive = true;
    for (auto r : factors)
      if (t.pow(g, order_ / r) == t.one()) {
        primitive = false;
        break;
      }
    if (primitive) {
      gen = g;
      break;
    }
  }
  exp_.resize(order_);
  log_.assign(size_, 0);
  FieldElem cur = t.one();
  for (std::uint32_t e = 0; e < order_; ++e) {
    Idx i = static_cast<Idx>(t.index(cur));
    exp_[e] = i;
    log_[i] = e;
    cur = t.mul(cur, gen);
  }
  frob_.resize(size_);
  trace_.resize(size_);
  for (std::uint32_t i = 0; i < size_; ++i) {
    FieldElem x = t.element(i);
    frob_[i] = static_cast<Idx>(t.index(t.frobenius(x, 1)));
    trace_[i] = t.trace(x);
  }
}

IndexField::Idx IndexField::add(Idx a, Idx b) const {
  if (p_ == 2) return a ^ b;
  Idx out = 0, place = 1;
  for (std::uint32_t k = 0; k < digits_; ++k) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

IndexField::Idx IndexField::sub(Idx a, Idx b) const {
  if (p_ == 2) return a ^ b;
  Idx out = 0, place = 1;
  for (std::uint32_t k = 0; k < digits_; ++k) {
    out += ((a % p_ + p_ - b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

IndexField::Idx IndexField::inv(Idx a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_{q^n}");
  return exp_[(order_ - log_[a]) % order_];
}

IndexField::Idx IndexField::pow(Idx a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t{log_[a]} * (e % order_)) % order_];
}

}  // namespace tracefield

#pragma once

// F_{q^n} on canonical indices with log/antilog tables, for exhaustive sweeps.
// Index i encodes the element t.element(i); 0 is zero.

#include <cstdint>
#include <vector>

#include "tracefield/tower.hpp"

namespace tracefield {

// Largest q^n for which tables are built.
inline constexpr std::uint64_t kIndexTableLimit = std::uint64_t{1} << 22;

class IndexField {
 public:
  using Idx = std::uint32_t;

  // SizeBudgetExceeded above kIndexTableLimit.
  explicit IndexField(const TowerCtx& t);

  std::uint32_t size() const { return size_; }
  std::uint32_t p() const { return p_; }
  Idx one() const { return 1; }

  Idx add(Idx a, Idx b) const;
  Idx sub(Idx a, Idx b) const;
  Idx neg(Idx a) const { return sub(0, a); }
  Idx mul(Idx a, Idx b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t e = std::uint64_t{log_[a]} + log_[b];
    if (e >= order_) e -= order_;
    return exp_[e];
  }
  Idx inv(Idx a) const;  // DivisionByZero on 0
  Idx div(Idx a, Idx b) const { return mul(a, inv(b)); }
  Idx pow(Idx a, std::uint64_t e) const;
  Idx frobenius(Idx a) const { return frob_[a]; }  // a^q
  Elem trace(Idx a) const { return trace_[a]; }
  // Embedding of F_q (by base-field element) into indices.
  Idx from_base(Elem c) const { return c; }

 private:
  std::uint32_t size_ = 0, order_ = 0, p_ = 0, digits_ = 0;
  std::vector<Idx> exp_, log_, frob_;
  std::vector<Elem> trace_;
};

}  // namespace tracefield

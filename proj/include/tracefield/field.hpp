#pragma once

// Prime-power field F_q = F_p[u]/(g). Elements are packed as the integer
// sum c_j p^j of their coefficients in the basis 1, u, ..., u^{h-1}.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace tracefield {

using Elem = std::uint32_t;

// Largest field order accepted anywhere (q^n for towers).
inline constexpr std::uint64_t kSizeBudget = std::uint64_t{1} << 31;

bool is_prime(std::uint64_t v);

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

class FieldCtx {
 public:
  // Throws NotPrime, Reducible, SizeBudgetExceeded.
  static FieldPtr make(std::uint32_t p, std::uint32_t h,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t p() const { return p_; }
  std::uint32_t h() const { return h_; }
  std::uint32_t q() const { return q_; }
  // Monic, constant term first, entries in [0, p).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // DivisionByZero on 0
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  // Tr_{F_q/F_p}, returned as an element of the prime subfield.
  Elem abs_trace(Elem a) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;

 private:
  FieldCtx() = default;
  Elem mul_slow(Elem a, Elem b) const;

  std::uint32_t p_ = 0, h_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> add_table_, mul_table_, inv_table_;
};

}  // namespace tracefield

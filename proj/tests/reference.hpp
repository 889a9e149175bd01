#pragma once

// Schoolbook model of F_{p^n} for prime p: integer coefficient vectors reduced
// modulo a monic polynomial, powers by repeated multiplication. Shares nothing
// with the library beyond the modulus it is handed.

#include <cstdint>
#include <vector>

namespace reference {

struct PrimeExt {
  std::int64_t p;
  std::vector<std::int64_t> modulus;  // monic, constant term first

  using Vec = std::vector<std::int64_t>;

  std::size_t n() const { return modulus.size() - 1; }

  std::int64_t md(std::int64_t v) const { return ((v % p) + p) % p; }

  Vec add(const Vec& x, const Vec& y) const {
    Vec r(n());
    for (std::size_t i = 0; i < n(); ++i) r[i] = md(x[i] + y[i]);
    return r;
  }

  Vec mul(const Vec& x, const Vec& y) const {
    Vec prod(2 * n(), 0);
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = 0; j < n(); ++j) prod[i + j] = md(prod[i + j] + x[i] * y[j]);
    for (std::size_t k = prod.size() - 1; k >= n(); --k) {
      std::int64_t c = prod[k];
      if (c == 0) continue;
      for (std::size_t i = 0; i <= n(); ++i) prod[k - n() + i] = md(prod[k - n() + i] - c * modulus[i]);
    }
    prod.resize(n());
    return prod;
  }

  Vec one() const {
    Vec r(n(), 0);
    r[0] = 1;
    return r;
  }

  Vec pow(Vec x, std::uint64_t e) const {
    Vec r = one();
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, x);
    return r;
  }

  // Sum of x^{p^i}, i < n; returns the constant coordinate (the rest vanish).
  std::int64_t trace(const Vec& x) const {
    Vec sum(n(), 0), cur = x;
    for (std::size_t i = 0; i < n(); ++i) {
      sum = add(sum, cur);
      cur = pow(cur, static_cast<std::uint64_t>(p));
    }
    return sum[0];
  }

  std::uint64_t size() const {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < n(); ++i) s *= static_cast<std::uint64_t>(p);
    return s;
  }

  Vec element(std::uint64_t idx) const {
    Vec r(n());
    for (std::size_t i = 0; i < n(); ++i) {
      r[i] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(p));
      idx /= static_cast<std::uint64_t>(p);
    }
    return r;
  }

  // Membership table of {x y : Tr x = a, Tr y = b} by the double loop.
  std::vector<bool> products(std::int64_t a, std::int64_t b) const {
    std::vector<Vec> all;
    std::vector<std::int64_t> tr;
    for (std::uint64_t i = 0; i < size(); ++i) {
      all.push_back(element(i));
      tr.push_back(trace(all.back()));
    }
    std::vector<bool> member(size(), false);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (tr[i] != a) continue;
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (tr[j] != b) continue;
        Vec z = mul(all[i], all[j]);
        std::uint64_t idx = 0;
        for (std::size_t k = n(); k-- > 0;) idx = idx * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(z[k]);
        member[idx] = true;
      }
    }
    return member;
  }
};

}  // namespace reference

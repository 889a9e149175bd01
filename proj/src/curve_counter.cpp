#include "tracefield/curve_counter.hpp"

#include <algorithm>
#include <vector>

#include "tracefield/error.hpp"
#include "tracefield/parallel.hpp"

namespace tracefield {

namespace {

using u128 = unsigned __int128;

u128 isqrt(u128 v) {
  if (v < 2) return v;
  u128 x = v, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + v / x) / 2;
  }
  return x;
}

// Counts t in [0, size) satisfying pred, in fixed blocks.
template <class Pred>
std::uint64_t count_indices(std::uint64_t size, Pred&& pred) {
  const std::uint64_t blocks = std::min<std::uint64_t>(size, 64);
  std::vector<std::uint64_t> partial(blocks, 0);
  parallel_for(0, blocks, [&](std::uint64_t b) {
    std::uint64_t lo = size * b / blocks, hi = size * (b + 1) / blocks;
    for (std::uint64_t i = lo; i < hi; ++i)
      if (pred(i)) ++partial[b];
  });
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

void finish(CountReport& r, const TowerCtx& t) {
  r.q = t.q();
  r.n = t.n();
  auto [lo, hi] = hasse_weil_envelope(t.q(), t.n(), r.genus);
  r.hw_lower = lo;
  r.hw_upper = hi;
  r.slack = 2 * static_cast<std::int64_t>(t.q());
  const auto count = static_cast<std::int64_t>(r.affine_count);
  r.within_bound = lo - r.slack <= count && count <= hi + r.slack;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> hasse_weil_envelope(std::uint64_t q, unsigned n, std::uint64_t genus) {
  u128 qn = 1;
  for (unsigned i = 0; i < n; ++i) qn *= q;
  // ceil(2 g sqrt(q^n)) = ceil(sqrt(4 g^2 q^n))
  u128 square = u128{4} * genus * genus * qn;
  u128 root = isqrt(square);
  if (root * root < square) ++root;
  const auto center = static_cast<std::int64_t>(qn + 1);
  const auto width = static_cast<std::int64_t>(root);
  return {center - width, center + width};
}

std::uint64_t artin_schreier_fiber(const TowerCtx& t, const FieldElem& c) {
  return t.trace(c) == 0 ? t.q() : 0;
}

CountReport count_product_curve(const TowerCtx& t, const FieldElem& numerator, const FieldElem& offset,
                                const FieldElem& shift) {
  if (t.is_zero(numerator)) throw Error(ErrorKind::ZeroTarget, "product curve needs a nonzero numerator");
  CountReport r;
  r.kind = "product";
  r.genus = std::uint64_t{t.q() - 1} * (t.q() - 1);
  const Elem offset_trace = t.trace(offset);
  std::uint64_t poles = 0;
  std::uint64_t good = count_indices(t.size(), [&](std::uint64_t idx) {
    FieldElem x = t.element(idx);
    FieldElem den = t.add(t.sub(t.frobenius(x, 1), x), shift);
    if (t.is_zero(den)) return false;
    return t.trace(t.div(numerator, den)) == offset_trace;
  });
  if (t.trace(shift) == 0) poles = t.q();
  r.affine_count = good * t.q();
  r.pole_count = poles;
  finish(r, t);
  return r;
}

CountReport count_club_curve(const TowerCtx& t, const LinearizedPoly& f, const FieldElem& offset) {
  const int d = f.q_degree(t);
  if (d < 1) throw Error(ErrorKind::DegenerateF, "club curve needs q-degree at least 1");
  CountReport r;
  r.kind = "club";
  std::uint64_t qd = 1;
  for (int i = 0; i < d; ++i) qd *= t.q();
  r.genus = (qd - 2) * (t.q() - 1) / 2;
  const Elem offset_trace = t.trace(offset);
  std::uint64_t good = count_indices(t.size(), [&](std::uint64_t idx) {
    if (idx == 0) return false;
    FieldElem y = t.element(idx);
    return t.trace(t.div(f.eval(t, y), y)) == offset_trace;
  });
  r.affine_count = good * t.q();
  r.pole_count = 1;
  finish(r, t);
  return r;
}

}  // namespace tracefield

#pragma once

// Affine point counts on the Artin-Schreier curves z^q - z = R(t) attached to
// trace products and to club / linear-set intersections.

#include <cstdint>
#include <string>
#include <utility>

#include "tracefield/linear_sets.hpp"
#include "tracefield/tower.hpp"

namespace tracefield {

struct CountReport {
  std::string kind;
  std::uint32_t q = 0;
  unsigned n = 0;
  std::uint64_t genus = 0;
  std::uint64_t affine_count = 0;
  std::uint64_t pole_count = 0;
  std::int64_t hw_lower = 0;
  std::int64_t hw_upper = 0;
  std::int64_t slack = 0;
  bool within_bound = false;
};

// Outward-rounded (q^n + 1 - 2g q^{n/2}, q^n + 1 + 2g q^{n/2}), integers only.
std::pair<std::int64_t, std::int64_t> hasse_weil_envelope(std::uint64_t q, unsigned n, std::uint64_t genus);

// z^q - z = numerator / (t^q - t + shift) - offset, genus (q-1)^2.
// ZeroTarget when numerator = 0.
CountReport count_product_curve(const TowerCtx& t, const FieldElem& numerator, const FieldElem& offset,
                                const FieldElem& shift);

// z^q - z = f(y)/y - offset over y != 0, genus (q^d - 2)(q - 1)/2.
// DegenerateF when f has q-degree below 1.
CountReport count_club_curve(const TowerCtx& t, const LinearizedPoly& f, const FieldElem& offset);

// Number of z in F_{q^n} with z^q - z = c (0 or q).
std::uint64_t artin_schreier_fiber(const TowerCtx& t, const FieldElem& c);

}  // namespace tracefield

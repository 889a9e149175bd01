#pragma once

// F_q-linear sets of the projective line PG(1, q^n): point sets
// {<(g1(u), g2(u))> : u != 0} for F_q-linear maps g1, g2 on F_{q^n}.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tracefield/tower.hpp"

namespace tracefield {

// (1, s) when the first coordinate is nonzero, else (0, 1).
struct ProjPoint {
  FieldElem first;
  FieldElem second;
  auto operator<=>(const ProjPoint&) const = default;
  bool operator==(const ProjPoint&) const = default;

  // InvalidArgument when both coordinates vanish.
  static ProjPoint normalize(const TowerCtx& t, const FieldElem& first, const FieldElem& second);
};

// sum_i coeffs[i] y^{q^i}
struct LinearizedPoly {
  std::vector<FieldElem> coeffs;

  // Largest i with coeffs[i] != 0, or -1 for the zero polynomial.
  int q_degree(const TowerCtx& t) const;
  FieldElem eval(const TowerCtx& t, const FieldElem& y) const;
  bool is_zero(const TowerCtx& t) const { return q_degree(t) < 0; }

  static LinearizedPoly monomial(const TowerCtx& t, unsigned power);  // y^{q^power}
};

using LinearMap = std::function<FieldElem(const FieldElem&)>;

struct LinearSet {
  std::vector<ProjPoint> points;  // sorted
  std::vector<unsigned> weights;  // parallel to points, from fiber counts
  unsigned rank = 0;              // F_q-dimension of the underlying subspace
  std::string source;
  LinearMap first_map, second_map;

  std::optional<unsigned> weight_of(const ProjPoint& p) const;
};

LinearSet linear_set(const TowerCtx& t, LinearMap first, LinearMap second, std::string source);
// dim_{F_q} of {(g1(u), g2(u))} intersected with <p>, by Gaussian elimination.
unsigned weight_by_elimination(const TowerCtx& t, const LinearSet& set, const ProjPoint& p);

LinearSet gamma(const TowerCtx& t, const LinearizedPoly& f);      // {(x, f(x))}
LinearSet gamma_bar(const TowerCtx& t, const LinearizedPoly& f);  // {(f(x), x)}
// {(z, scale * Tr(z))}, head (1, 0). ZeroGamma when scale = 0.
LinearSet club(const TowerCtx& t, const FieldElem& scale);
// {(scale * Tr(y), y)}, head (0, 1). ZeroGamma when scale = 0.
LinearSet club_transposed(const TowerCtx& t, const FieldElem& scale);

bool disjoint(const LinearSet& lhs, const LinearSet& rhs);

struct ClubPairReport {
  std::uint32_t q = 0;
  unsigned n = 0;
  bool exists = false;
  std::optional<FieldElem> witness;  // scale of the transposed club
  bool witness_verified = false;     // direct disjointness test of the pair
};

// Searches a nonzero scale outside T1T1 on the default tower of degree n over F_q.
ClubPairReport disjoint_clubs_exist(std::uint32_t q, unsigned n);

struct MeetReport {
  std::uint32_t q = 0;
  unsigned n = 0;
  unsigned max_q_degree = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  // Indexed by q-degree.
  std::vector<std::uint64_t> checked_by_q_degree;
  std::vector<std::uint64_t> violations_by_q_degree;
  std::vector<LinearizedPoly> first_violations;  // at most 8
  std::uint64_t violations_with_positive_q_degree() const;
};

inline constexpr std::uint64_t kDefaultSweepBudget = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kMinimumSample = 10000;

// For every nonzero f of q-degree <= max_q_degree, tests whether the club
// {(z, Tr z)} meets {(f(y), y)}. Exhaustive when q^{n(max_q_degree+1)} <= budget,
// otherwise max(budget, kMinimumSample) random polynomials from seed.
MeetReport club_linearset_meet_check(std::uint32_t q, unsigned n, unsigned max_q_degree,
                                     std::uint64_t budget = kDefaultSweepBudget, std::uint64_t seed = 1);

}  // namespace tracefield

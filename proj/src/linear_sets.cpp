#include "tracefield/linear_sets.hpp"

#include <map>
#include <random>

#include "tracefield/error.hpp"
#include "tracefield/index_field.hpp"
#include "tracefield/linalg.hpp"
#include "tracefield/parallel.hpp"
#include "tracefield/trace_sets.hpp"

namespace tracefield {

ProjPoint ProjPoint::normalize(const TowerCtx& t, const FieldElem& first, const FieldElem& second) {
  if (!t.is_zero(first)) return ProjPoint{t.one(), t.div(second, first)};
  if (t.is_zero(second)) throw Error(ErrorKind::InvalidArgument, "(0, 0) is not a projective point");
  return ProjPoint{t.zero(), t.one()};
}

int LinearizedPoly::q_degree(const TowerCtx& t) const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (!t.is_zero(coeffs[i])) return i;
  return -1;
}

FieldElem LinearizedPoly::eval(const TowerCtx& t, const FieldElem& y) const {
  FieldElem out = t.zero(), power = y;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) power = t.frobenius(power, 1);
    if (!t.is_zero(coeffs[i])) out = t.add(out, t.mul(coeffs[i], power));
  }
  return out;
}

LinearizedPoly LinearizedPoly::monomial(const TowerCtx& t, unsigned power) {
  LinearizedPoly f;
  f.coeffs.assign(power + 1, t.zero());
  f.coeffs[power] = t.one();
  return f;
}

std::optional<unsigned> LinearSet::weight_of(const ProjPoint& p) const {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || !(*it == p)) return std::nullopt;
  return weights[it - points.begin()];
}

namespace {

// Columns are the images of the power basis.
linalg::Matrix map_matrix(const TowerCtx& t, const LinearMap& g) {
  linalg::Matrix m(t.n(), std::vector<Elem>(t.n()));
  for (unsigned j = 0; j < t.n(); ++j) {
    FieldElem img = g(t.basis(j));
    for (unsigned i = 0; i < t.n(); ++i) m[i][j] = img.coeffs[i];
  }
  return m;
}

unsigned joint_kernel_dim(const TowerCtx& t, const LinearMap& g1, const LinearMap& g2) {
  linalg::Matrix top = map_matrix(t, g1), bottom = map_matrix(t, g2);
  top.insert(top.end(), bottom.begin(), bottom.end());
  return t.n() - static_cast<unsigned>(linalg::rank(t.base(), top));
}

unsigned log_q(std::uint64_t v, std::uint32_t q) {
  unsigned e = 0;
  while (v > 1) {
    v /= q;
    ++e;
  }
  return e;
}

}  // namespace

LinearSet linear_set(const TowerCtx& t, LinearMap first, LinearMap second, std::string source) {
  LinearSet s;
  s.source = std::move(source);
  const unsigned kernel = joint_kernel_dim(t, first, second);
  s.rank = t.n() - kernel;
  std::uint64_t kernel_size = 1;
  for (unsigned i = 0; i < kernel; ++i) kernel_size *= t.q();
  std::map<ProjPoint, std::uint64_t> fibers;
  for (std::uint64_t idx = 1; idx < t.size(); ++idx) {
    FieldElem u = t.element(idx);
    FieldElem a = first(u), b = second(u);
    if (t.is_zero(a) && t.is_zero(b)) continue;
    ++fibers[ProjPoint::normalize(t, a, b)];
  }
  for (auto& [point, count] : fibers) {
    s.points.push_back(point);
    s.weights.push_back(log_q(count / kernel_size + 1, t.q()));
  }
  s.first_map = std::move(first);
  s.second_map = std::move(second);
  return s;
}

unsigned weight_by_elimination(const TowerCtx& t, const LinearSet& set, const ProjPoint& p) {
  LinearMap condition;
  if (t.is_zero(p.first)) {
    condition = set.first_map;
  } else {
    condition = [&t, &set, slope = p.second](const FieldElem& u) {
      return t.sub(set.second_map(u), t.mul(slope, set.first_map(u)));
    };
  }
  unsigned preimage = t.n() - static_cast<unsigned>(linalg::rank(t.base(), map_matrix(t, condition)));
  return preimage - joint_kernel_dim(t, set.first_map, set.second_map);
}

LinearSet gamma(const TowerCtx& t, const LinearizedPoly& f) {
  return linear_set(
      t, [](const FieldElem& x) { return x; }, [&t, f](const FieldElem& x) { return f.eval(t, x); },
      "gamma");
}

LinearSet gamma_bar(const TowerCtx& t, const LinearizedPoly& f) {
  return linear_set(
      t, [&t, f](const FieldElem& x) { return f.eval(t, x); }, [](const FieldElem& x) { return x; },
      "gamma_bar");
}

LinearSet club(const TowerCtx& t, const FieldElem& scale) {
  if (t.is_zero(scale)) throw Error(ErrorKind::ZeroGamma, "club scale must be nonzero");
  return linear_set(
      t, [](const FieldElem& z) { return z; },
      [&t, scale](const FieldElem& z) { return t.scale(scale, t.trace(z)); }, "club");
}

LinearSet club_transposed(const TowerCtx& t, const FieldElem& scale) {
  if (t.is_zero(scale)) throw Error(ErrorKind::ZeroGamma, "club scale must be nonzero");
  return linear_set(
      t, [&t, scale](const FieldElem& y) { return t.scale(scale, t.trace(y)); },
      [](const FieldElem& y) { return y; }, "club_transposed");
}

bool disjoint(const LinearSet& lhs, const LinearSet& rhs) {
  auto i = lhs.points.begin(), j = rhs.points.begin();
  while (i != lhs.points.end() && j != rhs.points.end()) {
    if (*i == *j) return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

ClubPairReport disjoint_clubs_exist(std::uint32_t q, unsigned n) {
  TowerPtr t = TowerCtx::make(field_of_order(q), n);
  ClubPairReport r;
  r.q = q;
  r.n = n;
  SurveySummary s = survey(*t, 1, 1);
  for (auto idx : s.non_member_indices) {
    if (idx == 0) continue;
    r.exists = true;
    r.witness = t->element(idx);
    r.witness_verified = disjoint(club(*t, t->one()), club_transposed(*t, *r.witness));
    break;
  }
  return r;
}

std::uint64_t MeetReport::violations_with_positive_q_degree() const {
  std::uint64_t total = 0;
  for (std::size_t d = 1; d < violations_by_q_degree.size(); ++d) total += violations_by_q_degree[d];
  return total;
}

MeetReport club_linearset_meet_check(std::uint32_t q, unsigned n, unsigned max_q_degree,
                                     std::uint64_t budget, std::uint64_t seed) {
  if (2 * (max_q_degree + 1) >= n)
    throw Error(ErrorKind::InvalidArgument, "q-degree bound must satisfy d < n/2 - 1");
  TowerPtr tp = TowerCtx::make(field_of_order(q), n);
  const TowerCtx& t = *tp;
  IndexField fx(t);
  using Idx = IndexField::Idx;
  const std::uint32_t size = fx.size();
  const unsigned terms = max_q_degree + 1;

  // Normalized slopes s of club points (1, s), read off the enumerated club.
  LinearSet c = club(t, t.one());
  std::vector<char> slope_in_club(size, 0);
  for (const auto& point : c.points)
    if (!t.is_zero(point.first)) slope_in_club[t.index(point.second)] = 1;

  MeetReport r;
  r.q = q;
  r.n = n;
  r.max_q_degree = max_q_degree;
  r.seed = seed;
  r.checked_by_q_degree.assign(terms, 0);
  r.violations_by_q_degree.assign(terms, 0);

  // True when some y != 0 gives a point (f(y), y) on the club.
  auto meets = [&](const std::vector<Idx>& coeffs) {
    for (Idx y = 1; y < size; ++y) {
      Idx value = 0, power = y;
      for (unsigned i = 0; i < terms; ++i) {
        if (i > 0) power = fx.frobenius(power);
        value = fx.add(value, fx.mul(coeffs[i], power));
      }
      if (value != 0 && slope_in_club[fx.div(y, value)]) return true;
    }
    return false;
  };
  auto degree_of = [&](const std::vector<Idx>& coeffs) {
    for (int i = static_cast<int>(terms) - 1; i >= 0; --i)
      if (coeffs[i] != 0) return i;
    return -1;
  };

  std::uint64_t space = 1;
  bool overflow = false;
  for (unsigned i = 0; i < terms; ++i) {
    space *= size;
    if (space > budget) overflow = true;
  }
  std::vector<std::vector<Idx>> polys;
  if (!overflow) {
    r.exhaustive = true;
    polys.reserve(space - 1);
    for (std::uint64_t code = 1; code < space; ++code) {
      std::vector<Idx> coeffs(terms);
      std::uint64_t rest = code;
      for (unsigned i = 0; i < terms; ++i) {
        coeffs[i] = static_cast<Idx>(rest % size);
        rest /= size;
      }
      polys.push_back(std::move(coeffs));
    }
  } else {
    r.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, size - 1);
    while (polys.size() < kMinimumSample) {
      std::vector<Idx> coeffs(terms);
      for (auto& cf : coeffs) cf = pick(rng);
      if (degree_of(coeffs) >= 0) polys.push_back(std::move(coeffs));
    }
  }

  std::vector<char> ok(polys.size(), 0);
  parallel_for(0, polys.size(), [&](std::uint64_t i) { ok[i] = meets(polys[i]); });
  for (std::size_t i = 0; i < polys.size(); ++i) {
    int d = degree_of(polys[i]);
    ++r.checked;
    ++r.checked_by_q_degree[d];
    if (ok[i]) continue;
    ++r.violations;
    ++r.violations_by_q_degree[d];
    if (r.first_violations.size() < 8) {
      LinearizedPoly f;
      for (auto cf : polys[i]) f.coeffs.push_back(t.element(cf));
      r.first_violations.push_back(std::move(f));
    }
  }
  return r;
}

}  // namespace tracefield

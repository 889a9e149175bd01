#include "tracefield/applications.hpp"

#include <random>

#include "tracefield/error.hpp"
#include "tracefield/parallel.hpp"

namespace tracefield {

using Idx = IndexField::Idx;

FunctionTable FunctionTable::from_function(TowerPtr tower, const std::function<FieldElem(const FieldElem&)>& fn) {
  FunctionTable table;
  table.values.resize(tower->size());
  for (std::uint64_t i = 0; i < tower->size(); ++i)
    table.values[i] = static_cast<std::uint32_t>(tower->index(fn(tower->element(i))));
  table.tower = std::move(tower);
  return table;
}

bool is_planar(const FunctionTable& table, const IndexField& fx) {
  const std::uint32_t size = fx.size();
  std::vector<std::uint32_t> hits(size);
  for (Idx y = 1; y < size; ++y) {
    std::fill(hits.begin(), hits.end(), 0);
    const Idx fy = table.values[y];
    for (Idx x = 0; x < size; ++x) {
      Idx diff = fx.sub(fx.sub(table.values[fx.add(x, y)], table.values[x]), fy);
      if (++hits[diff] > 1) return false;
    }
  }
  return true;
}

bool is_planar(const FunctionTable& table) {
  IndexField fx(*table.tower);
  return is_planar(table, fx);
}

namespace {

// Membership table of T1T1 by enumerating products of trace-one elements.
std::vector<char> trace_one_products(const IndexField& fx) {
  std::vector<Idx> ones;
  for (Idx x = 1; x < fx.size(); ++x)
    if (fx.trace(x) == 1) ones.push_back(x);
  std::vector<char> member(fx.size(), 0);
  for (Idx x : ones)
    for (Idx y : ones) member[fx.mul(x, y)] = 1;
  return member;
}

std::vector<std::uint32_t> table_of(const IndexField& fx, const std::function<Idx(Idx)>& fn) {
  std::vector<std::uint32_t> values(fx.size());
  for (Idx x = 0; x < fx.size(); ++x) values[x] = fn(x);
  return values;
}

}  // namespace

PlanaritySweep pn_trace_square_sweep(const TowerCtx& t) {
  if (t.base().p() == 2) throw Error(ErrorKind::InvalidArgument, "planarity sweep needs odd characteristic");
  IndexField fx(t);
  PlanaritySweep s;
  s.q = t.q();
  s.n = t.n();
  auto trace_square = [&](Idx scale) {
    return table_of(fx, [&](Idx x) {
      Idx tr = fx.from_base(t.base().mul(fx.trace(x), fx.trace(x)));
      return fx.add(tr, fx.mul(scale, fx.mul(x, x)));
    });
  };
  FunctionTable zero_table{nullptr, trace_square(0)};
  s.zero_scale_planar = is_planar(zero_table, fx);

  const std::vector<char> member = trace_one_products(fx);
  s.rows.resize(fx.size() - 1);
  parallel_for(1, fx.size(), [&](std::uint64_t i) {
    const Idx scale = static_cast<Idx>(i);
    PlanarityRow row;
    row.scale_index = scale;
    row.planar = is_planar(FunctionTable{nullptr, trace_square(scale)}, fx);
    row.criterion_member = member[fx.neg(fx.inv(scale))];
    FunctionTable second{nullptr, table_of(fx, [&](Idx x) {
                           return fx.mul(x, fx.add(fx.from_base(fx.trace(x)), fx.mul(scale, x)));
                         })};
    row.second_family_planar = is_planar(second, fx);
    s.rows[i - 1] = row;
  });
  for (const auto& row : s.rows) {
    s.planar_count += row.planar;
    s.second_family_planar_count += row.second_family_planar;
    if (row.planar == row.criterion_member) ++s.criterion_disagreements;
  }
  return s;
}

FactorizationCheck trace_square_factorization_check(const TowerCtx& t) {
  IndexField fx(t);
  const FieldCtx& f = t.base();
  FactorizationCheck c;
  for (Idx root = 1; root < fx.size(); ++root) {
    if (fx.trace(root) == 0) continue;
    ++c.checked_scales;
    const Idx scale = fx.neg(fx.mul(root, root));
    for (Idx x = 0; x < fx.size(); ++x) {
      Idx tr = fx.from_base(fx.trace(x));
      Idx factored = fx.mul(fx.sub(tr, fx.mul(root, x)), fx.add(tr, fx.mul(root, x)));
      Idx direct = fx.add(fx.from_base(f.mul(fx.trace(x), fx.trace(x))), fx.mul(scale, fx.mul(x, x)));
      if (factored != direct) {
        ++c.mismatches;
        break;
      }
    }
  }
  return c;
}

LinearizedPoly trace_polynomial(const TowerCtx& t) {
  LinearizedPoly f;
  f.coeffs.assign(t.n(), t.one());
  return f;
}

namespace {

std::vector<std::uint32_t> poly_table(const TowerCtx& t, const LinearizedPoly& f) {
  std::vector<std::uint32_t> values(t.size());
  for (std::uint64_t i = 0; i < t.size(); ++i)
    values[i] = static_cast<std::uint32_t>(t.index(f.eval(t, t.element(i))));
  return values;
}

// Marks {num(x) / den(x)} over x != 0 with den(x) != 0.
std::vector<char> quotient_set(const IndexField& fx, const std::vector<std::uint32_t>& num,
                               const std::vector<std::uint32_t>& den) {
  std::vector<char> mark(fx.size(), 0);
  for (Idx x = 1; x < fx.size(); ++x)
    if (den[x] != 0) mark[fx.div(num[x], den[x])] = 1;
  return mark;
}

std::vector<std::uint32_t> identity_table(const IndexField& fx) {
  std::vector<std::uint32_t> v(fx.size());
  for (Idx x = 0; x < fx.size(); ++x) v[x] = x;
  return v;
}

}  // namespace

bool is_presemifield(const TowerCtx& t, const LinearizedPoly& first, const LinearizedPoly& second) {
  IndexField fx(t);
  const auto l1 = poly_table(t, first), l2 = poly_table(t, second);
  for (Idx x = 1; x < fx.size(); ++x)
    for (Idx y = 1; y < fx.size(); ++y)
      if (fx.mul(l1[x], l2[y]) == fx.mul(x, y)) return false;
  return true;
}

bool is_presemifield_by_quotients(const TowerCtx& t, const LinearizedPoly& first, const LinearizedPoly& second) {
  // L1(x) L2(y) = x y with x, y != 0 forces L1(x) != 0 and x / L1(x) = L2(y) / y.
  IndexField fx(t);
  const auto ident = identity_table(fx);
  const auto left = quotient_set(fx, ident, poly_table(t, first));
  const auto l2 = poly_table(t, second);
  for (Idx y = 1; y < fx.size(); ++y)
    if (left[fx.div(l2[y], y)]) return false;
  return true;
}

SemifieldBoundReport trace_semifield_bound_check(const TowerCtx& t, std::uint64_t budget, std::uint64_t seed) {
  if (t.n() < 4) throw Error(ErrorKind::InvalidArgument, "bound check needs n >= 4");
  IndexField fx(t);
  SemifieldBoundReport r;
  r.q = t.q();
  r.n = t.n();
  r.max_q_degree = (t.n() + 1) / 2 - 2;
  r.seed = seed;
  const unsigned terms = r.max_q_degree + 1;
  r.checked_by_q_degree.assign(terms, 0);
  r.presemifields_by_q_degree.assign(terms, 0);
  const std::uint32_t size = fx.size();

  const auto ident = identity_table(fx);
  const auto trace_values = table_of(fx, [&](Idx x) { return fx.from_base(fx.trace(x)); });
  const auto left = quotient_set(fx, ident, trace_values);
  r.zero_map_presemifield = true;  // L2 = 0: x o y = -x y

  auto presemifield = [&](const std::vector<Idx>& coeffs) {
    for (Idx y = 1; y < size; ++y) {
      Idx value = 0, power = y;
      for (unsigned i = 0; i < terms; ++i) {
        if (i > 0) power = fx.frobenius(power);
        value = fx.add(value, fx.mul(coeffs[i], power));
      }
      if (left[fx.div(value, y)]) return false;
    }
    return true;
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
  r.exhaustive = !overflow;
  if (!overflow) {
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
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, size - 1);
    while (polys.size() < kMinimumSample) {
      std::vector<Idx> coeffs(terms);
      for (auto& cf : coeffs) cf = pick(rng);
      if (degree_of(coeffs) >= 0) polys.push_back(std::move(coeffs));
    }
  }
  std::vector<char> hit(polys.size(), 0);
  parallel_for(0, polys.size(), [&](std::uint64_t i) { hit[i] = presemifield(polys[i]); });
  for (std::size_t i = 0; i < polys.size(); ++i) {
    int d = degree_of(polys[i]);
    ++r.checked;
    ++r.checked_by_q_degree[d];
    if (!hit[i]) continue;
    ++r.presemifields_by_q_degree[d];
    if (d == 0) {
      ++r.degenerate_presemifields;
    } else {
      LinearizedPoly f;
      for (auto cf : polys[i]) f.coeffs.push_back(t.element(cf));
      r.counterexamples.push_back(std::move(f));
    }
  }
  return r;
}

bool prescribed_guaranteed(const FieldCtx& f, unsigned n, PrescribedRequest request) {
  if (n < 5 || !is_prime(n)) return false;
  return f.from_int(std::int64_t{n} * n) != f.mul(request.second_coeff, request.ratio);
}

PrescribedPoly irreducible_with_prescribed(const TowerCtx& t, PrescribedRequest request) {
  const FieldCtx& f = t.base();
  const unsigned n = t.n();
  if (!is_prime(n)) throw Error(ErrorKind::InvalidArgument, "degree must be prime");
  PrescribedPoly out;
  out.q = t.q();
  out.n = n;
  out.request = request;
  out.guaranteed = prescribed_guaranteed(f, n, request);
  const Elem want_trace = f.neg(request.second_coeff);
  const Elem want_inverse_trace = f.neg(request.ratio);
  for (std::uint64_t idx = 1; idx < t.size(); ++idx) {
    FieldElem root = t.element(idx);
    if (t.in_base(root) || t.trace(root) != want_trace) continue;
    if (t.trace(t.inv(root)) != want_inverse_trace) continue;
    out.root = root;
    out.constant_first = minimal_polynomial(t, root);
    const Poly& m = out.constant_first;
    for (unsigned i = 1; i <= n && i < m.size(); ++i) out.leading_first.push_back(m[n - i]);
    out.verified = poly::degree(m) == static_cast<int>(n) && m.back() == 1 && poly::is_irreducible(f, m) &&
                   m[n - 1] == request.second_coeff && m[0] != 0 && f.div(m[1], m[0]) == request.ratio;
    return out;
  }
  throw Error(ErrorKind::NoWitnessFound, out.guaranteed ? "no element with the prescribed traces"
                                                        : "no element with the prescribed traces (not guaranteed)");
}

}  // namespace tracefield

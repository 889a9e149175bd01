#include "tracefield/trace_sets.hpp"

#include <functional>

#include "tracefield/error.hpp"
#include "tracefield/linalg.hpp"
#include "tracefield/parallel.hpp"

namespace tracefield {

const char* to_string(CanonicalCase c) {
  switch (c) {
    case CanonicalCase::T0T0: return "T0T0";
    case CanonicalCase::T0T1: return "T0T1";
    case CanonicalCase::T1T1: return "T1T1";
  }
  return "T0T0";
}

std::pair<Elem, Elem> case_traces(CanonicalCase c) {
  switch (c) {
    case CanonicalCase::T0T0: return {0, 0};
    case CanonicalCase::T0T1: return {0, 1};
    case CanonicalCase::T1T1: return {1, 1};
  }
  return {0, 0};
}

Normalized normalize(const TowerCtx& t, Elem trace_a, Elem trace_b, const FieldElem& target) {
  const FieldCtx& f = t.base();
  Normalized out;
  out.pair.trace_a = trace_a;
  out.pair.trace_b = trace_b;
  out.pair.scale = f.mul(trace_a, trace_b);
  if (trace_a != 0 && trace_b != 0) {
    out.pair.canonical_case = CanonicalCase::T1T1;
    out.target = t.scale(target, f.inv(out.pair.scale));
  } else if (trace_a != 0 || trace_b != 0) {
    out.pair.canonical_case = CanonicalCase::T0T1;
    out.target = target;
  } else {
    out.pair.canonical_case = CanonicalCase::T0T0;
    out.target = target;
  }
  return out;
}

std::optional<TraceProductCertificate> TraceProductCertificate::make(const TowerCtx& t, FieldElem x,
                                                                     FieldElem y, Elem trace_a,
                                                                     Elem trace_b, FieldElem target,
                                                                     std::string provenance) {
  if (x.coeffs.size() != t.n() || y.coeffs.size() != t.n() || target.coeffs.size() != t.n())
    return std::nullopt;
  if (t.trace(x) != trace_a || t.trace(y) != trace_b) return std::nullopt;
  if (!(t.mul(x, y) == target)) return std::nullopt;
  TraceProductCertificate c;
  c.x_ = std::move(x);
  c.y_ = std::move(y);
  c.trace_a_ = trace_a;
  c.trace_b_ = trace_b;
  c.target_ = std::move(target);
  c.provenance_ = std::move(provenance);
  return c;
}

MembershipVerdict oracle(const TowerCtx& t, Elem trace_a, Elem trace_b, const FieldElem& target) {
  MembershipVerdict v;
  v.criterion = kOracleCriterion;
  if (t.is_zero(target)) {
    if (trace_a == 0) {
      v.certificate = TraceProductCertificate::make(t, t.zero(), t.trace_preimage(trace_b), trace_a,
                                                    trace_b, target, kOracleCriterion);
    } else if (trace_b == 0) {
      v.certificate = TraceProductCertificate::make(t, t.trace_preimage(trace_a), t.zero(), trace_a,
                                                    trace_b, target, kOracleCriterion);
    }
    v.member = v.certificate.has_value();
    return v;
  }
  for (std::uint64_t idx = 1; idx < t.size(); ++idx) {
    FieldElem x = t.element(idx);
    if (t.trace(x) != trace_a) continue;
    FieldElem y = t.div(target, x);
    if (t.trace(y) != trace_b) continue;
    v.certificate = TraceProductCertificate::make(t, std::move(x), std::move(y), trace_a, trace_b,
                                                  target, kOracleCriterion);
    v.member = true;
    return v;
  }
  return v;
}

namespace {

using FactorPair = std::pair<FieldElem, FieldElem>;
// Returns nullopt when the formula does not apply to the input.
using Builder = std::function<std::optional<FactorPair>()>;

struct Attempt {
  std::string label;
  Builder build;
};

FieldElem coords(const TowerCtx& t, std::initializer_list<Elem> values) {
  FieldElem r = t.zero();
  unsigned i = 0;
  for (Elem v : values) r.coeffs[i++] = v;
  return r;
}

MembershipVerdict non_member(const std::string& criterion) {
  MembershipVerdict v;
  v.member = false;
  v.criterion = criterion;
  return v;
}

// Tries each attempt in order; the first validating pair becomes the
// certificate. Falls back to the oracle when none validates.
MembershipVerdict certify(const TowerCtx& t, CanonicalCase c, const FieldElem& target,
                          const std::string& criterion, const std::vector<Attempt>& attempts) {
  auto [ta, tb] = case_traces(c);
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& attempt : attempts) {
    std::optional<FactorPair> pair;
    std::string reason;
    try {
      pair = attempt.build();
      if (!pair) reason = "formula not applicable";
    } catch (const Error& e) {
      reason = e.what();
    }
    if (pair) {
      auto cert = TraceProductCertificate::make(t, pair->first, pair->second, ta, tb, target,
                                                criterion + "/" + attempt.label);
      if (cert) {
        MembershipVerdict v;
        v.member = true;
        v.certificate = std::move(cert);
        v.criterion = criterion;
        if (!failures.empty())
          v.divergence = nlohmann::json{{"criterion", criterion},
                                        {"case", to_string(c)},
                                        {"target_index", t.index(target)},
                                        {"expected", "validated certificate from the first formula"},
                                        {"actual", failures},
                                        {"resolved_by", attempt.label}};
        return v;
      }
      reason = "certificate failed validation";
    }
    failures.push_back({{"formula", attempt.label}, {"reason", reason}});
  }
  MembershipVerdict v = oracle(t, ta, tb, target);
  v.divergence = nlohmann::json{{"criterion", criterion},
                                {"case", to_string(c)},
                                {"target_index", t.index(target)},
                                {"expected", "member with validated certificate"},
                                {"actual", failures},
                                {"resolved_by", "oracle"},
                                {"oracle_member", v.member}};
  return v;
}

// Certificate for target = 0: one factor is zero.
FactorPair zero_target_pair(const TowerCtx& t, CanonicalCase c) {
  auto [ta, tb] = case_traces(c);
  if (ta == 0) return {t.zero(), t.trace_preimage(tb)};
  return {t.trace_preimage(ta), t.zero()};
}

}  // namespace

// ---------------------------------------------------------------- degree 2

MembershipVerdict deg2_decide(const TowerCtx& t, CanonicalCase c, const FieldElem& target) {
  if (t.n() != 2) throw Error(ErrorKind::WrongDegree, "degree-2 criteria need n = 2");
  const FieldCtx& f = t.base();
  const Elem m1 = t.minpoly()[1], m2 = t.minpoly()[0];  // X^2 + m1 X + m2
  const Elem b0 = target.coeffs[0], b1 = target.coeffs[1];
  const bool zero = t.is_zero(target);
  const FieldElem alpha = t.alpha();

  if (f.p() == 2) {
    if (m1 == 0) throw Error(ErrorKind::InseparableTower, "X^2 + a2 is inseparable");
    const Elem inv_m1 = f.inv(m1);
    switch (c) {
      case CanonicalCase::T0T0: {
        const std::string id = "deg2.char2.trace0x0.base_field";
        if (b1 != 0) return non_member(id);
        return certify(t, c, target, id, {{"unit_factor", [&]() -> std::optional<FactorPair> {
                                             return FactorPair{t.one(), target};
                                           }}});
      }
      case CanonicalCase::T0T1: {
        const std::string id = "deg2.char2.trace0x1.outside_base_units";
        if (b1 == 0 && !zero) return non_member(id);
        return certify(t, c, target, id, {{"explicit", [&]() -> std::optional<FactorPair> {
                                             if (zero) return zero_target_pair(t, c);
                                             Elem x0 = f.mul(m1, b1);
                                             return FactorPair{t.from_base(x0),
                                                               coords(t, {f.div(b0, x0), inv_m1})};
                                           }}});
      }
      case CanonicalCase::T1T1: {
        const std::string id = "deg2.char2.trace1x1.absolute_trace";
        Elem lin = f.add(f.mul(m1, b1), 1);
        Elem cst = f.add(f.mul(m2, f.mul(inv_m1, inv_m1)), b0);
        bool member = lin == 0 || f.abs_trace(f.div(cst, f.mul(lin, lin))) == 0;
        if (!member) return non_member(id);
        return certify(t, c, target, id, {{"quadratic_roots", [&]() -> std::optional<FactorPair> {
                                             auto roots = solve_quadratic(f, 1, lin, cst);
                                             if (roots.empty()) return std::nullopt;
                                             Elem r0 = roots.front();
                                             Elem r1 = f.add(r0, lin);  // other root: sum = lin
                                             return FactorPair{coords(t, {r0, inv_m1}),
                                                               coords(t, {r1, inv_m1})};
                                           }}});
      }
    }
  }

  const Elem two = f.from_int(2), four = f.from_int(4);
  const Elem half = f.inv(two), quarter = f.inv(four);
  const Elem disc = f.sub(f.mul(m1, m1), f.mul(four, m2));  // m1^2 - 4 m2, nonzero
  // Trace-zero direction m1/2 + alpha.
  const FieldElem dir = coords(t, {f.mul(m1, half), 1});
  switch (c) {
    case CanonicalCase::T0T0: {
      const std::string id = "deg2.trace0x0.base_field";
      if (b1 != 0) return non_member(id);
      return certify(t, c, target, id, {{"explicit", [&]() -> std::optional<FactorPair> {
                                           Elem coef = f.div(b0, f.mul(disc, quarter));
                                           return FactorPair{dir, t.scale(dir, coef)};
                                         }}});
    }
    case CanonicalCase::T0T1: {
      const std::string id = "deg2.trace0x1.outside_base_units";
      if (b1 == 0 && !zero) return non_member(id);
      return certify(t, c, target, id, {{"explicit", [&]() -> std::optional<FactorPair> {
                                           if (zero) return zero_target_pair(t, c);
                                           Elem x1 = f.mul(two, b1);
                                           Elem y1 = f.div(f.mul(f.sub(f.div(b0, x1), f.mul(m1, quarter)), four), disc);
                                           return FactorPair{t.scale(dir, x1),
                                                             t.add(t.from_base(half), t.scale(dir, y1))};
                                         }}});
    }
    case CanonicalCase::T1T1: {
      const std::string id = "deg2.trace1x1.discriminant_square";
      Elem lin = f.add(f.mul(m1, b1), 1);
      Elem numer = f.sub(f.mul(lin, lin), f.mul(four, f.add(b0, f.mul(m2, f.mul(b1, b1)))));
      if (!is_square(f, f.div(numer, disc))) return non_member(id);
      return certify(t, c, target, id, {{"quadratic_roots", [&]() -> std::optional<FactorPair> {
                                           // x1 + y1 = 2 b1, x1 y1 = (4 b0 - 1 - 2 m1 b1) / disc
                                           Elem prod = f.div(f.sub(f.sub(f.mul(four, b0), 1), f.mul(two, f.mul(m1, b1))), disc);
                                           auto roots = solve_quadratic(f, 1, f.neg(f.mul(two, b1)), prod);
                                           if (roots.empty()) return std::nullopt;
                                           Elem x1 = roots.front();
                                           Elem y1 = f.sub(f.mul(two, b1), x1);
                                           return FactorPair{t.add(t.from_base(half), t.scale(dir, x1)),
                                                             t.add(t.from_base(half), t.scale(dir, y1))};
                                         }}});
    }
  }
  return non_member("deg2.unreachable");
}

// ---------------------------------------------------------------- degree 3

MembershipVerdict deg3_quadratic_form_decide(const TowerCtx& t, CanonicalCase c, const FieldElem& target) {
  if (t.n() != 3) throw Error(ErrorKind::WrongDegree, "degree-3 criteria need n = 3");
  const std::string id = "deg3.quadratic_form_search";
  if (c == CanonicalCase::T1T1)
    throw Error(ErrorKind::CriterionUnavailable, "the quadratic-form route covers T0T0 and T0T1 only");
  MembershipVerdict v;
  v.criterion = id;
  auto [ta, tb] = case_traces(c);
  if (t.is_zero(target)) {
    auto pair = zero_target_pair(t, c);
    v.certificate = TraceProductCertificate::make(t, pair.first, pair.second, ta, tb, target, id);
    v.member = v.certificate.has_value();
    return v;
  }
  // The searched factor carries trace tb; the quotient target/x then has trace 0.
  for (std::uint64_t idx = 1; idx < t.size(); ++idx) {
    FieldElem x = t.element(idx);
    if (t.trace(x) != tb) continue;
    FieldElem form = t.mul(target, t.mul(t.frobenius(x, 1), t.frobenius(x, 2)));
    if (t.trace(form) != 0) continue;
    FieldElem other = t.div(target, x);
    v.certificate = TraceProductCertificate::make(t, other, x, ta, tb, target, id);
    v.member = v.certificate.has_value();
    if (!v.member) {
      v = oracle(t, ta, tb, target);
      v.divergence = nlohmann::json{{"criterion", id}, {"target_index", t.index(target)},
                                    {"expected", "validated certificate"}, {"actual", "validation failed"}};
    }
    return v;
  }
  return v;
}

NormalBasis find_normal_basis(const TowerCtx& t) {
  const FieldCtx& f = t.base();
  for (std::uint64_t idx = 1; idx < t.size(); ++idx) {
    NormalBasis nb;
    FieldElem cur = t.element(idx);
    for (unsigned i = 0; i < t.n(); ++i) {
      nb.conjugates.push_back(cur);
      cur = t.frobenius(cur, 1);
    }
    linalg::Matrix m(t.n(), std::vector<Elem>(t.n()));
    for (unsigned i = 0; i < t.n(); ++i)
      for (unsigned j = 0; j < t.n(); ++j) m[i][j] = nb.conjugates[j].coeffs[i];
    if (linalg::rank(f, m) != t.n()) continue;
    FieldElem sum = t.zero(), pair_sum = t.zero();
    for (unsigned i = 0; i < t.n(); ++i) {
      sum = t.add(sum, nb.conjugates[i]);
      for (unsigned j = i + 1; j < t.n(); ++j) pair_sum = t.add(pair_sum, t.mul(nb.conjugates[i], nb.conjugates[j]));
    }
    nb.sum = sum.coeffs[0];
    nb.pair_sum = pair_sum.coeffs[0];
    nb.product = t.norm(nb.conjugates[0]);
    return nb;
  }
  throw Error(ErrorKind::NoWitnessFound, "no normal element found");
}

std::vector<Elem> normal_coordinates(const TowerCtx& t, const NormalBasis& nb, const FieldElem& v) {
  linalg::Matrix m(t.n(), std::vector<Elem>(t.n()));
  for (unsigned i = 0; i < t.n(); ++i)
    for (unsigned j = 0; j < t.n(); ++j) m[i][j] = nb.conjugates[j].coeffs[i];
  auto sol = linalg::solve(t.base(), m, v.coeffs);
  if (!sol) throw Error(ErrorKind::NotAField, "normal basis is singular");
  return *sol;
}

MembershipVerdict deg3_normal_basis_decide(const TowerCtx& t, const NormalBasis& nb, const FieldElem& target) {
  if (t.n() != 3) throw Error(ErrorKind::WrongDegree, "degree-3 criteria need n = 3");
  const FieldCtx& f = t.base();
  if (f.p() == 2) throw Error(ErrorKind::CriterionUnavailable, "normal-basis criterion needs odd characteristic");
  const std::string id = "deg3.normal_basis.trace0x0.symmetric_discriminant";
  const CanonicalCase c = CanonicalCase::T0T0;
  auto b = normal_coordinates(t, nb, target);
  const Elem lam2 = f.mul(nb.sum, nb.sum);
  const Elem sq_sum = f.add(f.add(f.mul(b[0], b[0]), f.mul(b[1], b[1])), f.mul(b[2], b[2]));
  const Elem cross = f.add(f.add(f.mul(b[0], b[1]), f.mul(b[0], b[2])), f.mul(b[1], b[2]));
  const Elem two_mu = f.mul(f.from_int(2), nb.pair_sum);
  const Elem near = f.sub(lam2, two_mu);                 // lambda^2 - 2 mu
  const Elem far = f.sub(lam2, f.mul(f.from_int(2), two_mu));  // lambda^2 - 4 mu
  auto form_value = [&](Elem sq_coef, Elem cross_coef) {
    return f.sub(f.mul(sq_coef, sq_sum), f.mul(f.mul(f.from_int(2), cross_coef), cross));
  };
  const Elem expr = form_value(far, near);
  const Elem printed = form_value(near, far);  // coefficients as printed, swapped
  std::optional<nlohmann::json> divergence;
  if (is_square(f, expr) != is_square(f, printed))
    divergence = nlohmann::json{{"criterion", id},
                                {"target_index", t.index(target)},
                                {"expected", "printed discriminant agrees with the binary form"},
                                {"actual", is_square(f, printed) ? "printed form says member" : "printed form says non-member"},
                                {"resolved_by", "discriminant of the binary form"}};
  if (!is_square(f, expr)) {
    MembershipVerdict v = non_member(id);
    v.divergence = divergence;
    return v;
  }
  MembershipVerdict v = certify(t, c, target, id, {{"form_root", [&]() -> std::optional<FactorPair> {
                                       if (t.is_zero(target)) return zero_target_pair(t, c);
                                       auto point = [&](Elem s0, Elem s1) {
                                         FieldElem x = t.scale(nb.conjugates[0], s0);
                                         x = t.add(x, t.scale(nb.conjugates[1], s1));
                                         return t.sub(x, t.scale(nb.conjugates[2], f.add(s0, s1)));
                                       };
                                       auto form = [&](Elem s0, Elem s1) {
                                         FieldElem x = point(s0, s1);
                                         return t.trace(t.mul(target, t.mul(t.frobenius(x, 1), t.frobenius(x, 2))));
                                       };
                                       Elem c00 = form(1, 0), c11 = form(0, 1);
                                       Elem c01 = f.sub(f.sub(form(1, 1), c00), c11);
                                       Elem s0 = 1, s1 = 0;
                                       if (c00 != 0) {
                                         auto roots = solve_quadratic(f, c00, c01, c11);
                                         if (roots.empty()) return std::nullopt;
                                         s0 = roots.front();
                                         s1 = 1;
                                       }
                                       FieldElem x = point(s0, s1);
                                       return FactorPair{x, t.div(target, x)};
                                     }}});
  if (divergence && !v.divergence) v.divergence = divergence;
  return v;
}

Elem pure_cubic_trace_one_residual(const TowerCtx& t, const FieldElem& target, Elem x1, Elem x2) {
  const FieldCtx& f = t.base();
  const Elem prm = t.tag().param;
  const Elem b0 = target.coeffs[0], b1 = target.coeffs[1], b2 = target.coeffs[2];
  const Elem three = f.from_int(3);
  const Elem third = f.inv(three);
  const Elem inner = f.sub(f.sub(f.mul(b1, f.mul(x1, x1)), f.mul(b0, f.mul(x1, x2))),
                           f.mul(third, f.add(f.mul(b1, x2), f.mul(b2, x1))));
  Elem lhs = f.mul(b0, third);
  lhs = f.add(lhs, f.mul(f.mul(three, prm), inner));
  lhs = f.add(lhs, f.mul(f.mul(three, f.mul(prm, prm)), f.mul(b2, f.mul(x2, x2))));
  Elem rhs = f.pow(third, 3);
  rhs = f.add(rhs, f.mul(prm, f.pow(x1, 3)));
  rhs = f.add(rhs, f.mul(f.mul(prm, prm), f.pow(x2, 3)));
  rhs = f.sub(rhs, f.mul(prm, f.mul(x1, x2)));
  return f.sub(lhs, rhs);
}

std::optional<std::pair<Elem, Elem>> pure_cubic_trace_one_solution(const TowerCtx& t, const FieldElem& target) {
  const std::uint32_t q = t.q();
  for (Elem x1 = 0; x1 < q; ++x1)
    for (Elem x2 = 0; x2 < q; ++x2)
      if (pure_cubic_trace_one_residual(t, target, x1, x2) == 0) return std::make_pair(x1, x2);
  return std::nullopt;
}

MembershipVerdict deg3_decide(const TowerCtx& t, CanonicalCase c, const FieldElem& target) {
  if (t.n() != 3) throw Error(ErrorKind::WrongDegree, "degree-3 criteria need n = 3");
  const FieldCtx& f = t.base();
  const Elem b0 = target.coeffs[0], b1 = target.coeffs[1], b2 = target.coeffs[2];
  const bool zero = t.is_zero(target);
  const FormKind kind = t.tag().kind;
  const Elem prm = t.tag().param;

  if (kind == FormKind::PureCubic) {
    if (c == CanonicalCase::T0T0) {
      std::string id;
      bool member;
      if (f.p() == 2) {
        id = "deg3.pure_cubic.trace0x0.char2_absolute_trace";
        member = b0 == 0 || f.abs_trace(f.div(f.mul(prm, f.mul(b1, b2)), f.mul(b0, b0))) == 0;
      } else {
        id = "deg3.pure_cubic.trace0x0.discriminant_square";
        member = is_square(f, f.sub(f.mul(b0, b0), f.mul(f.from_int(4), f.mul(prm, f.mul(b1, b2)))));
      }
      if (!member) return non_member(id);
      return certify(t, c, target, id, {{"form_root", [&]() -> std::optional<FactorPair> {
                                           if (zero) return zero_target_pair(t, c);
                                           Elem x1 = 1, x2 = 0;
                                           if (b1 != 0) {
                                             auto roots = solve_quadratic(f, b1, f.neg(b0), f.mul(prm, b2));
                                             if (roots.empty()) return std::nullopt;
                                             x1 = roots.front();
                                             x2 = 1;
                                           }
                                           FieldElem x = coords(t, {0, x1, x2});
                                           return FactorPair{x, t.div(target, x)};
                                         }}});
    }
    if (c == CanonicalCase::T0T1) {
      const std::string id = "deg3.pure_cubic.trace0x1.whole_field";
      return certify(t, c, target, id, {{"rescaled_form_value", [&]() -> std::optional<FactorPair> {
                                           if (zero) return zero_target_pair(t, c);
                                           // v = x1 alpha + x2 alpha^2 with Tr(target/v) N(v) = 3 d F(x1, x2) != 0.
                                           const Elem three_prm = f.mul(f.from_int(3), prm);
                                           for (Elem x1 = 0; x1 < f.q(); ++x1)
                                             for (Elem x2 = 0; x2 < f.q(); ++x2) {
                                               Elem form = f.add(f.sub(f.mul(b1, f.mul(x1, x1)), f.mul(b0, f.mul(x1, x2))),
                                                                 f.mul(prm, f.mul(b2, f.mul(x2, x2))));
                                               Elem value = f.mul(three_prm, form);
                                               if (value == 0) continue;
                                               FieldElem v = coords(t, {0, x1, x2});
                                               FieldElem x = t.scale(v, f.div(value, t.norm(v)));
                                               return FactorPair{x, t.div(target, x)};
                                             }
                                           return std::nullopt;
                                         }}});
    }
    const std::string id = "deg3.pure_cubic.trace1x1.cubic_equation";
    if (f.p() == 3) throw Error(ErrorKind::CriterionUnavailable, "trace-one equation needs char != 3");
    auto sol = pure_cubic_trace_one_solution(t, target);
    if (!sol) return non_member(id);
    return certify(t, c, target, id, {{"lifted_solution", [&]() -> std::optional<FactorPair> {
                                         FieldElem x = coords(t, {f.inv(f.from_int(3)), sol->first, sol->second});
                                         return FactorPair{x, t.div(target, x)};
                                       }}});
  }

  if (kind == FormKind::ArtinSchreierCubic && c == CanonicalCase::T0T0) {
    const std::string id = "deg3.artin_schreier.trace0x0.square_test";
    if (!is_square(f, f.sub(f.mul(b1, b1), f.mul(b0, b2)))) return non_member(id);
    return certify(t, c, target, id, {{"split_quadratic", [&]() -> std::optional<FactorPair> {
                                         if (zero) return zero_target_pair(t, c);
                                         if (b2 == 0) return FactorPair{coords(t, {b0, b1}), t.one()};
                                         auto roots = solve_quadratic(f, b2, b1, b0);
                                         if (roots.empty()) return std::nullopt;
                                         Elem r1 = roots.front();
                                         Elem r2 = f.sub(f.neg(f.div(b1, b2)), r1);
                                         return FactorPair{coords(t, {f.neg(f.mul(b2, r1)), b2}),
                                                           coords(t, {f.neg(r2), 1})};
                                       }}});
  }

  if (c == CanonicalCase::T1T1) {
    MembershipVerdict v = oracle(t, 1, 1, target);
    v.criterion = std::string("deg3.trace1x1.no_closed_form/") + kOracleCriterion;
    return v;
  }
  return deg3_quadratic_form_decide(t, c, target);
}

// ---------------------------------------------------------------- degree 4

MembershipVerdict deg4_decide(const TowerCtx& t, CanonicalCase c, const FieldElem& target) {
  if (t.n() != 4) throw Error(ErrorKind::WrongDegree, "degree-4 criteria need n = 4");
  const FieldCtx& f = t.base();
  const FormKind kind = t.tag().kind;
  if (kind != FormKind::General && f.p() == 2)
    throw Error(ErrorKind::InseparableTower, "tagged quartic forms are inseparable in characteristic 2");
  if (c == CanonicalCase::T1T1 || kind == FormKind::General) {
    auto [ta, tb] = case_traces(c);
    MembershipVerdict v = oracle(t, ta, tb, target);
    v.criterion = std::string("deg4.no_closed_form/") + kOracleCriterion;
    return v;
  }
  const Elem b0 = target.coeffs[0], b1 = target.coeffs[1], b2 = target.coeffs[2], b3 = target.coeffs[3];
  const bool zero = t.is_zero(target);
  const Elem prm = t.tag().param;
  const Elem two = f.from_int(2), four = f.from_int(4);
  const Elem quarter = f.inv(four);
  auto quotient_of = [&](const FieldElem& x) { return FactorPair{x, t.div(target, x)}; };

  if (kind == FormKind::Biquadratic) {
    if (c == CanonicalCase::T0T0) {
      const std::string id = "deg4.biquadratic.trace0x0.whole_field";
      if (zero) return certify(t, c, target, id, {{"zero", [&]() -> std::optional<FactorPair> { return zero_target_pair(t, c); }}});
      if (b1 == 0 && b3 == 0) {
        return certify(t, c, target, id, {{"odd_part_literal", [&]() -> std::optional<FactorPair> {
                                             Elem inv_prm = f.inv(prm);
                                             FieldElem x = coords(t, {0, f.neg(f.mul(b0, inv_prm)), 0, f.neg(f.mul(b1, inv_prm))});
                                             return FactorPair{x, coords(t, {0, 1, 0, 1})};
                                           }}});
      }
      return certify(t, c, target, id, {{"odd_part_quotient", [&]() -> std::optional<FactorPair> {
                                           FieldElem x = coords(t, {0, f.sub(f.mul(two, f.mul(prm, b3)), b1), 0,
                                                                    f.sub(b3, f.mul(two, b1))});
                                           if (t.is_zero(x)) return std::nullopt;
                                           return quotient_of(x);
                                         }}});
    }
    const std::string id = "deg4.biquadratic.trace0x1.whole_field";
    if (zero) return certify(t, c, target, id, {{"zero", [&]() -> std::optional<FactorPair> { return zero_target_pair(t, c); }}});
    if (b1 == 0 && b2 == 0 && b3 == 0) {
      // Unit element 16/(4d+3) (1 - 2 alpha^2), scaled by b0.
      auto unit = [&]() {
        Elem coef = f.div(f.from_int(16), f.add(f.mul(four, prm), f.from_int(3)));
        return t.scale(coords(t, {1, 0, f.neg(two), 0}), coef);
      };
      return certify(t, c, target, id,
                     {{"unit_first", [&]() -> std::optional<FactorPair> {
                        FieldElem u = unit();
                        return FactorPair{t.scale(u, b0), t.inv(u)};
                      }},
                      {"unit_second", [&]() -> std::optional<FactorPair> {
                        FieldElem u = unit();
                        return FactorPair{t.scale(t.inv(u), b0), u};
                      }}});
    }
    if (b1 == 0 && b3 == 0) {
      // Quadratic subfield generated by alpha^2, minimal polynomial Y^2 + Y + d.
      return certify(t, c, target, id, {{"quadratic_subfield", [&]() -> std::optional<FactorPair> {
                                           const Elem half = f.inv(two);
                                           const Elem sub_disc = f.sub(1, f.mul(four, prm));
                                           Elem x1 = f.mul(two, b2);
                                           Elem y1 = f.div(f.mul(f.sub(f.div(b0, x1), quarter), four), sub_disc);
                                           FieldElem xe = coords(t, {f.mul(x1, half), 0, x1, 0});
                                           FieldElem ye = coords(t, {f.add(half, f.mul(y1, half)), 0, y1, 0});
                                           return FactorPair{t.scale(xe, two), t.scale(ye, half)};
                                         }}});
    }
    if (b3 == 0) {
      FieldElem x = coords(t, {0, f.mul(four, b1), 0, 0});
      return certify(t, c, target, id,
                     {{"literal", [&]() -> std::optional<FactorPair> {
                        Elem den = f.mul(four, f.mul(b1, prm));
                        FieldElem y = coords(t, {quarter, f.div(f.sub(f.mul(b2, prm), b0), den), 0, f.neg(f.div(b0, den))});
                        return FactorPair{x, y};
                      }},
                      {"quotient", [&]() -> std::optional<FactorPair> { return quotient_of(x); }}});
    }
    FieldElem x = coords(t, {0, f.mul(four, b1), 0, f.mul(four, b3)});
    return certify(t, c, target, id,
                   {{"literal", [&]() -> std::optional<FactorPair> {
                      Elem dd = f.sub(f.sub(f.mul(b1, b3), f.mul(b1, b1)), f.mul(prm, f.mul(b3, b3)));
                      Elem den = f.mul(f.mul(four, prm), dd);
                      Elem n1 = f.mul(f.mul(b0, b3), f.sub(prm, 1));
                      n1 = f.add(n1, f.mul(b0, b1));
                      n1 = f.sub(n1, f.mul(b1, f.mul(b2, prm)));
                      n1 = f.add(n1, f.mul(b2, f.mul(b3, prm)));
                      Elem n3 = f.add(f.sub(f.mul(b0, b1), f.mul(b0, b3)), f.mul(b2, f.mul(b3, prm)));
                      return FactorPair{x, coords(t, {quarter, f.div(n1, den), 0, f.div(n3, den)})};
                    }},
                    {"quotient", [&]() -> std::optional<FactorPair> { return quotient_of(x); }}});
  }

  // PureQuartic: X^4 - d.
  if (c == CanonicalCase::T0T0) {
    const std::string id = "deg4.pure_quartic.trace0x0.cubic_point";
    return certify(t, c, target, id, {{"explicit_point", [&]() -> std::optional<FactorPair> {
                                         if (zero) return zero_target_pair(t, c);
                                         FieldElem x = b1 != 0 ? coords(t, {0, f.div(f.mul(prm, b3), b1), 0, 1})
                                                               : coords(t, {0, 1, 0, 0});
                                         return quotient_of(x);
                                       }}});
  }
  const std::string id = "deg4.pure_quartic.trace0x1.whole_field";
  if (zero) return certify(t, c, target, id, {{"zero", [&]() -> std::optional<FactorPair> { return zero_target_pair(t, c); }}});
  // Certificates are (trace-0 factor, trace-1 factor); the closed formulas
  // name the trace-1 element first.
  auto swap_quotient = [&](const FieldElem& one_factor) {
    return FactorPair{t.div(target, one_factor), one_factor};
  };
  if (b2 == 0 && b1 == 0) {
    auto trace_one = [&]() {
      return coords(t, {quarter, 0, 0, f.div(b0, f.mul(four, f.mul(b3, prm)))});
    };
    return certify(t, c, target, id,
                   {{"literal", [&]() -> std::optional<FactorPair> {
                      return FactorPair{coords(t, {0, 0, 0, f.mul(four, b3)}), trace_one()};
                    }},
                    {"alpha_in_place_of_cube", [&]() -> std::optional<FactorPair> {
                      FieldElem one_factor = coords(t, {quarter, f.div(b0, f.mul(four, f.mul(b3, prm))), 0, 0});
                      return FactorPair{coords(t, {0, 0, 0, f.mul(four, b3)}), one_factor};
                    }},
                    {"quotient", [&]() -> std::optional<FactorPair> { return swap_quotient(trace_one()); }}});
  }
  if (b2 == 0) {
    auto trace_one = [&]() {
      return coords(t, {quarter, 0, f.div(b3, f.mul(four, b1)), f.div(b0, f.mul(four, f.mul(b1, prm)))});
    };
    return certify(t, c, target, id,
                   {{"literal", [&]() -> std::optional<FactorPair> {
                      return FactorPair{coords(t, {0, f.mul(four, b1), 0, 0}), trace_one()};
                    }},
                    {"quotient", [&]() -> std::optional<FactorPair> { return swap_quotient(trace_one()); }}});
  }
  auto trace_one = [&]() { return coords(t, {quarter, 0, f.div(b0, f.mul(four, f.mul(b2, prm))), 0}); };
  auto even_branch = [&](Elem den) {
    Elem c1 = f.div(f.sub(f.mul(b0, f.mul(b2, f.mul(b3, prm))), f.mul(b1, f.mul(f.mul(b2, b2), prm))), den);
    Elem c3 = f.div(f.sub(f.mul(b0, f.mul(b1, b2)), f.mul(f.mul(b2, b2), f.mul(b3, prm))), den);
    return t.scale(coords(t, {0, c1, b2, c3}), four);
  };
  return certify(t, c, target, id,
                 {{"literal", [&]() -> std::optional<FactorPair> {
                    return FactorPair{even_branch(f.sub(f.mul(b0, b0), f.mul(b2, prm))), trace_one()};
                  }},
                  {"squared_denominator", [&]() -> std::optional<FactorPair> {
                    return FactorPair{even_branch(f.sub(f.mul(b0, b0), f.mul(f.mul(b2, b2), prm))), trace_one()};
                  }},
                  {"quotient", [&]() -> std::optional<FactorPair> { return swap_quotient(trace_one()); }}});
}

// ---------------------------------------------------------------- dispatch

MembershipVerdict decide(const TowerCtx& t, Elem trace_a, Elem trace_b, const FieldElem& target) {
  const FieldCtx& f = t.base();
  Normalized norm = normalize(t, trace_a, trace_b, target);
  const CanonicalCase c = norm.pair.canonical_case;
  MembershipVerdict v;
  switch (t.n()) {
    case 2: v = deg2_decide(t, c, norm.target); break;
    case 3: v = deg3_decide(t, c, norm.target); break;
    case 4: v = deg4_decide(t, c, norm.target); break;
    default: return oracle(t, trace_a, trace_b, target);
  }
  if (!v.certificate) return v;
  const FieldElem& xc = v.certificate->x();
  const FieldElem& yc = v.certificate->y();
  FieldElem x, y;
  switch (c) {
    case CanonicalCase::T0T0:
      x = xc;
      y = yc;
      break;
    case CanonicalCase::T0T1:
      if (trace_a == 0) {
        x = t.scale(xc, f.inv(trace_b));
        y = t.scale(yc, trace_b);
      } else {
        x = t.scale(yc, trace_a);
        y = t.scale(xc, f.inv(trace_a));
      }
      break;
    case CanonicalCase::T1T1:
      x = t.scale(xc, trace_a);
      y = t.scale(yc, trace_b);
      break;
  }
  std::string provenance = v.certificate->provenance();
  v.certificate = TraceProductCertificate::make(t, std::move(x), std::move(y), trace_a, trace_b, target, provenance);
  if (!v.certificate) throw Error(ErrorKind::NotAField, "rescaled certificate failed validation");
  return v;
}

// ---------------------------------------------------------------- experiments

EvenCharT1T1Report deg3_even_char_t1t1_experiment(FieldPtr base) {
  if (base->p() != 2) throw Error(ErrorKind::InvalidArgument, "experiment needs even q");
  TowerPtr t = find_irreducible_special(base, FormKind::PureCubic);
  EvenCharT1T1Report r;
  r.q = base->q();
  r.cubic_param = t->tag().param;
  r.zero_solvable = pure_cubic_trace_one_solution(*t, t->zero()).has_value();
  std::vector<char> ok(t->size(), 0);
  parallel_for(1, t->size(), [&](std::uint64_t idx) {
    ok[idx] = pure_cubic_trace_one_solution(*t, t->element(idx)).has_value();
  });
  for (std::uint64_t idx = 1; idx < t->size(); ++idx) {
    ++r.nonzero_targets;
    if (ok[idx])
      ++r.solvable;
    else
      r.counterexamples.push_back(idx);
  }
  return r;
}

bool one_in(std::uint32_t q, unsigned n, CanonicalCase c) {
  FieldPtr base = field_of_order(q);
  const FieldCtx& f = *base;
  if (n == 2) {
    if (c == CanonicalCase::T0T0) return true;
    if (c == CanonicalCase::T0T1) return false;
    TowerPtr t = TowerCtx::make(base, 2);
    const Elem m1 = t->minpoly()[1], m2 = t->minpoly()[0];
    if (f.p() == 2) {
      Elem cst = f.add(f.div(m2, f.mul(m1, m1)), 1);
      return !solve_quadratic(f, 1, 1, cst).empty();
    }
    Elem lin = f.add(m1, 1);
    Elem numer = f.sub(f.mul(lin, lin), f.from_int(4));
    Elem disc = f.sub(f.mul(m1, m1), f.mul(f.from_int(4), m2));
    return is_square(f, f.div(numer, disc));
  }
  if (n == 3) {
    if (c == CanonicalCase::T0T0) return q % 3 == 0 || q % 3 == 1;
    if (c == CanonicalCase::T1T1) return f.p() == 2;
    if (q % 3 == 1) return true;
  }
  if (n == 4 && c == CanonicalCase::T0T0) return true;
  throw Error(ErrorKind::UnsupportedCase, "no closed form for 1 in this case");
}

std::vector<std::int64_t> product_witnesses(const IndexField& fx, Elem trace_a, Elem trace_b) {
  std::vector<IndexField::Idx> first, second;
  for (IndexField::Idx x = 0; x < fx.size(); ++x) {
    if (fx.trace(x) == trace_a) first.push_back(x);
    if (fx.trace(x) == trace_b) second.push_back(x);
  }
  std::vector<std::int64_t> witness(fx.size(), kNoWitness);
  for (auto x : first)
    for (auto y : second) {
      auto& slot = witness[fx.mul(x, y)];
      if (slot == kNoWitness) slot = x;
    }
  return witness;
}

SurveySummary survey(const TowerCtx& t, Elem trace_a, Elem trace_b) {
  SurveySummary s;
  s.table.resize(t.size());
  if (t.size() <= kIndexTableLimit) {
    IndexField fx(t);
    auto witness = product_witnesses(fx, trace_a, trace_b);
    for (std::uint64_t idx = 0; idx < t.size(); ++idx)
      s.table[idx] = SurveyRow{idx, witness[idx] != kNoWitness, "fiber_products.exhaustive"};
  } else {
    parallel_for(0, t.size(), [&](std::uint64_t idx) {
      MembershipVerdict v = oracle(t, trace_a, trace_b, t.element(idx));
      s.table[idx] = SurveyRow{idx, v.member, v.criterion};
    });
  }
  for (const auto& row : s.table) {
    if (row.member) {
      ++s.members;
    } else {
      ++s.non_members;
      s.non_member_indices.push_back(row.target_index);
    }
  }
  return s;
}

}  // namespace tracefield

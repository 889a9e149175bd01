#pragma once

// Membership of a target in the product set {x*y : Tr(x) = a, Tr(y) = b}.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tracefield/index_field.hpp"
#include "tracefield/tower.hpp"

namespace tracefield {

enum class CanonicalCase { T0T0, T0T1, T1T1 };

const char* to_string(CanonicalCase c);
// (trace of first factor, trace of second factor) for a canonical case.
std::pair<Elem, Elem> case_traces(CanonicalCase c);

struct TracePair {
  Elem trace_a = 0;
  Elem trace_b = 0;
  CanonicalCase canonical_case = CanonicalCase::T0T0;
  Elem scale = 0;  // trace_a * trace_b
};

struct Normalized {
  TracePair pair;
  FieldElem target;  // divided by trace_a * trace_b when both are nonzero
};

Normalized normalize(const TowerCtx& t, Elem trace_a, Elem trace_b, const FieldElem& target);

class TraceProductCertificate {
 public:
  // nullopt unless Tr(x) = trace_a, Tr(y) = trace_b and x*y = target.
  static std::optional<TraceProductCertificate> make(const TowerCtx& t, FieldElem x, FieldElem y,
                                                     Elem trace_a, Elem trace_b, FieldElem target,
                                                     std::string provenance);

  const FieldElem& x() const { return x_; }
  const FieldElem& y() const { return y_; }
  Elem trace_a() const { return trace_a_; }
  Elem trace_b() const { return trace_b_; }
  const FieldElem& target() const { return target_; }
  const std::string& provenance() const { return provenance_; }

 private:
  TraceProductCertificate() = default;
  FieldElem x_, y_, target_;
  Elem trace_a_ = 0, trace_b_ = 0;
  std::string provenance_;
};

inline constexpr const char* kOracleCriterion = "oracle.exhaustive";

struct MembershipVerdict {
  bool member = false;
  std::optional<TraceProductCertificate> certificate;
  std::string criterion;
  // Set when a closed-form certificate failed validation.
  std::optional<nlohmann::json> divergence;
};

// Scans x over T_a in canonical order and tests Tr(target / x) = b.
MembershipVerdict oracle(const TowerCtx& t, Elem trace_a, Elem trace_b, const FieldElem& target);

MembershipVerdict deg2_decide(const TowerCtx& t, CanonicalCase c, const FieldElem& target);
MembershipVerdict deg3_decide(const TowerCtx& t, CanonicalCase c, const FieldElem& target);
MembershipVerdict deg4_decide(const TowerCtx& t, CanonicalCase c, const FieldElem& target);

// Normalizes, applies the closed form for the tower when one exists, and maps
// the certificate back to (trace_a, trace_b).
MembershipVerdict decide(const TowerCtx& t, Elem trace_a, Elem trace_b, const FieldElem& target);

// Degree 3, generic route: search x with Tr(x) = eps and Tr(target * x^q * x^{q^2}) = 0.
MembershipVerdict deg3_quadratic_form_decide(const TowerCtx& t, CanonicalCase c, const FieldElem& target);

struct NormalBasis {
  std::vector<FieldElem> conjugates;  // generator, generator^q, ...
  Elem sum = 0;        // first elementary symmetric function of the conjugates
  Elem pair_sum = 0;   // second
  Elem product = 0;    // third (degree 3) / norm
};

// First element in canonical order whose conjugates are linearly independent.
NormalBasis find_normal_basis(const TowerCtx& t);
std::vector<Elem> normal_coordinates(const TowerCtx& t, const NormalBasis& nb, const FieldElem& v);
// Degree 3, odd characteristic, case T0T0 via the symmetric-function discriminant.
MembershipVerdict deg3_normal_basis_decide(const TowerCtx& t, const NormalBasis& nb, const FieldElem& target);

// Pure cubic tower: LHS - RHS of the trace-one equation for x = 1/3 + x1 alpha + x2 alpha^2.
Elem pure_cubic_trace_one_residual(const TowerCtx& t, const FieldElem& target, Elem x1, Elem x2);
std::optional<std::pair<Elem, Elem>> pure_cubic_trace_one_solution(const TowerCtx& t, const FieldElem& target);

struct EvenCharT1T1Report {
  std::uint32_t q = 0;
  Elem cubic_param = 0;
  std::uint64_t nonzero_targets = 0;
  std::uint64_t solvable = 0;
  std::vector<std::uint64_t> counterexamples;  // target indices
  bool zero_solvable = false;
  bool all_nonzero_solvable() const { return counterexamples.empty(); }
};

// q even, degree 3, pure cubic tower. NoSuchForm when q = 2 mod 3.
EvenCharT1T1Report deg3_even_char_t1t1_experiment(FieldPtr base);

// Whether 1 lies in the canonical case, by closed form. UnsupportedCase otherwise.
bool one_in(std::uint32_t q, unsigned n, CanonicalCase c);

struct SurveyRow {
  std::uint64_t target_index = 0;
  bool member = false;
  std::string criterion;
};

struct SurveySummary {
  std::uint64_t members = 0;
  std::uint64_t non_members = 0;
  std::vector<std::uint64_t> non_member_indices;
  std::vector<SurveyRow> table;
};

inline constexpr std::int64_t kNoWitness = -1;

// For every target index, the least first factor x (as an index) of a product
// x*y = target with Tr(x) = trace_a, Tr(y) = trace_b, or kNoWitness. Built by
// multiplying out the two trace fibers.
std::vector<std::int64_t> product_witnesses(const IndexField& fx, Elem trace_a, Elem trace_b);

// Membership of every target, in canonical order; uses product_witnesses
// when index tables fit, the oracle otherwise.
SurveySummary survey(const TowerCtx& t, Elem trace_a, Elem trace_b);

}  // namespace tracefield

#pragma once

// Planarity, trace-form presemifields and irreducibles with prescribed
// coefficients.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tracefield/index_field.hpp"
#include "tracefield/linear_sets.hpp"
#include "tracefield/tower.hpp"

namespace tracefield {

// Values of a map F_{q^n} -> F_{q^n}, both sides as canonical indices.
struct FunctionTable {
  TowerPtr tower;
  std::vector<std::uint32_t> values;

  static FunctionTable from_function(TowerPtr tower, const std::function<FieldElem(const FieldElem&)>& fn);
};

// Every difference map x -> F(x+y) - F(x) - F(y), y != 0, is a bijection.
bool is_planar(const FunctionTable& table);
bool is_planar(const FunctionTable& table, const IndexField& fx);

struct PlanarityRow {
  std::uint64_t scale_index = 0;       // the coefficient of x^2
  bool planar = false;                 // Tr(x)^2 + scale x^2
  bool criterion_member = false;       // -1/scale in T1T1
  bool second_family_planar = false;   // x (Tr(x) + scale x)
};

struct PlanaritySweep {
  std::uint32_t q = 0;
  unsigned n = 0;
  bool zero_scale_planar = false;
  std::vector<PlanarityRow> rows;  // nonzero scales in canonical order
  std::uint64_t planar_count = 0;
  std::uint64_t criterion_disagreements = 0;  // planar == criterion_member
  std::uint64_t second_family_planar_count = 0;
};

// Odd q. Sweeps every scale of Tr(x)^2 + scale x^2.
PlanaritySweep pn_trace_square_sweep(const TowerCtx& t);

struct FactorizationCheck {
  std::uint64_t checked_scales = 0;
  std::uint64_t mismatches = 0;
};

// For root with Tr(root) != 0 and scale = -root^2, compares
// (Tr(x) - root x)(Tr(x) + root x) with Tr(x)^2 + scale x^2 pointwise.
FactorizationCheck trace_square_factorization_check(const TowerCtx& t);

// x o y = L1(x) L2(y) - x y has no zero divisors; exhaustive double loop.
bool is_presemifield(const TowerCtx& t, const LinearizedPoly& first, const LinearizedPoly& second);
// Same test through the quotient sets {x / L1(x)} and {L2(y) / y}.
bool is_presemifield_by_quotients(const TowerCtx& t, const LinearizedPoly& first, const LinearizedPoly& second);

LinearizedPoly trace_polynomial(const TowerCtx& t);

struct SemifieldBoundReport {
  std::uint32_t q = 0;
  unsigned n = 0;
  unsigned max_q_degree = 0;  // ceil(n/2) - 2
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t checked = 0;
  std::vector<std::uint64_t> checked_by_q_degree;
  std::vector<std::uint64_t> presemifields_by_q_degree;
  // Presemifields with q-degree >= 1 below the bound.
  std::vector<LinearizedPoly> counterexamples;
  // Scalar second maps c y (q-degree 0) giving presemifields.
  std::uint64_t degenerate_presemifields = 0;
  bool zero_map_presemifield = false;
};

// Second maps of q-degree <= ceil(n/2) - 2 against the trace as first map.
SemifieldBoundReport trace_semifield_bound_check(const TowerCtx& t, std::uint64_t budget = kDefaultSweepBudget,
                                                 std::uint64_t seed = 1);

struct PrescribedRequest {
  Elem second_coeff = 0;  // coefficient of X^{n-1}
  Elem ratio = 0;         // (coefficient of X) / (constant term)
};

struct PrescribedPoly {
  std::uint32_t q = 0;
  unsigned n = 0;
  PrescribedRequest request;
  bool guaranteed = false;
  FieldElem root;
  Poly constant_first;
  std::vector<Elem> leading_first;  // c_1, ..., c_n after the leading 1
  bool verified = false;
};

// InvalidArgument when n is not prime or the tower degree differs.
// NoWitnessFound when the search fails.
PrescribedPoly irreducible_with_prescribed(const TowerCtx& t, PrescribedRequest request);
bool prescribed_guaranteed(const FieldCtx& f, unsigned n, PrescribedRequest request);

}  // namespace tracefield

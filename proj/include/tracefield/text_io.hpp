#pragma once

// Text formats shared by the command line and reports.
//
// Field:   "p^h" or "p^h/c0,c1,...,ch" (modulus over F_p, constant term first),
//          or a bare prime power "q".
// Tower:   "n" or "n/m0,m1,...,mn" (minimal polynomial over F_q, constant first,
//          entries as packed F_q integers).
// Tag:     "General", "PureCubic", "PureCubic:3", ... (missing parameter selects
//          the smallest admissible one).
// Element: n groups of h base-p digits, group j holding the coefficient of
//          alpha^j and digit k of a group holding u^k (digits 0-9 then a-z),
//          or a comma-separated list of n packed F_q integers.

#include <optional>
#include <string>

#include <json.hpp>

#include "tracefield/applications.hpp"
#include "tracefield/curve_counter.hpp"
#include "tracefield/linear_sets.hpp"
#include "tracefield/trace_sets.hpp"
#include "tracefield/tower.hpp"

namespace tracefield {

// ParseError on malformed text; field construction errors pass through.
FieldPtr parse_field(const std::string& spec);
TowerPtr parse_tower(FieldPtr base, const std::string& spec, const std::string& tag = "");
FieldElem parse_element(const TowerCtx& t, const std::string& text);
Elem parse_base_element(const FieldCtx& f, const std::string& text);

std::string format_element(const TowerCtx& t, const FieldElem& x);
std::string format_base_element(const FieldCtx& f, Elem c);
std::string format_field(const FieldCtx& f);
std::string format_tower(const TowerCtx& t);

nlohmann::json to_json(const TowerCtx& t, const MembershipVerdict& v);
nlohmann::json to_json(const CountReport& r);
nlohmann::json to_json(const TowerCtx& t, const LinearizedPoly& f);
nlohmann::json to_json(const TowerCtx& t, const LinearSet& s);
nlohmann::json to_json(const TowerCtx& t, const ClubPairReport& r);
nlohmann::json to_json(const TowerCtx& t, const MeetReport& r);
nlohmann::json to_json(const TowerCtx& t, const PlanaritySweep& s);
nlohmann::json to_json(const TowerCtx& t, const SemifieldBoundReport& r);
nlohmann::json to_json(const TowerCtx& t, const PrescribedPoly& p);

}  // namespace tracefield

// trace-products: command line front end for the tracefield library.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tracefield/applications.hpp"
#include "tracefield/curve_counter.hpp"
#include "tracefield/error.hpp"
#include "tracefield/linear_sets.hpp"
#include "tracefield/text_io.hpp"
#include "tracefield/trace_sets.hpp"
#include "tracefield/verify.hpp"

namespace tf = tracefield;
using nlohmann::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

const char* kElementHelp =
    "Elements of F_{q^n} are written as n groups of h base-p digits (q = p^h):\n"
    "group j is the coefficient of alpha^j, lowest power first, and digit k of a\n"
    "group is the coefficient of u^k in F_q = F_p[u]. Digits run 0-9 then a-z.\n"
    "A comma list of n packed F_q integers is also accepted, and a bare decimal\n"
    "of a different length is read as the canonical index sum x_i q^i.";

struct Options {
  std::string field;         // positional
  std::string degree;        // positional, "n" or "n/m0,...,mn"
  std::string field_flag;    // --field
  std::string tower_flag;    // --tower
  std::string tower_tag;     // --tower-tag
  std::uint64_t seed = 0;
  std::uint64_t budget = tf::kDefaultSweepBudget;
  std::string format = "json";
};

struct Output {
  json config;
  json result;
  std::string csv;  // set by subcommands with a natural row table
};

tf::TowerPtr make_tower(const Options& o) {
  std::string field_spec = o.field_flag.empty() ? o.field : o.field_flag;
  tf::FieldPtr base = tf::parse_field(field_spec);
  if (!o.field_flag.empty() && !o.field.empty() && tf::parse_field(o.field)->q() != base->q())
    throw tf::Error(tf::ErrorKind::InvalidArgument, "--field disagrees with the positional field order");
  std::string tower_spec = o.tower_flag.empty() ? o.degree : o.tower_flag;
  return tf::parse_tower(base, tower_spec, o.tower_tag);
}

tf::FieldElem element_arg(const tf::TowerCtx& t, const std::string& text) {
  const bool decimal = !text.empty() && text.find_first_not_of("0123456789") == std::string::npos;
  if (decimal && text.find(',') == std::string::npos && text.size() != std::size_t{t.n()} * t.base().h()) {
    std::uint64_t idx = 0;
    std::istringstream in(text);
    in >> idx;
    if (idx >= t.size()) throw tf::Error(tf::ErrorKind::ParseError, "element index out of range: " + text);
    return t.element(idx);
  }
  return tf::parse_element(t, text);
}

json config_json(const std::string& command, const Options& o, const tf::TowerCtx* t, json args) {
  json c{{"subcommand", command}, {"seed", o.seed}, {"budget", o.budget}, {"format", o.format}, {"args", args}};
  if (t) {
    c["field"] = tf::format_field(t->base());
    c["tower"] = tf::format_tower(*t);
    c["tower_tag"] = o.tower_tag.empty() ? "General" : o.tower_tag;
  }
  return c;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

void emit(const Output& out, const std::string& format) {
  json all{{"config", out.config}, {"result", out.result}};
  if (format == "json") {
    std::cout << all.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  if (format == "csv") {
    flatten(out.config, "config", rows);
    for (const auto& [k, v] : rows) std::cout << "# " << k << "=" << v << "\n";
    if (!out.csv.empty()) {
      std::cout << out.csv;
      return;
    }
    rows.clear();
    flatten(out.result, "", rows);
    std::cout << "key,value\n";
    for (const auto& [k, v] : rows) std::cout << csv_quote(k) << "," << csv_quote(v) << "\n";
    return;
  }
  flatten(all, "", rows);
  for (const auto& [k, v] : rows) std::cout << k << ": " << v << "\n";
}

void add_common(CLI::App* cmd, Options& o, bool with_field) {
  if (with_field) {
    cmd->add_option("q", o.field, "field: q, p^h or p^h/c0,...,ch")->required();
    cmd->add_option("n", o.degree, "extension degree, optionally n/m0,...,mn")->required();
    cmd->add_option("--field", o.field_flag, "field spec overriding the positional one (same order)");
    cmd->add_option("--tower", o.tower_flag, "tower spec n/m0,...,mn overriding the positional degree");
    cmd->add_option("--tower-tag", o.tower_tag,
                    "General, PureCubic, PureQuartic, Biquadratic, ArtinSchreierCubic, optionally Kind:param");
  }
  cmd->add_option("--seed", o.seed, "seed for sampled sweeps")->capture_default_str();
  cmd->add_option("--budget", o.budget, "element-count cap for exhaustive sweeps")->capture_default_str();
  cmd->add_option("--format", o.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Products of elements with prescribed traces in finite field extensions.\n\n" +
               std::string(kElementHelp)};
  app.require_subcommand(1);
  Options o;
  int status = kExitYes;
  Output out;

  // solve
  std::string trace_a, trace_b, target_text;
  auto* solve = app.add_subcommand("solve", "decide whether beta = x y with Tr(x) = a, Tr(y) = b");
  add_common(solve, o, true);
  solve->add_option("a", trace_a, "trace of the first factor")->required();
  solve->add_option("b", trace_b, "trace of the second factor")->required();
  solve->add_option("beta", target_text, "target element")->required();
  solve->callback([&] {
    auto t = make_tower(o);
    tf::Elem a = tf::parse_base_element(t->base(), trace_a), b = tf::parse_base_element(t->base(), trace_b);
    tf::FieldElem beta = element_arg(*t, target_text);
    tf::MembershipVerdict v = tf::decide(*t, a, b, beta);
    out.config = config_json("solve", o, t.get(), {{"a", a}, {"b", b}, {"beta", tf::format_element(*t, beta)}});
    out.result = tf::to_json(*t, v);
    status = v.member ? kExitYes : kExitNo;
  });

  // survey
  auto* survey = app.add_subcommand("survey", "membership of every target in T_a T_b");
  add_common(survey, o, true);
  survey->add_option("a", trace_a, "trace of the first factor")->required();
  survey->add_option("b", trace_b, "trace of the second factor")->required();
  survey->callback([&] {
    auto t = make_tower(o);
    tf::Elem a = tf::parse_base_element(t->base(), trace_a), b = tf::parse_base_element(t->base(), trace_b);
    tf::SurveySummary s = tf::survey(*t, a, b);
    out.config = config_json("survey", o, t.get(), {{"a", a}, {"b", b}});
    json non_members = json::array();
    for (auto idx : s.non_member_indices) non_members.push_back(tf::format_element(*t, t->element(idx)));
    json rows = json::array();
    std::ostringstream csv;
    csv << "index,beta,member,criterion\n";
    for (const auto& row : s.table) {
      std::string beta = tf::format_element(*t, t->element(row.target_index));
      rows.push_back({{"index", row.target_index}, {"beta", beta}, {"member", row.member}, {"criterion", row.criterion}});
      csv << row.target_index << "," << csv_quote(beta) << "," << (row.member ? 1 : 0) << "," << row.criterion << "\n";
    }
    out.result = {{"members", s.members}, {"non_members", s.non_members}, {"non_member_elements", non_members},
                  {"rows", rows}};
    out.csv = csv.str();
  });

  // verify
  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  add_common(verify, o, false);
  std::string suite_help = "one of:";
  for (const auto& name : tf::suite_names()) suite_help += " " + name;
  verify->add_option("suite", suite, suite_help)->required();
  verify->callback([&] {
    tf::SuiteReport r = tf::run_suite(suite, tf::SuiteOptions{o.seed, o.budget});
    out.config = config_json("verify", o, nullptr, {{"suite", suite}});
    out.result = r.to_json();
    std::ostringstream csv;
    csv << "id,status,statement\n";
    for (const auto& c : out.result["claims"])
      csv << csv_quote(c["id"].get<std::string>()) << "," << c["status"].get<std::string>() << ","
          << csv_quote(c["statement"].get<std::string>()) << "\n";
    out.csv = csv.str();
    status = r.passed() ? kExitYes : kExitNo;
  });

  // curve product | club
  std::string curve_kind, alpha_text = "1", coeff_text;
  auto* curve = app.add_subcommand("curve", "count affine points of an Artin-Schreier curve");
  curve->add_option("kind", curve_kind, "product or club")->required()->check(CLI::IsMember({"product", "club"}));
  add_common(curve, o, true);
  trace_a = "1";
  trace_b = "1";
  curve->add_option("--alpha", alpha_text, "numerator of the product curve")->capture_default_str();
  curve->add_option("--a", trace_a, "trace of the offset")->capture_default_str();
  curve->add_option("--b", trace_b, "trace of the shift (product curve)")->capture_default_str();
  curve->add_option("--coeffs", coeff_text, "club curve: coefficients of f, lowest q-power first, ';'-separated");
  curve->callback([&] {
    auto t = make_tower(o);
    tf::Elem a = tf::parse_base_element(t->base(), trace_a), b = tf::parse_base_element(t->base(), trace_b);
    const tf::FieldElem offset = t->trace_preimage(a);
    if (curve_kind == "product") {
      tf::FieldElem alpha = element_arg(*t, alpha_text);
      out.config = config_json("curve", o, t.get(),
                               {{"kind", curve_kind}, {"alpha", tf::format_element(*t, alpha)}, {"a", a}, {"b", b}});
      out.result = tf::to_json(tf::count_product_curve(*t, alpha, offset, t->trace_preimage(b)));
    } else {
      tf::LinearizedPoly f;
      if (coeff_text.empty()) {
        f = tf::LinearizedPoly::monomial(*t, 1);
      } else {
        std::string part;
        std::istringstream in(coeff_text);
        while (std::getline(in, part, ';')) f.coeffs.push_back(element_arg(*t, part));
      }
      out.config = config_json("curve", o, t.get(), {{"kind", curve_kind}, {"f", tf::to_json(*t, f)}, {"a", a}});
      out.result = tf::to_json(tf::count_club_curve(*t, f, offset));
    }
    status = out.result["within_bound"].get<bool>() ? kExitYes : kExitNo;
  });

  // clubs
  auto* clubs = app.add_subcommand("clubs", "search for a pair of disjoint clubs on the default tower");
  add_common(clubs, o, true);
  clubs->callback([&] {
    auto t = make_tower(o);
    tf::ClubPairReport r = tf::disjoint_clubs_exist(t->q(), t->n());
    out.config = config_json("clubs", o, t.get(), json::object());
    out.result = tf::to_json(*t, r);
    status = r.exists ? kExitYes : kExitNo;
  });

  // pn
  auto* pn = app.add_subcommand("pn", "planarity of Tr(x)^2 + a x^2 for every a");
  add_common(pn, o, true);
  pn->callback([&] {
    auto t = make_tower(o);
    tf::PlanaritySweep s = tf::pn_trace_square_sweep(*t);
    out.config = config_json("pn", o, t.get(), json::object());
    out.result = tf::to_json(*t, s);
    std::ostringstream csv;
    csv << "a,planar,neg_inverse_in_T1T1,second_family_planar\n";
    for (const auto& row : s.rows)
      csv << csv_quote(tf::format_element(*t, t->element(row.scale_index))) << "," << row.planar << ","
          << row.criterion_member << "," << row.second_family_planar << "\n";
    out.csv = csv.str();
    status = s.criterion_disagreements == 0 ? kExitYes : kExitNo;
  });

  // semifield
  auto* semifield = app.add_subcommand("semifield", "check x o y = Tr(x) L(y) - x y for small q-degree L");
  add_common(semifield, o, true);
  semifield->callback([&] {
    auto t = make_tower(o);
    tf::SemifieldBoundReport r = tf::trace_semifield_bound_check(*t, o.budget, o.seed);
    out.config = config_json("semifield", o, t.get(), json::object());
    out.result = tf::to_json(*t, r);
    status = r.counterexamples.empty() ? kExitYes : kExitNo;
  });

  // prescribe
  std::string second_coeff, ratio;
  auto* prescribe = app.add_subcommand("prescribe", "irreducible of prime degree n with c1 = a and c_{n-1}/c_n = b");
  add_common(prescribe, o, true);
  prescribe->add_option("a", second_coeff, "coefficient of X^{n-1}")->required();
  prescribe->add_option("b", ratio, "coefficient of X divided by the constant term")->required();
  prescribe->callback([&] {
    auto t = make_tower(o);
    tf::PrescribedRequest req{tf::parse_base_element(t->base(), second_coeff), tf::parse_base_element(t->base(), ratio)};
    out.config = config_json("prescribe", o, t.get(), {{"a", req.second_coeff}, {"b", req.ratio}});
    tf::PrescribedPoly p = tf::irreducible_with_prescribed(*t, req);
    out.result = tf::to_json(*t, p);
    status = p.verified ? kExitYes : kExitNo;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitYes : kExitError;
  } catch (const tf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  emit(out, o.format);
  return status;
}

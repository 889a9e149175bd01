#include "tracefield/text_io.hpp"

#include <cctype>
#include <charconv>

#include "tracefield/error.hpp"

namespace tracefield {

namespace {

std::uint64_t parse_uint(const std::string& s, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorKind::ParseError, std::string("expected a nonnegative integer for ") + what + ", got '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

char digit_char(std::uint32_t v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10); }

}  // namespace

FieldPtr parse_field(const std::string& spec) {
  auto slash = spec.find('/');
  std::string head = spec.substr(0, slash);
  auto caret = head.find('^');
  if (caret == std::string::npos) {
    if (slash != std::string::npos) throw Error(ErrorKind::ParseError, "a modulus needs the p^h form");
    return field_of_order(parse_uint(head, "field order"));
  }
  std::uint64_t p = parse_uint(head.substr(0, caret), "characteristic");
  std::uint64_t h = parse_uint(head.substr(caret + 1), "degree");
  if (p > 0xffffffffu || h == 0 || h > 64) throw Error(ErrorKind::ParseError, "field parameters out of range");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (slash != std::string::npos) {
    std::vector<std::uint32_t> m;
    for (const auto& part : split(spec.substr(slash + 1), ',')) {
      std::uint64_t c = parse_uint(part, "modulus coefficient");
      if (c >= p) throw Error(ErrorKind::ParseError, "modulus coefficient not below p");
      m.push_back(static_cast<std::uint32_t>(c));
    }
    modulus = m;
  }
  return FieldCtx::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(h), modulus);
}

Elem parse_base_element(const FieldCtx& f, const std::string& text) {
  std::uint64_t v = parse_uint(text, "base field element");
  if (v >= f.q()) throw Error(ErrorKind::ParseError, "base field element out of range: " + text);
  return static_cast<Elem>(v);
}

TowerPtr parse_tower(FieldPtr base, const std::string& spec, const std::string& tag) {
  auto slash = spec.find('/');
  std::uint64_t n = parse_uint(spec.substr(0, slash), "extension degree");
  if (n == 0 || n > 64) throw Error(ErrorKind::ParseError, "extension degree out of range");
  std::optional<Poly> minpoly;
  if (slash != std::string::npos) {
    Poly m;
    for (const auto& part : split(spec.substr(slash + 1), ',')) m.push_back(parse_base_element(*base, part));
    minpoly = m;
  }
  if (tag.empty() || tag == "General") return TowerCtx::make(base, static_cast<unsigned>(n), minpoly);
  auto colon = tag.find(':');
  auto kind = form_from_string(tag.substr(0, colon));
  if (!kind) throw Error(ErrorKind::ParseError, "unknown tower tag '" + tag + "'");
  if (colon == std::string::npos) {
    TowerPtr t = find_irreducible_special(base, *kind);
    if (t->n() != n) throw Error(ErrorKind::InvalidArgument, "tag degree does not match n");
    if (minpoly) return TowerCtx::make(base, t->n(), minpoly, t->tag());
    return t;
  }
  TowerTag tt{*kind, parse_base_element(*base, tag.substr(colon + 1))};
  return TowerCtx::make(base, static_cast<unsigned>(n), minpoly, tt);
}

FieldElem parse_element(const TowerCtx& t, const std::string& text) {
  const FieldCtx& f = t.base();
  FieldElem x = t.zero();
  if (text.find(',') != std::string::npos) {
    auto parts = split(text, ',');
    if (parts.size() != t.n())
      throw Error(ErrorKind::ParseError, "expected " + std::to_string(t.n()) + " comma-separated coordinates");
    for (unsigned i = 0; i < t.n(); ++i) x.coeffs[i] = parse_base_element(f, parts[i]);
    return x;
  }
  if (f.p() > 36) throw Error(ErrorKind::ParseError, "use the comma-separated form when p > 36");
  if (text.size() != std::size_t{t.n()} * f.h())
    throw Error(ErrorKind::ParseError, "element '" + text + "' must have " + std::to_string(t.n() * f.h()) +
                                           " base-" + std::to_string(f.p()) + " digits");
  for (unsigned j = 0; j < t.n(); ++j) {
    std::vector<std::uint32_t> digits(f.h());
    for (unsigned k = 0; k < f.h(); ++k) {
      int d = digit_value(text[j * f.h() + k]);
      if (d < 0 || static_cast<std::uint32_t>(d) >= f.p())
        throw Error(ErrorKind::ParseError, "bad digit in element '" + text + "'");
      digits[k] = static_cast<std::uint32_t>(d);
    }
    x.coeffs[j] = f.from_digits(digits);
  }
  return x;
}

std::string format_element(const TowerCtx& t, const FieldElem& x) {
  const FieldCtx& f = t.base();
  std::string out;
  if (f.p() > 36) {
    for (unsigned i = 0; i < t.n(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(x.coeffs[i]);
    }
    return out;
  }
  for (unsigned i = 0; i < t.n(); ++i) {
    auto digits = f.digits(x.coeffs[i]);
    for (unsigned k = 0; k < f.h(); ++k) out.push_back(digit_char(k < digits.size() ? digits[k] : 0));
  }
  return out;
}

std::string format_base_element(const FieldCtx&, Elem c) { return std::to_string(c); }

std::string format_field(const FieldCtx& f) {
  std::string out = std::to_string(f.p()) + "^" + std::to_string(f.h()) + "/";
  for (std::size_t i = 0; i < f.modulus().size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(f.modulus()[i]);
  }
  return out;
}

std::string format_tower(const TowerCtx& t) {
  std::string out = std::to_string(t.n()) + "/";
  for (std::size_t i = 0; i < t.minpoly().size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(t.minpoly()[i]);
  }
  return out;
}

nlohmann::json to_json(const TowerCtx& t, const MembershipVerdict& v) {
  nlohmann::json j{{"member", v.member}, {"criterion", v.criterion}};
  if (v.certificate) {
    const auto& c = *v.certificate;
    j["certificate"] = {{"x", format_element(t, c.x())},
                        {"y", format_element(t, c.y())},
                        {"trace_x", c.trace_a()},
                        {"trace_y", c.trace_b()},
                        {"product", format_element(t, c.target())},
                        {"provenance", c.provenance()}};
  } else {
    j["certificate"] = nullptr;
  }
  j["divergence"] = v.divergence ? *v.divergence : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const CountReport& r) {
  return {{"q", r.q},
          {"n", r.n},
          {"kind", r.kind},
          {"genus", r.genus},
          {"N", r.affine_count},
          {"pole_count", r.pole_count},
          {"bounds", {{"lower", r.hw_lower}, {"upper", r.hw_upper}, {"slack", r.slack}}},
          {"within_bound", r.within_bound}};
}

nlohmann::json to_json(const TowerCtx& t, const LinearizedPoly& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.coeffs) coeffs.push_back(format_element(t, c));
  return {{"coefficients", coeffs}, {"q_degree", f.q_degree(t)}};
}

nlohmann::json to_json(const TowerCtx& t, const LinearSet& s) {
  nlohmann::json points = nlohmann::json::array();
  for (std::size_t i = 0; i < s.points.size(); ++i)
    points.push_back({{"point", {format_element(t, s.points[i].first), format_element(t, s.points[i].second)}},
                      {"weight", s.weights[i]}});
  return {{"source", s.source}, {"rank", s.rank}, {"size", s.points.size()}, {"points", points}};
}

nlohmann::json to_json(const TowerCtx& t, const ClubPairReport& r) {
  return {{"q", r.q},
          {"n", r.n},
          {"exists", r.exists},
          {"witness_alpha", r.witness ? nlohmann::json(format_element(t, *r.witness)) : nlohmann::json(nullptr)},
          {"witness_verified", r.witness_verified}};
}

nlohmann::json to_json(const TowerCtx& t, const MeetReport& r) {
  nlohmann::json first = nlohmann::json::array();
  for (const auto& f : r.first_violations) first.push_back(to_json(t, f));
  return {{"q", r.q},
          {"n", r.n},
          {"max_q_degree", r.max_q_degree},
          {"exhaustive", r.exhaustive},
          {"seed", r.seed},
          {"checked", r.checked},
          {"violations", r.violations},
          {"checked_by_q_degree", r.checked_by_q_degree},
          {"violations_by_q_degree", r.violations_by_q_degree},
          {"first_violations", first}};
}

nlohmann::json to_json(const TowerCtx& t, const PlanaritySweep& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : s.rows)
    rows.push_back({{"scale", format_element(t, t.element(row.scale_index))},
                    {"planar", row.planar},
                    {"neg_inverse_in_T1T1", row.criterion_member},
                    {"second_family_planar", row.second_family_planar}});
  return {{"q", s.q},
          {"n", s.n},
          {"zero_scale_planar", s.zero_scale_planar},
          {"planar_count", s.planar_count},
          {"criterion_disagreements", s.criterion_disagreements},
          {"second_family_planar_count", s.second_family_planar_count},
          {"rows", rows}};
}

nlohmann::json to_json(const TowerCtx& t, const SemifieldBoundReport& r) {
  nlohmann::json ce = nlohmann::json::array();
  for (const auto& f : r.counterexamples) ce.push_back(to_json(t, f));
  return {{"q", r.q},
          {"n", r.n},
          {"max_q_degree", r.max_q_degree},
          {"exhaustive", r.exhaustive},
          {"seed", r.seed},
          {"checked", r.checked},
          {"checked_by_q_degree", r.checked_by_q_degree},
          {"presemifields_by_q_degree", r.presemifields_by_q_degree},
          {"counterexamples", ce},
          {"degenerate_scalar_presemifields", r.degenerate_presemifields},
          {"zero_map_presemifield", r.zero_map_presemifield}};
}

nlohmann::json to_json(const TowerCtx& t, const PrescribedPoly& p) {
  return {{"q", p.q},
          {"n", p.n},
          {"a", p.request.second_coeff},
          {"b", p.request.ratio},
          {"guaranteed", p.guaranteed},
          {"witness_alpha", format_element(t, p.root)},
          {"leading_first", p.leading_first},
          {"constant_first", p.constant_first},
          {"verified", p.verified}};
}

}  // namespace tracefield

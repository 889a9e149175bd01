// Acceptance battery: one line per criterion, exit status nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tracefield/verify.hpp"

using namespace tracefield;

namespace {

struct Criterion {
  int number;
  const char* name;
  double time_limit_s;
  const char* suite;
  // Claims of the suite that decide the criterion; empty selects all.
  std::vector<std::string> prefixes;
};

const std::vector<Criterion> kCriteria = {
    {1, "every nonzero target factors with any traces", 60, "th1", {}},
    {2, "degree-2 closed forms match products", 10, "deg2", {}},
    {3, "degree-3 closed forms match products", 30, "deg3", {}},
    {4, "degree-4 certificates and membership of 1", 30, "deg4", {}},
    {5, "curve count identity and envelope", 60, "curves", {"curves.product.", "curves.envelope"}},
    {6, "disjoint club pairs", 60, "clubs", {"clubs.exist.", "clubs.none."}},
    {7, "every graph of q-degree <= 1 meets the club at (2,5)", 30, "disj", {"disj.q2n5.all"}},
    {8, "planarity of Tr(x)^2 + a x^2", 120, "pn", {"pn.criterion.", "pn.none_planar."}},
    {9, "irreducibles with prescribed coefficients", 30, "prescribed", {"prescribed.q"}},
    {10, "even characteristic trace-one equation", 30, "evenchar-t1t1", {}},
    {11, "property suites", 120, "properties", {}},
};

bool selected(const Criterion& c, const Claim& claim) {
  if (claim.informational) return false;
  if (c.prefixes.empty()) return true;
  for (const auto& p : c.prefixes)
    if (claim.id.rfind(p, 0) == 0) return true;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  bool verbose = false;
  app.add_option("--only", only, "run a single criterion");
  app.add_flag("-v,--verbose", verbose, "print every claim");
  CLI11_PARSE(app, argc, argv);

  bool all_passed = true;
  for (const auto& c : kCriteria) {
    if (only && c.number != only) continue;
    auto start = std::chrono::steady_clock::now();
    SuiteReport report = run_suite(c.suite);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    int checked = 0, failed = 0;
    std::string first_failure;
    for (const auto& claim : report.claims) {
      if (verbose)
        std::printf("    %-5s %s %s\n", claim.informational ? "info" : (claim.passed ? "pass" : "FAIL"),
                    claim.id.c_str(), claim.detail.dump().c_str());
      if (!selected(c, claim)) continue;
      ++checked;
      if (!claim.passed) {
        ++failed;
        if (first_failure.empty()) first_failure = claim.id + " " + claim.detail.dump();
      }
    }
    bool in_time = elapsed <= c.time_limit_s;
    bool ok = checked > 0 && failed == 0 && in_time;
    all_passed = all_passed && ok;
    std::printf("criterion %2d %s  %s  claims=%d failed=%d time=%.2fs limit=%.0fs\n", c.number, ok ? "PASS" : "FAIL",
                c.name, checked, failed, elapsed, c.time_limit_s);
    if (!first_failure.empty()) std::printf("    first failure: %.600s\n", first_failure.c_str());
    if (!in_time) std::printf("    over the time limit\n");
    std::fflush(stdout);
  }
  return all_passed ? 0 : 1;
}

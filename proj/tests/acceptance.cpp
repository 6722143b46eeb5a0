// Acceptance run: one line per criterion, nonzero exit on any failure.
// A criterion fails if any of its checks fails, if it throws, or if it runs
// past its time budget.

#include <chrono>
#include <cstdio>

#include "voas/suites.hpp"

using namespace voas;

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  double budget_s;
};

const Criterion kCriteria[] = {
    {1, "genus-zero reduction identity", "zhu0", 60},
    {2, "genus-zero Ward identity", "ward0", 30},
    {3, "kernel-choice independence", "kernel-independence", 30},
    {4, "genus-zero Moebius invariance", "mobius0", 30},
    {5, "sewing-matrix consistency", "atilde", 60},
    {6, "Bers quasiform cross-validation", "psi-crosscheck", 120},
    {7, "Theta-form spanning dimension", "theta-rank", 60},
    {8, "quasi-periodicity / Theta consistency", "theta-consistency", 60},
    {9, "genus-g formal Moebius invariance", "mobius-g-partition", 300},
    {10, "degeneration to lower genus", "degeneration", 60},
    {11, "genus-g Ward identity", "ward-g", 300},
    {12, "genus-g Zhu reduction", "zhu-g", 300},
    {13, "VOA axiom suite", "fock", 60},
};

}  // namespace

int main() {
  SuiteOptions opts;
  int failed = 0;
  for (const auto& c : kCriteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
      const Suite* s = find_suite(c.suite);
      if (!s) throw std::runtime_error("no such suite");
      auto results = (*s)(opts);
      int bad = 0;
      for (auto& r : results)
        if (!r.pass) {
          ++bad;
          detail += " [" + r.check + ": " + format_double(r.residual_norm) + " > " + format_double(r.tolerance) + "]";
        }
      pass = bad == 0 && !results.empty();
      detail = std::to_string(results.size() - bad) + "/" + std::to_string(results.size()) + " checks" + detail;
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("error: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= c.budget_s) {
      pass = false;
      detail += " [over time budget]";
    }
    if (!pass) ++failed;
    std::printf("%s  %2d  %-40s suite=%-20s %7.2fs / %3.0fs  %s\n", pass ? "PASS" : "FAIL", c.id, c.title, c.suite, secs, c.budget_s,
                detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(kCriteria)) - failed, std::size(kCriteria));
  return failed == 0 ? 0 : 1;
}

// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances and sweep bounds are pinned here, not configurable.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "g2tk/verify.hpp"

using namespace g2tk;

namespace {

struct Criterion {
  std::string label;
  double budget_seconds;
  void (*run)(CheckList&);
};

int g_failures = 0;

void report(const Criterion& cr, const CheckList& c, double seconds) {
  bool ok = c.failures.empty();
  bool in_budget = cr.budget_seconds <= 0.0 || seconds <= cr.budget_seconds;
  if (!in_budget) ++g_failures;
  if (!ok) ++g_failures;
  std::printf("[%s] %s (%d cases, %.2fs%s)\n", ok && in_budget ? "PASS" : "FAIL", cr.label.c_str(),
              c.cases, seconds, in_budget ? "" : ", over budget");
  int shown = 0;
  for (const std::string& f : c.failures) {
    std::printf("       %s\n", f.c_str());
    if (++shown >= 6) {
      std::printf("       ... %zu more\n", c.failures.size() - 6);
      break;
    }
  }
  std::fflush(stdout);
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1. kernel basis, bracket families, Jacobi sweep", 10.0,
       [](CheckList& c) { check_lie_structure(c); }},
      {"2. Cartan involution, positivity, pairing values", 0.0, [](CheckList& c) { check_cartan(c); }},
      {"3. sl2 triples, eigenvalues, Iwasawa displays", 0.0, [](CheckList& c) { check_triples(c); }},
      {"4. graded model structure constants", 0.0, [](CheckList& c) { check_z3_model(c); }},
      {"5. orthogonal realization of the parabolic", 0.0,
       [](CheckList& c) { check_so7(c, 0, 200); }},
      {"6. cubic ring tables and sublattice content lemma", 0.0,
       [](CheckList& c) {
         check_cubic_tables(c, 0, 100);
         check_gl2z_equivariance(c, 0, 200);
         check_content_lemma(c, 5);
         check_content_lemma(c, 7);
         check_val_content_lemma(c, 5, 4);
       }},
      {"7. twisted character sums match closed forms", 120.0,
       [](CheckList& c) { check_expsums(c, 5); }},
      {"8. local cubic-ring identity, p in {5,7}, all types", 0.0,
       [](CheckList& c) {
         for (long p : {5L, 7L})
           for (SplittingType t :
                {SplittingType::kSplit, SplittingType::kPartial, SplittingType::kInert})
             check_crident(c, p, t, 6, 3);
       }},
      {"9. coefficient row assembly against direct enumeration", 0.0,
       [](CheckList& c) { check_dirichlet_rows(c); }},
      {"10. Bessel, differential system, Mellin, gamma ratios", 300.0,
       [](CheckList& c) {
         check_bessel(c, 1e-8);
         check_fe_system(c, false, 1e-4, 1e-5);
         check_collapse_phase(c, 1e-6, 1e-10);
         check_mellin_multinomial(c, 1e-6);
         check_gamma_ratio(c);
         check_jnu(c);
       }},
  };

  for (const Criterion& cr : criteria) {
    CheckList c;
    auto start = std::chrono::steady_clock::now();
    cr.run(c);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(cr, c, seconds);
  }
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}

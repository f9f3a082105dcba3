#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "g2tk/local_zeta.hpp"

namespace g2tk {

struct CheckList {
  int cases = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& label) {
    ++cases;
    if (!ok) failures.push_back(label);
  }
  bool ok() const { return failures.empty(); }
};

struct VerifyConfig {
  uint64_t seed = 0;
  long p = 5;
  SplittingType type = SplittingType::kSplit;
  int max_val = 6;
  int max_content = 3;
  int samples = 200;
  double step = 1e-4;
  // numeric gates; the acceptance run pins these same values
  double bessel_tol = 1e-8;
  double fe_tol = 1e-5;
  double collapse_tol = 1e-6;
  double phase_tol = 1e-10;
  double mellin_tol = 1e-6;
  bool quick = false;
};

// Exact algebra checks.
void check_octonion(CheckList& c, uint64_t seed, int samples);
void check_lie_structure(CheckList& c);    // kernel ranks, bracket families, Jacobi
void check_cartan(CheckList& c);           // theta, B_theta positivity, pairing values
void check_triples(CheckList& c);          // sl2-triples, eigenvalues, Iwasawa displays
void check_z3_model(CheckList& c);         // graded-model structure constants
void check_lie_extra(CheckList& c, uint64_t seed);  // wedge examples, nilradical, invariance
void check_so7(CheckList& c, uint64_t seed, int samples);

// Cubic ring checks.
void check_cubic_tables(CheckList& c, uint64_t seed, int samples);
void check_gl2z_equivariance(CheckList& c, uint64_t seed, int samples);
void check_content_lemma(CheckList& c, long p);
void check_val_content_lemma(CheckList& c, long p, int max_val);
void check_hnf(CheckList& c, uint64_t seed);

// Local zeta checks.
void check_ph_b0(CheckList& c, long p);
void check_crident(CheckList& c, long p, SplittingType t, int max_val, int max_content);
void check_expsums(CheckList& c, long p);
void check_dirichlet_rows(CheckList& c);

// Numerical checks.
void check_bessel(CheckList& c, double tol = 1e-8);
void check_fe_system(CheckList& c, bool quick, double step = 1e-4, double tol = 1e-5);
void check_collapse_phase(CheckList& c, double collapse_tol = 1e-6, double phase_tol = 1e-10);
void check_mellin_multinomial(CheckList& c, double tol = 1e-6);
void check_gamma_ratio(CheckList& c);
void check_jnu(CheckList& c);

struct SuiteReport {
  std::string name;
  int cases = 0;
  std::vector<std::string> failures;
  double seconds = 0.0;
  bool ok() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();  // lie octonion so7 cubic zeta whittaker
SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);

}  // namespace g2tk

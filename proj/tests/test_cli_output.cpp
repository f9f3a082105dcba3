#include <doctest.h>

#include <json.hpp>

#include "g2tk/g2_lie.hpp"
#include "g2tk/verify.hpp"

using namespace g2tk;

TEST_CASE("structure table dump is valid JSON and deterministic") {
  std::string a = bracket_table_json();
  std::string b = bracket_table_json();
  CHECK(a == b);
  nlohmann::json parsed = nlohmann::json::parse(a);
  CHECK(parsed.is_array());
  CHECK(parsed.size() == kG2Dim * kG2Dim);
  // first entry shape
  CHECK(parsed[0].contains("i"));
  CHECK(parsed[0].contains("j"));
  CHECK(parsed[0]["coeffs"].size() == kG2Dim);
}

TEST_CASE("suite reports are deterministic under a fixed seed") {
  VerifyConfig cfg;
  cfg.quick = true;
  cfg.seed = 42;
  SuiteReport a = run_suite("octonion", cfg);
  SuiteReport b = run_suite("octonion", cfg);
  CHECK(a.cases == b.cases);
  CHECK(a.failures == b.failures);
  CHECK(a.ok());
  // exit contract: failures empty <=> ok
  CHECK((a.failures.empty() == a.ok()));
  CHECK_THROWS_AS(run_suite("nosuch", cfg), std::invalid_argument);
}

TEST_CASE("enumeration rows are sorted by canonical keys") {
  BinaryCubic f = sample_form(5, SplittingType::kSplit);
  std::vector<LocalRow> rows = local_dirichlet(f, 5, 3);
  for (size_t i = 1; i < rows.size(); ++i) {
    bool ordered = rows[i - 1].z_exp < rows[i].z_exp ||
                   (rows[i - 1].z_exp == rows[i].z_exp &&
                    (rows[i - 1].lambda_val < rows[i].lambda_val ||
                     (rows[i - 1].lambda_val == rows[i].lambda_val &&
                      (rows[i - 1].cls < rows[i].cls || rows[i - 1].cls == rows[i].cls))));
    CHECK(ordered);
  }
}

// Batch entry point: verification suites, enumerations and evaluations with
// machine-readable output.  Exit codes: 0 success, 1 failed checks, 2 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "g2tk/arch.hpp"
#include "g2tk/g2_lie.hpp"
#include "g2tk/verify.hpp"

using json = nlohmann::ordered_json;
using namespace g2tk;

namespace {

BinaryCubic cubic_from_string(const std::string& s) {
  WVector w = parse_wvector(s);
  if (!w.is_integral()) throw CLI::ValidationError("--fmax", "coefficients must be integers");
  BinaryCubic f;
  f.a = w.a.get_num();
  f.b = w.cb().get_num();
  f.c = w.cc().get_num();
  f.d = w.d.get_num();
  return f;
}

json lattice_json(const LatticeClass& cls) {
  MatQ h = cls.rep();
  return json::array({json::array({h(0, 0).get_str(), h(0, 1).get_str()}),
                      json::array({h(1, 0).get_str(), h(1, 1).get_str()})});
}

json poly_json(const ZetaPoly& p) {
  json out;
  out["shift"] = p.lowest_exp();
  json coeffs = json::array();
  for (int e = p.lowest_exp(); e <= p.degree(); ++e) coeffs.push_back(p.coeff(e).get_str());
  if (p.is_zero()) coeffs = json::array({"0"});
  out["coeffs"] = coeffs;
  out["text"] = p.str();
  return out;
}

int emit_suite_report(const SuiteReport& rep, bool as_json) {
  if (as_json) {
    json out;
    out["suite"] = rep.name;
    out["cases"] = rep.cases;
    out["failures"] = rep.failures;
    out["seconds"] = rep.seconds;
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("suite %-10s cases=%d failures=%zu time=%.2fs\n", rep.name.c_str(), rep.cases,
                rep.failures.size(), rep.seconds);
    for (const std::string& f : rep.failures) std::printf("  FAIL %s\n", f.c_str());
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numerical checks for the split octonion / cubic ring toolkit"};
  app.require_subcommand(1);

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  VerifyConfig cfg;
  std::string type_str = "split";
  bool vjson = false;
  verify->add_option("--suite", suite, "lie|octonion|so7|cubic|zeta|whittaker|all")->required();
  verify->add_option("--seed", cfg.seed, "seed for randomized checks");
  verify->add_option("--p", cfg.p, "prime for the local suites");
  verify->add_option("--type", type_str, "split|partial|inert");
  verify->add_option("--max-val", cfg.max_val, "determinant valuation bound");
  verify->add_option("--max-content", cfg.max_content, "content bound");
  verify->add_option("--samples", cfg.samples, "randomized sample count");
  verify->add_option("--step", cfg.step, "finite difference step");
  verify->add_option("--bessel-tol", cfg.bessel_tol, "Bessel identity gate");
  verify->add_option("--fe-tol", cfg.fe_tol, "differential system residual gate");
  verify->add_option("--collapse-tol", cfg.collapse_tol, "profile collapse gate");
  verify->add_option("--phase-tol", cfg.phase_tol, "phase recursion gate");
  verify->add_option("--mellin-tol", cfg.mellin_tol, "transform identity gate");
  verify->add_flag("--quick", cfg.quick, "reduced sweeps");
  verify->add_flag("--json", vjson, "JSON report");

  // ---- table ----
  auto* table = app.add_subcommand("table", "enumerations as JSON on stdout");
  std::string kind;
  std::string t_fmax = "0,1,-1,0";
  long t_p = 5;
  int t_maxval = 2, t_grid = 3, t_n = 2, t_maxcontent = 3;
  std::string t_type = "split", t_w = "0,1,-1,0";
  table->add_option("kind", kind, "subrings|dirichlet|crident|whittaker")->required();
  table->add_option("--p", t_p, "prime");
  table->add_option("--fmax", t_fmax, "binary cubic a,b,c,d");
  table->add_option("--max-val", t_maxval, "determinant valuation bound");
  table->add_option("--max-content", t_maxcontent, "content bound");
  table->add_option("--type", t_type, "split|partial|inert");
  table->add_option("--n", t_n, "weight");
  table->add_option("--w", t_w, "symplectic vector a,b,c,d");
  table->add_option("--grid", t_grid, "grid points per axis");
  std::string t_primes = "5:split";
  long t_bound = 35;
  table->add_option("--primes", t_primes, "p:type list, comma separated");
  table->add_option("--bound", t_bound, "height bound for dirichlet rows");

  // ---- crident ----
  auto* cr = app.add_subcommand("crident", "both sides of the local cubic-ring identity");
  long c_p = 5;
  std::string c_type = "split";
  int c_maxcontent = 3, c_maxval = 6;
  std::string c_fmax;
  bool c_json = false;
  cr->add_option("--p", c_p, "prime")->required();
  cr->add_option("--type", c_type, "split|partial|inert")->required();
  cr->add_option("--max-content", c_maxcontent, "content bound");
  cr->add_option("--max-val", c_maxval, "determinant valuation bound");
  cr->add_option("--fmax", c_fmax, "override the sample form");
  cr->add_flag("--json", c_json, "JSON output");

  // ---- expsum ----
  auto* ex = app.add_subcommand("expsum", "brute-force twisted character sum");
  long e_p = 5;
  int e_k = 1, e_r = 0;
  std::string e_fmax = "1,0,-1,0";
  ex->add_option("--p", e_p, "prime")->required();
  ex->add_option("--k", e_k, "congruence level")->required();
  ex->add_option("--r", e_r, "diagonal twist");
  ex->add_option("--fmax", e_fmax, "binary cubic a,b,c,d");

  // ---- dirichlet ----
  auto* di = app.add_subcommand("dirichlet", "global coefficient rows");
  std::string d_primes = "5:split,7:inert";
  long d_bound = 35;
  std::string d_fmax;
  bool d_json = true;
  di->add_option("--primes", d_primes, "p:type list, comma separated");
  di->add_option("--bound", d_bound, "height bound");
  di->add_option("--fmax", d_fmax, "override form used at every prime");
  di->add_flag("--json", d_json, "JSON output");

  // ---- whittaker ----
  auto* wh = app.add_subcommand("whittaker", "component values");
  int w_n = 2;
  std::string w_w = "0,1,-1,0";
  double w_x = 0.1, w_y = 1.3, w_scale = 0.7;
  int w_grid = 0;
  wh->add_option("--n", w_n, "weight");
  wh->add_option("--w", w_w, "symplectic vector a,b,c,d");
  wh->add_option("--x", w_x, "x coordinate");
  wh->add_option("--y", w_y, "y coordinate");
  wh->add_option("--scale", w_scale, "similitude coordinate");
  wh->add_option("--grid", w_grid, "also print a grid of this size per axis");

  // ---- odecheck ----
  auto* ode = app.add_subcommand("odecheck", "differential system residuals");
  int o_n = 2;
  std::string o_w = "0,1,-1,0";
  double o_x = 0.1, o_y = 1.3, o_scale = 0.7, o_step = 1e-4;
  ode->add_option("--n", o_n, "weight");
  ode->add_option("--w", o_w, "symplectic vector a,b,c,d");
  ode->add_option("--x", o_x, "x coordinate");
  ode->add_option("--y", o_y, "y coordinate");
  ode->add_option("--scale", o_scale, "similitude coordinate");
  ode->add_option("--step", o_step, "finite difference step");

  // ---- archcheck ----
  auto* arch = app.add_subcommand("archcheck", "archimedean identity suites");
  std::string a_suite = "bessel";
  arch->add_option("--suite", a_suite, "bessel|mellin|multinomial|jnu")->required();

  // ---- bracket-table ----
  app.add_subcommand("bracket-table", "JSON dump of the derived structure-constant table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      cfg.type = parse_splitting_type(type_str);
      if (suite == "all") {
        int rc = 0;
        for (const std::string& name : suite_names()) rc |= emit_suite_report(run_suite(name, cfg), vjson);
        return rc;
      }
      bool known = false;
      for (const std::string& name : suite_names()) known |= (name == suite);
      if (!known) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return 2;
      }
      return emit_suite_report(run_suite(suite, cfg), vjson);
    }

    if (table->parsed()) {
      if (kind == "subrings") {
        BinaryCubic f = cubic_from_string(t_fmax);
        json out;
        out["p"] = t_p;
        out["fmax"] = json::array({f.a.get_str(), f.b.get_str(), f.c.get_str(), f.d.get_str()});
        json classes = json::array();
        for (const SubringClass& s : subring_enum(f, t_p, t_maxval)) {
          json row;
          row["hnf"] = lattice_json(s.cls);
          row["content"] = s.content;
          row["val_det"] = s.det_val;
          row["is_ring"] = true;
          classes.push_back(row);
        }
        out["classes"] = classes;
        std::cout << out.dump(2) << "\n";
        return 0;
      }
      if (kind == "crident") {
        SplittingType tt = parse_splitting_type(t_type);
        BinaryCubic f = t_fmax == "0,1,-1,0" && tt != SplittingType::kSplit ? sample_form(t_p, tt)
                                                                            : cubic_from_string(t_fmax);
        if (splitting_type(f, t_p) != tt) f = sample_form(t_p, tt);
        json out;
        out["p"] = t_p;
        out["type"] = splitting_type_name(tt);
        out["fmax"] = json::array({f.a.get_str(), f.b.get_str(), f.c.get_str(), f.d.get_str()});
        json rows = json::array();
        for (const SubringClass& s : subring_enum(f, t_p, t_maxval)) {
          if (s.content > t_maxcontent) continue;
          CridentResult res = verify_crident(s.cls, tt, f);
          json row;
          row["hnf"] = lattice_json(s.cls);
          row["content"] = res.content;
          row["val_det"] = res.det_val;
          row["lhs"] = poly_json(res.lhs);
          row["rhs"] = poly_json(res.rhs);
          row["equal"] = res.equal;
          rows.push_back(row);
        }
        out["classes"] = rows;
        std::cout << out.dump(2) << "\n";
        return 0;
      }
      if (kind == "whittaker") {
        WVector wv = parse_wvector(t_w);
        json out;
        out["n"] = t_n;
        out["w"] = t_w;
        json rows = json::array();
        for (int ix = 0; ix < t_grid; ++ix)
          for (int iy = 0; iy < t_grid; ++iy) {
            double x = -0.4 + 0.4 * ix, y = 0.8 + 0.5 * iy;
            WhittakerParams p{t_n, wv, x, y, 1.0};
            json row;
            row["x"] = x;
            row["y"] = y;
            json comps = json::array();
            for (int v = -t_n; v <= t_n; ++v) {
              Cplx val = whittaker_component(p, v);
              comps.push_back(json{{"component", v}, {"value_re", val.real()}, {"value_im", val.imag()}});
            }
            row["components"] = comps;
            rows.push_back(row);
          }
        out["grid"] = rows;
        std::cout << out.dump(2) << "\n";
        return 0;
      }
      if (kind == "dirichlet") {
        // fall through to the dirichlet assembler below with table defaults
        d_primes = t_primes;
        d_bound = t_bound;
      } else {
        std::cerr << "unknown table kind '" << kind << "'\n";
        return 2;
      }
    }

    if (di->parsed() || (table->parsed() && kind == "dirichlet")) {
      std::vector<LocalData> primes;
      const std::string& list = d_primes;
      size_t pos = 0;
      while (pos < list.size()) {
        size_t comma = list.find(',', pos);
        std::string item = list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t colon = item.find(':');
        if (colon == std::string::npos) {
          std::cerr << "bad --primes entry '" << item << "'\n";
          return 2;
        }
        LocalData loc;
        loc.p = std::stol(item.substr(0, colon));
        loc.type = parse_splitting_type(item.substr(colon + 1));
        loc.fmax = d_fmax.empty() ? sample_form(loc.p, loc.type) : cubic_from_string(d_fmax);
        primes.push_back(loc);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      json out;
      json ps = json::array();
      for (const LocalData& loc : primes)
        ps.push_back(json{{"p", loc.p}, {"type", splitting_type_name(loc.type)}});
      out["primes"] = ps;
      out["bound"] = d_bound;
      json rows = json::array();
      for (const GlobalRow& r : dirichlet_global_rows(primes, Integer(d_bound)))
        rows.push_back(json{{"index", r.index.get_str()}, {"n", r.n.get_str()}, {"count", r.count}});
      out["rows"] = rows;
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (cr->parsed()) {
      SplittingType tt = parse_splitting_type(c_type);
      BinaryCubic f = c_fmax.empty() ? sample_form(c_p, tt) : cubic_from_string(c_fmax);
      json out;
      out["p"] = c_p;
      out["type"] = splitting_type_name(tt);
      json rows = json::array();
      bool all_ok = true;
      for (const SubringClass& s : subring_enum(f, c_p, c_maxval)) {
        if (s.content > c_maxcontent) continue;
        CridentResult res = verify_crident(s.cls, tt, f);
        all_ok &= res.equal;
        json row;
        row["hnf"] = lattice_json(s.cls);
        row["val_det"] = res.det_val;
        row["content"] = res.content;
        row["lhs"] = res.lhs.str();
        row["rhs"] = res.rhs.str();
        row["equal"] = res.equal;
        rows.push_back(row);
      }
      out["classes"] = rows;
      out["all_equal"] = all_ok;
      if (c_json)
        std::cout << out.dump(2) << "\n";
      else
        std::printf("%s p=%ld classes=%zu all_equal=%s\n", splitting_type_name(tt), c_p, rows.size(),
                    all_ok ? "true" : "false");
      return all_ok ? 0 : 1;
    }

    if (ex->parsed()) {
      BinaryCubic f = cubic_from_string(e_fmax);
      ExpSumResult res = exp_sum_dchi(e_p, e_k, e_r, f);
      json out;
      out["p"] = e_p;
      out["k"] = e_k;
      out["r"] = e_r;
      out["fmax"] = e_fmax;
      out["criterion_zero"] = res.criterion_zero;
      out["raw_re"] = res.raw.real();
      out["raw_im"] = res.raw.imag();
      out["normalized_re"] = res.normalized.real();
      out["normalized_im"] = res.normalized.imag();
      if (res.has_closed_form) out["closed_form"] = res.closed_form;
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (wh->parsed()) {
      WVector wv = parse_wvector(w_w);
      json out;
      out["n"] = w_n;
      out["w"] = w_w;
      auto record_point = [&](double x, double y, double scale) {
        WhittakerParams p{w_n, wv, x, y, scale};
        json comps = json::array();
        for (int v = -w_n; v <= w_n; ++v) {
          Cplx val = whittaker_component(p, v);
          comps.push_back(json{{"component", v}, {"value_re", val.real()}, {"value_im", val.imag()}});
        }
        return json{{"x", x}, {"y", y}, {"scale", scale}, {"components", comps}};
      };
      if (w_grid > 0) {
        json rows = json::array();
        for (int i = 0; i < w_grid; ++i) rows.push_back(record_point(w_x, w_y, w_scale * (1.0 + 0.5 * i)));
        out["grid"] = rows;
      } else {
        out["point"] = record_point(w_x, w_y, w_scale);
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (ode->parsed()) {
      WVector wv = parse_wvector(o_w);
      WhittakerParams p{o_n, wv, o_x, o_y, o_scale};
      OdeReport rep = ode_residuals(p, o_step);
      json out;
      out["n"] = o_n;
      out["w"] = o_w;
      out["step"] = o_step;
      out["max_rel_residual"] = rep.max_rel_residual;
      out["families"] = json::array({rep.family_max[0], rep.family_max[1], rep.family_max[2],
                                     rep.family_max[3]});
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (arch->parsed()) {
      CheckList c;
      if (a_suite == "bessel")
        check_bessel(c);
      else if (a_suite == "mellin")
        check_mellin_multinomial(c);
      else if (a_suite == "multinomial") {
        for (int m = 0; m <= 5; ++m) {
          MultinomialBessel mb = multinomial_bessel_check(5, 5 - m, 1.5);
          c.check(mb.rel_err < 1e-8, "multinomial order " + std::to_string(m));
        }
      } else if (a_suite == "jnu")
        check_jnu(c);
      else {
        std::cerr << "unknown archcheck suite '" << a_suite << "'\n";
        return 2;
      }
      json out;
      out["suite"] = a_suite;
      out["cases"] = c.cases;
      out["failures"] = c.failures;
      std::cout << out.dump(2) << "\n";
      return c.ok() ? 0 : 1;
    }

    if (app.get_subcommand("bracket-table")->parsed()) {
      std::cout << bracket_table_json() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

// pll: quasi-stationary distributions of the stochastic power-law logistic
// birth-death model, their cumulants, asymptotic approximations and rival
// approximation families, plus the built-in study grids.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pll/emit.hpp"
#include "pll/errors.hpp"
#include "pll/tables.hpp"
#include "pll/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitValidation = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitIo = 4;

struct Options {
  pll::ModelParams params{100, 2.0, 1.0, 1.0, 1.0};
  pll::SolveOptions solve;
  std::string format = "csv";
  std::string out_path;  // empty = stdout
  int table_id = 1;
  std::vector<std::string> methods{"preferred", "br1", "bb"};
};

void add_model_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--N", o.params.N, "maximum population size (>= 2)");
  cmd->add_option("--R0", o.params.R0, "threshold parameter (> 0)");
  cmd->add_option("--alpha", o.params.alpha, "death-rate density dependence (>= 0)");
  cmd->add_option("--mu", o.params.mu, "per-capita death rate (> 0)");
  cmd->add_option("--s", o.params.s, "power-law exponent (> 0)");
  cmd->add_option("--tol", o.solve.tol, "TV convergence tolerance");
  cmd->add_option("--max-iter", o.solve.max_iter, "iteration budget");
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out_path, "output path (default: standard output)");
}

void emit_error_record(const char* type, const std::string& what) {
  nlohmann::ordered_json rec;
  rec["error"] = {{"type", type}, {"what", what}};
  std::cerr << rec.dump() << "\n";
}

int emit(const pll::Table& t, const Options& o) {
  const std::string body =
      o.format == "json" ? pll::render_json(t) : pll::render_csv(t);
  if (o.out_path.empty()) {
    std::cout << body;
    return kExitOk;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f || !(f << body) || !(f.flush())) {
    emit_error_record("io", "cannot write " + o.out_path);
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stochastic power-law logistic model: QSD solver and approximation lab"};
  app.require_subcommand(1);
  Options o;

  CLI::App* solve = app.add_subcommand("solve", "solve the QSD; emit n, q_n, log q_n");
  add_model_flags(solve, o);
  add_output_flags(solve, o);

  CLI::App* cumulants = app.add_subcommand("cumulants", "first 7 cumulants of the QSD");
  add_model_flags(cumulants, o);
  add_output_flags(cumulants, o);

  CLI::App* approx =
      app.add_subcommand("approx", "truncated-expansion cumulants with error terms");
  add_model_flags(approx, o);
  add_output_flags(approx, o);

  CLI::App* compare =
      app.add_subcommand("compare", "per-method approximation errors at one point");
  add_model_flags(compare, o);
  add_output_flags(compare, o);
  compare->add_option("--methods", o.methods,
                      "subset of preferred,bgl,br1,br2,bb")
      ->delimiter(',');

  CLI::App* table = app.add_subcommand("table", "built-in study grid by id");
  table->add_option("--id", o.table_id, "grid id in 1..5")->required();
  table->add_option("--tol", o.solve.tol, "TV convergence tolerance");
  table->add_option("--max-iter", o.solve.max_iter, "iteration budget");
  add_output_flags(table, o);

  CLI::App* figure1 =
      app.add_subcommand("figure1", "QSD point series across s at N=100, R0=5, alpha=1");
  figure1->add_option("--tol", o.solve.tol, "TV convergence tolerance");
  figure1->add_option("--max-iter", o.solve.max_iter, "iteration budget");
  add_output_flags(figure1, o);

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  add_output_flags(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    emit_error_record("validation", e.what());
    return kExitValidation;
  }

  try {
    if (solve->parsed()) return emit(pll::solve_table(o.params, o.solve), o);
    if (cumulants->parsed()) return emit(pll::cumulant_table(o.params, o.solve), o);
    if (approx->parsed()) return emit(pll::approx_table(o.params, o.solve), o);
    if (compare->parsed()) {
      std::vector<pll::MethodTag> tags;
      for (const auto& name : o.methods) {
        const auto tag = pll::parse_method(name);
        if (!tag) throw pll::ValidityError("unknown method '" + name + "'");
        tags.push_back(*tag);
      }
      return emit(pll::compare_table(o.params, tags, o.solve), o);
    }
    if (table->parsed()) return emit(pll::reference_table(o.table_id, o.solve), o);
    if (figure1->parsed()) return emit(pll::figure1_table(o.solve), o);
    if (verify->parsed()) {
      const pll::VerifyReport report = pll::run_verify();
      const int rc = emit(pll::verify_table(report), o);
      if (rc != kExitOk) return rc;
      if (!report.all_pass()) {
        emit_error_record("check_failed", "one or more invariant checks failed");
        return kExitCheckFailed;
      }
      return kExitOk;
    }
  } catch (const pll::NoConvergence& e) {
    emit_error_record("convergence", e.what());
    return kExitConvergence;
  } catch (const std::invalid_argument& e) {
    emit_error_record("validation", e.what());
    return kExitValidation;
  } catch (const std::ios_base::failure& e) {
    emit_error_record("io", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    emit_error_record("internal", e.what());
    return kExitValidation;
  }
  return kExitOk;
}

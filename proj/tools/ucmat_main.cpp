// ucmat: command-line front end for the ucmat shared library.
//
// Usage: ucmat <subcommand> [flags] <input> [<input2>]
// Exit codes: 0 success, 1 usage error, 2 numerical failure.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ucmat.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct MatrixDeleter {
  void operator()(uc_matrix* m) const { uc_matrix_free(m); }
};
using MatrixPtr = std::unique_ptr<uc_matrix, MatrixDeleter>;

struct StringDeleter {
  void operator()(char* s) const { uc_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int status_exit_code(uc_status status) {
  return status == UC_ERROR_NO_CONVERGENCE ? kExitNumerical : kExitUsage;
}

[[noreturn]] void die(uc_status status) {
  std::cerr << "ucmat: " << uc_last_error() << "\n";
  std::exit(status_exit_code(status));
}

MatrixPtr load(const std::string& path) {
  uc_matrix* m = nullptr;
  const uc_status status = uc_matrix_read_csv(path.c_str(), &m);
  if (status != UC_OK) die(status);
  return MatrixPtr(m);
}

void emit(const uc_matrix* m, const std::string& out_path) {
  if (out_path.empty()) {
    char* text = nullptr;
    const uc_status status = uc_matrix_to_csv(m, &text);
    if (status != UC_OK) die(status);
    StringPtr guard(text);
    std::cout << text;
  } else {
    const uc_status status = uc_matrix_write_csv(m, out_path.c_str());
    if (status != UC_OK) die(status);
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::FILE* f = std::fopen(out_path.c_str(), "wb");
  if (!f) {
    std::cerr << "ucmat: cannot open " << out_path << " for writing\n";
    std::exit(kExitUsage);
  }
  std::fwrite(text.data(), 1, text.size(), f);
  std::fclose(f);
}

std::string to_csv_string(const uc_matrix* m) {
  char* text = nullptr;
  const uc_status status = uc_matrix_to_csv(m, &text);
  if (status != UC_OK) die(status);
  StringPtr guard(text);
  return std::string(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unit-consistent generalized inverses and unit-invariant "
               "matrix decompositions"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  double tol = -1.0;
  std::size_t k = 5;
  std::uint64_t seed = 0;
  std::size_t split = 0;
  std::string norm = "l1";
  std::string kind = "unsv";
  std::string out_path;
  std::string input1, input2;

  auto add_inverse_cmd = [&](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("--tol", tol, "relative rank cutoff (default: automatic)");
    cmd->add_option("--out", out_path, "write result to a file");
    cmd->add_option("input", input1, "matrix file")->required();
    return cmd;
  };

  CLI::App* cmd_pinv =
      add_inverse_cmd("pinv", "Moore-Penrose pseudoinverse of a matrix file");
  CLI::App* cmd_uinv =
      add_inverse_cmd("uinv", "unit-consistent generalized inverse");
  CLI::App* cmd_linv =
      add_inverse_cmd("linv", "left unit-consistent generalized inverse");
  CLI::App* cmd_rinv =
      add_inverse_cmd("rinv", "right unit-consistent generalized inverse");

  CLI::App* cmd_blockinv = app.add_subcommand(
      "blockinv", "mixed inverse: unit-consistent leading block, "
                  "Moore-Penrose trailing block");
  cmd_blockinv->add_option("--split", split, "leading block size")->required();
  cmd_blockinv->add_option("--tol", tol, "relative rank cutoff");
  cmd_blockinv->add_option("--out", out_path, "write result to a file");
  cmd_blockinv->add_option("input", input1, "matrix file")->required();

  CLI::App* cmd_dscale = app.add_subcommand(
      "dscale", "diagonal balancing; prints left factor, scaled matrix and "
                "right factor as three blank-line-separated blocks");
  cmd_dscale->add_option("--tol", tol, "per-sweep adjustment tolerance");
  cmd_dscale->add_option("--out", out_path, "write result to a file");
  cmd_dscale->add_option("input", input1, "matrix file")->required();

  CLI::App* cmd_usvd = app.add_subcommand(
      "usvd", "unit-invariant singular values (one row)");
  cmd_usvd->add_option("--out", out_path, "write result to a file");
  cmd_usvd->add_option("input", input1, "matrix file")->required();

  CLI::App* cmd_uisvd = app.add_subcommand(
      "uisvd", "five-factor unit-invariant SVD; prints d, U, s, V, e as "
               "blank-line-separated blocks");
  cmd_uisvd->add_option("--out", out_path, "write result to a file");
  cmd_uisvd->add_option("input", input1, "matrix file")->required();

  CLI::App* cmd_sieig = app.add_subcommand(
      "sieig", "scale-invariant eigenvalues as (real,imag) rows");
  cmd_sieig->add_option("--out", out_path, "write result to a file");
  cmd_sieig->add_option("input", input1, "matrix file")->required();

  CLI::App* cmd_signature = app.add_subcommand(
      "signature", "unit-norm vector of the k leading singular values");
  cmd_signature->add_option("--k", k, "signature length (default 5)");
  cmd_signature->add_option("--kind", kind, "nsv or unsv (default unsv)")
      ->check(CLI::IsMember({"nsv", "unsv"}));
  cmd_signature->add_option("--out", out_path, "write result to a file");
  cmd_signature->add_option("input", input1, "matrix file")->required();

  CLI::App* cmd_dist = app.add_subcommand(
      "dist", "angular distance between the signatures of two matrices");
  cmd_dist->add_option("--k", k, "signature length (default 5)");
  cmd_dist->add_option("--kind", kind, "nsv or unsv (default unsv)")
      ->check(CLI::IsMember({"nsv", "unsv"}));
  cmd_dist->add_option("--out", out_path, "write result to a file");
  cmd_dist->add_option("input", input1, "first matrix file")->required();
  cmd_dist->add_option("input2", input2, "second matrix file")->required();

  std::size_t fit_m = 7;
  std::vector<std::size_t> fit_n;
  int fit_trials = 200;
  CLI::App* cmd_fit = app.add_subcommand(
      "experiment-fit", "compare right unit-consistent vs least-squares "
                        "linear fits of random polynomial data");
  cmd_fit->add_option("--m", fit_m, "input dimension (default 7)");
  cmd_fit->add_option("--n", fit_n, "sample counts (comma separated)")
      ->required()
      ->delimiter(',');
  cmd_fit->add_option("--trials", fit_trials, "trials per sample count");
  cmd_fit->add_option("--norm", norm, "l1, l2 or linf")
      ->check(CLI::IsMember({"l1", "l2", "linf"}));
  cmd_fit->add_option("--seed", seed, "random seed");
  cmd_fit->add_option("--out", out_path, "write report to a file");

  std::size_t img_rows = 64;
  std::size_t img_cols = 64;
  double spread = 4.0;
  bool quantize = false;
  int sig_trials = 100;
  CLI::App* cmd_sig_exp = app.add_subcommand(
      "experiment-signature", "multiplicative-noise robustness of plain vs "
                              "unit-invariant signatures");
  cmd_sig_exp->add_option("--rows", img_rows, "image rows (default 64)");
  cmd_sig_exp->add_option("--cols", img_cols, "image columns (default 64)");
  cmd_sig_exp->add_option("--k", k, "signature length (default 5)");
  cmd_sig_exp->add_option("--spread", spread,
                          "max row/column gain ratio (default 4)");
  cmd_sig_exp->add_flag("--quantize", quantize, "snap pixels to 256 levels");
  cmd_sig_exp->add_option("--trials", sig_trials, "trial count (default 100)");
  cmd_sig_exp->add_option("--seed", seed, "random seed");
  cmd_sig_exp->add_option("--out", out_path, "write report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;  // keep 0 for --help / --version
  }

  if (cmd_pinv->parsed() || cmd_uinv->parsed() || cmd_linv->parsed() ||
      cmd_rinv->parsed()) {
    MatrixPtr a = load(input1);
    uc_matrix* raw = nullptr;
    uc_status status = UC_OK;
    if (cmd_pinv->parsed()) status = uc_pinv(a.get(), tol, &raw);
    if (cmd_uinv->parsed()) status = uc_uinv(a.get(), tol, &raw);
    if (cmd_linv->parsed()) status = uc_linv(a.get(), tol, &raw);
    if (cmd_rinv->parsed()) status = uc_rinv(a.get(), tol, &raw);
    if (status != UC_OK) die(status);
    MatrixPtr result(raw);
    emit(result.get(), out_path);
    return 0;
  }

  if (cmd_blockinv->parsed()) {
    MatrixPtr a = load(input1);
    uc_matrix* raw = nullptr;
    const uc_status status = uc_block_inverse(a.get(), split, tol, &raw);
    if (status != UC_OK) die(status);
    MatrixPtr result(raw);
    emit(result.get(), out_path);
    return 0;
  }

  if (cmd_dscale->parsed()) {
    MatrixPtr a = load(input1);
    uc_matrix *left = nullptr, *scaled = nullptr, *right = nullptr;
    int converged = 0;
    int iterations = 0;
    double residual = 0.0;
    const uc_status status = uc_dscale(a.get(), tol, 0, &left, &scaled,
                                       &right, &converged, &iterations,
                                       &residual);
    if (status != UC_OK) die(status);
    MatrixPtr l(left), s(scaled), r(right);
    if (!converged) {
      std::cerr << "ucmat: balancing did not converge after " << iterations
                << " sweeps (residual " << residual << ")\n";
      std::exit(kExitNumerical);
    }
    emit_text(to_csv_string(l.get()) + "\n" + to_csv_string(s.get()) + "\n" +
                  to_csv_string(r.get()),
              out_path);
    return 0;
  }

  if (cmd_usvd->parsed()) {
    MatrixPtr a = load(input1);
    uc_matrix* raw = nullptr;
    const uc_status status = uc_ui_singular_values(a.get(), &raw);
    if (status != UC_OK) die(status);
    MatrixPtr result(raw);
    emit(result.get(), out_path);
    return 0;
  }

  if (cmd_uisvd->parsed()) {
    MatrixPtr a = load(input1);
    uc_matrix *d = nullptr, *u = nullptr, *s = nullptr, *v = nullptr,
              *e = nullptr;
    const uc_status status = uc_ui_svd(a.get(), &d, &u, &s, &v, &e);
    if (status != UC_OK) die(status);
    MatrixPtr pd(d), pu(u), ps(s), pv(v), pe(e);
    emit_text(to_csv_string(pd.get()) + "\n" + to_csv_string(pu.get()) + "\n" +
                  to_csv_string(ps.get()) + "\n" + to_csv_string(pv.get()) +
                  "\n" + to_csv_string(pe.get()),
              out_path);
    return 0;
  }

  if (cmd_sieig->parsed()) {
    MatrixPtr a = load(input1);
    uc_matrix* raw = nullptr;
    const uc_status status = uc_si_eigenvalues(a.get(), &raw);
    if (status != UC_OK) die(status);
    MatrixPtr result(raw);
    emit(result.get(), out_path);
    return 0;
  }

  if (cmd_signature->parsed()) {
    MatrixPtr a = load(input1);
    uc_matrix* raw = nullptr;
    const uc_status status =
        (kind == "nsv") ? uc_nsv_signature(a.get(), k, &raw)
                        : uc_unsv_signature(a.get(), k, &raw);
    if (status != UC_OK) die(status);
    MatrixPtr result(raw);
    emit(result.get(), out_path);
    return 0;
  }

  if (cmd_dist->parsed()) {
    MatrixPtr a = load(input1);
    MatrixPtr b = load(input2);
    double distance = 0.0;
    const uc_status status =
        uc_signature_distance(a.get(), b.get(), k, kind.c_str(), &distance);
    if (status != UC_OK) die(status);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g\n", distance);
    emit_text(buf, out_path);
    return 0;
  }

  if (cmd_fit->parsed()) {
    char* report = nullptr;
    const uc_status status =
        uc_fit_experiment(fit_m, fit_n.data(), fit_n.size(), fit_trials,
                          norm.c_str(), seed, &report);
    if (status != UC_OK) die(status);
    StringPtr guard(report);
    emit_text(report, out_path);
    return 0;
  }

  if (cmd_sig_exp->parsed()) {
    char* report = nullptr;
    const uc_status status =
        uc_signature_experiment(img_rows, img_cols, k, spread,
                                quantize ? 1 : 0, sig_trials, seed, &report);
    if (status != UC_OK) die(status);
    StringPtr guard(report);
    emit_text(report, out_path);
    return 0;
  }

  return kExitUsage;
}

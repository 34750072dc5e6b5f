#include "ucmat.h"

#include <cstring>
#include <new>
#include <string>

#include "core/experiments.hpp"
#include "core/matrix.hpp"
#include "core/scaling.hpp"
#include "core/svd.hpp"
#include "core/uc_inverse.hpp"
#include "core/ui_decomp.hpp"

struct uc_matrix {
  uc::Matrix value;
};

namespace {

thread_local std::string g_last_error;

uc_status fail(uc_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
uc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return UC_OK;
  } catch (const uc::ParseError& e) {
    return fail(UC_ERROR_PARSE, e.what());
  } catch (const uc::ConvergenceError& e) {
    return fail(UC_ERROR_NO_CONVERGENCE,
                std::string(e.what()) +
                    " (residual " + std::to_string(e.residual()) + ")");
  } catch (const uc::ShapeError& e) {
    return fail(UC_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const uc::Error& e) {
    return fail(UC_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(UC_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(UC_ERROR_INTERNAL, e.what());
  }
}

uc_matrix* wrap(uc::Matrix m) { return new uc_matrix{std::move(m)}; }

uc_matrix* wrap_row(const std::vector<double>& values) {
  uc::Matrix m(1, values.size());
  for (std::size_t j = 0; j < values.size(); ++j) m(0, j) = values[j];
  return new uc_matrix{std::move(m)};
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

uc_status require(bool ok, const char* message) {
  if (ok) return UC_OK;
  return fail(UC_ERROR_INVALID_ARGUMENT, message);
}

}  // namespace

extern "C" {

const char* uc_version(void) { return "1.0.0"; }

const char* uc_last_error(void) { return g_last_error.c_str(); }

uc_status uc_matrix_create(size_t rows, size_t cols, const double* row_major,
                           uc_matrix** out) {
  if (require(row_major && out, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<double> data(row_major, row_major + rows * cols);
    *out = wrap(uc::Matrix(rows, cols, std::move(data)));
  });
}

void uc_matrix_free(uc_matrix* m) { delete m; }

size_t uc_matrix_rows(const uc_matrix* m) { return m ? m->value.rows() : 0; }

size_t uc_matrix_cols(const uc_matrix* m) { return m ? m->value.cols() : 0; }

uc_status uc_matrix_get(const uc_matrix* m, size_t i, size_t j, double* out) {
  if (require(m && out, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  if (i >= m->value.rows() || j >= m->value.cols()) {
    return fail(UC_ERROR_INVALID_ARGUMENT, "matrix index out of range");
  }
  *out = m->value(i, j);
  g_last_error.clear();
  return UC_OK;
}

uc_status uc_matrix_copy_data(const uc_matrix* m, double* buffer, size_t len) {
  if (require(m && buffer, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  if (len < m->value.size()) {
    return fail(UC_ERROR_INVALID_ARGUMENT, "buffer too small");
  }
  std::memcpy(buffer, m->value.data().data(),
              m->value.size() * sizeof(double));
  g_last_error.clear();
  return UC_OK;
}

uc_status uc_matrix_read_csv(const char* path, uc_matrix** out) {
  if (require(path && out, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = wrap(uc::read_matrix(path)); });
}

uc_status uc_matrix_write_csv(const uc_matrix* m, const char* path) {
  if (require(m && path, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { uc::write_matrix(m->value, path); });
}

uc_status uc_matrix_to_csv(const uc_matrix* m, char** text) {
  if (require(m && text, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *text = copy_string(uc::format_matrix(m->value)); });
}

void uc_string_free(char* text) { delete[] text; }

uc_status uc_pinv(const uc_matrix* a, double tol, uc_matrix** out) {
  if (require(a && out, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = wrap(uc::pinv(a->value, tol)); });
}

uc_status uc_linv(const uc_matrix* a, double tol, uc_matrix** out) {
  if (require(a && out, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = wrap(uc::linv(a->value, tol)); });
}

uc_status uc_rinv(const uc_matrix* a, double tol, uc_matrix** out) {
  if (require(a && out, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = wrap(uc::rinv(a->value, tol)); });
}

uc_status uc_uinv(const uc_matrix* a, double tol, uc_matrix** out) {
  if (require(a && out, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = wrap(uc::uinv(a->value, tol)); });
}

uc_status uc_block_inverse(const uc_matrix* a, size_t split, double tol,
                           uc_matrix** out) {
  if (require(a && out, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = wrap(uc::block_uc_inverse(a->value, split, tol)); });
}

uc_status uc_dscale(const uc_matrix* a, double tol, int max_sweeps,
                    uc_matrix** left, uc_matrix** scaled, uc_matrix** right,
                    int* converged, int* iterations, double* residual) {
  if (require(a != nullptr, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const uc::DiagonalScaling s =
        uc::dscale(a->value, tol > 0.0 ? tol : 1e-15,
                   max_sweeps > 0 ? max_sweeps : 1000);
    if (left) *left = wrap_row(s.left.entries());
    if (scaled) *scaled = wrap(s.scaled);
    if (right) *right = wrap_row(s.right.entries());
    if (converged) *converged = s.converged ? 1 : 0;
    if (iterations) *iterations = s.iterations;
    if (residual) *residual = s.residual;
  });
}

uc_status uc_ui_singular_values(const uc_matrix* a, uc_matrix** out) {
  if (require(a && out, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = wrap_row(uc::ui_singular_values(a->value)); });
}

uc_status uc_ui_svd(const uc_matrix* a, uc_matrix** d, uc_matrix** u,
                    uc_matrix** s, uc_matrix** v, uc_matrix** e) {
  if (require(a != nullptr, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    uc::UiSvd dec = uc::ui_svd(a->value);
    if (d) *d = wrap_row(dec.d.entries());
    if (u) *u = wrap(std::move(dec.u));
    if (s) *s = wrap_row(dec.s);
    if (v) *v = wrap(std::move(dec.v));
    if (e) *e = wrap_row(dec.e.entries());
  });
}

uc_status uc_si_eigenvalues(const uc_matrix* a, uc_matrix** out) {
  if (require(a && out, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto eig = uc::si_eigenvalues(a->value);
    uc::Matrix m(eig.size(), 2);
    for (std::size_t i = 0; i < eig.size(); ++i) {
      m(i, 0) = eig[i].real();
      m(i, 1) = eig[i].imag();
    }
    *out = wrap(std::move(m));
  });
}

uc_status uc_nsv_signature(const uc_matrix* a, size_t k, uc_matrix** out) {
  if (require(a && out, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = wrap_row(uc::nsv_signature(a->value, k).values()); });
}

uc_status uc_unsv_signature(const uc_matrix* a, size_t k, uc_matrix** out) {
  if (require(a && out, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = wrap_row(uc::unsv_signature(a->value, k).values()); });
}

uc_status uc_signature_distance(const uc_matrix* a, const uc_matrix* b,
                                size_t k, const char* kind, double* out) {
  if (require(a && b && kind && out, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const std::string which = kind;
    uc::Signature pa, pb;
    if (which == "nsv") {
      pa = uc::nsv_signature(a->value, k);
      pb = uc::nsv_signature(b->value, k);
    } else if (which == "unsv") {
      pa = uc::unsv_signature(a->value, k);
      pb = uc::unsv_signature(b->value, k);
    } else {
      throw uc::Error("signature kind must be 'nsv' or 'unsv'");
    }
    *out = uc::angular_distance(pa, pb);
  });
}

uc_status uc_hadamard_signature(const uc_matrix* a, double tol,
                                uc_matrix** out) {
  if (require(a && out, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = wrap(uc::hadamard_signature(a->value, tol)); });
}

uc_status uc_fit_experiment(size_t m, const size_t* n_values, size_t n_count,
                            int trials, const char* norm, uint64_t seed,
                            char** report) {
  if (require(n_values && norm && report && n_count > 0, "null argument") !=
      UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    uc::FitConfig config;
    config.m = m;
    config.n_values.assign(n_values, n_values + n_count);
    config.trials = trials;
    config.norm = uc::parse_norm(norm);
    config.seed = seed;
    const uc::FitResult result = uc::fit_experiment(config);
    *report = copy_string(uc::render_report(result).to_csv());
  });
}

uc_status uc_signature_experiment(size_t rows, size_t cols, size_t k,
                                  double scale_spread, int quantize,
                                  int trials, uint64_t seed, char** report) {
  if (require(report != nullptr, "null argument") != UC_OK)
    return UC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    uc::NoiseConfig config;
    config.rows = rows;
    config.cols = cols;
    config.k = k;
    config.scale_spread = scale_spread;
    config.quantize = quantize != 0;
    config.trials = trials;
    config.seed = seed;
    const uc::SignatureResult result = uc::signature_experiment(config);
    *report = copy_string(uc::render_report(result).to_csv());
  });
}

}  // extern "C"

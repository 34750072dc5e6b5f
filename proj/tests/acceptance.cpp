// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fail. Run via ctest (test name "acceptance") or directly.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "core/eig.hpp"
#include "core/experiments.hpp"
#include "core/matrix.hpp"
#include "core/rng.hpp"
#include "core/scaling.hpp"
#include "core/svd.hpp"
#include "core/uc_inverse.hpp"
#include "core/ui_decomp.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using uc::Matrix;

namespace {

int g_failures = 0;

struct Criterion {
  int id;
  std::string label;
  bool passed;
  double seconds;
  std::string detail;
};

void report(const Criterion& c) {
  std::printf("%s criterion %2d: %s (%.2fs%s%s)\n",
              c.passed ? "PASS" : "FAIL", c.id, c.label.c_str(), c.seconds,
              c.detail.empty() ? "" : "; ", c.detail.c_str());
  if (!c.passed) ++g_failures;
}

void run(int id, const std::string& label, double time_budget_s,
         const std::function<bool(std::string&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
    ok = false;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (seconds > time_budget_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ");
    detail += "runtime budget " + std::to_string(time_budget_s) + "s exceeded";
  }
  report({id, label, ok, seconds, detail});
}

bool close(const Matrix& got, const Matrix& want, double tol, double scale,
           std::string& detail) {
  const double diff = oracle::max_abs_diff(got, want);
  if (diff <= tol * scale) return true;
  char buf[128];
  std::snprintf(buf, sizeof buf, "max deviation %.3e > %.3e", diff,
                tol * scale);
  detail = buf;
  return false;
}

Matrix diag_inv_times(const uc::DiagonalFactor& d, const Matrix& m) {
  return uc::scale_rows(m, d.inverse());
}

Matrix times_diag_inv(const Matrix& m, const uc::DiagonalFactor& d) {
  return uc::scale_cols(m, d.inverse());
}

const Matrix kPaperA{{0.5, -0.5}, {0.5, -0.5}};
const Matrix kPaperDAD{{0.5, -0.25}, {1.0, -0.5}};   // diag(1,2) A diag(1,1/2)
const Matrix kPaperDAE{{2.5, 1.5}, {5.0, 3.0}};      // diag(1,2) A diag(5,-3)

void criterion_1() {
  run(1, "pseudoinverse worked example", 1.0, [](std::string& detail) {
    const Matrix pinv_a{{0.5, 0.5}, {-0.5, -0.5}};
    if (!close(uc::pinv(kPaperA), pinv_a, 1e-9, 1.0, detail)) return false;
    const Matrix d_pinv_dinv{{0.5, 0.25}, {-1.0, -0.5}};
    const Matrix transformed =
        uc::scale_cols(uc::scale_rows(pinv_a, std::vector<double>{1.0, 2.0}),
                       std::vector<double>{1.0, 0.5});
    if (!close(transformed, d_pinv_dinv, 1e-9, 1.0, detail)) return false;
    const Matrix pinv_dad{{0.32, 0.64}, {-0.16, -0.32}};
    return close(uc::pinv(kPaperDAD), pinv_dad, 1e-9, 1.0, detail);
  });
}

void criterion_2() {
  run(2, "unit-consistent inverse worked example", 1.0,
      [](std::string& detail) {
        const Matrix want1{{0.5, 0.25}, {-1.0, -0.5}};
        if (!close(uc::uinv(kPaperDAD), want1, 1e-9, 1.0, detail))
          return false;
        const Matrix want2{{0.1, 0.05}, {1.0 / 6.0, 1.0 / 12.0}};
        return close(uc::uinv(kPaperDAE), want2, 1e-9, 1.0, detail);
      });
}

// Shared 200-matrix sweep for criteria 3, 4 and 6.
struct SweepCase {
  Matrix a;
  uc::DiagonalFactor d;
  uc::DiagonalFactor e;
};

std::vector<SweepCase> make_sweep() {
  std::vector<SweepCase> cases;
  uc::Rng rng(20240001);
  for (std::size_t index = 0; index < 200; ++index) {
    Matrix a = gen::sweep_matrix(index, rng);
    auto d = uc::random_nonsingular_diagonal(a.rows(), rng);
    auto e = uc::random_nonsingular_diagonal(a.cols(), rng);
    cases.push_back({std::move(a), std::move(d), std::move(e)});
  }
  return cases;
}

void criterion_3(const std::vector<SweepCase>& sweep) {
  run(3, "unit-consistency sweep over 200 matrices", 30.0,
      [&](std::string& detail) {
        double worst = 0.0;
        for (const auto& c : sweep) {
          const Matrix ai = uc::uinv(c.a);
          const Matrix dae =
              uc::scale_cols(uc::scale_rows(c.a, c.d), c.e);
          const Matrix lhs = uc::uinv(dae);
          const Matrix rhs = times_diag_inv(diag_inv_times(c.e, ai), c.d);
          const double rel = oracle::max_abs_diff(lhs, rhs) /
                             (1.0 + ai.max_abs());
          worst = std::max(worst, rel);
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "worst relative deviation %.3e", worst);
        detail = buf;
        return worst <= 1e-8;
      });
}

void criterion_4(const std::vector<SweepCase>& sweep) {
  run(4, "generalized-inverse contracts on the sweep", 3600.0,
      [&](std::string& detail) {
        double worst = 0.0;
        for (const auto& c : sweep) {
          const Matrix ai = uc::uinv(c.a);
          const double r1 = oracle::max_abs_diff(c.a * ai * c.a, c.a) /
                            (1.0 + c.a.max_abs());
          const double r2 = oracle::max_abs_diff(ai * c.a * ai, ai) /
                            (1.0 + ai.max_abs());
          worst = std::max({worst, r1, r2});
          if (uc::rank(ai) != uc::rank(c.a)) {
            detail = "rank mismatch";
            return false;
          }
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "worst relative residual %.3e", worst);
        detail = buf;
        return worst <= 1e-9;
      });
}

void criterion_5() {
  run(5, "iterative and closed-form scalings agree", 10.0,
      [](std::string& detail) {
        uc::Rng rng(20240005);
        double worst_scaled = 0.0;
        double worst_inv = 0.0;
        for (int rep = 0; rep < 100; ++rep) {
          const std::size_t m = 2 + rep % 6;
          const std::size_t n = 2 + (rep / 3) % 6;
          const Matrix a = gen::random_elemental_nonzero(m, n, rng);
          const auto iterative = uc::dscale(a);
          const auto closed = uc::su_closed_form(a);
          worst_scaled = std::max(
              worst_scaled,
              oracle::max_abs_diff(iterative.scaled, closed.scaled));
          const Matrix inv1 = uc::uinv_scaled(iterative);
          const Matrix inv2 = uc::uinv_scaled(closed);
          worst_inv =
              std::max(worst_inv, oracle::max_abs_diff(inv1, inv2) /
                                      (1.0 + inv1.max_abs()));
        }
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "scaled dev %.3e, inverse dev %.3e", worst_scaled,
                      worst_inv);
        detail = buf;
        return worst_scaled <= 1e-10 && worst_inv <= 1e-9;
      });
}

void criterion_6(const std::vector<SweepCase>& sweep) {
  run(6, "unit nonzero-products condition on every balancing", 3600.0,
      [&](std::string& detail) {
        double worst = 0.0;
        for (const auto& c : sweep) {
          const auto s = uc::dscale(c.a);
          if (!s.converged) {
            detail = "balancing did not converge";
            return false;
          }
          for (std::size_t i = 0; i < s.scaled.rows(); ++i) {
            const auto row = s.scaled.row_copy(i);
            bool any = false;
            for (double v : row) any = any || v != 0.0;
            if (!any) continue;
            worst = std::max(
                worst,
                std::abs(oracle::abs_product_of_nonzeros(row) - 1.0));
          }
          for (std::size_t j = 0; j < s.scaled.cols(); ++j) {
            const auto col = s.scaled.col_copy(j);
            bool any = false;
            for (double v : col) any = any || v != 0.0;
            if (!any) continue;
            worst = std::max(
                worst,
                std::abs(oracle::abs_product_of_nonzeros(col) - 1.0));
          }
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "worst |product - 1| = %.3e", worst);
        detail = buf;
        return worst <= 1e-8;
      });
}

void criterion_7() {
  run(7, "unit-invariant singular values and signatures", 3600.0,
      [](std::string& detail) {
        uc::Rng rng(20240007);
        double worst = 0.0;
        for (std::size_t index = 0; index < 100; ++index) {
          const Matrix a = gen::sweep_matrix(index, rng);
          const auto d = uc::random_nonsingular_diagonal(a.rows(), rng);
          const auto e = uc::random_nonsingular_diagonal(a.cols(), rng);
          const Matrix dae = uc::scale_cols(uc::scale_rows(a, d), e);
          const auto s1 = uc::ui_singular_values(a);
          const auto s2 = uc::ui_singular_values(dae);
          const double scale = 1.0 + (s1.empty() ? 0.0 : s1[0]);
          for (std::size_t i = 0; i < s1.size(); ++i) {
            worst = std::max(worst, std::abs(s1[i] - s2[i]) / scale);
          }
          const auto g1 = uc::unsv_signature(a, 5);
          const auto g2 = uc::unsv_signature(dae, 5);
          for (std::size_t i = 0; i < 5; ++i) {
            worst = std::max(
                worst, std::abs(g1.values()[i] - g2.values()[i]));
          }
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "worst relative deviation %.3e", worst);
        detail = buf;
        return worst <= 1e-9;
      });
}

void criterion_8() {
  run(8, "left/right consistency and reduction to the inverse", 3600.0,
      [](std::string& detail) {
        uc::Rng rng(20240008);
        double worst = 0.0;
        for (int rep = 0; rep < 100; ++rep) {
          const std::size_t m = 2 + rep % 5;
          const std::size_t n = 2 + (rep / 2) % 5;
          const Matrix a = uc::random_gaussian(m, n, rng);
          const auto d = uc::random_nonsingular_diagonal(m, rng);
          const auto e = uc::random_nonsingular_diagonal(n, rng);
          const Matrix li = uc::linv(a);
          const Matrix ri = uc::rinv(a);
          worst = std::max(
              worst, oracle::max_abs_diff(uc::linv(uc::scale_rows(a, d)),
                                          times_diag_inv(li, d)) /
                         (1.0 + li.max_abs()));
          worst = std::max(
              worst, oracle::max_abs_diff(uc::rinv(uc::scale_cols(a, e)),
                                          diag_inv_times(e, ri)) /
                         (1.0 + ri.max_abs()));
        }
        for (int rep = 0; rep < 20; ++rep) {
          const std::size_t n = 2 + rep % 5;
          const Matrix m = gen::random_well_conditioned(n, rng);
          const Matrix inv = oracle::gauss_jordan_inverse(m);
          worst = std::max(worst, oracle::max_abs_diff(uc::linv(m), inv) /
                                      (1.0 + inv.max_abs()));
          worst = std::max(worst, oracle::max_abs_diff(uc::rinv(m), inv) /
                                      (1.0 + inv.max_abs()));
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "worst relative deviation %.3e", worst);
        detail = buf;
        return worst <= 1e-9;
      });
}

void criterion_9() {
  run(9, "block mixed inverse: consistency and dense-inverse agreement",
      3600.0, [](std::string& detail) {
        uc::Rng rng(20240009);
        const std::size_t n = 6;
        const std::size_t k = 3;
        double worst_consistency = 0.0;
        for (int rep = 0; rep < 50; ++rep) {
          const Matrix a = gen::random_singular(n, 4, rng);
          auto make_t = [&](Matrix& t, Matrix& tinv) {
            t = Matrix(n, n);
            tinv = Matrix(n, n);
            for (std::size_t i = 0; i < k; ++i) {
              const double mag =
                  std::exp(std::log(1e-2) +
                           (std::log(1e2) - std::log(1e-2)) *
                               rng.next_unit());
              const double v = (rng.next_u64() & 1u) ? -mag : mag;
              t(i, i) = v;
              tinv(i, i) = 1.0 / v;
            }
            const Matrix r = uc::random_orthogonal(n - k, rng);
            for (std::size_t i = 0; i < n - k; ++i)
              for (std::size_t j = 0; j < n - k; ++j) {
                t(k + i, k + j) = r(i, j);
                tinv(k + i, k + j) = r(j, i);
              }
          };
          Matrix t1, t1i, t2, t2i;
          make_t(t1, t1i);
          make_t(t2, t2i);
          const Matrix lhs = uc::block_uc_inverse(t1 * a * t2, k);
          const Matrix rhs = t2i * uc::block_uc_inverse(a, k) * t1i;
          worst_consistency =
              std::max(worst_consistency, oracle::max_abs_diff(lhs, rhs) /
                                              (1.0 + rhs.max_abs()));
        }
        double worst_inverse = 0.0;
        for (int rep = 0; rep < 20; ++rep) {
          const Matrix a = gen::random_well_conditioned(n, rng);
          const Matrix inv = oracle::gauss_jordan_inverse(a);
          worst_inverse =
              std::max(worst_inverse,
                       oracle::max_abs_diff(uc::block_uc_inverse(a, k), inv) /
                           (1.0 + inv.max_abs()));
        }
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "consistency dev %.3e, inverse dev %.3e",
                      worst_consistency, worst_inverse);
        detail = buf;
        return worst_consistency <= 1e-7 && worst_inverse <= 1e-8;
      });
}

void criterion_10() {
  run(10, "fit experiment: F_R beats F_P and grows with n", 300.0,
      [](std::string& detail) {
        uc::FitConfig cfg;
        cfg.m = 7;
        cfg.n_values = {50, 100, 200, 500};
        cfg.trials = 200;
        cfg.norm = uc::Norm::l1;
        cfg.seed = 42;
        const auto result = uc::fit_experiment(cfg);
        const double first = result.rows.front().fraction;
        const double last = result.rows.back().fraction;
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "fraction %.4f at n=%zu, %.4f at n=%zu", first,
                      result.rows.front().n, last, result.rows.back().n);
        detail = buf;
        return last > 0.5 && last > first;
      });
}

void criterion_11() {
  run(11, "signature experiment: exact invariance and quantized advantage",
      60.0, [](std::string& detail) {
        uc::NoiseConfig cfg;
        cfg.rows = 64;
        cfg.cols = 64;
        cfg.k = 5;
        cfg.scale_spread = 4.0;
        cfg.trials = 100;
        cfg.seed = 7;

        cfg.quantize = false;
        const auto exact = uc::signature_experiment(cfg);
        double worst_self = 0.0;
        for (const auto& t : exact.trials)
          worst_self = std::max(worst_self, t.unsv_self);

        cfg.quantize = true;
        const auto quant = uc::signature_experiment(cfg);
        int wins = 0;
        for (const auto& t : quant.trials)
          if (t.unsv_self < t.nsv_self) ++wins;

        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "worst exact UNSV self-distance %.3e, wins %d/100",
                      worst_self, wins);
        detail = buf;
        return worst_self <= 1e-9 && wins >= 95;
      });
}

void criterion_12() {
  run(12, "angular distance is a metric", 3600.0, [](std::string& detail) {
    uc::Rng rng(20240012);
    auto unit_vec = [&rng]() {
      std::vector<double> v(5);
      double norm2 = 0.0;
      for (double& x : v) {
        x = std::abs(rng.next_gaussian());
        norm2 += x * x;
      }
      for (double& x : v) x /= std::sqrt(norm2);
      return v;
    };
    for (int rep = 0; rep < 1000; ++rep) {
      const auto p = unit_vec();
      const auto q = unit_vec();
      const auto r = unit_vec();
      const std::span<const double> sp(p), sq(q), sr(r);
      if (uc::angular_distance(sp, sp) > 1e-12) {
        detail = "identity violated";
        return false;
      }
      const double pq = uc::angular_distance(sp, sq);
      if (pq != uc::angular_distance(sq, sp)) {
        detail = "symmetry violated";
        return false;
      }
      if (pq >
          uc::angular_distance(sp, sr) + uc::angular_distance(sr, sq) + 1e-12) {
        detail = "triangle inequality violated";
        return false;
      }
    }
    return true;
  });
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  const auto sweep = make_sweep();
  criterion_3(sweep);
  criterion_4(sweep);
  criterion_5();
  criterion_6(sweep);
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  if (g_failures == 0) {
    std::printf("all 12 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}

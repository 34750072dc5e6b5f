#include <cstdio>
#include <filesystem>
#include <fstream>

#include "core/matrix.hpp"
#include "core/rng.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using uc::Matrix;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("construction validates shape and finiteness") {
  CHECK_THROWS_AS(Matrix(0, 3), uc::ShapeError);
  CHECK_THROWS_AS(Matrix(2, 2, {1.0, 2.0, 3.0}), uc::ShapeError);
  CHECK_THROWS_AS(Matrix(1, 2, {1.0, std::nan("")}), uc::Error);
  CHECK_THROWS_AS(Matrix({{1.0, 2.0}, {3.0}}), uc::ShapeError);
  const Matrix a{{1.0, 2.0}, {3.0, 4.0}};
  CHECK(a.rows() == 2);
  CHECK(a(1, 0) == 3.0);
}

TEST_CASE("hadamard: identity and direct arithmetic") {
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix ones{{1, 1}, {1, 1}};
  CHECK(oracle::max_abs_diff(hadamard(a, ones), a) == 0.0);

  const Matrix b{{2, 0}, {0, 2}};
  const Matrix expected{{2, 0}, {0, 8}};
  CHECK(oracle::max_abs_diff(hadamard(a, b), expected) == 0.0);

  CHECK_THROWS_AS(hadamard(a, Matrix(2, 3)), uc::ShapeError);
}

TEST_CASE("hadamard of one-padded outer products is the rank-1 product") {
  // d 1^T (hadamard) 1 e^T = d e^T, checked by brute-force elementwise
  // arithmetic on random 3x4 operands.
  uc::Rng rng(11);
  std::vector<double> d(3), e(4);
  for (double& v : d) v = rng.next_gaussian();
  for (double& v : e) v = rng.next_gaussian();
  const std::vector<double> ones3(3, 1.0), ones4(4, 1.0);
  const Matrix lhs = hadamard(oracle::outer_product(d, ones4),
                              oracle::outer_product(ones3, e));
  CHECK(oracle::max_abs_diff(lhs, oracle::outer_product(d, e)) == 0.0);
}

TEST_CASE("hadamard is commutative (exact) and associative (to one ulp)") {
  uc::Rng rng(12);
  const Matrix a = uc::random_gaussian(3, 4, rng);
  const Matrix b = uc::random_gaussian(3, 4, rng);
  const Matrix c = uc::random_gaussian(3, 4, rng);
  CHECK(oracle::max_abs_diff(hadamard(a, b), hadamard(b, a)) == 0.0);
  const Matrix lhs = hadamard(hadamard(a, b), c);
  const Matrix rhs = hadamard(a, hadamard(b, c));
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      CHECK(std::abs(lhs(i, j) - rhs(i, j)) <=
            4e-16 * std::abs(lhs(i, j)));
}

TEST_CASE("abs_sign_split definition and exact recomposition") {
  const Matrix a{{-2, 0}, {3, -1}};
  const auto split = uc::abs_sign_split(a);
  CHECK(oracle::max_abs_diff(split.abs, Matrix{{2, 0}, {3, 1}}) == 0.0);
  CHECK(oracle::max_abs_diff(split.sign, Matrix{{-1, 0}, {1, -1}}) == 0.0);

  const Matrix nonneg{{0, 5}, {2, 0}};
  const auto split2 = uc::abs_sign_split(nonneg);
  CHECK(oracle::max_abs_diff(split2.sign, Matrix{{0, 1}, {1, 0}}) == 0.0);

  uc::Rng rng(13);
  const Matrix r = uc::random_gaussian(4, 4, rng);
  const auto split3 = uc::abs_sign_split(r);
  CHECK(oracle::max_abs_diff(oracle::elementwise_product(split3.sign,
                                                         split3.abs),
                             r) == 0.0);
}

TEST_CASE("row_l2_norms") {
  const auto n1 = uc::row_l2_norms(Matrix{{3, 4}});
  CHECK(n1.size() == 1);
  CHECK(n1[0] == doctest::Approx(5.0).epsilon(1e-15));

  const auto n2 = uc::row_l2_norms(Matrix{{0, 0}, {1, 0}});
  CHECK(n2[0] == 0.0);

  const auto n3 = uc::row_l2_norms(Matrix::identity(4));
  for (double v : n3) CHECK(v == 1.0);
}

TEST_CASE("rng determinism and substreams") {
  uc::Rng a(99);
  uc::Rng b(99);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  uc::Rng base(7);
  uc::Rng s1 = base.substream(3);
  uc::Rng s2 = base.substream(3);
  CHECK(s1.next_gaussian() == s2.next_gaussian());

  uc::Rng g1(5), g2(5);
  const Matrix m1 = uc::random_gaussian(4, 4, g1);
  const Matrix m2 = uc::random_gaussian(4, 4, g2);
  CHECK(oracle::max_abs_diff(m1, m2) == 0.0);
}

TEST_CASE("random_orthogonal: orthogonality and unit determinant") {
  uc::Rng rng(1);
  for (std::size_t n : {3u, 10u, 50u}) {
    const Matrix q = uc::random_orthogonal(n, rng);
    const Matrix gram = q.transpose() * q;
    CHECK(oracle::max_abs_diff(gram, Matrix::identity(n)) <= 1e-12);
    CHECK(std::abs(std::abs(oracle::det_lu(q)) - 1.0) <= 1e-9);
  }
}

TEST_CASE("random_nonsingular_diagonal stays away from zero") {
  uc::Rng rng(2);
  const auto d = uc::random_nonsingular_diagonal(20, rng);
  bool saw_negative = false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(std::abs(d[i]) >= 1e-3);
    CHECK(std::abs(d[i]) <= 1e3);
    saw_negative = saw_negative || d[i] < 0.0;
  }
  CHECK(saw_negative);  // signs are random
}

TEST_CASE("matrix file parsing") {
  const Matrix m = uc::parse_matrix("1,2\n3,4\n");
  CHECK(oracle::max_abs_diff(m, Matrix{{1, 2}, {3, 4}}) == 0.0);

  CHECK_THROWS_WITH_AS(uc::parse_matrix("1,2\n3\n"),
                       "line 2: expected 2 columns, got 1", uc::ParseError);
  try {
    uc::parse_matrix("1,2\nx,4\n");
    FAIL("expected ParseError");
  } catch (const uc::ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(uc::parse_matrix(""), uc::ParseError);
}

TEST_CASE("write-then-read round trip is exact") {
  uc::Rng rng(3);
  const Matrix m = uc::random_gaussian(5, 3, rng);
  const auto path = temp_file("uc_roundtrip.csv");
  uc::write_matrix(m, path.string());
  const Matrix back = uc::read_matrix(path.string());
  std::filesystem::remove(path);
  REQUIRE(back.same_shape(m));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) CHECK(back(i, j) == m(i, j));
}

TEST_CASE("read_matrix reports missing files") {
  CHECK_THROWS_AS(uc::read_matrix("/nonexistent/uc_missing.csv"), uc::Error);
}

}  // TEST_SUITE

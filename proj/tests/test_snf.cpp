#include <doctest.h>

#include <random>

#include "luttinger/abelian.hpp"

using namespace luttinger;

namespace {

IntMatrix make(std::size_t r, std::size_t c, std::vector<long> vals) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = vals[i * c + j];
  }
  return m;
}

// independent oracle: textbook diagonalization by repeated gcd reduction,
// no transform tracking; returns the nonzero diagonal (a divisibility chain)
std::vector<mpz_class> naive_invariant_factors(IntMatrix m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < R && t < C; ++t) {
    bool empty = false;
    for (;;) {
      // re-select the smallest-magnitude nonzero entry of the trailing block
      bool found = false;
      std::size_t pr = t, pc = t;
      for (std::size_t i = t; i < R; ++i) {
        for (std::size_t j = t; j < C; ++j) {
          if (m.at(i, j) == 0) continue;
          if (!found || cmp(abs(m.at(i, j)), abs(m.at(pr, pc))) < 0) {
            pr = i;
            pc = j;
            found = true;
          }
        }
      }
      if (!found) {
        empty = true;
        break;
      }
      for (std::size_t j = 0; j < C; ++j) std::swap(m.at(t, j), m.at(pr, j));
      for (std::size_t i = 0; i < R; ++i) std::swap(m.at(i, t), m.at(i, pc));
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (m.at(i, t) == 0) continue;
        mpz_class q = m.at(i, t) / m.at(t, t);
        for (std::size_t j = 0; j < C; ++j) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) clean = false;  // remainder becomes the next pivot
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (m.at(t, j) == 0) continue;
        mpz_class q = m.at(t, j) / m.at(t, t);
        for (std::size_t i = 0; i < R; ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the rest of the submatrix; fold in an
      // offending row and keep reducing otherwise
      for (std::size_t i = t + 1; i < R && clean; ++i) {
        for (std::size_t j = t + 1; j < C && clean; ++j) {
          if (m.at(i, j) % m.at(t, t) != 0) {
            for (std::size_t jj = 0; jj < C; ++jj) m.at(t, jj) += m.at(i, jj);
            clean = false;
          }
        }
      }
      if (clean) break;
    }
    if (empty) break;
    diag.push_back(abs(m.at(t, t)));
  }
  return diag;
}

std::vector<mpz_class> nonzero_diagonal(const IntMatrix& d) {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < d.rows() && i < d.cols(); ++i) {
    if (d.at(i, i) != 0) out.push_back(d.at(i, i));
  }
  return out;
}

void check_snf_contract(const IntMatrix& m) {
  SmithResult s = smith_normal_form(m);
  REQUIRE(s.d.rows() == m.rows());
  REQUIRE(s.d.cols() == m.cols());
  CHECK(s.u * m * s.v == s.d);
  CHECK(abs(s.u.determinant()) == 1);
  CHECK(abs(s.v.determinant()) == 1);
  std::vector<mpz_class> diag;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j) CHECK(s.d.at(i, j) == 0);
    }
    if (i < m.cols()) diag.push_back(s.d.at(i, i));
  }
  bool seen_zero = false;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (diag[i] == 0) seen_zero = true;
    CHECK(!(seen_zero && diag[i] != 0));  // zeros come last
    if (i + 1 < diag.size() && diag[i] != 0 && diag[i + 1] != 0) {
      CHECK(diag[i + 1] % diag[i] == 0);
    }
  }
  CHECK(nonzero_diagonal(s.d) == naive_invariant_factors(m));
}

}  // namespace

TEST_CASE("worked examples") {
  SmithResult s = smith_normal_form(make(2, 2, {2, 4, 6, 8}));
  CHECK(s.d.at(0, 0) == 2);
  CHECK(s.d.at(1, 1) == 4);

  s = smith_normal_form(make(2, 2, {2, 0, 0, 3}));
  CHECK(s.d.at(0, 0) == 1);
  CHECK(s.d.at(1, 1) == 6);

  s = smith_normal_form(make(2, 3, {1, 0, 0, 0, 0, 0}));
  CHECK(s.d.at(0, 0) == 1);
  CHECK(s.d.at(1, 1) == 0);
}

TEST_CASE("degenerate shapes") {
  check_snf_contract(IntMatrix(3, 3));          // zero matrix
  check_snf_contract(IntMatrix::identity(4));
  check_snf_contract(make(1, 4, {0, -6, 4, 2}));
  check_snf_contract(make(4, 1, {3, 9, 0, 6}));
}

TEST_CASE("property: 1000 random matrices satisfy the SNF contract") {
  std::mt19937 rng(31415);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    }
    check_snf_contract(m);
  }
}

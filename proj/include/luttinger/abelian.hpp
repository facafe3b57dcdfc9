#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "luttinger/presentation.hpp"

namespace luttinger {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  mpz_class determinant() const;  // square matrices only

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> entries_;
};

struct SmithResult {
  IntMatrix d;  // diagonal, non-negative, divisibility chain
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix v;  // unimodular, cols x cols
};

/// U m V = D with U, V unimodular and D diagonal with d1 | d2 | ...
/// Pivot choice: smallest-magnitude nonzero entry.
SmithResult smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group Z^free_rank + Z/d1 + ... with d1 | d2 | ...
/// and every di >= 2 (unit factors stripped).
struct AbelianInvariants {
  std::vector<mpz_class> torsion;
  std::size_t free_rank = 0;

  /// e.g. "Z^2", "Z/6", "Z + Z/2 + Z/4", "1" for the trivial group.
  std::string to_string() const;
  static AbelianInvariants parse(const std::string& text);

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Relator exponent-sum matrix (rows = relators, cols = generators).
IntMatrix relation_matrix(const Presentation& p);

/// Abelianization of the presented group via Smith normal form.
AbelianInvariants abelianization(const Presentation& p);

/// Invariant factors of the cokernel of m (units stripped), plus free rank.
AbelianInvariants cokernel_invariants(const IntMatrix& m);

}  // namespace luttinger

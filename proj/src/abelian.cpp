#include "luttinger/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace luttinger {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw presentation_error("matrix entry count does not match dimensions");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw presentation_error("matrix dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += at(i, k) * rhs.at(k, j);
      }
    }
  }
  return out;
}

mpz_class IntMatrix::determinant() const {
  if (rows_ != cols_) throw presentation_error("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  // fraction-free Gaussian elimination (Bareiss)
  IntMatrix a = *this;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

struct Worker {
  IntMatrix a, u, v;

  explicit Worker(const IntMatrix& m)
      : a(m), u(IntMatrix::identity(m.rows())), v(IntMatrix::identity(m.cols())) {}

  void row_add(std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(dst, j) += q * a.at(src, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(dst, j) += q * u.at(src, j);
  }
  void col_add(std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t i = 0; i < a.rows(); ++i) a.at(i, dst) += q * a.at(i, src);
    for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, dst) += q * v.at(i, src);
  }
  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  Worker w(m);
  const std::size_t n = std::min(m.rows(), m.cols());

  for (std::size_t k = 0; k < n; ++k) {
    bool trailing_zero = false;
    // pivot: smallest-magnitude nonzero entry of the trailing block,
    // re-selected after every pass so remainders become the next pivot and
    // entry magnitudes stay in check
    for (;;) {
      std::size_t pr = k, pc = k;
      mpz_class best = 0;
      for (std::size_t i = k; i < m.rows(); ++i) {
        for (std::size_t j = k; j < m.cols(); ++j) {
          const mpz_class& e = w.a.at(i, j);
          if (e == 0) continue;
          mpz_class mag = abs(e);
          if (best == 0 || mag < best) {
            best = mag;
            pr = i;
            pc = j;
          }
        }
      }
      if (best == 0) {
        trailing_zero = true;
        break;
      }
      w.row_swap(k, pr);
      w.col_swap(k, pc);

      bool clean = true;
      for (std::size_t i = k + 1; i < m.rows(); ++i) {
        if (w.a.at(i, k) != 0) {
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), w.a.at(i, k).get_mpz_t(), w.a.at(k, k).get_mpz_t());
          w.row_add(i, k, -q);
          if (w.a.at(i, k) != 0) clean = false;  // remainder: re-pick the pivot
        }
      }
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        if (w.a.at(k, j) != 0) {
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), w.a.at(k, j).get_mpz_t(), w.a.at(k, k).get_mpz_t());
          w.col_add(j, k, -q);
          if (w.a.at(k, j) != 0) clean = false;
        }
      }
      if (clean) break;
    }
    if (trailing_zero) break;
    if (w.a.at(k, k) < 0) w.row_negate(k);
  }

  // enforce the divisibility chain d_k | d_{k+1}
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t j = k + 1; j < n; ++j) {
      if (w.a.at(k, k) == 0 || w.a.at(j, j) % w.a.at(k, k) != 0) {
        // fold d_j into column k and re-reduce the 2x2 corner
        w.col_add(k, j, 1);
        for (;;) {
          if (w.a.at(j, k) == 0 && w.a.at(k, j) == 0) break;
          if (w.a.at(k, k) == 0) {
            if (w.a.at(j, k) != 0) w.row_swap(k, j);
            else w.col_swap(k, j);
            continue;
          }
          mpz_class q;
          if (w.a.at(j, k) != 0) {
            mpz_fdiv_q(q.get_mpz_t(), w.a.at(j, k).get_mpz_t(), w.a.at(k, k).get_mpz_t());
            w.row_add(j, k, -q);
            if (w.a.at(j, k) != 0) w.row_swap(k, j);
          } else {
            mpz_fdiv_q(q.get_mpz_t(), w.a.at(k, j).get_mpz_t(), w.a.at(k, k).get_mpz_t());
            w.col_add(j, k, -q);
            if (w.a.at(k, j) != 0) w.col_swap(k, j);
          }
        }
        if (w.a.at(k, k) < 0) w.row_negate(k);
        if (w.a.at(j, j) < 0) w.row_negate(j);
      }
    }
  }
  // a zero diagonal entry appearing before a nonzero one breaks the chain
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = k + 1; j < n; ++j) {
      if (w.a.at(k, k) == 0 && w.a.at(j, j) != 0) {
        w.row_swap(k, j);
        w.col_swap(k, j);
      }
    }
  }

  return {std::move(w.a), std::move(w.u), std::move(w.v)};
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.num_generators());
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    for (const Letter& l : p.relators()[i].letters()) {
      m.at(i, l.gen) += l.sign;
    }
  }
  return m;
}

AbelianInvariants cokernel_invariants(const IntMatrix& m) {
  SmithResult snf = smith_normal_form(m);
  AbelianInvariants inv;
  const std::size_t n = std::min(m.rows(), m.cols());
  std::size_t nonzero = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const mpz_class& d = snf.d.at(k, k);
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.free_rank = m.cols() - nonzero;
  return inv;
}

AbelianInvariants abelianization(const Presentation& p) {
  return cokernel_invariants(relation_matrix(p));
}

std::string AbelianInvariants::to_string() const {
  if (free_rank == 0 && torsion.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  if (free_rank == 1) {
    out << "Z";
    first = false;
  } else if (free_rank > 1) {
    out << "Z^" << free_rank;
    first = false;
  }
  for (const mpz_class& d : torsion) {
    if (!first) out << " + ";
    out << "Z/" << d.get_str();
    first = false;
  }
  return out.str();
}

AbelianInvariants AbelianInvariants::parse(const std::string& text) {
  AbelianInvariants inv;
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t == "1" || t == "0") return inv;
  std::size_t pos = 0;
  while (pos < t.size()) {
    if (t[pos] == '+') ++pos;
    if (t[pos] != 'Z') throw presentation_error("bad abelian group literal: " + text);
    ++pos;
    if (pos < t.size() && t[pos] == '/') {
      ++pos;
      std::size_t start = pos;
      while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
      if (start == pos) throw presentation_error("bad torsion order in: " + text);
      inv.torsion.emplace_back(t.substr(start, pos - start));
    } else if (pos < t.size() && t[pos] == '^') {
      ++pos;
      std::size_t start = pos;
      while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
      if (start == pos) throw presentation_error("bad free rank in: " + text);
      inv.free_rank += std::stoul(t.substr(start, pos - start));
    } else {
      inv.free_rank += 1;
    }
  }
  // normalize torsion into a divisibility chain via the matrix machinery
  if (!inv.torsion.empty()) {
    IntMatrix m(inv.torsion.size(), inv.torsion.size());
    for (std::size_t i = 0; i < inv.torsion.size(); ++i) m.at(i, i) = inv.torsion[i];
    AbelianInvariants fixed = cokernel_invariants(m);
    inv.torsion = std::move(fixed.torsion);
  }
  return inv;
}

}  // namespace luttinger

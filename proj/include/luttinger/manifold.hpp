#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "luttinger/presentation.hpp"

namespace luttinger {

struct manifold_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An embedded surface with trivialized normal bundle, recorded through its
/// complement data: meridian word and framed push-offs of a symplectic basis.
struct MarkedSubmanifold {
  std::string label;
  int genus = 0;
  Word meridian;
  std::vector<Word> pushoff_basis;         // 2 * genus words
  std::vector<std::string> basis_labels;   // 2 * genus names, for gluing matches
  std::string framing_note;

  friend bool operator==(const MarkedSubmanifold&, const MarkedSubmanifold&) = default;
};

/// A 4-manifold building block: invariants plus the fundamental group of the
/// complement of the union of all marked submanifolds.
struct ManifoldBlock {
  std::string name;
  int euler = 0;
  int signature = 0;
  Presentation complement;
  std::vector<MarkedSubmanifold> marked;
  std::set<std::string> flags;      // informational only (symplectic, minimal, ...)
  std::vector<std::string> notes;   // caveats recorded by operations

  const MarkedSubmanifold& find_marked(const std::string& label) const;
  void validate() const;
};

/// Matches push-off basis positions of one surface to the other's, with a
/// sign per pair (-1 glues to the inverse of the matched basis word).
struct GluingMatch {
  struct Pair {
    std::size_t left_pos;
    std::size_t right_pos;
    int sign = 1;
  };
  std::vector<Pair> pairs;

  /// Identity matching of 2g basis positions, all signs +1.
  static GluingMatch identity(int genus);

  /// Builds a match from `left_label -> right_label` / `-> right_label^-1`
  /// arrows resolved against the surfaces' basis labels.
  static GluingMatch from_labels(
      const MarkedSubmanifold& left, const MarkedSubmanifold& right,
      const std::vector<std::pair<std::string, std::string>>& arrows,
      const std::vector<int>& signs);
};

/// Fills every marked piece back in: quotients the complement by the normal
/// closure of all marked meridians.
Presentation closed_pi1(const ManifoldBlock& b);

/// Symplectic sum of x and y along the marked surfaces sx and sy (equal
/// genus, framed). The result's complement is the free product of the two
/// complements modulo push-off matching and meridian identification; euler
/// adds with a 2*(2-2g) correction, signatures add.
ManifoldBlock fiber_sum(const ManifoldBlock& x, const std::string& sx,
                        const ManifoldBlock& y, const std::string& sy,
                        const GluingMatch& match);

/// 1/k surgery on a marked genus-1 torus along direction (p, q) in its
/// push-off basis: the meridian word becomes gamma^k * mu with
/// gamma = pushoff1^p * pushoff2^q. Euler characteristic, signature, and the
/// complement presentation are unchanged; the torus stays marked.
ManifoldBlock luttinger(const ManifoldBlock& b, const std::string& torus,
                        std::pair<long long, long long> gamma, long long k);

/// Fundamental group of a generalized mapping torus: adds generator t_name
/// and relators t i(g) t^-1 f(g)^-1 for each listed subgroup generator.
Presentation hnn_mapping_torus(const Presentation& x,
                               const std::vector<std::pair<Word, Word>>& sub_gens,
                               const std::string& t_name);

/// Invariant bookkeeping for n blow-ups: e += n, sigma -= n.
ManifoldBlock blow_up(const ManifoldBlock& b, int n);

/// (e, sigma) = (12 + 8(g+r), -8 - 4(g+r)) for a group with g generators and
/// r relations.
std::pair<long long, long long> geography_formulas(long long g, long long r);

/// (e, sigma) = (11 - 5n + 2n^2, -3 - n) for fundamental group Z^(2n-1).
std::pair<long long, long long> free_abelian_formula(long long n);

}  // namespace luttinger

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "luttinger/presentation.hpp"

namespace luttinger {

/// Target of a homomorphism count: the symmetric group S_n (n <= 5) or the
/// cyclic group Z/m (m <= 12).
struct FiniteTarget {
  enum class Kind { symmetric, cyclic } kind;
  int parameter;

  static FiniteTarget symmetric(int n);
  static FiniteTarget cyclic(int m);

  /// Parses "S3", "S4", "Z/6", ...
  static FiniteTarget parse(const std::string& spec);

  std::string name() const;
  std::uint64_t order() const;
};

/// Exact count of homomorphisms into the target, by backtracking search over
/// generator images with relator pruning. nullopt means the search space
/// exceeded `node_cap` (an explicit "too large" result, not an error).
std::optional<std::uint64_t> count_homomorphisms(const Presentation& p,
                                                 const FiniteTarget& target,
                                                 std::uint64_t node_cap = 400'000'000);

}  // namespace luttinger

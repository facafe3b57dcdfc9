#pragma once

#include <cstdint>
#include <vector>

#include "luttinger/presentation.hpp"

namespace luttinger {

/// Outcome of a coset enumeration over the trivial subgroup.
struct EnumerationResult {
  enum class Outcome { finite, exceeded } outcome;
  std::uint64_t order = 0;        // meaningful when finite
  std::uint64_t cap = 0;          // meaningful when exceeded
  std::uint64_t live_cosets = 0;  // live rows when the run ended
  std::uint64_t work = 0;         // cosets defined in total

  bool is_finite() const { return outcome == Outcome::finite; }
};

inline constexpr std::uint64_t kDefaultCosetCap = 50'000;

/// HLT-style Todd-Coxeter enumeration over the trivial subgroup with
/// immediate coincidence processing. Deterministic given (p, cap). Returns
/// Finite(order) iff the table closes within the cap; infinite groups always
/// exhaust the cap.
EnumerationResult todd_coxeter(const Presentation& p, std::uint64_t cap = kDefaultCosetCap);

/// The closed coset table's generator actions as permutations of the live
/// cosets (one permutation per generator). Only valid for finite outcomes;
/// used by tests to cross-check the order via the regular action.
std::vector<std::vector<std::uint32_t>> coset_action(const Presentation& p,
                                                     std::uint64_t cap = kDefaultCosetCap);

}  // namespace luttinger

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "luttinger/presentation.hpp"

namespace luttinger {

/// Bounds on the simplification search. Exhausting the budget is not an
/// error; the best presentation found so far is returned with a flag.
struct TietzeBudget {
  int max_passes = 64;
  std::size_t max_relator_length = 4096;
  std::size_t subword_relator_limit = 64;  // relators longer than this are not used as rewrite rules
  std::size_t replace_window = 16;         // longest subword considered for replacement
};

/// One rewrite step in a derivation: at `position` in the (cyclic) word, a
/// subword of `length` letters matching relator `relator_index` (rotated by
/// `rotation`, inverted if `inverted`) was replaced by the shorter complement.
struct RewriteStep {
  std::size_t relator_index;
  std::size_t rotation;
  bool inverted;
  std::size_t position;
  std::size_t length;
};

/// Witness that `target` presents the same group as `source`: every source
/// generator maps to a word over the target's generators, and every source
/// relator's image reduces to the identity via the recorded derivation log
/// (free reduction plus rewriting with target relators).
struct SimplificationCertificate {
  Presentation source;
  Presentation target;
  std::vector<Word> generator_images;  // indexed by source generator id
  std::vector<std::vector<RewriteStep>> derivation_log;  // per source relator
  bool replay_verified = false;
  bool budget_exhausted = false;

  /// Maps a word over the source generators through generator_images and
  /// freely reduces.
  Word rewrite(const Word& w) const;
};

/// Deterministic fixpoint simplification: drop trivial relators, eliminate
/// generators occurring exactly once in some relator, canonicalize and
/// deduplicate, and shorten relators against each other (bounded search).
std::pair<Presentation, SimplificationCertificate> tietze_simplify(
    const Presentation& p, const TietzeBudget& budget = {});

/// Semi-decision of triviality: rewrites w through the certificate, freely
/// reduces, then attempts reduction by the target's relators. A false return
/// means "not shown trivial", not "nontrivial".
bool word_trivial_under(const SimplificationCertificate& cert, const Word& w);

/// Re-runs the recorded derivation log; true iff every source relator's
/// image reduces to the identity.
bool certificate_replay(const SimplificationCertificate& cert);

/// Composition: source of a, target of b (a.target must equal b.source).
SimplificationCertificate compose(const SimplificationCertificate& a,
                                  const SimplificationCertificate& b);

/// Greedy reduction of w (as a cyclic word, i.e. up to conjugacy) using the
/// presentation's relators as rewrite rules. Returns the step sequence if w
/// reduces to the identity.
std::optional<std::vector<RewriteStep>> reduce_to_identity(
    const Word& w, const Presentation& p);

}  // namespace luttinger

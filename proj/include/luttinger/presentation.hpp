#pragma once

#include <optional>
#include <string>
#include <vector>

#include "luttinger/word.hpp"

namespace luttinger {

struct presentation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Named generator of a finitely presented group; id is its position in the
/// presentation's generator list.
struct GeneratorSymbol {
  std::string name;
  int id = 0;
  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

/// A finitely presented group: generators plus relators. Relators are kept
/// freely and cyclically reduced in canonical form (minimal rotation of the
/// word or its inverse), with duplicates and trivial relators dropped.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

  const std::vector<GeneratorSymbol>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

  int num_generators() const { return static_cast<int>(generators_.size()); }
  std::optional<int> generator_id(const std::string& name) const;
  const std::string& generator_name(int id) const { return generators_.at(id).name; }

  /// Validates that w only uses declared generators.
  void check_word(const Word& w) const;

  /// Appends extra words as relators (normalized, duplicates dropped).
  Presentation with_extra_relators(const std::vector<Word>& extra) const;

  /// Same generators and identical canonical relator multiset.
  bool same_presentation(const Presentation& other) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<GeneratorSymbol> generators_;
  std::vector<Word> relators_;
};

struct FreeProductResult {
  Presentation presentation;
  /// New name of each right-hand generator (renamed on collision with the
  /// left factor). Indexed by the right factor's generator ids; words of the
  /// right factor map through `right_offset` plus identity on ids.
  std::vector<std::string> right_names;
  int right_offset = 0;

  /// Transports a word over the right factor into the product.
  Word transport_right(const Word& w) const;
};

/// Disjoint union of generators and relators; right-factor generator names
/// colliding with the left factor get an apostrophe suffix.
FreeProductResult free_product(const Presentation& p, const Presentation& q);

/// Adds the given words to the relator list (kills their normal closure).
Presentation quotient_by_normal_closure(const Presentation& p,
                                        const std::vector<Word>& extra);

/// Adds one central generator: a new generator `name` (suffixed on collision)
/// plus relators [name, g] for every existing generator g.
Presentation direct_sum_with_Z(const Presentation& p, const std::string& name);

}  // namespace luttinger

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace luttinger {

/// Raised when a word references a generator id outside the declared range.
struct malformed_word_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One letter of a free-group word: a generator id with exponent +1 or -1.
struct Letter {
  int gen = 0;
  int sign = 1;

  Letter inverse() const { return {gen, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter& a, const Letter& b) {
    // positive exponent sorts before negative for the same generator
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    return b.sign <=> a.sign;
  }
};

/// A freely reduced word in a free group. The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) { assign(std::move(letters)); }

  static Word generator(int gen, int sign = 1) {
    return Word(std::vector<Letter>{{gen, sign}});
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  Word inverse() const;

  /// Concatenation followed by free reduction.
  Word operator*(const Word& rhs) const;

  /// Integer power, negative exponents allowed.
  Word pow(long long k) const;

  /// Largest generator id used, or -1 for the identity word.
  int max_generator() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  void assign(std::vector<Letter> letters);
  std::vector<Letter> letters_;
};

/// Free reduction of a raw letter sequence; throws malformed_word_error if a
/// letter references an id outside [0, num_generators).
Word free_reduce(const std::vector<Letter>& letters, int num_generators);

/// Free reduction with no generator-range check.
Word free_reduce(const std::vector<Letter>& letters);

/// [u, v] = u v u^-1 v^-1, freely reduced.
Word commutator(const Word& u, const Word& v);

/// Removes matching first/last letters; the result is a conjugate of w.
Word cyclic_reduce(const Word& w);

/// Canonical representative of a relator: cyclically reduce, then take the
/// lexicographically minimal rotation among all rotations of the word and of
/// its inverse.
Word relator_canonical(const Word& w);

}  // namespace luttinger

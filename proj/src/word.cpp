#include "luttinger/word.hpp"

#include <algorithm>

namespace luttinger {

void Word::assign(std::vector<Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  letters_ = std::move(out);
}

Word Word::inverse() const {
  std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
  for (Letter& l : rev) l.sign = -l.sign;
  Word w;
  w.letters_ = std::move(rev);  // reversal of a reduced word is reduced
  return w;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> cat = letters_;
  cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(cat));
}

Word Word::pow(long long k) const {
  Word base = k < 0 ? inverse() : *this;
  long long n = k < 0 ? -k : k;
  Word acc;
  for (long long i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

int Word::max_generator() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

Word free_reduce(const std::vector<Letter>& letters, int num_generators) {
  for (const Letter& l : letters) {
    if (l.gen < 0 || l.gen >= num_generators) {
      throw malformed_word_error("letter references unknown generator id " +
                                 std::to_string(l.gen));
    }
    if (l.sign != 1 && l.sign != -1) {
      throw malformed_word_error("letter exponent must be +1 or -1");
    }
  }
  return Word(letters);
}

Word free_reduce(const std::vector<Letter>& letters) { return Word(letters); }

Word commutator(const Word& u, const Word& v) {
  return u * v * u.inverse() * v.inverse();
}

Word cyclic_reduce(const Word& w) {
  std::vector<Letter> ls = w.letters();
  std::size_t i = 0, j = ls.size();
  while (j - i >= 2 && ls[i].gen == ls[j - 1].gen && ls[i].sign == -ls[j - 1].sign) {
    ++i;
    --j;
  }
  return Word(std::vector<Letter>(ls.begin() + i, ls.begin() + j));
}

Word relator_canonical(const Word& w) {
  Word c = cyclic_reduce(w);
  if (c.is_identity()) return c;
  const auto consider = [](const std::vector<Letter>& ls, std::vector<Letter>& best) {
    const std::size_t n = ls.size();
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Letter> rot;
      rot.reserve(n);
      rot.insert(rot.end(), ls.begin() + r, ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + r);
      if (best.empty() || std::lexicographical_compare(
                              rot.begin(), rot.end(), best.begin(), best.end(),
                              [](const Letter& a, const Letter& b) { return a < b; })) {
        best = std::move(rot);
      }
    }
  };
  std::vector<Letter> best;
  consider(c.letters(), best);
  consider(c.inverse().letters(), best);
  Word out(best);
  return out;
}

}  // namespace luttinger

#include "luttinger/presentation.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace luttinger {

namespace {

std::vector<Word> normalize_relators(const std::vector<Word>& raw, int num_gens) {
  std::vector<Word> out;
  std::set<Word> seen;
  for (const Word& r : raw) {
    if (r.max_generator() >= num_gens) {
      throw presentation_error("relator references undeclared generator");
    }
    Word c = relator_canonical(r);
    if (c.is_identity()) continue;
    if (seen.insert(c).second) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Presentation::Presentation(std::vector<std::string> generator_names,
                           std::vector<Word> relators) {
  std::unordered_set<std::string> names;
  for (std::size_t i = 0; i < generator_names.size(); ++i) {
    if (generator_names[i].empty()) {
      throw presentation_error("empty generator name");
    }
    if (!names.insert(generator_names[i]).second) {
      throw presentation_error("duplicate generator name: " + generator_names[i]);
    }
    generators_.push_back({generator_names[i], static_cast<int>(i)});
  }
  relators_ = normalize_relators(relators, num_generators());
}

std::optional<int> Presentation::generator_id(const std::string& name) const {
  for (const GeneratorSymbol& g : generators_) {
    if (g.name == name) return g.id;
  }
  return std::nullopt;
}

void Presentation::check_word(const Word& w) const {
  if (w.max_generator() >= num_generators()) {
    throw malformed_word_error("word references undeclared generator");
  }
}

Presentation Presentation::with_extra_relators(const std::vector<Word>& extra) const {
  std::vector<std::string> names;
  for (const GeneratorSymbol& g : generators_) names.push_back(g.name);
  std::vector<Word> rels = relators_;
  rels.insert(rels.end(), extra.begin(), extra.end());
  return Presentation(std::move(names), std::move(rels));
}

bool Presentation::same_presentation(const Presentation& other) const {
  if (generators_ != other.generators_) return false;
  std::multiset<Word> a(relators_.begin(), relators_.end());
  std::multiset<Word> b(other.relators_.begin(), other.relators_.end());
  return a == b;
}

Word FreeProductResult::transport_right(const Word& w) const {
  std::vector<Letter> ls = w.letters();
  for (Letter& l : ls) l.gen += right_offset;
  return Word(std::move(ls));
}

FreeProductResult free_product(const Presentation& p, const Presentation& q) {
  std::vector<std::string> names;
  std::unordered_set<std::string> used;
  for (const GeneratorSymbol& g : p.generators()) {
    names.push_back(g.name);
    used.insert(g.name);
  }
  FreeProductResult res;
  res.right_offset = p.num_generators();
  for (const GeneratorSymbol& g : q.generators()) {
    std::string name = g.name;
    while (used.count(name)) name += "'";
    used.insert(name);
    names.push_back(name);
    res.right_names.push_back(name);
  }
  std::vector<Word> rels = p.relators();
  for (const Word& r : q.relators()) rels.push_back(res.transport_right(r));
  res.presentation = Presentation(std::move(names), std::move(rels));
  return res;
}

Presentation quotient_by_normal_closure(const Presentation& p,
                                        const std::vector<Word>& extra) {
  for (const Word& w : extra) p.check_word(w);
  return p.with_extra_relators(extra);
}

Presentation direct_sum_with_Z(const Presentation& p, const std::string& name) {
  std::vector<std::string> names;
  std::unordered_set<std::string> used;
  for (const GeneratorSymbol& g : p.generators()) {
    names.push_back(g.name);
    used.insert(g.name);
  }
  std::string s = name;
  while (used.count(s)) s += "'";
  names.push_back(s);
  const int sid = p.num_generators();
  std::vector<Word> rels = p.relators();
  for (int g = 0; g < p.num_generators(); ++g) {
    rels.push_back(commutator(Word::generator(sid), Word::generator(g)));
  }
  return Presentation(std::move(names), std::move(rels));
}

}  // namespace luttinger

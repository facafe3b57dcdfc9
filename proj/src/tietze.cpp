#include "luttinger/tietze.hpp"

#include <algorithm>
#include <cstddef>
#include <set>

namespace luttinger {

namespace {

Word substitute(const Word& w, int gen, const Word& repl) {
  Word repl_inv = repl.inverse();
  std::vector<Letter> out;
  out.reserve(w.length());
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) {
      const auto& src = (l.sign > 0 ? repl : repl_inv).letters();
      out.insert(out.end(), src.begin(), src.end());
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word remap_after_removal(const Word& w, int removed_gen) {
  std::vector<Letter> ls = w.letters();
  for (Letter& l : ls) {
    if (l.gen > removed_gen) --l.gen;
  }
  return Word(std::move(ls));
}

// Attempts one shortening of w (treated as a cyclic word) using the given
// relators as rewrite rules. A subword matching more than half of a rotated
// relator (or its inverse) is replaced by the inverted complement.
std::optional<RewriteStep> find_shortening(const Word& w, const std::vector<Word>& rules,
                                           std::size_t skip_index, std::size_t rule_len_limit,
                                           std::size_t window_limit) {
  const auto& wl = w.letters();
  const std::size_t n = wl.size();
  if (n == 0) return std::nullopt;
  for (std::size_t ui = 0; ui < rules.size(); ++ui) {
    if (ui == skip_index) continue;
    const Word& u = rules[ui];
    const std::size_t m = u.length();
    if (m == 0 || m > rule_len_limit) continue;
    const std::size_t lmin = m / 2 + 1;
    std::size_t lmax = std::min({n, m, window_limit});
    if (window_limit == 0) lmax = std::min(n, m);
    for (std::size_t len = lmax; len + 1 > lmin; --len) {
      for (int inv = 0; inv < 2; ++inv) {
        const Word variant = inv ? u.inverse() : u;
        const auto& vl = variant.letters();
        for (std::size_t rot = 0; rot < m; ++rot) {
          for (std::size_t pos = 0; pos < n; ++pos) {
            bool match = true;
            for (std::size_t k = 0; k < len; ++k) {
              if (wl[(pos + k) % n] != vl[(rot + k) % m]) {
                match = false;
                break;
              }
            }
            if (match) {
              return RewriteStep{ui, rot, inv != 0, pos, len};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

Word apply_step(const Word& w, const std::vector<Word>& rules, const RewriteStep& step) {
  const Word& u = rules[step.relator_index];
  const Word variant = step.inverted ? u.inverse() : u;
  const auto& vl = variant.letters();
  const std::size_t m = vl.size();
  // complement: the part of the rotated rule after the matched prefix
  std::vector<Letter> comp;
  for (std::size_t k = step.length; k < m; ++k) comp.push_back(vl[(step.rotation + k) % m]);
  Word comp_inv = Word(std::move(comp)).inverse();
  const auto& wl = w.letters();
  const std::size_t n = wl.size();
  std::vector<Letter> out = comp_inv.letters();
  for (std::size_t k = step.length; k < n; ++k) out.push_back(wl[(step.position + k) % n]);
  return cyclic_reduce(Word(std::move(out)));
}

struct SimplifyState {
  std::vector<std::string> names;
  std::vector<Word> relators;
  std::vector<Word> images;  // source generator -> word over current generators

  bool normalize() {
    bool changed = false;
    std::vector<Word> out;
    std::set<Word> seen;
    for (const Word& r : relators) {
      Word c = relator_canonical(r);
      if (c != r) changed = true;
      if (c.is_identity()) {
        changed = true;
        continue;
      }
      if (!seen.insert(c).second) {
        changed = true;
        continue;
      }
      out.push_back(std::move(c));
    }
    relators = std::move(out);
    return changed;
  }

  // Eliminates the lowest-id generator occurring exactly once (exponent +-1)
  // in some relator, substituting its solved expression everywhere.
  bool try_eliminate(const TietzeBudget& budget) {
    for (int g = 0; g < static_cast<int>(names.size()); ++g) {
      std::size_t best = relators.size();
      for (std::size_t i = 0; i < relators.size(); ++i) {
        int count = 0;
        for (const Letter& l : relators[i].letters()) {
          if (l.gen == g) ++count;
        }
        if (count == 1 &&
            (best == relators.size() || relators[i].length() < relators[best].length())) {
          best = i;
        }
      }
      if (best == relators.size()) continue;

      const auto& rl = relators[best].letters();
      std::size_t k = 0;
      while (rl[k].gen != g) ++k;
      std::vector<Letter> a(rl.begin(), rl.begin() + k);
      std::vector<Letter> b(rl.begin() + k + 1, rl.end());
      // A g B = 1  =>  g = A^-1 B^-1 ; A g^-1 B = 1  =>  g = B A
      Word solved = rl[k].sign > 0 ? Word(a).inverse() * Word(b).inverse() : Word(b) * Word(a);

      std::vector<Word> new_rels;
      bool too_long = false;
      for (std::size_t i = 0; i < relators.size(); ++i) {
        if (i == best) continue;
        Word s = substitute(relators[i], g, solved);
        if (s.length() > budget.max_relator_length) {
          too_long = true;
          break;
        }
        new_rels.push_back(remap_after_removal(s, g));
      }
      if (too_long) continue;

      for (Word& img : images) img = remap_after_removal(substitute(img, g, solved), g);
      relators = std::move(new_rels);
      names.erase(names.begin() + g);
      return true;
    }
    return false;
  }

  bool shorten_sweep(const TietzeBudget& budget) {
    bool changed = false;
    for (std::size_t i = 0; i < relators.size(); ++i) {
      for (;;) {
        auto step = find_shortening(relators[i], relators, i, budget.subword_relator_limit,
                                    budget.replace_window);
        if (!step) break;
        relators[i] = apply_step(relators[i], relators, *step);
        changed = true;
        if (relators[i].is_identity()) break;
      }
    }
    return changed;
  }
};

}  // namespace

Word SimplificationCertificate::rewrite(const Word& w) const {
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || l.gen >= static_cast<int>(generator_images.size())) {
      throw malformed_word_error("word does not fit the certificate's source generators");
    }
    Word img = l.sign > 0 ? generator_images[l.gen] : generator_images[l.gen].inverse();
    out.insert(out.end(), img.letters().begin(), img.letters().end());
  }
  return Word(std::move(out));
}

std::optional<std::vector<RewriteStep>> reduce_to_identity(const Word& w,
                                                           const Presentation& p) {
  std::vector<RewriteStep> log;
  Word cur = cyclic_reduce(w);
  while (!cur.is_identity()) {
    auto step = find_shortening(cur, p.relators(), p.relators().size(),
                                /*rule_len_limit=*/std::size_t(-1), /*window_limit=*/0);
    if (!step) return std::nullopt;
    log.push_back(*step);
    cur = apply_step(cur, p.relators(), *step);
  }
  return log;
}

std::pair<Presentation, SimplificationCertificate> tietze_simplify(
    const Presentation& p, const TietzeBudget& budget) {
  SimplifyState st;
  for (const GeneratorSymbol& g : p.generators()) st.names.push_back(g.name);
  st.relators = p.relators();
  for (int i = 0; i < p.num_generators(); ++i) st.images.push_back(Word::generator(i));

  st.normalize();
  bool exhausted = true;
  for (int pass = 0; pass < budget.max_passes; ++pass) {
    bool changed = false;
    while (st.try_eliminate(budget)) {
      st.normalize();
      changed = true;
    }
    if (st.shorten_sweep(budget)) {
      st.normalize();
      changed = true;
    }
    if (!changed) {
      exhausted = false;
      break;
    }
  }

  SimplificationCertificate cert;
  cert.source = p;
  cert.target = Presentation(st.names, st.relators);
  cert.generator_images = std::move(st.images);
  cert.budget_exhausted = exhausted;
  cert.replay_verified = true;
  for (const Word& r : p.relators()) {
    auto log = reduce_to_identity(cert.rewrite(r), cert.target);
    if (!log) {
      cert.replay_verified = false;
      cert.derivation_log.emplace_back();
    } else {
      cert.derivation_log.push_back(std::move(*log));
    }
  }
  return {cert.target, cert};
}

bool word_trivial_under(const SimplificationCertificate& cert, const Word& w) {
  Word image = cert.rewrite(w);
  if (image.is_identity()) return true;
  return reduce_to_identity(image, cert.target).has_value();
}

bool certificate_replay(const SimplificationCertificate& cert) {
  if (cert.derivation_log.size() != cert.source.relators().size()) return false;
  for (std::size_t i = 0; i < cert.source.relators().size(); ++i) {
    Word cur = cyclic_reduce(cert.rewrite(cert.source.relators()[i]));
    for (const RewriteStep& step : cert.derivation_log[i]) {
      if (cur.is_identity()) return false;
      cur = apply_step(cur, cert.target.relators(), step);
    }
    if (!cur.is_identity()) return false;
  }
  return true;
}

SimplificationCertificate compose(const SimplificationCertificate& a,
                                  const SimplificationCertificate& b) {
  if (!a.target.same_presentation(b.source)) {
    throw presentation_error("certificate composition: presentations do not chain");
  }
  SimplificationCertificate out;
  out.source = a.source;
  out.target = b.target;
  for (const Word& img : a.generator_images) out.generator_images.push_back(b.rewrite(img));
  out.budget_exhausted = a.budget_exhausted || b.budget_exhausted;
  out.replay_verified = true;
  for (const Word& r : out.source.relators()) {
    auto log = reduce_to_identity(out.rewrite(r), out.target);
    if (!log) {
      out.replay_verified = false;
      out.derivation_log.emplace_back();
    } else {
      out.derivation_log.push_back(std::move(*log));
    }
  }
  return out;
}

}  // namespace luttinger

#include "luttinger/manifold.hpp"

#include <algorithm>
#include <unordered_set>

#include "luttinger/tietze.hpp"

namespace luttinger {

const MarkedSubmanifold& ManifoldBlock::find_marked(const std::string& label) const {
  for (const MarkedSubmanifold& m : marked) {
    if (m.label == label) return m;
  }
  throw manifold_error("block '" + name + "' has no marked submanifold '" + label + "'");
}

void ManifoldBlock::validate() const {
  std::unordered_set<std::string> labels;
  for (const MarkedSubmanifold& m : marked) {
    if (!labels.insert(m.label).second) {
      throw manifold_error("duplicate marked label '" + m.label + "' in block " + name);
    }
    if (m.pushoff_basis.size() != static_cast<std::size_t>(2 * m.genus)) {
      throw manifold_error("push-off basis of '" + m.label + "' must have 2*genus words");
    }
    complement.check_word(m.meridian);
    for (const Word& w : m.pushoff_basis) complement.check_word(w);
  }
}

GluingMatch GluingMatch::identity(int genus) {
  GluingMatch m;
  for (std::size_t i = 0; i < static_cast<std::size_t>(2 * genus); ++i) {
    m.pairs.push_back({i, i, 1});
  }
  return m;
}

GluingMatch GluingMatch::from_labels(
    const MarkedSubmanifold& left, const MarkedSubmanifold& right,
    const std::vector<std::pair<std::string, std::string>>& arrows,
    const std::vector<int>& signs) {
  if (arrows.size() != signs.size()) throw manifold_error("match arrows/signs mismatch");
  auto position = [](const MarkedSubmanifold& s, const std::string& name) {
    auto it = std::find(s.basis_labels.begin(), s.basis_labels.end(), name);
    if (it == s.basis_labels.end()) {
      throw manifold_error("surface '" + s.label + "' has no basis loop '" + name + "'");
    }
    return static_cast<std::size_t>(it - s.basis_labels.begin());
  };
  GluingMatch m;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    m.pairs.push_back({position(left, arrows[i].first), position(right, arrows[i].second),
                       signs[i]});
  }
  return m;
}

Presentation closed_pi1(const ManifoldBlock& b) {
  std::vector<Word> meridians;
  for (const MarkedSubmanifold& m : b.marked) meridians.push_back(m.meridian);
  return quotient_by_normal_closure(b.complement, meridians);
}

ManifoldBlock fiber_sum(const ManifoldBlock& x, const std::string& sx,
                        const ManifoldBlock& y, const std::string& sy,
                        const GluingMatch& match) {
  const MarkedSubmanifold& fx = x.find_marked(sx);
  const MarkedSubmanifold& fy = y.find_marked(sy);
  if (fx.genus != fy.genus) {
    throw manifold_error("fiber sum genus mismatch: " + sx + " has genus " +
                         std::to_string(fx.genus) + ", " + sy + " has genus " +
                         std::to_string(fy.genus));
  }
  const std::size_t basis = static_cast<std::size_t>(2 * fx.genus);
  if (match.pairs.size() != basis) {
    throw manifold_error("gluing match must pair all " + std::to_string(basis) +
                         " basis positions");
  }
  std::unordered_set<std::size_t> lpos, rpos;
  for (const auto& pr : match.pairs) {
    if (pr.left_pos >= basis || pr.right_pos >= basis) {
      throw manifold_error("gluing match position out of range");
    }
    if (!lpos.insert(pr.left_pos).second || !rpos.insert(pr.right_pos).second) {
      throw manifold_error("gluing match is not a bijection on basis positions");
    }
  }

  FreeProductResult prod = free_product(x.complement, y.complement);

  std::vector<Word> extra;
  for (const auto& pr : match.pairs) {
    Word lhs = fx.pushoff_basis[pr.left_pos];
    Word rhs = prod.transport_right(fy.pushoff_basis[pr.right_pos]);
    if (pr.sign < 0) rhs = rhs.inverse();
    extra.push_back(lhs * rhs.inverse());
  }
  Word mu_y = prod.transport_right(fy.meridian);
  extra.push_back(fx.meridian * mu_y.inverse());

  ManifoldBlock out;
  out.name = x.name + "#" + y.name;
  out.euler = x.euler + y.euler - 2 * (2 - 2 * fx.genus);
  out.signature = x.signature + y.signature;
  out.complement = quotient_by_normal_closure(prod.presentation, extra);
  for (const MarkedSubmanifold& m : x.marked) {
    if (m.label != sx) out.marked.push_back(m);
  }
  for (const MarkedSubmanifold& m : y.marked) {
    if (m.label == sy) continue;
    MarkedSubmanifold t = m;
    t.meridian = prod.transport_right(m.meridian);
    for (Word& w : t.pushoff_basis) w = prod.transport_right(w);
    while (std::any_of(out.marked.begin(), out.marked.end(),
                       [&](const MarkedSubmanifold& o) { return o.label == t.label; })) {
      t.label += "'";
    }
    out.marked.push_back(t);
  }
  if (x.flags.count("symplectic") && y.flags.count("symplectic")) {
    out.flags.insert("symplectic");
  }
  if (!fx.meridian.is_identity() && !fy.meridian.is_identity()) {
    out.notes.push_back(
        "warning: neither glued meridian is recorded as trivial; the twist of the "
        "gluing map is not modeled and may affect pi_1");
  }
  out.notes.insert(out.notes.end(), x.notes.begin(), x.notes.end());
  out.notes.insert(out.notes.end(), y.notes.begin(), y.notes.end());
  out.validate();
  return out;
}

ManifoldBlock luttinger(const ManifoldBlock& b, const std::string& torus,
                        std::pair<long long, long long> gamma, long long k) {
  const MarkedSubmanifold& t = b.find_marked(torus);
  if (t.genus != 1) {
    throw manifold_error("Luttinger surgery requires a genus-1 torus, '" + torus +
                         "' has genus " + std::to_string(t.genus));
  }
  auto [p, q] = gamma;
  if (p == 0 && q == 0) throw manifold_error("surgery direction (0,0) is not a curve");
  long long g = std::abs(p), h = std::abs(q);
  while (h != 0) {
    long long r = g % h;
    g = h;
    h = r;
  }
  if (g != 1) {
    throw manifold_error("surgery direction (" + std::to_string(p) + "," +
                         std::to_string(q) + ") is not primitive");
  }

  Word gamma_word = t.pushoff_basis[0].pow(p) * t.pushoff_basis[1].pow(q);

  ManifoldBlock out = b;
  for (MarkedSubmanifold& m : out.marked) {
    if (m.label == torus) m.meridian = gamma_word.pow(k) * m.meridian;
  }
  auto [simplified, cert] = tietze_simplify(b.complement);
  (void)simplified;
  if (p != 0 && q != 0 &&
      !word_trivial_under(cert, commutator(t.pushoff_basis[0], t.pushoff_basis[1]))) {
    out.notes.push_back("surgery on " + torus +
                        ": direction word formed as ordered concatenation, but the "
                        "push-off basis words were not shown to commute in the complement");
  }
  if (!word_trivial_under(cert, t.meridian)) {
    out.notes.push_back("surgery on " + torus +
                        ": stored meridian not shown trivial in the complement; framing "
                        "choice may matter");
  }
  out.validate();
  return out;
}

Presentation hnn_mapping_torus(const Presentation& x,
                               const std::vector<std::pair<Word, Word>>& sub_gens,
                               const std::string& t_name) {
  for (const auto& [i_img, f_img] : sub_gens) {
    x.check_word(i_img);
    x.check_word(f_img);
  }
  std::vector<std::string> names;
  std::unordered_set<std::string> used;
  for (const GeneratorSymbol& g : x.generators()) {
    names.push_back(g.name);
    used.insert(g.name);
  }
  std::string tn = t_name;
  while (used.count(tn)) tn += "'";
  names.push_back(tn);
  const int tid = x.num_generators();
  Word t = Word::generator(tid);
  std::vector<Word> rels = x.relators();
  for (const auto& [i_img, f_img] : sub_gens) {
    rels.push_back(t * i_img * t.inverse() * f_img.inverse());
  }
  return Presentation(std::move(names), std::move(rels));
}

ManifoldBlock blow_up(const ManifoldBlock& b, int n) {
  if (n < 0) throw manifold_error("blow-up count must be non-negative");
  ManifoldBlock out = b;
  out.euler += n;
  out.signature -= n;
  return out;
}

std::pair<long long, long long> geography_formulas(long long g, long long r) {
  if (g < 0 || r < 0) throw manifold_error("generator/relation counts must be >= 0");
  return {12 + 8 * (g + r), -8 - 4 * (g + r)};
}

std::pair<long long, long long> free_abelian_formula(long long n) {
  if (n < 1) throw manifold_error("free abelian formula requires n >= 1");
  return {11 - 5 * n + 2 * n * n, -3 - n};
}

}  // namespace luttinger

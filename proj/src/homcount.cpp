#include "luttinger/homcount.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

namespace luttinger {

FiniteTarget FiniteTarget::symmetric(int n) {
  if (n < 1 || n > 5) throw presentation_error("symmetric target limited to S1..S5");
  return {Kind::symmetric, n};
}

FiniteTarget FiniteTarget::cyclic(int m) {
  if (m < 1 || m > 12) throw presentation_error("cyclic target limited to Z/1..Z/12");
  return {Kind::cyclic, m};
}

FiniteTarget FiniteTarget::parse(const std::string& spec) {
  if (spec.size() >= 2 && spec[0] == 'S') return symmetric(std::stoi(spec.substr(1)));
  if (spec.size() >= 3 && spec[0] == 'Z' && spec[1] == '/') {
    return cyclic(std::stoi(spec.substr(2)));
  }
  throw presentation_error("unknown finite target '" + spec + "' (use S<n> or Z/<m>)");
}

std::string FiniteTarget::name() const {
  return kind == Kind::symmetric ? "S" + std::to_string(parameter)
                                 : "Z/" + std::to_string(parameter);
}

std::uint64_t FiniteTarget::order() const {
  if (kind == Kind::cyclic) return static_cast<std::uint64_t>(parameter);
  std::uint64_t f = 1;
  for (int i = 2; i <= parameter; ++i) f *= i;
  return f;
}

namespace {

// Multiplication/inverse tables for the target group, elements as indices.
struct GroupTable {
  int order;
  std::vector<int> mul;  // order x order
  std::vector<int> inv;

  int multiply(int a, int b) const { return mul[a * order + b]; }
};

GroupTable make_table(const FiniteTarget& t) {
  GroupTable g;
  if (t.kind == FiniteTarget::Kind::cyclic) {
    const int m = t.parameter;
    g.order = m;
    g.mul.resize(m * m);
    g.inv.resize(m);
    for (int a = 0; a < m; ++a) {
      g.inv[a] = (m - a) % m;
      for (int b = 0; b < m; ++b) g.mul[a * m + b] = (a + b) % m;
    }
    return g;
  }
  const int n = t.parameter;
  std::vector<std::array<int, 5>> perms;
  std::array<int, 5> base{};
  std::iota(base.begin(), base.begin() + n, 0);
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::array<int, 5> p{};
    for (int i = 0; i < n; ++i) p[i] = idx[i];
    perms.push_back(p);
  } while (std::next_permutation(idx.begin(), idx.end()));
  const int ord = static_cast<int>(perms.size());
  auto find = [&](const std::array<int, 5>& p) {
    for (int i = 0; i < ord; ++i) {
      if (std::equal(perms[i].begin(), perms[i].begin() + n, p.begin())) return i;
    }
    return -1;
  };
  g.order = ord;
  g.mul.resize(ord * ord);
  g.inv.resize(ord);
  for (int a = 0; a < ord; ++a) {
    for (int b = 0; b < ord; ++b) {
      std::array<int, 5> c{};
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];  // (a*b)(i) = a(b(i))
      g.mul[a * ord + b] = find(c);
    }
    std::array<int, 5> vi{};
    for (int i = 0; i < n; ++i) vi[perms[a][i]] = i;
    g.inv[a] = find(vi);
  }
  return g;
}

}  // namespace

std::optional<std::uint64_t> count_homomorphisms(const Presentation& p,
                                                 const FiniteTarget& target,
                                                 std::uint64_t node_cap) {
  if (p.num_generators() > 6) {
    throw presentation_error("count_homomorphisms limited to <= 6 generators");
  }
  const GroupTable g = make_table(target);
  const int ngens = p.num_generators();

  // Relators grouped by the depth at which all their generators are assigned.
  std::vector<std::vector<const Word*>> by_depth(ngens + 1);
  for (const Word& r : p.relators()) {
    int m = r.max_generator();
    if (m >= 0) by_depth[m].push_back(&r);
  }

  std::vector<int> assign(ngens, 0);
  auto eval = [&](const Word& w) {
    int acc = 0;  // identity element has index 0 in both table kinds
    for (const Letter& l : w.letters()) {
      int x = assign[l.gen];
      if (l.sign < 0) x = g.inv[x];
      acc = g.multiply(acc, x);
    }
    return acc;
  };

  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  bool capped = false;
  auto dfs = [&](auto&& self, int depth) -> void {
    if (capped) return;
    if (depth == ngens) {
      ++count;
      return;
    }
    for (int img = 0; img < g.order; ++img) {
      if (++nodes > node_cap) {
        capped = true;
        return;
      }
      assign[depth] = img;
      bool ok = true;
      for (const Word* r : by_depth[depth]) {
        if (eval(*r) != 0) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, depth + 1);
    }
  };
  dfs(dfs, 0);
  if (capped) return std::nullopt;
  return count;
}

}  // namespace luttinger

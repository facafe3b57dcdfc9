#include "luttinger/coset_enum.hpp"

#include <cassert>
#include <cstdint>
#include <deque>
#include <limits>

namespace luttinger {

namespace {

constexpr std::uint32_t kUndef = std::numeric_limits<std::uint32_t>::max();

// HLT enumeration state over the trivial subgroup. Columns come in pairs:
// column 2g is generator g, column 2g+1 its inverse.
struct Enumerator {
  int ncols;
  std::vector<std::vector<int>> relator_cols;
  std::vector<std::vector<std::uint32_t>> table;  // [coset][column]
  std::vector<std::uint32_t> rep;                 // union-find parent
  std::deque<std::uint32_t> queue;
  std::uint64_t defined = 1;
  std::uint64_t cap;

  Enumerator(const Presentation& p, std::uint64_t cap_) : cap(cap_) {
    ncols = 2 * p.num_generators();
    for (const Word& r : p.relators()) {
      std::vector<int> cols;
      for (const Letter& l : r.letters()) cols.push_back(2 * l.gen + (l.sign > 0 ? 0 : 1));
      relator_cols.push_back(std::move(cols));
    }
    table.emplace_back(ncols, kUndef);
    rep.push_back(0);
  }

  static int inv_col(int col) { return col ^ 1; }

  std::uint32_t find(std::uint32_t c) {
    while (rep[c] != c) {
      rep[c] = rep[rep[c]];
      c = rep[c];
    }
    return c;
  }

  bool alive(std::uint32_t c) { return find(c) == c; }

  std::uint32_t define(std::uint32_t c, int col) {
    std::uint32_t n = static_cast<std::uint32_t>(table.size());
    table.emplace_back(ncols, kUndef);
    rep.push_back(n);
    table[c][col] = n;
    table[n][inv_col(col)] = c;
    ++defined;
    return n;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    std::uint32_t keep = std::min(a, b), dead = std::max(a, b);
    rep[dead] = keep;
    queue.push_back(dead);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    merge(a, b);
    while (!queue.empty()) {
      std::uint32_t y = queue.front();
      queue.pop_front();
      for (int x = 0; x < ncols; ++x) {
        std::uint32_t d = table[y][x];
        if (d == kUndef) continue;
        table[y][x] = kUndef;
        if (table[d][inv_col(x)] == y) table[d][inv_col(x)] = kUndef;
        std::uint32_t mu = find(y), nu = find(d);
        if (table[mu][x] != kUndef) {
          merge(nu, table[mu][x]);
        } else if (table[nu][inv_col(x)] != kUndef) {
          merge(mu, table[nu][inv_col(x)]);
        } else {
          table[mu][x] = nu;
          table[nu][inv_col(x)] = mu;
        }
      }
    }
  }

  // Scans relator w as a cycle at alpha, defining cosets to fill gaps.
  void scan_and_fill(std::uint32_t alpha, const std::vector<int>& w) {
    if (w.empty()) return;
    long long i = 0, r = static_cast<long long>(w.size()) - 1;
    std::uint32_t f = alpha, b = alpha;
    for (;;) {
      while (i <= r && table[f][w[i]] != kUndef) {
        f = table[f][w[i]];
        ++i;
      }
      if (i > r) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (r >= i && table[b][inv_col(w[r])] != kUndef) {
        b = table[b][inv_col(w[r])];
        --r;
      }
      if (r < i) {
        coincidence(f, b);
        return;
      }
      if (r == i) {
        table[f][w[i]] = b;
        table[b][inv_col(w[i])] = f;
        return;
      }
      define(f, w[i]);  // fill the gap and keep scanning
    }
  }

  // Returns true if the table closed, false if the cap was exceeded.
  bool run() {
    for (std::uint32_t alpha = 0; alpha < table.size(); ++alpha) {
      if (!alive(alpha)) continue;
      for (const auto& w : relator_cols) {
        if (!alive(alpha)) break;
        scan_and_fill(alpha, w);
        if (defined > cap) return false;
      }
      if (!alive(alpha)) continue;
      for (int x = 0; x < ncols; ++x) {
        if (table[alpha][x] == kUndef) define(alpha, x);
        if (defined > cap) return false;
      }
    }
    return true;
  }

  std::uint64_t live_count() {
    std::uint64_t n = 0;
    for (std::uint32_t c = 0; c < table.size(); ++c) {
      if (alive(c)) ++n;
    }
    return n;
  }
};

}  // namespace

EnumerationResult todd_coxeter(const Presentation& p, std::uint64_t cap) {
  if (cap < 1) throw presentation_error("coset cap must be >= 1");
  Enumerator e(p, cap);
  EnumerationResult res{};
  bool closed = e.run();
  res.work = e.defined;
  res.live_cosets = e.live_count();
  if (closed) {
    res.outcome = EnumerationResult::Outcome::finite;
    res.order = res.live_cosets;
  } else {
    res.outcome = EnumerationResult::Outcome::exceeded;
    res.cap = cap;
  }
  return res;
}

std::vector<std::vector<std::uint32_t>> coset_action(const Presentation& p,
                                                     std::uint64_t cap) {
  Enumerator e(p, cap);
  if (!e.run()) throw presentation_error("coset table did not close under the cap");
  // compact live cosets
  std::vector<std::uint32_t> index(e.table.size(), kUndef);
  std::uint32_t next = 0;
  for (std::uint32_t c = 0; c < e.table.size(); ++c) {
    if (e.alive(c)) index[c] = next++;
  }
  std::vector<std::vector<std::uint32_t>> perms(p.num_generators(),
                                                std::vector<std::uint32_t>(next));
  for (std::uint32_t c = 0; c < e.table.size(); ++c) {
    if (!e.alive(c)) continue;
    for (int g = 0; g < p.num_generators(); ++g) {
      std::uint32_t d = e.table[c][2 * g];
      assert(d != kUndef);
      std::uint32_t dd = e.find(d);
      // closed table consistency: the inverse column must point back
      assert(e.find(e.table[dd][2 * g + 1]) == c);
      perms[g][index[c]] = index[dd];
    }
  }
  return perms;
}

}  // namespace luttinger

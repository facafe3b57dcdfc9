// end-to-end acceptance gate: one line per criterion, exit 0 iff all pass

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "luttinger/abelian.hpp"
#include "luttinger/blocks.hpp"
#include "luttinger/coset_enum.hpp"
#include "luttinger/homcount.hpp"
#include "luttinger/manifold.hpp"
#include "luttinger/text_format.hpp"
#include "luttinger/tietze.hpp"
#include "luttinger/verify.hpp"

using namespace luttinger;

namespace {

// pinned limits
constexpr double kSimplifySecondsLimit = 1.0;
constexpr double kEnumerationSecondsLimit = 2.0;
constexpr std::uint64_t kCosetCap = 50'000;

struct Gate {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& msg) {
    if (!cond) {
      ok = false;
      why << msg << "; ";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- criterion 7 oracle: diagonalization by repeated gcd reduction ----------

std::vector<mpz_class> naive_invariant_factors(IntMatrix m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < R && t < C; ++t) {
    bool empty = false;
    for (;;) {
      // re-select the smallest-magnitude nonzero entry of the trailing block
      bool found = false;
      std::size_t pr = t, pc = t;
      for (std::size_t i = t; i < R; ++i) {
        for (std::size_t j = t; j < C; ++j) {
          if (m.at(i, j) == 0) continue;
          if (!found || cmp(abs(m.at(i, j)), abs(m.at(pr, pc))) < 0) {
            pr = i;
            pc = j;
            found = true;
          }
        }
      }
      if (!found) {
        empty = true;
        break;
      }
      for (std::size_t j = 0; j < C; ++j) std::swap(m.at(t, j), m.at(pr, j));
      for (std::size_t i = 0; i < R; ++i) std::swap(m.at(i, t), m.at(i, pc));
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (m.at(i, t) == 0) continue;
        mpz_class q = m.at(i, t) / m.at(t, t);
        for (std::size_t j = 0; j < C; ++j) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) clean = false;  // remainder becomes the next pivot
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (m.at(t, j) == 0) continue;
        mpz_class q = m.at(t, j) / m.at(t, t);
        for (std::size_t i = 0; i < R; ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the rest of the submatrix; fold in an
      // offending row and keep reducing otherwise
      for (std::size_t i = t + 1; i < R && clean; ++i) {
        for (std::size_t j = t + 1; j < C && clean; ++j) {
          if (m.at(i, j) % m.at(t, t) != 0) {
            for (std::size_t jj = 0; jj < C; ++jj) m.at(t, jj) += m.at(i, jj);
            clean = false;
          }
        }
      }
      if (clean) break;
    }
    if (empty) break;
    diag.push_back(abs(m.at(t, t)));
  }
  return diag;
}

// --- criterion 8 oracle: permutation-closure order ---------------------------

std::uint64_t permutation_group_order(const std::vector<std::vector<std::uint32_t>>& gens) {
  if (gens.empty()) return 1;
  std::set<std::vector<std::uint32_t>> elements;
  std::vector<std::uint32_t> id(gens[0].size());
  for (std::uint32_t i = 0; i < id.size(); ++i) id[i] = i;
  std::vector<std::vector<std::uint32_t>> frontier = {id};
  elements.insert(id);
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        std::vector<std::uint32_t> q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = g[p[i]];
        if (elements.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return elements.size();
}

// ----------------------------------------------------------------------------

void criterion_1(Gate& g) {
  auto t0 = std::chrono::steady_clock::now();
  ManifoldBlock r = construct_R();
  auto [simp, cert] = tietze_simplify(closed_pi1(r));
  double dt = seconds_since(t0);
  g.expect(dt < kSimplifySecondsLimit, "took " + std::to_string(dt) + "s");
  g.expect(simp.num_generators() == 2, "got " + std::to_string(simp.num_generators()) +
                                           " generators");
  g.expect(simp.relators().size() == 1, "got " + std::to_string(simp.relators().size()) +
                                            " relators");
  std::set<std::string> names;
  for (const auto& gen : simp.generators()) names.insert(gen.name);
  g.expect(names == std::set<std::string>{"t", "s"}, "generators are not {t, s}");
  if (simp.relators().size() == 1 && simp.num_generators() == 2) {
    Word expected = relator_canonical(
        commutator(Word::generator(0), Word::generator(1)));
    g.expect(simp.relators()[0] == expected, "relator is not the commutator: " +
                                                 print_presentation(simp));
  }
  AbelianInvariants inv = abelianization(simp);
  g.expect(inv.free_rank == 2 && inv.torsion.empty(),
           "abelianization is " + inv.to_string());
  g.expect(cert.replay_verified, "certificate replay failed");
}

void criterion_2(Gate& g) {
  ManifoldBlock r = construct_R();
  auto [simp, cert] = tietze_simplify(r.complement);
  (void)simp;
  for (const char* mu : {"[x1,t]", "[x2,s]"}) {
    g.expect(word_trivial_under(cert, parse_word(mu, r.complement)),
             std::string(mu) + " not shown trivial in the complement");
  }
}

void criterion_3(Gate& g) {
  ManifoldBlock p = construct_P();
  g.expect(p.euler == 8 && p.signature == -4,
           "(e, sigma) = (" + std::to_string(p.euler) + ", " +
               std::to_string(p.signature) + ")");
  auto [simp, cert] = tietze_simplify(closed_pi1(p));
  (void)cert;
  g.expect(simp.num_generators() == 1 && simp.relators().empty() &&
               simp.generator_name(0) == "t",
           "pi1(P) simplified to " + print_presentation(simp));
}

void criterion_4(Gate& g) {
  for (long long k1 = 1; k1 <= 4; ++k1) {
    for (long long k2 = 1; k2 <= 4; ++k2) {
      for (long long p = 0; p <= 2; ++p) {
        std::string tag = "(k1=" + std::to_string(k1) + ", k2=" + std::to_string(k2) +
                          ", p=" + std::to_string(p) + ")";
        auto t0 = std::chrono::steady_clock::now();
        Presentation closed = closed_pi1(construct_Q(k1, k2, p));
        EnumerationResult r = todd_coxeter(closed, kCosetCap);
        double dt = seconds_since(t0);
        g.expect(r.is_finite() && r.order == static_cast<std::uint64_t>(k1 * k2),
                 tag + " enumeration gave " +
                     (r.is_finite() ? std::to_string(r.order) : std::string("exceeded")));
        g.expect(dt < kEnumerationSecondsLimit, tag + " took " + std::to_string(dt) + "s");
        IntMatrix diag(2, 2);
        diag.at(0, 0) = static_cast<long>(k1);
        diag.at(1, 1) = static_cast<long>(k2);
        g.expect(abelianization(closed) == cokernel_invariants(diag),
                 tag + " abelianization is " + abelianization(closed).to_string());
      }
    }
  }
}

void criterion_5(Gate& g) {
  ManifoldBlock r = construct_R();
  g.expect(r.euler == 8 && r.signature == -4, "R invariants wrong");

  ManifoldBlock q = construct_Q(3, 2, 2);
  g.expect(q.euler == r.euler && q.signature == r.signature,
           "surgery changed (e, sigma)");

  ManifoldBlock p = construct_P();
  ManifoldBlock t4 = builtin("torus_T4");
  GluingMatch match = GluingMatch::from_labels(p.find_marked("T2"), t4.find_marked("T"),
                                               {{"y2", "x"}, {"t", "y"}}, {1, 1});
  ManifoldBlock pt4 = fiber_sum(p, "T2", t4, "T", match);
  AbelianInvariants inv = abelianization(closed_pi1(pt4));
  g.expect(pt4.euler == 8 && pt4.signature == -4, "P + T4 invariants wrong");
  g.expect(inv.free_rank == 3 && inv.torsion.empty(),
           "P + T4 abelianization is " + inv.to_string());

  ManifoldBlock wp = builtin("W_prime");
  ManifoldBlock b = builtin("block_B");
  ManifoldBlock rp = fiber_sum(wp, "F", b, "G", standard_genus2_match(wp, b));
  ManifoldBlock qp = luttinger::luttinger(luttinger::luttinger(rp, "T1", {0, 1}, 1),
                                          "T2", {1, 1}, 1);
  EnumerationResult e = todd_coxeter(closed_pi1(qp), kCosetCap);
  g.expect(qp.euler == 14 && qp.signature == -6, "W-prime pipeline invariants wrong");
  g.expect(e.is_finite() && e.order == 1, "W-prime pipeline group not trivial");

  for (long long gg = 0; gg <= 5; ++gg) {
    for (long long rr = 0; rr <= 5; ++rr) {
      g.expect(geography_formulas(gg, rr) ==
                   std::make_pair(12 + 8 * (gg + rr), -8 - 4 * (gg + rr)),
               "geography formula wrong");
    }
  }
  for (long long n = 1; n <= 5; ++n) {
    g.expect(free_abelian_formula(n) == std::make_pair(11 - 5 * n + 2 * n * n, -3 - n),
             "free abelian formula wrong at n=" + std::to_string(n));
  }
}

void criterion_6(Gate& g) {
  Presentation h({"x", "y"}, {});
  Word x = Word::generator(0), y = Word::generator(1);
  Presentation z = hnn_mapping_torus(h, {{x, x}, {y, y * x}}, "t");
  g.expect(direct_sum_with_Z(z, "s").same_presentation(builtin_presentation("pi1_C")),
           "pi1(C) mismatch");
  Presentation c1 = direct_sum_with_Z(
      hnn_mapping_torus(h, {{y, y * x}, {commutator(x, y), commutator(x, y)}}, "t"), "s");
  g.expect(c1.same_presentation(builtin_presentation("pi1_C_minus_T1")),
           "pi1(C - T1) mismatch");
  Word t = Word::generator(2);
  Presentation c2 = hnn_mapping_torus(z, {{x, x}, {t, t}}, "s");
  g.expect(c2.same_presentation(builtin_presentation("pi1_C_minus_T2")),
           "pi1(C - T2) mismatch");
}

void criterion_7(Gate& g) {
  std::mt19937 rng(27182);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int trial = 0; trial < 1000 && g.ok; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    }
    SmithResult s = smith_normal_form(m);
    std::string tag = "trial " + std::to_string(trial);
    g.expect(s.u * m * s.v == s.d, tag + ": U m V != D");
    g.expect(abs(s.u.determinant()) == 1 && abs(s.v.determinant()) == 1,
             tag + ": transform not unimodular");
    std::vector<mpz_class> nonzero;
    bool chain = true;
    for (std::size_t i = 0; i < m.rows() && i < m.cols(); ++i) {
      const mpz_class& d = s.d.at(i, i);
      if (d < 0) chain = false;
      if (d != 0) {
        if (!nonzero.empty() && (nonzero.back() == 0 || d % nonzero.back() != 0)) {
          chain = false;
        }
        nonzero.push_back(d);
      }
    }
    g.expect(chain, tag + ": divisibility chain broken");
    g.expect(nonzero == naive_invariant_factors(m), tag + ": oracle disagrees");
  }
}

void criterion_8(Gate& g) {
  const std::vector<std::pair<std::string, std::uint64_t>> corpus = {
      {"< a | a >", 1},
      {"< a | a^2 >", 2},
      {"< a | a^3 >", 3},
      {"< a | a^4 >", 4},
      {"< a | a^5 >", 5},
      {"< a | a^7 >", 7},
      {"< a | a^8 >", 8},
      {"< a | a^24 >", 24},
      {"< a, b | a^3, b^2, (a*b)^2 >", 6},
      {"< a, b | a^4, b^2, (a*b)^2 >", 8},
      {"< a, b | a^5, b^2, (a*b)^2 >", 10},
      {"< a, b | a^6, b^2, (a*b)^2 >", 12},
      {"< a, b | a^2, b^2, (a*b)^3 >", 6},
      {"< a, b | a^2, b^3, (a*b)^4 >", 24},
      {"< a, b | a^2, b^2, [a,b] >", 4},
      {"< a, b | a^2, b^3, [a,b] >", 6},
      {"< a, b | a^2, b^4, [a,b] >", 8},
      {"< a, b | a^3, b^3, [a,b] >", 9},
      {"< a, b | a^3, b^4, [a,b] >", 12},
      {"< a, b | a^4, a^2*b^-2, b^-1*a*b*a >", 8},
  };
  for (const auto& [text, order] : corpus) {
    Presentation p = parse_presentation(text);
    EnumerationResult r = todd_coxeter(p, kCosetCap);
    g.expect(r.is_finite() && r.order == order,
             text + " enumerated to " +
                 (r.is_finite() ? std::to_string(r.order) : std::string("exceeded")));
    if (r.is_finite()) {
      g.expect(permutation_group_order(coset_action(p, kCosetCap)) == order,
               text + ": Cayley oracle disagrees");
    }
  }
}

void criterion_9(Gate& g, const VerifyReport& report) {
  bool found = false;
  for (const ClaimResult& c : report.claims) {
    if (c.id == "simplification.soundness") {
      found = true;
      g.expect(c.status == ClaimResult::Status::pass, c.details);
    }
  }
  g.expect(found, "soundness claim missing from the suite");
}

void criterion_10(Gate& g) {
  // corrupt one push-off of the genus-2 fiber: a2 becomes a instead of a^-1
  VerifyOptions mutated;
  mutated.block_source = [](const std::string& name) {
    ManifoldBlock b = builtin(name);
    if (name == "matsumoto_W") {
      for (auto& m : b.marked) {
        for (std::size_t i = 0; i < m.basis_labels.size(); ++i) {
          if (m.basis_labels[i] == "a2") m.pushoff_basis[i] = Word::generator(0);
        }
      }
    }
    return b;
  };
  VerifyReport report = verify_claims(mutated);
  bool pi1_failed = false;
  for (const ClaimResult& c : report.claims) {
    if (c.id == "R.pi1") pi1_failed = c.status != ClaimResult::Status::pass;
  }
  g.expect(pi1_failed, "corrupted push-off data still passed the pi1(R) claim");

  // degenerate input: an empty catalog blocks every claim instead of passing
  VerifyOptions empty;
  empty.block_source = [](const std::string& name) -> ManifoldBlock {
    throw manifold_error("missing block: " + name);
  };
  VerifyReport blocked = verify_claims(empty);
  g.expect(!blocked.all_passed(), "empty catalog reported success");
  std::size_t blocked_count = 0;
  for (const ClaimResult& c : blocked.claims) {
    if (c.status == ClaimResult::Status::blocked) ++blocked_count;
  }
  g.expect(blocked_count > 0, "no claim was reported as blocked");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Gate&)>>> criteria = {
      {"pi1(R) simplifies to < t, s | [t,s] > in under a second", criterion_1},
      {"both torus meridians are trivial in the R complement", criterion_2},
      {"pi1(P) is infinite cyclic with e = 8, sigma = -4", criterion_3},
      {"the Q(k1, k2, p) family has order k1*k2 with the right abelianization",
       criterion_4},
      {"invariant arithmetic: R, surgeries, the Z^3 sum, W-prime, and the formulas",
       criterion_5},
      {"mapping-torus cross-checks reproduce the stored presentations", criterion_6},
      {"Smith normal form contract on 1000 random matrices with gcd-reduction oracle",
       criterion_7},
      {"Todd-Coxeter matches the Cayley oracle on 20 known group orders", criterion_8},
      {"every suite simplification preserves abelianization and hom counts",
       [](Gate& g) { criterion_9(g, verify_claims()); }},
      {"mutated push-off data fails, empty catalog blocks", criterion_10},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Gate gate;
    try {
      criteria[i].second(gate);
    } catch (const std::exception& e) {
      gate.ok = false;
      gate.why << "exception: " << e.what();
    }
    std::cout << "criterion " << (i + 1) << ": " << (gate.ok ? "PASS" : "FAIL") << " - "
              << criteria[i].first;
    if (!gate.ok) std::cout << " [" << gate.why.str() << "]";
    std::cout << "\n";
    all = all && gate.ok;
  }
  std::cout << (all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES") << "\n";
  return all ? 0 : 1;
}

#include "luttinger/blocks.hpp"

#include <sstream>

#include "luttinger/text_format.hpp"

namespace luttinger {

namespace {

MarkedSubmanifold make_surface(const Presentation& ctx, const std::string& label, int genus,
                               const std::string& meridian,
                               const std::vector<std::string>& pushoffs,
                               const std::vector<std::string>& labels,
                               const std::string& framing) {
  MarkedSubmanifold m;
  m.label = label;
  m.genus = genus;
  m.meridian = parse_word(meridian, ctx);
  for (const std::string& w : pushoffs) m.pushoff_basis.push_back(parse_word(w, ctx));
  m.basis_labels = labels;
  m.framing_note = framing;
  return m;
}

ManifoldBlock make_matsumoto_W() {
  ManifoldBlock b;
  b.name = "matsumoto_W";
  b.euler = 4;
  b.signature = -4;
  b.complement = parse_presentation("< a, b | [a,b] >");
  b.marked.push_back(make_surface(b.complement, "F", 2, "1", {"a", "b", "a^-1", "b^-1"},
                                  {"a1", "b1", "a2", "b2"},
                                  "fiber framing; meridian lies on an exceptional sphere"));
  b.flags = {"symplectic"};
  b.validate();
  return b;
}

ManifoldBlock make_W_prime() {
  ManifoldBlock b;
  b.name = "W_prime";
  b.euler = 10;
  b.signature = -6;
  b.complement = parse_presentation("< a, b | [a,b] >");
  b.marked.push_back(make_surface(b.complement, "F", 2, "1", {"a", "b", "a^-1", "b^-1"},
                                  {"a1", "b1", "a2", "b2"},
                                  "fiber framing; meridian nullhomotopic"));
  b.flags = {"symplectic", "minimal"};
  b.validate();
  return b;
}

ManifoldBlock make_block_C() {
  ManifoldBlock b;
  b.name = "block_C";
  b.euler = 0;
  b.signature = 0;
  b.complement =
      parse_presentation("< x, y, t, s | [y^-1,t]x^-1, [t,[x,y]], [s,x], [s,t] >");
  b.marked.push_back(make_surface(b.complement, "T1", 1, "[t,x]", {"y", "s"}, {"y", "s"},
                                  "Lagrangian framing"));
  b.marked.push_back(make_surface(b.complement, "T2", 1, "[s,y]", {"x", "t"}, {"x", "t"},
                                  "Lagrangian framing"));
  b.flags = {"symplectic"};
  b.notes.push_back(
      "complement presentation for the union of both tori combines the two "
      "single-torus calculations");
  b.validate();
  return b;
}

ManifoldBlock make_block_B() {
  ManifoldBlock b;
  b.name = "block_B";
  b.euler = 0;
  b.signature = 0;
  b.complement = parse_presentation(
      "< x1, y1, x2, y2, t, s | [x1,y1][x2,y2], [y1^-1,t]x1^-1, [t,[x1,y1]], "
      "[x2^-1,t]y2^-1, [t,y2], [s,x1], [s,y1], [s,t], [s,y2] >");
  b.marked.push_back(make_surface(b.complement, "G", 2, "[x1,y1][x2,y2]",
                                  {"x1", "y1", "x2", "y2"}, {"x1", "y1", "x2", "y2"},
                                  "product framing"));
  b.marked.push_back(make_surface(b.complement, "T1", 1, "[x1,t]", {"y1", "s"},
                                  {"y1", "s"}, "Lagrangian framing"));
  b.marked.push_back(make_surface(b.complement, "T2", 1, "[x2,s]", {"y2", "t"},
                                  {"y2", "t"}, "Lagrangian framing"));
  b.flags = {"symplectic", "minimal"};
  b.notes.push_back(
      "complement presentation is for the torus pair only; G's meridian is recorded "
      "as the surface boundary word, which is already trivial here");
  b.validate();
  return b;
}

ManifoldBlock make_torus_T4() {
  ManifoldBlock b;
  b.name = "torus_T4";
  b.euler = 0;
  b.signature = 0;
  b.complement =
      parse_presentation("< x, y, c, d | [x,y], [x,c], [x,d], [y,c], [y,d] >");
  b.marked.push_back(make_surface(b.complement, "T", 1, "[c,d]", {"x", "y"}, {"x", "y"},
                                  "product framing"));
  b.flags = {"symplectic", "minimal"};
  b.validate();
  return b;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"matsumoto_W", "block_C", "block_B", "torus_T4", "W_prime"};
}

ManifoldBlock builtin(const std::string& name) {
  if (name == "matsumoto_W") return make_matsumoto_W();
  if (name == "block_C") return make_block_C();
  if (name == "block_B") return make_block_B();
  if (name == "torus_T4") return make_torus_T4();
  if (name == "W_prime") return make_W_prime();
  std::ostringstream msg;
  msg << "unknown builtin block '" << name << "'; available:";
  for (const std::string& n : builtin_names()) msg << " " << n;
  throw manifold_error(msg.str());
}

std::vector<std::string> builtin_presentation_names() {
  return {"pi1_C", "pi1_C_minus_T1", "pi1_C_minus_T2", "pi1_B"};
}

Presentation builtin_presentation(const std::string& name) {
  if (name == "pi1_C") {
    return parse_presentation("< x, y, t, s | [t,x], [y^-1,t]x^-1, [s,x], [s,y], [s,t] >");
  }
  if (name == "pi1_C_minus_T1") {
    return parse_presentation(
        "< x, y, t, s | [y^-1,t]x^-1, [t,[x,y]], [s,x], [s,y], [s,t] >");
  }
  if (name == "pi1_C_minus_T2") {
    return parse_presentation("< x, y, t, s | [t,x], [y^-1,t]x^-1, [s,x], [s,t] >");
  }
  if (name == "pi1_B") {
    return parse_presentation(
        "< x1, y1, x2, y2, t, s | [x1,y1][x2,y2], [t,x1], [y1^-1,t]x1^-1, "
        "[x2^-1,t]y2^-1, [t,y2], [s,x1], [s,y1], [s,x2], [s,y2], [s,t] >");
  }
  std::ostringstream msg;
  msg << "unknown builtin presentation '" << name << "'; available:";
  for (const std::string& n : builtin_presentation_names()) msg << " " << n;
  throw manifold_error(msg.str());
}

GluingMatch standard_genus2_match(const ManifoldBlock& w, const ManifoldBlock& b) {
  return GluingMatch::from_labels(
      w.find_marked("F"), b.find_marked("G"),
      {{"a1", "x1"}, {"b1", "y1"}, {"a2", "x2"}, {"b2", "y2"}}, {1, 1, 1, 1});
}

ManifoldBlock construct_R() {
  ManifoldBlock w = builtin("matsumoto_W");
  ManifoldBlock b = builtin("block_B");
  ManifoldBlock r = fiber_sum(w, "F", b, "G", standard_genus2_match(w, b));
  r.name = "R";
  return r;
}

ManifoldBlock construct_P() {
  ManifoldBlock p = luttinger(construct_R(), "T1", {0, 1}, 1);
  p.name = "P";
  return p;
}

ManifoldBlock construct_Q(long long k1, long long k2, long long p) {
  ManifoldBlock q =
      luttinger(luttinger(construct_R(), "T1", {0, 1}, k1), "T2", {p, 1}, k2);
  std::ostringstream name;
  name << "Q(" << k1 << ",s;" << k2 << "," << (p == 0 ? "" : std::to_string(p) + "*y2+")
       << "t)";
  q.name = name.str();
  return q;
}

}  // namespace luttinger

#include "luttinger/text_format.hpp"

#include <cctype>
#include <sstream>

namespace luttinger {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) {
      throw parse_error(std::string("expected '") + c + "' " + what, pos);
    }
  }
  [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_cont(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::string parse_ident(Cursor& cur) {
  cur.skip_ws();
  if (cur.pos >= cur.s.size() || !ident_start(cur.s[cur.pos])) {
    cur.fail("expected identifier");
  }
  std::size_t start = cur.pos;
  while (cur.pos < cur.s.size() && ident_cont(cur.s[cur.pos])) ++cur.pos;
  return cur.s.substr(start, cur.pos - start);
}

long long parse_int(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  bool neg = false;
  if (cur.pos < cur.s.size() && (cur.s[cur.pos] == '-' || cur.s[cur.pos] == '+')) {
    neg = cur.s[cur.pos] == '-';
    ++cur.pos;
  }
  if (cur.pos >= cur.s.size() || !std::isdigit(static_cast<unsigned char>(cur.s[cur.pos]))) {
    cur.fail("expected integer");
  }
  long long v = 0;
  while (cur.pos < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.pos]))) {
    v = v * 10 + (cur.s[cur.pos] - '0');
    if (v > 1'000'000) cur.fail("exponent too large");
    ++cur.pos;
  }
  return neg ? -v : v;
}

Word parse_word_expr(Cursor& cur, const Presentation& ctx);

Word parse_atom(Cursor& cur, const Presentation& ctx) {
  char c = cur.peek();
  if (c == '(') {
    ++cur.pos;
    Word w = parse_word_expr(cur, ctx);
    cur.expect(')', "to close group");
    return w;
  }
  if (c == '[') {
    ++cur.pos;
    Word u = parse_word_expr(cur, ctx);
    cur.expect(',', "in commutator");
    Word v = parse_word_expr(cur, ctx);
    cur.expect(']', "to close commutator");
    return commutator(u, v);
  }
  if (c == '1') {
    ++cur.pos;
    return Word();
  }
  std::size_t at = cur.pos;
  std::string name = parse_ident(cur);
  auto id = ctx.generator_id(name);
  if (!id) throw parse_error("unknown generator '" + name + "'", at);
  return Word::generator(*id);
}

Word parse_factor(Cursor& cur, const Presentation& ctx) {
  Word base = parse_atom(cur, ctx);
  if (cur.accept('^')) {
    long long e = parse_int(cur);
    return base.pow(e);
  }
  return base;
}

bool atom_follows(Cursor& cur) {
  char c = cur.peek();
  return c == '(' || c == '[' || c == '1' || ident_start(c);
}

Word parse_word_expr(Cursor& cur, const Presentation& ctx) {
  Word acc = parse_factor(cur, ctx);
  for (;;) {
    if (cur.accept('*')) {
      acc = acc * parse_factor(cur, ctx);
    } else if (atom_follows(cur)) {
      acc = acc * parse_factor(cur, ctx);
    } else {
      return acc;
    }
  }
}

}  // namespace

Word parse_word(const std::string& text, const Presentation& context) {
  Cursor cur{text};
  Word w = parse_word_expr(cur, context);
  if (!cur.eof()) cur.fail("unexpected trailing input in word");
  return w;
}

Presentation parse_presentation(const std::string& text) {
  Cursor cur{text};
  cur.expect('<', "to open presentation");
  std::vector<std::string> names;
  if (cur.peek() != '|' && cur.peek() != '>') {
    names.push_back(parse_ident(cur));
    while (cur.accept(',')) names.push_back(parse_ident(cur));
  }
  Presentation gens_only(names, {});
  std::vector<Word> relators;
  if (cur.accept('|')) {
    if (cur.peek() != '>') {
      relators.push_back(parse_word_expr(cur, gens_only));
      while (cur.accept(',')) relators.push_back(parse_word_expr(cur, gens_only));
    }
  }
  cur.expect('>', "to close presentation");
  if (!cur.eof()) cur.fail("unexpected trailing input in presentation");
  return Presentation(std::move(names), std::move(relators));
}

std::string print_word(const Word& w, const Presentation& context) {
  if (w.is_identity()) return "1";
  std::ostringstream out;
  const auto& ls = w.letters();
  bool first = true;
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j].gen == ls[i].gen && ls[j].sign == ls[i].sign) ++j;
    long long exp = static_cast<long long>(j - i) * ls[i].sign;
    if (!first) out << "*";
    out << context.generator_name(ls[i].gen);
    if (exp != 1) out << "^" << exp;
    first = false;
    i = j;
  }
  return out.str();
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "< ";
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    if (i) out << ", ";
    out << p.generators()[i].name;
  }
  out << " | ";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i) out << ", ";
    out << print_word(p.relators()[i], p);
  }
  out << " >";
  return out.str();
}

}  // namespace luttinger

#include "luttinger/script.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <variant>

#include "luttinger/abelian.hpp"
#include "luttinger/blocks.hpp"
#include "luttinger/homcount.hpp"
#include "luttinger/text_format.hpp"

namespace luttinger {

namespace {

// ---------------------------------------------------------------- lexer

struct Token {
  enum class Kind { ident, integer, string, punct, eof } kind;
  std::string text;
  long long value = 0;
  int line = 1, column = 1;
};

struct script_parse_error : std::runtime_error {
  int line, column;
  script_parse_error(std::string msg, int l, int c)
      : std::runtime_error(std::move(msg)), line(l), column(c) {}
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_ws_and_comments();
    tok_.line = line_;
    tok_.column = col_;
    if (pos_ >= s_.size()) {
      tok_.kind = Token::Kind::eof;
      tok_.text = "<eof>";
      return;
    }
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        bump();
      }
      tok_.kind = Token::Kind::ident;
      tok_.text = s_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) bump();
      tok_.kind = Token::Kind::integer;
      tok_.text = s_.substr(start, pos_ - start);
      tok_.value = std::stoll(tok_.text);
      return;
    }
    if (c == '"') {
      bump();
      std::string out;
      while (pos_ < s_.size() && s_[pos_] != '"' && s_[pos_] != '\n') {
        out += s_[pos_];
        bump();
      }
      if (pos_ >= s_.size() || s_[pos_] != '"') {
        throw script_parse_error("unterminated string literal", tok_.line, tok_.column);
      }
      bump();
      tok_.kind = Token::Kind::string;
      tok_.text = std::move(out);
      return;
    }
    // two-character puncts
    if (pos_ + 1 < s_.size()) {
      std::string two = s_.substr(pos_, 2);
      if (two == "==" || two == "->") {
        bump();
        bump();
        tok_.kind = Token::Kind::punct;
        tok_.text = two;
        return;
      }
    }
    static const std::string singles = "=()[],.^/+-";
    if (singles.find(c) != std::string::npos) {
      bump();
      tok_.kind = Token::Kind::punct;
      tok_.text = std::string(1, c);
      return;
    }
    throw script_parse_error(std::string("unexpected character '") + c + "'", line_, col_);
  }

  void skip_ws_and_comments() {
    for (;;) {
      while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) bump();
      if (pos_ < s_.size() && s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') bump();
        continue;
      }
      return;
    }
  }

  void bump() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

// --------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Script parse() {
    Script script;
    while (lex_.peek().kind != Token::Kind::eof) {
      script.statements.push_back(parse_statement());
    }
    check_bindings(script);
    return script;
  }

 private:
  Lexer lex_;

  [[noreturn]] void fail(const std::string& msg) {
    const Token& t = lex_.peek();
    throw script_parse_error(msg + " (found '" + t.text + "')", t.line, t.column);
  }

  std::string expect_ident() {
    if (lex_.peek().kind != Token::Kind::ident) fail("expected identifier");
    return lex_.take().text;
  }

  void expect_punct(const std::string& p) {
    if (lex_.peek().kind != Token::Kind::punct || lex_.peek().text != p) {
      fail("expected '" + p + "'");
    }
    lex_.take();
  }

  bool accept_punct(const std::string& p) {
    if (lex_.peek().kind == Token::Kind::punct && lex_.peek().text == p) {
      lex_.take();
      return true;
    }
    return false;
  }

  void expect_keyword(const std::string& kw) {
    if (lex_.peek().kind != Token::Kind::ident || lex_.peek().text != kw) {
      fail("expected '" + kw + "'");
    }
    lex_.take();
  }

  std::string expect_string() {
    if (lex_.peek().kind != Token::Kind::string) fail("expected string literal");
    return lex_.take().text;
  }

  long long expect_int() {
    bool neg = accept_punct("-");
    if (lex_.peek().kind != Token::Kind::integer) fail("expected integer");
    long long v = lex_.take().value;
    return neg ? -v : v;
  }

  Statement parse_statement() {
    const Token& t = lex_.peek();
    Statement st;
    st.line = t.line;
    st.column = t.column;
    if (t.kind != Token::Kind::ident) fail("expected 'block', 'let' or 'assert'");
    if (t.text == "block") {
      lex_.take();
      st.kind = Statement::Kind::block_binding;
      st.name = expect_ident();
      expect_punct("=");
      expect_keyword("builtin");
      expect_punct("(");
      st.builtin_name = expect_string();
      expect_punct(")");
      return st;
    }
    if (t.text == "let") {
      lex_.take();
      st.kind = Statement::Kind::let_binding;
      st.name = expect_ident();
      expect_punct("=");
      st.expr = parse_expr();
      return st;
    }
    if (t.text == "assert") {
      lex_.take();
      st.kind = Statement::Kind::assertion;
      if (lex_.peek().kind == Token::Kind::ident && lex_.peek().text == "trivial") {
        lex_.take();
        st.predicate = Statement::Predicate::trivial;
        expect_punct("(");
        st.word_text = expect_string();
        expect_punct(",");
        st.group_expr = parse_expr();
        expect_punct(")");
        return st;
      }
      st.predicate = Statement::Predicate::equals;
      st.lhs = parse_expr();
      expect_punct("==");
      st.rhs = parse_expr();
      return st;
    }
    fail("expected 'block', 'let' or 'assert'");
  }

  Expr parse_expr() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::integer ||
        (t.kind == Token::Kind::punct && t.text == "-")) {
      Expr e;
      e.kind = Expr::Kind::integer;
      e.int_value = expect_int();
      return e;
    }
    if (t.kind != Token::Kind::ident) fail("expected expression");
    if (t.text == "Z") return parse_abelian_literal();
    std::string name = lex_.take().text;
    static const std::vector<std::string> ops = {
        "fiber_sum",      "luttinger", "blow_up",   "closed_pi1", "simplify",
        "abelianization", "order",     "hom_count", "euler",      "sigma",
        "builtin",        "presentation"};
    bool is_op = std::find(ops.begin(), ops.end(), name) != ops.end();
    if (is_op) return parse_call(name);
    Expr e;
    e.kind = Expr::Kind::variable;
    e.name = name;
    return e;
  }

  Expr parse_abelian_literal() {
    Expr e;
    e.kind = Expr::Kind::abelian_literal;
    for (;;) {
      expect_keyword("Z");
      if (accept_punct("^")) {
        long long r = expect_int();
        if (r < 0) fail("free rank must be non-negative");
        e.ab_free_rank += static_cast<std::size_t>(r);
      } else if (accept_punct("/")) {
        long long d = expect_int();
        if (d < 1) fail("torsion order must be positive");
        e.ab_torsion.push_back(d);
      } else {
        e.ab_free_rank += 1;
      }
      if (!accept_punct("+")) break;
    }
    return e;
  }

  void parse_surface_ref(std::string& block, std::string& label) {
    block = expect_ident();
    expect_punct(".");
    label = expect_ident();
  }

  Expr parse_call(const std::string& op) {
    Expr e;
    e.kind = Expr::Kind::call;
    e.name = op;
    expect_punct("(");
    if (op == "builtin" || op == "presentation") {
      e.str_arg = expect_string();
    } else if (op == "fiber_sum") {
      parse_surface_ref(e.block_ref, e.label_ref);
      expect_punct(",");
      parse_surface_ref(e.block_ref2, e.label_ref2);
      expect_punct(",");
      expect_keyword("match");
      expect_punct("=");
      expect_punct("[");
      for (;;) {
        Expr::Arrow a;
        a.from = expect_ident();
        expect_punct("->");
        a.to = expect_ident();
        if (accept_punct("^")) {
          long long s = expect_int();
          if (s != -1) fail("only ^-1 is allowed on a match target");
          a.sign = -1;
        }
        e.match.push_back(std::move(a));
        if (!accept_punct(",")) break;
      }
      expect_punct("]");
    } else if (op == "luttinger") {
      parse_surface_ref(e.block_ref, e.label_ref);
      expect_punct(",");
      expect_keyword("gamma");
      expect_punct("=");
      expect_punct("(");
      e.p = expect_int();
      expect_punct(",");
      e.q = expect_int();
      expect_punct(")");
      expect_punct(",");
      expect_keyword("k");
      expect_punct("=");
      e.k = expect_int();
    } else if (op == "blow_up") {
      e.args.push_back(parse_expr());
      expect_punct(",");
      e.k = expect_int();
    } else if (op == "hom_count") {
      e.args.push_back(parse_expr());
      expect_punct(",");
      e.str_arg = expect_string();
    } else {
      // unary: closed_pi1, simplify, abelianization, order, euler, sigma
      e.args.push_back(parse_expr());
    }
    expect_punct(")");
    return e;
  }

  // single-assignment bindings, and assertions/ops reference bound names only
  void check_bindings(const Script& script) {
    std::vector<std::string> bound;
    auto is_bound = [&](const std::string& n) {
      return std::find(bound.begin(), bound.end(), n) != bound.end();
    };
    std::function<void(const Expr&, int, int)> check_expr = [&](const Expr& e, int line,
                                                                int col) {
      if (e.kind == Expr::Kind::variable && !is_bound(e.name)) {
        throw script_parse_error("reference to unbound name '" + e.name + "'", line, col);
      }
      if (e.kind == Expr::Kind::call) {
        for (const std::string& r : {e.block_ref, e.block_ref2}) {
          if (!r.empty() && !is_bound(r)) {
            throw script_parse_error("reference to unbound name '" + r + "'", line, col);
          }
        }
        for (const Expr& a : e.args) check_expr(a, line, col);
      }
    };
    for (const Statement& st : script.statements) {
      switch (st.kind) {
        case Statement::Kind::block_binding:
          if (is_bound(st.name)) {
            throw script_parse_error("name '" + st.name + "' is already bound", st.line,
                                     st.column);
          }
          bound.push_back(st.name);
          break;
        case Statement::Kind::let_binding:
          check_expr(st.expr, st.line, st.column);
          if (is_bound(st.name)) {
            throw script_parse_error("name '" + st.name + "' is already bound", st.line,
                                     st.column);
          }
          bound.push_back(st.name);
          break;
        case Statement::Kind::assertion:
          if (st.predicate == Statement::Predicate::equals) {
            check_expr(st.lhs, st.line, st.column);
            check_expr(st.rhs, st.line, st.column);
          } else {
            check_expr(st.group_expr, st.line, st.column);
          }
          break;
      }
    }
  }
};

// -------------------------------------------------------------- printer

void print_expr(std::ostream& out, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::integer:
      out << e.int_value;
      return;
    case Expr::Kind::variable:
      out << e.name;
      return;
    case Expr::Kind::abelian_literal: {
      bool first = true;
      if (e.ab_free_rank == 1) {
        out << "Z";
        first = false;
      } else if (e.ab_free_rank > 1) {
        out << "Z^" << e.ab_free_rank;
        first = false;
      }
      for (long long d : e.ab_torsion) {
        if (!first) out << " + ";
        out << "Z/" << d;
        first = false;
      }
      if (first) out << "Z^0";  // not produced by the parser, kept printable
      return;
    }
    case Expr::Kind::call:
      break;
  }
  out << e.name << "(";
  if (e.name == "builtin" || e.name == "presentation") {
    out << '"' << e.str_arg << '"';
  } else if (e.name == "fiber_sum") {
    out << e.block_ref << "." << e.label_ref << ", " << e.block_ref2 << "." << e.label_ref2
        << ", match=[";
    for (std::size_t i = 0; i < e.match.size(); ++i) {
      if (i) out << ", ";
      out << e.match[i].from << "->" << e.match[i].to;
      if (e.match[i].sign < 0) out << "^-1";
    }
    out << "]";
  } else if (e.name == "luttinger") {
    out << e.block_ref << "." << e.label_ref << ", gamma=(" << e.p << "," << e.q
        << "), k=" << e.k;
  } else if (e.name == "blow_up") {
    print_expr(out, e.args[0]);
    out << ", " << e.k;
  } else if (e.name == "hom_count") {
    print_expr(out, e.args[0]);
    out << ", \"" << e.str_arg << '"';
  } else {
    print_expr(out, e.args[0]);
  }
  out << ")";
}

}  // namespace

std::string Diagnostic::to_string() const {
  std::ostringstream out;
  out << (severity == Severity::error ? "error" : "warning") << " at " << line << ":"
      << column << ": " << message;
  return out.str();
}

std::string print_statement(const Statement& st) {
  std::ostringstream out;
  switch (st.kind) {
    case Statement::Kind::block_binding:
      out << "block " << st.name << " = builtin(\"" << st.builtin_name << "\")";
      break;
    case Statement::Kind::let_binding:
      out << "let " << st.name << " = ";
      print_expr(out, st.expr);
      break;
    case Statement::Kind::assertion:
      out << "assert ";
      if (st.predicate == Statement::Predicate::trivial) {
        out << "trivial(\"" << st.word_text << "\", ";
        print_expr(out, st.group_expr);
        out << ")";
      } else {
        print_expr(out, st.lhs);
        out << " == ";
        print_expr(out, st.rhs);
      }
      break;
  }
  return out.str();
}

std::string print_script(const Script& s) {
  std::ostringstream out;
  for (const Statement& st : s.statements) out << print_statement(st) << "\n";
  return out.str();
}

bool scripts_equal(const Script& a, const Script& b) {
  return print_script(a) == print_script(b);
}

ParseResult parse_script(const std::string& text) {
  ParseResult res;
  try {
    Parser parser(text);
    res.script = parser.parse();
  } catch (const script_parse_error& e) {
    res.diagnostics.push_back(
        {Diagnostic::Severity::error, e.line, e.column, e.what()});
  }
  return res;
}

// ------------------------------------------------------------ evaluator

namespace {

struct PresValue {
  Presentation pres;
  std::optional<SimplificationCertificate> cert;
};

using Value = std::variant<long long, AbelianInvariants, PresValue, ManifoldBlock>;

struct eval_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Evaluator {
  const RunOptions& opt;
  std::map<std::string, Value> env;

  const ManifoldBlock& as_block(const Value& v, const std::string& what) {
    if (const ManifoldBlock* b = std::get_if<ManifoldBlock>(&v)) return *b;
    throw eval_error(what + " expects a manifold block");
  }
  const PresValue& as_pres(const Value& v, const std::string& what) {
    if (const PresValue* p = std::get_if<PresValue>(&v)) return *p;
    if (std::holds_alternative<ManifoldBlock>(v)) {
      throw eval_error(what + " expects a presentation (apply closed_pi1 to the block first)");
    }
    throw eval_error(what + " expects a presentation");
  }

  const Value& lookup(const std::string& name) {
    auto it = env.find(name);
    if (it == env.end()) throw eval_error("unbound name '" + name + "'");
    return it->second;
  }

  Value eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::integer:
        return e.int_value;
      case Expr::Kind::variable:
        return lookup(e.name);
      case Expr::Kind::abelian_literal: {
        AbelianInvariants inv;
        inv.free_rank = e.ab_free_rank;
        for (long long d : e.ab_torsion) inv.torsion.emplace_back(static_cast<long>(d));
        if (!inv.torsion.empty()) {
          IntMatrix m(inv.torsion.size(), inv.torsion.size());
          for (std::size_t i = 0; i < inv.torsion.size(); ++i) m.at(i, i) = inv.torsion[i];
          AbelianInvariants fixed = cokernel_invariants(m);
          inv.torsion = std::move(fixed.torsion);
        }
        return inv;
      }
      case Expr::Kind::call:
        break;
    }
    const std::string& op = e.name;
    if (op == "builtin") return builtin(e.str_arg);
    if (op == "presentation") return PresValue{parse_presentation(e.str_arg), std::nullopt};
    if (op == "fiber_sum") {
      const ManifoldBlock& x = as_block(lookup(e.block_ref), "fiber_sum");
      const ManifoldBlock& y = as_block(lookup(e.block_ref2), "fiber_sum");
      std::vector<std::pair<std::string, std::string>> arrows;
      std::vector<int> signs;
      for (const Expr::Arrow& a : e.match) {
        arrows.emplace_back(a.from, a.to);
        signs.push_back(a.sign);
      }
      GluingMatch match = GluingMatch::from_labels(x.find_marked(e.label_ref),
                                                   y.find_marked(e.label_ref2), arrows,
                                                   signs);
      return fiber_sum(x, e.label_ref, y, e.label_ref2, match);
    }
    if (op == "luttinger") {
      const ManifoldBlock& b = as_block(lookup(e.block_ref), "luttinger");
      return luttinger(b, e.label_ref, {e.p, e.q}, e.k);
    }
    if (op == "blow_up") {
      return blow_up(as_block(eval(e.args[0]), "blow_up"), static_cast<int>(e.k));
    }
    if (op == "closed_pi1") {
      return PresValue{closed_pi1(as_block(eval(e.args[0]), "closed_pi1")), std::nullopt};
    }
    if (op == "simplify") {
      Value arg = eval(e.args[0]);
      auto [simp, cert] = tietze_simplify(as_pres(arg, "simplify").pres, opt.effort);
      return PresValue{simp, cert};
    }
    if (op == "abelianization") {
      return abelianization(as_pres(eval(e.args[0]), "abelianization").pres);
    }
    if (op == "order") {
      EnumerationResult r =
          todd_coxeter(as_pres(eval(e.args[0]), "order").pres, opt.max_cosets);
      if (!r.is_finite()) {
        throw eval_error("coset enumeration exceeded the cap of " +
                         std::to_string(opt.max_cosets) + " cosets");
      }
      return static_cast<long long>(r.order);
    }
    if (op == "hom_count") {
      auto n = count_homomorphisms(as_pres(eval(e.args[0]), "hom_count").pres,
                                   FiniteTarget::parse(e.str_arg));
      if (!n) throw eval_error("homomorphism search space too large");
      return static_cast<long long>(*n);
    }
    if (op == "euler") return static_cast<long long>(as_block(eval(e.args[0]), "euler").euler);
    if (op == "sigma") {
      return static_cast<long long>(as_block(eval(e.args[0]), "sigma").signature);
    }
    throw eval_error("unknown operation '" + op + "'");
  }

  std::string show(const Value& v) {
    if (const long long* i = std::get_if<long long>(&v)) return std::to_string(*i);
    if (const AbelianInvariants* a = std::get_if<AbelianInvariants>(&v)) return a->to_string();
    if (const PresValue* p = std::get_if<PresValue>(&v)) return print_presentation(p->pres);
    return "<block " + std::get<ManifoldBlock>(v).name + ">";
  }

  // equality across value kinds; integer 1 doubles as the trivial group
  bool values_equal(const Value& a, const Value& b) {
    if (a.index() == b.index()) {
      if (const long long* i = std::get_if<long long>(&a)) {
        return *i == std::get<long long>(b);
      }
      if (const AbelianInvariants* x = std::get_if<AbelianInvariants>(&a)) {
        return *x == std::get<AbelianInvariants>(b);
      }
      if (const PresValue* p = std::get_if<PresValue>(&a)) {
        return p->pres.same_presentation(std::get<PresValue>(b).pres);
      }
      throw eval_error("blocks cannot be compared with ==");
    }
    auto trivial_vs_int = [&](const Value& x, const Value& y) {
      const long long* i = std::get_if<long long>(&x);
      const AbelianInvariants* g = std::get_if<AbelianInvariants>(&y);
      return i && g && *i == 1 && g->free_rank == 0 && g->torsion.empty();
    };
    if (trivial_vs_int(a, b) || trivial_vs_int(b, a)) return true;
    const bool int_ab = (std::holds_alternative<long long>(a) &&
                         std::holds_alternative<AbelianInvariants>(b)) ||
                        (std::holds_alternative<long long>(b) &&
                         std::holds_alternative<AbelianInvariants>(a));
    if (int_ab) return false;  // e.g. Z/2 == 2 is a mismatch, not an error
    throw eval_error("cannot compare values of different kinds");
  }
};

}  // namespace

RunReport run_script(const Script& script, const RunOptions& options) {
  RunReport report;
  Evaluator ev{options};
  for (const Statement& st : script.statements) {
    RunEntry entry;
    entry.line = st.line;
    entry.text = print_statement(st);
    try {
      switch (st.kind) {
        case Statement::Kind::block_binding:
          ev.env.emplace(st.name, builtin(st.builtin_name));
          entry.message = "bound";
          break;
        case Statement::Kind::let_binding:
          ev.env.emplace(st.name, ev.eval(st.expr));
          entry.message = "bound";
          break;
        case Statement::Kind::assertion: {
          if (st.predicate == Statement::Predicate::equals) {
            Value lhs = ev.eval(st.lhs);
            Value rhs = ev.eval(st.rhs);
            if (ev.values_equal(lhs, rhs)) {
              entry.message = "holds (" + ev.show(lhs) + ")";
            } else {
              entry.status = RunEntry::Status::failed;
              entry.message = "computed " + ev.show(lhs) + ", expected " + ev.show(rhs);
            }
          } else {
            Value gv = ev.eval(st.group_expr);
            const PresValue& g = ev.as_pres(gv, "trivial");
            const Presentation& context = g.cert ? g.cert->source : g.pres;
            Word w = parse_word(st.word_text, context);
            bool ok;
            if (g.cert) {
              ok = word_trivial_under(*g.cert, w);
            } else {
              auto [simp, cert] = tietze_simplify(g.pres, options.effort);
              (void)simp;
              ok = word_trivial_under(cert, w);
            }
            if (ok) {
              entry.message = "shown trivial";
            } else {
              entry.status = RunEntry::Status::failed;
              entry.message = "not shown trivial (inconclusive)";
            }
          }
          break;
        }
      }
    } catch (const std::exception& e) {
      entry.status = RunEntry::Status::error;
      entry.message = e.what();
    }
    if (entry.status != RunEntry::Status::ok) report.exit_code = 1;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  for (const RunEntry& e : entries) {
    const char* status = e.status == RunEntry::Status::ok       ? "ok"
                         : e.status == RunEntry::Status::failed ? "FAIL"
                                                                : "ERROR";
    out << status << "  line " << e.line << ": " << e.text;
    if (!e.message.empty()) out << "  -- " << e.message;
    out << "\n";
  }
  out << (exit_code == 0 ? "all assertions passed" : "FAILURES") << "\n";
  return out.str();
}

nlohmann::json RunReport::to_json(const RunOptions& options) const {
  nlohmann::json j;
  j["entries"] = nlohmann::json::array();
  for (const RunEntry& e : entries) {
    nlohmann::json ej;
    ej["line"] = e.line;
    ej["text"] = e.text;
    ej["status"] = e.status == RunEntry::Status::ok       ? "ok"
                   : e.status == RunEntry::Status::failed ? "failed"
                                                          : "error";
    ej["message"] = e.message;
    j["entries"].push_back(std::move(ej));
  }
  j["exit_code"] = exit_code;
  if (options.include_timestamp) {
    j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
  }
  return j;
}

}  // namespace luttinger

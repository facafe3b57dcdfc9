#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "luttinger/coset_enum.hpp"
#include "luttinger/manifold.hpp"
#include "luttinger/tietze.hpp"

namespace luttinger {

struct Diagnostic {
  enum class Severity { error, warning };
  Severity severity = Severity::error;
  int line = 0;
  int column = 0;
  std::string message;

  std::string to_string() const;
};

/// Construction-script AST. Statements are bindings or assertions:
///   block W = builtin("matsumoto_W")
///   let R = fiber_sum(W.F, B.G, match=[a1->x1, b1->y1, a2->x2, b2->y2])
///   let P = luttinger(R.T1, gamma=(0,1), k=1)
///   assert euler(P) == 8
///   assert abelianization(closed_pi1(P)) == Z
///   assert order(closed_pi1(Q)) == 6
///   assert trivial("[x1,t]", simplify(R))
struct Expr {
  enum class Kind { integer, variable, abelian_literal, call };
  Kind kind = Kind::integer;

  long long int_value = 0;
  std::string name;  // variable name, or call operation name

  // abelian literal, e.g. Z^2 + Z/6
  std::size_t ab_free_rank = 0;
  std::vector<long long> ab_torsion;

  // call payload; which fields are used depends on the operation
  std::vector<Expr> args;
  std::string str_arg;
  std::string block_ref, label_ref, block_ref2, label_ref2;
  struct Arrow {
    std::string from, to;
    int sign = 1;
  };
  std::vector<Arrow> match;
  long long p = 0, q = 0, k = 0;
};

struct Statement {
  enum class Kind { block_binding, let_binding, assertion };
  enum class Predicate { equals, trivial };
  Kind kind = Kind::block_binding;
  int line = 0, column = 0;

  std::string name;          // binding name
  std::string builtin_name;  // block binding
  Expr expr;                 // let binding

  Predicate predicate = Predicate::equals;
  Expr lhs, rhs;          // assert ... == ...
  std::string word_text;  // assert trivial("w", g)
  Expr group_expr;
};

struct Script {
  std::vector<Statement> statements;
};

struct ParseResult {
  std::optional<Script> script;  // absent on any error diagnostic
  std::vector<Diagnostic> diagnostics;
};

/// Recursive-descent parse with positioned diagnostics. Syntax errors yield
/// no script (no partial results).
ParseResult parse_script(const std::string& text);

/// Canonical source form; print(parse(s)) reparses to an equal script.
std::string print_script(const Script& s);
std::string print_statement(const Statement& st);
bool scripts_equal(const Script& a, const Script& b);

struct RunOptions {
  std::uint64_t max_cosets = kDefaultCosetCap;
  TietzeBudget effort{};
  bool include_timestamp = true;
};

struct RunEntry {
  int line = 0;
  std::string text;
  enum class Status { ok, failed, error } status = Status::ok;
  std::string message;
};

struct RunReport {
  std::vector<RunEntry> entries;
  /// 0: all assertions passed; 1: assertion failure or evaluation error.
  int exit_code = 0;

  std::string to_text() const;
  nlohmann::json to_json(const RunOptions& options) const;
};

/// Evaluates statements in order; assertion failures and evaluation errors
/// are collected into the report rather than thrown.
RunReport run_script(const Script& script, const RunOptions& options = {});

}  // namespace luttinger

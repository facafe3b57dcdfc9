#include <doctest.h>

#include "luttinger/script.hpp"

using namespace luttinger;

namespace {

Script parse_ok(const std::string& text) {
  ParseResult r = parse_script(text);
  if (!r.script) {
    for (const auto& d : r.diagnostics) MESSAGE(d.to_string());
  }
  REQUIRE(r.script.has_value());
  return *r.script;
}

Diagnostic parse_fail(const std::string& text) {
  ParseResult r = parse_script(text);
  REQUIRE(!r.script.has_value());
  REQUIRE(!r.diagnostics.empty());
  return r.diagnostics.front();
}

RunReport run_text(const std::string& text) {
  RunOptions options;
  options.include_timestamp = false;
  return run_script(parse_ok(text), options);
}

const char* kPipeline =
    "# builds the fiber sum and surgers one torus\n"
    "block W = builtin(\"matsumoto_W\")\n"
    "block B = builtin(\"block_B\")\n"
    "let R = fiber_sum(W.F, B.G, match=[a1->x1, b1->y1, a2->x2, b2->y2])\n"
    "let P = luttinger(R.T1, gamma=(0,1), k=1)\n"
    "assert euler(P) == 8\n"
    "assert sigma(P) == -4\n"
    "assert abelianization(closed_pi1(P)) == Z\n";

}  // namespace

TEST_CASE("print/parse is a stable round trip") {
  Script s = parse_ok(kPipeline);
  CHECK(s.statements.size() == 7);
  std::string printed = print_script(s);
  Script again = parse_ok(printed);
  CHECK(scripts_equal(s, again));
  CHECK(print_script(again) == printed);
}

TEST_CASE("literals and predicates parse") {
  Script s = parse_ok(
      "let G = presentation(\"< a | a^6 >\")\n"
      "assert abelianization(G) == Z/6\n"
      "assert abelianization(presentation(\"< a, b | a^2 >\")) == Z + Z/2\n"
      "assert order(G) == 6\n"
      "assert hom_count(G, \"Z/3\") == 3\n"
      "assert trivial(\"a^6\", simplify(G))\n");
  CHECK(s.statements.size() == 6);
  CHECK(scripts_equal(s, parse_ok(print_script(s))));
}

TEST_CASE("diagnostics carry positions") {
  Diagnostic d = parse_fail("block W = builtin(\"matsumoto_W\")\nlet R = fiber_sum(;)\n");
  CHECK(d.line == 2);
  CHECK(d.column >= 19);

  CHECK(parse_fail("assert euler(X) == 8\n").line == 1);                  // unbound name
  CHECK(parse_fail("let a = 1\nlet a = 2\n").line == 2);                  // rebinding
  CHECK(parse_fail("let x = order(\"< a | a >\")\n").line == 1);          // not an expr
  CHECK(parse_fail("assert 1 = 1\n").line == 1);                          // '=' vs '=='
}

TEST_CASE("running a passing pipeline") {
  RunReport r = run_text(kPipeline);
  CHECK(r.exit_code == 0);
  for (const auto& e : r.entries) CHECK(e.status == RunEntry::Status::ok);
}

TEST_CASE("assertion failures set exit code 1 and keep going") {
  RunReport r = run_text(
      "let G = presentation(\"< a | a^4 >\")\n"
      "assert order(G) == 5\n"
      "assert order(G) == 4\n");
  CHECK(r.exit_code == 1);
  REQUIRE(r.entries.size() == 3);
  CHECK(r.entries[1].status == RunEntry::Status::failed);
  CHECK(r.entries[1].message.find("computed 4") != std::string::npos);
  CHECK(r.entries[2].status == RunEntry::Status::ok);
}

TEST_CASE("evaluation errors become report entries") {
  RunReport r = run_text(
      "block W = builtin(\"no_such_block\")\n"
      "let G = presentation(\"< a | a >\")\n"
      "assert order(G) == 1\n");
  CHECK(r.exit_code == 1);
  CHECK(r.entries[0].status == RunEntry::Status::error);
  CHECK(r.entries[2].status == RunEntry::Status::ok);

  // type errors: a block is not a presentation
  RunReport t = run_text(
      "block W = builtin(\"matsumoto_W\")\n"
      "assert order(W) == 1\n");
  CHECK(t.entries[1].status == RunEntry::Status::error);
  CHECK(t.entries[1].message.find("closed_pi1") != std::string::npos);
}

TEST_CASE("exceeded enumerations are errors, not hangs") {
  RunOptions options;
  options.include_timestamp = false;
  options.max_cosets = 200;
  RunReport r = run_script(parse_ok("assert order(presentation(\"< a | >\")) == 1\n"),
                           options);
  CHECK(r.exit_code == 1);
  CHECK(r.entries[0].status == RunEntry::Status::error);
}

TEST_CASE("JSON report is deterministic without timestamps") {
  RunOptions options;
  options.include_timestamp = false;
  Script s = parse_ok("assert euler(builtin(\"torus_T4\")) == 0\n");
  // `builtin` also works as an expression inside assertions
  auto a = run_script(s, options).to_json(options).dump();
  auto b = run_script(s, options).to_json(options).dump();
  CHECK(a == b);
  CHECK(a.find("\"timestamp\"") == std::string::npos);
  CHECK(run_script(s, options).to_json(RunOptions{}).contains("timestamp"));
}

TEST_CASE("abelian literal equality handles the trivial group spelled 1") {
  RunReport r = run_text(
      "let G = presentation(\"< a | a >\")\n"
      "assert abelianization(G) == 1\n"
      "assert order(G) == 1\n");
  CHECK(r.exit_code == 0);
}

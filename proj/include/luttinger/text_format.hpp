#pragma once

#include <string>
#include <vector>

#include "luttinger/presentation.hpp"

namespace luttinger {

/// Parse error with a 0-based character offset into the input.
struct parse_error : std::runtime_error {
  std::size_t offset;
  parse_error(std::string msg, std::size_t off)
      : std::runtime_error(std::move(msg)), offset(off) {}
};

/// Word syntax: identifiers, `^` integer exponents, optional `*` between
/// factors, `[u,v]` commutator sugar, parentheses, `1` for the identity.
/// Example: `[y1^-1,t]*x1^-1`.
Word parse_word(const std::string& text, const Presentation& context);

/// Presentation syntax: `< x, y, t | [t,x], [y^-1,t]*x^-1 >`.
Presentation parse_presentation(const std::string& text);

std::string print_word(const Word& w, const Presentation& context);
std::string print_presentation(const Presentation& p);

}  // namespace luttinger

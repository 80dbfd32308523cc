#pragma once

#include <string>

#include "supercurve/element.hpp"

namespace supercurve {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int l, int c)
        : std::runtime_error(msg + " at " + std::to_string(l) + ":" + std::to_string(c)),
          line(l), column(c) {}
};

/// Grammar: identifiers z|t (even), th1..thN, eta1..etaM, the imaginary
/// unit i, integer and rational literals p/q, operators + - * ^ and
/// parentheses; whitespace insignificant.  parse(x.str()) == x.
SuperElement parse_expression(const std::string& text, const AlgebraSignature& sig);

} // namespace supercurve

#pragma once

#include <stdexcept>
#include <string>

#include "lazcad/multipoly.hpp"

namespace lazcad {

struct ParseError : std::runtime_error {
    ParseError(std::string msg, std::size_t position, bool undeclared_var = false)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          pos(position),
          undeclared(undeclared_var) {}
    std::size_t pos;
    bool undeclared;  // the input used a variable outside the declared order
};

// Polynomial expression syntax: declared variable identifiers, integer or
// rational literals (e.g. 3, -4/5), operators + - * ^ and parentheses.
// Multiplication is always explicit.
MultiPoly parse_poly(const std::string& text, const VarOrderPtr& order);

}  // namespace lazcad

#pragma once

#include <string>
#include <vector>

#include "superfrieze/scalar.hpp"

namespace superfrieze {

/// Parses an expression into a SuperScalar. Grammar (EBNF):
///
///   expr     = term { ("+" | "-") term } ;
///   term     = factor { ("*" | "/") factor } ;
///   factor   = [ "-" ] atom [ "^" integer ] ;
///   atom     = rational | generator | "(" expr ")" ;
///   rational = integer [ "/" integer ] ;
///   generator = letter { letter } [ digit { digit } ] ;
///
/// Generators whose name starts with 'b' are odd; all others are even.
/// Throws InputError with the offending position on malformed input.
SuperScalar parse_scalar(const std::string& text);

/// Splits on commas at top level and parses each piece.
std::vector<SuperScalar> parse_scalar_list(const std::string& text);

} // namespace superfrieze

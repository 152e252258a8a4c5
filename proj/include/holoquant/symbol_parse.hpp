#pragma once

#include <string>
#include <string_view>

#include "holoquant/quantize.hpp"

namespace holoquant {

// Grammar (whitespace ignored):
//   symbol  := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := number ['i'] | 'i' | var ['^' digits]
// var is x or p for phase symbols, z or zb for holomorphic-space symbols.
// Parentheses and division are not part of the grammar.
PhaseSymbol parse_symbol(std::string_view text);
SBSymbol parse_sb_symbol(std::string_view text);

std::string to_string(const PhaseSymbol& f);
std::string to_string(const SBSymbol& f);

}  // namespace holoquant

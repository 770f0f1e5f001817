#pragma once

// Textual state specifications used by the command-line front end:
//
//   schmidt3:l0,l1,l2,l3,l4[,phi]
//   wclass:a,b,c
//   haar:d1xd2x...:seed
//
// Whitespace around tokens is ignored; the number of fields is strict.
// Real-valued fields accept decimal literals or small arithmetic
// expressions such as `sqrt(6)/6` or `pi/4`.

#include <string_view>

#include "entbound/states.hpp"

namespace entbound {

/// Throws Error(Parse) on malformed text and Error(Domain) when the numbers
/// parse but do not describe a valid state.
PureState parse_state_spec(std::string_view spec);

/// Evaluates + - * / with parentheses, unary signs, sqrt(...) and pi.
double parse_real_expression(std::string_view text);

}  // namespace entbound

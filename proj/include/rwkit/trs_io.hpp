#pragma once

#include <string>

#include "rwkit/rewriting.hpp"

namespace rwkit {

/// Parses the COPS-style TRS format:
///
///   (VAR x y)
///   (RULES
///     f(f(x)) -> x          ; comments run to end of line
///   )
///
/// Identifiers match [A-Za-z0-9_'+*-]+. Function arities are inferred from
/// first use and checked consistent thereafter. Identical rules are kept
/// once. Violations (syntax, arity clashes, variable lhs, rhs variable not
/// in lhs, unsupported sections) raise parse_error with line and column.
trs parse_trs(const std::string& text);

/// Renders a TRS back into the input format; parsing the output yields a
/// structurally identical system.
std::string print_trs(const trs& system);

/// Parses a single term against an existing system's signature and declared
/// variables. Unknown identifiers are rejected, except that unknown nullary
/// ones become fresh constants when allow_fresh_consts is set.
term parse_term(const std::string& text, const trs& system, bool allow_fresh_consts);

}  // namespace rwkit

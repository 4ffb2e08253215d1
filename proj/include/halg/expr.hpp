#pragma once

#include <set>
#include <string>

#include "halg/formal.hpp"

namespace halg {

struct ExprOptions {
    // When set, identifiers other than the reserved formal names must
    // appear in this set or parsing throws UnknownName.
    const std::set<std::string>* allowed_params = nullptr;
    // When false the reserved names D, Lm, Mu are rejected.
    bool allow_formal = true;
};

// Grammar: sums of products of powers, with parentheses, unary minus
// and integer literals. Identifiers D, Lm and Mu are the formal
// variables; every other identifier is a scalar parameter. Division
// requires a denominator free of formal variables.
FormalPoly parse_formal(const std::string& text, const ExprOptions& opts = {});

// Same grammar with allow_formal off; the result must be a plain scalar.
Scalar parse_scalar(const std::string& text, const ExprOptions& opts = {});

} // namespace halg

#pragma once

#include "kolchin/diff_operator.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace kolchin {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what), position(pos) {}
};

/// Named coefficient aliases usable inside operator expressions.
using Definitions = std::map<std::string, RatFunc>;

/// "name=expr" bindings, parsed left to right; each right-hand side must be
/// an order-zero operator over x1..xm and may use names bound earlier.
Definitions parse_definitions(int m, const std::vector<std::string>& bindings);

/// Grammar: sums and differences of '*'-separated factors; factors are
/// rationals p/q, variables x1..x9, derivations d1..d9, aliases, or
/// parenthesized subexpressions, optionally raised to a nonnegative integer
/// power. '*' is operator composition.
DiffOperator parse_operator(const std::string& text, int m,
                            const Definitions& defs = {});

/// parse_operator restricted to order zero.
RatFunc parse_coefficient(const std::string& text, int m,
                          const Definitions& defs = {});

/// "(2,0);(1,1)"; the empty string is the empty set.
LeaderSet parse_leader_set(int m, const std::string& text);

}  // namespace kolchin

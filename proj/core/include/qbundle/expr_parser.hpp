#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qbundle/element.hpp"

namespace qbundle {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, size_t position)
        : std::runtime_error(message + " at offset " + std::to_string(position)),
          position(position) {}
    size_t position;
};

/// Grammar: sums of products of factors. A factor is a rational literal,
/// q, a generator name, star(expr) or a parenthesized expression, with
/// postfix ^* (adjoint) and ^n (integer power, g^-n meaning (g^*)^n).
/// Juxtaposition is not multiplication; products require '*'.
TermList parse_terms(const std::vector<Generator>& gens, std::string_view text);

/// Same grammar with an infix (x) tensor separator between the two legs of
/// each summand; a summand without (x) gets a unit right leg.
std::vector<TensorTerm2> parse_tensor_terms(const std::vector<Generator>& gens,
                                            std::string_view text);

/// Parse and reduce to an element of the given algebra.
Element parse_element(const PresPtr& p, std::string_view text);

}  // namespace qbundle

#pragma once

#include <string>

#include "flipcox/group.hpp"

namespace flipcox {

/// Parses the word grammar: whitespace-separated generator tokens ("r4",
/// "rb2", "s2", "s0", "s0p") and parenthesized powers "( ... )^m" with m >= 1,
/// which may nest. Powers are expanded at parse time, so the result is a
/// plain symbol sequence. Unknown tokens raise ParseError; tokens that name a
/// generator the context does not have raise InvalidSymbolError.
Word parse_word(const std::string& text, const GroupContext& ctx);

/// Renders a word as space-separated tokens (powers are not re-folded).
/// The empty word renders as the empty string.
std::string render(const Word& w);

/// Single token for a symbol sequence without a context.
std::string render_syms(const std::vector<Gen>& syms);

} // namespace flipcox

#pragma once

#include "fpg/word.hpp"
#include "lexer.hpp"

namespace fpg::detail {

// Parses a word from an open token stream; shared with the presentation parser.
Word parse_word_tokens(Lexer& lx, const Alphabet& alphabet);

}  // namespace fpg::detail

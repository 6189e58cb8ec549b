#pragma once

#include "nanoword/error.hpp"
#include "nanoword/phrase.hpp"

#include <string>
#include <string_view>

namespace nanoword {

/// Gauss-condition failure detected while parsing, carrying the per-letter
/// occurrence counts.
struct GaussParseError : ParseError {
    GaussParseError(const std::string& what, int line, int col,
                    std::vector<GaussViolation> violations)
        : ParseError(what, line, col), violations(std::move(violations)) {}
    std::vector<GaussViolation> violations;
};

/// Parses a phrase document:
///
///   alphabet <sym> <sym> ...     # or one of star/alpha0/alpha1/alpha2/alphaG
///   tau <sym>:<sym> ...          # unlisted symbols are fixed points
///   nu  <sym>:<sym> ...
///   S knotlike | S diagonal | S (<s>,<s>,<s>) ...
///   phrase <Letter>[:<sym>] ... | ...
///
/// '#' starts a comment.  A letter's ":<sym>" is mandatory on its first
/// occurrence and forbidden on the second.  A missing phrase line yields the
/// (flagged) empty phrase of length 0; a bare "phrase" line yields one empty
/// component.  The symbol token "+1" is accepted as an alias for "1".
Phrase parse_phrase_document(std::string_view text);

/// Renders a document that parses back to the same canonical form.
std::string render_phrase_document(const Phrase& p);

}  // namespace nanoword

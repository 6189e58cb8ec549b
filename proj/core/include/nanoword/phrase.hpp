#pragma once

#include "nanoword/alphabet.hpp"

#include <span>
#include <string>
#include <vector>

namespace nanoword {

/// Index of a letter within a phrase.  A letter is an opaque entity with a
/// display name and a projection into the alphabet; it occurs at positions
/// of the phrase.
using LetterIdx = int;

/// A Gauss phrase over an alphabet: an ordered list of components, each a
/// sequence of letter occurrences, where (when valid) every letter occurs
/// exactly twice across the whole concatenation.  Values are immutable;
/// every operation returns a fresh phrase.
class Phrase {
public:
    /// Empty phrase of length k = 0 over the given alphabet.
    explicit Phrase(AlphabetPtr alphabet);
    Phrase(AlphabetPtr alphabet, std::vector<std::string> letter_names,
           std::vector<Symbol> projections,
           std::vector<std::vector<LetterIdx>> components);

    const Alphabet& alphabet() const { return *alphabet_; }
    const AlphabetPtr& alphabet_ptr() const { return alphabet_; }

    int letter_count() const { return static_cast<int>(names_.size()); }
    int component_count() const { return static_cast<int>(components_.size()); }
    const std::vector<std::vector<LetterIdx>>& components() const { return components_; }
    const std::vector<LetterIdx>& component(int i) const {
        return components_.at(static_cast<size_t>(i));
    }

    Symbol proj(LetterIdx l) const { return proj_.at(static_cast<size_t>(l)); }
    const std::string& letter_name(LetterIdx l) const {
        return names_.at(static_cast<size_t>(l));
    }
    const std::vector<Symbol>& projections() const { return proj_; }
    const std::vector<std::string>& letter_names() const { return names_; }

    /// Concatenation w_1 w_2 ... w_k as a flat occurrence list.
    std::vector<LetterIdx> flat() const;
    int total_length() const;
    /// Maps a flat concatenation position to (component, offset).
    std::pair<int, int> locate(int flat_pos) const;
    /// Flat positions of both occurrences of a letter, ascending.
    /// Requires the letter to occur exactly twice.
    std::pair<int, int> occurrences(LetterIdx l) const;
    /// Occurrence count of each letter in the concatenation.
    std::vector<int> occurrence_counts() const;

    /// Same phrase with one letter's projection replaced.
    Phrase with_projection(LetterIdx l, Symbol s) const;
    /// Same phrase structure over another alphabet (projections remapped by
    /// the given per-symbol table; entries < 0 are forbidden).
    Phrase relabeled(AlphabetPtr target, const std::vector<Symbol>& symbol_map) const;

    bool operator==(const Phrase& other) const;

private:
    AlphabetPtr alphabet_;
    std::vector<std::string> names_;
    std::vector<Symbol> proj_;
    std::vector<std::vector<LetterIdx>> components_;
};

/// One letter violating the Gauss condition.
struct GaussViolation {
    std::string letter;
    int count = 0;
    bool operator==(const GaussViolation&) const = default;
};

struct GaussReport {
    std::vector<GaussViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks that every letter occurs exactly twice in the concatenation.
GaussReport validate_gauss(const Phrase& p);
/// Throws DomainError when validate_gauss fails.
void require_gauss(const Phrase& p);

/// A phrase whose letters are renamed X1, X2, ... in order of first
/// occurrence (and reindexed to match).  Two valid phrases are isomorphic
/// iff their canonical forms compare equal.
struct CanonicalForm {
    Phrase phrase;

    bool operator==(const CanonicalForm& other) const;
    /// Deterministic serialization of the phrase body (alphabet omitted);
    /// used as a search key and for lexicographic tie-breaking.
    std::string key() const;
};

CanonicalForm canonicalize(const Phrase& p);
bool isomorphic(const Phrase& a, const Phrase& b);

/// Contiguous subword of the concatenation, [begin, end), with component
/// boundaries transparent.
struct SubwordRange {
    int begin = 0;
    int end = 0;
};

/// P_w: projections twisted by tau for letters occurring once among the
/// designated occurrences and by nu for letters occurring twice.
Phrase project_word(const Phrase& p, SubwordRange w);
Phrase project_word(const Phrase& p, std::span<const int> flat_positions);

}  // namespace nanoword

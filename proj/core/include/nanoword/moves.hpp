#pragma once

#include "nanoword/phrase.hpp"

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace nanoword {

/// Move kinds.  The H*, shift, permute and invert kinds are enumerable; the
/// Lemma1 and abab kinds are derived moves applied at an explicit locus.
/// Every kind has an inverse kind so that certificates can be replayed in
/// either direction (H3 and the derived moves need explicit inverse kinds:
/// their reverse rewrites match none of the forward patterns).
enum class MoveKind {
    H1,
    H1Inv,
    H2,
    H2Inv,
    H3,
    H3Inv,
    Lemma1i,
    Lemma1ii,
    Lemma1iii,
    Lemma1iInv,
    Lemma1iiInv,
    Lemma1iiiInv,
    Abab,
    AbabInv,
    Shift,
    ShiftInv,
    Permute,
    Invert,
};

const char* to_string(MoveKind k);
MoveKind inverse_kind(MoveKind k);

/// A fully located move.
///
/// Locus layout by kind (flat positions index the concatenation, 0-based;
/// components are 0-based; a gap is a (component, offset) pair):
///   H1                      {p}              first of two adjacent equal letters
///   H2, Abab                {p, q}           starts of the two adjacent pairs
///   H3, H3Inv, Lemma1*      {p1, p2, p3}     starts of the three adjacent pairs
///   H1Inv                   {c, o}           insertion gap; payload {sym}
///   H2Inv, AbabInv          {c1, o1, c2, o2} two gaps in order; payload {sym}
///   Shift, ShiftInv,
///   Permute, Invert         {i}              component index
struct MoveInstance {
    MoveKind kind;
    std::vector<int> locus;
    std::vector<Symbol> payload;
    bool operator==(const MoveInstance&) const = default;
};

/// Serialization used in certificates: "<kind> @ <locus>".
std::string to_string(const MoveInstance& m, const Alphabet& alphabet);

// Structural moves.  Component indices are 0-based.
Phrase nu_shift(const Phrase& p, int component);
Phrase nu_shift_back(const Phrase& p, int component);
Phrase nu_permutation(const Phrase& p, int i);  // swaps components i and i+1
Phrase nu_inversion(const Phrase& p, int i);

enum class Lemma1Variant { I, II, III };
/// Derived moves of Turaev's Lemma 2.1: rewrites the three adjacent pairs at
/// the given positions when the variant's tau-twisted side condition holds.
Phrase apply_lemma1(const Phrase& p, Lemma1Variant v, std::array<int, 3> pairs);
/// Derived move of Turaev's Lemma 2.2 (xAByABz -> xyz); requires
/// tau(|A|) = |B| and S to meet alpha x {b} x {b} for every b.
Phrase apply_abab(const Phrase& p, int p1, int p2);

/// All applicable instances: H1/H2/H3 loci, shifts, permutations and
/// inversions per component, and (with include_inverses) H3Inv plus
/// insertion moves within growth_budget fresh letters.
std::vector<MoveInstance> enumerate_moves(const Phrase& p, bool include_inverses,
                                          int growth_budget);

Phrase apply_move(const Phrase& p, const MoveInstance& m);

/// The instance undoing m, localized against apply_move(p, m).  Inverse
/// loci are stable under canonicalization (renaming does not move
/// positions), so the pair replays on canonical forms.
MoveInstance inverse_move(const Phrase& p, const MoveInstance& m);

/// Bounded bidirectional search for an S-homotopy certificate.
struct EquivOptions {
    int max_letters = 8;
    int max_depth = 8;
    std::set<MoveKind> allowed = {MoveKind::H1, MoveKind::H1Inv, MoveKind::H2,
                                  MoveKind::H2Inv, MoveKind::H3, MoveKind::H3Inv};
};

struct EquivResult {
    enum class Verdict { Equivalent, Unknown };
    Verdict verdict = Verdict::Unknown;
    /// Moves transforming canonicalize(p1) into canonicalize(p2), loci
    /// against the canonical form at each step.
    std::vector<MoveInstance> certificate;
    struct Stats {
        std::int64_t expanded = 0;
        bool depth_bound_hit = false;
        bool letter_bound_hit = false;  // some successor was pruned by max_letters
    } stats;
};

/// Sound but incomplete: Unknown does not mean inequivalent.  Deterministic:
/// frontier nodes are processed in canonical-key order and the reported
/// certificate is the shortest found, ties broken by serialized form.
EquivResult equiv_search(const Phrase& p1, const Phrase& p2, const EquivOptions& opt);

/// Replays a certificate: canonicalizes, applies each move, canonicalizes.
Phrase replay_certificate(const Phrase& start, const std::vector<MoveInstance>& cert);

struct WalkResult {
    Phrase phrase;
    std::vector<MoveInstance> certificate;
};

/// Deterministic random walk: each step picks uniformly (via the seed) among
/// applicable moves of the allowed kinds; insertion moves are offered while
/// the net letter growth stays within growth_budget.  Stops early when no
/// move applies.
WalkResult random_walk(const Phrase& p, int steps, std::uint64_t seed,
                       const std::set<MoveKind>& allowed, int growth_budget);

}  // namespace nanoword

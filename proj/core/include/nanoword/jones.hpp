#pragma once

#include "nanoword/homotopy.hpp"
#include "nanoword/laurent.hpp"
#include "nanoword/phrase.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace nanoword {

/// Marker assignment, one of -1/+1 per letter index of the phrase it
/// annotates.
struct State {
    std::vector<int> mark;
    int operator()(LetterIdx l) const { return mark.at(static_cast<size_t>(l)); }
};

struct StateSummary {
    int loops = 0;  // |s|: empty words after full reduction
    int sigma = 0;  // #{mark=+1} - #{mark=-1}
    bool operator==(const StateSummary&) const = default;
};

/// True when the phrase's alphabet equals the builtin alpha1 by content.
bool over_alpha1(const Phrase& p);
/// True for the builtin star alphabet.
bool over_star(const Phrase& p);

/// Writhe w(P) over alpha1: the sum of the +-1 projections.
int writhe(const Phrase& p);

/// One smoothing deformation: normalizes the marked letter to the head of
/// its component(s) by cyclic shifts (projection-safe over alpha1), then
/// deletes it by the branch selected by mark vs projection, twisting by the
/// enclosed subword on the mark != projection branch.
Phrase star_step(const Phrase& p, LetterIdx letter, int mark);

/// Fully reduces the phrase under a state, deleting the letter whose first
/// occurrence is leftmost at each step.
StateSummary reduce_state(const Phrase& p, const State& s);
/// Same, deleting letters in a seed-determined random order; exists to
/// exercise the order-independence of the loop count.
StateSummary reduce_state(const Phrase& p, const State& s, std::uint64_t seed);

/// The generic bracket in Z[t, u, d]: the sum of
/// t^#{mark=1} u^#{mark=-1} d^(loops-1) over all 2^n states.  The state sum
/// is evaluated in parallel when NANOWORD_THREADS (or the hardware) allows;
/// the result is bit-identical to sequential evaluation.
LaurentPoly bracket_generic(const Phrase& p);

/// specialize(bracket_generic(p)); the Kauffman-style bracket in t.
LaurentPoly specialized_bracket(const Phrase& p);

/// The Jones polynomial (-t)^{-3 w(P)} * specialized bracket.  For the
/// (flagged) length-0 phrase the convention J = 1 applies.
LaurentPoly jones(const Phrase& p);

/// Turaev's recursive bracket of a phrase over the star alphabet; the
/// independent oracle for the state sum.
LaurentPoly turaev_bracket(const Phrase& p);

/// Default lift along the star -> alpha1 projection: 1 -> a+, -1 -> a-.
Phrase lift_to_star(const Phrase& p);
/// Seeded lift: each letter independently picks the a- or b-side preimage.
Phrase lift_to_star(const Phrase& p, std::uint64_t seed);

// The three projections out of the star alphabet.
Phrase project_fact_p(const Phrase& p);  // -> alpha1: a+, b+ -> 1; a-, b- -> -1
Phrase project_fact_s(const Phrase& p);  // -> alpha0: a-, a+ -> a; b-, b+ -> b
Phrase project_fact_q(const Phrase& p);  // -> alpha2: a+, b- -> c; a-, b+ -> d

struct JonesRoute {
    enum class Kind { Direct, UL, F1, Fstar };
    Kind kind = Kind::Direct;
    std::set<Symbol> L;  // for UL, a subset of crs(alpha/tau)
};

/// Jones polynomial of a phrase over an arbitrary alphabet via the selected
/// pipeline: UL = J(U_L(P)); F1 = J(F_1(P)); Fstar = J(fact_p(F_star(P))).
/// Direct requires alpha1 (or alpha0, read through the bijection f).
LaurentPoly jones_general(const Phrase& p, const JonesRoute& route);

}  // namespace nanoword

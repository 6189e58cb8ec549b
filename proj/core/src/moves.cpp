#include "nanoword/moves.hpp"

#include "nanoword/error.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace nanoword {

const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::H1: return "H1";
        case MoveKind::H1Inv: return "H1inv";
        case MoveKind::H2: return "H2";
        case MoveKind::H2Inv: return "H2inv";
        case MoveKind::H3: return "H3";
        case MoveKind::H3Inv: return "H3inv";
        case MoveKind::Lemma1i: return "L1i";
        case MoveKind::Lemma1ii: return "L1ii";
        case MoveKind::Lemma1iii: return "L1iii";
        case MoveKind::Lemma1iInv: return "L1i-inv";
        case MoveKind::Lemma1iiInv: return "L1ii-inv";
        case MoveKind::Lemma1iiiInv: return "L1iii-inv";
        case MoveKind::Abab: return "abab";
        case MoveKind::AbabInv: return "abab-inv";
        case MoveKind::Shift: return "shift";
        case MoveKind::ShiftInv: return "shift-inv";
        case MoveKind::Permute: return "permute";
        case MoveKind::Invert: return "invert";
    }
    return "?";
}

MoveKind inverse_kind(MoveKind k) {
    switch (k) {
        case MoveKind::H1: return MoveKind::H1Inv;
        case MoveKind::H1Inv: return MoveKind::H1;
        case MoveKind::H2: return MoveKind::H2Inv;
        case MoveKind::H2Inv: return MoveKind::H2;
        case MoveKind::H3: return MoveKind::H3Inv;
        case MoveKind::H3Inv: return MoveKind::H3;
        case MoveKind::Lemma1i: return MoveKind::Lemma1iInv;
        case MoveKind::Lemma1iInv: return MoveKind::Lemma1i;
        case MoveKind::Lemma1ii: return MoveKind::Lemma1iiInv;
        case MoveKind::Lemma1iiInv: return MoveKind::Lemma1ii;
        case MoveKind::Lemma1iii: return MoveKind::Lemma1iiiInv;
        case MoveKind::Lemma1iiiInv: return MoveKind::Lemma1iii;
        case MoveKind::Abab: return MoveKind::AbabInv;
        case MoveKind::AbabInv: return MoveKind::Abab;
        case MoveKind::Shift: return MoveKind::ShiftInv;
        case MoveKind::ShiftInv: return MoveKind::Shift;
        case MoveKind::Permute: return MoveKind::Permute;
        case MoveKind::Invert: return MoveKind::Invert;
    }
    throw DomainError("invalid move kind");
}

std::string to_string(const MoveInstance& m, const Alphabet& alphabet) {
    std::ostringstream os;
    os << to_string(m.kind) << " @ ";
    switch (m.kind) {
        case MoveKind::Shift:
        case MoveKind::ShiftInv:
        case MoveKind::Permute:
        case MoveKind::Invert: os << 'c' << m.locus.at(0); break;
        case MoveKind::H1Inv: os << 'c' << m.locus.at(0) << '.' << m.locus.at(1); break;
        case MoveKind::H2Inv:
        case MoveKind::AbabInv:
            os << 'c' << m.locus.at(0) << '.' << m.locus.at(1) << ",c" << m.locus.at(2)
               << '.' << m.locus.at(3);
            break;
        default:
            for (size_t i = 0; i < m.locus.size(); ++i) {
                if (i) os << ',';
                os << m.locus[i];
            }
            break;
    }
    for (Symbol s : m.payload) os << " sym=" << alphabet.name(s);
    return os.str();
}

namespace {

struct Flat {
    std::vector<LetterIdx> letters;
    std::vector<int> component;  // of each flat position
};

Flat flatten(const Phrase& p) {
    Flat f;
    f.letters = p.flat();
    f.component.reserve(f.letters.size());
    for (int c = 0; c < p.component_count(); ++c)
        for (size_t i = 0; i < p.component(c).size(); ++i) f.component.push_back(c);
    return f;
}

bool adjacent_pair(const Flat& f, int q) {
    return q >= 0 && q + 1 < static_cast<int>(f.letters.size()) &&
           f.component[static_cast<size_t>(q)] == f.component[static_cast<size_t>(q + 1)];
}

[[noreturn]] void not_applicable(const MoveInstance& m, const std::string& why) {
    throw MoveError(std::string(to_string(m.kind)) + " not applicable: " + why);
}

// Removes the given letters (all their occurrences), keeping the component
// structure.
Phrase drop_letters(const Phrase& p, const std::vector<LetterIdx>& letters) {
    std::vector<bool> drop(static_cast<size_t>(p.letter_count()), false);
    for (LetterIdx l : letters) drop[static_cast<size_t>(l)] = true;
    std::vector<LetterIdx> remap(static_cast<size_t>(p.letter_count()), -1);
    std::vector<std::string> names;
    std::vector<Symbol> proj;
    for (LetterIdx l = 0; l < p.letter_count(); ++l) {
        if (drop[static_cast<size_t>(l)]) continue;
        remap[static_cast<size_t>(l)] = static_cast<LetterIdx>(names.size());
        names.push_back(p.letter_name(l));
        proj.push_back(p.proj(l));
    }
    std::vector<std::vector<LetterIdx>> comps;
    comps.reserve(static_cast<size_t>(p.component_count()));
    for (const auto& comp : p.components()) {
        std::vector<LetterIdx> kept;
        for (LetterIdx l : comp)
            if (!drop[static_cast<size_t>(l)]) kept.push_back(remap[static_cast<size_t>(l)]);
        comps.push_back(std::move(kept));
    }
    return Phrase(p.alphabet_ptr(), std::move(names), std::move(proj), std::move(comps));
}

// Swaps the occurrences at (q, q+1) for each q; pairs must be disjoint and
// inside a component.
Phrase swap_pairs(const Phrase& p, std::array<int, 3> pairs) {
    auto comps = p.components();
    for (int q : pairs) {
        auto [c, o] = p.locate(q);
        auto& comp = comps[static_cast<size_t>(c)];
        if (o + 1 >= static_cast<int>(comp.size()))
            throw MoveError("pair crosses a component boundary");
        std::swap(comp[static_cast<size_t>(o)], comp[static_cast<size_t>(o + 1)]);
    }
    return Phrase(p.alphabet_ptr(), p.letter_names(), p.projections(), std::move(comps));
}

// k distinct letter names of the form Y<i> not used in the phrase.
std::vector<std::string> fresh_names(const Phrase& p, int k) {
    std::vector<std::string> out;
    for (int i = 1; static_cast<int>(out.size()) < k; ++i) {
        std::string candidate = "Y" + std::to_string(i);
        bool used = false;
        for (const auto& n : p.letter_names())
            if (n == candidate) used = true;
        if (!used) out.push_back(std::move(candidate));
    }
    return out;
}

struct Gap {
    int c = 0;
    int o = 0;
};

bool gap_valid(const Phrase& p, Gap g) {
    return g.c >= 0 && g.c < p.component_count() && g.o >= 0 &&
           g.o <= static_cast<int>(p.component(g.c).size());
}

bool gap_leq(Gap a, Gap b) { return a.c < b.c || (a.c == b.c && a.o <= b.o); }

// Inserts two blocks of fresh letters, later gap first so offsets stay valid.
Phrase insert_two_blocks(const Phrase& p, Gap g1, const std::vector<LetterIdx>& block1,
                         Gap g2, const std::vector<LetterIdx>& block2,
                         std::vector<std::string> names, std::vector<Symbol> proj) {
    auto comps = p.components();
    auto insert = [&comps](Gap g, const std::vector<LetterIdx>& block) {
        auto& comp = comps[static_cast<size_t>(g.c)];
        comp.insert(comp.begin() + g.o, block.begin(), block.end());
    };
    insert(g2, block2);
    insert(g1, block1);
    std::vector<std::string> all_names = p.letter_names();
    std::vector<Symbol> all_proj = p.projections();
    all_names.insert(all_names.end(), names.begin(), names.end());
    all_proj.insert(all_proj.end(), proj.begin(), proj.end());
    return Phrase(p.alphabet_ptr(), std::move(all_names), std::move(all_proj),
                  std::move(comps));
}

// Letters (A, B, C) in the role convention of the forward H3 / Lemma1
// statements, or nullopt when the pattern does not match.
struct TripleRoles {
    LetterIdx a, b, c;
};

std::optional<TripleRoles> match_swap_pattern(const Flat& f, MoveKind kind, int p1,
                                              int p2, int p3) {
    if (!(p1 + 1 < p2 && p2 + 1 < p3) || p1 < 0 ||
        p3 + 1 >= static_cast<int>(f.letters.size()))
        return std::nullopt;
    if (!adjacent_pair(f, p1) || !adjacent_pair(f, p2) || !adjacent_pair(f, p3))
        return std::nullopt;
    auto L = [&f](int q) { return f.letters[static_cast<size_t>(q)]; };
    LetterIdx a = -1, b = -1, c = -1;
    bool ok = false;
    switch (kind) {
        case MoveKind::H3:  // xAByACzBCt
            a = L(p1); b = L(p1 + 1); c = L(p2 + 1);
            ok = L(p2) == a && L(p3) == b && L(p3 + 1) == c;
            break;
        case MoveKind::H3Inv:  // xBAyCAzCBt
            b = L(p1); a = L(p1 + 1); c = L(p2);
            ok = L(p2 + 1) == a && L(p3) == c && L(p3 + 1) == b;
            break;
        case MoveKind::Lemma1i:  // xAByCAzBCt
            a = L(p1); b = L(p1 + 1); c = L(p2);
            ok = L(p2 + 1) == a && L(p3) == b && L(p3 + 1) == c;
            break;
        case MoveKind::Lemma1iInv:  // xBAyACzCBt
            b = L(p1); a = L(p1 + 1); c = L(p2 + 1);
            ok = L(p2) == a && L(p3) == c && L(p3 + 1) == b;
            break;
        case MoveKind::Lemma1ii:  // xAByCAzCBt
            a = L(p1); b = L(p1 + 1); c = L(p2);
            ok = L(p2 + 1) == a && L(p3) == c && L(p3 + 1) == b;
            break;
        case MoveKind::Lemma1iiInv:  // xBAyACzBCt
            b = L(p1); a = L(p1 + 1); c = L(p2 + 1);
            ok = L(p2) == a && L(p3) == b && L(p3 + 1) == c;
            break;
        case MoveKind::Lemma1iii:  // xAByACzCBt
            a = L(p1); b = L(p1 + 1); c = L(p2 + 1);
            ok = L(p2) == a && L(p3) == c && L(p3 + 1) == b;
            break;
        case MoveKind::Lemma1iiiInv:  // xBAyCAzBCt
            b = L(p1); a = L(p1 + 1); c = L(p2);
            ok = L(p2 + 1) == a && L(p3) == b && L(p3 + 1) == c;
            break;
        default: return std::nullopt;
    }
    if (!ok || a == b || a == c || b == c) return std::nullopt;
    return TripleRoles{a, b, c};
}

// The triple required by the move's side condition.
Triple required_triple(const Phrase& p, MoveKind kind, TripleRoles r) {
    const Alphabet& al = p.alphabet();
    Triple t{p.proj(r.a), p.proj(r.b), p.proj(r.c)};
    switch (kind) {
        case MoveKind::H3:
        case MoveKind::H3Inv: break;
        case MoveKind::Lemma1i:
        case MoveKind::Lemma1iInv: t.b = al.tau(t.b); break;
        case MoveKind::Lemma1ii:
        case MoveKind::Lemma1iiInv:
            t.a = al.tau(t.a);
            t.b = al.tau(t.b);
            break;
        case MoveKind::Lemma1iii:
        case MoveKind::Lemma1iiiInv: t.a = al.tau(t.a); break;
        default: throw DomainError("not a pair-swapping move");
    }
    return t;
}

bool is_swap_kind(MoveKind k) {
    switch (k) {
        case MoveKind::H3:
        case MoveKind::H3Inv:
        case MoveKind::Lemma1i:
        case MoveKind::Lemma1iInv:
        case MoveKind::Lemma1ii:
        case MoveKind::Lemma1iiInv:
        case MoveKind::Lemma1iii:
        case MoveKind::Lemma1iiiInv: return true;
        default: return false;
    }
}

}  // namespace

Phrase nu_shift(const Phrase& p, int component) {
    if (component < 0 || component >= p.component_count())
        throw DomainError("component index out of range");
    const auto& comp = p.component(component);
    if (comp.empty()) throw DomainError("shift of an empty component");
    const LetterIdx a = comp.front();
    const int count = static_cast<int>(std::count(comp.begin(), comp.end(), a));
    auto comps = p.components();
    auto& target = comps[static_cast<size_t>(component)];
    target.erase(target.begin());
    target.push_back(a);
    Phrase out(p.alphabet_ptr(), p.letter_names(), p.projections(), std::move(comps));
    if (count == 2) out = out.with_projection(a, p.alphabet().nu(p.proj(a)));
    return out;
}

Phrase nu_shift_back(const Phrase& p, int component) {
    if (component < 0 || component >= p.component_count())
        throw DomainError("component index out of range");
    const auto& comp = p.component(component);
    if (comp.empty()) throw DomainError("shift of an empty component");
    const LetterIdx a = comp.back();
    const int count = static_cast<int>(std::count(comp.begin(), comp.end(), a));
    auto comps = p.components();
    auto& target = comps[static_cast<size_t>(component)];
    target.pop_back();
    target.insert(target.begin(), a);
    Phrase out(p.alphabet_ptr(), p.letter_names(), p.projections(), std::move(comps));
    if (count == 2) out = out.with_projection(a, p.alphabet().nu(p.proj(a)));
    return out;
}

Phrase nu_permutation(const Phrase& p, int i) {
    if (i < 0 || i + 1 >= p.component_count())
        throw DomainError("permutation index out of range");
    const auto& u = p.component(i);
    const auto& v = p.component(i + 1);
    Phrase out = p;
    for (LetterIdx l = 0; l < p.letter_count(); ++l) {
        const bool in_u = std::find(u.begin(), u.end(), l) != u.end();
        const bool in_v = std::find(v.begin(), v.end(), l) != v.end();
        if (in_u && in_v) out = out.with_projection(l, p.alphabet().nu(p.proj(l)));
    }
    auto comps = out.components();
    std::swap(comps[static_cast<size_t>(i)], comps[static_cast<size_t>(i + 1)]);
    return Phrase(p.alphabet_ptr(), out.letter_names(), out.projections(), std::move(comps));
}

Phrase nu_inversion(const Phrase& p, int i) {
    if (i < 0 || i >= p.component_count())
        throw DomainError("inversion index out of range");
    int begin = 0;
    for (int c = 0; c < i; ++c) begin += static_cast<int>(p.component(c).size());
    const int end = begin + static_cast<int>(p.component(i).size());
    Phrase out = project_word(p, SubwordRange{begin, end});
    auto comps = out.components();
    std::reverse(comps[static_cast<size_t>(i)].begin(), comps[static_cast<size_t>(i)].end());
    return Phrase(p.alphabet_ptr(), out.letter_names(), out.projections(), std::move(comps));
}

Phrase apply_lemma1(const Phrase& p, Lemma1Variant v, std::array<int, 3> pairs) {
    MoveKind kind = v == Lemma1Variant::I    ? MoveKind::Lemma1i
                    : v == Lemma1Variant::II ? MoveKind::Lemma1ii
                                             : MoveKind::Lemma1iii;
    return apply_move(p, MoveInstance{kind, {pairs[0], pairs[1], pairs[2]}, {}});
}

Phrase apply_abab(const Phrase& p, int p1, int p2) {
    return apply_move(p, MoveInstance{MoveKind::Abab, {p1, p2}, {}});
}

Phrase apply_move(const Phrase& p, const MoveInstance& m) {
    const Alphabet& al = p.alphabet();
    if (is_swap_kind(m.kind)) {
        if (m.locus.size() != 3) not_applicable(m, "expected three pair positions");
        const Flat f = flatten(p);
        auto roles = match_swap_pattern(f, m.kind, m.locus[0], m.locus[1], m.locus[2]);
        if (!roles) not_applicable(m, "letter pattern mismatch");
        const Triple need = required_triple(p, m.kind, *roles);
        if (!al.has_triple(need.a, need.b, need.c)) {
            std::ostringstream os;
            os << "required triple (" << al.name(need.a) << ',' << al.name(need.b) << ','
               << al.name(need.c) << ") not in S";
            not_applicable(m, os.str());
        }
        return swap_pairs(p, {m.locus[0], m.locus[1], m.locus[2]});
    }
    switch (m.kind) {
        case MoveKind::H1: {
            if (m.locus.size() != 1) not_applicable(m, "expected one position");
            const Flat f = flatten(p);
            const int q = m.locus[0];
            if (!adjacent_pair(f, q)) not_applicable(m, "no adjacent pair here");
            if (f.letters[static_cast<size_t>(q)] != f.letters[static_cast<size_t>(q + 1)])
                not_applicable(m, "occurrences are of different letters");
            return drop_letters(p, {f.letters[static_cast<size_t>(q)]});
        }
        case MoveKind::H2:
        case MoveKind::Abab: {
            if (m.locus.size() != 2) not_applicable(m, "expected two positions");
            const Flat f = flatten(p);
            const int q1 = m.locus[0], q2 = m.locus[1];
            if (q1 < 0 || q2 < q1 + 2) not_applicable(m, "pairs overlap");
            if (!adjacent_pair(f, q1) || !adjacent_pair(f, q2))
                not_applicable(m, "pair crosses a component boundary");
            const LetterIdx a = f.letters[static_cast<size_t>(q1)];
            const LetterIdx b = f.letters[static_cast<size_t>(q1 + 1)];
            const LetterIdx x = f.letters[static_cast<size_t>(q2)];
            const LetterIdx y = f.letters[static_cast<size_t>(q2 + 1)];
            if (m.kind == MoveKind::H2) {
                if (a == b || x != b || y != a) not_applicable(m, "pattern is not xAByBAz");
            } else {
                if (a == b || x != a || y != b) not_applicable(m, "pattern is not xAByABz");
            }
            if (al.tau(p.proj(a)) != p.proj(b)) not_applicable(m, "tau(|A|) = |B| fails");
            if (m.kind == MoveKind::Abab) {
                for (Symbol s = 0; s < al.size(); ++s) {
                    bool met = false;
                    for (const Triple& t : al.triples())
                        if (t.b == s && t.c == s) met = true;
                    if (!met)
                        not_applicable(m, "S misses alpha x {" + al.name(s) + "} x {" +
                                              al.name(s) + "}");
                }
            }
            return drop_letters(p, {a, b});
        }
        case MoveKind::H1Inv: {
            if (m.locus.size() != 2 || m.payload.size() != 1)
                not_applicable(m, "expected a gap and one symbol");
            Gap g{m.locus[0], m.locus[1]};
            if (!gap_valid(p, g)) not_applicable(m, "gap out of range");
            if (m.payload[0] < 0 || m.payload[0] >= al.size())
                not_applicable(m, "symbol outside the alphabet");
            const LetterIdx fresh = p.letter_count();
            return insert_two_blocks(p, g, {fresh, fresh}, g, {}, fresh_names(p, 1),
                                     {m.payload[0]});
        }
        case MoveKind::H2Inv:
        case MoveKind::AbabInv: {
            if (m.locus.size() != 4 || m.payload.size() != 1)
                not_applicable(m, "expected two gaps and one symbol");
            Gap g1{m.locus[0], m.locus[1]}, g2{m.locus[2], m.locus[3]};
            if (!gap_valid(p, g1) || !gap_valid(p, g2)) not_applicable(m, "gap out of range");
            if (!gap_leq(g1, g2)) not_applicable(m, "gaps out of order");
            if (m.payload[0] < 0 || m.payload[0] >= al.size())
                not_applicable(m, "symbol outside the alphabet");
            const Symbol sa = m.payload[0];
            const LetterIdx a = p.letter_count();
            const LetterIdx b = a + 1;
            std::vector<LetterIdx> block2 = m.kind == MoveKind::H2Inv
                                                ? std::vector<LetterIdx>{b, a}
                                                : std::vector<LetterIdx>{a, b};
            return insert_two_blocks(p, g1, {a, b}, g2, block2, fresh_names(p, 2),
                                     {sa, al.tau(sa)});
        }
        case MoveKind::Shift:
            if (m.locus.size() != 1) not_applicable(m, "expected a component index");
            return nu_shift(p, m.locus[0]);
        case MoveKind::ShiftInv:
            if (m.locus.size() != 1) not_applicable(m, "expected a component index");
            return nu_shift_back(p, m.locus[0]);
        case MoveKind::Permute:
            if (m.locus.size() != 1) not_applicable(m, "expected a component index");
            return nu_permutation(p, m.locus[0]);
        case MoveKind::Invert:
            if (m.locus.size() != 1) not_applicable(m, "expected a component index");
            return nu_inversion(p, m.locus[0]);
        default: break;
    }
    throw DomainError("invalid move kind");
}

namespace {

// Gap in the phrase after removing the flat positions `removed` that lands
// where original flat position q was.
Gap gap_after_removal(const Phrase& p, const std::vector<int>& removed, int q) {
    auto [c, o] = p.locate(q);
    int shift = 0;
    for (int r : removed) {
        auto [rc, ro] = p.locate(r);
        if (rc == c && ro < o) ++shift;
    }
    return Gap{c, o - shift};
}

int gap_to_flat(const Phrase& p, Gap g) {
    int pos = g.o;
    for (int i = 0; i < g.c; ++i) pos += static_cast<int>(p.component(i).size());
    return pos;
}

}  // namespace

MoveInstance inverse_move(const Phrase& p, const MoveInstance& m) {
    switch (m.kind) {
        case MoveKind::H1: {
            const int q = m.locus.at(0);
            const auto flat = p.flat();
            const LetterIdx a = flat.at(static_cast<size_t>(q));
            Gap g = gap_after_removal(p, {q, q + 1}, q);
            return MoveInstance{MoveKind::H1Inv, {g.c, g.o}, {p.proj(a)}};
        }
        case MoveKind::H1Inv: {
            Gap g{m.locus.at(0), m.locus.at(1)};
            return MoveInstance{MoveKind::H1, {gap_to_flat(p, g)}, {}};
        }
        case MoveKind::H2:
        case MoveKind::Abab: {
            const int q1 = m.locus.at(0), q2 = m.locus.at(1);
            const auto flat = p.flat();
            const LetterIdx a = flat.at(static_cast<size_t>(q1));
            std::vector<int> removed{q1, q1 + 1, q2, q2 + 1};
            Gap g1 = gap_after_removal(p, removed, q1);
            Gap g2 = gap_after_removal(p, removed, q2);
            return MoveInstance{inverse_kind(m.kind), {g1.c, g1.o, g2.c, g2.o},
                                {p.proj(a)}};
        }
        case MoveKind::H2Inv:
        case MoveKind::AbabInv: {
            Gap g1{m.locus.at(0), m.locus.at(1)}, g2{m.locus.at(2), m.locus.at(3)};
            return MoveInstance{inverse_kind(m.kind),
                                {gap_to_flat(p, g1), gap_to_flat(p, g2) + 2},
                                {}};
        }
        default:
            // Pair swaps are undone at the same locus; shift/permute/invert
            // flip to their inverse kind at the same component.
            return MoveInstance{inverse_kind(m.kind), m.locus, m.payload};
    }
}

std::vector<MoveInstance> enumerate_moves(const Phrase& p, bool include_inverses,
                                          int growth_budget) {
    std::vector<MoveInstance> out;
    const Flat f = flatten(p);
    const int n = static_cast<int>(f.letters.size());
    const Alphabet& al = p.alphabet();
    auto letter = [&f](int q) { return f.letters[static_cast<size_t>(q)]; };

    for (int q = 0; q + 1 < n; ++q)
        if (adjacent_pair(f, q) && letter(q) == letter(q + 1))
            out.push_back(MoveInstance{MoveKind::H1, {q}, {}});

    for (int q1 = 0; q1 + 1 < n; ++q1) {
        if (!adjacent_pair(f, q1) || letter(q1) == letter(q1 + 1)) continue;
        if (al.tau(p.proj(letter(q1))) != p.proj(letter(q1 + 1))) continue;
        for (int q2 = q1 + 2; q2 + 1 < n; ++q2) {
            if (!adjacent_pair(f, q2)) continue;
            if (letter(q2) == letter(q1 + 1) && letter(q2 + 1) == letter(q1))
                out.push_back(MoveInstance{MoveKind::H2, {q1, q2}, {}});
        }
    }

    auto try_swap = [&](MoveKind kind, int p1, int p2, int p3) {
        auto roles = match_swap_pattern(f, kind, p1, p2, p3);
        if (!roles) return;
        const Triple need = required_triple(p, kind, *roles);
        if (!al.has_triple(need.a, need.b, need.c)) return;
        out.push_back(MoveInstance{kind, {p1, p2, p3}, {}});
    };
    for (int p1 = 0; p1 + 1 < n; ++p1) {
        if (!adjacent_pair(f, p1)) continue;
        for (int p2 = p1 + 2; p2 + 1 < n; ++p2) {
            if (!adjacent_pair(f, p2)) continue;
            for (int p3 = p2 + 2; p3 + 1 < n; ++p3) {
                try_swap(MoveKind::H3, p1, p2, p3);
                if (include_inverses) try_swap(MoveKind::H3Inv, p1, p2, p3);
            }
        }
    }

    for (int c = 0; c < p.component_count(); ++c)
        if (!p.component(c).empty()) out.push_back(MoveInstance{MoveKind::Shift, {c}, {}});
    if (include_inverses)
        for (int c = 0; c < p.component_count(); ++c)
            if (!p.component(c).empty())
                out.push_back(MoveInstance{MoveKind::ShiftInv, {c}, {}});
    for (int c = 0; c + 1 < p.component_count(); ++c)
        out.push_back(MoveInstance{MoveKind::Permute, {c}, {}});
    for (int c = 0; c < p.component_count(); ++c)
        out.push_back(MoveInstance{MoveKind::Invert, {c}, {}});

    if (include_inverses && growth_budget >= 1) {
        for (int c = 0; c < p.component_count(); ++c)
            for (int o = 0; o <= static_cast<int>(p.component(c).size()); ++o)
                for (Symbol s = 0; s < al.size(); ++s)
                    out.push_back(MoveInstance{MoveKind::H1Inv, {c, o}, {s}});
    }
    if (include_inverses && growth_budget >= 2) {
        std::vector<Gap> gaps;
        for (int c = 0; c < p.component_count(); ++c)
            for (int o = 0; o <= static_cast<int>(p.component(c).size()); ++o)
                gaps.push_back(Gap{c, o});
        for (size_t i = 0; i < gaps.size(); ++i)
            for (size_t j = i; j < gaps.size(); ++j)
                for (Symbol s = 0; s < al.size(); ++s)
                    out.push_back(
                        MoveInstance{MoveKind::H2Inv,
                                     {gaps[i].c, gaps[i].o, gaps[j].c, gaps[j].o},
                                     {s}});
    }
    return out;
}

}  // namespace nanoword

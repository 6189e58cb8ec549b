#include "nanoword/homotopy.hpp"

#include "nanoword/error.hpp"

#include <algorithm>

namespace nanoword {

const char* to_string(OrbitClass c) {
    switch (c) {
        case OrbitClass::Star: return "star";
        case OrbitClass::Zero: return "0";
        case OrbitClass::One: return "1";
        case OrbitClass::Two: return "2";
        case OrbitClass::G: return "G";
    }
    return "?";
}

OrbitClass orbit_class_from_string(std::string_view s) {
    if (s == "star" || s == "*") return OrbitClass::Star;
    if (s == "0" || s == "zero") return OrbitClass::Zero;
    if (s == "1" || s == "one") return OrbitClass::One;
    if (s == "2" || s == "two") return OrbitClass::Two;
    if (s == "G" || s == "g") return OrbitClass::G;
    throw DomainError("unknown functor target '" + std::string(s) + "'");
}

TripleSet make_knotlike(const Alphabet& a) {
    if (auto w = a.commuting_witness())
        throw DomainError("tau and nu do not commute at symbol " + a.name(*w));
    TripleSet out;
    for (Symbol s = 0; s < a.size(); ++s) {
        const Symbol nt = a.nu_tau(s);
        out.insert(Triple{s, s, s});
        out.insert(Triple{s, s, nt});
        out.insert(Triple{s, nt, nt});
    }
    return out;
}

TripleSet make_diagonal(const Alphabet& a) {
    TripleSet out;
    for (Symbol s = 0; s < a.size(); ++s) out.insert(Triple{s, s, s});
    return out;
}

bool is_knotlike(const Alphabet& a) {
    if (!a.involutions_commute()) return false;
    return a.triples() == make_knotlike(a);
}

namespace {

OrbitClass classify(const Alphabet& a, Symbol s) {
    const bool tau_fixed = a.tau(s) == s;
    const bool nu_fixed = a.nu(s) == s;
    if (tau_fixed && nu_fixed) return OrbitClass::G;
    if (tau_fixed) return OrbitClass::Two;
    if (nu_fixed) return OrbitClass::One;
    return a.tau(s) == a.nu(s) ? OrbitClass::Zero : OrbitClass::Star;
}

// Class of s under the equivalence generated by tau and nu.  With commuting
// involutions this is exactly {s, tau s, nu s, tau nu s}.
std::set<Symbol> tau_nu_class(const Alphabet& a, Symbol s) {
    return {s, a.tau(s), a.nu(s), a.tau_nu(s)};
}

}  // namespace

OrbitDecomposition decompose_orbits(const Alphabet& a) {
    if (auto w = a.commuting_witness())
        throw DomainError("tau and nu do not commute at symbol " + a.name(*w));
    std::vector<Symbol> reps;
    std::vector<bool> seen(static_cast<size_t>(a.size()), false);
    for (Symbol s = 0; s < a.size(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        reps.push_back(s);
        for (Symbol t : tau_nu_class(a, s)) seen[static_cast<size_t>(t)] = true;
    }
    return decompose_orbits(a, std::move(reps));
}

OrbitDecomposition decompose_orbits(const Alphabet& a, std::vector<Symbol> representatives) {
    if (auto w = a.commuting_witness())
        throw DomainError("tau and nu do not commute at symbol " + a.name(*w));
    std::vector<int> owner(static_cast<size_t>(a.size()), -1);
    for (size_t i = 0; i < representatives.size(); ++i) {
        Symbol r = representatives[i];
        if (r < 0 || r >= a.size()) throw DomainError("representative outside the alphabet");
        for (Symbol t : tau_nu_class(a, r)) {
            if (owner[static_cast<size_t>(t)] >= 0)
                throw DomainError("representatives overlap at symbol " + a.name(t));
            owner[static_cast<size_t>(t)] = static_cast<int>(i);
        }
    }
    for (Symbol s = 0; s < a.size(); ++s)
        if (owner[static_cast<size_t>(s)] < 0)
            throw DomainError("no representative covers symbol " + a.name(s));

    OrbitDecomposition out;
    out.representatives = std::move(representatives);
    for (Symbol r : out.representatives) {
        const OrbitClass c = classify(a, r);
        out.classes[r] = c;
        auto& pool = out.eta[c];
        for (Symbol t : tau_nu_class(a, r)) pool.insert(t);
    }
    return out;
}

namespace {

AlphabetPtr target_alphabet(OrbitClass c) {
    switch (c) {
        case OrbitClass::Star: return Alphabet::star();
        case OrbitClass::Zero: return Alphabet::alpha0();
        case OrbitClass::One: return Alphabet::alpha1();
        case OrbitClass::Two: return Alphabet::alpha2();
        case OrbitClass::G: return Alphabet::alphaG();
    }
    throw DomainError("invalid functor target");
}

// p_diamond on a surviving symbol, given the representative of its class.
// The star case follows the equivariant assignment used by the functor
// theorem's proof (p.tau = tau*.p and p.nu = nu*.p): the representative
// goes to a+ and its tau/nu/tau.nu images to the matching corners.
Symbol project_symbol(const Alphabet& a, OrbitClass c, Symbol rep, Symbol s) {
    const Alphabet& target = *target_alphabet(c);
    auto name = [&target](const char* n) { return *target.find(n); };
    switch (c) {
        case OrbitClass::Star:
            if (s == rep) return name("a+");
            if (s == a.nu(rep)) return name("b+");
            if (s == a.tau_nu(rep)) return name("a-");
            if (s == a.tau(rep)) return name("b-");
            break;
        case OrbitClass::Zero:
            if (s == rep) return name("a");
            if (s == a.tau(rep)) return name("b");
            break;
        case OrbitClass::One:
            if (s == rep) return name("1");
            if (s == a.tau(rep)) return name("-1");
            break;
        case OrbitClass::Two:
            if (s == rep) return name("c");
            if (s == a.nu(rep)) return name("d");
            break;
        case OrbitClass::G:
            if (s == rep) return name("a");
            break;
    }
    throw DomainError("symbol " + a.name(s) + " not reachable from its representative");
}

// Removes the designated letters (both occurrences) and reindexes,
// preserving component count.
Phrase remove_letters(const Phrase& p, const std::vector<bool>& drop,
                      std::vector<Symbol> new_proj, AlphabetPtr target) {
    std::vector<LetterIdx> remap(static_cast<size_t>(p.letter_count()), -1);
    std::vector<std::string> names;
    std::vector<Symbol> proj;
    for (LetterIdx l = 0; l < p.letter_count(); ++l) {
        if (drop[static_cast<size_t>(l)]) continue;
        remap[static_cast<size_t>(l)] = static_cast<LetterIdx>(names.size());
        names.push_back(p.letter_name(l));
        proj.push_back(new_proj[static_cast<size_t>(l)]);
    }
    std::vector<std::vector<LetterIdx>> comps;
    comps.reserve(static_cast<size_t>(p.component_count()));
    for (const auto& comp : p.components()) {
        std::vector<LetterIdx> kept;
        for (LetterIdx l : comp)
            if (!drop[static_cast<size_t>(l)]) kept.push_back(remap[static_cast<size_t>(l)]);
        comps.push_back(std::move(kept));
    }
    return Phrase(std::move(target), std::move(names), std::move(proj), std::move(comps));
}

}  // namespace

Phrase functor_apply(const Phrase& p, OrbitClass target) {
    return functor_apply(p, target, decompose_orbits(p.alphabet()));
}

Phrase functor_apply(const Phrase& p, OrbitClass target, const OrbitDecomposition& dec) {
    const Alphabet& a = p.alphabet();
    auto eta_it = dec.eta.find(target);
    const std::set<Symbol> empty;
    const std::set<Symbol>& eta = eta_it == dec.eta.end() ? empty : eta_it->second;

    // Symbol -> representative of its class, for symbols in eta.
    std::map<Symbol, Symbol> rep_of;
    for (const auto& [rep, cls] : dec.classes) {
        if (cls != target) continue;
        rep_of[rep] = rep;
        rep_of[a.tau(rep)] = rep;
        rep_of[a.nu(rep)] = rep;
        rep_of[a.tau_nu(rep)] = rep;
    }

    std::vector<bool> drop(static_cast<size_t>(p.letter_count()), false);
    std::vector<Symbol> new_proj(static_cast<size_t>(p.letter_count()), 0);
    for (LetterIdx l = 0; l < p.letter_count(); ++l) {
        const Symbol s = p.proj(l);
        if (!eta.count(s)) {
            drop[static_cast<size_t>(l)] = true;
            continue;
        }
        new_proj[static_cast<size_t>(l)] = project_symbol(a, target, rep_of.at(s), s);
    }
    return remove_letters(p, drop, std::move(new_proj), target_alphabet(target));
}

std::vector<Symbol> tau_representatives(const Alphabet& a) {
    std::vector<Symbol> out;
    for (Symbol s = 0; s < a.size(); ++s)
        if (a.tau(s) >= s) out.push_back(s);
    return out;
}

bool free_tau_orbit(const Alphabet& a, Symbol s) { return a.tau(s) != s; }

namespace {

void require_crs_subset(const Alphabet& a, const std::set<Symbol>& L) {
    const auto crs = tau_representatives(a);
    for (Symbol s : L) {
        if (s < 0 || s >= a.size())
            throw DomainError("L references a symbol outside the alphabet");
        if (std::find(crs.begin(), crs.end(), s) == crs.end())
            throw DomainError("L is not a subset of crs(alpha/tau): " + a.name(s));
    }
}

}  // namespace

int sign_of_symbol(const Alphabet& a, Symbol s, const std::set<Symbol>& L) {
    require_crs_subset(a, L);
    if (!free_tau_orbit(a, s)) return 0;
    if (L.count(s)) return 1;
    if (L.count(a.tau(s))) return -1;  // s lies in tau(L)
    return 0;
}

int sign_of(const Phrase& p, LetterIdx l, const std::set<Symbol>& L) {
    return sign_of_symbol(p.alphabet(), p.proj(l), L);
}

Phrase u_l_project(const Phrase& p, const std::set<Symbol>& L) {
    const Alphabet& a = p.alphabet();
    require_crs_subset(a, L);
    const auto target = Alphabet::alpha1();
    const Symbol plus = *target->find("1");
    const Symbol minus = *target->find("-1");
    std::vector<bool> drop(static_cast<size_t>(p.letter_count()), false);
    std::vector<Symbol> new_proj(static_cast<size_t>(p.letter_count()), 0);
    for (LetterIdx l = 0; l < p.letter_count(); ++l) {
        switch (sign_of_symbol(a, p.proj(l), L)) {
            case 0: drop[static_cast<size_t>(l)] = true; break;
            case 1: new_proj[static_cast<size_t>(l)] = plus; break;
            case -1: new_proj[static_cast<size_t>(l)] = minus; break;
        }
    }
    return remove_letters(p, drop, std::move(new_proj), target);
}

Phrase relabel_alpha0_to_alpha1(const Phrase& p) {
    if (!(p.alphabet() == *Alphabet::alpha0()))
        throw DomainError("relabeling requires a phrase over alpha0");
    // a -> 1, b -> -1.
    return p.relabeled(Alphabet::alpha1(), {0, 1});
}

Phrase relabel_alpha1_to_alpha0(const Phrase& p) {
    if (!(p.alphabet() == *Alphabet::alpha1()))
        throw DomainError("relabeling requires a phrase over alpha1");
    return p.relabeled(Alphabet::alpha0(), {0, 1});
}

}  // namespace nanoword

#pragma once

#include "nanoword/phrase.hpp"

#include <map>
#include <set>
#include <vector>

namespace nanoword {

/// The five homotopy categories a symbol class can project onto.
enum class OrbitClass { Star, Zero, One, Two, G };

const char* to_string(OrbitClass c);
/// Accepts "star", "0", "1", "2", "G" (and "zero"/"one"/"two").
OrbitClass orbit_class_from_string(std::string_view s);

/// Decomposition of an alphabet under the equivalence generated by
/// a ~ tau(a), a ~ nu(a), with one representative per class and the
/// class-wise symbol pools eta.
struct OrbitDecomposition {
    std::vector<Symbol> representatives;        // the complete system L
    std::map<Symbol, OrbitClass> classes;       // representative -> class
    std::map<OrbitClass, std::set<Symbol>> eta; // eta_diamond per class
};

/// True iff tau and nu commute and the triple set equals
/// { (a,a,a), (a,a,nt(a)), (a,nt(a),nt(a)) | a }, nt = nu.tau, exactly.
bool is_knotlike(const Alphabet& a);

/// The knotlike triple set of (alphabet, tau, nu); throws on non-commuting
/// involutions.
TripleSet make_knotlike(const Alphabet& a);

/// The diagonal triple set { (a,a,a) | a }.
TripleSet make_diagonal(const Alphabet& a);

/// Representatives chosen as the least element of each class in declaration
/// order.  Requires commuting involutions.
OrbitDecomposition decompose_orbits(const Alphabet& a);
/// Same with an explicit representative system (validated: exactly one
/// declared symbol per class).
OrbitDecomposition decompose_orbits(const Alphabet& a, std::vector<Symbol> representatives);

/// F_diamond: deletes letters whose projection lies outside eta_diamond and
/// re-projects survivors onto the built-in target alphabet.  Component count
/// is preserved.  Requires commuting involutions.
Phrase functor_apply(const Phrase& p, OrbitClass target);
Phrase functor_apply(const Phrase& p, OrbitClass target, const OrbitDecomposition& dec);

/// crs(alpha/tau): least element of each tau-orbit in declaration order.
std::vector<Symbol> tau_representatives(const Alphabet& a);
/// True when the tau-orbit of s has two elements.
bool free_tau_orbit(const Alphabet& a, Symbol s);

/// Sign of a projection symbol with respect to L, a subset of crs(alpha/tau):
/// +1 on L with free orbit, -1 on tau(L) with free orbit, 0 otherwise.
/// Throws when L is not a subset of crs(alpha/tau).
int sign_of_symbol(const Alphabet& a, Symbol s, const std::set<Symbol>& L);
int sign_of(const Phrase& p, LetterIdx l, const std::set<Symbol>& L);

/// U_L: deletes sign-0 letters and projects survivors to +-1; the result is
/// a phrase over alpha1.
Phrase u_l_project(const Phrase& p, const std::set<Symbol>& L);

/// The bijection f: alpha0 -> alpha1 (a -> 1, b -> -1) applied letterwise,
/// and its inverse.
Phrase relabel_alpha0_to_alpha1(const Phrase& p);
Phrase relabel_alpha1_to_alpha0(const Phrase& p);

}  // namespace nanoword

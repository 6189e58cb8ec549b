#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nanoword {

/// Index of a symbol inside an Alphabet, in declaration order.  Declaration
/// order is the canonical total order used wherever ties must be broken.
using Symbol = int;

struct Triple {
    Symbol a = 0;
    Symbol b = 0;
    Symbol c = 0;
    auto operator<=>(const Triple&) const = default;
};

using TripleSet = std::set<Triple>;

/// A finite alphabet together with two involutions tau and nu and a set of
/// symbol triples S (the homotopy data).  Immutable after construction.
class Alphabet {
public:
    Alphabet(std::vector<std::string> symbols, std::vector<Symbol> tau,
             std::vector<Symbol> nu, TripleSet triples);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& symbols() const { return names_; }
    const std::string& name(Symbol s) const { return names_.at(static_cast<size_t>(s)); }
    std::optional<Symbol> find(std::string_view name) const;

    Symbol tau(Symbol s) const { return tau_.at(static_cast<size_t>(s)); }
    Symbol nu(Symbol s) const { return nu_.at(static_cast<size_t>(s)); }
    Symbol tau_nu(Symbol s) const { return tau(nu(s)); }
    Symbol nu_tau(Symbol s) const { return nu(tau(s)); }
    const std::vector<Symbol>& tau_map() const { return tau_; }
    const std::vector<Symbol>& nu_map() const { return nu_; }

    const TripleSet& triples() const { return triples_; }
    bool has_triple(Symbol a, Symbol b, Symbol c) const {
        return triples_.count(Triple{a, b, c}) != 0;
    }

    /// True iff tau(nu(s)) == nu(tau(s)) for every symbol.
    bool involutions_commute() const;
    /// First symbol witnessing tau(nu(s)) != nu(tau(s)), if any.
    std::optional<Symbol> commuting_witness() const;

    bool operator==(const Alphabet& other) const;

    /// Returns a copy with the triple set replaced.
    std::shared_ptr<const Alphabet> with_triples(TripleSet triples) const;

    // The five alphabets of the built-in homotopy categories.  The triple
    // sets are spelled out literally rather than derived.
    static std::shared_ptr<const Alphabet> star();    // {a+, a-, b+, b-}
    static std::shared_ptr<const Alphabet> alpha0();  // {a, b}
    static std::shared_ptr<const Alphabet> alpha1();  // {1, -1}
    static std::shared_ptr<const Alphabet> alpha2();  // {c, d}
    static std::shared_ptr<const Alphabet> alphaG();  // {a}
    /// Lookup by the document-grammar names star/alpha0/alpha1/alpha2/alphaG.
    static std::shared_ptr<const Alphabet> builtin(std::string_view name);
    /// Name under which this alphabet is a builtin, or empty.
    std::string builtin_name() const;

private:
    std::vector<std::string> names_;
    std::vector<Symbol> tau_;
    std::vector<Symbol> nu_;
    TripleSet triples_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

}  // namespace nanoword

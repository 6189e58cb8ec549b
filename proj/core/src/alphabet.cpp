#include "nanoword/alphabet.hpp"

#include "nanoword/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace nanoword {

namespace {

void check_involution(const std::vector<Symbol>& f, int n, const char* what) {
    if (static_cast<int>(f.size()) != n)
        throw DomainError(std::string(what) + " map does not cover the alphabet");
    for (Symbol s = 0; s < n; ++s) {
        if (f[static_cast<size_t>(s)] < 0 || f[static_cast<size_t>(s)] >= n)
            throw DomainError(std::string(what) + " maps outside the alphabet");
        if (f[static_cast<size_t>(f[static_cast<size_t>(s)])] != s)
            throw DomainError(std::string(what) + " is not an involution");
    }
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols, std::vector<Symbol> tau,
                   std::vector<Symbol> nu, TripleSet triples)
    : names_(std::move(symbols)),
      tau_(std::move(tau)),
      nu_(std::move(nu)),
      triples_(std::move(triples)) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw DomainError("empty symbol name");
        if (!seen.insert(n).second) throw DomainError("duplicate symbol name: " + n);
    }
    const int n = size();
    check_involution(tau_, n, "tau");
    check_involution(nu_, n, "nu");
    for (const Triple& t : triples_) {
        if (t.a < 0 || t.a >= n || t.b < 0 || t.b >= n || t.c < 0 || t.c >= n)
            throw DomainError("triple references an undeclared symbol");
    }
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
    for (Symbol s = 0; s < size(); ++s)
        if (names_[static_cast<size_t>(s)] == name) return s;
    return std::nullopt;
}

bool Alphabet::involutions_commute() const { return !commuting_witness().has_value(); }

std::optional<Symbol> Alphabet::commuting_witness() const {
    for (Symbol s = 0; s < size(); ++s)
        if (tau_nu(s) != nu_tau(s)) return s;
    return std::nullopt;
}

bool Alphabet::operator==(const Alphabet& other) const {
    return names_ == other.names_ && tau_ == other.tau_ && nu_ == other.nu_ &&
           triples_ == other.triples_;
}

std::shared_ptr<const Alphabet> Alphabet::with_triples(TripleSet triples) const {
    return std::make_shared<Alphabet>(names_, tau_, nu_, std::move(triples));
}

namespace {

TripleSet triples_of(std::initializer_list<std::array<Symbol, 3>> list) {
    TripleSet out;
    for (const auto& t : list) out.insert(Triple{t[0], t[1], t[2]});
    return out;
}

}  // namespace

std::shared_ptr<const Alphabet> Alphabet::star() {
    // a+ = 0, a- = 1, b+ = 2, b- = 3; tau: a+- <-> b-+, nu: a+- <-> b+-.
    static const auto inst = std::make_shared<const Alphabet>(
        std::vector<std::string>{"a+", "a-", "b+", "b-"}, std::vector<Symbol>{3, 2, 1, 0},
        std::vector<Symbol>{2, 3, 0, 1},
        triples_of({{0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {1, 1, 1}, {1, 1, 0}, {0, 1, 1},
                    {2, 2, 2}, {2, 2, 3}, {3, 2, 2}, {3, 3, 3}, {3, 3, 2}, {2, 3, 3}}));
    return inst;
}

std::shared_ptr<const Alphabet> Alphabet::alpha0() {
    static const auto inst = std::make_shared<const Alphabet>(
        std::vector<std::string>{"a", "b"}, std::vector<Symbol>{1, 0},
        std::vector<Symbol>{1, 0}, triples_of({{0, 0, 0}, {1, 1, 1}}));
    return inst;
}

std::shared_ptr<const Alphabet> Alphabet::alpha1() {
    // 1 = 0, -1 = 1; tau swaps, nu = id.
    static const auto inst = std::make_shared<const Alphabet>(
        std::vector<std::string>{"1", "-1"}, std::vector<Symbol>{1, 0},
        std::vector<Symbol>{0, 1},
        triples_of({{0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {1, 1, 1}, {1, 1, 0}, {0, 1, 1}}));
    return inst;
}

std::shared_ptr<const Alphabet> Alphabet::alpha2() {
    // c = 0, d = 1; tau = id, nu swaps.
    static const auto inst = std::make_shared<const Alphabet>(
        std::vector<std::string>{"c", "d"}, std::vector<Symbol>{0, 1},
        std::vector<Symbol>{1, 0},
        triples_of({{0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {1, 1, 1}, {1, 1, 0}, {0, 1, 1}}));
    return inst;
}

std::shared_ptr<const Alphabet> Alphabet::alphaG() {
    static const auto inst = std::make_shared<const Alphabet>(
        std::vector<std::string>{"a"}, std::vector<Symbol>{0}, std::vector<Symbol>{0},
        triples_of({{0, 0, 0}}));
    return inst;
}

std::shared_ptr<const Alphabet> Alphabet::builtin(std::string_view name) {
    if (name == "star") return star();
    if (name == "alpha0") return alpha0();
    if (name == "alpha1") return alpha1();
    if (name == "alpha2") return alpha2();
    if (name == "alphaG") return alphaG();
    return nullptr;
}

std::string Alphabet::builtin_name() const {
    static const std::pair<const char*, std::shared_ptr<const Alphabet> (*)()> table[] = {
        {"star", &Alphabet::star},     {"alpha0", &Alphabet::alpha0},
        {"alpha1", &Alphabet::alpha1}, {"alpha2", &Alphabet::alpha2},
        {"alphaG", &Alphabet::alphaG}};
    for (const auto& [name, fn] : table)
        if (*this == *fn()) return name;
    return {};
}

}  // namespace nanoword

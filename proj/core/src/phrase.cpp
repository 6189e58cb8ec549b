#include "nanoword/phrase.hpp"

#include "nanoword/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nanoword {

Phrase::Phrase(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
    if (!alphabet_) throw DomainError("phrase requires an alphabet");
}

Phrase::Phrase(AlphabetPtr alphabet, std::vector<std::string> letter_names,
               std::vector<Symbol> projections,
               std::vector<std::vector<LetterIdx>> components)
    : alphabet_(std::move(alphabet)),
      names_(std::move(letter_names)),
      proj_(std::move(projections)),
      components_(std::move(components)) {
    if (!alphabet_) throw DomainError("phrase requires an alphabet");
    if (names_.size() != proj_.size())
        throw DomainError("letter names and projections differ in size");
    const int n = letter_count();
    for (Symbol s : proj_)
        if (s < 0 || s >= alphabet_->size())
            throw DomainError("projection outside the alphabet");
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (const auto& comp : components_)
        for (LetterIdx l : comp) {
            if (l < 0 || l >= n) throw DomainError("occurrence of an unknown letter");
            used[static_cast<size_t>(l)] = true;
        }
    for (int l = 0; l < n; ++l)
        if (!used[static_cast<size_t>(l)])
            throw DomainError("letter never occurs: " + names_[static_cast<size_t>(l)]);
}

std::vector<LetterIdx> Phrase::flat() const {
    std::vector<LetterIdx> out;
    out.reserve(static_cast<size_t>(total_length()));
    for (const auto& comp : components_) out.insert(out.end(), comp.begin(), comp.end());
    return out;
}

int Phrase::total_length() const {
    int n = 0;
    for (const auto& comp : components_) n += static_cast<int>(comp.size());
    return n;
}

std::pair<int, int> Phrase::locate(int flat_pos) const {
    int rest = flat_pos;
    for (int c = 0; c < component_count(); ++c) {
        const int len = static_cast<int>(components_[static_cast<size_t>(c)].size());
        if (rest < len) return {c, rest};
        rest -= len;
    }
    throw DomainError("position outside the phrase");
}

std::pair<int, int> Phrase::occurrences(LetterIdx l) const {
    int first = -1, second = -1, pos = 0;
    for (const auto& comp : components_)
        for (LetterIdx x : comp) {
            if (x == l) {
                if (first < 0)
                    first = pos;
                else if (second < 0)
                    second = pos;
                else
                    throw DomainError("letter occurs more than twice");
            }
            ++pos;
        }
    if (second < 0) throw DomainError("letter occurs fewer than twice");
    return {first, second};
}

std::vector<int> Phrase::occurrence_counts() const {
    std::vector<int> counts(static_cast<size_t>(letter_count()), 0);
    for (const auto& comp : components_)
        for (LetterIdx l : comp) ++counts[static_cast<size_t>(l)];
    return counts;
}

Phrase Phrase::with_projection(LetterIdx l, Symbol s) const {
    Phrase out = *this;
    out.proj_.at(static_cast<size_t>(l)) = s;
    if (s < 0 || s >= alphabet_->size())
        throw DomainError("projection outside the alphabet");
    return out;
}

Phrase Phrase::relabeled(AlphabetPtr target, const std::vector<Symbol>& symbol_map) const {
    if (symbol_map.size() != static_cast<size_t>(alphabet_->size()))
        throw DomainError("symbol map does not cover the alphabet");
    std::vector<Symbol> proj;
    proj.reserve(proj_.size());
    for (Symbol s : proj_) {
        Symbol image = symbol_map[static_cast<size_t>(s)];
        if (image < 0)
            throw DomainError("symbol has no image under the relabeling: " +
                              alphabet_->name(s));
        proj.push_back(image);
    }
    return Phrase(std::move(target), names_, std::move(proj), components_);
}

bool Phrase::operator==(const Phrase& other) const {
    return *alphabet_ == *other.alphabet_ && names_ == other.names_ &&
           proj_ == other.proj_ && components_ == other.components_;
}

GaussReport validate_gauss(const Phrase& p) {
    GaussReport report;
    const auto counts = p.occurrence_counts();
    for (LetterIdx l = 0; l < p.letter_count(); ++l)
        if (counts[static_cast<size_t>(l)] != 2)
            report.violations.push_back(
                GaussViolation{p.letter_name(l), counts[static_cast<size_t>(l)]});
    return report;
}

void require_gauss(const Phrase& p) {
    const GaussReport report = validate_gauss(p);
    if (report.ok()) return;
    std::ostringstream os;
    os << "Gauss condition violated:";
    for (const auto& v : report.violations)
        os << ' ' << v.letter << " occurs " << v.count << " time(s)";
    throw DomainError(os.str());
}

CanonicalForm canonicalize(const Phrase& p) {
    // Reindex letters by first occurrence in the concatenation.
    std::vector<LetterIdx> order;  // new index -> old index
    std::vector<LetterIdx> rename(static_cast<size_t>(p.letter_count()), -1);
    for (const auto& comp : p.components())
        for (LetterIdx l : comp)
            if (rename[static_cast<size_t>(l)] < 0) {
                rename[static_cast<size_t>(l)] = static_cast<LetterIdx>(order.size());
                order.push_back(l);
            }
    std::vector<std::string> names;
    std::vector<Symbol> proj;
    names.reserve(order.size());
    proj.reserve(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        names.push_back("X" + std::to_string(i + 1));
        proj.push_back(p.proj(order[i]));
    }
    std::vector<std::vector<LetterIdx>> comps;
    comps.reserve(static_cast<size_t>(p.component_count()));
    for (const auto& comp : p.components()) {
        std::vector<LetterIdx> renamed;
        renamed.reserve(comp.size());
        for (LetterIdx l : comp) renamed.push_back(rename[static_cast<size_t>(l)]);
        comps.push_back(std::move(renamed));
    }
    return CanonicalForm{
        Phrase(p.alphabet_ptr(), std::move(names), std::move(proj), std::move(comps))};
}

bool CanonicalForm::operator==(const CanonicalForm& other) const {
    return phrase == other.phrase;
}

std::string CanonicalForm::key() const {
    std::ostringstream os;
    bool first_comp = true;
    for (const auto& comp : phrase.components()) {
        if (!first_comp) os << '|';
        first_comp = false;
        bool first = true;
        for (LetterIdx l : comp) {
            if (!first) os << ' ';
            first = false;
            os << phrase.letter_name(l);
        }
    }
    os << ';';
    for (LetterIdx l = 0; l < phrase.letter_count(); ++l) {
        if (l) os << ' ';
        os << phrase.alphabet().name(phrase.proj(l));
    }
    return os.str();
}

bool isomorphic(const Phrase& a, const Phrase& b) {
    return canonicalize(a) == canonicalize(b);
}

Phrase project_word(const Phrase& p, SubwordRange w) {
    if (w.begin < 0 || w.end < w.begin || w.end > p.total_length())
        throw DomainError("subword range outside the phrase");
    std::vector<int> positions;
    positions.reserve(static_cast<size_t>(w.end - w.begin));
    for (int q = w.begin; q < w.end; ++q) positions.push_back(q);
    return project_word(p, positions);
}

Phrase project_word(const Phrase& p, std::span<const int> flat_positions) {
    const auto flat = p.flat();
    std::vector<int> count(static_cast<size_t>(p.letter_count()), 0);
    for (int q : flat_positions) {
        if (q < 0 || q >= static_cast<int>(flat.size()))
            throw DomainError("subword position outside the phrase");
        ++count[static_cast<size_t>(flat[static_cast<size_t>(q)])];
    }
    Phrase out = p;
    for (LetterIdx l = 0; l < p.letter_count(); ++l) {
        switch (count[static_cast<size_t>(l)]) {
            case 0: break;
            case 1: out = out.with_projection(l, p.alphabet().tau(p.proj(l))); break;
            case 2: out = out.with_projection(l, p.alphabet().nu(p.proj(l))); break;
            default:
                throw DomainError("subword contains a letter more than twice");
        }
    }
    return out;
}

}  // namespace nanoword

#include "nanoword/parser.hpp"

#include "nanoword/homotopy.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace nanoword {

namespace {

struct Token {
    std::string text;
    int line = 0;
    int col = 0;  // 1-based
};

bool is_token_break(char c) { return c == '|' || c == '(' || c == ')' || c == ','; }

// Whitespace-separated tokens; '|', '(', ')', ',' always form their own
// token so "A|B" and "(1,1,-1)" need no internal spaces.
std::vector<Token> tokenize_line(std::string_view line, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const int col = static_cast<int>(i) + 1;
        if (is_token_break(c)) {
            out.push_back(Token{std::string(1, c), line_no, col});
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               !is_token_break(line[j]) && line[j] != '#')
            ++j;
        out.push_back(Token{std::string(line.substr(i, j - i)), line_no, col});
        i = j;
    }
    return out;
}

struct RawLine {
    std::string keyword;
    std::vector<Token> args;
    int line_no = 0;
};

class DocumentParser {
public:
    explicit DocumentParser(std::string_view text) {
        std::istringstream in{std::string(text)};
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            auto tokens = tokenize_line(line, line_no);
            if (tokens.empty()) continue;
            RawLine raw;
            raw.keyword = tokens.front().text;
            raw.line_no = line_no;
            raw.args.assign(tokens.begin() + 1, tokens.end());
            lines_.push_back(std::move(raw));
        }
    }

    Phrase parse() {
        for (const RawLine& line : lines_) {
            if (line.keyword == "alphabet")
                parse_alphabet(line);
            else if (line.keyword == "tau")
                parse_involution(line, tau_pairs_, tau_seen_);
            else if (line.keyword == "nu")
                parse_involution(line, nu_pairs_, nu_seen_);
            else if (line.keyword == "S")
                parse_triples(line);
            else if (line.keyword == "phrase") {
                if (phrase_line_) throw ParseError("duplicate phrase line", line.line_no, 1);
                phrase_line_ = line;
            } else {
                throw ParseError("unknown directive '" + line.keyword + "'", line.line_no, 1);
            }
        }
        if (!symbols_ && !builtin_)
            throw ParseError("document declares no alphabet", 1, 1);
        build_alphabet();
        return build_phrase();
    }

private:
    [[noreturn]] void fail(const Token& tok, const std::string& msg) {
        throw ParseError(msg, tok.line, tok.col);
    }

    void parse_alphabet(const RawLine& line) {
        if (symbols_ || builtin_)
            throw ParseError("duplicate alphabet declaration", line.line_no, 1);
        if (line.args.size() == 1) {
            if (auto b = Alphabet::builtin(line.args[0].text)) {
                builtin_ = b;
                return;
            }
        }
        if (line.args.empty())
            throw ParseError("alphabet declares no symbols", line.line_no, 1);
        std::vector<std::string> names;
        for (const Token& tok : line.args) {
            if (tok.text == "|" || tok.text == "(" || tok.text == ")" || tok.text == ",")
                fail(tok, "invalid symbol name");
            names.push_back(tok.text);
        }
        symbols_ = std::move(names);
    }

    int raw_symbol(const Token& tok) {
        const auto& names = *symbols_;
        auto lookup = [&names](const std::string& s) -> int {
            auto it = std::find(names.begin(), names.end(), s);
            return it == names.end() ? -1 : static_cast<int>(it - names.begin());
        };
        int s = lookup(tok.text);
        if (s < 0 && tok.text.size() > 1 && tok.text[0] == '+') s = lookup(tok.text.substr(1));
        if (s < 0) fail(tok, "undeclared symbol '" + tok.text + "'");
        return s;
    }

    void parse_involution(const RawLine& line, std::vector<std::pair<int, int>>& pairs,
                          bool& seen) {
        if (builtin_)
            throw ParseError("builtin alphabet already defines " + line.keyword,
                             line.line_no, 1);
        if (!symbols_)
            throw ParseError(line.keyword + " before alphabet declaration", line.line_no, 1);
        if (seen) throw ParseError("duplicate " + line.keyword + " line", line.line_no, 1);
        seen = true;
        for (const Token& tok : line.args) {
            auto colon = tok.text.find(':');
            if (colon == std::string::npos || colon == 0 || colon + 1 == tok.text.size())
                fail(tok, "expected <sym>:<sym>");
            Token lhs{tok.text.substr(0, colon), tok.line, tok.col};
            Token rhs{tok.text.substr(colon + 1), tok.line,
                      tok.col + static_cast<int>(colon) + 1};
            pairs.emplace_back(raw_symbol(lhs), raw_symbol(rhs));
        }
    }

    void parse_triples(const RawLine& line) {
        if (s_mode_ != SMode::None)
            throw ParseError("duplicate S line", line.line_no, 1);
        if (!symbols_ && !builtin_)
            throw ParseError("S before alphabet declaration", line.line_no, 1);
        if (line.args.size() == 1 && line.args[0].text == "knotlike") {
            s_mode_ = SMode::Knotlike;
            return;
        }
        if (line.args.size() == 1 && line.args[0].text == "diagonal") {
            s_mode_ = SMode::Diagonal;
            return;
        }
        s_mode_ = SMode::Explicit;
        std::size_t i = 0;
        const auto& args = line.args;
        while (i < args.size()) {
            if (args[i].text != "(") fail(args[i], "expected '(' in triple list");
            if (i + 6 >= args.size() || args[i + 2].text != "," || args[i + 4].text != "," ||
                args[i + 6].text != ")")
                fail(args[i], "malformed triple; expected (<s>,<s>,<s>)");
            s_tokens_.push_back({args[i + 1], args[i + 3], args[i + 5]});
            i += 7;
        }
    }

    void build_alphabet() {
        if (builtin_) {
            alphabet_ = builtin_;
            // Only the triple set may be overridden on a builtin.
            if (s_mode_ == SMode::Diagonal)
                alphabet_ = builtin_->with_triples(make_diagonal(*builtin_));
            else if (s_mode_ == SMode::Knotlike)
                alphabet_ = builtin_->with_triples(make_knotlike(*builtin_));
            else if (s_mode_ == SMode::Explicit)
                alphabet_ = builtin_->with_triples(explicit_triples(*builtin_));
            return;
        }
        const int n = static_cast<int>(symbols_->size());
        auto build_involution = [n](const std::vector<std::pair<int, int>>& pairs) {
            std::vector<Symbol> f(static_cast<size_t>(n));
            for (int s = 0; s < n; ++s) f[static_cast<size_t>(s)] = s;
            for (auto [a, b] : pairs) {
                f[static_cast<size_t>(a)] = b;
                f[static_cast<size_t>(b)] = a;
            }
            return f;
        };
        // Construct with an empty triple set first so knotlike/diagonal can
        // be derived from the finished involutions.
        Alphabet base(*symbols_, build_involution(tau_pairs_), build_involution(nu_pairs_),
                      {});
        TripleSet triples;
        switch (s_mode_) {
            case SMode::None: break;
            case SMode::Knotlike: triples = make_knotlike(base); break;
            case SMode::Diagonal: triples = make_diagonal(base); break;
            case SMode::Explicit: triples = explicit_triples(base); break;
        }
        alphabet_ = std::make_shared<Alphabet>(*symbols_, base.tau_map(), base.nu_map(),
                                               std::move(triples));
    }

    TripleSet explicit_triples(const Alphabet& alphabet) {
        TripleSet out;
        for (const auto& triple : s_tokens_) {
            Triple t;
            Symbol* slots[3] = {&t.a, &t.b, &t.c};
            for (int i = 0; i < 3; ++i) {
                auto s = resolve_in(alphabet, triple[static_cast<size_t>(i)]);
                *slots[i] = s;
            }
            out.insert(t);
        }
        return out;
    }

    Symbol resolve_in(const Alphabet& alphabet, const Token& tok) {
        auto s = alphabet.find(tok.text);
        if (!s && tok.text.size() > 1 && tok.text[0] == '+')
            s = alphabet.find(tok.text.substr(1));
        if (!s) fail(tok, "undeclared symbol '" + tok.text + "'");
        return *s;
    }

    Phrase build_phrase() {
        if (!phrase_line_) return Phrase(alphabet_);  // length 0, flagged downstream
        std::vector<std::string> names;
        std::vector<Symbol> proj;
        std::map<std::string, LetterIdx> index;
        std::vector<int> counts;
        std::vector<std::vector<LetterIdx>> comps(1);
        for (const Token& tok : phrase_line_->args) {
            if (tok.text == "|") {
                comps.emplace_back();
                continue;
            }
            if (tok.text == "(" || tok.text == ")" || tok.text == ",")
                fail(tok, "invalid letter token");
            auto colon = tok.text.find(':');
            std::string name = tok.text.substr(0, colon == std::string::npos
                                                       ? tok.text.size()
                                                       : colon);
            if (name.empty()) fail(tok, "empty letter name");
            auto it = index.find(name);
            if (colon != std::string::npos) {
                if (it != index.end())
                    fail(tok, "projection repeated on a later occurrence of '" + name + "'");
                Token sym{tok.text.substr(colon + 1), tok.line,
                          tok.col + static_cast<int>(colon) + 1};
                if (sym.text.empty()) fail(tok, "missing symbol after ':'");
                LetterIdx l = static_cast<LetterIdx>(names.size());
                names.push_back(name);
                proj.push_back(resolve_in(*alphabet_, sym));
                counts.push_back(1);
                index.emplace(name, l);
                comps.back().push_back(l);
            } else {
                if (it == index.end())
                    fail(tok, "first occurrence of '" + name + "' must declare ':<sym>'");
                ++counts[static_cast<size_t>(it->second)];
                comps.back().push_back(it->second);
            }
        }
        // Gauss condition is part of the document contract.
        std::vector<GaussViolation> violations;
        for (size_t l = 0; l < names.size(); ++l)
            if (counts[l] != 2) violations.push_back(GaussViolation{names[l], counts[l]});
        if (!violations.empty()) {
            std::ostringstream os;
            os << "Gauss violation:";
            for (const auto& v : violations)
                os << ' ' << v.letter << " occurs " << v.count << " time(s)";
            throw GaussParseError(os.str(), phrase_line_->line_no, 1, std::move(violations));
        }
        return Phrase(alphabet_, std::move(names), std::move(proj), std::move(comps));
    }

    enum class SMode { None, Knotlike, Diagonal, Explicit };

    std::vector<RawLine> lines_;
    std::optional<std::vector<std::string>> symbols_;
    AlphabetPtr builtin_;
    std::vector<std::pair<int, int>> tau_pairs_;
    std::vector<std::pair<int, int>> nu_pairs_;
    bool tau_seen_ = false;
    bool nu_seen_ = false;
    SMode s_mode_ = SMode::None;
    std::vector<std::array<Token, 3>> s_tokens_;
    std::optional<RawLine> phrase_line_;
    AlphabetPtr alphabet_;
};

}  // namespace

Phrase parse_phrase_document(std::string_view text) {
    return DocumentParser(text).parse();
}

std::string render_phrase_document(const Phrase& p) {
    std::ostringstream os;
    const Alphabet& a = p.alphabet();
    const std::string builtin = a.builtin_name();
    if (!builtin.empty()) {
        os << "alphabet " << builtin << '\n';
    } else {
        os << "alphabet";
        for (const auto& s : a.symbols()) os << ' ' << s;
        os << '\n';
        std::string tau_line, nu_line;
        for (Symbol s = 0; s < a.size(); ++s) {
            if (a.tau(s) > s) tau_line += ' ' + a.name(s) + ':' + a.name(a.tau(s));
            if (a.nu(s) > s) nu_line += ' ' + a.name(s) + ':' + a.name(a.nu(s));
        }
        if (!tau_line.empty()) os << "tau" << tau_line << '\n';
        if (!nu_line.empty()) os << "nu" << nu_line << '\n';
        if (!a.triples().empty()) {
            os << "S";
            for (const Triple& t : a.triples())
                os << " (" << a.name(t.a) << ',' << a.name(t.b) << ',' << a.name(t.c) << ')';
            os << '\n';
        }
    }
    if (p.component_count() == 0) {
        os << "# empty phrase (length 0)\n";
        return os.str();
    }
    os << "phrase";
    std::vector<bool> seen(static_cast<size_t>(p.letter_count()), false);
    bool first_comp = true;
    for (const auto& comp : p.components()) {
        if (!first_comp) os << " |";
        first_comp = false;
        for (LetterIdx l : comp) {
            os << ' ' << p.letter_name(l);
            if (!seen[static_cast<size_t>(l)]) {
                os << ':' << a.name(p.proj(l));
                seen[static_cast<size_t>(l)] = true;
            }
        }
    }
    os << '\n';
    return os.str();
}

}  // namespace nanoword

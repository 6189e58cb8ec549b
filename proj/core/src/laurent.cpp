#include "nanoword/laurent.hpp"

#include "nanoword/error.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace nanoword {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw DomainError("exponent overflow in Laurent arithmetic");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw DomainError("exponent overflow in Laurent arithmetic");
    return out;
}

}  // namespace

LaurentPoly LaurentPoly::constant(Coeff c) { return monomial(std::move(c), 0, 0, 0); }

LaurentPoly LaurentPoly::monomial(Coeff c, std::int64_t et, std::int64_t eu,
                                  std::int64_t ed) {
    LaurentPoly p;
    if (c != 0) p.terms_[Exponents{et, eu, ed}] = std::move(c);
    return p;
}

bool LaurentPoly::is_single_variable() const {
    for (const auto& [e, c] : terms_)
        if (e.u != 0 || e.d != 0) return false;
    return true;
}

bool LaurentPoly::is_unit_monomial() const {
    if (terms_.size() != 1) return false;
    const auto& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

void LaurentPoly::add_term(const Exponents& e, const Coeff& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out;
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            LaurentPoly::Exponents e{checked_add(ea.t, eb.t), checked_add(ea.u, eb.u),
                                     checked_add(ea.d, eb.d)};
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly LaurentPoly::int_pow(std::int64_t n) const {
    if (n == 0) return one();
    if (n < 0) {
        if (!is_unit_monomial())
            throw DomainError("negative power of a non-unit Laurent polynomial");
        const auto& [e, c] = *terms_.begin();
        // (c t^a u^b d^e)^-k with c = +-1: coefficient is c^k.
        Coeff coeff = (c == -1 && (n % 2 != 0)) ? Coeff(-1) : Coeff(1);
        return monomial(coeff, checked_mul(e.t, n), checked_mul(e.u, n),
                        checked_mul(e.d, n));
    }
    LaurentPoly acc = one();
    LaurentPoly base = *this;
    std::int64_t k = n;
    while (k > 0) {
        if (k & 1) acc *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return acc;
}

LaurentPoly LaurentPoly::specialize() const {
    // Image of d under the substitution.
    const LaurentPoly d_image = -(t_power(2) + t_power(-2));
    std::vector<LaurentPoly> d_pow{LaurentPoly::one()};
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        if (e.d < 0)
            throw DomainError("specialize: negative d-exponent has no Laurent image");
        while (static_cast<std::int64_t>(d_pow.size()) <= e.d)
            d_pow.push_back(d_pow.back() * d_image);
        out += monomial(c, checked_add(e.t, -e.u)) * d_pow[static_cast<std::size_t>(e.d)];
    }
    return out;
}

std::string LaurentPoly::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) os << '-';
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        Coeff mag = negative ? Coeff(-c) : c;
        std::string vars;
        auto append_var = [&vars](char name, std::int64_t exp) {
            if (exp == 0) return;
            if (!vars.empty()) vars += '*';
            vars += name;
            if (exp != 1) {
                vars += '^';
                vars += std::to_string(exp);
            }
        };
        append_var('t', e.t);
        append_var('u', e.u);
        append_var('d', e.d);
        if (vars.empty()) {
            os << mag.str();
        } else if (mag == 1) {
            os << vars;
        } else {
            os << mag.str() << '*' << vars;
        }
    }
    return os.str();
}

namespace {

struct TermText {
    std::string text;
    bool negative = false;
};

// Splits "a + b - c" on the top-level " + " / " - " separators.
std::vector<TermText> split_terms(std::string_view s) {
    std::vector<TermText> out;
    TermText cur;
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') {
        cur.negative = true;
        ++i;
    }
    while (i < s.size()) {
        if (s[i] == ' ' && i + 2 < s.size() && (s[i + 1] == '+' || s[i + 1] == '-') &&
            s[i + 2] == ' ') {
            out.push_back(cur);
            cur = TermText{};
            cur.negative = (s[i + 1] == '-');
            i += 3;
            continue;
        }
        cur.text += s[i];
        ++i;
    }
    out.push_back(cur);
    return out;
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
    // Trim outer whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty()) throw DomainError("empty polynomial text");
    if (text == "0") return zero();

    LaurentPoly out;
    for (const TermText& term : split_terms(text)) {
        if (term.text.empty()) throw DomainError("malformed polynomial term");
        Coeff coeff = 1;
        Exponents e;
        std::size_t i = 0;
        const std::string& s = term.text;
        if (std::isdigit(static_cast<unsigned char>(s[0]))) {
            std::size_t j = 0;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            coeff = Coeff(s.substr(0, j));
            i = j;
            if (i < s.size()) {
                if (s[i] != '*') throw DomainError("malformed polynomial term: " + s);
                ++i;
            }
        }
        while (i < s.size()) {
            char v = s[i++];
            std::int64_t* slot = nullptr;
            switch (v) {
                case 't': slot = &e.t; break;
                case 'u': slot = &e.u; break;
                case 'd': slot = &e.d; break;
                default: throw DomainError("unknown variable in polynomial term: " + s);
            }
            std::int64_t exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t j = i;
                if (j < s.size() && s[j] == '-') ++j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == i) throw DomainError("malformed exponent in term: " + s);
                exp = std::strtoll(s.substr(i, j - i).c_str(), nullptr, 10);
                i = j;
            }
            *slot = checked_add(*slot, exp);
            if (i < s.size()) {
                if (s[i] != '*') throw DomainError("malformed polynomial term: " + s);
                ++i;
            }
        }
        out.add_term(e, term.negative ? Coeff(-coeff) : coeff);
    }
    return out;
}

}  // namespace nanoword

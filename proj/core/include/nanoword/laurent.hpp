#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace nanoword {

/// Exact Laurent polynomial in the commuting variables t, u, d with
/// arbitrary-precision integer coefficients.  Terms are kept in a canonical
/// sparse form: the map never stores a zero coefficient, so equality is
/// plain map equality.
class LaurentPoly {
public:
    using Coeff = boost::multiprecision::cpp_int;

    struct Exponents {
        std::int64_t t = 0;
        std::int64_t u = 0;
        std::int64_t d = 0;
        auto operator<=>(const Exponents&) const = default;
    };

    using TermMap = std::map<Exponents, Coeff>;

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly{}; }
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly constant(Coeff c);
    static LaurentPoly monomial(Coeff c, std::int64_t et, std::int64_t eu = 0,
                                std::int64_t ed = 0);
    /// t^n as a convenience for the single-variable subring.
    static LaurentPoly t_power(std::int64_t n) { return monomial(1, n); }

    bool is_zero() const { return terms_.empty(); }
    /// True when every term has u- and d-exponent zero.
    bool is_single_variable() const;
    /// True when the polynomial is c * t^a u^b d^e with c = +-1.
    bool is_unit_monomial() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    LaurentPoly operator-() const;

    bool operator==(const LaurentPoly&) const = default;

    /// Integer power.  A negative exponent is defined only for unit
    /// monomials (coefficient +-1); anything else throws.
    LaurentPoly int_pow(std::int64_t n) const;

    /// Substitute u -> t^-1 and d -> -t^2 - t^-2.  The result lives in the
    /// single-variable subring.  Terms with a negative d-exponent have no
    /// image in the Laurent ring and are rejected.
    LaurentPoly specialize() const;

    /// Deterministic rendering: terms ascending by (e_t, e_u, e_d), unit
    /// coefficients and exponents elided, e.g. "-t^-2 - t^2".
    std::string render() const;

    /// Parses the render() format back; render(parse(s)) == s for canonical s.
    static LaurentPoly parse(std::string_view text);

private:
    void add_term(const Exponents& e, const Coeff& c);

    TermMap terms_;
};

}  // namespace nanoword

#pragma once

// Exact univariate polynomials with arbitrary-precision integer coefficients.
//
// Forcing polynomials are generating functions over perfect matchings, so the
// coefficients count matchings and grow quickly with the number of rows.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace chs {

using Integer = boost::multiprecision::cpp_int;

class Polynomial {
public:
    /// The zero polynomial.
    Polynomial() = default;
    Polynomial(std::initializer_list<long long> coeffs);
    explicit Polynomial(std::vector<Integer> coeffs);

    static Polynomial one() { return monomial(1, 0); }
    static Polynomial monomial(const Integer& coeff, std::size_t exponent);

    /// coeffs()[i] is the coefficient of x^i; the last entry is nonzero.
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of a nonzero polynomial. Throws std::domain_error on zero.
    std::size_t degree() const;

    /// Smallest exponent with a nonzero coefficient. Throws on zero.
    std::size_t min_exponent() const;

    Integer coeff(std::size_t exponent) const;

    bool all_nonnegative() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();

    std::vector<Integer> coeffs_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial sub(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);

/// Multiply by x^w.
Polynomial shift(const Polynomial& a, std::size_t w);

/// Sum of coefficients. For a forcing polynomial this is the number of
/// perfect matchings.
Integer eval_at_one(const Polynomial& a);

Integer evaluate(const Polynomial& a, const Integer& x);

/// Exponents carrying a nonzero coefficient (the forcing spectrum).
std::set<std::size_t> support(const Polynomial& a);

/// Descending powers, e.g. "4x^2+x". The zero polynomial prints as "0".
std::string to_text(const Polynomial& a);

/// "F(G,x)=4x^{2}+x" (no surrounding math delimiters).
std::string to_latex(const Polynomial& a, const std::string& name = "F(G,x)");

/// Decimal-string coefficients, index = exponent.
std::vector<std::string> to_decimal_strings(const Polynomial& a);
Polynomial from_decimal_strings(const std::vector<std::string>& coeffs);

}  // namespace chs

#include "chs/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chs {

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Integer& coeff, std::size_t exponent) {
    std::vector<Integer> c(exponent + 1);
    c[exponent] = coeff;
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t Polynomial::degree() const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial");
    return coeffs_.size() - 1;
}

std::size_t Polynomial::min_exponent() const {
    if (is_zero()) throw std::domain_error("minimum exponent of the zero polynomial");
    std::size_t i = 0;
    while (coeffs_[i] == 0) ++i;
    return i;
}

Integer Polynomial::coeff(std::size_t exponent) const {
    return exponent < coeffs_.size() ? coeffs_[exponent] : Integer(0);
}

bool Polynomial::all_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial sub(const Polynomial& a, const Polynomial& b) { return a - b; }
Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial shift(const Polynomial& a, std::size_t w) {
    if (a.is_zero() || w == 0) return a;
    std::vector<Integer> c(w);
    c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
    return Polynomial(std::move(c));
}

Integer eval_at_one(const Polynomial& a) {
    Integer sum = 0;
    for (const auto& c : a.coeffs()) sum += c;
    return sum;
}

Integer evaluate(const Polynomial& a, const Integer& x) {
    Integer acc = 0;
    for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::set<std::size_t> support(const Polynomial& a) {
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        if (a.coeffs()[i] != 0) out.insert(i);
    return out;
}

namespace {

// Shared by the text and LaTeX renderers; only the exponent markup differs.
std::string render(const Polynomial& a, bool latex) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& c = a.coeffs();
    for (std::size_t e = c.size(); e-- > 0;) {
        if (c[e] == 0) continue;
        Integer mag = c[e] < 0 ? Integer(-c[e]) : c[e];
        if (c[e] < 0) os << '-';
        else if (!first) os << '+';
        first = false;
        if (e == 0 || mag != 1) os << mag;
        if (e >= 1) os << 'x';
        if (e >= 2) {
            if (latex) os << "^{" << e << '}';
            else os << '^' << e;
        }
    }
    return os.str();
}

}  // namespace

std::string to_text(const Polynomial& a) { return render(a, false); }

std::string to_latex(const Polynomial& a, const std::string& name) {
    return name + "=" + render(a, true);
}

std::vector<std::string> to_decimal_strings(const Polynomial& a) {
    std::vector<std::string> out;
    out.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) out.push_back(c.str());
    return out;
}

Polynomial from_decimal_strings(const std::vector<std::string>& coeffs) {
    std::vector<Integer> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) {
        try {
            c.emplace_back(s);
        } catch (const std::exception&) {
            throw std::invalid_argument("not a decimal integer: \"" + s + "\"");
        }
    }
    return Polynomial(std::move(c));
}

}  // namespace chs

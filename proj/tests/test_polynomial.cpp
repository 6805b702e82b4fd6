#include "chs/polynomial.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace chs;

namespace {

Polynomial random_poly() {
    std::vector<Integer> c(static_cast<std::size_t>(testing::uniform(0, 6)));
    for (auto& v : c) v = testing::uniform(-20, 20);
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("construction trims trailing zeros") {
    CHECK(Polynomial{0, 0, 0}.is_zero());
    CHECK(Polynomial{1, 2, 0}.coeffs().size() == 2);
    CHECK(Polynomial::monomial(0, 5).is_zero());
    CHECK(Polynomial::one() == Polynomial{1});
}

TEST_CASE("degree and minimum exponent") {
    const Polynomial p{0, 1, 0, 4};
    CHECK(p.degree() == 3);
    CHECK(p.min_exponent() == 1);
    CHECK(p.coeff(3) == 4);
    CHECK(p.coeff(99) == 0);
    CHECK_THROWS_AS(Polynomial{}.degree(), std::domain_error);
    CHECK_THROWS_AS(Polynomial{}.min_exponent(), std::domain_error);
}

TEST_CASE("arithmetic on small examples") {
    const Polynomial x = Polynomial::monomial(1, 1);
    const Polynomial one_plus_2x{1, 2};
    CHECK(add(one_plus_2x * x, one_plus_2x * x) == Polynomial{0, 2, 4});
    CHECK(sub(Polynomial{0, 1}, Polynomial{0, 1}).is_zero());
    CHECK(mul(Polynomial{1, 1}, Polynomial{1, -1}) == Polynomial{1, 0, -1});
    CHECK(shift(Polynomial{3}, 2) == Polynomial{0, 0, 3});
    CHECK(shift(Polynomial{}, 4).is_zero());
}

TEST_CASE("ring laws on random polynomials") {
    for (int trial = 0; trial < 300; ++trial) {
        const Polynomial a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Polynomial{} == a);
        CHECK(a * Polynomial::one() == a);
        CHECK((a - a).is_zero());
        CHECK(eval_at_one(a * b) == eval_at_one(a) * eval_at_one(b));
        CHECK(evaluate(a + b, 3) == evaluate(a, 3) + evaluate(b, 3));
        CHECK(shift(a, 2) == a * Polynomial::monomial(1, 2));
    }
}

TEST_CASE("coefficients beyond 64 bits stay exact") {
    Polynomial p{1, 1};
    for (int i = 0; i < 7; ++i) p = p * p;  // (1+x)^128
    CHECK(eval_at_one(p) == Integer(1) << 128);
    CHECK(p.coeff(64).str() == "23951146041928082866135587776380551750");
}

TEST_CASE("support and nonnegativity") {
    CHECK(support(Polynomial{0, 3, 0, 1}) == std::set<std::size_t>{1, 3});
    CHECK(support(Polynomial{}).empty());
    CHECK(Polynomial{0, 3, 0, 1}.all_nonnegative());
    CHECK_FALSE(Polynomial{1, -1}.all_nonnegative());
}

TEST_CASE("text rendering uses descending powers") {
    CHECK(to_text(Polynomial{0, 1, 4}) == "4x^2+x");
    CHECK(to_text(Polynomial{0, 4}) == "4x");
    CHECK(to_text(Polynomial{1}) == "1");
    CHECK(to_text(Polynomial{}) == "0");
    CHECK(to_text(Polynomial{-1, 0, -2}) == "-2x^2-1");
    CHECK(to_text(Polynomial{0, 1, 0, 8}) == "8x^3+x");
}

TEST_CASE("latex rendering") {
    CHECK(to_latex(Polynomial{0, 1, 4}) == "F(G,x)=4x^{2}+x");
    CHECK(to_latex(Polynomial{0, 2}, "F(Z_1,x)") == "F(Z_1,x)=2x");
}

TEST_CASE("decimal strings round trip") {
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial a = random_poly();
        CHECK(from_decimal_strings(to_decimal_strings(a)) == a);
    }
    CHECK_THROWS_AS(from_decimal_strings({"12", "x"}), std::invalid_argument);
}

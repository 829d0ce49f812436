#include "doctest.h"

#include "ratfun/poly.hpp"

using namespace haarmom;

TEST_CASE("poly basics") {
    const Poly d = Poly::variable();
    const Poly p = d * d - Poly::constant(1);       // d^2 - 1
    CHECK(p.degree() == 2);
    CHECK(p.eval(mpq_class(3)) == 8);
    CHECK((p * p).degree() == 4);
    CHECK(Poly{1, 2, 1}.to_string() == "1 + 2*d + d^2");
    CHECK((-Poly{0, 1}).to_string() == "-d");
    CHECK(Poly{}.is_zero());
    CHECK((p - p).is_zero());
}

TEST_CASE("poly gcd and exact division") {
    const Poly d = Poly::variable();
    const Poly a = (d - Poly::constant(1)) * (d + Poly::constant(2)) * Poly::constant(6);
    const Poly b = (d - Poly::constant(1)) * d * Poly::constant(4);
    const Poly g = poly_gcd(a, b);
    CHECK(g == d - Poly::constant(1));
    CHECK(a.divide_exact(g) == (d + Poly::constant(2)) * Poly::constant(6));
    CHECK_THROWS(a.divide_exact(d + Poly::constant(5)));
}

TEST_CASE("rational function reduction and arithmetic") {
    const Poly d = Poly::variable();
    const RationalFunctionD half(mpq_class(1, 2));
    CHECK(half.as_rational() == mpq_class(1, 2));

    // (d^2-1)/(d-1) reduces to d+1.
    RationalFunctionD r(d * d - Poly::constant(1), d - Poly::constant(1));
    CHECK(r == RationalFunctionD(d + Poly::constant(1), Poly::constant(1)));

    // Denominator sign is normalized.
    RationalFunctionD s(Poly::constant(1), -d);
    CHECK(s.den().leading() > 0);
    CHECK(s.num().coeff(0) == -1);

    const RationalFunctionD one(1);
    const RationalFunctionD x = RationalFunctionD::variable();
    CHECK((one / x + one / x) == RationalFunctionD(Poly::constant(2), d));
    CHECK((x * x - one) / (x - one) == x + one);
    CHECK((x - x).is_zero());
    CHECK((one / x).eval(4) == mpq_class(1, 4));
    CHECK_THROWS((one / (x - one)).eval(1));
}

TEST_CASE("rendering with factored denominators") {
    const Poly d = Poly::variable();
    CHECK(RationalFunctionD(Poly::constant(1), d).to_string() == "1/d");
    CHECK(RationalFunctionD(Poly::constant(3), d * (d + Poly::constant(2))).to_string() ==
          "3/(d*(d + 2))");
    CHECK(RationalFunctionD(Poly::constant(-1), d * (d * d - Poly::constant(1))).to_string() ==
          "-1/((d - 1)*d*(d + 1))");
    CHECK(RationalFunctionD(d + Poly::constant(1), d * d).to_string() == "(1 + d)/d^2");
    // 2d+1 keeps its leading coefficient inside the factor.
    CHECK(RationalFunctionD(Poly::constant(1), Poly::linear(2, 1)).to_string() == "1/(2*d + 1)");
}

TEST_CASE("linear factor splitting") {
    const Poly d = Poly::variable();
    mpz_class scale;
    std::vector<LinearFactor> f;
    const Poly p = d * d * (d - Poly::constant(1)) * Poly::constant(6);
    REQUIRE(split_linear_factors(p, scale, f));
    CHECK(scale == 6);
    REQUIRE(f.size() == 2);
    // Irreducible quadratic does not split.
    CHECK_FALSE(split_linear_factors(d * d + Poly::constant(1), scale, f));
}

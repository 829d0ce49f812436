#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace haarmom {

/// Dense univariate polynomial over Z in the dimension symbol d,
/// coefficients ascending by degree. The zero polynomial has no
/// coefficients.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<long> coeffs);
    explicit Poly(std::vector<mpz_class> coeffs);
    static Poly constant(const mpz_class& c);
    static Poly variable();                     // d
    static Poly linear(const mpz_class& a, const mpz_class& b);  // a·d + b

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& leading() const;
    mpz_class coeff(int k) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const mpz_class& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    mpq_class eval(const mpq_class& x) const;
    mpz_class eval(const mpz_class& x) const;

    mpz_class content() const;                  // gcd of coefficients, >= 0
    Poly primitive() const;                     // content 1, sign of leading kept
    Poly divide_exact(const Poly& divisor) const;  // throws if not exact

    std::string to_string(const std::string& var = "d") const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

// Primitive gcd with positive leading coefficient; gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Reduced ratio of integer polynomials in d: gcd(num, den) = 1 jointly
/// with coefficient contents, and the denominator has positive leading
/// coefficient. Equality is structural on the canonical form.
class RationalFunctionD {
public:
    RationalFunctionD() : num_(), den_(Poly::constant(1)) {}
    RationalFunctionD(Poly num, Poly den);
    RationalFunctionD(const mpq_class& q);
    RationalFunctionD(long v) : RationalFunctionD(mpq_class(v)) {}
    static RationalFunctionD variable() { return {Poly::variable(), Poly::constant(1)}; }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RationalFunctionD operator+(const RationalFunctionD& o) const;
    RationalFunctionD operator-(const RationalFunctionD& o) const;
    RationalFunctionD operator-() const;
    RationalFunctionD operator*(const RationalFunctionD& o) const;
    RationalFunctionD operator/(const RationalFunctionD& o) const;
    RationalFunctionD& operator+=(const RationalFunctionD& o) { return *this = *this + o; }
    RationalFunctionD& operator*=(const RationalFunctionD& o) { return *this = *this * o; }
    bool operator==(const RationalFunctionD& o) const { return num_ == o.num_ && den_ == o.den_; }

    mpq_class eval(const mpq_class& x) const;   // throws on a pole
    mpq_class as_rational() const;              // requires is_constant-like (den degree 0)

    // "num/den" with the denominator shown as a product of linear
    // factors when it splits over Q, otherwise expanded.
    std::string to_string(const std::string& var = "d") const;

private:
    void reduce();
    Poly num_, den_;
};

// Linear factorization over Q: den = lead·Π(a_i d + b_i)^{e_i} if it
// splits; returns false otherwise.
struct LinearFactor {
    mpz_class a, b;
    int multiplicity;
};
bool split_linear_factors(const Poly& p, mpz_class& scale, std::vector<LinearFactor>& out);

}  // namespace haarmom

#include "ratfun/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace haarmom {

namespace {
const mpz_class kZero = 0;
}

Poly::Poly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const mpz_class& c) {
    Poly p;
    if (c != 0) p.c_.push_back(c);
    return p;
}

Poly Poly::variable() { return Poly{0, 1}; }

Poly Poly::linear(const mpz_class& a, const mpz_class& b) {
    Poly p;
    p.c_ = {b, a};
    p.trim();
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& Poly::leading() const {
    return c_.empty() ? kZero : c_.back();
}

mpz_class Poly::coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : mpz_class(0);
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<mpz_class> r(c_);
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const mpz_class& s) const {
    if (s == 0) return {};
    std::vector<mpz_class> r(c_);
    for (auto& x : r) x *= s;
    return Poly(std::move(r));
}

mpq_class Poly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
}

mpz_class Poly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpz_class Poly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

Poly Poly::primitive() const {
    if (is_zero()) return {};
    const mpz_class g = content();
    std::vector<mpz_class> r(c_);
    for (auto& x : r) x /= g;
    return Poly(std::move(r));
}

Poly Poly::divide_exact(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return {};
    std::vector<mpq_class> rem(c_.begin(), c_.end());
    const int dd = divisor.degree();
    std::vector<mpq_class> quo(static_cast<std::size_t>(degree() - dd + 1), mpq_class(0));
    for (int k = degree(); k >= dd; --k) {
        mpq_class q = rem[static_cast<std::size_t>(k)] / mpq_class(divisor.leading());
        if (q == 0) continue;
        quo[static_cast<std::size_t>(k - dd)] = q;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k - dd + j)] -= q * mpq_class(divisor.coeff(j));
    }
    for (const auto& r : rem)
        if (r != 0) throw std::invalid_argument("polynomial division is not exact");
    std::vector<mpz_class> out;
    out.reserve(quo.size());
    for (auto& q : quo) {
        q.canonicalize();
        if (q.get_den() != 1) throw std::invalid_argument("polynomial division is not exact over Z");
        out.push_back(q.get_num());
    }
    return Poly(std::move(out));
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= degree(); ++k) {
        const mpz_class c = coeff(k);
        if (c == 0) continue;
        const bool neg = c < 0;
        mpz_class a = abs(c);
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        const bool unit = (a == 1 && k > 0);
        if (!unit) s += a.get_str();
        if (k > 0) {
            if (!unit) s += "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

namespace {

// Euclidean remainder sequence over Q; inputs nonzero.
std::vector<mpq_class> poly_mod_q(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
    const auto db = b.size() - 1;
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
        const mpq_class q = a.back() / b.back();
        const auto shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= q * b[j];
        while (a.size() > 1 && a.back() == 0) a.pop_back();
        if (a.size() <= db) break;
    }
    if (a.size() == 1 && a[0] == 0) a.clear();
    return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return b.leading() < 0 ? (-b).primitive() : b.primitive();
    if (b.is_zero()) return a.leading() < 0 ? (-a).primitive() : a.primitive();
    std::vector<mpq_class> x(a.coeffs().begin(), a.coeffs().end());
    std::vector<mpq_class> y(b.coeffs().begin(), b.coeffs().end());
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        auto r = poly_mod_q(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    // Clear denominators and normalize to a primitive polynomial.
    mpz_class lcm = 1;
    for (auto& q : x) {
        q.canonicalize();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    std::vector<mpz_class> zc;
    zc.reserve(x.size());
    for (const auto& q : x) zc.push_back(mpz_class(q.get_num() * (lcm / q.get_den())));
    Poly g{std::move(zc)};
    g = g.primitive();
    if (g.leading() < 0) g = -g;
    return g;
}

RationalFunctionD::RationalFunctionD(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    reduce();
}

RationalFunctionD::RationalFunctionD(const mpq_class& q)
    : num_(Poly::constant(q.get_num())), den_(Poly::constant(q.get_den())) {
    reduce();
}

void RationalFunctionD::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    const Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0 || g.leading() != 1) {
        // poly_gcd returns a primitive polynomial; contents handled below.
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
    if (cg > 1) {
        num_ = num_.divide_exact(Poly::constant(cg));
        den_ = den_.divide_exact(Poly::constant(cg));
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunctionD RationalFunctionD::operator+(const RationalFunctionD& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalFunctionD RationalFunctionD::operator-(const RationalFunctionD& o) const {
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

RationalFunctionD RationalFunctionD::operator-() const { return {-num_, den_}; }

RationalFunctionD RationalFunctionD::operator*(const RationalFunctionD& o) const {
    return {num_ * o.num_, den_ * o.den_};
}

RationalFunctionD RationalFunctionD::operator/(const RationalFunctionD& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero rational function");
    return {num_ * o.den_, den_ * o.num_};
}

mpq_class RationalFunctionD::eval(const mpq_class& x) const {
    const mpq_class dv = den_.eval(x);
    if (dv == 0) throw std::domain_error("pole at evaluation point");
    return num_.eval(x) / dv;
}

mpq_class RationalFunctionD::as_rational() const {
    if (den_.degree() != 0 || num_.degree() > 0)
        throw std::domain_error("rational function is not a constant");
    if (num_.is_zero()) return 0;
    return mpq_class(num_.coeff(0)) / mpq_class(den_.coeff(0));
}

bool split_linear_factors(const Poly& p, mpz_class& scale, std::vector<LinearFactor>& out) {
    out.clear();
    if (p.is_zero() || p.degree() == 0) {
        scale = p.coeff(0);
        return true;
    }
    Poly rest = p;
    scale = 1;
    while (rest.degree() > 0) {
        // Rational roots -b/a: a | leading, b | constant term. Strip any
        // power of d first.
        if (rest.coeff(0) == 0) {
            Poly d = Poly::variable();
            rest = rest.divide_exact(d);
            if (!out.empty() && out.back().a == 1 && out.back().b == 0)
                ++out.back().multiplicity;
            else
                out.push_back({1, 0, 1});
            continue;
        }
        bool found = false;
        const mpz_class lead = rest.leading(), cons = rest.coeff(0);
        for (mpz_class a = 1; a <= abs(lead) && !found; ++a) {
            if (abs(lead) % a != 0) continue;
            for (mpz_class babs = 1; babs <= abs(cons) && !found; ++babs) {
                if (abs(cons) % babs != 0) continue;
                for (int sgn : {1, -1}) {
                    const mpz_class b = sgn * babs;
                    mpz_class g;
                    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                    if (g != 1) continue;
                    if (rest.eval(mpq_class(-b, a)) == 0) {
                        const Poly f = Poly::linear(a, b);
                        rest = rest.divide_exact(f);
                        if (!out.empty() && out.back().a == a && out.back().b == b)
                            ++out.back().multiplicity;
                        else
                            out.push_back({a, b, 1});
                        found = true;
                        break;
                    }
                }
            }
        }
        if (!found) return false;
    }
    scale = rest.coeff(0);
    // Merge repeated factors that were found out of order.
    std::sort(out.begin(), out.end(), [](const LinearFactor& x, const LinearFactor& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    std::vector<LinearFactor> merged;
    for (const auto& f : out) {
        if (!merged.empty() && merged.back().a == f.a && merged.back().b == f.b)
            merged.back().multiplicity += f.multiplicity;
        else
            merged.push_back(f);
    }
    out = std::move(merged);
    return true;
}

namespace {

std::string factor_string(const LinearFactor& f, const std::string& var) {
    std::string s;
    const bool bare = (f.a == 1 && f.b == 0);
    if (!bare) s += "(";
    if (f.a == 1)
        s += var;
    else
        s += f.a.get_str() + "*" + var;
    if (f.b > 0) s += " + " + f.b.get_str();
    if (f.b < 0) s += " - " + mpz_class(abs(f.b)).get_str();
    if (!bare) s += ")";
    if (f.multiplicity > 1) s += "^" + std::to_string(f.multiplicity);
    return s;
}

}  // namespace

std::string RationalFunctionD::to_string(const std::string& var) const {
    if (num_.is_zero()) return "0";
    if (den_.degree() == 0 && den_.coeff(0) == 1) return num_.to_string(var);
    std::string ns = num_.to_string(var);
    if (num_.degree() > 0) ns = "(" + ns + ")";
    mpz_class scale;
    std::vector<LinearFactor> factors;
    std::string ds;
    if (den_.degree() > 0 && split_linear_factors(den_, scale, factors)) {
        int terms = (scale != 1) ? 1 : 0;
        if (scale != 1) ds += scale.get_str();
        for (const auto& f : factors) {
            if (terms++) ds += "*";
            ds += factor_string(f, var);
        }
        if (terms > 1) ds = "(" + ds + ")";
    } else {
        ds = den_.to_string(var);
        if (den_.degree() > 0) ds = "(" + ds + ")";
    }
    return ns + "/" + ds;
}

}  // namespace haarmom

#pragma once

#include <map>
#include <memory>

#include "core/partition.hpp"
#include "ratfun/poly.hpp"

namespace haarmom {

/// Degree-n symmetric function written in the power-sum basis:
/// coefficient map ρ ⊢ n → rational; absent keys are zero.
struct PowerSumExpansion {
    int degree = 0;
    std::map<Partition, mpq_class> coeffs;

    mpq_class coeff(const Partition& rho) const {
        auto it = coeffs.find(rho);
        return it == coeffs.end() ? mpq_class(0) : it->second;
    }
};

// <p_λ, p_μ>_α = δ_{λμ} α^{ℓ(λ)} z_λ
mpq_class powersum_inner(const PowerSumExpansion& f, const PowerSumExpansion& g,
                         const mpq_class& alpha);

/// Jack polynomials of one degree, normalized to be monic on m_λ
/// (P-normalization), obtained by Gram-Schmidt against a linear
/// extension of dominance order in the α-deformed inner product.
class JackBasis {
public:
    static std::shared_ptr<const JackBasis> get(int n, const mpq_class& alpha);

    int degree() const { return n_; }
    const mpq_class& alpha() const { return alpha_; }
    const PowerSumExpansion& expansion(const Partition& lambda) const;

    // Coefficients of P_λ back in the monomial basis (for triangularity
    // checks): map μ → [m_μ] P_λ.
    std::map<Partition, mpq_class> monomial_coefficients(const Partition& lambda) const;

private:
    JackBasis(int n, mpq_class alpha);
    int n_;
    mpq_class alpha_;
    std::map<Partition, PowerSumExpansion> jack_;
};

// Convenience wrapper around JackBasis::get.
PowerSumExpansion jack_in_powersums(const Partition& lambda, const mpq_class& alpha);

// Π_{(i,j)∈λ} (d + α(j-1) - (i-1)), the principal specialization of the
// J-normalized Jack polynomial at 1^d; a polynomial in d over Q.
RationalFunctionD principal_specialization(const Partition& lambda, const mpq_class& alpha);

// s_λ(1^d) = principal_specialization(λ, 1) / H(λ)
RationalFunctionD schur_at_one(const Partition& lambda);

/// Transition data between power sums and monomial symmetric functions
/// in one degree; built once per degree and shared.
class PowersumMonomialTransition {
public:
    static std::shared_ptr<const PowersumMonomialTransition> get(int n);

    const std::vector<Partition>& order() const { return order_; }  // ascending lex
    // p_λ = Σ_μ p2m(λ, μ) m_μ
    const mpq_class& p2m(const Partition& lambda, const Partition& mu) const;
    // m_λ = Σ_μ m2p(λ, μ) p_μ
    const mpq_class& m2p(const Partition& lambda, const Partition& mu) const;

private:
    explicit PowersumMonomialTransition(int n);
    int index(const Partition& p) const;
    std::vector<Partition> order_;
    std::vector<std::vector<mpq_class>> p2m_, m2p_;
};

}  // namespace haarmom

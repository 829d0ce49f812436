#pragma once

#include <map>
#include <memory>

#include "core/matching.hpp"
#include "core/partition.hpp"
#include "core/permutation.hpp"

namespace haarmom {

/// Zonal spherical values of the Gelfand pair (S_{2n}, H_n) and their
/// twisted (sign-character) companions, as functions of coset type,
/// normalized to 1 on the identity coset (1^n).
///
/// α = 2:   ω_λ(ρ) = 2^{ℓ(ρ)} z_ρ [p_ρ]P_λ^{(2)} / (2^n n! [p_{1^n}]P_λ^{(2)})
/// α = 1/2: the twisted function factors as sgn(σ)·Ω_λ(ρ(σ)); the
///          coset-type part satisfies Ω_λ(ρ) = ω_{λ'}(ρ) and that is how
///          it is computed here. The permutation sign is applied by the
///          callers that sum over matchings.
class SphericalTable {
public:
    static std::shared_ptr<const SphericalTable> get(int n, const mpq_class& alpha);

    int degree() const { return n_; }
    const mpq_class& value(const Partition& lambda, const Partition& rho) const;

private:
    SphericalTable(int n, const mpq_class& alpha);
    int n_;
    std::map<std::pair<Partition, Partition>, mpq_class> values_;
};

mpq_class spherical_value(const Partition& lambda, const Partition& rho, const mpq_class& alpha);

// Group-averaged definition ω_λ^φ(σ) = (1/|H_n|) Σ_{h∈H_n} φ(h) χ(σh)
// with χ = χ_{2λ} for α = 2 and χ = χ_{λ∪λ}, φ = sgn for α = 1/2.
// Enumerates H_n (2^n n! elements); gated by max_n.
mpq_class spherical_value_direct(const Partition& lambda, const Permutation& sigma,
                                 const mpq_class& alpha, int max_n = 4);

// The 2^n n! elements of the hyperoctahedral group H_n ⊂ S_{2n}.
std::vector<Permutation> hyperoctahedral_elements(int n);

}  // namespace haarmom

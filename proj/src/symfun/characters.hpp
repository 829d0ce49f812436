#pragma once

#include <map>
#include <memory>

#include "core/partition.hpp"

namespace haarmom {

mpz_class hook_product(const Partition& lambda);

// χ_λ(1) = n!/H(λ)
mpz_class character_dimension(const Partition& lambda);

/// Full irreducible character table of S_n, built once per degree by the
/// Murnaghan-Nakayama recursion and then shared read-only.
class CharacterTable {
public:
    static std::shared_ptr<const CharacterTable> get(int n);

    int degree() const { return n_; }
    const mpz_class& value(const Partition& lambda, const Partition& mu) const;

private:
    explicit CharacterTable(int n);
    int n_;
    std::map<std::pair<Partition, Partition>, mpz_class> values_;
};

// Single character value; requires |λ| = |μ|.
mpz_class character(const Partition& lambda, const Partition& mu);

}  // namespace haarmom

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "core/partition.hpp"
#include "core/permutation.hpp"

namespace haarmom {

/// Perfect matching of {0..2n-1}: n disjoint pairs (a,b) with a < b,
/// stored sorted by first element. These index the left cosets of the
/// hyperoctahedral group H_n in S_{2n}.
class PairPartition {
public:
    PairPartition() = default;
    explicit PairPartition(std::vector<std::pair<int, int>> pairs);
    static PairPartition identity(int n);   // {0,1},{2,3},...

    int pair_count() const { return static_cast<int>(pairs_.size()); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    // One-line form a1 b1 a2 b2 ... as a permutation of {0..2n-1}.
    Permutation to_permutation() const;

    bool operator==(const PairPartition& o) const { return pairs_ == o.pairs_; }

private:
    std::vector<std::pair<int, int>> pairs_;
};

// All (2n-1)!! matchings, ordered lexicographically on one-line form.
std::vector<PairPartition> enumerate_matchings(int n);

// Streaming flavour for the larger stabilizer enumerations.
void for_each_matching(int n, const std::function<void(const PairPartition&)>& fn);

// Coset type of σ ∈ S_{2n}: components of the graph with red edges
// (2i, 2i+1) and blue edges (σ(2i), σ(2i+1)); a component on 2k
// vertices contributes a part k. Throws on odd size.
Partition coset_type(const Permutation& sigma);

}  // namespace haarmom

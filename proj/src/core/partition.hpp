#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace haarmom {

/// Integer partition: weakly decreasing positive parts. The empty
/// partition (weight 0) is a valid value and serves as recursion base.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition single_row(int n);
    static Partition ones(int n);          // (1^n)

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const;                 // 0-based, 0 beyond the length

    Partition conjugate() const;
    Partition doubled() const;             // 2λ = (2λ1, 2λ2, ...)
    Partition union_self() const;          // λ∪λ = (λ1, λ1, λ2, λ2, ...)
    Partition union_with(const Partition& other) const;  // sorted multiset union

    int multiplicity(int value) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Lexicographic; a linear extension of dominance on fixed weight.
    std::strong_ordering operator<=>(const Partition& o) const {
        if (auto c = parts_ <=> o.parts_; c != 0) return c;
        return std::strong_ordering::equal;
    }

    std::string to_string() const;         // "(3,2,1)" / "()"

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const;
};

// z_λ = Π i^{m_i} m_i!
mpz_class z_of(const Partition& lambda);

// μ ⊴ λ in dominance order; requires equal weights.
bool dominance_leq(const Partition& mu, const Partition& lambda);

// All partitions of n in descending lexicographic order, the order used
// for table columns. max_length < 0 means unbounded.
std::vector<Partition> partitions_of(int n, int max_length = -1);

// Box-removal predecessors in Young's lattice with the edge weights of
// the coset-class recursion: weight = 2·μ_−·m_{μ_−}(μ), or 1 when the
// removed box leaves an empty row.
std::vector<std::pair<Partition, long>> young_predecessors(const Partition& lambda);

mpz_class factorial(int n);
mpz_class double_factorial(int n);         // n!! with (-1)!! = 0!! = 1

}  // namespace haarmom

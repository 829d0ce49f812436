#include "doctest.h"

#include <set>

#include "core/matching.hpp"
#include "core/partition.hpp"
#include "core/permutation.hpp"

using namespace haarmom;

namespace {

// 1-based disjoint cycles -> Permutation on {0..m-1}.
Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int m) {
    std::vector<int> im(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) im[static_cast<std::size_t>(i)] = i;
    for (const auto& c : cycles)
        for (std::size_t k = 0; k < c.size(); ++k)
            im[static_cast<std::size_t>(c[k] - 1)] = c[(k + 1) % c.size()] - 1;
    return Permutation(im);
}

}  // namespace

TEST_CASE("conjugate") {
    CHECK(Partition({4, 3, 1}).conjugate() == Partition({3, 2, 2, 1}));
    CHECK(Partition({1, 1, 1}).conjugate() == Partition({3}));
    for (int n = 1; n <= 8; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("z_lambda") {
    CHECK(z_of(Partition({1, 1, 1})) == 6);
    CHECK(z_of(Partition({2})) == 2);
    CHECK(z_of(Partition({3, 2, 2, 1, 1})) == 48);
}

TEST_CASE("class sizes sum to group order") {
    for (int n = 1; n <= 8; ++n) {
        mpz_class total = 0;
        for (const auto& lam : partitions_of(n)) total += factorial(n) / z_of(lam);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Partition({1, 1}), Partition({2})));
    CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})));
    CHECK_FALSE(dominance_leq(Partition({3, 1}), Partition({2, 2})));
    CHECK_THROWS(dominance_leq(Partition({2}), Partition({1, 1, 1})));
}

TEST_CASE("partitions_of") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(5).size() == 7);
    const auto bounded = partitions_of(5, 2);
    CHECK(bounded.size() == 3);
    CHECK(bounded[0] == Partition({5}));
    CHECK(bounded[1] == Partition({4, 1}));
    CHECK(bounded[2] == Partition({3, 2}));
    // Descending lexicographic order, the appendix column order.
    const auto p5 = partitions_of(5);
    CHECK(p5.front() == Partition({5}));
    CHECK(p5.back() == Partition({1, 1, 1, 1, 1}));
    for (std::size_t i = 1; i < p5.size(); ++i) CHECK(p5[i - 1] > p5[i]);
}

TEST_CASE("young predecessors") {
    const auto preds21 = young_predecessors(Partition({2, 1}));
    REQUIRE(preds21.size() == 2);
    for (const auto& [mu, w] : preds21) {
        if (mu == Partition({1, 1})) CHECK(w == 4);
        if (mu == Partition({2})) CHECK(w == 1);
    }
    const auto preds1 = young_predecessors(Partition({1}));
    REQUIRE(preds1.size() == 1);
    CHECK(preds1[0].first == Partition());
    CHECK(preds1[0].second == 1);
    // Edges out of (2): into (3) weight 4, into (2,1) weight 1.
    for (const auto& [mu, w] : young_predecessors(Partition({3})))
        if (mu == Partition({2})) CHECK(w == 4);
    for (const auto& [mu, w] : young_predecessors(Partition({2, 1})))
        if (mu == Partition({2})) CHECK(w == 1);
}

TEST_CASE("cycle type") {
    CHECK(cycle_type(from_cycles({{1, 2, 4}, {3, 5}, {6, 9}}, 9)) == Partition({3, 2, 2, 1, 1}));
    CHECK(cycle_type(Permutation::identity(4)) == Partition({1, 1, 1, 1}));
    CHECK(cycle_type(from_cycles({{1, 2}, {3, 4}}, 4)) == Partition({2, 2}));
}

TEST_CASE("composition convention: right factor first") {
    const auto a = from_cycles({{1, 2}}, 3);   // swaps 1,2
    const auto b = from_cycles({{2, 3}}, 3);   // swaps 2,3
    const auto ab = a * b;                     // apply b, then a
    CHECK(ab(0) == 1);                         // 1 -> 1 -> 2 (0-based: 0 -> 0 -> 1)
    CHECK(ab(1) == 2);                         // 2 -> 3 -> 3
    CHECK(ab(2) == 0);                         // 3 -> 2 -> 1
    CHECK(a * a.inverse() == Permutation::identity(3));
}

TEST_CASE("coset type") {
    CHECK(coset_type(from_cycles({{1, 3, 4}, {2, 5}}, 6)) == Partition({3}));
    CHECK(coset_type(from_cycles({{1, 2, 4}, {5, 6}}, 6)) == Partition({2, 1}));
    for (int n = 1; n <= 4; ++n)
        CHECK(coset_type(Permutation::identity(2 * n)) == Partition::ones(n));
}

TEST_CASE("matchings: counts and canonical order") {
    const auto m2 = enumerate_matchings(2);
    REQUIRE(m2.size() == 3);
    CHECK(m2[0] == PairPartition({{0, 1}, {2, 3}}));
    CHECK(m2[1] == PairPartition({{0, 2}, {1, 3}}));
    CHECK(m2[2] == PairPartition({{0, 3}, {1, 2}}));
    CHECK(enumerate_matchings(1).size() == 1);
    CHECK(enumerate_matchings(5).size() == 945);
    for (int n = 1; n <= 6; ++n) {
        const auto all = enumerate_matchings(n);
        CHECK(mpz_class(static_cast<long>(all.size())) == double_factorial(2 * n - 1));
        std::set<std::vector<int>> distinct;
        for (const auto& m : all) distinct.insert(m.to_permutation().images());
        CHECK(distinct.size() == all.size());
        // Lexicographic on one-line form.
        std::vector<std::vector<int>> lines;
        for (const auto& m : all) lines.push_back(m.to_permutation().images());
        CHECK(std::is_sorted(lines.begin(), lines.end()));
    }
}

TEST_CASE("matching to permutation") {
    CHECK(PairPartition({{0, 1}, {2, 3}}).to_permutation() == Permutation::identity(4));
    CHECK(PairPartition({{0, 2}, {1, 3}}).to_permutation().images() == std::vector<int>{0, 2, 1, 3});
    CHECK(PairPartition({{0, 3}, {1, 2}}).to_permutation().images() == std::vector<int>{0, 3, 1, 2});
}

TEST_CASE("matching self-inverse composition has trivial coset type") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& m : enumerate_matchings(n)) {
            const auto p = m.to_permutation();
            CHECK(coset_type(p.inverse() * p) == Partition::ones(n));
        }
}

#include "core/matching.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace haarmom {

PairPartition::PairPartition(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
    const int m = 2 * pair_count();
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (auto& [a, b] : pairs_) {
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= m || seen[static_cast<std::size_t>(a)] || seen[static_cast<std::size_t>(b)])
            throw std::invalid_argument("pairs must partition {0..2n-1}");
        seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = true;
    }
    std::sort(pairs_.begin(), pairs_.end());
}

PairPartition PairPartition::identity(int n) {
    std::vector<std::pair<int, int>> p;
    p.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.emplace_back(2 * i, 2 * i + 1);
    return PairPartition(std::move(p));
}

Permutation PairPartition::to_permutation() const {
    std::vector<int> im;
    im.reserve(pairs_.size() * 2);
    for (const auto& [a, b] : pairs_) { im.push_back(a); im.push_back(b); }
    return Permutation(std::move(im));
}

namespace {

void rec_matchings(std::vector<int>& free_elems, std::vector<std::pair<int, int>>& cur,
                   const std::function<void(const PairPartition&)>& fn) {
    if (free_elems.empty()) {
        fn(PairPartition(cur));
        return;
    }
    // Always pair the smallest free element; partner choice in increasing
    // order yields lexicographic one-line order.
    const int a = free_elems.front();
    for (std::size_t k = 1; k < free_elems.size(); ++k) {
        const int b = free_elems[k];
        std::vector<int> rest;
        rest.reserve(free_elems.size() - 2);
        for (std::size_t j = 1; j < free_elems.size(); ++j)
            if (j != k) rest.push_back(free_elems[j]);
        cur.emplace_back(a, b);
        rec_matchings(rest, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

void for_each_matching(int n, const std::function<void(const PairPartition&)>& fn) {
    if (n <= 0) throw std::invalid_argument("matching size must be positive");
    std::vector<int> elems(static_cast<std::size_t>(2 * n));
    std::iota(elems.begin(), elems.end(), 0);
    std::vector<std::pair<int, int>> cur;
    cur.reserve(static_cast<std::size_t>(n));
    rec_matchings(elems, cur, fn);
}

std::vector<PairPartition> enumerate_matchings(int n) {
    std::vector<PairPartition> out;
    for_each_matching(n, [&](const PairPartition& m) { out.push_back(m); });
    return out;
}

Partition coset_type(const Permutation& sigma) {
    const int m = sigma.size();
    if (m % 2 != 0) throw std::invalid_argument("coset type needs even degree");
    std::vector<int> parent(static_cast<std::size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
    for (int i = 0; i < m / 2; ++i) {
        unite(2 * i, 2 * i + 1);                  // red
        unite(sigma(2 * i), sigma(2 * i + 1));    // blue
    }
    std::vector<int> size(static_cast<std::size_t>(m), 0);
    for (int v = 0; v < m; ++v) ++size[static_cast<std::size_t>(find(v))];
    std::vector<int> halves;
    for (int v = 0; v < m; ++v) {
        const int s = size[static_cast<std::size_t>(v)];
        if (s == 0) continue;
        assert(s % 2 == 0);
        halves.push_back(s / 2);
    }
    std::sort(halves.begin(), halves.end(), std::greater<int>());
    return Partition(std::move(halves));
}

}  // namespace haarmom

#include "symfun/characters.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace haarmom {

mpz_class hook_product(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    mpz_class h = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j)
            h *= (lambda.part(i) - j) + (conj.part(j) - i) - 1;
    return h;
}

mpz_class character_dimension(const Partition& lambda) {
    return factorial(lambda.weight()) / hook_product(lambda);
}

namespace {

// Beta numbers b_i = λ_i + (len - 1 - i), strictly decreasing, possibly
// padded with low entries. Border-strip removal of length r replaces a
// beta number b by b - r; the strip height parity is the number of beta
// numbers passed over.
struct MNContext {
    std::vector<int> class_parts;  // μ, processed from index k on
    std::map<std::pair<std::vector<int>, std::size_t>, mpz_class> memo;

    mpz_class chi(const std::vector<int>& beta, std::size_t k) {
        if (k == class_parts.size()) return 1;
        const auto key = std::make_pair(beta, k);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const int r = class_parts[k];
        mpz_class total = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            const int target = beta[i] - r;
            if (target < 0) continue;
            bool occupied = false;
            int passed = 0;
            for (std::size_t j = 0; j < beta.size(); ++j) {
                if (j == i) continue;
                if (beta[j] == target) { occupied = true; break; }
                if (beta[j] > target && beta[j] < beta[i]) ++passed;
            }
            if (occupied) continue;
            std::vector<int> nb(beta);
            nb[i] = target;
            std::sort(nb.begin(), nb.end(), std::greater<int>());
            const mpz_class sub = chi(nb, k + 1);
            if (passed % 2 == 0)
                total += sub;
            else
                total -= sub;
        }
        memo.emplace(key, total);
        return total;
    }
};

std::vector<int> beta_numbers(const Partition& lambda, int len) {
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda.part(i) + (len - 1 - i);
    return beta;
}

mpz_class murnaghan_nakayama(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("character: weight mismatch");
    if (lambda.weight() == 0) return 1;
    MNContext ctx;
    ctx.class_parts = mu.parts();
    return ctx.chi(beta_numbers(lambda, lambda.length()), 0);
}

std::mutex g_table_mutex;
std::unordered_map<int, std::shared_ptr<const CharacterTable>> g_tables;

}  // namespace

CharacterTable::CharacterTable(int n) : n_(n) {
    const auto parts = partitions_of(n);
    for (const auto& lambda : parts)
        for (const auto& mu : parts)
            values_.emplace(std::make_pair(lambda, mu), murnaghan_nakayama(lambda, mu));
}

std::shared_ptr<const CharacterTable> CharacterTable::get(int n) {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto& slot = g_tables[n];
    if (!slot) slot = std::shared_ptr<const CharacterTable>(new CharacterTable(n));
    return slot;
}

const mpz_class& CharacterTable::value(const Partition& lambda, const Partition& mu) const {
    auto it = values_.find(std::make_pair(lambda, mu));
    if (it == values_.end()) throw std::invalid_argument("character table: unknown pair");
    return it->second;
}

mpz_class character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("character: weight mismatch");
    if (lambda.weight() == 0) return 1;
    return CharacterTable::get(lambda.weight())->value(lambda, mu);
}

}  // namespace haarmom

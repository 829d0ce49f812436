#include "core/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace haarmom {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::single_row(int n) {
    return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

Partition Partition::ones(int n) {
    return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

int Partition::part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

Partition Partition::doubled() const {
    std::vector<int> r(parts_);
    for (int& p : r) p *= 2;
    return Partition(std::move(r));
}

Partition Partition::union_self() const {
    std::vector<int> r;
    r.reserve(parts_.size() * 2);
    for (int p : parts_) { r.push_back(p); r.push_back(p); }
    return Partition(std::move(r));
}

Partition Partition::union_with(const Partition& other) const {
    std::vector<int> r(parts_);
    r.insert(r.end(), other.parts_.begin(), other.parts_.end());
    std::sort(r.begin(), r.end(), std::greater<int>());
    return Partition(std::move(r));
}

int Partition::multiplicity(int value) const {
    int m = 0;
    for (int p : parts_) m += (p == value);
    return m;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

std::size_t PartitionHash::operator()(const Partition& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : p.parts()) h = h * 1099511628211ull + static_cast<std::size_t>(x) + 1;
    return h;
}

mpz_class z_of(const Partition& lambda) {
    mpz_class z = 1;
    const auto& parts = lambda.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const auto m = static_cast<unsigned long>(j - i);
        mpz_class ipow;
        mpz_ui_pow_ui(ipow.get_mpz_t(), static_cast<unsigned long>(parts[i]), m);
        z *= ipow * factorial(static_cast<int>(m));
        i = j;
    }
    return z;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw std::invalid_argument("dominance_leq requires equal weights");
    long sm = 0, sl = 0;
    const int len = std::max(mu.length(), lambda.length());
    for (int i = 0; i < len; ++i) {
        sm += mu.part(i);
        sl += lambda.part(i);
        if (sm > sl) return false;
    }
    return true;
}

namespace {

void gen_partitions(int n, int max_part, int max_length, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_length == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, max_length - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_length) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    if (n == 0) return {Partition()};
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, max_length < 0 ? n : max_length, cur, out);
    return out;
}

std::vector<std::pair<Partition, long>> young_predecessors(const Partition& lambda) {
    std::vector<std::pair<Partition, long>> out;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        // A box is removable from row i iff the result is still a partition.
        if (i + 1 < parts.size() && parts[i] == parts[i + 1]) continue;
        std::vector<int> mu(parts);
        mu[i] -= 1;
        Partition pred{[&] {
            std::vector<int> v(mu);
            v.erase(std::remove(v.begin(), v.end(), 0), v.end());
            return v;
        }()};
        const int mu_minus = parts[i] - 1;
        long w = 1;
        if (mu_minus > 0) w = 2L * mu_minus * pred.multiplicity(mu_minus);
        out.emplace_back(std::move(pred), w);
    }
    return out;
}

mpz_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(std::max(n, 0)));
    return r;
}

mpz_class double_factorial(int n) {
    if (n <= 0) return 1;
    mpz_class r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace haarmom

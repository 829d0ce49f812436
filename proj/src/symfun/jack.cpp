#include "symfun/jack.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "symfun/characters.hpp"

namespace haarmom {

mpq_class powersum_inner(const PowerSumExpansion& f, const PowerSumExpansion& g,
                         const mpq_class& alpha) {
    mpq_class acc = 0;
    for (const auto& [rho, cf] : f.coeffs) {
        const mpq_class cg = g.coeff(rho);
        if (cg == 0) continue;
        mpq_class apow = 1;
        for (int i = 0; i < rho.length(); ++i) apow *= alpha;
        acc += cf * cg * apow * mpq_class(z_of(rho));
    }
    return acc;
}

namespace {

// Expand Π p_{λ_i} as a polynomial in n variables, collecting terms by
// exponent vector. The coefficient of the sorted exponent vector μ is
// the m_μ-coefficient of p_λ.
std::map<std::vector<int>, mpz_class> expand_powersum(const Partition& lambda, int nvars) {
    std::map<std::vector<int>, mpz_class> terms;
    terms[std::vector<int>(static_cast<std::size_t>(nvars), 0)] = 1;
    for (int r : lambda.parts()) {
        std::map<std::vector<int>, mpz_class> next;
        for (const auto& [expo, c] : terms) {
            for (int v = 0; v < nvars; ++v) {
                std::vector<int> e(expo);
                e[static_cast<std::size_t>(v)] += r;
                next[std::move(e)] += c;
            }
        }
        terms = std::move(next);
    }
    return terms;
}

std::mutex g_trans_mutex;
std::unordered_map<int, std::shared_ptr<const PowersumMonomialTransition>> g_trans;

struct JackKey {
    int n;
    std::string alpha;
    bool operator==(const JackKey& o) const { return n == o.n && alpha == o.alpha; }
};
struct JackKeyHash {
    std::size_t operator()(const JackKey& k) const {
        return std::hash<std::string>()(k.alpha) * 31 + static_cast<std::size_t>(k.n);
    }
};

std::mutex g_jack_mutex;
std::unordered_map<JackKey, std::shared_ptr<const JackBasis>, JackKeyHash> g_jack;

}  // namespace

PowersumMonomialTransition::PowersumMonomialTransition(int n) {
    order_ = partitions_of(n);
    std::reverse(order_.begin(), order_.end());  // ascending lex
    const std::size_t k = order_.size();
    p2m_.assign(k, std::vector<mpq_class>(k, mpq_class(0)));
    for (std::size_t i = 0; i < k; ++i) {
        auto terms = expand_powersum(order_[i], n);
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<int> key(order_[j].parts());
            key.resize(static_cast<std::size_t>(n), 0);
            auto it = terms.find(key);
            if (it != terms.end()) p2m_[i][j] = mpq_class(it->second);
        }
    }
    // Invert by Gauss-Jordan over Q.
    m2p_.assign(k, std::vector<mpq_class>(k, mpq_class(0)));
    for (std::size_t i = 0; i < k; ++i) m2p_[i][i] = 1;
    auto a = p2m_;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && a[piv][col] == 0) ++piv;
        if (piv == k) throw std::logic_error("transition matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(m2p_[piv], m2p_[col]);
        const mpq_class inv = 1 / a[col][col];
        for (std::size_t j = 0; j < k; ++j) { a[col][j] *= inv; m2p_[col][j] *= inv; }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const mpq_class f = a[r][col];
            for (std::size_t j = 0; j < k; ++j) {
                a[r][j] -= f * a[col][j];
                m2p_[r][j] -= f * m2p_[col][j];
            }
        }
    }
    // m2p_ now holds (p2m)^{-1} as row-major: m_{order_[i]} = Σ_j m2p_[i][j] p_{order_[j]}.
}

std::shared_ptr<const PowersumMonomialTransition> PowersumMonomialTransition::get(int n) {
    std::lock_guard<std::mutex> lock(g_trans_mutex);
    auto& slot = g_trans[n];
    if (!slot) slot = std::shared_ptr<const PowersumMonomialTransition>(new PowersumMonomialTransition(n));
    return slot;
}

int PowersumMonomialTransition::index(const Partition& p) const {
    auto it = std::find(order_.begin(), order_.end(), p);
    if (it == order_.end()) throw std::invalid_argument("partition of wrong weight");
    return static_cast<int>(it - order_.begin());
}

const mpq_class& PowersumMonomialTransition::p2m(const Partition& lambda, const Partition& mu) const {
    return p2m_[static_cast<std::size_t>(index(lambda))][static_cast<std::size_t>(index(mu))];
}

const mpq_class& PowersumMonomialTransition::m2p(const Partition& lambda, const Partition& mu) const {
    return m2p_[static_cast<std::size_t>(index(lambda))][static_cast<std::size_t>(index(mu))];
}

JackBasis::JackBasis(int n, mpq_class alpha) : n_(n), alpha_(std::move(alpha)) {
    auto trans = PowersumMonomialTransition::get(n);
    const auto& order = trans->order();
    std::vector<PowerSumExpansion> done;
    std::vector<mpq_class> norms;
    for (const auto& lambda : order) {
        PowerSumExpansion cur;
        cur.degree = n;
        for (const auto& rho : order) {
            const mpq_class c = trans->m2p(lambda, rho);
            if (c != 0) cur.coeffs[rho] = c;
        }
        for (std::size_t j = 0; j < done.size(); ++j) {
            const mpq_class proj = powersum_inner(cur, done[j], alpha_) / norms[j];
            if (proj == 0) continue;
            for (const auto& [rho, c] : done[j].coeffs) {
                auto& slot = cur.coeffs[rho];
                slot -= proj * c;
                if (slot == 0) cur.coeffs.erase(rho);
            }
        }
        norms.push_back(powersum_inner(cur, cur, alpha_));
        if (norms.back() == 0) throw std::logic_error("degenerate inner product");
        jack_.emplace(lambda, cur);
        done.push_back(std::move(cur));
    }
}

std::shared_ptr<const JackBasis> JackBasis::get(int n, const mpq_class& alpha) {
    JackKey key{n, alpha.get_str()};
    std::lock_guard<std::mutex> lock(g_jack_mutex);
    auto& slot = g_jack[key];
    if (!slot) slot = std::shared_ptr<const JackBasis>(new JackBasis(n, alpha));
    return slot;
}

const PowerSumExpansion& JackBasis::expansion(const Partition& lambda) const {
    auto it = jack_.find(lambda);
    if (it == jack_.end()) throw std::invalid_argument("jack basis: wrong-degree partition");
    return it->second;
}

std::map<Partition, mpq_class> JackBasis::monomial_coefficients(const Partition& lambda) const {
    auto trans = PowersumMonomialTransition::get(n_);
    const auto& exp = expansion(lambda);
    std::map<Partition, mpq_class> out;
    for (const auto& mu : trans->order()) {
        mpq_class c = 0;
        for (const auto& [rho, cr] : exp.coeffs) c += cr * trans->p2m(rho, mu);
        if (c != 0) out[mu] = c;
    }
    return out;
}

PowerSumExpansion jack_in_powersums(const Partition& lambda, const mpq_class& alpha) {
    return JackBasis::get(lambda.weight(), alpha)->expansion(lambda);
}

RationalFunctionD principal_specialization(const Partition& lambda, const mpq_class& alpha) {
    // Each box contributes (q d + p(j-1) - q(i-1)) / q with α = p/q.
    const mpz_class p = alpha.get_num(), q = alpha.get_den();
    Poly num = Poly::constant(1);
    mpz_class den = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) {
            num = num * Poly::linear(q, p * j - q * i);
            den *= q;
        }
    return {num, Poly::constant(den)};
}

RationalFunctionD schur_at_one(const Partition& lambda) {
    return principal_specialization(lambda, 1) / RationalFunctionD(mpq_class(hook_product(lambda)));
}

}  // namespace haarmom

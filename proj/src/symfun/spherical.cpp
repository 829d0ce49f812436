#include "symfun/spherical.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "symfun/characters.hpp"
#include "symfun/jack.hpp"

namespace haarmom {

namespace {

bool is_zonal_alpha(const mpq_class& alpha) { return alpha == 2; }
bool is_twisted_alpha(const mpq_class& alpha) { return alpha == mpq_class(1, 2); }

std::mutex g_mutex;
std::unordered_map<long, std::shared_ptr<const SphericalTable>> g_tables;

}  // namespace

SphericalTable::SphericalTable(int n, const mpq_class& alpha) : n_(n) {
    const bool twisted = is_twisted_alpha(alpha);
    auto jack = JackBasis::get(n, 2);
    const auto rhos = partitions_of(n);
    const Partition ones = Partition::ones(n);
    const mpq_class norm_scale = mpq_class(factorial(n)) * (mpz_class(1) << n);
    for (const auto& lambda : rhos) {
        // Twisted values are the zonal values of the conjugate shape.
        const auto& exp = jack->expansion(twisted ? lambda.conjugate() : lambda);
        const mpq_class base = exp.coeff(ones) * norm_scale;
        if (base == 0) throw std::logic_error("spherical normalization vanished");
        for (const auto& rho : rhos) {
            mpq_class v = exp.coeff(rho) * mpq_class(z_of(rho)) * (mpz_class(1) << rho.length());
            values_.emplace(std::make_pair(lambda, rho), v / base);
        }
    }
}

std::shared_ptr<const SphericalTable> SphericalTable::get(int n, const mpq_class& alpha) {
    if (!is_zonal_alpha(alpha) && !is_twisted_alpha(alpha))
        throw std::invalid_argument("spherical tables exist for alpha = 2 and 1/2 only");
    const long key = n * 2 + (is_twisted_alpha(alpha) ? 1 : 0);
    std::lock_guard<std::mutex> lock(g_mutex);
    auto& slot = g_tables[key];
    if (!slot) slot = std::shared_ptr<const SphericalTable>(new SphericalTable(n, alpha));
    return slot;
}

const mpq_class& SphericalTable::value(const Partition& lambda, const Partition& rho) const {
    auto it = values_.find(std::make_pair(lambda, rho));
    if (it == values_.end()) throw std::invalid_argument("spherical table: unknown pair");
    return it->second;
}

mpq_class spherical_value(const Partition& lambda, const Partition& rho, const mpq_class& alpha) {
    if (lambda.weight() != rho.weight())
        throw std::invalid_argument("spherical_value: weight mismatch");
    return SphericalTable::get(lambda.weight(), alpha)->value(lambda, rho);
}

std::vector<Permutation> hyperoctahedral_elements(int n) {
    std::vector<Permutation> out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> im(static_cast<std::size_t>(2 * n));
            for (int i = 0; i < n; ++i) {
                const int target = perm[static_cast<std::size_t>(i)];
                const int swap = (mask >> i) & 1u;
                im[static_cast<std::size_t>(2 * i)] = 2 * target + swap;
                im[static_cast<std::size_t>(2 * i + 1)] = 2 * target + 1 - swap;
            }
            out.emplace_back(std::move(im));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

mpq_class spherical_value_direct(const Partition& lambda, const Permutation& sigma,
                                 const mpq_class& alpha, int max_n) {
    const int n = lambda.weight();
    if (sigma.size() != 2 * n) throw std::invalid_argument("sigma must lie in S_{2n}");
    if (n > max_n) throw std::invalid_argument("direct spherical oracle gated to small n");
    const bool twisted = is_twisted_alpha(alpha);
    if (!twisted && !is_zonal_alpha(alpha))
        throw std::invalid_argument("alpha must be 2 or 1/2");
    const Partition big = twisted ? lambda.union_self() : lambda.doubled();
    auto table = CharacterTable::get(2 * n);
    mpq_class acc = 0;
    for (const auto& h : hyperoctahedral_elements(n)) {
        const mpz_class chi = table->value(big, cycle_type(sigma * h));
        if (twisted && h.sign() < 0)
            acc -= mpq_class(chi);
        else
            acc += mpq_class(chi);
    }
    return acc / mpq_class(mpz_class(factorial(n) * (mpz_class(1) << n)));
}

}  // namespace haarmom

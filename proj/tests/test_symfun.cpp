#include "doctest.h"

#include "core/matching.hpp"
#include "symfun/characters.hpp"
#include "symfun/jack.hpp"
#include "symfun/spherical.hpp"

using namespace haarmom;

TEST_CASE("hook products") {
    CHECK(hook_product(Partition({5})) == 120);
    CHECK(hook_product(Partition({2, 1})) == 3);
    CHECK(hook_product(Partition({2, 2})) == 12);
}

TEST_CASE("character values") {
    CHECK(character(Partition({2}), Partition({2})) == 1);
    CHECK(character(Partition({1, 1}), Partition({2})) == -1);
    CHECK(character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(character(Partition({2, 2}), Partition({2, 2})) == 2);
    CHECK_THROWS(character(Partition({2}), Partition({1, 1, 1})));
}

TEST_CASE("character dimensions match hook lengths") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(character(lam, Partition::ones(n)) == factorial(n) / hook_product(lam));
}

TEST_CASE("first orthogonality") {
    for (int n = 1; n <= 6; ++n) {
        const auto parts = partitions_of(n);
        auto table = CharacterTable::get(n);
        for (const auto& lam : parts)
            for (const auto& nu : parts) {
                mpq_class acc = 0;
                for (const auto& mu : parts)
                    acc += mpq_class(factorial(n)) / mpq_class(z_of(mu)) *
                           mpq_class(table->value(lam, mu) * table->value(nu, mu));
                CHECK(acc == (lam == nu ? mpq_class(factorial(n)) : mpq_class(0)));
            }
    }
}

TEST_CASE("principal specialization") {
    const auto d = RationalFunctionD::variable();
    CHECK(principal_specialization(Partition({1}), 2) == d);
    CHECK(principal_specialization(Partition({1}), mpq_class(1, 2)) == d);
    CHECK(principal_specialization(Partition({2}), 2) == d * (d + RationalFunctionD(2)));
    CHECK(principal_specialization(Partition({1, 1}), 2) == d * (d - RationalFunctionD(1)));
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(principal_specialization(lam, 1) ==
                  RationalFunctionD(mpq_class(hook_product(lam))) * schur_at_one(lam));
}

TEST_CASE("schur at one") {
    const auto d = RationalFunctionD::variable();
    CHECK(schur_at_one(Partition({1})) == d);
    CHECK(schur_at_one(Partition({2})) == d * (d + RationalFunctionD(1)) / RationalFunctionD(2));
    CHECK(schur_at_one(Partition({1, 1})) == d * (d - RationalFunctionD(1)) / RationalFunctionD(2));
}

TEST_CASE("jack expansions") {
    // P_(1) = p_1
    const auto e1 = jack_in_powersums(Partition({1}), 2);
    CHECK(e1.coeff(Partition({1})) == 1);
    CHECK(e1.coeffs.size() == 1);

    // P_(2) at alpha=2 is proportional to p_1^2 + 2 p_2.
    const auto e2 = jack_in_powersums(Partition({2}), 2);
    const mpq_class c11 = e2.coeff(Partition({1, 1}));
    const mpq_class c2 = e2.coeff(Partition({2}));
    CHECK(c11 != 0);
    CHECK(c2 / c11 == 2);

    // Monic on m_λ.
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n)) {
            auto mono = JackBasis::get(n, 2)->monomial_coefficients(lam);
            CHECK(mono[lam] == 1);
        }
}

TEST_CASE("jack orthogonality") {
    for (const mpq_class alpha : {mpq_class(1), mpq_class(2), mpq_class(1, 2)})
        for (int n = 1; n <= 5; ++n) {
            auto basis = JackBasis::get(n, alpha);
            const auto parts = partitions_of(n);
            for (const auto& lam : parts)
                for (const auto& mu : parts) {
                    if (lam == mu) continue;
                    CHECK(powersum_inner(basis->expansion(lam), basis->expansion(mu), alpha) == 0);
                }
        }
}

TEST_CASE("jack triangularity in dominance order") {
    for (const mpq_class alpha : {mpq_class(2), mpq_class(1, 2)})
        for (int n = 1; n <= 5; ++n) {
            auto basis = JackBasis::get(n, alpha);
            for (const auto& lam : partitions_of(n))
                for (const auto& [mu, c] : basis->monomial_coefficients(lam)) {
                    if (c == 0) continue;
                    CHECK(dominance_leq(mu, lam));
                }
        }
}

TEST_CASE("spherical normalization at identity coset") {
    for (const mpq_class alpha : {mpq_class(2), mpq_class(1, 2)})
        for (int n = 1; n <= 5; ++n)
            for (const auto& lam : partitions_of(n))
                CHECK(spherical_value(lam, Partition::ones(n), alpha) == 1);
}

TEST_CASE("spherical spot values") {
    CHECK(spherical_value(Partition({1, 1}), Partition({2}), 2) == mpq_class(-1, 2));
    CHECK(spherical_value(Partition({2}), Partition({2}), 2) == 1);
    CHECK_THROWS(spherical_value(Partition({2}), Partition({1}), 2));
}

TEST_CASE("spherical values agree with the group-sum definition") {
    // Zonal: ω_λ(σ) is a function of the coset type. Twisted: the
    // group sum factors as sgn(σ)·(coset-type function).
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& m : enumerate_matchings(n)) {
                const auto sigma = m.to_permutation();
                const auto rho = coset_type(sigma);
                CHECK(spherical_value_direct(lam, sigma, 2) == spherical_value(lam, rho, 2));
                const mpq_class twisted = spherical_value_direct(lam, sigma, mpq_class(1, 2));
                const int sgn = sigma.sign();
                CHECK(twisted == mpq_class(sgn) * spherical_value(lam, rho, mpq_class(1, 2)));
            }
}

TEST_CASE("direct oracle is gated") {
    CHECK_THROWS(spherical_value_direct(Partition({5}), Permutation::identity(10), 2));
}

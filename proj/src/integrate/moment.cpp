#include "integrate/moment.hpp"

#include <algorithm>
#include <map>

namespace haarmom {

MomentSpec MomentSpec::unitary(std::vector<int> I, std::vector<int> J,
                               std::vector<int> Ibar, std::vector<int> Jbar) {
    MomentSpec s{Group::Unitary, std::move(I), std::move(J), std::move(Ibar), std::move(Jbar)};
    s.validate();
    return s;
}

MomentSpec MomentSpec::orthogonal(std::vector<int> I, std::vector<int> J) {
    MomentSpec s{Group::Orthogonal, std::move(I), std::move(J), {}, {}};
    s.validate();
    return s;
}

MomentSpec MomentSpec::symplectic(std::vector<int> I, std::vector<int> J) {
    MomentSpec s{Group::Symplectic, std::move(I), std::move(J), {}, {}};
    s.validate();
    return s;
}

int MomentSpec::half_degree() const {
    return group == Group::Unitary ? static_cast<int>(I.size())
                                   : static_cast<int>(I.size()) / 2;
}

void MomentSpec::validate() const {
    if (group == Group::Unitary) {
        if (I.size() != J.size() || Ibar.size() != Jbar.size())
            throw std::invalid_argument("row/column lists must have equal lengths");
        for (const auto* lst : {&I, &J, &Ibar, &Jbar})
            for (int v : *lst)
                if (v < 1) throw std::invalid_argument("unitary indices must be positive");
        return;
    }
    if (!Ibar.empty() || !Jbar.empty())
        throw std::invalid_argument("conjugated entries exist only for the unitary group");
    if (I.size() != J.size())
        throw std::invalid_argument("index lists must have equal lengths");
    for (const auto* lst : {&I, &J})
        for (int v : *lst) {
            if (group == Group::Orthogonal && v < 1)
                throw std::invalid_argument("orthogonal indices must be positive");
            if (group == Group::Symplectic && v == 0)
                throw std::invalid_argument("symplectic indices must be nonzero");
        }
}

int delta_matching(const std::vector<int>& I, const PairPartition& m, Group g) {
    if (g == Group::Unitary) throw std::invalid_argument("matching delta is for O/Sp");
    int neg = 0;
    for (const auto& [a, b] : m.pairs()) {
        const int x = I[static_cast<std::size_t>(a)], y = I[static_cast<std::size_t>(b)];
        if (g == Group::Orthogonal) {
            if (x != y) return 0;
        } else {
            if (x != -y) return 0;
            if (x < 0) ++neg;
        }
    }
    return (g == Group::Symplectic && neg % 2 != 0) ? -1 : 1;
}

bool delta_unitary(const std::vector<int>& I, const std::vector<int>& Ibar,
                   const Permutation& sigma) {
    for (std::size_t k = 0; k < I.size(); ++k)
        if (I[k] != Ibar[static_cast<std::size_t>(sigma(static_cast<int>(k)))]) return false;
    return true;
}

namespace {

std::map<int, std::vector<int>> positions_by_value(const std::vector<int>& list) {
    std::map<int, std::vector<int>> pos;
    for (std::size_t i = 0; i < list.size(); ++i) pos[list[i]].push_back(static_cast<int>(i));
    return pos;
}

// All ways to extend `pairs` with a perfect matching of `elems`
// (within one value class).
void matchings_of(std::vector<int> elems, std::vector<std::pair<int, int>>& pairs,
                  const std::function<void()>& done) {
    if (elems.empty()) { done(); return; }
    const int a = elems.front();
    for (std::size_t k = 1; k < elems.size(); ++k) {
        std::vector<int> rest;
        for (std::size_t j = 1; j < elems.size(); ++j)
            if (j != k) rest.push_back(elems[j]);
        pairs.emplace_back(a, elems[k]);
        matchings_of(std::move(rest), pairs, done);
        pairs.pop_back();
    }
}

// All bijections of positions `from` onto `to`, appended as pairs.
void bijections_of(const std::vector<int>& from, std::vector<int> to,
                   std::vector<std::pair<int, int>>& pairs, std::size_t k,
                   const std::function<void()>& done) {
    if (k == from.size()) { done(); return; }
    for (std::size_t i = 0; i < to.size(); ++i) {
        std::vector<int> rest;
        for (std::size_t j = 0; j < to.size(); ++j)
            if (j != i) rest.push_back(to[j]);
        pairs.emplace_back(from[k], to[i]);
        bijections_of(from, std::move(rest), pairs, k + 1, done);
        pairs.pop_back();
    }
}

}  // namespace

void for_each_value_matching(const std::vector<int>& list, Group g,
                             const std::function<void(const PairPartition&)>& fn) {
    if (list.empty()) return;
    std::vector<std::vector<std::pair<int, int>>> groups;  // per-class position pairings
    const auto pos = positions_by_value(list);
    if (g == Group::Orthogonal) {
        for (const auto& [v, ps] : pos)
            if (ps.size() % 2 != 0) return;
    } else {
        for (const auto& [v, ps] : pos) {
            if (v < 0) continue;
            auto it = pos.find(-v);
            if (it == pos.end() || it->second.size() != ps.size()) return;
        }
        for (const auto& [v, ps] : pos)
            if (v < 0 && pos.find(-v) == pos.end()) return;
    }

    // Recurse value class by value class.
    std::vector<std::pair<int, int>> pairs;
    std::function<void(std::map<int, std::vector<int>>::const_iterator)> rec =
        [&](std::map<int, std::vector<int>>::const_iterator it) {
            while (it != pos.end() && (g == Group::Symplectic && it->first < 0)) ++it;
            if (it == pos.end()) {
                fn(PairPartition(pairs));
                return;
            }
            auto next = std::next(it);
            if (g == Group::Orthogonal) {
                matchings_of(it->second, pairs, [&] { rec(next); });
            } else {
                bijections_of(it->second, pos.at(-it->first), pairs, 0, [&] { rec(next); });
            }
        };
    rec(pos.begin());
}

StabilizerCosets::StabilizerCosets(std::vector<int> list, Group g)
    : group_(g), list_(std::move(list)) {
    if (g == Group::Unitary) throw std::invalid_argument("use the two-list constructor for U");
    count_ = 1;
    const auto pos = positions_by_value(list_);
    if (g == Group::Orthogonal) {
        for (const auto& [v, ps] : pos) {
            if (ps.size() % 2 != 0) { count_ = 0; return; }
            count_ *= double_factorial(static_cast<int>(ps.size()) - 1);
        }
    } else {
        for (const auto& [v, ps] : pos) {
            if (v < 0) continue;
            auto it = pos.find(-v);
            if (it == pos.end() || it->second.size() != ps.size()) { count_ = 0; return; }
            count_ *= factorial(static_cast<int>(ps.size()));
        }
        for (const auto& [v, ps] : pos)
            if (v < 0 && pos.find(-v) == pos.end()) { count_ = 0; return; }
    }
}

StabilizerCosets::StabilizerCosets(std::vector<int> list, std::vector<int> barred)
    : group_(Group::Unitary), list_(std::move(list)), barred_(std::move(barred)) {
    count_ = 1;
    if (list_.size() != barred_.size()) { count_ = 0; return; }
    const auto pos = positions_by_value(list_);
    const auto posb = positions_by_value(barred_);
    if (pos.size() != posb.size()) { count_ = 0; return; }
    for (const auto& [v, ps] : pos) {
        auto it = posb.find(v);
        if (it == posb.end() || it->second.size() != ps.size()) { count_ = 0; return; }
        count_ *= factorial(static_cast<int>(ps.size()));
    }
}

void StabilizerCosets::for_each_matching(
    const std::function<void(const PairPartition&, int)>& fn) const {
    if (group_ == Group::Unitary) throw std::logic_error("matching enumeration is for O/Sp");
    if (count_ == 0) return;
    for_each_value_matching(list_, group_, [&](const PairPartition& m) {
        fn(m, group_ == Group::Symplectic ? delta_matching(list_, m, group_) : 1);
    });
}

void StabilizerCosets::for_each_permutation(
    const std::function<void(const Permutation&)>& fn) const {
    if (group_ != Group::Unitary) throw std::logic_error("permutation enumeration is for U");
    if (count_ == 0) return;
    const auto pos = positions_by_value(list_);
    const auto posb = positions_by_value(barred_);
    std::vector<std::pair<int, int>> assignment;  // (position in I, position in Ibar)
    std::function<void(std::map<int, std::vector<int>>::const_iterator)> rec =
        [&](std::map<int, std::vector<int>>::const_iterator it) {
            if (it == pos.end()) {
                std::vector<int> im(list_.size());
                for (const auto& [a, b] : assignment) im[static_cast<std::size_t>(a)] = b;
                fn(Permutation(std::move(im)));
                return;
            }
            auto next = std::next(it);
            bijections_of(it->second, posb.at(it->first), assignment, 0, [&] { rec(next); });
        };
    rec(pos.begin());
}

mpz_class TypeCounts::total() const {
    mpz_class t = 0;
    for (const auto& [p, c] : counts) t += c;
    return t;
}

TypeCounts direct_type_counts(const MomentSpec& spec, const Budget& budget) {
    TypeCounts out;
    out.n = spec.half_degree();
    if (spec.group == Group::Unitary) {
        StabilizerCosets rows(spec.I, spec.Ibar), cols(spec.J, spec.Jbar);
        if (!rows.exists() || !cols.exists()) return out;
        if (rows.count() * cols.count() > budget.direct_pairs)
            throw BudgetExceeded("stabilizer pair enumeration over budget");
        std::vector<Permutation> sigmas, taus;
        rows.for_each_permutation([&](const Permutation& s) { sigmas.push_back(s); });
        cols.for_each_permutation([&](const Permutation& t) { taus.push_back(t); });
        for (const auto& s : sigmas) {
            const Permutation sinv = s.inverse();
            for (const auto& t : taus) out.counts[cycle_type(sinv * t)] += 1;
        }
        return out;
    }

    if (spec.I.size() % 2 != 0) return out;  // odd degree: no pairing exists
    StabilizerCosets rows(spec.I, spec.group), cols(spec.J, spec.group);
    if (!rows.exists() || !cols.exists()) return out;
    if (rows.count() * cols.count() > budget.direct_pairs)
        throw BudgetExceeded("stabilizer pair enumeration over budget");
    std::vector<std::pair<Permutation, int>> sigmas, taus;
    rows.for_each_matching([&](const PairPartition& m, int sign) {
        sigmas.emplace_back(m.to_permutation(), sign);
    });
    cols.for_each_matching([&](const PairPartition& m, int sign) {
        taus.emplace_back(m.to_permutation(), sign);
    });
    const bool sympl = spec.group == Group::Symplectic;
    for (const auto& [sp, ssign] : sigmas) {
        const Permutation sinv = sp.inverse();
        const int sw = sympl ? ssign * sp.sign() : 1;
        for (const auto& [tp, tsign] : taus) {
            const int w = sympl ? sw * tsign * tp.sign() : 1;
            out.counts[coset_type(sinv * tp)] += w;
        }
    }
    return out;
}

RationalFunctionD integrate_monomial_direct(const MomentSpec& spec, const DimMode& dm,
                                            WeingartenStore& store, const Budget& budget) {
    spec.validate();
    const int n = spec.half_degree();
    if (n == 0) return {1};
    if (n > budget.max_n)
        throw BudgetExceeded("monomial half-degree exceeds the configured bound");
    if (!dm.is_symbolic) {
        for (const auto* lst : {&spec.I, &spec.J, &spec.Ibar, &spec.Jbar})
            for (int v : *lst)
                if (std::abs(v) > dm.d)
                    throw std::invalid_argument("index exceeds the matrix dimension");
    }
    if (spec.group == Group::Unitary && spec.I.size() != spec.Ibar.size()) return {};
    if (spec.group != Group::Unitary && spec.I.size() % 2 != 0) return {};

    const TypeCounts counts = direct_type_counts(spec, budget);
    if (counts.counts.empty()) return {};
    auto table = store.get(spec.group, n, dm);
    RationalFunctionD acc;
    for (const auto& [type, c] : counts.counts) {
        if (c == 0) continue;
        acc += table->value(type) * RationalFunctionD(mpq_class(c));
    }
    return acc;
}

std::map<Partition, mpz_class> coset_class_counts_of_list(const std::vector<int>& list) {
    std::map<Partition, mpz_class> out;
    for_each_value_matching(list, Group::Orthogonal, [&](const PairPartition& m) {
        out[coset_type(m.to_permutation())] += 1;
    });
    return out;
}

}  // namespace haarmom

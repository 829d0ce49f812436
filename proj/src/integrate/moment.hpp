#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "core/errors.hpp"
#include "core/group.hpp"
#include "core/matching.hpp"
#include "core/partition.hpp"
#include "core/permutation.hpp"
#include "weingarten/weingarten.hpp"

namespace haarmom {

/// One monomial moment. For U the four index lists I, J (unbarred rows,
/// columns) and Ibar, Jbar (conjugated factors) all have length n; for
/// O and Sp only I, J are used and have even length 2n. Sp indices are
/// signed and nonzero.
struct MomentSpec {
    Group group = Group::Orthogonal;
    std::vector<int> I, J, Ibar, Jbar;

    static MomentSpec unitary(std::vector<int> I, std::vector<int> J,
                              std::vector<int> Ibar, std::vector<int> Jbar);
    static MomentSpec orthogonal(std::vector<int> I, std::vector<int> J);
    static MomentSpec symplectic(std::vector<int> I, std::vector<int> J);

    int half_degree() const;   // n
    void validate() const;     // index alphabet and length checks
};

// δ for the matching action on a length-2n list. For O: +1 when every
// pair carries equal values. For Sp: pairs must satisfy I[a] = -I[b];
// the sign is (-1)^{#pairs whose first entry is negative}.
int delta_matching(const std::vector<int>& I, const PairPartition& m, Group g);

// δ for the unitary row (or column) action: true iff I[k] = Ibar[σ(k)].
bool delta_unitary(const std::vector<int>& I, const std::vector<int>& Ibar,
                   const Permutation& sigma);

/// The set {σ : δ_I(σ) ≠ 0} for one side of a moment. Enumeration is
/// lazy; counts come from the closed forms
///   O:  Π_v (mult(v) - 1)!!      (0 if any multiplicity is odd)
///   Sp: Π_{v>0} mult(v)!         (0 unless mult(v) = mult(-v) for all v)
///   U:  Π_v mult(v)!             (0 unless I and Ibar agree as multisets)
class StabilizerCosets {
public:
    // O/Sp side over a single list.
    StabilizerCosets(std::vector<int> list, Group g);
    // U side over a row (or column) pair.
    StabilizerCosets(std::vector<int> list, std::vector<int> barred);

    bool exists() const { return count_ != 0; }
    const mpz_class& count() const { return count_; }

    // O/Sp: every matching with δ ≠ 0, with its δ sign (always +1 for O).
    void for_each_matching(const std::function<void(const PairPartition&, int sign)>& fn) const;
    // U: every σ with δ = 1.
    void for_each_permutation(const std::function<void(const Permutation&)>& fn) const;

private:
    Group group_;
    std::vector<int> list_, barred_;
    mpz_class count_;
};

/// Signed type-class counts: for U the number of stabilizer pairs (σ,τ)
/// with given cycle type of σ⁻¹τ; for O the same with coset types; for
/// Sp the counts are weighted by δ and matching permutation signs.
struct TypeCounts {
    int n = 0;
    std::map<Partition, mpz_class> counts;
    mpz_class total() const;
};

// Exhaustive double enumeration. Throws BudgetExceeded past
// budget.direct_pairs.
TypeCounts direct_type_counts(const MomentSpec& spec, const Budget& budget);

// Direct double-sum evaluation: Σ_type counts(type)·W(type). The
// Weingarten table is only fetched when a structurally nonzero pairing
// exists. Numeric d additionally requires all indices to fit in the
// matrix dimension.
RationalFunctionD integrate_monomial_direct(const MomentSpec& spec, const DimMode& dm,
                                            WeingartenStore& store, const Budget& budget);

// Matchings on {0..2n-1} that pair equal values of `list` (O) or values
// with their negatives (Sp), one at a time.
void for_each_value_matching(const std::vector<int>& list, Group g,
                             const std::function<void(const PairPartition&)>& fn);

// Class counts of σ ∈ S_I by coset type against the identity matching:
// C_I(λ) = #{σ pairing equal values of I : coset type(σ) = λ}.
std::map<Partition, mpz_class> coset_class_counts_of_list(const std::vector<int>& list);

}  // namespace haarmom

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>

#include "core/group.hpp"
#include "core/partition.hpp"
#include "ratfun/poly.hpp"

namespace haarmom {

/// One Weingarten function as a table over type partitions of n:
/// cycle types for U, coset types for O and Sp. Values are reduced
/// rational functions of d (constants in numeric mode).
class WeingartenTable {
public:
    WeingartenTable(Group g, int n, DimMode dm, std::map<Partition, RationalFunctionD> values);

    Group group() const { return group_; }
    int degree() const { return n_; }
    const DimMode& dim_mode() const { return dim_; }
    const RationalFunctionD& value(const Partition& type) const;
    const std::map<Partition, RationalFunctionD>& values() const { return values_; }

    void write(std::ostream& os) const;
    static WeingartenTable read(std::istream& is);

private:
    Group group_;
    int n_;
    DimMode dim_;
    std::map<Partition, RationalFunctionD> values_;
};

// Spectral formulas for a single type. In numeric mode the λ-sum is
// restricted to ℓ(λ) ≤ d; symbolic results are the d ≥ n functions.
RationalFunctionD weingarten_unitary(const Partition& mu, const DimMode& dm);
RationalFunctionD weingarten_orthogonal(const Partition& rho, const DimMode& dm);

// For Sp(2d). The principal specialization enters through
// Π_{(i,j)∈λ} (2d + (j-1) - 2(i-1)), and the coset-type part of the
// twisted spherical function is used; matching permutation signs are
// applied by the summation layers, so the table itself is sign-free.
RationalFunctionD weingarten_symplectic(const Partition& rho, const DimMode& dm);

RationalFunctionD weingarten_value(Group g, const Partition& type, const DimMode& dm);

/// Cache of Weingarten tables keyed by (group, n, dim-mode), with
/// get-or-build semantics (construction happens under the lock, exactly
/// once per key). When a cache directory is set, tables are loaded from
/// and saved to "wg_<tag>_<n>_<dim>.txt" in the documented text format.
class WeingartenStore {
public:
    WeingartenStore() = default;
    explicit WeingartenStore(std::filesystem::path cache_dir);

    std::shared_ptr<const WeingartenTable> get(Group g, int n, const DimMode& dm);
    long build_count() const;   // tables built (not served from memory), for tests

private:
    std::filesystem::path cache_dir_;
    mutable std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const WeingartenTable>> tables_;
    long builds_ = 0;
};

// Process-wide store used when no engine-specific store is supplied.
WeingartenStore& default_weingarten_store();

}  // namespace haarmom

#pragma once

#include <vector>

#include "core/partition.hpp"

namespace haarmom {

/// Permutation of {0..m-1} in one-line form. Composition is
/// (a*b)(x) = a(b(x)): the right factor applies first.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int m);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    Permutation operator*(const Permutation& rhs) const;
    bool operator==(const Permutation& o) const { return images_ == o.images_; }

    std::vector<std::vector<int>> cycles() const;   // all cycles incl. fixed points
    int sign() const;                                // (-1)^{m - #cycles}

private:
    std::vector<int> images_;
};

Partition cycle_type(const Permutation& sigma);

}  // namespace haarmom

#include "core/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace haarmom {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("one-line form is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> im(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) im[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (size() != rhs.size()) throw std::invalid_argument("size mismatch in composition");
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[static_cast<std::size_t>(i)] = (*this)(rhs(i));
    return Permutation(std::move(im));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> cyc;
        int x = i;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            cyc.push_back(x);
            x = (*this)(x);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

int Permutation::sign() const {
    const int c = static_cast<int>(cycles().size());
    return ((size() - c) % 2 == 0) ? 1 : -1;
}

Partition cycle_type(const Permutation& sigma) {
    std::vector<int> lens;
    for (const auto& c : sigma.cycles()) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

}  // namespace haarmom

#pragma once

#include <stdexcept>
#include <string>

namespace haarmom {

enum class Group { Unitary, Orthogonal, Symplectic };

inline char group_tag(Group g) {
    switch (g) {
        case Group::Unitary: return 'U';
        case Group::Orthogonal: return 'O';
        case Group::Symplectic: return 'S';
    }
    throw std::logic_error("bad group");
}

inline std::string group_name(Group g) {
    switch (g) {
        case Group::Unitary: return "U";
        case Group::Orthogonal: return "O";
        case Group::Symplectic: return "Sp";
    }
    throw std::logic_error("bad group");
}

inline Group group_from_name(const std::string& s) {
    if (s == "U" || s == "u") return Group::Unitary;
    if (s == "O" || s == "o") return Group::Orthogonal;
    if (s == "Sp" || s == "sp" || s == "SP" || s == "S") return Group::Symplectic;
    throw std::invalid_argument("unknown group '" + s + "' (expected U, O or Sp)");
}

/// Dimension parameter: the formal symbol d, or a concrete positive
/// integer. Numeric mode enables the ℓ(λ) ≤ d truncation of the
/// Weingarten sums.
struct DimMode {
    bool is_symbolic = true;
    int d = 0;

    static DimMode symbolic() { return {}; }
    static DimMode numeric(int d) {
        if (d < 1) throw std::invalid_argument("dimension must be a positive integer");
        return {false, d};
    }
    bool operator==(const DimMode& o) const {
        return is_symbolic == o.is_symbolic && (is_symbolic || d == o.d);
    }
    std::string to_string() const { return is_symbolic ? "d" : std::to_string(d); }
};

}  // namespace haarmom

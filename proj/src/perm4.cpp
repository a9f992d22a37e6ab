#include "deficit/perm4.hpp"

#include <algorithm>

#include "deficit/errors.hpp"

namespace deficit {

const std::array<Perm4, 24>& Perm4::all() {
    static const std::array<Perm4, 24> table = [] {
        std::array<Perm4, 24> t{};
        std::array<std::uint8_t, 4> img = {0, 1, 2, 3};
        int n = 0;
        do {
            t[static_cast<std::size_t>(n++)] = Perm4(img);
        } while (std::next_permutation(img.begin(), img.end()));
        return t;
    }();
    return table;
}

int Perm4::index() const {
    const auto& table = all();
    for (int i = 0; i < 24; ++i)
        if (table[static_cast<std::size_t>(i)] == *this) return i;
    return -1;  // unreachable for valid permutations
}

Perm4 Perm4::from_index(int idx) {
    return all()[static_cast<std::size_t>(idx)];
}

Perm4 Perm4::parse(const std::string& s) {
    if (s.size() != 4) throw Error(ErrorCode::ParseError, "permutation must have 4 digits: '" + s + "'");
    Perm4 p;
    for (int i = 0; i < 4; ++i) {
        char c = s[static_cast<std::size_t>(i)];
        if (c < '0' || c > '3') throw Error(ErrorCode::ParseError, "permutation digit out of range: '" + s + "'");
        p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(c - '0');
    }
    if (!p.is_valid()) throw Error(ErrorCode::ParseError, "not a permutation of 0123: '" + s + "'");
    return p;
}

}  // namespace deficit

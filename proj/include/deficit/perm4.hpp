#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace deficit {

// Permutation of {0,1,2,3}, stored by image. Gluing maps between tetrahedra
// are always elements of S4; the text format serializes them as the
// 4-character image string, e.g. "0132".
class Perm4 {
  public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}
    constexpr explicit Perm4(std::array<std::uint8_t, 4> img) : img_(img) {}
    constexpr Perm4(int a, int b, int c, int d)
        : img_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
               static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

    constexpr int operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }

    constexpr bool is_valid() const {
        int seen = 0;
        for (int i = 0; i < 4; ++i) {
            if (img_[static_cast<std::size_t>(i)] > 3) return false;
            seen |= 1 << img_[static_cast<std::size_t>(i)];
        }
        return seen == 0xF;
    }

    constexpr Perm4 inverse() const {
        Perm4 out;
        for (int i = 0; i < 4; ++i) out.img_[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
        return out;
    }

    // Composition: (*this)(other(x)).
    constexpr Perm4 after(const Perm4& other) const {
        Perm4 out;
        for (int i = 0; i < 4; ++i)
            out.img_[static_cast<std::size_t>(i)] = img_[other.img_[static_cast<std::size_t>(i)]];
        return out;
    }

    constexpr bool is_identity() const {
        return img_[0] == 0 && img_[1] == 1 && img_[2] == 2 && img_[3] == 3;
    }

    // Lexicographic index in S4, 0..23.
    int index() const;
    static Perm4 from_index(int idx);

    std::string to_string() const {
        std::string s(4, '0');
        for (int i = 0; i < 4; ++i) s[static_cast<std::size_t>(i)] = static_cast<char>('0' + img_[static_cast<std::size_t>(i)]);
        return s;
    }
    // Parses "abcd" with digits forming a permutation of 0123; throws ParseError otherwise.
    static Perm4 parse(const std::string& s);

    friend constexpr bool operator==(const Perm4& a, const Perm4& b) { return a.img_ == b.img_; }
    friend constexpr bool operator!=(const Perm4& a, const Perm4& b) { return !(a == b); }
    friend constexpr bool operator<(const Perm4& a, const Perm4& b) { return a.img_ < b.img_; }

    static const std::array<Perm4, 24>& all();

  private:
    std::array<std::uint8_t, 4> img_;
};

}  // namespace deficit

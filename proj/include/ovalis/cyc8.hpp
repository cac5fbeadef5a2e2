#ifndef OVALIS_CYC8_HPP
#define OVALIS_CYC8_HPP

#include <array>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace ovalis {

// Exact arithmetic in Z[zeta] where zeta is a primitive 8th root of unity.
// An element is c0 + c1*zeta + c2*zeta^2 + c3*zeta^3; products reduce through
// zeta^4 = -1.  The Gaussian integers embed as c0 + c2*zeta^2 (zeta^2 = i),
// and sqrt(2) = zeta - zeta^3, since (zeta - zeta^3)^2 = 2.
struct Cyc8 {
    std::array<std::int64_t, 4> c{0, 0, 0, 0};

    constexpr Cyc8() = default;
    constexpr Cyc8(std::int64_t a0, std::int64_t a1, std::int64_t a2, std::int64_t a3)
        : c{a0, a1, a2, a3} {}

    static constexpr Cyc8 integer(std::int64_t n) { return {n, 0, 0, 0}; }
    static constexpr Cyc8 gaussian(std::int64_t re, std::int64_t im) { return {re, 0, im, 0}; }
    static constexpr Cyc8 sqrt2() { return {0, 1, 0, -1}; }

    static constexpr Cyc8 zeta_pow(int k) {
        k %= 8;
        if (k < 0) k += 8;
        Cyc8 z;
        z.c[static_cast<std::size_t>(k % 4)] = (k < 4) ? 1 : -1;
        return z;
    }

    friend constexpr Cyc8 operator+(const Cyc8& a, const Cyc8& b) {
        return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
    }
    friend constexpr Cyc8 operator-(const Cyc8& a, const Cyc8& b) {
        return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
    }
    friend constexpr Cyc8 operator-(const Cyc8& a) { return {-a.c[0], -a.c[1], -a.c[2], -a.c[3]}; }

    friend constexpr Cyc8 operator*(const Cyc8& a, const Cyc8& b) {
        Cyc8 out;
        for (std::size_t i = 0; i < 4; ++i) {
            if (a.c[i] == 0) continue;
            for (std::size_t j = 0; j < 4; ++j) {
                const std::size_t k = i + j;
                if (k < 4)
                    out.c[k] += a.c[i] * b.c[j];
                else
                    out.c[k - 4] -= a.c[i] * b.c[j];
            }
        }
        return out;
    }

    friend constexpr bool operator==(const Cyc8&, const Cyc8&) = default;

    // Complex conjugation: zeta -> zeta^-1 = -zeta^3.
    constexpr Cyc8 conj() const { return {c[0], -c[3], -c[2], -c[1]}; }

    constexpr bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
    constexpr bool is_rational_integer() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }

    constexpr Cyc8 pow(unsigned e) const {
        Cyc8 acc = integer(1);
        Cyc8 base = *this;
        while (e != 0) {
            if (e & 1u) acc = acc * base;
            base = base * base;
            e >>= 1u;
        }
        return acc;
    }

    std::string to_string() const {
        static const char* unit[4] = {"", "z", "z^2", "z^3"};
        std::string out;
        for (std::size_t i = 0; i < 4; ++i) {
            if (c[i] == 0) continue;
            if (!out.empty()) out += (c[i] > 0) ? " + " : " - ";
            else if (c[i] < 0) out += "-";
            const std::int64_t mag = std::abs(c[i]);
            if (mag != 1 || i == 0) out += std::to_string(mag);
            out += unit[i];
        }
        return out.empty() ? "0" : out;
    }
};

}  // namespace ovalis

#endif

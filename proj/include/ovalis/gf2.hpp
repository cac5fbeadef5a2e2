#ifndef OVALIS_GF2_HPP
#define OVALIS_GF2_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ovalis {

// Dense GF(2) vector of fixed dimension, packed into 64-bit words.
// Unused tail bits are kept at zero so that equality is word-wise.
class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t dim) : dim_(dim), words_((dim + 63) / 64, 0) {}

    static Gf2Vector unit(std::size_t dim, std::size_t i) {
        Gf2Vector v(dim);
        v.set(i);
        return v;
    }

    std::size_t dim() const { return dim_; }

    bool test(std::size_t i) const {
        check_index(i);
        return (words_[i / 64] >> (i % 64)) & 1u;
    }

    void set(std::size_t i, bool value = true) {
        check_index(i);
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (value)
            words_[i / 64] |= mask;
        else
            words_[i / 64] &= ~mask;
    }

    void flip(std::size_t i) {
        check_index(i);
        words_[i / 64] ^= std::uint64_t{1} << (i % 64);
    }

    Gf2Vector& operator^=(const Gf2Vector& other) {
        check_dim(other);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    friend Gf2Vector operator+(Gf2Vector a, const Gf2Vector& b) { return a ^= b; }

    // Parity of the bitwise AND, i.e. the standard GF(2) dot product.
    bool dot(const Gf2Vector& other) const {
        check_dim(other);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
        return (std::popcount(acc) & 1) != 0;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w != 0) return true;
        return false;
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < dim_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

private:
    void check_index(std::size_t i) const {
        if (i >= dim_) throw std::out_of_range("Gf2Vector index out of range");
    }
    void check_dim(const Gf2Vector& other) const {
        if (other.dim_ != dim_) throw std::invalid_argument("Gf2Vector dimension mismatch");
    }

    std::size_t dim_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace ovalis

#endif

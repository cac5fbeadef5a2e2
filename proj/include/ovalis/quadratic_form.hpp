#ifndef OVALIS_QUADRATIC_FORM_HPP
#define OVALIS_QUADRATIC_FORM_HPP

#include <cstdint>
#include <vector>

#include "ovalis/cyc8.hpp"
#include "ovalis/gf2.hpp"

namespace ovalis {

// A quadratic refinement over GF(2): a symmetric bilinear pairing on a
// GF(2) vector space together with Z/4 values q(e_i) on the standard basis.
// The values extend to the whole space through
//     q(x + y) = q(x) + q(y) + 2 x.y   (mod 4),
// which forces q(e_i) = pairing(i,i) (mod 2); the constructor rejects
// anything that breaks symmetry or that diagonal parity.
class QuadraticForm {
public:
    QuadraticForm() = default;  // the zero-dimensional form

    QuadraticForm(const std::vector<std::vector<int>>& pairing, const std::vector<int>& q);

    std::size_t dim() const { return rows_.size(); }
    bool pair(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
    const Gf2Vector& row(std::size_t i) const { return rows_[i]; }
    std::uint8_t q(std::size_t i) const { return q_[i]; }

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

private:
    std::vector<Gf2Vector> rows_;
    std::vector<std::uint8_t> q_;
};

// Brown invariant, an element of Z/8.
struct BrownValue {
    int value = 0;

    friend constexpr bool operator==(BrownValue, BrownValue) = default;
    friend constexpr BrownValue operator+(BrownValue a, BrownValue b) {
        return {(a.value + b.value) % 8};
    }
    friend constexpr BrownValue operator-(BrownValue a) { return {(8 - a.value) % 8}; }
};

// q extended to an arbitrary vector; throws on dimension mismatch.
std::uint8_t evaluate(const QuadraticForm& form, const Gf2Vector& v);

// Basis of the radical (kernel of the pairing), by GF(2) elimination with
// lowest-index pivots, so the result is reproducible.
std::vector<Gf2Vector> radical(const QuadraticForm& form);

// True iff q vanishes on the radical.  Checking a basis suffices: on the
// radical the pairing vanishes, so q is additive there with values in {0,2}.
bool is_proper_form(const QuadraticForm& form);

// Hard cap on the Gauss-sum enumeration; 2^24 exact additions is seconds.
inline constexpr std::size_t kGaussSumDimCap = 24;

// Sum of i^{q(v)} over all 2^dim vectors, exact in Z[zeta] (it lands in the
// Gaussian subring).  Throws std::length_error above the dimension cap.
Cyc8 gauss_sum(const QuadraticForm& form);

// The unique beta in Z/8 with  gauss_sum = sqrt(2)^(dim + dim rad) * zeta^beta.
// No such beta exists exactly when the form is improper; that raises
// std::domain_error.
BrownValue brown(const QuadraticForm& form);

// Orthogonal (block-diagonal) sum.
QuadraticForm direct_sum(const QuadraticForm& f, const QuadraticForm& g);

}  // namespace ovalis

#endif

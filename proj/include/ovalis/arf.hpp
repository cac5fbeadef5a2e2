#ifndef OVALIS_ARF_HPP
#define OVALIS_ARF_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "ovalis/quadratic_form.hpp"
#include "ovalis/scheme.hpp"

namespace ovalis {

// Homology of the tangent circle bundle of the projective plane: H1 = Z/4,
// generated by the class g of a lift of a line, with linking form
// l(g, g) = -1/4.  An oval lifts to 2g.
struct H1Class {
    int v = 0;

    constexpr H1Class() = default;
    constexpr explicit H1Class(int a) : v(((a % 4) + 4) % 4) {}

    friend constexpr bool operator==(H1Class, H1Class) = default;
    friend constexpr H1Class operator+(H1Class a, H1Class b) { return H1Class(a.v + b.v); }
};

// l(a g, b g) = -ab/4 in Q/Z, returned in quarter-units mod 4.
int linking_quarters(H1Class a, H1Class b);

// The two quadratic refinements of the linking form, determined by the value
// on g: r(g) = -1/8 or r(g) = 3/8, with r(a g) = a^2 r(g) mod 1.
enum class Refinement : std::uint8_t { MinusEighth, ThreeEighths };

const char* refinement_name(Refinement r);  // "-1/8" or "3/8"

// r(x) in eighth-units mod 8.
int refinement_eighths(Refinement r, H1Class x);

// An element of (1/4 Z) / 8Z, stored in quarter-units mod 32.  This is the
// value ring of the Arf invariant and of mu.
class ArfValue {
public:
    constexpr ArfValue() = default;

    static constexpr ArfValue from_quarters(std::int64_t q) {
        ArfValue v;
        v.q32_ = static_cast<int>(((q % 32) + 32) % 32);
        return v;
    }
    static constexpr ArfValue from_halves(std::int64_t h) { return from_quarters(2 * h); }
    static constexpr ArfValue from_integer(std::int64_t n) { return from_quarters(4 * n); }

    constexpr int quarters() const { return q32_; }

    friend constexpr bool operator==(ArfValue, ArfValue) = default;
    friend constexpr ArfValue operator+(ArfValue a, ArfValue b) {
        return from_quarters(a.q32_ + b.q32_);
    }
    friend constexpr ArfValue operator-(ArfValue a, ArfValue b) {
        return from_quarters(a.q32_ - b.q32_);
    }
    friend constexpr ArfValue operator-(ArfValue a) { return from_quarters(-a.q32_); }

    // Lowest-terms fraction of the representative in [0, 8): "2", "1/2", "9/4".
    std::string to_string() const;

private:
    int q32_ = 0;
};

// Spanning-surface data for a link in the tangent circle bundle: the reduced
// quadratic refinement on the quotient-surface classes, mu in quarter-units,
// the surface class gamma, and the chosen refinement of the linking form.
struct SurfaceData {
    QuadraticForm form;
    std::int64_t mu_quarters = 0;
    H1Class gamma;
    Refinement r = Refinement::MinusEighth;
};

// The classes gamma with 2 gamma = [C]: {0, 2g} for an even number of ovals,
// {g, 3g} for an odd number.
std::array<H1Class, 2> gamma_candidates(const Scheme& s);

// Properness of the triple (scheme, gamma, r): each oval must satisfy
//   lk(C_i, C - C_i)  =  2 l([C_i], gamma) - 2 r([C_i])   (mod 2).
// Requires a fully signed scheme without figure eights and gamma among the
// candidates (else std::invalid_argument / std::domain_error).
bool is_proper_triple(const Scheme& s, H1Class gamma, Refinement r);

// Closed-form Arf invariant of an odd or even simple curve at a proper
// (gamma, r).  Throws std::domain_error when the triple is not proper.
ArfValue arf_simple(const Scheme& s, H1Class gamma, Refinement r);

// Arf from explicit surface data: brown(form) - mu.
ArfValue arf_from_surface(const SurfaceData& d);

// Synthesizes the spanning-surface data of an odd or even simple curve:
// (n-p)/2 one-sided summands with q = 1 (odd case), or (p-n-1)/2 of them plus
// the one-sided class of the ambient Mobius part with q = +-1 depending on r
// (even case).
SurfaceData surface_for_simple(const Scheme& s, Refinement r);

// Passing from (gamma, r_{-1/8}) to (gamma + 2g, r_{3/8}) shifts Arf by -2.
ArfValue change_r(ArfValue v);

// Arf of the empty link at gamma = 2g: +2 for r_{-1/8}, -2 for r_{3/8}.
ArfValue empty_link_arf(Refinement r);

// Reference values for 2k lines in general position: (k g, k^2/2) for
// r_{-1/8} and ((k+2) g, k^2/2 - 2) for r_{3/8}.
std::pair<H1Class, ArfValue> x2k_reference(int k, Refinement r);

// Which (gamma, r) are proper for the 2k-line configuration.
bool x2k_is_proper(int k, H1Class gamma, Refinement r);

}  // namespace ovalis

#endif

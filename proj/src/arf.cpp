#include "ovalis/arf.hpp"

#include <stdexcept>

namespace ovalis {

int linking_quarters(H1Class a, H1Class b) {
    return ((-(a.v * b.v)) % 4 + 4) % 4;
}

const char* refinement_name(Refinement r) {
    return r == Refinement::MinusEighth ? "-1/8" : "3/8";
}

int refinement_eighths(Refinement r, H1Class x) {
    const int rg = (r == Refinement::MinusEighth) ? -1 : 3;
    return ((x.v * x.v * rg) % 8 + 8) % 8;
}

std::string ArfValue::to_string() const {
    if (q32_ % 4 == 0) return std::to_string(q32_ / 4);
    if (q32_ % 2 == 0) return std::to_string(q32_ / 2) + "/2";
    return std::to_string(q32_) + "/4";
}

std::array<H1Class, 2> gamma_candidates(const Scheme& s) {
    if (has_figure_eights(s))
        throw std::domain_error("gamma_candidates requires a scheme without figure eights");
    if (count_ovals(s) % 2 == 0) return {H1Class(0), H1Class(2)};
    return {H1Class(1), H1Class(3)};
}

namespace {

bool in_candidates(const Scheme& s, H1Class gamma) {
    const auto cands = gamma_candidates(s);
    return gamma == cands[0] || gamma == cands[1];
}

std::int64_t subtree_ovals(const SchemeNode& n) {
    std::int64_t total = 0;
    for (const SchemeNode& c : n.children) total += 1 + subtree_ovals(c);
    return total;
}

// Linking count (ancestors + descendants) of every oval must have the
// required parity.
bool check_linking_parity(const std::vector<SchemeNode>& nodes, std::int64_t depth, int need) {
    for (const SchemeNode& n : nodes) {
        const std::int64_t linked = depth + subtree_ovals(n);
        if ((linked % 2) != need) return false;
        if (!check_linking_parity(n.children, depth + 1, need)) return false;
    }
    return true;
}

QuadraticForm one_sided_summands(std::size_t count, int alpha_q = 0) {
    // `count` summands with self-pairing 1 and q = 1, optionally followed by
    // one more with q = alpha_q (the class of the ambient Mobius part).
    const std::size_t d = count + (alpha_q != 0 ? 1 : 0);
    std::vector<std::vector<int>> pairing(d, std::vector<int>(d, 0));
    std::vector<int> q(d, 1);
    for (std::size_t i = 0; i < d; ++i) pairing[i][i] = 1;
    if (alpha_q != 0) q[d - 1] = alpha_q;
    return {pairing, q};
}

}  // namespace

bool is_proper_triple(const Scheme& s, H1Class gamma, Refinement r) {
    if (has_figure_eights(s))
        throw std::domain_error("is_proper_triple requires a scheme without figure eights");
    if (!fully_signed(s))
        throw std::invalid_argument("is_proper_triple requires every oval to be signed");
    if (!in_candidates(s, gamma))
        throw std::invalid_argument(
            "gamma is not a half-class of the scheme's total homology class");

    // Each oval represents 2g, so the properness condition
    //   lk(C_i, C - C_i) = 2 l([C_i], gamma) - 2 r([C_i])  (mod 2)
    // compares the parity of the linking count of C_i with a constant.
    // linking_quarters(2g, gamma) lies in {0, 2} and refinement_eighths(r, 2g)
    // equals 4 (i.e. 1/2) for both refinements.
    const int two_l = linking_quarters(H1Class(2), gamma) / 2;   // 2 l in Z/2
    const int two_r = refinement_eighths(r, H1Class(2)) / 4;     // 2 r in Z/2
    const int need = ((two_l - two_r) % 2 + 2) % 2;
    return check_linking_parity(s.roots, 0, need);
}

ArfValue arf_simple(const Scheme& s, H1Class gamma, Refinement r) {
    if (!is_proper_triple(s, gamma, r))
        throw std::domain_error("(scheme, gamma, refinement) is not a proper triple");
    const SchemeStats st = stats(s);
    const std::int64_t pi = st.oriented->pi_plus - st.oriented->pi_minus;
    if (is_odd_curve(s)) {
        const std::int64_t m = pi - st.p;
        if (((gamma.v - m) % 4 + 4) % 4 == 0) return ArfValue::from_integer(m);
        // gamma = (m + 2) g
        return ArfValue::from_integer(r == Refinement::MinusEighth ? m + 2 : m - 2);
    }
    // Properness forces an even curve here; the value does not depend on
    // which of {g, 3g} gamma is.
    const std::int64_t base = pi - st.n;
    return r == Refinement::MinusEighth ? ArfValue::from_quarters(4 * base + 2)
                                        : ArfValue::from_quarters(4 * base - 6);
}

ArfValue arf_from_surface(const SurfaceData& d) {
    if (!is_proper_form(d.form))
        throw std::domain_error("surface form is not proper (q does not vanish on the radical)");
    return ArfValue::from_quarters(4 * static_cast<std::int64_t>(brown(d.form).value) -
                                   d.mu_quarters);
}

SurfaceData surface_for_simple(const Scheme& s, Refinement r) {
    if (has_figure_eights(s))
        throw std::domain_error("surface_for_simple requires a scheme without figure eights");
    if (!fully_signed(s))
        throw std::invalid_argument("surface_for_simple requires every oval to be signed");
    const SchemeStats st = stats(s);
    const std::int64_t pi = st.oriented->pi_plus - st.oriented->pi_minus;
    if (is_odd_curve(s)) {
        const auto count = static_cast<std::size_t>((st.n - st.p) / 2);
        return {one_sided_summands(count), mu_simple_quarters(s),
                H1Class(static_cast<int>((pi - st.p) % 4)), r};
    }
    if (is_even_curve(s)) {
        const auto count = static_cast<std::size_t>((st.p - st.n - 1) / 2);
        const int alpha_q = (r == Refinement::MinusEighth) ? 1 : 3;
        return {one_sided_summands(count, alpha_q), mu_simple_quarters(s), H1Class(1), r};
    }
    throw std::domain_error("scheme is neither an odd nor an even simple curve");
}

ArfValue change_r(ArfValue v) {
    return v - ArfValue::from_integer(2);
}

ArfValue empty_link_arf(Refinement r) {
    return ArfValue::from_integer(r == Refinement::MinusEighth ? 2 : -2);
}

std::pair<H1Class, ArfValue> x2k_reference(int k, Refinement r) {
    if (k < 1) throw std::invalid_argument("x2k_reference requires k >= 1");
    const std::int64_t half_k_squared_quarters = 2 * static_cast<std::int64_t>(k) * k;
    if (r == Refinement::MinusEighth)
        return {H1Class(k), ArfValue::from_quarters(half_k_squared_quarters)};
    return {H1Class(k + 2), ArfValue::from_quarters(half_k_squared_quarters - 8)};
}

bool x2k_is_proper(int k, H1Class gamma, Refinement r) {
    if (k < 1) throw std::invalid_argument("x2k_is_proper requires k >= 1");
    return (r == Refinement::MinusEighth && gamma == H1Class(k)) ||
           (r == Refinement::ThreeEighths && gamma == H1Class(k + 2));
}

}  // namespace ovalis

#include "ovalis/quadratic_form.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace ovalis {

QuadraticForm::QuadraticForm(const std::vector<std::vector<int>>& pairing,
                             const std::vector<int>& q) {
    const std::size_t d = pairing.size();
    if (q.size() != d)
        throw std::invalid_argument("q must have one value per basis vector (got " +
                                    std::to_string(q.size()) + " for dimension " +
                                    std::to_string(d) + ")");
    rows_.assign(d, Gf2Vector(d));
    q_.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (pairing[i].size() != d)
            throw std::invalid_argument("pairing row " + std::to_string(i) +
                                        " has length " + std::to_string(pairing[i].size()) +
                                        ", expected " + std::to_string(d));
        for (std::size_t j = 0; j < d; ++j) {
            const int e = pairing[i][j];
            if (e != 0 && e != 1)
                throw std::invalid_argument("pairing entries must be 0 or 1 (found " +
                                            std::to_string(e) + " at (" + std::to_string(i) +
                                            ", " + std::to_string(j) + "))");
            if (e) rows_[i].set(j);
        }
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (pairing[i][j] != pairing[j][i])
                throw std::invalid_argument("pairing is not symmetric at (" + std::to_string(i) +
                                            ", " + std::to_string(j) + ")");
    for (std::size_t i = 0; i < d; ++i) {
        if (q[i] < 0 || q[i] > 3)
            throw std::invalid_argument("q values must lie in 0..3 (found " +
                                        std::to_string(q[i]) + " at " + std::to_string(i) + ")");
        if ((q[i] & 1) != pairing[i][i])
            throw std::invalid_argument("q[" + std::to_string(i) +
                                        "] must match the pairing diagonal mod 2");
        q_[i] = static_cast<std::uint8_t>(q[i]);
    }
}

std::uint8_t evaluate(const QuadraticForm& form, const Gf2Vector& v) {
    if (v.dim() != form.dim())
        throw std::invalid_argument("vector length " + std::to_string(v.dim()) +
                                    " does not match form dimension " +
                                    std::to_string(form.dim()));
    // Build up q(e_{i1} + ... + e_{im}) one basis vector at a time through the
    // refinement identity.
    unsigned q = 0;
    Gf2Vector partial(form.dim());
    for (std::size_t i : v.support()) {
        q += form.q(i) + 2u * static_cast<unsigned>(form.row(i).dot(partial));
        partial.set(i);
    }
    return static_cast<std::uint8_t>(q & 3u);
}

std::vector<Gf2Vector> radical(const QuadraticForm& form) {
    const std::size_t d = form.dim();
    std::vector<Gf2Vector> rows;
    rows.reserve(d);
    for (std::size_t i = 0; i < d; ++i) rows.push_back(form.row(i));

    std::vector<std::size_t> pivot_cols;
    std::vector<bool> is_pivot(d, false);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < d; ++col) {
        std::size_t sel = rank;
        while (sel < d && !rows[sel].test(col)) ++sel;
        if (sel == d) continue;
        std::swap(rows[sel], rows[rank]);
        for (std::size_t r = 0; r < d; ++r)
            if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
        pivot_cols.push_back(col);
        is_pivot[col] = true;
        ++rank;
    }

    std::vector<Gf2Vector> basis;
    for (std::size_t c = 0; c < d; ++c) {
        if (is_pivot[c]) continue;
        Gf2Vector v = Gf2Vector::unit(d, c);
        for (std::size_t r = 0; r < rank; ++r)
            if (rows[r].test(c)) v.set(pivot_cols[r]);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool is_proper_form(const QuadraticForm& form) {
    for (const Gf2Vector& b : radical(form))
        if (evaluate(form, b) != 0) return false;
    return true;
}

Cyc8 gauss_sum(const QuadraticForm& form) {
    if (form.dim() > kGaussSumDimCap)
        throw std::length_error("Gauss sum capped at dimension " +
                                std::to_string(kGaussSumDimCap) + " (got " +
                                std::to_string(form.dim()) + ")");
    std::array<std::int64_t, 4> tally{1, 0, 0, 0};  // v = 0 contributes i^0
    Gf2Vector v(form.dim());
    unsigned q = 0;
    const std::uint64_t total = std::uint64_t{1} << form.dim();
    // Gray-code walk: each step flips one bit, and
    // q(v + e_i) = q(v) + q(e_i) + 2 v.e_i.
    for (std::uint64_t step = 1; step < total; ++step) {
        const auto i = static_cast<std::size_t>(std::countr_zero(step));
        q = (q + form.q(i) + 2u * static_cast<unsigned>(form.row(i).dot(v))) & 3u;
        v.flip(i);
        ++tally[q];
    }
    return {tally[0] - tally[2], 0, tally[1] - tally[3], 0};
}

BrownValue brown(const QuadraticForm& form) {
    const Cyc8 sum = gauss_sum(form);
    const std::size_t m = form.dim() + radical(form).size();
    const Cyc8 magnitude = Cyc8::sqrt2().pow(static_cast<unsigned>(m));
    for (int beta = 0; beta < 8; ++beta)
        if (magnitude * Cyc8::zeta_pow(beta) == sum) return BrownValue{beta};
    throw std::domain_error(
        "form has no Brown invariant: the refinement does not vanish on the radical");
}

QuadraticForm direct_sum(const QuadraticForm& f, const QuadraticForm& g) {
    const std::size_t df = f.dim();
    const std::size_t dg = g.dim();
    std::vector<std::vector<int>> pairing(df + dg, std::vector<int>(df + dg, 0));
    std::vector<int> q(df + dg, 0);
    for (std::size_t i = 0; i < df; ++i) {
        q[i] = f.q(i);
        for (std::size_t j = 0; j < df; ++j) pairing[i][j] = f.pair(i, j) ? 1 : 0;
    }
    for (std::size_t i = 0; i < dg; ++i) {
        q[df + i] = g.q(i);
        for (std::size_t j = 0; j < dg; ++j) pairing[df + i][df + j] = g.pair(i, j) ? 1 : 0;
    }
    return {pairing, q};
}

}  // namespace ovalis

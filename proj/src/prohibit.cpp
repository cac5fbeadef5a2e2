#include "ovalis/prohibit.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace ovalis {

namespace {

std::int64_t harnack_count(int k) {
    // 1 + (2k-1)(2k-2)/2 = 2k^2 - 3k + 2
    const std::int64_t kk = k;
    return 2 * kk * kk - 3 * kk + 2;
}

std::int64_t mod8(std::int64_t x) {
    return (x % 8 + 8) % 8;
}

std::int64_t mod16(std::int64_t x) {
    return (x % 16 + 16) % 16;
}

void require_degree(int k) {
    if (k < 1) throw std::invalid_argument("degree parameter k must be at least 1");
}

CheckResult not_applicable(const char* name, std::string reason) {
    return {name, false, false, std::move(reason)};
}

constexpr const char* kNonsingularOnly =
    "stated for nonsingular schemes; figure eights present";
constexpr const char* kNeedsOrientation = "requires a complete semi-orientation";

void collect_unsigned_ovals(std::vector<SchemeNode>& nodes, std::vector<SchemeNode*>& out) {
    for (SchemeNode& n : nodes) {
        if (n.kind == SchemeNode::Kind::Oval && n.sign == Sign::Unsigned) out.push_back(&n);
        collect_unsigned_ovals(n.children, out);
    }
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Prohibited: return "prohibited";
        case Verdict::Consistent: return "consistent";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "not-applicable";
}

CheckResult check_m_curve(const Scheme& s, int k) {
    require_degree(k);
    const SchemeStats st = stats(s);
    const std::int64_t total = st.components + st.double_points;
    const std::int64_t target = harnack_count(k);
    std::ostringstream os;
    os << "circles + double points = " << st.components << " + " << st.double_points << " = "
       << total << "; extremal count for degree " << 2 * k << " is " << target;
    return {"m-curve", true, total == target, os.str()};
}

CheckResult check_gudkov(const Scheme& s, int k) {
    require_degree(k);
    if (has_figure_eights(s)) return not_applicable("gudkov", kNonsingularOnly);
    const SchemeStats st = stats(s);
    const std::int64_t diff = st.p - st.n;
    const std::int64_t kk = static_cast<std::int64_t>(k) * k;
    std::ostringstream os;
    os << "p - n = " << diff << ", k^2 = " << kk << ": " << mod8(diff)
       << " vs " << mod8(kk) << " (mod 8)";
    return {"gudkov", true, mod8(diff) == mod8(kk), os.str()};
}

CheckResult check_harnack(const Scheme& s, int k) {
    require_degree(k);
    if (has_figure_eights(s)) return not_applicable("harnack", kNonsingularOnly);
    const SchemeStats st = stats(s);
    const std::int64_t target = harnack_count(k);
    std::ostringstream os;
    os << "p + n = " << st.p + st.n << "; extremal count for degree " << 2 * k << " is "
       << target;
    return {"harnack", true, st.p + st.n == target, os.str()};
}

CheckResult check_rokhlin_orientation(const Scheme& s, int k) {
    require_degree(k);
    if (has_figure_eights(s)) return not_applicable("rokhlin-orientation", kNonsingularOnly);
    const SchemeStats st = stats(s);
    if (!st.oriented) return not_applicable("rokhlin-orientation", kNeedsOrientation);
    const std::int64_t pi = st.oriented->pi_plus - st.oriented->pi_minus;
    const std::int64_t target = static_cast<std::int64_t>(k - 1) * (k - 2) / 2;
    std::ostringstream os;
    os << "pi+ - pi- = " << pi << "; (k-1)(k-2)/2 = " << target;
    return {"rokhlin-orientation", true, pi == target, os.str()};
}

CheckResult check_fiedler(const Scheme& s, int k) {
    require_degree(k);
    if (has_figure_eights(s)) return not_applicable("fiedler", kNonsingularOnly);
    const SchemeStats st = stats(s);
    if (st.ovals != harnack_count(k))
        return not_applicable("fiedler", "stated for M-curves; oval count is not extremal");
    const std::int64_t diff = st.p - st.n;
    if (k % 2 == 0) {
        if (!is_odd_curve(s))
            return not_applicable("fiedler", "for even k the congruence applies to odd curves");
        const std::int64_t target = -static_cast<std::int64_t>(k) * k;
        std::ostringstream os;
        os << "p - n = " << diff << ", -k^2 = " << target << ": " << mod16(diff) << " vs "
           << mod16(target) << " (mod 16)";
        return {"fiedler", true, mod16(diff) == mod16(target), os.str()};
    }
    if (!is_even_curve(s))
        return not_applicable("fiedler", "for odd k the congruence applies to even curves");
    std::ostringstream os;
    os << "p - n = " << diff << ": " << mod16(diff) << " vs 1 (mod 16)";
    return {"fiedler", true, mod16(diff) == 1, os.str()};
}

CheckResult check_simple_curve_congruence(const Scheme& s, int k) {
    require_degree(k);
    static constexpr const char* kName = "simple-curve-congruence";
    if (!fully_signed(s)) return not_applicable(kName, kNeedsOrientation);
    const Scheme reduced = reduce_weak(s);
    const bool odd = is_odd_curve(reduced);
    const bool even = is_even_curve(reduced);
    if (!odd && !even)
        return not_applicable(kName, "reduced scheme is neither an odd nor an even simple curve");

    const SchemeStats st = stats(reduced);
    const std::int64_t pi = st.oriented->pi_plus - st.oriented->pi_minus;
    const std::int64_t kk = static_cast<std::int64_t>(k) * k;
    if (k % 2 == 0) {
        if (even)
            return {kName, true, false,
                    "a nodal M-curve of even half-degree cannot be weakly equivalent to an even "
                    "simple curve"};
        const std::int64_t m = pi - st.p;
        const std::int64_t a1 = mod8(kk / 2);
        const std::int64_t a2 = mod8(kk / 2 - 2);
        std::ostringstream os;
        os << "pi+ - pi- - p = " << m << " = " << mod8(m) << " (mod 8); allowed {" << a1 << ", "
           << a2 << "}";
        return {kName, true, mod8(m) == a1 || mod8(m) == a2, os.str()};
    }
    if (odd)
        return {kName, true, false,
                "a nodal M-curve of odd half-degree cannot be weakly equivalent to an odd "
                "simple curve"};
    const std::int64_t t = pi - st.n;
    const std::int64_t target = mod8((kk - 1) / 2);
    std::ostringstream os;
    os << "pi+ - pi- - n = " << t << " = " << mod8(t) << " (mod 8); required " << target;
    return {kName, true, mod8(t) == target, os.str()};
}

CheckResult check_arf_congruence(ArfValue v, int k) {
    require_degree(k);
    const ArfValue required = ArfValue::from_halves(static_cast<std::int64_t>(k) * k);
    std::ostringstream os;
    os << "arf = " << v.to_string() << ", required k^2/2 = " << required.to_string()
       << " (mod 8)";
    return {"arf-congruence", true, v == required, os.str()};
}

VerdictReport full_verdict(const Scheme& s, int k) {
    require_degree(k);
    VerdictReport report;
    report.degree = 2 * k;
    report.scheme = serialize(canonicalize(s));
    report.results.push_back(check_m_curve(s, k));
    report.results.push_back(check_gudkov(s, k));
    report.results.push_back(check_harnack(s, k));
    report.results.push_back(check_rokhlin_orientation(s, k));
    report.results.push_back(check_fiedler(s, k));
    report.results.push_back(check_simple_curve_congruence(s, k));

    // The Arf congruence runs whenever the closed form is computable at
    // (k g, r_{-1/8}) for the reduced scheme.
    CheckResult arf_check = not_applicable("arf-congruence", kNeedsOrientation);
    const Scheme reduced = reduce_weak(s);
    if (fully_signed(reduced)) {
        const auto cands = gamma_candidates(reduced);
        const H1Class kg(k);
        if (kg != cands[0] && kg != cands[1])
            arf_check.details = "k g is not a half-class of the scheme's homology class";
        else if (!is_proper_triple(reduced, kg, Refinement::MinusEighth))
            arf_check.details = "(scheme, k g, -1/8) is not a proper triple";
        else
            arf_check = check_arf_congruence(arf_simple(reduced, kg, Refinement::MinusEighth), k);
    }
    report.results.push_back(std::move(arf_check));

    bool any_applicable = false;
    bool any_failed = false;
    for (const CheckResult& r : report.results) {
        any_applicable = any_applicable || r.applicable;
        any_failed = any_failed || (r.applicable && !r.passed);
    }
    report.verdict = any_failed          ? Verdict::Prohibited
                     : any_applicable    ? Verdict::Consistent
                                         : Verdict::NotApplicable;
    return report;
}

std::vector<std::pair<Scheme, VerdictReport>> enumerate_orientations(const Scheme& s, int k) {
    require_degree(k);
    if (count_ovals(s) > 20)
        throw std::length_error("orientation search is capped at 20 ovals");
    Scheme work = s;
    std::vector<SchemeNode*> slots;
    collect_unsigned_ovals(work.roots, slots);

    std::map<std::string, Scheme> classes;
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t i = 0; i < slots.size(); ++i)
            slots[i]->sign = ((mask >> i) & 1u) ? Sign::Minus : Sign::Plus;
        Scheme canon = canonicalize(work);
        Scheme canon_flipped = canonicalize(flip(work));
        std::string key = serialize(canon);
        std::string key_flipped = serialize(canon_flipped);
        if (key_flipped < key) {
            key = std::move(key_flipped);
            canon = std::move(canon_flipped);
        }
        classes.emplace(std::move(key), std::move(canon));
    }

    std::vector<std::pair<Scheme, VerdictReport>> out;
    out.reserve(classes.size());
    for (auto& [key, scheme] : classes) {
        VerdictReport report = full_verdict(scheme, k);
        out.emplace_back(std::move(scheme), std::move(report));
    }
    return out;
}

}  // namespace ovalis

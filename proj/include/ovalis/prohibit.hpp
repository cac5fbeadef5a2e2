#ifndef OVALIS_PROHIBIT_HPP
#define OVALIS_PROHIBIT_HPP

#include <string>
#include <utility>
#include <vector>

#include "ovalis/arf.hpp"
#include "ovalis/scheme.hpp"

namespace ovalis {

// Outcome of one congruence check.  `passed` is meaningful only when the
// check is applicable; `details` spells out both sides of the congruence or
// the reason the check does not apply.
struct CheckResult {
    std::string name;
    bool applicable = false;
    bool passed = false;
    std::string details;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

enum class Verdict { Prohibited, Consistent, NotApplicable };

const char* verdict_name(Verdict v);

struct VerdictReport {
    int degree = 0;  // 2k
    std::string scheme;  // canonical serialization
    std::vector<CheckResult> results;
    Verdict verdict = Verdict::NotApplicable;
};

// components + double points == 1 + (2k-1)(2k-2)/2, the extremal count for a
// nodal curve of degree 2k.
CheckResult check_m_curve(const Scheme& s, int k);

// Gudkov: p - n == k^2 (mod 8).  Nonsingular schemes only.
CheckResult check_gudkov(const Scheme& s, int k);

// Harnack extremality: p + n == 2k^2 - 3k + 2.  Nonsingular schemes only.
CheckResult check_harnack(const Scheme& s, int k);

// Rokhlin's complex-orientation count: pi+ - pi- == (k-1)(k-2)/2.
CheckResult check_rokhlin_orientation(const Scheme& s, int k);

// Fiedler: p - n == -k^2 (mod 16) for odd M-curves in even k,
// p - n == 1 (mod 16) for even M-curves in odd k.
CheckResult check_fiedler(const Scheme& s, int k);

// The congruence for nodal M-curves weakly equivalent to a simple curve:
// k even, odd curve:  pi+ - pi- - p in {k^2/2, k^2/2 - 2} (mod 8);
// k odd, even curve:  pi+ - pi- - n == (k^2-1)/2 (mod 8).
// A parity mismatch (odd curve with k odd, even curve with k even) is a
// definite prohibition.  Figure eights are deleted before classifying.
CheckResult check_simple_curve_congruence(const Scheme& s, int k);

// The Arf congruence for a nodal M-curve of degree 2k: the value computed at
// (k g, r_{-1/8}) must equal k^2/2 (mod 8).
CheckResult check_arf_congruence(ArfValue v, int k);

// Runs the whole battery and aggregates: prohibited iff some applicable
// check failed, consistent iff all applicable checks passed and at least one
// applied.
VerdictReport full_verdict(const Scheme& s, int k);

// One representative per semi-orientation class of the unsigned ovals
// (existing signs are kept), each with its verdict, sorted by canonical
// serialization.  Capped at 20 ovals (std::length_error beyond).
std::vector<std::pair<Scheme, VerdictReport>> enumerate_orientations(const Scheme& s, int k);

}  // namespace ovalis

#endif

#ifndef OVALIS_SCHEME_HPP
#define OVALIS_SCHEME_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ovalis {

// A scheme is the nesting forest of a collection of disjoint ovals in the
// projective plane, each optionally carrying a planar orientation sign, plus
// empty figure-eight leaves (immersed circles with a single double point and
// nothing inside).
//
// Text notation:
//
//   scheme := term (WS term)*  |  (empty)
//   term   := [INT] body                       INT >= 1, a multiplicity
//   body   := MARK [ "<" scheme ">" ]  |  "<" scheme ">"  |  "e"
//   MARK   := "+" | "-" | "o"
//
// "o" and a bare sign denote an empty oval (unsigned resp. signed); a MARK
// followed by "<...>" is an oval with the bracketed contents inside it;
// "<...>" with no mark is an unsigned oval with contents; "e" is an empty
// figure eight.  Whitespace is required between sibling terms.
// Examples: "14o <7o>", "+<->", "2e +", "o<o> o<o>".

enum class Sign : std::uint8_t { Unsigned, Plus, Minus };

struct SchemeNode {
    enum class Kind : std::uint8_t { Oval, FigureEight };

    Kind kind = Kind::Oval;
    Sign sign = Sign::Unsigned;  // figure eights are always Unsigned
    std::vector<SchemeNode> children;  // figure eights are leaves

    friend bool operator==(const SchemeNode&, const SchemeNode&) = default;
};

struct Scheme {
    std::vector<SchemeNode> roots;

    friend bool operator==(const Scheme&, const Scheme&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error("scheme parse error at " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

Scheme parse_scheme(std::string_view text);

// Canonical-notation serialization; runs of equal siblings are written with a
// multiplicity, so parse(serialize(s)) == s.
std::string serialize(const Scheme& s);

struct OrientedCounts {
    std::int64_t pi_plus = 0;   // linked pairs with opposite signs
    std::int64_t pi_minus = 0;  // linked pairs with equal signs
    std::int64_t d = 0;         // odd ovals with the same sign as their parent
    std::int64_t d_plus = 0;    // pi+ pairs whose outer oval is disoriented odd
    std::int64_t d_minus = 0;   // pi- pairs whose outer oval is disoriented odd

    friend bool operator==(const OrientedCounts&, const OrientedCounts&) = default;
};

struct SchemeStats {
    std::int64_t ovals = 0;
    std::int64_t p = 0;  // ovals at even nesting depth
    std::int64_t n = 0;  // ovals at odd nesting depth
    std::int64_t components = 0;     // immersed circles, figure eights included
    std::int64_t double_points = 0;  // one per figure eight

    // Engaged iff every oval carries a sign.
    std::optional<OrientedCounts> oriented;

    friend bool operator==(const SchemeStats&, const SchemeStats&) = default;
};

SchemeStats stats(const Scheme& s);

std::int64_t count_ovals(const Scheme& s);
bool has_figure_eights(const Scheme& s);
bool fully_signed(const Scheme& s);

// Every oval linked (nested) with an odd number of others.  Throws
// std::domain_error if figure eights are present; reduce_weak first.
bool is_odd_curve(const Scheme& s);

// Every oval linked with an even number of others and the total number of
// ovals odd.  Same figure-eight precondition.
bool is_even_curve(const Scheme& s);

// Euler characteristic parities of the components of B+ (closure of the set
// of points inside an odd number of ovals) and of B-, its complementary
// closure.  B+ components correspond to even ovals (chi = 1 - #children);
// B- components are the outer region (chi = 1 - #roots) followed by the odd
// ovals.  Figure eights must be removed first.
std::vector<int> euler_parities_bplus(const Scheme& s);
std::vector<int> euler_parities_bminus(const Scheme& s);

// Deletes every empty figure eight (the figure-eight death move).
Scheme reduce_weak(const Scheme& s);

// Sorts siblings everywhere by their serialized form.
Scheme canonicalize(const Scheme& s);

// Reverses every sign.
Scheme flip(const Scheme& s);

// Equality of semi-orientations: equal up to reversing all signs at once
// (and sibling order).
bool semiorientation_equal(const Scheme& a, const Scheme& b);

// mu of the spanning surface of a simple curve, in quarter-units:
// (1/2) (n + p - 2 (pi+ - pi-)).  Requires all ovals signed and no figure
// eights.
std::int64_t mu_simple_quarters(const Scheme& s);

}  // namespace ovalis

#endif

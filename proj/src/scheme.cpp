#include "ovalis/scheme.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace ovalis {

namespace {

constexpr std::size_t kMaxNodes = 1'000'000;
constexpr int kMaxDepth = 1000;

std::size_t subtree_size(const SchemeNode& n) {
    std::size_t total = 1;
    for (const SchemeNode& c : n.children) total += subtree_size(c);
    return total;
}

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t nodes = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }

    bool at_end() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    bool skip_ws() {
        const std::size_t start = pos;
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
        return pos != start;
    }

    void parse_terms(std::vector<SchemeNode>& out, int depth, bool bracketed) {
        bool first = true;
        for (;;) {
            const bool ws = skip_ws();
            if (at_end()) {
                if (bracketed) fail("expected '>'");
                return;
            }
            if (bracketed && peek() == '>') return;
            if (!first && !ws) fail("missing whitespace between terms");
            parse_term(out, depth);
            first = false;
        }
    }

    void parse_term(std::vector<SchemeNode>& out, int depth) {
        std::size_t multiplicity = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::size_t start = pos;
            std::size_t value = 0;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                value = value * 10 + static_cast<std::size_t>(peek() - '0');
                if (value > kMaxNodes) {
                    pos = start;
                    fail("multiplicity too large");
                }
                ++pos;
            }
            if (value == 0) {
                pos = start;
                fail("multiplicity must be at least 1");
            }
            if (at_end()) fail("expected a term body after multiplicity");
            multiplicity = value;
        }
        SchemeNode node = parse_body(depth);
        account(subtree_size(node) * multiplicity);
        for (std::size_t i = 1; i < multiplicity; ++i) out.push_back(node);
        out.push_back(std::move(node));
    }

    SchemeNode parse_body(int depth) {
        if (depth > kMaxDepth) fail("nesting too deep");
        const char c = peek();
        if (c == '+' || c == '-' || c == 'o') {
            ++pos;
            SchemeNode node;
            node.kind = SchemeNode::Kind::Oval;
            node.sign = (c == '+') ? Sign::Plus : (c == '-') ? Sign::Minus : Sign::Unsigned;
            if (!at_end() && peek() == '<') parse_contents(node, depth);
            return node;
        }
        if (c == '<') {
            SchemeNode node;
            node.kind = SchemeNode::Kind::Oval;
            node.sign = Sign::Unsigned;
            parse_contents(node, depth);
            return node;
        }
        if (c == 'e') {
            ++pos;
            SchemeNode node;
            node.kind = SchemeNode::Kind::FigureEight;
            node.sign = Sign::Unsigned;
            return node;
        }
        fail("expected '+', '-', 'o', 'e', or '<'");
    }

    void parse_contents(SchemeNode& node, int depth) {
        ++pos;  // consume '<'
        parse_terms(node.children, depth + 1, true);
        if (at_end()) fail("expected '>'");
        ++pos;  // consume '>'
    }

    void account(std::size_t added) {
        nodes += added;
        if (nodes > kMaxNodes) fail("scheme too large");
    }
};

void emit_siblings(std::string& out, const std::vector<SchemeNode>& siblings);

void emit_node(std::string& out, const SchemeNode& n) {
    if (n.kind == SchemeNode::Kind::FigureEight) {
        out += 'e';
        return;
    }
    switch (n.sign) {
        case Sign::Plus: out += '+'; break;
        case Sign::Minus: out += '-'; break;
        case Sign::Unsigned:
            if (n.children.empty()) out += 'o';
            break;
    }
    if (!n.children.empty()) {
        out += '<';
        emit_siblings(out, n.children);
        out += '>';
    }
}

void emit_siblings(std::string& out, const std::vector<SchemeNode>& siblings) {
    std::size_t i = 0;
    bool first = true;
    while (i < siblings.size()) {
        std::size_t j = i + 1;
        while (j < siblings.size() && siblings[j] == siblings[i]) ++j;
        if (!first) out += ' ';
        if (j - i > 1) out += std::to_string(j - i);
        emit_node(out, siblings[i]);
        first = false;
        i = j;
    }
}

std::string node_key(const SchemeNode& n) {
    std::string s;
    emit_node(s, n);
    return s;
}

void canonicalize_node(SchemeNode& n) {
    for (SchemeNode& c : n.children) canonicalize_node(c);
    std::sort(n.children.begin(), n.children.end(),
              [](const SchemeNode& a, const SchemeNode& b) { return node_key(a) < node_key(b); });
}

struct AncestorInfo {
    Sign sign;
    bool odd_depth;
    bool disoriented;
};

struct StatsWalk {
    SchemeStats st;
    OrientedCounts oriented;
    bool all_signed = true;
    std::vector<AncestorInfo> stack;

    void visit(const SchemeNode& n) {
        if (n.kind == SchemeNode::Kind::FigureEight) {
            ++st.components;
            ++st.double_points;
            return;
        }
        ++st.components;
        ++st.ovals;
        const std::size_t depth = stack.size();
        const bool odd_depth = (depth % 2) == 1;
        (odd_depth ? st.n : st.p)++;
        if (n.sign == Sign::Unsigned) all_signed = false;

        bool disoriented = false;
        if (odd_depth && n.sign != Sign::Unsigned && stack.back().sign != Sign::Unsigned)
            disoriented = (n.sign == stack.back().sign);
        if (disoriented) ++oriented.d;

        for (const AncestorInfo& outer : stack) {
            if (outer.sign == Sign::Unsigned || n.sign == Sign::Unsigned) continue;
            const bool same = outer.sign == n.sign;
            (same ? oriented.pi_minus : oriented.pi_plus)++;
            if (outer.odd_depth && outer.disoriented) (same ? oriented.d_minus : oriented.d_plus)++;
        }

        stack.push_back({n.sign, odd_depth, disoriented});
        for (const SchemeNode& c : n.children) visit(c);
        stack.pop_back();
    }
};

void require_no_figure_eights(const Scheme& s, const char* op) {
    if (has_figure_eights(s))
        throw std::domain_error(std::string(op) +
                                " requires a scheme without figure eights; apply reduce_weak");
}

// Ovals in the subtree strictly below n.
std::int64_t ovals_below(const SchemeNode& n) {
    std::int64_t total = 0;
    for (const SchemeNode& c : n.children)
        if (c.kind == SchemeNode::Kind::Oval) total += 1 + ovals_below(c);
    return total;
}

// Applies pred to the linking count (ancestors + descendants) of every oval.
bool all_ovals_linked(const std::vector<SchemeNode>& nodes, std::int64_t depth,
                      bool parity_is_odd) {
    for (const SchemeNode& n : nodes) {
        const std::int64_t linked = depth + ovals_below(n);
        if (((linked % 2) != 0) != parity_is_odd) return false;
        if (!all_ovals_linked(n.children, depth + 1, parity_is_odd)) return false;
    }
    return true;
}

void collect_euler(const std::vector<SchemeNode>& nodes, std::size_t depth, bool even_side,
                   std::vector<int>& out) {
    for (const SchemeNode& n : nodes) {
        if ((depth % 2 == 0) == even_side)
            out.push_back(static_cast<int>((n.children.size() + 1) % 2));
        collect_euler(n.children, depth + 1, even_side, out);
    }
}

}  // namespace

Scheme parse_scheme(std::string_view text) {
    Parser parser{text};
    Scheme s;
    parser.parse_terms(s.roots, 0, false);
    return s;
}

std::string serialize(const Scheme& s) {
    std::string out;
    emit_siblings(out, s.roots);
    return out;
}

SchemeStats stats(const Scheme& s) {
    StatsWalk walk;
    for (const SchemeNode& r : s.roots) walk.visit(r);
    SchemeStats result = walk.st;
    if (walk.all_signed) result.oriented = walk.oriented;
    return result;
}

std::int64_t count_ovals(const Scheme& s) {
    std::int64_t total = 0;
    for (const SchemeNode& r : s.roots)
        if (r.kind == SchemeNode::Kind::Oval) total += 1 + ovals_below(r);
    return total;
}

bool has_figure_eights(const Scheme& s) {
    return stats(s).double_points != 0;
}

bool fully_signed(const Scheme& s) {
    return stats(s).oriented.has_value();
}

bool is_odd_curve(const Scheme& s) {
    require_no_figure_eights(s, "is_odd_curve");
    return all_ovals_linked(s.roots, 0, true);
}

bool is_even_curve(const Scheme& s) {
    require_no_figure_eights(s, "is_even_curve");
    return count_ovals(s) % 2 == 1 && all_ovals_linked(s.roots, 0, false);
}

std::vector<int> euler_parities_bplus(const Scheme& s) {
    require_no_figure_eights(s, "euler_parities_bplus");
    std::vector<int> out;
    collect_euler(s.roots, 0, true, out);
    return out;
}

std::vector<int> euler_parities_bminus(const Scheme& s) {
    require_no_figure_eights(s, "euler_parities_bminus");
    std::vector<int> out;
    out.push_back(static_cast<int>((s.roots.size() + 1) % 2));
    collect_euler(s.roots, 0, false, out);
    return out;
}

namespace {
std::vector<SchemeNode> reduce_nodes(const std::vector<SchemeNode>& nodes) {
    std::vector<SchemeNode> out;
    for (const SchemeNode& n : nodes) {
        if (n.kind == SchemeNode::Kind::FigureEight) continue;
        SchemeNode copy;
        copy.kind = n.kind;
        copy.sign = n.sign;
        copy.children = reduce_nodes(n.children);
        out.push_back(std::move(copy));
    }
    return out;
}
}  // namespace

Scheme reduce_weak(const Scheme& s) {
    return Scheme{reduce_nodes(s.roots)};
}

Scheme canonicalize(const Scheme& s) {
    Scheme out = s;
    for (SchemeNode& r : out.roots) canonicalize_node(r);
    std::sort(out.roots.begin(), out.roots.end(),
              [](const SchemeNode& a, const SchemeNode& b) { return node_key(a) < node_key(b); });
    return out;
}

namespace {
void flip_node(SchemeNode& n) {
    if (n.sign == Sign::Plus)
        n.sign = Sign::Minus;
    else if (n.sign == Sign::Minus)
        n.sign = Sign::Plus;
    for (SchemeNode& c : n.children) flip_node(c);
}
}  // namespace

Scheme flip(const Scheme& s) {
    Scheme out = s;
    for (SchemeNode& r : out.roots) flip_node(r);
    return out;
}

bool semiorientation_equal(const Scheme& a, const Scheme& b) {
    const Scheme cb = canonicalize(b);
    return canonicalize(a) == cb || canonicalize(flip(a)) == cb;
}

std::int64_t mu_simple_quarters(const Scheme& s) {
    require_no_figure_eights(s, "mu_simple");
    const SchemeStats st = stats(s);
    if (!st.oriented) throw std::domain_error("mu_simple requires every oval to be signed");
    return 2 * (st.n + st.p) - 4 * (st.oriented->pi_plus - st.oriented->pi_minus);
}

}  // namespace ovalis

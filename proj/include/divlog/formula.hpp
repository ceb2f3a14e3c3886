#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "divlog/error.hpp"
#include "divlog/interval.hpp"
#include "divlog/lattice.hpp"
#include "divlog/natural.hpp"

namespace divlog {

enum class FormulaKind { Var, Lit, Top, Bottom, And, Or, Imp, Not };

/// Immutable propositional formula. Copies share structure.
class Formula {
public:
    static Formula var(std::string name) {
        if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
        return Formula(Node{FormulaKind::Var, std::move(name), {}, {}, {}});
    }
    static Formula lit(Natural n) { return Formula(Node{FormulaKind::Lit, {}, std::move(n), {}, {}}); }
    static Formula top() { return Formula(Node{FormulaKind::Top, {}, {}, {}, {}}); }
    static Formula bottom() { return Formula(Node{FormulaKind::Bottom, {}, {}, {}, {}}); }
    static Formula conj(Formula l, Formula r) { return binary(FormulaKind::And, std::move(l), std::move(r)); }
    static Formula disj(Formula l, Formula r) { return binary(FormulaKind::Or, std::move(l), std::move(r)); }
    static Formula implies(Formula l, Formula r) { return binary(FormulaKind::Imp, std::move(l), std::move(r)); }
    static Formula negation(Formula f) {
        return Formula(Node{FormulaKind::Not, {}, {}, std::make_shared<const Formula>(std::move(f)), {}});
    }

    FormulaKind kind() const noexcept { return node_->kind; }
    const std::string& name() const noexcept { return node_->name; }
    const Natural& literal() const noexcept { return node_->literal; }
    // Operand of Not, or left operand of a binary node.
    const Formula& left() const noexcept { return *node_->left; }
    const Formula& child() const noexcept { return *node_->left; }
    const Formula& right() const noexcept { return *node_->right; }

    bool is_binary() const noexcept {
        return kind() == FormulaKind::And || kind() == FormulaKind::Or || kind() == FormulaKind::Imp;
    }

    friend bool operator==(const Formula& a, const Formula& b) {
        if (a.node_ == b.node_) return true;
        if (a.kind() != b.kind()) return false;
        switch (a.kind()) {
            case FormulaKind::Var: return a.name() == b.name();
            case FormulaKind::Lit: return a.literal() == b.literal();
            case FormulaKind::Top:
            case FormulaKind::Bottom: return true;
            case FormulaKind::Not: return a.child() == b.child();
            default: return a.left() == b.left() && a.right() == b.right();
        }
    }

private:
    struct Node {
        FormulaKind kind;
        std::string name;
        Natural literal;
        std::shared_ptr<const Formula> left;
        std::shared_ptr<const Formula> right;
    };

    explicit Formula(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

    static Formula binary(FormulaKind k, Formula l, Formula r) {
        return Formula(Node{k, {}, {}, std::make_shared<const Formula>(std::move(l)),
                            std::make_shared<const Formula>(std::move(r))});
    }

    std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Parsing
//
//   formula := or ('->' formula)?
//   or      := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := '~' unary | atom
//   atom    := identifier | integer | 'T' | 'F' | '(' formula ')'
// ---------------------------------------------------------------------------

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Formula parse_all() {
        Formula f = formula();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

private:
    Formula formula() {
        Formula lhs = disjunction();
        if (accept("->")) return Formula::implies(std::move(lhs), formula());
        return lhs;
    }

    Formula disjunction() {
        Formula f = conjunction();
        while (accept("|")) f = Formula::disj(std::move(f), conjunction());
        return f;
    }

    Formula conjunction() {
        Formula f = unary();
        while (accept("&")) f = Formula::conj(std::move(f), unary());
        return f;
    }

    Formula unary() {
        if (accept("~")) return Formula::negation(unary());
        return atom();
    }

    Formula atom() {
        skip_ws();
        if (pos_ == text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Formula f = formula();
            if (!accept(")")) fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const auto digits = text_.substr(start, pos_ - start);
            if (digits.find_first_not_of('0') == std::string_view::npos)
                throw SyntaxError(start, "literal must be a positive integer");
            return Formula::lit(Natural::parse(digits));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string id(text_.substr(start, pos_ - start));
            if (id == "T") return Formula::top();
            if (id == "F") return Formula::bottom();
            return Formula::var(std::move(id));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_, tok.size()) != tok) return false;
        pos_ += tok.size();
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline int precedence(const Formula& f) {
    switch (f.kind()) {
        case FormulaKind::Imp: return 1;
        case FormulaKind::Or: return 2;
        case FormulaKind::And: return 3;
        case FormulaKind::Not: return 4;
        default: return 5;
    }
}

inline void print_to(std::string& out, const Formula& f) {
    const auto wrapped = [&out](const Formula& sub, bool parens) {
        if (parens) out += '(';
        print_to(out, sub);
        if (parens) out += ')';
    };
    switch (f.kind()) {
        case FormulaKind::Var: out += f.name(); return;
        case FormulaKind::Lit: out += f.literal().str(); return;
        case FormulaKind::Top: out += 'T'; return;
        case FormulaKind::Bottom: out += 'F'; return;
        case FormulaKind::Not:
            out += '~';
            wrapped(f.child(), precedence(f.child()) < 4);
            return;
        case FormulaKind::Imp:
            // right-associative
            wrapped(f.left(), precedence(f.left()) <= 1);
            out += " -> ";
            wrapped(f.right(), false);
            return;
        case FormulaKind::Or:
        case FormulaKind::And: {
            // left-associative
            const int p = precedence(f);
            wrapped(f.left(), precedence(f.left()) < p);
            out += f.kind() == FormulaKind::Or ? " | " : " & ";
            wrapped(f.right(), precedence(f.right()) <= p);
            return;
        }
    }
}

inline void collect_variables(const Formula& f, std::set<std::string>& out) {
    switch (f.kind()) {
        case FormulaKind::Var: out.insert(f.name()); return;
        case FormulaKind::Not: collect_variables(f.child(), out); return;
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Imp:
            collect_variables(f.left(), out);
            collect_variables(f.right(), out);
            return;
        default: return;
    }
}

}  // namespace detail

inline Formula parse(std::string_view text) { return detail::Parser(text).parse_all(); }

/// Renders with the parser's tokens and the fewest parentheses that parse back to the same tree.
inline std::string print(const Formula& f) {
    std::string out;
    detail::print_to(out, f);
    return out;
}

/// Distinct variable names, sorted.
inline std::vector<std::string> variables(const Formula& f) {
    std::set<std::string> names;
    detail::collect_variables(f, names);
    return {names.begin(), names.end()};
}

// ---------------------------------------------------------------------------
// Semantics in an interval algebra: And = meet, Or = join, Imp = imp,
// Not = neg (which coincides with imp(a, bottom)), T = top, F = bottom.
// ---------------------------------------------------------------------------

using Assignment = std::map<std::string, IntervalElement, std::less<>>;

inline IntervalElement eval(const Interval& q, const Formula& f, const Assignment& env) {
    switch (f.kind()) {
        case FormulaKind::Var: {
            const auto it = env.find(f.name());
            if (it == env.end()) throw UnboundVariable("variable '" + f.name() + "' is not assigned");
            detail::require_member(q, it->second);
            return it->second;
        }
        case FormulaKind::Lit: return q.element(f.literal());
        case FormulaKind::Top: return q.top_element();
        case FormulaKind::Bottom: return q.bottom_element();
        case FormulaKind::Not: return neg(q, eval(q, f.child(), env));
        case FormulaKind::Imp: return imp(q, eval(q, f.left(), env), eval(q, f.right(), env));
        case FormulaKind::And:
        case FormulaKind::Or: {
            const auto l = eval(q, f.left(), env);
            const auto r = eval(q, f.right(), env);
            const Natural v = f.kind() == FormulaKind::And ? meet(l.value, r.value) : join(l.value, r.value);
            return q.element(v);
        }
    }
    throw std::logic_error("unhandled formula kind");
}

inline constexpr std::uint64_t kDefaultSearchCap = 1'000'000;

struct Validity {
    bool valid = true;
    // Set when !valid: the first failing assignment and the value it produced.
    Assignment counterexample;
    std::optional<IntervalElement> value;
};

namespace detail {

// Operation tables over the members of a small interval, indexed by position
// in ascending order. Filled from the same neg/imp/meet/join as eval().
class AlgebraTables {
public:
    AlgebraTables(const Interval& q, std::vector<IntervalElement> members) : q_(q), members_(std::move(members)) {
        const std::size_t n = members_.size();
        for (std::size_t i = 0; i < n; ++i) index_.emplace(members_[i].value, i);
        meet_.resize(n * n);
        join_.resize(n * n);
        imp_.resize(n * n);
        neg_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            neg_[i] = index_of(neg(q, members_[i]).value);
            for (std::size_t j = 0; j < n; ++j) {
                meet_[i * n + j] = index_of(meet(members_[i].value, members_[j].value));
                join_[i * n + j] = index_of(join(members_[i].value, members_[j].value));
                imp_[i * n + j] = index_of(imp(q, members_[i], members_[j]).value);
            }
        }
    }

    std::size_t size() const noexcept { return members_.size(); }
    const IntervalElement& member(std::size_t i) const { return members_[i]; }

    std::size_t index_of(const Natural& v) const {
        const auto it = index_.find(v);
        if (it == index_.end()) throw NotMember(v.str() + " is not a member of " + q_.describe());
        return it->second;
    }

    // vars[i] is the member index assigned to the i-th sorted variable.
    std::size_t eval(const Formula& f, const std::vector<std::string>& names, const std::vector<std::size_t>& vars) const {
        const std::size_t n = members_.size();
        switch (f.kind()) {
            case FormulaKind::Var: {
                const auto it = std::lower_bound(names.begin(), names.end(), f.name());
                return vars[static_cast<std::size_t>(it - names.begin())];
            }
            case FormulaKind::Lit: return index_of(f.literal());
            case FormulaKind::Top: return n - 1;
            case FormulaKind::Bottom: return 0;
            case FormulaKind::Not: return neg_[eval(f.child(), names, vars)];
            case FormulaKind::And: return meet_[eval(f.left(), names, vars) * n + eval(f.right(), names, vars)];
            case FormulaKind::Or: return join_[eval(f.left(), names, vars) * n + eval(f.right(), names, vars)];
            case FormulaKind::Imp: return imp_[eval(f.left(), names, vars) * n + eval(f.right(), names, vars)];
        }
        throw std::logic_error("unhandled formula kind");
    }

private:
    const Interval& q_;
    std::vector<IntervalElement> members_;
    std::map<Natural, std::size_t> index_;
    std::vector<std::size_t> meet_, join_, imp_, neg_;
};

inline constexpr std::size_t kTableLimit = 256;

}  // namespace detail

/// Exhaustive validity check: f is valid in q iff it evaluates to q.top() under
/// every assignment of members to its variables. On failure returns the first
/// counterexample in lexicographic order (variables sorted by name, values
/// ascending). Raises SearchLimit when |q|^(#variables) exceeds search_cap.
inline Validity check_valid(const Interval& q, const Formula& f, std::uint64_t search_cap = kDefaultSearchCap) {
    const auto names = variables(f);
    const std::uint64_t size = q.size();
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (space > search_cap / size)
            throw SearchLimit(std::to_string(names.size()) + " variables over " + q.describe() + " (" +
                              std::to_string(size) + " elements) exceed the search cap " + std::to_string(search_cap));
        space *= size;
    }
    if (space > search_cap) throw SearchLimit("assignment space exceeds the search cap " + std::to_string(search_cap));

    if (names.empty()) {
        Validity out;
        auto v = eval(q, f, {});
        if (v.value != q.top()) out = {false, {}, std::move(v)};
        return out;
    }

    auto members = enumerate(q, std::max<std::uint64_t>(size, 1));
    std::vector<std::size_t> idx(names.size(), 0);
    const auto advance = [&]() {
        // last variable varies fastest
        for (std::size_t i = idx.size(); i-- > 0;) {
            if (++idx[i] < members.size()) return true;
            idx[i] = 0;
        }
        return false;
    };
    const auto assignment_at = [&](const std::vector<IntervalElement>& ms) {
        Assignment env;
        for (std::size_t i = 0; i < names.size(); ++i) env.emplace(names[i], ms[idx[i]]);
        return env;
    };

    if (members.size() <= detail::kTableLimit) {
        const detail::AlgebraTables tables(q, members);
        const std::size_t top_index = tables.size() - 1;
        do {
            const std::size_t r = tables.eval(f, names, idx);
            if (r != top_index) {
                Validity out;
                out.valid = false;
                out.counterexample = assignment_at(members);
                out.value = tables.member(r);
                return out;
            }
        } while (advance());
        return {};
    }

    do {
        Assignment env = assignment_at(members);
        auto v = eval(q, f, env);
        if (v.value != q.top()) return Validity{false, std::move(env), std::move(v)};
    } while (advance());
    return {};
}

}  // namespace divlog

#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "divlog/error.hpp"
#include "divlog/interval.hpp"
#include "divlog/lattice.hpp"
#include "divlog/natural.hpp"

namespace divlog {

// ---------------------------------------------------------------------------
// Brute-force Heyting operations
//
// These never look at exponent vectors: candidates are scanned by value and
// combined with gcd/lcm only, so they are an independent check of neg()/imp().
// ---------------------------------------------------------------------------

namespace detail {

// Join of every candidate in `members` satisfying `qualifies`. Every partial
// join must qualify too, which shows the qualifying set is join-closed and the
// final join is its greatest element.
template <class Qualifies>
IntervalElement greatest_qualifying(const Interval& q, std::span<const IntervalElement> members, Qualifies&& qualifies,
                                    const char* what) {
    std::optional<Natural> acc;
    for (const auto& c : members) {
        if (!qualifies(c.value)) continue;
        acc = acc ? join(*acc, c.value) : c.value;
        if (!qualifies(*acc) || !q.contains(*acc))
            throw NoGreatestElement(std::string(what) + ": candidates in " + q.describe() + " are not closed under join at " +
                                    acc->str());
    }
    if (!acc) throw NoGreatestElement(std::string(what) + ": no candidate in " + q.describe());
    for (const auto& c : members)
        if (c.value == *acc) return c;
    return q.element(*acc);
}

}  // namespace detail

/// Greatest c in q with meet(a, c) == bottom, found by scanning `members` (all of q).
inline IntervalElement oracle_neg(const Interval& q, const IntervalElement& a, std::span<const IntervalElement> members) {
    detail::require_member(q, a);
    return detail::greatest_qualifying(
        q, members, [&](const Natural& c) { return meet(a.value, c) == q.bottom(); }, "oracle_neg");
}

inline IntervalElement oracle_neg(const Interval& q, const IntervalElement& a, std::uint64_t cap = kDefaultEnumerationCap) {
    const auto members = enumerate(q, cap);
    return oracle_neg(q, a, members);
}

/// Greatest c in q with meet(a, c) | b.
inline IntervalElement oracle_imp(const Interval& q, const IntervalElement& a, const IntervalElement& b,
                                  std::span<const IntervalElement> members) {
    detail::require_member(q, a);
    detail::require_member(q, b);
    return detail::greatest_qualifying(
        q, members, [&](const Natural& c) { return divides(meet(a.value, c), b.value); }, "oracle_imp");
}

inline IntervalElement oracle_imp(const Interval& q, const IntervalElement& a, const IntervalElement& b,
                                  std::uint64_t cap = kDefaultEnumerationCap) {
    const auto members = enumerate(q, cap);
    return oracle_imp(q, a, b, members);
}

// ---------------------------------------------------------------------------
// Law reports
// ---------------------------------------------------------------------------

struct Counterexample {
    std::vector<Natural> inputs;
    std::string variant;  // which side of a two-sided law failed; may be empty
    std::string lhs;
    std::string rhs;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
    friend auto operator<=>(const Counterexample& a, const Counterexample& b) {
        return std::tie(a.inputs, a.variant, a.lhs, a.rhs) <=> std::tie(b.inputs, b.variant, b.lhs, b.rhs);
    }
};

struct SkippedInterval {
    Natural bottom;
    Natural top;
    std::uint64_t size;

    friend bool operator==(const SkippedInterval&, const SkippedInterval&) = default;
    friend auto operator<=>(const SkippedInterval& a, const SkippedInterval& b) {
        return std::tie(a.top, a.bottom) <=> std::tie(b.top, b.bottom);
    }
};

struct LawReport {
    std::string law_name;
    std::vector<std::pair<std::string, std::uint64_t>> parameters;
    std::uint64_t cases_checked = 0;
    std::uint64_t failures = 0;
    std::vector<SkippedInterval> skipped;
    // The smallest failures (by inputs), at most max_counterexamples of them.
    std::vector<Counterexample> counterexamples;

    bool success() const noexcept { return failures == 0; }

    friend bool operator==(const LawReport&, const LawReport&) = default;
};

inline constexpr std::size_t kMaxCounterexamples = 32;

namespace detail {

inline void trim_counterexamples(std::vector<Counterexample>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.size() > kMaxCounterexamples) v.resize(kMaxCounterexamples);
}

inline void record_failure(LawReport& r, Counterexample c) {
    ++r.failures;
    r.counterexamples.push_back(std::move(c));
    if (r.counterexamples.size() > 2 * kMaxCounterexamples) trim_counterexamples(r.counterexamples);
}

}  // namespace detail

/// Folds `part` into `into`. Commutative and associative, so partial reports
/// from any partition of a sweep merge to the same result.
inline void merge(LawReport& into, const LawReport& part) {
    into.cases_checked += part.cases_checked;
    into.failures += part.failures;
    into.skipped.insert(into.skipped.end(), part.skipped.begin(), part.skipped.end());
    std::sort(into.skipped.begin(), into.skipped.end());
    into.counterexamples.insert(into.counterexamples.end(), part.counterexamples.begin(), part.counterexamples.end());
    detail::trim_counterexamples(into.counterexamples);
}

struct SweepOptions {
    unsigned jobs = 1;
};

namespace detail {

// Runs body(outer, reports) for outer in [1, outer_max] over `jobs` workers,
// each filling its own copy of `skeleton`, then merges.
template <class Body>
std::vector<LawReport> parallel_sweep(std::uint64_t outer_max, const SweepOptions& opts, std::vector<LawReport> skeleton,
                                      Body&& body) {
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(std::max<std::uint64_t>(outer_max, 1))));
    std::vector<std::vector<LawReport>> partial(jobs, skeleton);
    std::vector<std::exception_ptr> errors(jobs);
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (std::uint64_t outer = 1 + w; outer <= outer_max; outer += jobs) body(outer, partial[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (auto& parts : partial)
        for (std::size_t i = 0; i < skeleton.size(); ++i) merge(skeleton[i], parts[i]);
    return skeleton;
}

inline LawReport make_report(std::string name, std::vector<std::pair<std::string, std::uint64_t>> params) {
    LawReport r;
    r.law_name = std::move(name);
    r.parameters = std::move(params);
    return r;
}

inline std::vector<Natural> naturals_up_to(std::uint64_t max) {
    std::vector<Natural> v;
    v.reserve(max);
    for (std::uint64_t i = 1; i <= max; ++i) v.emplace_back(i);
    return v;
}

template <class... Ns>
void check_equal(LawReport& r, const Natural& lhs, const Natural& rhs, const char* variant, const Ns&... inputs) {
    if (lhs == rhs) return;
    record_failure(r, Counterexample{{inputs...}, variant, lhs.str(), rhs.str()});
}

}  // namespace detail

/// Exhaustive check of the lattice laws for gcd/lcm over [1, max].
///
/// Reports, in order: idempotency (max cases), commutativity (max^2),
/// associativity (max^3), mutual_distributivity (2 * max^3: meet over join and
/// join over meet are counted separately). Each tuple of the first three is one
/// case covering both meet and join.
inline std::vector<LawReport> verify_lattice_laws(std::uint64_t max, const SweepOptions& opts = {}) {
    if (max == 0) throw InvalidNatural("max must be at least 1");
    const std::vector<std::pair<std::string, std::uint64_t>> params{{"max", max}};
    std::vector<LawReport> skeleton{detail::make_report("idempotency", params), detail::make_report("commutativity", params),
                                    detail::make_report("associativity", params),
                                    detail::make_report("mutual_distributivity", params)};
    const auto nums = detail::naturals_up_to(max);

    return detail::parallel_sweep(max, opts, std::move(skeleton), [&](std::uint64_t outer, std::vector<LawReport>& r) {
        using detail::check_equal;
        const Natural& a = nums[outer - 1];
        auto& idem = r[0];
        auto& comm = r[1];
        auto& assoc = r[2];
        auto& dist = r[3];

        ++idem.cases_checked;
        const auto f = idem.failures;
        check_equal(idem, meet(a, a), a, "meet", a);
        if (idem.failures == f) check_equal(idem, join(a, a), a, "join", a);

        for (const Natural& b : nums) {
            ++comm.cases_checked;
            const Natural ab_meet = meet(a, b);
            const Natural ab_join = join(a, b);
            const auto fc = comm.failures;
            check_equal(comm, ab_meet, meet(b, a), "meet", a, b);
            if (comm.failures == fc) check_equal(comm, ab_join, join(b, a), "join", a, b);

            for (const Natural& c : nums) {
                ++assoc.cases_checked;
                const auto fa = assoc.failures;
                check_equal(assoc, meet(ab_meet, c), meet(a, meet(b, c)), "meet", a, b, c);
                if (assoc.failures == fa) check_equal(assoc, join(ab_join, c), join(a, join(b, c)), "join", a, b, c);

                dist.cases_checked += 2;
                const Natural ac_meet = meet(a, c);
                const Natural ac_join = join(a, c);
                check_equal(dist, meet(a, join(b, c)), join(ab_meet, ac_meet), "meet_over_join", a, b, c);
                check_equal(dist, join(a, meet(b, c)), meet(ab_join, ac_join), "join_over_meet", a, b, c);
            }
        }
    });
}

/// x ∧ (z ∨ y) == (x ∧ z) ∨ y over every (x, y, z) in [1, max]^3 with y | x.
inline LawReport verify_projective(std::uint64_t max, const SweepOptions& opts = {}) {
    if (max == 0) throw InvalidNatural("max must be at least 1");
    const auto nums = detail::naturals_up_to(max);
    auto reports = detail::parallel_sweep(
        max, opts, {detail::make_report("projective_identity", {{"max", max}})},
        [&](std::uint64_t outer, std::vector<LawReport>& r) {
            const Natural& x = nums[outer - 1];
            for (const Natural& y : nums) {
                if (!divides(y, x)) continue;
                for (const Natural& z : nums) {
                    ++r[0].cases_checked;
                    detail::check_equal(r[0], meet(x, join(z, y)), join(meet(x, z), y), "", x, y, z);
                }
            }
        });
    return std::move(reports.front());
}

/// Exhaustive Heyting checks over every interval Q_{y,x} with x <= top_max and
/// y | x. Intervals with more than size_cap members are skipped and listed.
///
/// Reports, in order:
///   neg_formula_vs_oracle      one case per member a
///   imp_formula_vs_oracle      one case per member pair (a, b)
///   residuation                one case per member triple (a, b, c):
///                              meet(a,b) | c  <=>  a | imp(b,c)
///   boolean_excluded_middle    one case per interval:
///                              is_boolean <=> join(a, neg a) == top for all a
///   boolean_complement_formula one case per interval:
///                              is_boolean <=> neg a == top*bottom/a for all a
///   imp_bottom_independence    one case per (y', a, b), y' a proper divisor of y:
///                              imp in Q_{y',x} equals imp in Q_{y,x}
inline std::vector<LawReport> verify_heyting(std::uint64_t top_max, std::uint64_t size_cap, const SweepOptions& opts = {}) {
    if (top_max == 0) throw InvalidNatural("top_max must be at least 1");
    const std::vector<std::pair<std::string, std::uint64_t>> params{{"top_max", top_max}, {"size_cap", size_cap}};
    std::vector<LawReport> skeleton;
    for (const char* name : {"neg_formula_vs_oracle", "imp_formula_vs_oracle", "residuation", "boolean_excluded_middle",
                             "boolean_complement_formula", "imp_bottom_independence"})
        skeleton.push_back(detail::make_report(name, params));

    return detail::parallel_sweep(top_max, opts, std::move(skeleton), [&](std::uint64_t outer, std::vector<LawReport>& r) {
        auto& neg_r = r[0];
        auto& imp_r = r[1];
        auto& res_r = r[2];
        auto& em_r = r[3];
        auto& cmp_r = r[4];
        auto& indep_r = r[5];

        const Natural x(outer);
        const auto bottoms = enumerate(Interval(Natural(1), x));
        for (const auto& y_elem : bottoms) {
            const Natural& y = y_elem.value;
            const Interval q(y, x);
            const std::uint64_t size = q.size();
            if (size > size_cap) {
                for (auto& rep : r) rep.skipped.push_back({y, x, size});
                continue;
            }
            const auto members = enumerate(q, size_cap);
            const std::size_t n = members.size();

            std::vector<IntervalElement> negs;
            negs.reserve(n);
            for (const auto& a : members) {
                negs.push_back(neg(q, a));
                ++neg_r.cases_checked;
                detail::check_equal(neg_r, negs.back().value, oracle_neg(q, a, members).value, "", y, x, a.value);
            }

            // imps[i * n + j] = members[i] -> members[j]
            std::vector<IntervalElement> imps;
            imps.reserve(n * n);
            for (const auto& a : members) {
                for (const auto& b : members) {
                    imps.push_back(imp(q, a, b));
                    ++imp_r.cases_checked;
                    detail::check_equal(imp_r, imps.back().value, oracle_imp(q, a, b, members).value, "", y, x, a.value,
                                        b.value);
                }
            }

            for (const auto& a : members) {
                for (std::size_t j = 0; j < n; ++j) {
                    const Natural ab = meet(a.value, members[j].value);
                    for (std::size_t k = 0; k < n; ++k) {
                        ++res_r.cases_checked;
                        const bool lhs = divides(ab, members[k].value);
                        const bool rhs = divides(a.value, imps[j * n + k].value);
                        if (lhs != rhs)
                            detail::record_failure(res_r, {{y, x, a.value, members[j].value, members[k].value},
                                                           "",
                                                           lhs ? "true" : "false",
                                                           rhs ? "true" : "false"});
                    }
                }
            }

            const bool boolean = is_boolean(q);
            bool excluded_middle = true;
            bool complement_formula = true;
            for (std::size_t i = 0; i < n; ++i) {
                const auto& a = members[i].value;
                excluded_middle = excluded_middle && join(a, negs[i].value) == x;
                const BigInt xy = x.value() * y.value();
                complement_formula = complement_formula && xy % a.value() == 0 && xy / a.value() == negs[i].value.value();
            }
            const auto as_text = [](bool b) { return std::string(b ? "true" : "false"); };
            ++em_r.cases_checked;
            if (boolean != excluded_middle)
                detail::record_failure(em_r, {{y, x}, "", as_text(boolean), as_text(excluded_middle)});
            ++cmp_r.cases_checked;
            if (boolean != complement_formula)
                detail::record_failure(cmp_r, {{y, x}, "", as_text(boolean), as_text(complement_formula)});

            for (const auto& coarser : enumerate(Interval(Natural(1), y))) {
                if (coarser.value == y) continue;
                const Interval wide(coarser.value, x);
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) {
                        ++indep_r.cases_checked;
                        detail::check_equal(indep_r, imp(wide, members[i], members[j]).value, imps[i * n + j].value, "",
                                            coarser.value, y, x, members[i].value, members[j].value);
                    }
                }
            }
        }
    });
}

}  // namespace divlog

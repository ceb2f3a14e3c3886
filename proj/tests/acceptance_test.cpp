// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "divlog/cli.hpp"
#include "divlog/factorization.hpp"
#include "divlog/formula.hpp"
#include "divlog/interval.hpp"
#include "divlog/lattice.hpp"
#include "divlog/oracle.hpp"

namespace {

using namespace divlog;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Fails the criterion with a message unless cond holds.
#define REQUIRE(cond, msg)                  \
    do {                                    \
        if (!(cond)) return {false, (msg)}; \
    } while (0)

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

const LawReport* find(const std::vector<LawReport>& rs, const std::string& name) {
    for (const auto& r : rs)
        if (r.law_name == name) return &r;
    return nullptr;
}

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

const std::vector<LawReport>& heyting_sweep() {
    static const auto reports = verify_heyting(200, 512, {jobs()});
    return reports;
}

// Sums of |Q|^k over every interval with top <= 200, from brute-force divisor lists.
std::uint64_t interval_power_sum(int k) {
    std::uint64_t total = 0;
    for (std::uint64_t x = 1; x <= 200; ++x) {
        for (std::uint64_t y : divisors_of(x)) {
            std::uint64_t n = 0;
            for (std::uint64_t d : divisors_of(x)) n += d % y == 0;
            std::uint64_t p = 1;
            for (int i = 0; i < k; ++i) p *= n;
            total += p;
        }
    }
    return total;
}

Outcome ac1_lattice_laws() {
    std::ostringstream out, err;
    const auto start = std::chrono::steady_clock::now();
    const int status = cli::run({"verify", "laws", "--max", "100", "--json"}, out, err);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    REQUIRE(status == 0, "exit status " + std::to_string(status));
    const auto doc = nlohmann::json::parse(out.str());
    const auto& reports = doc["report"];
    REQUIRE(reports.size() == 4, "expected four reports");
    const std::vector<std::pair<std::string, std::uint64_t>> expected{
        {"idempotency", 100}, {"commutativity", 100 * 100}, {"associativity", 100 * 100 * 100},
        {"mutual_distributivity", 2 * 100 * 100 * 100}};
    for (std::size_t i = 0; i < 4; ++i) {
        REQUIRE(reports[i]["law_name"] == expected[i].first, "unexpected law order");
        REQUIRE(reports[i]["cases_checked"] == expected[i].second, expected[i].first + " case count");
        REQUIRE(reports[i]["counterexamples"].empty(), expected[i].first + " has counterexamples");
    }
    REQUIRE(seconds < 60.0, "took " + std::to_string(seconds) + " s");
    return {true, "4 laws, 3010100 cases, " + std::to_string(seconds) + " s"};
}

Outcome ac2_projective() {
    std::ostringstream out, err;
    const int status = cli::run({"verify", "projective", "--max", "100", "--json"}, out, err);
    REQUIRE(status == 0, "exit status " + std::to_string(status));
    const auto report = nlohmann::json::parse(out.str())["report"][0];
    std::uint64_t expected = 0;
    for (std::uint64_t x = 1; x <= 100; ++x) expected += divisors_of(x).size() * 100;
    REQUIRE(report["cases_checked"] == expected, "case count");
    REQUIRE(report["counterexamples"].empty(), "counterexamples present");
    return {true, std::to_string(expected) + " triples with y | x"};
}

Outcome ac3_oracle_equivalence() {
    const auto& rs = heyting_sweep();
    const auto* n = find(rs, "neg_formula_vs_oracle");
    const auto* i = find(rs, "imp_formula_vs_oracle");
    REQUIRE(n && i, "missing reports");
    REQUIRE(n->skipped.empty(), "intervals skipped under size cap 512");
    REQUIRE(n->cases_checked == interval_power_sum(1), "neg case count");
    REQUIRE(i->cases_checked == interval_power_sum(2), "imp case count");
    REQUIRE(n->failures == 0, std::to_string(n->failures) + " neg discrepancies");
    REQUIRE(i->failures == 0, std::to_string(i->failures) + " imp discrepancies");
    return {true, std::to_string(n->cases_checked) + " neg + " + std::to_string(i->cases_checked) + " imp cases"};
}

Outcome ac4_residuation() {
    const auto* r = find(heyting_sweep(), "residuation");
    REQUIRE(r, "missing report");
    REQUIRE(r->cases_checked == interval_power_sum(3), "case count");
    REQUIRE(r->failures == 0, std::to_string(r->failures) + " violations");
    return {true, std::to_string(r->cases_checked) + " member triples"};
}

Outcome ac5_excluded_middle() {
    const Formula em = parse("p | ~p");
    std::uint64_t intervals = 0;
    for (std::uint64_t x = 1; x <= 120; ++x) {
        for (std::uint64_t y : divisors_of(x)) {
            const auto q = make_interval(y, x);
            ++intervals;
            REQUIRE(is_boolean(q) == check_valid(q, em).valid, "mismatch at " + q.describe());
        }
    }
    const auto q30 = make_interval(1, 30);
    REQUIRE(is_boolean(q30) && check_valid(q30, em).valid, "Q_{1,30} should be Boolean");
    const auto q12 = make_interval(1, 12);
    REQUIRE(!is_boolean(q12), "Q_{1,12} should not be Boolean");
    const auto v = check_valid(q12, em);
    REQUIRE(!v.valid, "excluded middle should fail in Q_{1,12}");
    REQUIRE(v.counterexample.at("p").value == Natural(2), "counterexample should be p=2");
    REQUIRE(v.value->value == Natural(6), "counterexample value should be 6");
    REQUIRE(v.value->value == join(2, neg(q12, q12.element(2)).value), "value should be join(2, neg 2)");
    return {true, std::to_string(intervals) + " intervals; Q_{1,12} fails at p=2 with value 6"};
}

Outcome ac6_complement_formula() {
    std::uint64_t boolean_intervals = 0, members = 0;
    for (std::uint64_t x = 1; x <= 200; ++x) {
        for (std::uint64_t y : divisors_of(x)) {
            const auto q = make_interval(y, x);
            if (!is_boolean(q)) continue;
            ++boolean_intervals;
            for (const auto& a : enumerate(q)) {
                ++members;
                const BigInt xy = q.top().value() * q.bottom().value();
                REQUIRE(xy % a.value.value() == 0, "x*y not divisible by a");
                REQUIRE(neg(q, a).value.value() == xy / a.value.value(), "neg != x*y/a in " + q.describe());
                REQUIRE(boolean_complement(q, a) == neg(q, a), "complement path disagrees");
            }
        }
    }
    const auto* r = find(heyting_sweep(), "boolean_complement_formula");
    REQUIRE(r && r->failures == 0, "sweep report has failures");
    return {true, std::to_string(boolean_intervals) + " Boolean intervals, " + std::to_string(members) + " members"};
}

Outcome ac7_intuitionistic_axioms() {
    const std::vector<std::string> axioms{
        "p -> (q -> p)",
        "(p -> (q -> r)) -> ((p -> q) -> (p -> r))",
        "p & q -> p",
        "p & q -> q",
        "p -> p | q",
        "q -> p | q",
        "(p -> r) -> ((q -> r) -> (p | q -> r))",
        "F -> p",
        "(~p -> (p -> F)) & ((p -> F) -> ~p)",
    };
    std::vector<Formula> formulas;
    for (const auto& a : axioms) formulas.push_back(parse(a));
    std::uint64_t intervals = 0;
    for (std::uint64_t x = 1; x <= 120; ++x) {
        for (std::uint64_t y : divisors_of(x)) {
            const auto q = make_interval(y, x);
            if (q.size() > 64) continue;
            ++intervals;
            for (std::size_t i = 0; i < formulas.size(); ++i)
                REQUIRE(check_valid(q, formulas[i]).valid, axioms[i] + " fails in " + q.describe());
        }
    }
    const auto v = check_valid(make_interval(1, 4), parse("((p->q)->p)->p"));
    REQUIRE(!v.valid, "Peirce law should fail in Q_{1,4}");
    REQUIRE(v.counterexample.at("p").value == Natural(2) && v.counterexample.at("q").value == Natural(1),
            "Peirce counterexample should be p=2 q=1");
    REQUIRE(v.value->value == Natural(2), "Peirce counterexample value should be 2");
    return {true, std::to_string(axioms.size()) + " axioms in " + std::to_string(intervals) +
                      " intervals; Peirce fails in Q_{1,4} at p=2 q=1"};
}

Outcome ac8_round_trip_and_euclid() {
    for (std::uint64_t n = 1; n <= 100'000; ++n)
        REQUIRE(reconstruct(factorize(Natural(n))) == Natural(n), "round trip fails at " + std::to_string(n));
    std::vector<Natural> nums;
    for (int i = 1; i <= 1000; ++i) nums.emplace_back(i);
    for (const auto& a : nums)
        for (const auto& b : nums) REQUIRE(meet(a, b) == meet_euclid(a, b), "gcd mismatch at " + a.str() + "," + b.str());
    return {true, "100000 round trips, 1000000 gcd pairs"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"AC1 lattice laws over [1,100]", ac1_lattice_laws},
        {"AC2 projective identity over [1,100]", ac2_projective},
        {"AC3 neg/imp equal brute-force maxima (top<=200, size<=512)", ac3_oracle_equivalence},
        {"AC4 residuation adjunction (top<=200)", ac4_residuation},
        {"AC5 Boolean iff excluded middle valid (top<=120)", ac5_excluded_middle},
        {"AC6 Boolean complement is top*bottom/a (top<=200)", ac6_complement_formula},
        {"AC7 intuitionistic axioms valid; Peirce fails in Q_{1,4}", ac7_intuitionistic_axioms},
        {"AC8 factorization round trip and gcd oracle agreement", ac8_round_trip_and_euclid},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        failed += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

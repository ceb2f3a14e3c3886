#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "divlog/error.hpp"
#include "divlog/factorization.hpp"
#include "divlog/formula.hpp"
#include "divlog/interval.hpp"
#include "divlog/json.hpp"
#include "divlog/lattice.hpp"
#include "divlog/natural.hpp"
#include "divlog/oracle.hpp"

namespace divlog::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

inline std::optional<std::string> process_env(const std::string& name) {
    if (const char* v = std::getenv(name.c_str())) return std::string(v);
    return std::nullopt;
}

namespace detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t cap_from_env(const EnvLookup& env, const std::string& name, std::uint64_t fallback) {
    const auto v = env(name);
    if (!v) return fallback;
    try {
        const Natural n = Natural::parse(*v);
        if (auto small = n.to_u64()) return *small;
    } catch (const InvalidNatural&) {
    }
    throw UsageError(name + " must be a positive integer, got '" + *v + "'");
}

// What a subcommand produced: a result payload plus the plain-text rendering.
struct Outcome {
    nlohmann::json result;
    std::string text;
    std::optional<nlohmann::json> report;
    bool ok = true;
};

inline std::string factorization_text(const Natural& n, const ExponentVector& v) {
    std::string s = n.str() + " = ";
    if (v.empty()) return s + "1";
    bool first = true;
    for (const auto& [p, e] : v.terms()) {
        if (!first) s += " * ";
        first = false;
        s += p.str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

inline Outcome reports_outcome(const std::vector<LawReport>& reports) {
    Outcome out;
    out.report = nlohmann::json::array();
    std::ostringstream text;
    bool all = true;
    for (const auto& r : reports) {
        all = all && r.success();
        out.report->push_back(to_json(r));
        text << (r.success() ? "PASS " : "FAIL ") << r.law_name << " (";
        for (std::size_t i = 0; i < r.parameters.size(); ++i)
            text << (i ? " " : "") << r.parameters[i].first << "=" << r.parameters[i].second;
        text << "): " << r.cases_checked << " cases";
        if (!r.success()) text << ", " << r.failures << " failed";
        text << '\n';
        for (const auto& c : r.counterexamples) {
            text << "  counterexample";
            if (!c.variant.empty()) text << " [" << c.variant << "]";
            text << " inputs=(";
            for (std::size_t i = 0; i < c.inputs.size(); ++i) text << (i ? ", " : "") << c.inputs[i];
            text << ") lhs=" << c.lhs << " rhs=" << c.rhs << '\n';
        }
    }
    if (!reports.empty() && !reports.front().skipped.empty()) {
        text << "skipped " << reports.front().skipped.size() << " interval(s) over the size cap:";
        for (const auto& s : reports.front().skipped)
            text << " Q_{" << s.bottom << "," << s.top << "}(" << s.size << ")";
        text << '\n';
    }
    out.ok = all;
    out.result = {{"success", all}, {"laws", reports.size()}};
    std::string t = text.str();
    if (!t.empty() && t.back() == '\n') t.pop_back();
    out.text = std::move(t);
    return out;
}

inline Outcome single(nlohmann::json result, std::string text) {
    Outcome o;
    o.result = std::move(result);
    o.text = std::move(text);
    return o;
}

}  // namespace detail

/// Runs one command line (without the program name). Writes the rendered
/// document to `out` and, in text mode, errors to `err`. Returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const EnvLookup& env = process_env) {
    const bool json_mode = std::find(args.begin(), args.end(), "--json") != args.end();

    const auto emit_error = [&](std::string_view name, const std::string& message, int code) {
        if (json_mode) {
            nlohmann::json doc{{"command", args}, {"error", {{"name", name}, {"message", message}}}};
            out << doc.dump(2) << '\n';
        } else {
            err << "error: " << name << ": " << message << '\n';
        }
        return code;
    };

    CLI::App app{"Divisibility-lattice logic: gcd/lcm lattice, interval Heyting algebras, formula evaluation",
                 "divlog"};
    app.fallthrough();
    app.require_subcommand(1);
    bool json_flag = false;
    app.add_flag("--json", json_flag, "Emit a JSON document instead of text");

    std::string n_arg, a_arg, b_arg, bottom_arg, top_arg, action, formula_text;
    std::vector<std::string> lets;
    std::uint64_t max = 100, top_max = 200, size_cap = 512;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    auto* factor = app.add_subcommand("factor", "Prime factorization of N");
    factor->add_option("N", n_arg)->required();

    auto* gcd = app.add_subcommand("gcd", "Meet (greatest common divisor)");
    auto* lcm = app.add_subcommand("lcm", "Join (least common multiple)");
    auto* div = app.add_subcommand("divides", "Whether A divides B");
    for (auto* sub : {gcd, lcm, div}) {
        sub->add_option("A", a_arg)->required();
        sub->add_option("B", b_arg)->required();
    }

    const auto add_bounds = [&](CLI::App* sub) {
        sub->add_option("--bottom", bottom_arg, "Interval bottom Y")->required();
        sub->add_option("--top", top_arg, "Interval top X")->required();
    };

    auto* interval = app.add_subcommand("interval", "Inspect the interval Q_{Y,X}");
    add_bounds(interval);
    interval->add_option("action", action)->required()->check(CLI::IsMember({"list", "size", "is-boolean"}));

    auto* neg_cmd = app.add_subcommand("neg", "Pseudocomplement of A");
    add_bounds(neg_cmd);
    neg_cmd->add_option("A", a_arg)->required();

    auto* imp_cmd = app.add_subcommand("imp", "Implication A -> B");
    add_bounds(imp_cmd);
    imp_cmd->add_option("A", a_arg)->required();
    imp_cmd->add_option("B", b_arg)->required();

    auto* complement = app.add_subcommand("complement", "Boolean complement X*Y/A");
    add_bounds(complement);
    complement->add_option("A", a_arg)->required();

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula");
    add_bounds(eval_cmd);
    eval_cmd->add_option("FORMULA", formula_text)->required();
    eval_cmd->add_option("--let", lets, "Variable binding var=value");

    auto* taut = app.add_subcommand("taut", "Exhaustive validity check");
    add_bounds(taut);
    taut->add_option("FORMULA", formula_text)->required();

    auto* verify = app.add_subcommand("verify", "Exhaustive law sweeps");
    verify->require_subcommand(1);
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    auto* v_laws = verify->add_subcommand("laws", "Lattice laws of gcd/lcm over [1,N]");
    v_laws->add_option("--max", max)->check(CLI::PositiveNumber);
    auto* v_heyting = verify->add_subcommand("heyting", "Heyting-algebra properties of all intervals");
    v_heyting->add_option("--top-max", top_max)->check(CLI::PositiveNumber);
    v_heyting->add_option("--size-cap", size_cap);
    auto* v_proj = verify->add_subcommand("projective", "Projective identity over [1,N]^3");
    v_proj->add_option("--max", max)->check(CLI::PositiveNumber);

    std::vector<const char*> argv{"divlog"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        return emit_error("UsageError", e.what(), kUsageError);
    }

    detail::Outcome outcome;
    try {
        const std::uint64_t enum_cap = detail::cap_from_env(env, "DIVLOG_ENUM_CAP", kDefaultEnumerationCap);
        const std::uint64_t search_cap = detail::cap_from_env(env, "DIVLOG_SEARCH_CAP", kDefaultSearchCap);
        const auto num = [](const std::string& s) { return Natural::parse(s); };
        const auto bounds = [&] { return make_interval(num(bottom_arg), num(top_arg)); };
        const SweepOptions sweep{jobs};

        if (factor->parsed()) {
            const Natural n = num(n_arg);
            const auto v = factorize(n);
            outcome = detail::single({{"n", to_json(n)}, {"factors", to_json(v)}}, detail::factorization_text(n, v));
        } else if (gcd->parsed() || lcm->parsed()) {
            const Natural r = gcd->parsed() ? meet(num(a_arg), num(b_arg)) : join(num(a_arg), num(b_arg));
            outcome = detail::single(to_json(r), r.str());
        } else if (div->parsed()) {
            const bool r = divides(num(a_arg), num(b_arg));
            outcome = detail::single(r, r ? "true" : "false");
        } else if (interval->parsed()) {
            const Interval q = bounds();
            if (action == "size") {
                outcome = detail::single(q.size(), std::to_string(q.size()));
            } else if (action == "is-boolean") {
                const bool b = is_boolean(q);
                outcome = detail::single(b, b ? "true" : "false");
            } else {
                const auto members = enumerate(q, enum_cap);
                if (!json_mode) {
                    for (const auto& m : members) out << m.value << '\n';
                    return kSuccess;
                }
                auto arr = nlohmann::json::array();
                for (const auto& m : members) arr.push_back(to_json(m.value));
                outcome = detail::single(std::move(arr), "");
            }
        } else if (neg_cmd->parsed()) {
            const Interval q = bounds();
            const auto r = neg(q, q.element(num(a_arg)));
            outcome = detail::single(to_json(r.value), r.value.str());
        } else if (imp_cmd->parsed()) {
            const Interval q = bounds();
            const auto r = imp(q, q.element(num(a_arg)), q.element(num(b_arg)));
            outcome = detail::single(to_json(r.value), r.value.str());
        } else if (complement->parsed()) {
            const Interval q = bounds();
            const auto r = boolean_complement(q, q.element(num(a_arg)));
            outcome = detail::single(to_json(r.value), r.value.str());
        } else if (eval_cmd->parsed()) {
            const Interval q = bounds();
            const Formula f = parse(formula_text);
            Assignment env_vars;
            for (const auto& binding : lets) {
                const auto eq = binding.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw detail::UsageError("--let expects var=value, got '" + binding + "'");
                env_vars.insert_or_assign(binding.substr(0, eq), q.element(num(binding.substr(eq + 1))));
            }
            const auto r = eval(q, f, env_vars);
            outcome = detail::single(to_json(r.value), r.value.str());
        } else if (taut->parsed()) {
            const Interval q = bounds();
            const auto v = check_valid(q, parse(formula_text), search_cap);
            if (v.valid) {
                outcome = detail::single({{"valid", true}}, "valid");
            } else {
                nlohmann::json cex = nlohmann::json::object();
                std::string text = "counterexample";
                for (const auto& [name, value] : v.counterexample) {
                    cex[name] = to_json(value.value);
                    text += " " + name + "=" + value.value.str();
                }
                text += " (value " + v.value->value.str() + ")";
                outcome = detail::single({{"valid", false}, {"counterexample", cex}, {"value", to_json(v.value->value)}},
                                         text);
            }
        } else if (v_laws->parsed()) {
            outcome = detail::reports_outcome(verify_lattice_laws(max, sweep));
        } else if (v_heyting->parsed()) {
            outcome = detail::reports_outcome(verify_heyting(top_max, size_cap, sweep));
        } else if (v_proj->parsed()) {
            outcome = detail::reports_outcome({verify_projective(max, sweep)});
        }
    } catch (const detail::UsageError& e) {
        return emit_error("UsageError", e.what(), kUsageError);
    } catch (const Error& e) {
        return emit_error(e.name(), e.what(), kDomainError);
    } catch (const std::logic_error& e) {
        return emit_error("InternalError", e.what(), kDomainError);
    }

    if (json_mode) {
        nlohmann::json doc{{"command", args}, {"result", outcome.result}};
        if (outcome.report) doc["report"] = *outcome.report;
        out << doc.dump(2) << '\n';
    } else {
        out << outcome.text << '\n';
    }
    return outcome.ok ? kSuccess : kDomainError;
}

}  // namespace divlog::cli

#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "divlog/cli.hpp"

namespace divlog::cli {
namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args, std::map<std::string, std::string> env = {}) {
    std::ostringstream out, err;
    const int status = run(args, out, err, [env](const std::string& name) -> std::optional<std::string> {
        const auto it = env.find(name);
        if (it == env.end()) return std::nullopt;
        return it->second;
    });
    return {status, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected_status = 0,
                        std::map<std::string, std::string> env = {}) {
    args.push_back("--json");
    const auto r = run_cli(args, std::move(env));
    EXPECT_EQ(r.status, expected_status) << r.out << r.err;
    return nlohmann::json::parse(r.out);
}

TEST(Cli, ArithmeticSubcommands) {
    EXPECT_EQ(run_cli({"factor", "360"}).out, "360 = 2^3 * 3^2 * 5\n");
    EXPECT_EQ(run_cli({"factor", "1"}).out, "1 = 1\n");
    EXPECT_EQ(run_cli({"gcd", "12", "18"}).out, "6\n");
    EXPECT_EQ(run_cli({"lcm", "12", "18"}).out, "36\n");
    EXPECT_EQ(run_cli({"divides", "6", "24"}).out, "true\n");
    EXPECT_EQ(run_cli({"divides", "4", "6"}).out, "false\n");

    const auto doc = run_json({"factor", "360"});
    EXPECT_EQ(doc["result"]["n"], 360);
    EXPECT_EQ(doc["result"]["factors"][0]["prime"], 2);
    EXPECT_EQ(doc["result"]["factors"][0]["exponent"], 3);
}

TEST(Cli, BigNumbersStayExact) {
    const auto doc = run_json({"lcm", "18446744073709551616", "3"});  // 2^64 * 3
    EXPECT_EQ(doc["result"], "55340232221128654848");
    EXPECT_EQ(run_cli({"gcd", "18446744073709551616", "1024"}).out, "1024\n");
}

TEST(Cli, IntervalSubcommands) {
    EXPECT_EQ(run_cli({"interval", "--bottom", "2", "--top", "24", "list"}).out, "2\n4\n6\n8\n12\n24\n");
    EXPECT_EQ(run_cli({"interval", "--bottom", "2", "--top", "24", "size"}).out, "6\n");
    EXPECT_EQ(run_cli({"interval", "--bottom", "1", "--top", "30", "is-boolean"}).out, "true\n");
    EXPECT_EQ(run_json({"interval", "--bottom", "1", "--top", "30", "list"})["result"],
              nlohmann::json({1, 2, 3, 5, 6, 10, 15, 30}));
    EXPECT_EQ(run_json({"interval", "--bottom", "1", "--top", "12", "is-boolean"})["result"], false);
}

TEST(Cli, EnumerationCapFromEnvironment) {
    const std::map<std::string, std::string> env{{"DIVLOG_ENUM_CAP", "5"}};
    const auto doc = run_json({"interval", "--bottom", "2", "--top", "24", "list"}, 1, env);
    EXPECT_EQ(doc["error"]["name"], "EnumerationLimit");
    // size never materializes elements
    EXPECT_EQ(run_json({"interval", "--bottom", "2", "--top", "24", "size"}, 0, env)["result"], 6);

    EXPECT_EQ(run_cli({"interval", "--bottom", "2", "--top", "24", "list"}, {{"DIVLOG_ENUM_CAP", "x"}}).status,
              kUsageError);
}

TEST(Cli, HeytingOperations) {
    EXPECT_EQ(run_cli({"neg", "--bottom", "2", "--top", "24", "6"}).out, "8\n");
    EXPECT_EQ(run_cli({"imp", "--bottom", "1", "--top", "12", "4", "3"}).out, "3\n");
    EXPECT_EQ(run_cli({"complement", "--bottom", "1", "--top", "30", "5"}).out, "6\n");
    EXPECT_EQ(run_json({"neg", "--bottom", "2", "--top", "24", "6"})["result"], 8);
}

TEST(Cli, FormulaSubcommands) {
    EXPECT_EQ(run_cli({"eval", "--bottom", "1", "--top", "12", "2 | ~2"}).out, "6\n");
    EXPECT_EQ(run_cli({"eval", "--bottom", "1", "--top", "12", "p & q", "--let", "p=4", "q=6"}).out, "2\n");
    EXPECT_EQ(run_cli({"eval", "--bottom", "1", "--top", "12", "p | q", "--let", "p=4", "--let", "q=6"}).out, "12\n");

    EXPECT_EQ(run_cli({"taut", "--bottom", "1", "--top", "4", "((p->q)->p)->p"}).out,
              "counterexample p=2 q=1 (value 2)\n");
    EXPECT_EQ(run_cli({"taut", "--bottom", "6", "--top", "12", "p | ~p"}).out, "valid\n");

    const auto doc = run_json({"taut", "--bottom", "1", "--top", "4", "((p->q)->p)->p"});
    EXPECT_EQ(doc["result"]["valid"], false);
    EXPECT_EQ(doc["result"]["counterexample"], nlohmann::json({{"p", 2}, {"q", 1}}));
    EXPECT_EQ(doc["result"]["value"], 2);
}

TEST(Cli, SearchCapFromEnvironment) {
    const auto doc = run_json({"taut", "--bottom", "1", "--top", "12", "p -> q -> p"}, 1, {{"DIVLOG_SEARCH_CAP", "35"}});
    EXPECT_EQ(doc["error"]["name"], "SearchLimit");
    run_json({"taut", "--bottom", "1", "--top", "12", "p -> q -> p"}, 0, {{"DIVLOG_SEARCH_CAP", "36"}});
}

TEST(Cli, DomainErrorsExitOne) {
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
        {{"interval", "--bottom", "4", "--top", "6", "size"}, "InvalidInterval"},
        {{"neg", "--bottom", "2", "--top", "24", "3"}, "NotMember"},
        {{"complement", "--bottom", "1", "--top", "12", "2"}, "NotBoolean"},
        {{"eval", "--bottom", "1", "--top", "12", "p &"}, "SyntaxError"},
        {{"eval", "--bottom", "1", "--top", "12", "p"}, "UnboundVariable"},
        {{"gcd", "0", "5"}, "InvalidNatural"},
        {{"factor", "99999999999999999999"}, "FactorizationLimit"},
    };
    for (const auto& [args, name] : cases) {
        const auto doc = run_json(args, kDomainError);
        EXPECT_EQ(doc["error"]["name"], name);
        EXPECT_FALSE(doc.contains("result"));
        EXPECT_EQ(run_cli(args).status, kDomainError);
        EXPECT_NE(run_cli(args).err.find(name), std::string::npos);
    }
}

TEST(Cli, UsageErrorsExitTwo) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"frobnicate"},
             {},
             {"gcd", "1"},
             {"neg", "--top", "24", "6"},
             {"interval", "--bottom", "1", "--top", "4", "shuffle"},
             {"verify", "laws", "--bogus"},
             {"verify"},
             {"eval", "--bottom", "1", "--top", "4", "p", "--let", "p"},
         }) {
        EXPECT_EQ(run_cli(args).status, kUsageError) << args.size();
        const auto doc = run_json(args, kUsageError);
        EXPECT_EQ(doc["error"]["name"], "UsageError");
    }
}

TEST(Cli, VerifySubcommands) {
    const auto laws = run_json({"verify", "laws", "--max", "20"});
    ASSERT_EQ(laws["report"].size(), 4u);
    for (const auto& r : laws["report"]) {
        EXPECT_TRUE(r["counterexamples"].empty());
        EXPECT_TRUE(r["skipped"].empty());
    }
    EXPECT_EQ(laws["report"][3]["law_name"], "mutual_distributivity");
    EXPECT_EQ(laws["report"][3]["cases_checked"], 2 * 20 * 20 * 20);
    EXPECT_EQ(laws["result"]["success"], true);

    const auto heyting = run_json({"verify", "heyting", "--top-max", "40", "--size-cap", "6"});
    EXPECT_EQ(heyting["report"].size(), 6u);
    EXPECT_FALSE(heyting["report"][0]["skipped"].empty());

    const auto proj = run_json({"verify", "projective", "--max", "10"});
    EXPECT_EQ(proj["report"][0]["law_name"], "projective_identity");

    const auto text = run_cli({"verify", "projective", "--max", "10"});
    EXPECT_EQ(text.status, 0);
    EXPECT_EQ(text.out.rfind("PASS projective_identity", 0), 0u);
}

TEST(Cli, JsonDocumentRoundTrips) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"verify", "heyting", "--top-max", "30", "--size-cap", "4", "--json"},
             {"taut", "--bottom", "1", "--top", "4", "((p->q)->p)->p", "--json"},
             {"neg", "--bottom", "2", "--top", "24", "3", "--json"},
         }) {
        const auto r = run_cli(args);
        EXPECT_EQ(nlohmann::json::parse(r.out).dump(2) + "\n", r.out);
    }
}

TEST(Cli, OutputIndependentOfJobs) {
    const auto one = run_cli({"verify", "--jobs", "1", "heyting", "--top-max", "60", "--size-cap", "8", "--json"});
    const auto many = run_cli({"verify", "--jobs", "7", "heyting", "--top-max", "60", "--size-cap", "8", "--json"});
    auto a = nlohmann::json::parse(one.out);
    auto b = nlohmann::json::parse(many.out);
    a.erase("command");
    b.erase("command");
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_EQ(run_cli({"verify", "--jobs", "1", "laws", "--max", "15"}).out,
              run_cli({"verify", "--jobs", "4", "laws", "--max", "15"}).out);
}

}  // namespace
}  // namespace divlog::cli

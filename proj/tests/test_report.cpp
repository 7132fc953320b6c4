#include <bernhankel/suites.hpp>

#include <gtest/gtest.h>

using namespace bernhankel;

namespace {

nlohmann::json without_timing(const VerificationReport& r) { return nlohmann::json::parse(to_json(r, false).dump()); }

}  // namespace

TEST(Report, EmptyJson) {
    EXPECT_EQ(to_json(VerificationReport{"vmatrix", {}}).dump(), R"({"suite":"vmatrix","cases":[]})");
}

TEST(Report, PassingCaseFields) {
    VerificationReport r{"x", {make_case("detvn", Params{{"n", 1L}, {"r", 2L}}, "9", "9")}};
    const auto j = to_json(r);
    EXPECT_EQ(j["cases"][0]["status"], "pass");
    EXPECT_EQ(j["cases"][0]["params"]["r"], 2);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j["cases"][0].items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"identity", "params", "status", "lhs", "rhs", "elapsed_ms"}));
    EXPECT_TRUE(r.all_pass());
}

TEST(Report, FailingCaseAndCsv) {
    VerificationReport r{"x", {make_case("a,b", Params{{"x", std::string("1/2")}}, "[1, 2]", "[1]")}};
    EXPECT_EQ(r.failures(), 1u);
    const std::string csv = to_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "identity,params,status,lhs,rhs,elapsed_ms");
    EXPECT_NE(csv.find("\"a,b\",x=1/2,fail,\"[1, 2]\",[1],0"), std::string::npos);
    EXPECT_NE(to_text(r).find("FAIL a,b"), std::string::npos);
}

TEST(Report, SortingIsByIdentityThenParams) {
    VerificationReport r{"x",
                         {make_case("b", Params{{"n", 2L}}, "1", "1"), make_case("a", Params{{"n", 10L}}, "1", "1"),
                          make_case("a", Params{{"n", 9L}}, "1", "1")}};
    r.sort_cases();
    EXPECT_EQ(r.cases[0].identity, "a");
    EXPECT_EQ(std::get<long>(r.cases[0].params.at("n")), 9);
    EXPECT_EQ(r.cases[2].identity, "b");
}

TEST(Suites, UnknownSuiteThrows) { EXPECT_THROW(run_suite("nope"), std::invalid_argument); }

TEST(Suites, MinimalGridPasses) {
    const auto r = run_suite("all", {0, 1, false, false});
    EXPECT_FALSE(r.cases.empty());
    EXPECT_TRUE(r.all_pass()) << to_text(r);
    EXPECT_EQ(exit_code(r), 0);
}

TEST(Suites, VmatrixGridPasses) {
    const auto r = run_suite("vmatrix", {4, 6, false, false});
    EXPECT_TRUE(r.all_pass()) << to_text(r);
}

TEST(Suites, FaultInjectionFails) {
    const auto r = run_suite("hankel-closed-forms", {3, 2, false, true});
    EXPECT_GE(r.failures(), 1u);
    EXPECT_EQ(exit_code(r), 1);
}

TEST(Suites, EachSuiteDefaultGridPasses) {
    for (const auto& name : suite_names()) {
        if (name == "all") continue;
        const auto r = run_suite(name);
        EXPECT_TRUE(r.all_pass()) << name << "\n" << to_text(r);
    }
}

TEST(Suites, ParallelIsDeterministic) {
    const SuiteOptions serial{3, 4, false, false}, parallel{3, 4, true, false};
    const auto a = without_timing(run_suite("all", serial));
    EXPECT_EQ(a, without_timing(run_suite("all", serial)));
    EXPECT_EQ(a, without_timing(run_suite("all", parallel)));
}

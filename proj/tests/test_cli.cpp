#include <gtest/gtest.h>

#include <fstream>

#include "f2coh/cli.hpp"
#include "support/fixtures.hpp"

using namespace f2coh;
using namespace f2coh::cli;

namespace {

Context temp_context(const fixtures::TempDir& dir) {
    Context ctx;
    ctx.cache_dir = dir.path();
    return ctx;
}

Context no_cache() {
    Context ctx;
    ctx.use_cache = false;
    return ctx;
}

std::vector<std::string> statuses(const Report& r) {
    std::vector<std::string> out;
    for (const auto& i : r.items) out.push_back(i.label + (i.passed ? ":pass" : ":fail"));
    return out;
}

Json without_timing(const Report& r) {
    auto j = report_to_json(r);
    j.erase("timing_ms");
    j["results"].erase("cache");
    return j;
}

MasseyOptions expecting(std::vector<std::string> values) {
    MasseyOptions opt;
    opt.expect = std::move(values);
    return opt;
}

}  // namespace

TEST(CliMassey, QuaternionFourFold) {
    for (const auto* g : {"Q8", "Q16", "Q32"}) {
        const auto r = cmd_massey("massey", g, {"Y", "Y2", "Y", "Y2"}, expecting({"V"}), no_cache());
        EXPECT_EQ(exit_code(r), 0) << g << "\n" << report_to_text(r);
        EXPECT_EQ(r.results["values"], Json::array({"V"}));
        EXPECT_EQ(r.results["verdict"], "defined");
        EXPECT_EQ(r.results["degree"], 4);
    }
}

TEST(CliMassey, SemidihedralTriple) {
    const auto r = cmd_massey("massey", "SD16", {"X", "X2", "Y"}, expecting({"U", "U+Y3"}), no_cache());
    EXPECT_EQ(exit_code(r), 0) << report_to_text(r);
    EXPECT_EQ(r.results["values"].size(), 2u);
}

TEST(CliMassey, SemidihedralFourFoldAsStated) {
    const auto r = cmd_massey("massey", "SD16", {"X", "X2", "X", "X2"}, expecting({"V", "V+YU"}), no_cache());
    EXPECT_EQ(exit_code(r), 0) << report_to_text(r);
}

TEST(CliMassey, UndefinedProductsCarryAProof) {
    MasseyOptions opt;
    opt.mode = HomSearchMode::Exhaustive;
    const auto five = cmd_massey("massey", "D8", {"X", "X+Y", "X", "X+Y", "X"}, opt, no_cache());
    EXPECT_EQ(five.results["defined"], false);
    EXPECT_NE(five.results["verdict"].get<std::string>().find("obstruction-proved"), std::string::npos);
    const auto q8 = cmd_massey("massey", "Q8", {"X", "X+Y", "X", "X+Y"}, opt, no_cache());
    EXPECT_EQ(q8.results["defined"], false);
    EXPECT_EQ(q8.results["verdict"], "undefined (search-proved)");
    EXPECT_TRUE(q8.results["values"].empty());
}

TEST(CliMassey, WitnessMode) {
    MasseyOptions opt;
    opt.mode = HomSearchMode::Witness;
    opt.expect = std::vector<std::string>{"W", "W+Y2", "W+X2"};
    const auto r = cmd_massey("massey", "D16", {"X", "X+Y", "X", "X+Y", "X", "X+Y", "X", "X+Y"}, opt, no_cache());
    EXPECT_EQ(exit_code(r), 0) << report_to_text(r);
}

TEST(CliMassey, ExpectationMismatchFails) {
    const auto r = cmd_massey("massey", "Q16", {"Y", "Y2", "Y", "Y2"}, expecting({"0"}), no_cache());
    EXPECT_EQ(exit_code(r), 1);
}

TEST(CliMassey, UsageErrors) {
    EXPECT_THROW(cmd_massey("massey", "Q16", {"Y", "Z"}, {}, no_cache()), std::invalid_argument);
    EXPECT_THROW(cmd_massey("massey", "Q16", {"Y"}, {}, no_cache()), std::invalid_argument);
    EXPECT_THROW(cmd_massey("massey", "Q12", {"Y", "Y"}, {}, no_cache()), std::invalid_argument);
    EXPECT_THROW(cmd_massey("massey", "D128", {"X", "X"}, {}, no_cache()), std::invalid_argument);
}

TEST(CliCohomology, QuaternionSixteen) {
    CohomologyOptions opt;
    const auto r = cmd_cohomology("cohomology", "Q16", opt, no_cache());
    EXPECT_EQ(exit_code(r), 0) << report_to_text(r);
    EXPECT_EQ(r.results["betti"], Json::array({1, 2, 2, 1, 1}));
    EXPECT_EQ(r.group["order"], 16);
    EXPECT_EQ(r.group["label"], "Q16");
}

TEST(CliCohomology, RelationsThroughDegreeEight) {
    for (const auto* g : {"D8", "D32", "Q8", "Q32", "SD16", "SD32", "C4"}) {
        CohomologyOptions opt;
        opt.max_degree = 8;
        const auto r = cmd_cohomology("cohomology", g, opt, no_cache());
        EXPECT_EQ(exit_code(r), 0) << g << "\n" << report_to_text(r);
        EXPECT_EQ(r.results["betti"].size(), 9u);
    }
}

TEST(CliVerify, AppendixA) {
    const auto r = cmd_verify("verify", "appendix-a", std::pair{1, 5}, no_cache());
    EXPECT_FALSE(r.items.empty());
    EXPECT_EQ(exit_code(r), 0) << report_to_text(r);
}

// Every algebra identity for both families, as printed, n up to 6.
TEST(CliVerify, AppendixBAsStated) {
    const auto r = cmd_verify("verify", "appendix-b", std::pair{3, 6}, no_cache());
    EXPECT_EQ(exit_code(r), 0) << report_to_text(r);
}

TEST(CliVerify, UnknownScopeIsAnError) { EXPECT_THROW(cmd_verify("verify", "appendix-z", std::nullopt, no_cache()), std::invalid_argument); }

TEST(CliOracle, BettiAgreement) {
    for (const auto* g : {"D8", "Q16", "C4", "D4"}) {
        const auto r = cmd_oracle_betti("oracle betti", g, std::nullopt, no_cache());
        EXPECT_EQ(exit_code(r), 0) << g << "\n" << report_to_text(r);
    }
}

TEST(CliRep, MatricesAndOrders) {
    const auto r = cmd_rep("rep", 3, 5);
    EXPECT_EQ(exit_code(r), 0) << report_to_text(r);
    EXPECT_EQ(r.results["matrices"]["B"]["order"], 8);
}

TEST(CliReport, JsonRoundTripAndKeyOrder) {
    const auto r = cmd_massey("massey", "SD16", {"X", "X2", "Y"}, {}, no_cache());
    const auto j = report_to_json(r);
    const auto text = j.dump(2);
    EXPECT_EQ(Json::parse(text).dump(2), text);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"command", "group", "results", "items", "timing_ms"}));
    for (const auto& item : j["items"]) {
        std::vector<std::string> ik;
        for (const auto& [k, v] : item.items()) ik.push_back(k);
        EXPECT_EQ(ik, (std::vector<std::string>{"label", "ref", "status", "detail"}));
    }
}

TEST(CliReport, DeterministicApartFromTiming) {
    const auto a = cmd_massey("massey", "Q16", {"Y", "Y2", "Y", "Y2"}, {}, no_cache());
    const auto b = cmd_massey("massey", "Q16", {"Y", "Y2", "Y", "Y2"}, {}, no_cache());
    EXPECT_EQ(without_timing(a).dump(), without_timing(b).dump());
}

TEST(CliReport, TextSummary) {
    const auto r = cmd_rep("rep", 2, std::nullopt);
    const auto text = report_to_text(r);
    EXPECT_NE(text.find("items passed"), std::string::npos);
    EXPECT_EQ(text.find("FAIL"), std::string::npos);
}

TEST(CliCache, CorruptedEntryIsRebuiltWithIdenticalResults) {
    fixtures::TempDir dir;
    const auto ctx = temp_context(dir);
    const auto fresh = cmd_massey("massey", "SD16", {"X", "X2", "Y"}, {}, ctx);
    ASSERT_FALSE(fresh.results["cache"].empty());
    EXPECT_EQ(fresh.results["cache"].back()["outcome"], "miss");
    const auto file = dir.path() / fresh.results["cache"].back()["file"].get<std::string>();
    ASSERT_TRUE(std::filesystem::exists(file));
    auto j = nlohmann::json::parse(std::ifstream(file));
    auto& s = j["diffs"][2]["supports"][0];
    auto str = s.get<std::string>();
    str.back() = str.back() == '0' ? '1' : '0';
    s = str;
    std::ofstream(file) << j.dump();

    const auto again = cmd_massey("massey", "SD16", {"X", "X2", "Y"}, {}, ctx);
    EXPECT_EQ(again.results["cache"].back()["outcome"], "rebuilt");
    EXPECT_NE(again.results["cache"].back()["note"].get<std::string>().find("digest"), std::string::npos);
    EXPECT_EQ(statuses(again), statuses(fresh));
    EXPECT_EQ(again.results["values"], fresh.results["values"]);
    const auto third = cmd_massey("massey", "SD16", {"X", "X2", "Y"}, {}, ctx);
    EXPECT_EQ(third.results["cache"].back()["outcome"], "hit");
}

TEST(CliParsing, Ranges) {
    EXPECT_EQ(parse_range("4"), (std::pair{4, 4}));
    EXPECT_EQ(parse_range("3..6"), (std::pair{3, 6}));
    EXPECT_THROW(parse_range("6..3"), std::invalid_argument);
    EXPECT_THROW(parse_range("x"), std::invalid_argument);
}

#include "exprimes/report.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace exprimes;

namespace {

// Keys of every object appear in sorted order in the rendered text.
void expect_sorted(const nlohmann::json& j) {
    if (j.is_object()) {
        std::string prev;
        for (auto it = j.begin(); it != j.end(); ++it) {
            EXPECT_LT(prev, it.key());
            prev = it.key();
            expect_sorted(it.value());
        }
    } else if (j.is_array()) {
        for (const auto& x : j) expect_sorted(x);
    }
}

}  // namespace

TEST(Report, CandidateReportJson) {
    Envelope e;
    e.command = "bound";
    e.outputs = to_json(candidate_report(4, 11));
    const std::string text = render_json(e);
    EXPECT_EQ(text, render_json(e));
    EXPECT_EQ(text.back(), '\n');
    const auto j = nlohmann::json::parse(text);
    expect_sorted(j);
    EXPECT_EQ(j["version"], tool_version());
    EXPECT_EQ(j["tool"], "exprimes");
    std::vector<std::string> primes;
    for (const auto& p : j["outputs"]["reducible_primes"]) primes.push_back(p.get<std::string>());
    EXPECT_EQ(primes, (std::vector<std::string>{"2", "3", "5", "11", "61"}));
    EXPECT_FALSE(j.contains("timing_seconds"));
}

TEST(Report, BigNumbersAreStrings) {
    BoundOptions opt;
    opt.degree = 5;
    const auto j = to_json(candidate_report(2, 1888, opt));
    EXPECT_EQ(j["dihedral"]["bound"], "3476092007703911714679");
    EXPECT_TRUE(j["dihedral"]["bound_real"].is_string());
}

TEST(Report, VerificationJson) {
    VerifyOptions opt;
    opt.nu = DirichletCharacter::from_index(9, 2);
    const auto r = verify_reducible(testing_support::fixture("81-6c.json"), 43, opt);
    const auto j = to_json(r);
    EXPECT_EQ(j["verdict"], "certified");
    EXPECT_EQ(j["mode"], "residue-point");
    EXPECT_EQ(j["witness"]["ideal"], "(43, a + 30)");
    expect_sorted(j);
    const std::string t = render_text(r);
    EXPECT_NE(t.find("certified"), std::string::npos);
}

TEST(Report, ScanText) {
    const auto s = frobenius_scan(testing_support::fixture("11-4a.json"), 11, 100);
    const std::string t = render_text(s);
    EXPECT_NE(t.find("(11, a + 4) (degree 1): witness 2"), std::string::npos) << t;
    EXPECT_NE(t.find("(11, a + 5) (degree 1): witness none"), std::string::npos) << t;
}

TEST(Report, TextHasOneProvenanceLinePerPrime) {
    const auto r = candidate_report(4, 11);
    const std::string t = render_text(r);
    for (const char* line : {"  2: ", "  3: ", "  5: ", "  11: ", "  61: "}) EXPECT_NE(t.find(line), std::string::npos) << line;
}

TEST(Report, QExpansionJson) {
    const auto j = to_json(eisenstein_E(6, DirichletCharacter::from_index(9, 2), 5));
    EXPECT_EQ(j["zeta_index"], 3);
    EXPECT_EQ(j["coefficients"][2], "-32-31*z");
    EXPECT_EQ(j["coefficients"][4], "31+1023*z");
    EXPECT_EQ(j["coefficients"][5], "-1+3124*z");
}

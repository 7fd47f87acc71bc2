#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gausslab/verify.hpp"

using namespace gausslab;

namespace {

class VerifyTest : public ::testing::Test {
  protected:
    void SetUp() override { set_precision_bits(192); }
};

TEST_F(VerifyTest, UnknownStatement) {
    EXPECT_THROW(run_statement_check({"nope", 5, 61}), UnknownStatement);
}

TEST_F(VerifyTest, RangeCaps) {
    EXPECT_THROW(run_statement_check({"power6", 5, 1000}), RangeTooLarge);
    EXPECT_THROW(run_statement_check({"power4", 5, 100000}), RangeTooLarge);
}

TEST_F(VerifyTest, Power4SmallRange) {
    CheckReport rep = run_statement_check({"power4", 5, 61});
    EXPECT_TRUE(rep.pass);
    EXPECT_FALSE(rep.empirical);
    EXPECT_LT(rep.worst_residual(), Real("1e-6"));
    EXPECT_EQ(rep.results.size(), primes_in_range(5, 61).size());
}

TEST_F(VerifyTest, LemmaX2SmallRange) {
    CheckReport rep = run_statement_check({"lemma-x2", 5, 31});
    EXPECT_TRUE(rep.pass);
}

TEST_F(VerifyTest, Mt1SmallRange) {
    CheckReport rep = run_statement_check({"mt1", 5, 61});
    EXPECT_TRUE(rep.pass);
}

TEST_F(VerifyTest, BinomAndHaar) {
    EXPECT_TRUE(run_statement_check({"binom-identities", 1, 1, 12}).pass);
    EXPECT_TRUE(run_statement_check({"haar-constant", 1, 1, 0, 10}).pass);
}

TEST_F(VerifyTest, EmpiricalFlagAssignment) {
    CheckReport rep = run_statement_check({"power10", 5, 31});
    EXPECT_TRUE(rep.empirical);
    EXPECT_FALSE(run_statement_check({"parseval", 5, 31}).empirical);
}

TEST_F(VerifyTest, JsonDeterministic) {
    CheckReport a = run_statement_check({"power4", 5, 31, 0, 0, 2});
    CheckReport b = run_statement_check({"power4", 5, 31, 0, 0, 4});
    EXPECT_EQ(report_to_json(a).dump(), report_to_json(b).dump());
    nlohmann::ordered_json j = report_to_json(a);
    EXPECT_EQ(j.begin().key(), "statement_id");  // stable field order
    EXPECT_TRUE(j.contains("anchor"));
    EXPECT_TRUE(j.contains("precision_bits"));
}

TEST_F(VerifyTest, ScanCacheIdempotent) {
    auto path = std::filesystem::temp_directory_path() / "gausslab_scan_test.csv";
    std::filesystem::remove(path);
    {
        ScanCache cache(path);
        auto rows = scan_moments(5, 31, 2, 1, false, &cache);
        EXPECT_EQ(rows.size(), primes_in_range(5, 31).size());
    }
    auto size_after_first = std::filesystem::file_size(path);
    {
        ScanCache cache(path);
        scan_moments(5, 31, 2, 1, false, &cache);
    }
    EXPECT_EQ(std::filesystem::file_size(path), size_after_first);  // no new rows
    std::filesystem::remove(path);
}

TEST_F(VerifyTest, ScanCacheDetectsCorruption) {
    auto path = std::filesystem::temp_directory_path() / "gausslab_corrupt_test.csv";
    {
        std::ofstream f(path);
        f << "#checksum 0000000000000000\n" << scan_cache_header() << "\njunk\n";
    }
    EXPECT_THROW(ScanCache cache(path), CacheCorrupt);
    std::filesystem::remove(path);
}

TEST_F(VerifyTest, ScanRowsCrossCheckPower4) {
    auto rows = scan_moments(5, 61, 2, 1, false, nullptr);
    for (const auto& row : rows) {
        Real resid(row.residual);
        EXPECT_LT(boost::multiprecision::abs(resid), Real("1e-6")) << row.key.p;
    }
}

}  // namespace

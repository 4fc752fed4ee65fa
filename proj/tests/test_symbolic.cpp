#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "mmchaos/errors.hpp"
#include "mmchaos/symbolic.hpp"
#include "mmchaos/textio.hpp"

using namespace mmchaos;

namespace {

const std::string kA2 = "1011100000101111111110111";

// Direct sliding-window scan used as the reference for every counting claim.
std::uint64_t naive_count(const BitWord& w, const BitWord& b) {
    if (b.size() > w.size())
        return 0;
    std::uint64_t hits = 0;
    for (std::size_t i = 0; i + b.size() <= w.size(); ++i) {
        bool match = true;
        for (std::size_t j = 0; j < b.size() && match; ++j)
            match = w[i + j] == b[j];
        if (match)
            ++hits;
    }
    return hits;
}

} // namespace

TEST_CASE("word construction matches the frozen seeds") {
    CHECK(build_word(1).str() == "10111");
    CHECK(build_word(2).str() == kA2);
    CHECK(build_word(3).size() == 125);
}

TEST_CASE("scan counting agrees with the naive reference") {
    const BitWord a2 = build_word(2);
    for (const char* btext : {"10111", "0", "1", "11", "00", "101", "111", "010", "0000000000"}) {
        BitWord b = BitWord::from_string(btext);
        if (b.size() <= a2.size())
            CHECK(block_count_scan(a2, b) == naive_count(a2, b));
    }
    CHECK(block_count_scan(a2, BitWord::from_string("10111")) == 3);
    CHECK(block_count_scan(a2, BitWord::from_string("11")) == 12);
    CHECK(block_count_scan(build_word(1), BitWord::from_string("10111")) == 1);

    CHECK_THROWS_AS((void)block_count_scan(a2, BitWord()), Error);
    CHECK_THROWS_AS((void)block_count_scan(build_word(1), a2), Error);
}

TEST_CASE("recursive counting equals scanning on every materialized level") {
    for (const char* btext : {"10111", "1", "0", "11", "101", "111", "00000", "1111111"}) {
        BitWord b = BitWord::from_string(btext);
        for (unsigned k = 1; k <= 6; ++k) {
            if (b.size() > WordSystem::word_length(k))
                continue;
            CHECK(block_count_recursive(k, b) == block_count_scan(build_word(k), b));
        }
    }
}

TEST_CASE("the seed block count follows the clean power law") {
    BitWord b = BitWord::from_string("10111");
    std::uint64_t expect = 1;
    for (unsigned k = 1; k <= 12; ++k) {
        CHECK(block_count_recursive(k, b) == expect);
        expect *= 3;
    }
}

TEST_CASE("u slices and block searches agree with direct scans") {
    CHECK(u_slice(0, 24).str() == kA2);
    CHECK(u_slice(5, 9).str() == "00000");

    auto first_ten_zeros = occurs_in_u(BitWord::from_string("0000000000"), 200);
    REQUIRE(first_ten_zeros.has_value());
    CHECK(*first_ten_zeros == 25);

    // The run 12..20 of A_2 already contains five consecutive ones.
    auto five_ones = occurs_in_u(BitWord::from_string("11111"), 200);
    REQUIRE(five_ones.has_value());
    CHECK(*five_ones == 12);

    // Reference: scan a materialized prefix for the same block.
    BitWord block = BitWord::from_string("1111111111");
    BitWord prefix = u_slice(0, 300);
    std::uint64_t expect = 0;
    bool found_ref = false;
    for (std::size_t i = 0; i + block.size() <= prefix.size() && !found_ref; ++i) {
        bool match = true;
        for (std::size_t j = 0; j < block.size() && match; ++j)
            match = prefix[i + j] == block[j];
        if (match) {
            expect = i;
            found_ref = true;
        }
    }
    auto got = occurs_in_u(block, 292);
    REQUIRE(found_ref);
    REQUIRE(got.has_value());
    CHECK(*got == expect);

    CHECK_FALSE(occurs_in_u(BitWord::from_string("01010"), 500).has_value());
}

TEST_CASE("bounded closure membership accepts shifts of u and rejects aliens") {
    CHECK(in_u_closure_window(parse_symbol_point("u"), 50));
    CHECK(in_u_closure_window(parse_symbol_point("u@5"), 50));
    CHECK(in_u_closure_window(parse_symbol_point("0*"), 50));
    CHECK(in_u_closure_window(parse_symbol_point("1*"), 50));
    // 01010 never occurs in u: after 010 the next symbol is always 1.
    CHECK_FALSE(in_u_closure_window(parse_symbol_point("01010~0*"), 5));
}

TEST_CASE("h-family points obey the stage length recursion") {
    HFamilyPoint one = h_family_point("1");
    REQUIRE(one.s_lengths.size() == 1);
    CHECK(one.s_lengths[0] == 50);
    // E_1 with choice '1' is I_2 A_2: twenty-five ones then A_2.
    for (std::uint64_t i = 0; i < 25; ++i)
        CHECK(one.point.at(i));
    for (std::uint64_t i = 0; i < 25; ++i)
        CHECK(one.point.at(25 + i) == (kA2[static_cast<std::size_t>(i)] == '1'));

    HFamilyPoint two = h_family_point("2");
    REQUIRE(two.s_lengths.size() == 1);
    CHECK(two.s_lengths[0] == 100);
    for (std::uint64_t i = 0; i < 25; ++i)
        CHECK_FALSE(two.point.at(i));

    HFamilyPoint x = h_family_point("111");
    HFamilyPoint y = h_family_point("112");
    CHECK(x.s_lengths == std::vector<std::uint64_t>{50, 1300, 782550});
    CHECK(y.s_lengths == std::vector<std::uint64_t>{50, 1300, 1563800});
    // The pair shares the first two stages, then splits.
    for (std::uint64_t i = 0; i < 1300; ++i)
        CHECK(x.point.at(i) == y.point.at(i));
    CHECK(x.point.at(1300));
    CHECK_FALSE(y.point.at(1300));

    CHECK_THROWS_AS((void)h_family_point(""), Error);
    CHECK_THROWS_AS((void)h_family_point("13"), Error);
    try {
        (void)h_family_point("11111111111111111"); // 17 stages: A_{2^17} is unreachable
        FAIL("unreachable");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::Resource);
    }
}

TEST_CASE("h-family tails continue with u itself") {
    HFamilyPoint x = h_family_point("12");
    std::uint64_t plen = x.s_lengths.back();
    auto sys = WordSystem::shared();
    for (std::uint64_t j = 0; j < 40; ++j)
        CHECK(x.point.at(plen + j) == sys->u_at(j));
}

TEST_CASE("sturmian witnesses are balanced and pairwise distinct") {
    std::vector<BitWord> fam = e_family(4, 2000);
    REQUIRE(fam.size() == 4);
    for (const BitWord& w : fam)
        CHECK(w.size() == 2000);

    // Balance: ones in any prefix differ from the target slope by at most 1.
    // Slope of member 1 is sqrt(2) - 1.
    const double slopes[] = {0.6180339887498949, 0.41421356237309515};
    for (int m = 0; m < 2; ++m) {
        std::uint64_t ones = 0;
        for (std::size_t i = 0; i < fam[m].size(); ++i) {
            if (fam[m][i])
                ++ones;
            double drift = static_cast<double>(ones) - slopes[m] * static_cast<double>(i + 1);
            CHECK(drift > -1.01);
            CHECK(drift < 1.01);
        }
    }

    // Distinct members disagree somewhere early, and any two members both
    // agree and disagree often.
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            std::uint64_t agree = 0, differ = 0;
            for (std::size_t i = 0; i < 2000; ++i)
                (fam[a][i] == fam[b][i] ? agree : differ) += 1;
            CHECK(agree > 200);
            CHECK(differ > 200);
        }

    CHECK_THROWS_AS((void)e_family(0, 100), Error);
    CHECK_THROWS_AS((void)e_family(300, 100), Error);
    CHECK_THROWS_AS((void)e_family(2, std::uint64_t(1) << 23), Error);
}

TEST_CASE("the golden-ratio member matches a floating point reference") {
    std::vector<BitWord> fam = e_family(1, 5000);
    const long double alpha = 0.61803398874989484820L;
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        long long cur = static_cast<long long>(alpha * static_cast<long double>(n));
        long long prev = static_cast<long long>(alpha * static_cast<long double>(n - 1));
        CHECK(fam[0][static_cast<std::size_t>(n - 1)] == (cur - prev == 1));
    }
}

TEST_CASE("the shift-and-collapse system iterates as documented") {
    MultiMap f = example4_system();
    CHECK(f.space() == Space::Symbol);
    CHECK(f.arity() == 2);
    Point u = parse_point("u", Space::Symbol, Scalar::Kind::Exact);
    FiniteSet first = f.iterate(u, 1);
    CHECK(first.size() == 2);
    FiniteSet second = f.iterate(u, 2);
    // F^2(x) = {shift^2 x, a}: the extra branches re-collapse onto a.
    CHECK(second.size() == 2);
    bool has_zeros = false;
    for (std::size_t i = 0; i < second.size(); ++i)
        if (second.at(i).symbol().equals(SymbolPoint::zeros()))
            has_zeros = true;
    CHECK(has_zeros);
}

TEST_CASE("block frequency tables decay and respect the recursion bound") {
    std::vector<BlockFrequencyRow> rows = block_frequency_table(BitWord::from_string("10111"), 8);
    REQUIRE(rows.size() == 8);
    std::uint64_t expect = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].k == i + 1);
        CHECK(rows[i].count == expect);
        CHECK(rows[i].freq == Rational(expect, WordSystem::word_length(rows[i].k)));
        expect *= 3;
        if (i)
            CHECK(rows[i].freq < rows[i - 1].freq);
    }
    // Bound is meaningful (and honoured) from the second row on.
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].freq <= rows[i].bound);

    std::string csv = block_frequency_csv(rows);
    CHECK(csv.rfind("k,count,freq,bound", 0) == 0);
    CHECK(csv.find("\n1,1,1/5,") != std::string::npos);
}

TEST_CASE("the end-to-end verification report carries the frozen counts") {
    ChaosReport r = verify_example4();
    CHECK(r.kind == "dc");
    CHECK(r.found);

    const Json& snw = r.results["snw"];
    CHECK(snw["ok"] == true);
    CHECK(snw["decreasing"] == true);
    CHECK(snw["final_below_threshold"] == true);
    REQUIRE(snw["checkpoints"].size() == 3);
    CHECK(snw["checkpoints"][0]["r"] == 3125);
    CHECK(snw["checkpoints"][0]["count"] == 81);
    CHECK(snw["checkpoints"][1]["r"] == 15625);
    CHECK(snw["checkpoints"][1]["count"] == 243);
    CHECK(snw["checkpoints"][2]["r"] == 78125);
    CHECK(snw["checkpoints"][2]["count"] == 729);
    CHECK(snw["checkpoints"][2]["freq"] == "729/78125");
    REQUIRE(snw["fixed_points"].size() == 2);
    CHECK(snw["fixed_points"][0]["retained"] == true);
    CHECK(snw["fixed_points"][1]["retained"] == true);

    const Json& dc = r.results["dc"];
    CHECK(dc["ok"] == true);
    CHECK(dc["agreement_length"] == 1300);
    REQUIRE(dc["checkpoints"].size() == 2);
    CHECK(dc["checkpoints"][0]["q"] == 625);
    CHECK(dc["checkpoints"][0]["count"] == 625);
    CHECK(dc["checkpoints"][0]["phi"] == "1");
    CHECK(dc["checkpoints"][0]["ok"] == true);
    CHECK(dc["checkpoints"][1]["q"] == 390625);
    CHECK(dc["checkpoints"][1]["count"] == 1300);
    CHECK(dc["checkpoints"][1]["phi"] == "52/15625");
    CHECK(dc["checkpoints"][1]["ok"] == true);

    CHECK_THROWS_AS((void)verify_example4(0), Error);
    CHECK_THROWS_AS((void)verify_example4(3, 78125, "111", "1121"), Error);
    CHECK_THROWS_AS((void)verify_example4(3, 78125, "211", "111"), Error);
    CHECK_THROWS_AS((void)verify_example4(3, 10, "111", "112"), Error);
}

#pragma once

#include "mmchaos/multimap.hpp"
#include "mmchaos/report.hpp"
#include "mmchaos/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mmchaos {

// The recursive word family A_n and derived machinery for the symbol-space
// system F = {shift, constant-a}: block counting, the H-family of
// distributionally chaotic pairs, Sturmian witnesses for the infinite
// agree/disagree pattern, and the end-to-end verification report.

// A_n from the shared word system (resource error beyond the budget).
const BitWord& build_word(unsigned n);

// Occurrences of b in w at all start positions, overlaps allowed.
std::uint64_t block_count_scan(const BitWord& w, const BitWord& b);

// The same count for w = A_k, computed through the recurrence
// A_{k+1} = A_k O_k A_k I_k A_k: three copies, the constant runs, and four
// seam windows of width |b|-1 whose content stabilizes once 5^k >= |b|.
// Works far past the materialization budget.
std::uint64_t block_count_recursive(unsigned k, const BitWord& b);

// Inclusive slice u[i..j] of the limit word.
BitWord u_slice(std::uint64_t i, std::uint64_t j);

// First occurrence of b within u[0 .. window-1 + |b| - 1], if any.
std::optional<std::uint64_t> occurs_in_u(const BitWord& b, std::uint64_t window);

// Bounded membership check for the orbit-closure space of u: every subword of
// the candidate's materialized prefix must occur in u within a window of
// 5 * (prefix length). Constant-tail points are checked against the fixed
// points a and b.
bool in_u_closure_window(const SymbolPoint& p, std::uint64_t prefix_length);

struct HFamilyPoint {
    std::string choices; // over {'1','2'}
    SymbolPoint point;
    // |s_k| = |E_1 ... E_k| for k = 1..K; s_k is a suffix of A_{2^k + 1}.
    std::vector<std::uint64_t> s_lengths;
};

// x = E_1 E_2 ... E_K (then the word u), E_k = I A or O A I A over A_{2^k}
// by the k-th choice. The suffix invariant is checked at construction.
HFamilyPoint h_family_point(const std::string& choices);

// Sturmian prefixes s_n = floor((n+1) a) - floor(n a) for `count` distinct
// quadratic irrationals a, starting with (sqrt(5)-1)/2 and sqrt(2)-1. Any two
// members agree and disagree both infinitely often.
std::vector<BitWord> e_family(unsigned count, std::uint64_t length);

// F = {shift, constant map to a}, a = the all-zero sequence.
MultiMap example4_system();

struct BlockFrequencyRow {
    unsigned k = 0;
    std::uint64_t count = 0;
    Rational freq;  // count / 5^k
    Rational bound; // recursive contraction bound; meaningful once <= 1
};

std::vector<BlockFrequencyRow> block_frequency_table(const BitWord& b, unsigned k_max);
std::string block_frequency_csv(const std::vector<BlockFrequencyRow>& rows);

// The combined check: visit-frequency decay of a non-constant cylinder along
// u against persistence at the fixed points, plus the distributional gap
// counts of an H-family pair at the checkpoints q_k = 5^(2^k).
ChaosReport verify_example4(unsigned depth = 3, std::uint64_t snw_horizon = 78125,
                            const std::string& choices_x = "111",
                            const std::string& choices_y = "112");

} // namespace mmchaos

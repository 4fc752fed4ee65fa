#pragma once

#include "mmchaos/multimap.hpp"
#include "mmchaos/profile.hpp"
#include "mmchaos/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mmchaos {

// Constructive search for a family of starting points that is distributionally
// chaotic in a sequence: times p_1 < ... < p_K and, for every choice word
// C in {1,2}^K, a start x_C whose image at time p_k lies within 1/k of the
// target set named by C_k, in the two-sided Hausdorff sense.

struct SynthesisOptions {
    Rational initial_grid_step = Rational(1, 256);
    unsigned max_refinements = 8; // grid halvings tried before giving up
    unsigned level_time_cap = 64; // candidate times searched past p_{k-1}
};

struct SynthesisResult {
    TimeSequence times;
    // Lexicographic over the choice alphabet '1' < '2'; 2^depth entries.
    std::vector<std::pair<std::string, Point>> points;
    Rational grid_step; // the step that succeeded
    unsigned refinements = 0;
};

// Nested-open-set refinement: maintain, per choice-word prefix, the surviving
// U0-grid points meeting every constraint so far; extend the time sequence one
// level at a time, halving the grid and restarting whenever a level exhausts
// its candidate times. Exhaustion at the finest grid raises a resource error
// naming the level and the failing choice word.
SynthesisResult synthesize_dc_pair(const MultiMap& f, const FiniteSet& a1, const FiniteSet& a2,
                                   unsigned depth, const OpenRegion& u0,
                                   const SynthesisOptions& options = {});

// Checks the factorial-block counting bounds on a synthesized pair: within
// block n (indices (n-1)! < i <= n!), indices where the choice words agree
// must give d_H(F^{p_i}(x), F^{p_i}(y)) < t_small, and indices where they
// differ must give a gap > eps_sep, each with in-block fraction at least
// n/(n+1). Blocks of mixed type are reported and skipped.
ChaosReport verify_dc_seq(const MultiMap& f, const Point& x, const Point& y,
                          const TimeSequence& p, const std::string& choices_x,
                          const std::string& choices_y, const Scalar& t_small,
                          const Scalar& eps_sep);

} // namespace mmchaos

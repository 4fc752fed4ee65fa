#pragma once

#include "mmchaos/multimap.hpp"
#include "mmchaos/profile.hpp"
#include "mmchaos/report.hpp"

#include <utility>
#include <vector>

namespace mmchaos {

// Every probe returns a ChaosReport whose witnesses replay against the raw
// definitions (orbit gaps / region containment). Grid searches walk points in
// ascending order and keep the first witness, so reports are deterministic.
//
// A `stride` of k probes the k-th power system: (F^k)^n(x) = F^{kn}(x), so
// step n of the power system is absolute time k*n.

// For each pair: proximal = some tail-window gap < epsilon, separated = some
// tail-window gap > delta; found = some pair has both flags.
ChaosReport li_yorke_scan(const MultiMap& f, const std::vector<std::pair<Point, Point>>& pairs,
                          unsigned horizon, const Scalar& delta, const Scalar& epsilon,
                          unsigned window = 0);

// For each region U: search x, y in the U-grid and n <= horizon with
// d_H(F^n(x), F^n(y)) > delta. found = witnesses exist for every U.
ChaosReport sensitivity_probe(const MultiMap& f, const Scalar& delta,
                              const std::vector<OpenRegion>& opens, unsigned horizon,
                              const Rational& grid_step, unsigned stride = 1);

// Search x in the U-grid, y in the V-grid and n <= horizon with
// d_H(F^n(x), F^n(y)) < epsilon.
ChaosReport accessibility_probe(const MultiMap& f, const Scalar& epsilon, const OpenRegion& u,
                                const OpenRegion& v, unsigned horizon, const Rational& grid_step,
                                unsigned stride = 1);

// Sensitivity over every region of the suite plus accessibility over every
// unordered region pair, for F and each listed power. found reflects the base
// system; results record the per-power flags and their agreement.
ChaosReport kato_report(const MultiMap& f, const Scalar& delta, const Scalar& epsilon,
                        const std::vector<OpenRegion>& opens, unsigned horizon,
                        const Rational& grid_step, const std::vector<unsigned>& powers = {1});

// Smallest n in (min_time, horizon] with some x in the U-grid and
// F^n(x) contained in V. V must be admissible.
ChaosReport transitivity_probe(const MultiMap& f, const OpenRegion& u, const OpenRegion& v,
                               unsigned horizon, unsigned min_time,
                               const Rational& grid_step);

// Smallest N <= start such that every n in [N, N+window] has a containment
// hit. V must be admissible.
ChaosReport mixing_probe(const MultiMap& f, const OpenRegion& u, const OpenRegion& v,
                         unsigned start, unsigned window, const Rational& grid_step);

// A shared time n <= horizon carrying U1 into V1 and U2 into V2.
ChaosReport weak_mixing_probe(const MultiMap& f, const OpenRegion& u1, const OpenRegion& v1,
                              const OpenRegion& u2, const OpenRegion& v2, unsigned horizon,
                              const Rational& grid_step);

// Running visit frequencies (1/r) #{i < r : F^i(y) meets V} for each witness
// y, with checkpoint values and the tail-window maximum. found = some witness
// reaches the threshold in the tail window.
ChaosReport snw_frequency(const MultiMap& f, const OpenRegion& v,
                          const std::vector<Point>& witnesses, std::uint64_t horizon,
                          const Rational& threshold = Rational(1, 5),
                          std::vector<std::uint64_t> checkpoints = {});

// Raises an admissibility error unless some sampled range element is
// contained in v (the computable reading of "V meets the stabilized range").
void require_admissible(const MultiMap& f, const OpenRegion& v, const Rational& grid_step,
                        unsigned depth = 2);

// The sixteen width-1/16 dyadic intervals, relatively open in [0, 1]: the
// default open-suite for sensitivity and Kato probes.
std::vector<OpenRegion> default_open_suite();

} // namespace mmchaos

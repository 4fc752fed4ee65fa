#pragma once

#include "mmchaos/multimap.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mmchaos {

// A strictly increasing sequence of positive times p_1 < p_2 < ...
struct TimeSequence {
    std::vector<std::uint64_t> times;

    TimeSequence() = default;
    explicit TimeSequence(std::vector<std::uint64_t> t);

    std::size_t size() const { return times.size(); }
    std::uint64_t at(std::size_t i) const { return times[i]; }
};

// Empirical distribution of the orbit gap sequence of a pair: for each
// threshold t and each k <= horizon,
//   phi^k(t) = (1/k) #{counted times i among the first k : gap_i < t}.
// The stored data are raw integer counts, so phi values are exact rationals
// regardless of the arithmetic mode. lower/upper are min/max of phi^k(t)
// over the tail window k in [horizon - window, horizon] - the documented
// stand-ins for liminf/limsup.
class DistributionalProfile {
  public:
    DistributionalProfile(std::vector<Scalar> t_grid, std::vector<std::vector<std::uint64_t>> counts,
                          unsigned window, std::optional<TimeSequence> times = std::nullopt);

    std::uint64_t horizon() const { return horizon_; }
    unsigned window() const { return window_; }
    const std::vector<Scalar>& t_grid() const { return t_grid_; }
    const std::optional<TimeSequence>& times() const { return times_; }

    // #{i among the first k counted times : gap_i < t_grid[t_index]}.
    std::uint64_t count(std::size_t t_index, std::uint64_t k) const;
    Rational phi(std::size_t t_index, std::uint64_t k) const;
    Rational value(std::size_t t_index) const { return phi(t_index, horizon_); }
    Rational lower(std::size_t t_index) const;
    Rational upper(std::size_t t_index) const;

    std::string csv() const; // columns k,t,phi over the full horizon

  private:
    std::vector<Scalar> t_grid_;
    std::vector<std::vector<std::uint64_t>> counts_; // per t, prefix counts for k=1..horizon
    std::uint64_t horizon_;
    unsigned window_;
    std::optional<TimeSequence> times_;
};

// max(horizon / 10, 10), clamped to [1, horizon].
unsigned default_window(std::uint64_t horizon);

DistributionalProfile distributional_profile(const MultiMap& f, const Point& x, const Point& y,
                                             unsigned horizon, std::vector<Scalar> t_grid,
                                             unsigned window = 0);

// Same, but gaps are sampled at the given times only: the i-th counted gap is
// d_H(F^{p_i}(x), F^{p_i}(y)).
DistributionalProfile distributional_profile_seq(const MultiMap& f, const Point& x, const Point& y,
                                                 const TimeSequence& p, std::vector<Scalar> t_grid,
                                                 unsigned window = 0);

inline constexpr const char* kFiniteHorizonCaveat = "finite-horizon estimate";

} // namespace mmchaos

#include "mmchaos/profile.hpp"

#include "mmchaos/errors.hpp"

#include <algorithm>

namespace mmchaos {

TimeSequence::TimeSequence(std::vector<std::uint64_t> t) : times(std::move(t)) {
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] == 0)
            fail_config("time sequences hold positive times");
        if (i && times[i - 1] >= times[i])
            fail_config("time sequences must strictly increase");
    }
}

DistributionalProfile::DistributionalProfile(std::vector<Scalar> t_grid,
                                             std::vector<std::vector<std::uint64_t>> counts,
                                             unsigned window, std::optional<TimeSequence> times)
    : t_grid_(std::move(t_grid)), counts_(std::move(counts)), times_(std::move(times)) {
    if (counts_.size() != t_grid_.size() || t_grid_.empty())
        fail_internal("profile shape mismatch");
    horizon_ = counts_.front().size();
    for (const auto& c : counts_)
        if (c.size() != horizon_)
            fail_internal("profile shape mismatch");
    if (horizon_ == 0)
        fail_config("profile horizon must be positive");
    window_ = window == 0 ? default_window(horizon_) : window;
    if (window_ > horizon_)
        fail_config("profile window cannot exceed the horizon");
}

std::uint64_t DistributionalProfile::count(std::size_t t_index, std::uint64_t k) const {
    if (t_index >= t_grid_.size() || k == 0 || k > horizon_)
        fail_config("profile lookup out of range");
    return counts_[t_index][k - 1];
}

Rational DistributionalProfile::phi(std::size_t t_index, std::uint64_t k) const {
    return Rational(count(t_index, k), k);
}

Rational DistributionalProfile::lower(std::size_t t_index) const {
    std::uint64_t from = horizon_ > window_ ? horizon_ - window_ : 1;
    Rational best = phi(t_index, from);
    for (std::uint64_t k = from + 1; k <= horizon_; ++k)
        best = std::min(best, phi(t_index, k));
    return best;
}

Rational DistributionalProfile::upper(std::size_t t_index) const {
    std::uint64_t from = horizon_ > window_ ? horizon_ - window_ : 1;
    Rational best = phi(t_index, from);
    for (std::uint64_t k = from + 1; k <= horizon_; ++k)
        best = std::max(best, phi(t_index, k));
    return best;
}

std::string DistributionalProfile::csv() const {
    std::string out = "k,t,phi\n";
    for (std::uint64_t k = 1; k <= horizon_; ++k)
        for (std::size_t ti = 0; ti < t_grid_.size(); ++ti) {
            out += std::to_string(k);
            out += ",";
            out += t_grid_[ti].str();
            out += ",";
            out += format_rational(phi(ti, k));
            out += "\n";
        }
    return out;
}

unsigned default_window(std::uint64_t horizon) {
    std::uint64_t w = std::max<std::uint64_t>(horizon / 10, 10);
    w = std::max<std::uint64_t>(1, std::min(w, horizon));
    return static_cast<unsigned>(w);
}

namespace {

void check_t_grid(const std::vector<Scalar>& t_grid) {
    if (t_grid.empty())
        fail_config("t grid must be nonempty");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i - 1] < t_grid[i]))
            fail_config("t grid must strictly ascend");
}

std::vector<std::vector<std::uint64_t>> accumulate_counts(const std::vector<Scalar>& gaps,
                                                          const std::vector<Scalar>& t_grid) {
    std::vector<std::vector<std::uint64_t>> counts(t_grid.size());
    for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
        counts[ti].reserve(gaps.size());
        std::uint64_t c = 0;
        for (const Scalar& g : gaps) {
            if (g < t_grid[ti])
                ++c;
            counts[ti].push_back(c);
        }
    }
    return counts;
}

} // namespace

DistributionalProfile distributional_profile(const MultiMap& f, const Point& x, const Point& y,
                                             unsigned horizon, std::vector<Scalar> t_grid,
                                             unsigned window) {
    if (horizon == 0)
        fail_config("profile horizon must be positive");
    check_t_grid(t_grid);
    std::vector<Scalar> gaps = orbit_gaps(f, x, y, horizon);
    auto counts = accumulate_counts(gaps, t_grid);
    return DistributionalProfile(std::move(t_grid), std::move(counts), window);
}

DistributionalProfile distributional_profile_seq(const MultiMap& f, const Point& x, const Point& y,
                                                 const TimeSequence& p, std::vector<Scalar> t_grid,
                                                 unsigned window) {
    if (p.size() == 0)
        fail_config("time sequence prefix must be nonempty");
    check_t_grid(t_grid);
    std::vector<Scalar> gaps;
    gaps.reserve(p.size());
    Orbit ox(f, x);
    Orbit oy(f, y);
    for (std::uint64_t t : p.times) {
        ox.advance_to(static_cast<unsigned>(t));
        oy.advance_to(static_cast<unsigned>(t));
        gaps.push_back(hausdorff(ox.current(), oy.current(), f.metric()));
    }
    auto counts = accumulate_counts(gaps, t_grid);
    return DistributionalProfile(std::move(t_grid), std::move(counts), window, p);
}

} // namespace mmchaos

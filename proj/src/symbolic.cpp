#include "mmchaos/symbolic.hpp"

#include "mmchaos/errors.hpp"
#include "mmchaos/metric.hpp"
#include "mmchaos/probes.hpp"
#include "mmchaos/profile.hpp"
#include "mmchaos/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>

namespace mmchaos {

namespace {

// Occurrences of b in w at all offsets, overlaps allowed. Internal: returns 0
// instead of erroring when b cannot fit.
std::uint64_t count_occurrences(const BitWord& w, const BitWord& b) {
    const std::size_t n = b.size();
    if (n == 0 || n > w.size()) return 0;
    std::uint64_t count = 0;
    if (n <= 64) {
        const auto width = static_cast<unsigned>(n);
        const std::uint64_t pattern = b.bits64(0, width);
        for (std::size_t pos = 0; pos + n <= w.size(); ++pos)
            if (w.bits64(pos, width) == pattern) ++count;
        return count;
    }
    const std::uint64_t head = b.bits64(0, 64);
    for (std::size_t pos = 0; pos + n <= w.size(); ++pos) {
        if (w.bits64(pos, 64) != head) continue;
        bool match = true;
        for (std::size_t off = 64; off < n && match; off += 64) {
            const auto chunk = static_cast<unsigned>(std::min<std::size_t>(64, n - off));
            match = w.bits64(pos + off, chunk) == b.bits64(off, chunk);
        }
        if (match) ++count;
    }
    return count;
}

std::optional<std::uint64_t> find_occurrence(const BitWord& w, const BitWord& b) {
    const std::size_t n = b.size();
    if (n == 0 || n > w.size()) return std::nullopt;
    if (n <= 64) {
        const auto width = static_cast<unsigned>(n);
        const std::uint64_t pattern = b.bits64(0, width);
        for (std::size_t pos = 0; pos + n <= w.size(); ++pos)
            if (w.bits64(pos, width) == pattern) return pos;
        return std::nullopt;
    }
    const std::uint64_t head = b.bits64(0, 64);
    for (std::size_t pos = 0; pos + n <= w.size(); ++pos) {
        if (w.bits64(pos, 64) != head) continue;
        bool match = true;
        for (std::size_t off = 64; off < n && match; off += 64) {
            const auto chunk = static_cast<unsigned>(std::min<std::size_t>(64, n - off));
            match = w.bits64(pos + off, chunk) == b.bits64(off, chunk);
        }
        if (match) return pos;
    }
    return std::nullopt;
}

BitWord join_words(const BitWord& left, const BitWord& right) {
    BitWord w = left;
    w.append(right);
    return w;
}

BitWord constant_word(bool bit, std::size_t count) {
    BitWord w;
    w.append_run(bit, count);
    return w;
}

unsigned prime_generator(unsigned index) {
    // Odd primes excluding 5, whose square roots seed the later family members.
    unsigned seen = 0;
    for (unsigned c = 3;; c += 2) {
        if (c == 5) continue;
        bool prime = true;
        for (unsigned d = 3; d * d <= c; d += 2) {
            if (c % d == 0) {
                prime = false;
                break;
            }
        }
        if (!prime) continue;
        if (seen == index) return c;
        ++seen;
    }
}

} // namespace

const BitWord& build_word(unsigned n) {
    if (n == 0) fail_config("word index must be at least 1");
    return WordSystem::shared()->word(n);
}

std::uint64_t block_count_scan(const BitWord& w, const BitWord& b) {
    if (b.empty()) fail_config("block must be nonempty");
    if (b.size() > w.size()) fail_config("block is longer than the word");
    return count_occurrences(w, b);
}

std::uint64_t block_count_recursive(unsigned k, const BitWord& b) {
    if (b.empty()) fail_config("block must be nonempty");
    if (k == 0) fail_config("word index must be at least 1");
    if (b.size() > WordSystem::word_length(k)) fail_config("block is longer than the word");

    const auto sys = WordSystem::shared();
    unsigned base = 1;
    while (WordSystem::word_length(base) < b.size()) ++base;
    // Materialize only A_base; every later level is pure arithmetic. The seam
    // windows stabilize because A_m ends with A_base and starts with A_base
    // for every m >= base, and both runs flanking a seam are at least as long
    // as the window.
    const BitWord& base_word = sys->word(base);
    std::uint64_t count = count_occurrences(base_word, b);
    if (base >= k) return count;

    const std::size_t nb = b.size();
    const std::size_t edge = nb - 1;
    const BitWord suffix_a = base_word.slice(base_word.size() - edge, edge);
    const BitWord prefix_a = base_word.slice(0, edge);
    const BitWord zeros_edge = constant_word(false, edge);
    const BitWord ones_edge = constant_word(true, edge);
    // Every occurrence inside a seam window straddles the seam, so these four
    // counts are exactly the boundary-crossing occurrences of one expansion.
    const std::uint64_t seam_total = count_occurrences(join_words(suffix_a, zeros_edge), b) +
                                     count_occurrences(join_words(zeros_edge, prefix_a), b) +
                                     count_occurrences(join_words(suffix_a, ones_edge), b) +
                                     count_occurrences(join_words(ones_edge, prefix_a), b);
    bool all_zero = true, all_one = true;
    for (std::size_t i = 0; i < nb; ++i) (b[i] ? all_zero : all_one) = false;

    for (unsigned m = base; m < k; ++m) {
        const std::uint64_t run = WordSystem::word_length(m);
        std::uint64_t inside_runs = 0;
        if (all_zero) inside_runs += run - nb + 1;
        if (all_one) inside_runs += run - nb + 1;
        count = 3 * count + inside_runs + seam_total;
    }
    return count;
}

BitWord u_slice(std::uint64_t i, std::uint64_t j) {
    return WordSystem::shared()->u_slice(i, j);
}

std::optional<std::uint64_t> occurs_in_u(const BitWord& b, std::uint64_t window) {
    if (b.empty()) fail_config("block must be nonempty");
    if (window == 0) fail_config("search window must be positive");
    const BitWord w = u_slice(0, window + b.size() - 2);
    return find_occurrence(w, b);
}

bool in_u_closure_window(const SymbolPoint& p, std::uint64_t prefix_length) {
    if (prefix_length == 0) fail_config("prefix length must be positive");
    // Pure tails are shifts of u or the constant fixed points, all of which
    // lie in the closure outright.
    if (p.prefix_length() == 0) return true;
    BitWord sample;
    sample.reserve_bits(prefix_length);
    for (std::uint64_t i = 0; i < prefix_length; ++i) sample.push_back(p.at(i));
    return occurs_in_u(sample, 5 * prefix_length).has_value();
}

HFamilyPoint h_family_point(const std::string& choices) {
    if (choices.empty()) fail_config("choice word must be nonempty");
    if (choices.size() > 16) fail_resource("choice word is too deep for the word budget");
    for (char c : choices)
        if (c != '1' && c != '2') fail_config("choice word symbols must be '1' or '2'");

    const auto sys = WordSystem::shared();
    BitWord prefix;
    std::vector<std::uint64_t> s_lengths;
    for (unsigned k = 1; k <= choices.size(); ++k) {
        const unsigned n = 1u << k;
        const BitWord& a = sys->word(n);
        const std::size_t run = a.size();
        if (choices[k - 1] == '1') {
            prefix.append_run(true, run);
            prefix.append(a);
        } else {
            prefix.append_run(false, run);
            prefix.append(a);
            prefix.append_run(true, run);
            prefix.append(a);
        }
        s_lengths.push_back(prefix.size());
        // Invariant: the prefix built so far is a suffix of A_{2^k + 1}, which
        // is what makes the whole point a legitimate backward continuation of
        // u. Checked here in full rather than trusted.
        const BitWord& enclosing = sys->word(n + 1);
        if (prefix.size() > enclosing.size())
            fail_internal("stage prefix outgrew its enclosing word");
        const std::size_t off = enclosing.size() - prefix.size();
        for (std::size_t pos = 0; pos < prefix.size(); pos += 64) {
            const auto chunk = static_cast<unsigned>(std::min<std::size_t>(64, prefix.size() - pos));
            if (prefix.bits64(pos, chunk) != enclosing.bits64(off + pos, chunk))
                fail_internal("stage prefix is not a suffix of its enclosing word");
        }
    }

    SymbolPoint point = SymbolPoint::from_word(std::make_shared<BitWord>(std::move(prefix)),
                                               TailKind::WordU, sys, "h:" + choices, 0);
    return HFamilyPoint{choices, std::move(point), std::move(s_lengths)};
}

std::vector<BitWord> e_family(unsigned count, std::uint64_t length) {
    if (count == 0) fail_config("family size must be positive");
    if (length == 0) fail_config("member length must be positive");
    if (count > 256) fail_resource("family size is capped at 256 members");
    if (length > (std::uint64_t(1) << 22)) fail_resource("member length is capped at 2^22");

    using boost::multiprecision::sqrt;
    const auto sturmian = [length](auto&& floor_mult) {
        BitWord w;
        w.reserve_bits(length);
        BigInt prev = floor_mult(BigInt(0));
        for (std::uint64_t n = 1; n <= length; ++n) {
            const BigInt cur = floor_mult(BigInt(n));
            const BigInt step = cur - prev;
            if (step < 0 || step > 1) fail_internal("family slope left the unit interval");
            w.push_back(step == 1);
            prev = cur;
        }
        return w;
    };

    std::vector<BitWord> out;
    out.reserve(count);
    for (unsigned j = 0; j < count; ++j) {
        if (j == 0) {
            // floor(n (sqrt(5)-1)/2)
            out.push_back(sturmian([](const BigInt& n) {
                const BigInt v = BigInt(5) * n * n;
                const BigInt r = sqrt(v);
                return BigInt((r - n) / 2);
            }));
        } else if (j == 1) {
            // floor(n (sqrt(2)-1))
            out.push_back(sturmian([](const BigInt& n) {
                const BigInt v = BigInt(2) * n * n;
                const BigInt r = sqrt(v);
                return BigInt(r - n);
            }));
        } else {
            // floor(n frac(sqrt(p))) for square-free p not used above
            const unsigned p = prime_generator(j - 2);
            const BigInt whole = sqrt(BigInt(p));
            out.push_back(sturmian([p, whole](const BigInt& n) {
                const BigInt v = BigInt(p) * n * n;
                const BigInt r = sqrt(v);
                return BigInt(r - n * whole);
            }));
        }
    }
    return out;
}

MultiMap example4_system() {
    return MultiMap({make_shift(), make_const_seq(SymbolPoint::zeros())});
}

std::vector<BlockFrequencyRow> block_frequency_table(const BitWord& b, unsigned k_max) {
    if (b.empty()) fail_config("block must be nonempty");
    if (k_max == 0) fail_config("table depth must be at least 1");
    unsigned k_min = 1;
    while (WordSystem::word_length(k_min) < b.size()) ++k_min;
    if (k_max < k_min) fail_config("table depth ends before the block first fits");

    bool all_zero = true, all_one = true;
    for (std::size_t i = 0; i < b.size(); ++i) (b[i] ? all_zero : all_one) = false;
    const bool constant_block = all_zero || all_one;

    std::vector<BlockFrequencyRow> rows;
    rows.reserve(k_max - k_min + 1);
    Rational bound(1);
    for (unsigned k = k_min; k <= k_max; ++k) {
        if (k > k_min) {
            // One expansion multiplies the length by 5 and the count by 3,
            // adds at most |b|-1 crossings per seam, and (for constant blocks
            // only) up to a full run of interior occurrences.
            const Rational carried = Rational(3, 5) * bound;
            const Rational seams = Rational(BigInt(4) * BigInt(b.size() - 1),
                                            BigInt(WordSystem::word_length(k)));
            bound = carried + seams;
            if (constant_block) {
                const Rational interior = bound + Rational(1, 5);
                bound = interior;
            }
        }
        BlockFrequencyRow row;
        row.k = k;
        row.count = block_count_recursive(k, b);
        row.freq = Rational(BigInt(row.count), BigInt(WordSystem::word_length(k)));
        row.bound = bound;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string block_frequency_csv(const std::vector<BlockFrequencyRow>& rows) {
    std::string out = "k,count,freq,bound\n";
    for (const auto& r : rows) {
        out += std::to_string(r.k);
        out += ',';
        out += std::to_string(r.count);
        out += ',';
        out += format_rational(r.freq);
        out += ',';
        out += format_rational(r.bound);
        out += '\n';
    }
    return out;
}

ChaosReport verify_example4(unsigned depth, std::uint64_t snw_horizon,
                            const std::string& choices_x, const std::string& choices_y) {
    if (depth == 0) fail_config("depth must be at least 1");
    if (choices_x.size() != depth || choices_y.size() != depth)
        fail_config("choice words must have length equal to the depth");
    if (choices_x == choices_y) fail_config("choice words must differ");
    if (choices_x[0] != choices_y[0]) fail_config("choice words must share a nonempty prefix");
    if (snw_horizon < 25) fail_config("visit horizon must be at least 25");

    const auto sys = WordSystem::shared();
    const MultiMap f = example4_system();
    ChaosReport report;
    report.kind = "dc";
    report.caveat = kFiniteHorizonCaveat;

    // Half 1: the visit frequency of the seed block along u decays through
    // the power-of-five checkpoints, while the constant fixed points keep
    // full frequency in their own cylinders.
    const BitWord& block = sys->word(1);
    std::vector<std::uint64_t> checkpoints;
    for (std::uint64_t p = 5; p <= snw_horizon; p *= 5) checkpoints.push_back(p);
    while (checkpoints.size() > 3) checkpoints.erase(checkpoints.begin());
    const std::uint64_t last = checkpoints.back();

    const BitWord uprefix = sys->u_slice(0, last + block.size() - 2);
    const auto width = static_cast<unsigned>(block.size());
    const std::uint64_t pattern = block.bits64(0, width);
    bool fixed_in_block = true; // does the constant point a = 0^inf visit?
    for (std::size_t i = 0; i < block.size(); ++i)
        if (block[i]) fixed_in_block = false;

    Json cp_rows = Json::array();
    std::uint64_t running = 0;
    std::size_t next_cp = 0;
    std::vector<Rational> cp_freqs;
    for (std::uint64_t i = 0; i < last; ++i) {
        if (uprefix.bits64(i, width) == pattern) ++running;
        else if (fixed_in_block && i >= 1) ++running;
        if (next_cp < checkpoints.size() && i + 1 == checkpoints[next_cp]) {
            const Rational freq(BigInt(running), BigInt(i + 1));
            Json row;
            row["r"] = i + 1;
            row["count"] = running;
            row["freq"] = format_rational(freq);
            cp_rows.push_back(row);
            cp_freqs.push_back(freq);
            ++next_cp;
        }
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < cp_freqs.size(); ++i)
        if (!(cp_freqs[i] < cp_freqs[i - 1])) decreasing = false;
    const bool final_low = cp_freqs.back() < Rational(1, 5);

    const OpenRegion va = OpenRegion::cylinders({constant_word(false, block.size())});
    const OpenRegion vb = OpenRegion::cylinders({constant_word(true, block.size())});
    const ChaosReport ra = snw_frequency(f, va, {Point(SymbolPoint::zeros())}, snw_horizon,
                                         Rational(1, 2));
    const ChaosReport rb = snw_frequency(f, vb, {Point(SymbolPoint::ones())}, snw_horizon,
                                         Rational(1, 2));
    const bool fixed_ok = ra.found && rb.found;

    Json snw;
    snw["block"] = block.str();
    snw["checkpoints"] = cp_rows;
    snw["decreasing"] = decreasing;
    snw["final_below_threshold"] = final_low;
    snw["threshold"] = "1/5";
    Json fixed_rows = Json::array();
    for (const ChaosReport* r : {&ra, &rb}) {
        const Json& d = r->results.at("witnesses").at(0);
        Json row;
        row["y"] = d.at("y");
        row["tail_frequency"] = d.at("tail_max");
        row["retained"] = r->found;
        fixed_rows.push_back(row);
    }
    snw["fixed_points"] = fixed_rows;
    const bool snw_ok = decreasing && final_low && fixed_ok;
    snw["ok"] = snw_ok;

    // Half 2: distributional gap counts for the pair of backward
    // continuations picked by the choice words. Stage k contributes the
    // block 5^(2^k); the pair stays glued through the common choice prefix
    // and separates for a full stage at the first disagreement.
    const HFamilyPoint hx = h_family_point(choices_x);
    const HFamilyPoint hy = h_family_point(choices_y);
    unsigned agree = 0;
    while (agree < depth && choices_x[agree] == choices_y[agree]) ++agree;
    // Validation above ensures 1 <= agree < depth.
    const std::uint64_t agree_len = hx.s_lengths[agree - 1];
    const std::uint64_t q_close = WordSystem::word_length(1u << agree);
    const std::uint64_t q_sep = WordSystem::word_length(1u << (agree + 1));

    const MetricOptions mopts;
    const unsigned trunc = mopts.truncation_depth();
    const std::uint64_t need = q_sep + trunc + 1;
    std::vector<unsigned char> xs(need), ys(need);
    for (std::uint64_t i = 0; i < need; ++i) {
        xs[i] = hx.point.at(i) ? 1 : 0;
        ys[i] = hy.point.at(i) ? 1 : 0;
    }
    for (std::uint64_t i = 0; i < agree_len && i < need; ++i)
        if (xs[i] != ys[i]) fail_internal("pair separated before the common stages ended");
    if (agree_len < need && xs[agree_len] == ys[agree_len])
        fail_internal("pair failed to separate after the common stages");

    // All quantities are dyadic with exponents in [-trunc, 1], so double
    // accumulation is exact here.
    const auto gap_at = [&](std::uint64_t i) {
        double rho_xy = 0.0, rho_xa = 0.0, rho_ya = 0.0;
        for (unsigned j = 0; j < trunc; ++j) {
            const double term = std::ldexp(1.0, -static_cast<int>(j));
            const unsigned char xb = xs[i + j];
            const unsigned char yb = ys[i + j];
            if (xb != yb) rho_xy += term;
            if (xb) rho_xa += term;
            if (yb) rho_ya += term;
        }
        // F^i({x}) = {shifted x, a} for i >= 1, and similarly for y, so the
        // two-sided set distance reduces to this closed form.
        return std::min(rho_xy, std::max(rho_xa, rho_ya));
    };

    struct Target {
        unsigned stage;
        std::uint64_t q;
        double t;
        const char* t_text;
        bool require_high; // high: phi >= 9/10; low: phi <= 1/10
    };
    const std::vector<Target> targets = {
        {agree, q_close, 0.5, "1/2", true},
        {agree + 1, q_sep, 1.0, "1", false},
    };

    bool dc_ok = true;
    Json dc_rows = Json::array();
    for (const Target& tg : targets) {
        std::uint64_t cnt = 0;
        for (std::uint64_t i = 0; i < tg.q; ++i) {
            if (i + trunc <= agree_len) {
                ++cnt; // gap is exactly 0 while the pair agrees
                continue;
            }
            const double g = (i == 0) ? 0.0 : gap_at(i);
            if (g < tg.t) ++cnt;
        }
        const Rational phi(BigInt(cnt), BigInt(tg.q));
        const bool ok = tg.require_high ? phi >= Rational(9, 10) : phi <= Rational(1, 10);
        if (!ok) dc_ok = false;
        Json row;
        row["stage"] = tg.stage;
        row["q"] = tg.q;
        row["t"] = tg.t_text;
        row["count"] = cnt;
        row["phi"] = format_rational(phi);
        row["require"] = tg.require_high ? ">=9/10" : "<=1/10";
        row["ok"] = ok;
        dc_rows.push_back(row);
    }

    Json dc;
    dc["x"] = hx.point.str();
    dc["y"] = hy.point.str();
    dc["agreement_length"] = agree_len;
    dc["stage_lengths_x"] = hx.s_lengths;
    dc["stage_lengths_y"] = hy.s_lengths;
    dc["checkpoints"] = dc_rows;
    dc["ok"] = dc_ok;

    report.found = snw_ok && dc_ok;
    report.horizon = std::max(snw_horizon, q_sep);
    report.params["depth"] = depth;
    report.params["snw_horizon"] = snw_horizon;
    report.params["choices_x"] = choices_x;
    report.params["choices_y"] = choices_y;
    Json wit;
    wit["x"] = hx.point.str();
    wit["y"] = hy.point.str();
    report.witnesses.push_back(wit);
    report.results["snw"] = snw;
    report.results["dc"] = dc;
    return report;
}

} // namespace mmchaos

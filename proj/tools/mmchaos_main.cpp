#include "mmchaos/errors.hpp"
#include "mmchaos/report.hpp"
#include "mmchaos/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

struct Cli {
    mmchaos::RunConfig config;
    std::string config_path;
    std::string out_path;
};

// Registers --key style options that land in the flat config map only when
// the user actually passes them, so config-file values can fill the gaps.
// Captures only long-lived state; the builder itself dies before parsing.
class SubBuilder {
  public:
    SubBuilder(CLI::App* sub, Cli& cli) : sub_(sub), cli_(cli) {
        sub_->add_option("--config", cli_.config_path, "JSON config file; flags override it");
        sub_->add_option("--out", cli_.out_path, "write the report here instead of stdout");
        opt("mode", "--mode", "arithmetic mode: exact or binary");
        opt("format", "--format", "output format: json or csv");
        opt("seed", "--seed", "reserved; all searches are deterministic");
    }

    SubBuilder& opt(const std::string& key, const std::string& flag, const std::string& help) {
        Cli& cli = cli_;
        sub_->add_option_function<std::string>(
            flag, [&cli, key](const std::string& v) { cli.config.values[key] = v; }, help);
        return *this;
    }

  private:
    CLI::App* sub_;
    Cli& cli_;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Set-valued iteration and chaos probes for finite families of interval and "
                 "symbol maps"};
    app.require_subcommand(1);

    Cli cli;
    std::map<std::string, CLI::App*> subs;
    for (const std::string& name : mmchaos::probe_names())
        subs[name] = app.add_subcommand(name);

    subs["iterate"]->description("apply the system n times to a start point");
    {
        SubBuilder b(subs["iterate"], cli);
        b.opt("system", "--system", "fixture name or ';'-joined map descriptors")
            .opt("x", "--x", "start point")
            .opt("n", "--n", "iteration count");
    }
    subs["hausdorff"]->description("Hausdorff distance between two finite sets");
    {
        SubBuilder b(subs["hausdorff"], cli);
        b.opt("a", "--a", "first set, e.g. {0,1/2}")
            .opt("b", "--b", "second set")
            .opt("space", "--space", "interval or symbol (default interval)")
            .opt("system", "--system", "infer the space from this system instead");
    }
    subs["profile"]->description("distributional gap profile of a pair of orbits");
    {
        SubBuilder b(subs["profile"], cli);
        b.opt("system", "--system", "system under iteration")
            .opt("x", "--x", "first start point")
            .opt("y", "--y", "second start point")
            .opt("horizon", "--horizon", "number of gap terms")
            .opt("t_grid", "--t-grid", "comma-separated thresholds (default 1/8,1/4,1/2,1)")
            .opt("window", "--window", "tail window (default max(horizon/10, 10))")
            .opt("times", "--times", "comma-separated sample times instead of 1..horizon");
    }
    subs["liyorke"]->description("proximal-and-separated scan over candidate pairs");
    {
        SubBuilder b(subs["liyorke"], cli);
        b.opt("system", "--system", "system under iteration")
            .opt("x", "--x", "first point of a single pair")
            .opt("y", "--y", "second point of a single pair")
            .opt("pairs", "--pairs", "semicolon-separated x:y pairs")
            .opt("horizon", "--horizon", "orbit length")
            .opt("delta", "--delta", "separation threshold")
            .opt("epsilon", "--epsilon", "proximality threshold")
            .opt("window", "--window", "tail window (default max(horizon/10, 10))");
    }
    subs["kato"]->description("sensitivity + accessibility over an open-region suite");
    {
        SubBuilder b(subs["kato"], cli);
        b.opt("system", "--system", "system under iteration")
            .opt("delta", "--delta", "sensitivity threshold")
            .opt("epsilon", "--epsilon", "accessibility threshold")
            .opt("horizon", "--horizon", "search horizon")
            .opt("grid", "--grid", "grid step (default 1/2^10)")
            .opt("opens", "--opens", "semicolon-separated regions (default: 16 width-1/16 cells)")
            .opt("powers", "--powers", "comma-separated powers to compare (default 1)");
    }
    subs["transitive"]->description("first time an image of the U-grid lands inside V");
    {
        SubBuilder b(subs["transitive"], cli);
        b.opt("system", "--system", "system under iteration")
            .opt("u", "--u", "source region")
            .opt("v", "--v", "target region (must be admissible)")
            .opt("horizon", "--horizon", "largest time searched")
            .opt("min_time", "--min-time", "search strictly beyond this time (default 0)")
            .opt("grid", "--grid", "grid step (default 1/2^10)");
    }
    subs["mixing"]->description("containment hits for every time in a window");
    {
        SubBuilder b(subs["mixing"], cli);
        b.opt("system", "--system", "system under iteration")
            .opt("u", "--u", "source region")
            .opt("v", "--v", "target region (must be admissible)")
            .opt("start", "--start", "largest allowed window start N")
            .opt("window", "--window", "window length W: hits needed on [N, N+W]")
            .opt("weak", "--weak", "probe two region pairs for one shared time (true/false)")
            .opt("u2", "--u2", "second source region (weak form)")
            .opt("v2", "--v2", "second target region (weak form)")
            .opt("horizon", "--horizon", "search horizon (weak form)")
            .opt("grid", "--grid", "grid step (default 1/2^10)");
    }
    subs["dc-pair"]->description("synthesize a family of starts hitting two target sets on a "
                                 "shared time sequence");
    {
        SubBuilder b(subs["dc-pair"], cli);
        b.opt("system", "--system", "interval system")
            .opt("a1", "--a1", "first target set")
            .opt("a2", "--a2", "second target set")
            .opt("depth", "--depth", "number of levels K (2^K family members)")
            .opt("u0", "--u0", "seed region (default (0,1))")
            .opt("grid", "--grid", "initial grid step (default 1/2^8)")
            .opt("refinements", "--refinements", "grid halvings allowed (default 8)")
            .opt("cap", "--cap", "candidate times per level (default 64)")
            .opt("verify", "--verify", "run the factorial-block check (true/false)")
            .opt("vx", "--vx", "choice word of the first verified member")
            .opt("vy", "--vy", "choice word of the second verified member")
            .opt("t_small", "--t-small", "agreement threshold for verification")
            .opt("eps_sep", "--eps-sep", "separation threshold for verification");
    }
    subs["snw"]->description("visit frequency of witnesses against a region");
    {
        SubBuilder b(subs["snw"], cli);
        b.opt("system", "--system", "system under iteration")
            .opt("v", "--v", "region whose visits are counted")
            .opt("witnesses", "--witnesses", "semicolon-separated witness points")
            .opt("horizon", "--horizon", "number of counted steps")
            .opt("threshold", "--threshold", "tail frequency threshold (default 1/5)")
            .opt("checkpoints", "--checkpoints", "comma-separated checkpoint times");
    }
    subs["word"]->description("materialize a word of the recursive family, count blocks");
    {
        SubBuilder b(subs["word"], cli);
        b.opt("n", "--n", "word index (length 5^n)")
            .opt("block", "--block", "block whose occurrences to count")
            .opt("table", "--table", "emit the frequency table up to this index");
    }
    subs["example4"]->description("decay-plus-gap verification on the shift system");
    {
        SubBuilder b(subs["example4"], cli);
        b.opt("depth", "--depth", "choice-word length (default 3)")
            .opt("horizon", "--horizon", "visit-count horizon (default 5^7)")
            .opt("choices_x", "--choices-x", "first choice word (default 111)")
            .opt("choices_y", "--choices-y", "second choice word (default 112)");
    }
    subs["fixtures"]->description("list the built-in systems");
    { SubBuilder b(subs["fixtures"], cli); }

    CLI11_PARSE(app, argc, argv);

    for (const auto& [name, sub] : subs)
        if (sub->parsed()) cli.config.probe = name;

    mmchaos::RunOutcome outcome;
    if (!cli.config_path.empty()) {
        // File errors share the error-payload shape with probe errors.
        mmchaos::RunConfig merged = cli.config;
        try {
            mmchaos::merge_config_file(merged, cli.config_path);
            outcome = mmchaos::run(merged);
        } catch (const mmchaos::Error& e) {
            mmchaos::Json inner;
            inner["code"] = e.code_name();
            inner["message"] = e.what();
            mmchaos::Json payload;
            payload["error"] = inner;
            outcome = {e.exit_status(), payload.dump(2) + "\n"};
        }
    } else {
        outcome = mmchaos::run(cli.config);
    }

    if (!cli.out_path.empty()) {
        std::ofstream out(cli.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open output file '" << cli.out_path << "'\n";
            return 2;
        }
        out << outcome.body;
    } else {
        std::cout << outcome.body;
    }
    return outcome.exit_code;
}

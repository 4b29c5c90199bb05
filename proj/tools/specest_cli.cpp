// Command-line front end: bench scenario runs with CSV export, tone
// embedding into WAV carriers, and tone detection from WAV files.
//
// Exit codes: 0 success, 1 usage or argument errors, 2 runtime failures
// (unreadable files, estimator breakdowns).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specest/errors.hpp"
#include "specest/scenarios.hpp"
#include "specest/steganalysis.hpp"
#include "specest/types.hpp"
#include "specest/wav.hpp"

using namespace specest;

namespace {

Method parse_method(const std::string& name) {
    if (name == "periodogram")
        return Method::Periodogram;
    if (name == "blackman_tukey")
        return Method::BlackmanTukey;
    if (name == "capon")
        return Method::Capon;
    if (name == "yule_walker")
        return Method::YuleWalker;
    if (name == "modcov")
        return Method::ModCov;
    throw std::invalid_argument(
        "unknown method: " + name +
        " (expected periodogram, blackman_tukey, capon, yule_walker or modcov)");
}

WindowKind parse_window(const std::string& name) {
    if (name == "rectangular")
        return WindowKind::Rectangular;
    if (name == "bartlett")
        return WindowKind::Bartlett;
    if (name == "parzen")
        return WindowKind::Parzen;
    throw std::invalid_argument("unknown window: " + name +
                                " (expected rectangular, bartlett or parzen)");
}

struct RunArgs {
    std::string target;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::size_t grid = FrequencyGrid::kDefaultSize;
    std::string out_dir = ".";
    bool timing = false;
    std::string config;
};

struct EmbedArgs {
    std::string in_path;
    bool in_set = false;
    std::uint64_t synth_seed = 0;
    bool synth_set = false;
    double freq = 0.0;
    double amp = 0.0;
    int len = 0;
    std::string out_path;
};

struct DetectArgs {
    std::string in_path;
    std::string method = "modcov";
    int order = 10;
    double true_freq = 0.0;
    bool true_freq_set = false;
    std::string window = "bartlett";
    std::size_t grid = FrequencyGrid::kDefaultSize;
};

int do_run(const RunArgs& args) {
    std::vector<Scenario> extras;
    if (!args.config.empty())
        extras = load_scenario_config(args.config);

    RunOptions opts;
    if (args.seed_set)
        opts.seed_override = args.seed;
    opts.grid_size = args.grid;

    RunReport report;
    if (args.target == "all") {
        report = run_all(opts);
        for (const Scenario& sc : extras) {
            RunReport one = run_scenario(sc, opts);
            for (RunCell& cell : one.cells)
                report.cells.push_back(std::move(cell));
        }
    } else {
        report = run_scenario(find_scenario(args.target, extras), opts);
    }

    export_csv(report, args.out_dir, args.timing);

    std::size_t spectra = 0;
    for (const RunCell& cell : report.cells)
        spectra += cell.spectrum.has_value();
    std::printf("wrote %s/summary.csv and %zu spectrum files\n", args.out_dir.c_str(),
                spectra);
    for (const RunCell& cell : report.cells)
        if (!cell.note.empty())
            std::printf("  %s/%s: %s\n", cell.scenario.c_str(), cell.estimator.c_str(),
                        cell.note.c_str());
    return 0;
}

int do_list(const std::string& config) {
    for (const Scenario& sc : builtin_scenarios())
        std::printf("%s\n", sc.name.c_str());
    if (!config.empty())
        for (const Scenario& sc : load_scenario_config(config))
            std::printf("%s\n", sc.name.c_str());
    return 0;
}

int do_embed(const EmbedArgs& args) {
    if (!args.in_set && !args.synth_set)
        throw std::invalid_argument("embed: pass either --in FILE or --synth SEED");

    const AudioCarrier carrier =
        args.in_set ? load_wav(args.in_path) : synth_carrier(args.synth_seed, args.len);
    const StegoPackage pkg = embed(carrier, args.freq, args.amp, args.len);

    AudioCarrier out;
    out.samples = pkg.stego.samples();
    out.sample_rate = carrier.sample_rate;
    out.origin = carrier.origin;

    std::size_t clipped = 0;
    for (double& v : out.samples) {
        if (v > 1.0) {
            v = 1.0;
            ++clipped;
        } else if (v < -1.0) {
            v = -1.0;
            ++clipped;
        }
    }
    if (clipped > 0)
        std::fprintf(stderr, "warning: clipped %zu of %zu samples to [-1, 1]\n", clipped,
                     out.samples.size());

    save_wav(out, args.out_path);
    std::printf("wrote %s: %d samples, tone f=%g amp=%g\n", args.out_path.c_str(),
                pkg.analysis_length, args.freq, args.amp);
    return 0;
}

int do_detect(const DetectArgs& args) {
    const AudioCarrier carrier = load_wav(args.in_path);
    StegoPackage pkg{RealSignal(carrier.samples),
                     args.true_freq_set ? std::optional<double>(args.true_freq)
                                        : std::nullopt,
                     0.0, WavFileOrigin{args.in_path},
                     static_cast<int>(carrier.samples.size())};

    const EstimatorSpec spec{parse_method(args.method), args.order,
                             parse_window(args.window)};
    const DetectionReport rep = detect(pkg, spec, FrequencyGrid::uniform(args.grid));
    if (!rep.error.empty())
        throw IoError("detect: " + rep.error);

    std::printf("estimator=%s\n", rep.estimator.c_str());
    std::printf("order=%d\n", rep.order);
    std::printf("frequency=%.12g\n", rep.estimated_frequency);
    std::printf("peak=%.12g\n", rep.peak_value);
    if (pkg.true_frequency)
        std::printf("error=%.12g\n", rep.absolute_error);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classical spectral estimation bench and WAV tone steganalysis"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Run a bench scenario (or \"all\"), export CSV");
    run->add_option("target", run_args.target, "Scenario name or \"all\"")->required();
    auto* seed_opt = run->add_option("--seed", run_args.seed, "Override the scenario seed");
    run->add_option("--grid", run_args.grid, "Frequency grid size (default 1024)");
    run->add_option("--out", run_args.out_dir, "Output directory (default .)");
    run->add_flag("--timing", run_args.timing, "Record wall-clock ms in summary.csv");
    run->add_option("--config", run_args.config, "Extra scenarios from a config file");

    std::string list_config;
    auto* list = app.add_subcommand("list", "List scenario names, one per line");
    list->add_option("--config", list_config, "Also list scenarios from a config file");

    EmbedArgs embed_args;
    auto* emb = app.add_subcommand("embed", "Add a tone to a carrier, write a WAV file");
    auto* in_opt = emb->add_option("--in", embed_args.in_path, "Carrier WAV file");
    auto* synth_opt =
        emb->add_option("--synth", embed_args.synth_seed, "Synthesize the carrier (seed)");
    in_opt->excludes(synth_opt);
    synth_opt->excludes(in_opt);
    emb->add_option("--freq", embed_args.freq, "Tone frequency, cycles/sample in (0, 0.5)")
        ->required();
    emb->add_option("--amp", embed_args.amp, "Tone amplitude")->required();
    emb->add_option("--len", embed_args.len, "Analysis length in samples")->required();
    emb->add_option("--out", embed_args.out_path, "Output WAV path")->required();

    DetectArgs detect_args;
    auto* det = app.add_subcommand("detect", "Locate the strongest tone in a WAV file");
    det->add_option("--in", detect_args.in_path, "WAV file to analyze")->required();
    det->add_option("--method", detect_args.method,
                    "periodogram | blackman_tukey | capon | yule_walker | modcov");
    det->add_option("--order", detect_args.order, "Estimator order M or p (default 10)");
    auto* tf_opt = det->add_option("--true-freq", detect_args.true_freq,
                                   "Known tone frequency, reports the absolute error");
    det->add_option("--window", detect_args.window,
                    "Lag window for blackman_tukey (default bartlett)");
    det->add_option("--grid", detect_args.grid, "Frequency grid size (default 1024)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    run_args.seed_set = seed_opt->count() > 0;
    embed_args.in_set = in_opt->count() > 0;
    embed_args.synth_set = synth_opt->count() > 0;
    detect_args.true_freq_set = tf_opt->count() > 0;

    try {
        if (run->parsed())
            return do_run(run_args);
        if (list->parsed())
            return do_list(list_config);
        if (emb->parsed())
            return do_embed(embed_args);
        return do_detect(detect_args);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const UnknownScenario& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}

#ifndef SPECEST_SCENARIOS_HPP
#define SPECEST_SCENARIOS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specest/types.hpp"

namespace specest {

/// The seven built-in scenarios (SC-A1..SC-C2), in listing order.
const std::vector<Scenario>& builtin_scenarios();

/// Looks a scenario up by name among built-ins plus `extra`.
/// Raises UnknownScenario when the name matches nothing.
const Scenario& find_scenario(const std::string& name,
                              const std::vector<Scenario>& extra = {});

/// Parses user scenarios from a flat key-value config file:
///   [NAME]
///   kind = two_tone_awgn | exact_acf | hidden_in_sound
///   a = 1.0        b = 1.0
///   f1 = 0.2       f2 = 0.25
///   order = 5      n = 128
///   noise_variance = 1e-3
///   seed = 42
/// '#' starts a comment. Raises std::invalid_argument on syntax or value errors.
std::vector<Scenario> load_scenario_config(const std::string& path);

/// One (scenario, estimator) result row.
struct RunCell {
    std::string scenario;
    std::string estimator;
    int order = 0;
    bool applicable = true; // false: `note` says why the estimator was skipped
    std::string note;       // skip reason or estimator failure cause
    double peak1_f = 0.0, peak1_v = 0.0; // NaN when absent
    double peak2_f = 0.0, peak2_v = 0.0;
    double err1 = 0.0, err2 = 0.0; // |peak - truth| under the best pairing; NaN when absent
    std::uint64_t seed = 0;
    int grid_size = 0;
    double wall_ms = 0.0; // measured wall-clock for this cell
    std::optional<PowerSpectrum> spectrum;
};

struct RunReport {
    std::vector<RunCell> cells;
};

struct RunOptions {
    std::optional<std::uint64_t> seed_override;
    std::size_t grid_size = FrequencyGrid::kDefaultSize;
};

/// Runs every estimator applicable to the scenario kind. Exact-ACF scenarios
/// skip the periodogram and the modified covariance method (both need raw
/// data) with an explicit "not applicable" cell. Estimator failures are
/// recorded in their cell, never thrown.
RunReport run_scenario(const Scenario& sc, const RunOptions& opts = {});

/// run_scenario over every built-in, cells concatenated in listing order.
RunReport run_all(const RunOptions& opts = {});

/// The `count` largest strict local maxima as (frequency, value), sorted by
/// value descending, exact ties by lower frequency first. Grid endpoints
/// qualify only when strictly above their single neighbor. Returns fewer
/// than `count` entries when the spectrum has fewer maxima.
std::vector<std::pair<double, double>> peak_pick(const PowerSpectrum& spectrum,
                                                 std::size_t count);

/// Writes one spectrum_<scenario>_<estimator>.csv per applicable cell
/// (header: frequency,power,power_db) plus summary.csv with rows sorted by
/// (scenario, estimator). Numbers carry 12 significant digits; dB values are
/// floored at 1e-300 before the log. The summary `ms` column is 0 unless
/// with_timing is set, so that repeated runs stay byte-identical.
void export_csv(const RunReport& report, const std::string& dir, bool with_timing = false);

} // namespace specest

#endif // SPECEST_SCENARIOS_HPP

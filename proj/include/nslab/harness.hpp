#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <optional>

#include "nslab/config.hpp"
#include "nslab/functionals.hpp"

namespace nslab {

struct InitModeSpec {
    std::string target;  // rho | u1 | u2 | u3
    int m1 = 0, m2 = 0;
    double rel_amp = 1.0, phase = 0.0;
};

/// Full experiment description (external interface: nested key-value file).
struct RunConfig {
    int schema_version = 1;
    // grid
    int nx = 32, ny = 32, nz = 64;
    double lx = 6.283185307179586, ly = 6.283185307179586, height = 10.0;
    // solver
    SolverParams solver;
    bool limit_system = false;  // integrate the eps = 0 limit system
    // functionals
    double zeta = 1.0 / 34.0;
    int m = 5;
    // initial data
    double amplitude = 0.01;
    double center = 4.0, halfwidth = 2.5;
    std::uint64_t seed = 1;
    int random_modes = 0;
    std::vector<InitModeSpec> modes;
    // sampling / io
    double cadence = 0.5;
    std::string experiment = "simulate";
    std::string outdir = "out";
};

RunConfig default_config();
/// Parse + validate; throws std::runtime_error with a precise message.
RunConfig config_from_kv(const KeyValueFile& kv);
KeyValueFile config_to_kv(const RunConfig& cfg);
void validate_config(const RunConfig& cfg);

GridPtr make_grid(const RunConfig& cfg);
/// Horizontal mode sum times smooth window profiles; slip-compliant by
/// construction (u3 profile vanishes at the walls with its derivatives).
State build_initial_state(const RunConfig& cfg, const GridPtr& g);

/// Incremental CSV persistence; one row per sample, flushed as written.
class SeriesWriter {
  public:
    explicit SeriesWriter(const std::string& path);
    void append(const Sample& s);

  private:
    std::ofstream out_;
};

/// Expected header; a mismatch on load is a schema mismatch.
std::string series_csv_header();
std::string series_csv_row(const Sample& s);
/// Partial rows are tolerated: loading stops there and *warning is set.
TimeSeries load_series_csv(const std::string& path, std::string* warning = nullptr);

struct RunOptions {
    bool keep_snapshots = false;
    SeriesWriter* writer = nullptr;
    std::function<void(const Sample&)> progress;
};

struct RunResult {
    TimeSeries series;
    std::vector<State> snapshots;  // sampled states when requested
    GridPtr grid;
    double dt = 0.0;
};

/// Integrate from the configured initial data to t_end, sampling the energy
/// report, identity residuals, mass and sup-norm traces at the cadence.
/// Aborts (instability/vacuum) flush the partial series and set abort_reason.
RunResult run_simulation(const RunConfig& cfg, const RunOptions& opts = {});

struct DecayFit {
    double phat = 0.0;  // OLS slope of log E_tan vs log(1+t)
    double r2 = 0.0;
    double t1 = 0.0, t2 = 0.0;
    double max_weighted_etan = 0.0;   // max (1+t)^{1-zeta} E_tan over window
    double max_weighted_ebar = 0.0;   // max (1+t)^{2-2zeta} Ebar_tan
};

/// Throws std::runtime_error("window_too_short") with fewer than 8 samples.
DecayFit fit_decay(const TimeSeries& series, double t1, double t2, double zeta);

struct ConvergenceTable {
    struct Row {
        double eps;
        double dist;  // sup over sampled t of the H^{m-1}_co distance
    };
    std::vector<Row> rows;
    bool monotone = false;
    bool complete = false;
    std::string note;
};

/// Members run concurrently against a shared limit-system reference
/// trajectory; identical grid, initial data and dt across members.
ConvergenceTable epsilon_sweep(const RunConfig& cfg, const std::vector<double>& eps_list);

struct MmsReport {
    struct Row {
        int nx, ny, nz;
        double dt;
        double err;  // L2 state error at t_end
    };
    std::vector<Row> rows;
    std::vector<double> orders;  // pairwise observed orders
    bool monotone = false;
};

/// Built-in smooth decaying manufactured family on the configured profiles.
AnalyticFamily mms_family(const RunConfig& cfg);
/// dt is scaled with dz^2 so the spatial error dominates.
MmsReport mms_convergence(const RunConfig& cfg, const std::vector<std::array<int, 3>>& resolutions);

/// Minimal SVG line plot (optionally log10 axes); one polyline per series.
struct PlotSeries {
    std::string label;
    std::vector<double> x, y;
};
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<PlotSeries>& series, bool logx, bool logy);

}  // namespace nslab

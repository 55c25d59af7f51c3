#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "buzz/diagram.hpp"
#include "buzz/dynamics.hpp"
#include "buzz/geometry.hpp"
#include "buzz/schedule.hpp"

namespace buzz {

/// Failure of a pipeline stage; what() reads "[stage] message".
class PipelineError : public std::runtime_error {
  public:
    PipelineError(const std::string& stage, const std::string& msg)
        : std::runtime_error("[" + stage + "] " + msg), stage_(stage) {}
    const std::string& stage() const { return stage_; }

  private:
    std::string stage_;
};

enum class InputKind { circles, sine, selkov, series_csv, cloud_csv };

struct CircleSpec {
    double radius = 1.0;
    int n = 20;
    double phase = 0.0;
    double cx = 0.0, cy = 0.0;
};

/// Everything one run needs, loadable from a single JSON document:
///
///   {"input": {"kind": "sine", "amplitudes": [...], "n": 100, "dt": ...,
///              "noise_amp": 0.1, "seed": 42},
///    "embedding": {"dimension": 2, "delay": 4},
///    "subsample": {"k": 20, "seed_index": 0},
///    "radius": 0.72,                  // or "radii": [r0, r1, ...]
///    "max_hom_dim": 1,
///    "parameter_labels": [...],       // optional, strictly increasing
///    "output": {"diagram_json": "...", "diagram_csv": "...", "svg": "..."}}
///
/// Input kinds and their fields:
///   circles    : "circles": [{"radius", "n", "phase", "center": [x,y]}, ...]
///   sine       : "amplitudes", "n", "dt", "noise_amp", "seed"
///   selkov     : "b_values", "a", "x0", "y0", "t_max", "n_samples",
///                "burn_in", "substeps"
///   series_csv : "paths": one scalar-series CSV per snapshot
///   cloud_csv  : "paths": one point-cloud CSV per snapshot
/// Embedding applies to time-series inputs and is ignored for point clouds.
struct PipelineConfig {
    InputKind kind = InputKind::cloud_csv;
    std::vector<CircleSpec> circles;
    std::vector<double> parameter_grid;  // sine amplitudes or selkov b values
    FamilySettings family;
    std::vector<std::string> paths;

    std::optional<int> embed_dim;
    std::optional<int> embed_tau;
    std::optional<int> subsample_k;
    int subsample_seed_index = 0;

    std::vector<double> radii;  // one entry = fixed radius for all snapshots
    int max_hom_dim = 1;
    std::vector<double> parameter_labels;  // optional; generators derive them
                                           // from a strictly increasing grid

    std::string out_diagram_json, out_diagram_csv, out_svg;  // empty = skip
};

PipelineConfig config_from_json(const std::string& text);
std::string config_to_json(const PipelineConfig& config);

struct PipelineResult {
    ZigzagDiagram diagram;
    // longest-lifetime point per homology dimension (ties: earliest birth,
    // then lowest death); empty where the dimension has no points
    std::vector<std::optional<PersistencePoint>> dominant;
    // dominant H1 interval mapped through the parameter labels, when both exist
    std::optional<std::pair<double, double>> parameter_range;

    // diagnostics
    std::vector<std::size_t> snapshot_sizes;  // points per snapshot, after subsampling
    std::vector<std::size_t> live_counts;     // simplices per grid position
    std::size_t total_simplices = 0;
    std::uint64_t seed = 0;
    double seconds_build = 0.0;
    double seconds_compute = 0.0;
};

/// Runs input -> embed -> subsample -> build -> compute -> report -> output.
/// Deterministic: identical config (and seeds) produces byte-identical output
/// files. Throws PipelineError tagged with the failing stage.
PipelineResult run_pipeline(const PipelineConfig& config);

enum class ParamRole { birth, death };

/// Grid time -> parameter value of labels[0..n]. Integer t maps to labels[t];
/// a half-integer t = i + 0.5 maps to labels[i+1] in the death role (the
/// disappearance happens entering snapshot i+1) and labels[i] in the birth
/// role; the end-of-zigzag death t = n+1 maps to labels[n]. Throws
/// std::invalid_argument off the grid.
double map_index_to_parameter(double t, const std::vector<double>& labels, ParamRole role);

std::optional<PersistencePoint> dominant_interval(const ZigzagDiagram& diagram, int dim);

}  // namespace buzz

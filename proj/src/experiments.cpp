#include "buzz/experiments.hpp"

namespace buzz {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

PipelineConfig circles_config() {
    PipelineConfig c;
    c.kind = InputKind::circles;
    const double radii[] = {0.1, 0.5, 1.0, 0.5, 0.1};
    for (int i = 0; i < 5; ++i) {
        CircleSpec s;
        s.radius = radii[i];
        s.n = 20;
        // offset the small circles so no sample point coincides with one of
        // the larger circles' angular positions
        s.phase = (i == 0 || i == 4) ? kPi / 20.0 : 0.0;
        c.circles.push_back(s);
    }
    c.radii = {0.5, 0.6, 0.8, 0.6, 0.5};
    c.max_hom_dim = 1;
    return c;
}

PipelineConfig sines_config() {
    PipelineConfig c;
    c.kind = InputKind::sine;
    // With tau*dt an exact quarter period, the 96 embedded points of each
    // series occupy only 16 angular spots. Consecutive rings then need their
    // connecting quads' diagonals within the radius for the loop class to
    // carry through a union, which caps the usable amplitude near 1.3 at
    // radius 0.72; the ramp peaks at 1.25 to stay inside that.
    c.parameter_grid = {0.05, 0.5, 0.75, 1.0, 1.25, 1.0, 0.75, 0.5, 0.05};
    c.family.sine_n = 100;
    c.family.sine_dt = 2.0 * kPi / 16.0;  // delay 4 = quarter period
    c.family.noise_amp = 0.1;
    c.family.base_seed = 42;
    c.embed_dim = 2;
    c.embed_tau = 4;
    c.radii = {0.72};
    c.max_hom_dim = 1;
    return c;
}

PipelineConfig selkov_config() {
    PipelineConfig c;
    c.kind = InputKind::selkov;
    c.parameter_grid = {0.35, 0.40, 0.45, 0.50, 0.55, 0.60, 0.65, 0.70, 0.75, 0.80};
    c.family.selkov.a = 0.1;
    c.family.selkov.x0 = 0.0;
    c.family.selkov.y0 = 0.0;
    c.family.selkov.t_max = 500.0;
    c.family.selkov.n_samples = 500;
    c.family.selkov.burn_in = 50;
    c.family.selkov.substeps = 10;
    c.embed_dim = 2;
    c.embed_tau = 3;
    c.subsample_k = 20;
    c.subsample_seed_index = 0;
    c.radii = {0.25};
    c.max_hom_dim = 1;
    return c;
}

}  // namespace buzz

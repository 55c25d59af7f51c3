#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace buzz {

/// A sampled scalar signal together with the parameter value that generated
/// it (sine amplitude or Sel'kov b).
struct TimeSeries {
    std::vector<double> values;
    double dt = 1.0;
    double t0 = 0.0;
    double label = 0.0;
};

/// values[i] = amplitude * sin(i * dt) + u_i, u_i uniform on
/// [-noise_amp, noise_amp] from a seeded deterministic generator (bit-stable
/// across platforms). Throws std::invalid_argument on n < 1, dt <= 0 or
/// noise_amp < 0.
TimeSeries sine_series(double amplitude, int n, double dt, double noise_amp, std::uint64_t seed);

/// Sel'kov glycolysis model
///   x' = -x + a y + x^2 y
///   y' =  b - a y - x^2 y
/// integrated with classical fixed-step RK4. Samples land at the n_samples
/// equally spaced times covering [0, t_max]; each sample interval is divided
/// into `substeps` internal RK4 steps (the sample spacing t_max/(n_samples-1)
/// is about 1.0 in the experiments, far too coarse as an integration step).
struct SelkovParams {
    double a = 0.1;
    double b = 0.5;
    double x0 = 0.0;
    double y0 = 0.0;
    double t_max = 500.0;
    int n_samples = 500;
    int burn_in = 50;   // samples dropped from the front of both series
    int substeps = 10;  // internal RK4 steps per sample interval
};

/// Both coordinate series, burn-in already removed, labeled with b. Throws
/// std::invalid_argument on bad parameters and std::runtime_error (naming the
/// sample index) when the state stops being finite.
std::pair<TimeSeries, TimeSeries> selkov_trajectory(const SelkovParams& params);

/// One classical RK4 step of an autonomous planar system s' = f(s). Exposed
/// so the integrator's order can be checked against systems with known
/// solutions.
template <class F>
std::array<double, 2> rk4_step(F&& f, const std::array<double, 2>& s, double h) {
    const auto k1 = f(s);
    const auto k2 = f({s[0] + 0.5 * h * k1[0], s[1] + 0.5 * h * k1[1]});
    const auto k3 = f({s[0] + 0.5 * h * k2[0], s[1] + 0.5 * h * k2[1]});
    const auto k4 = f({s[0] + h * k3[0], s[1] + h * k3[1]});
    return {s[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            s[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

enum class FamilyKind { sine, selkov };

/// Generation settings shared by a whole family. The grid value becomes the
/// sine amplitude or the Sel'kov b of each member; everything else is fixed.
struct FamilySettings {
    // sine members; per-series noise seed is base_seed + series index
    int sine_n = 100;
    double sine_dt = 0.39269908169872414;  // 2*pi/16: delay 4 = quarter period
    double noise_amp = 0.1;
    std::uint64_t base_seed = 0;
    // selkov members (b is overwritten per grid value)
    SelkovParams selkov;
};

/// One series per grid value, in grid order, labeled with its parameter.
/// For selkov members only the x coordinate is kept.
std::vector<TimeSeries> make_buzz_family(FamilyKind kind, const std::vector<double>& grid,
                                         const FamilySettings& settings);

}  // namespace buzz

#include "buzz/dynamics.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace buzz {

namespace {

// Uniform double in [0, 1) with an explicit bit mapping, so streams are
// identical across standard libraries (std::uniform_real_distribution is not
// pinned down by the standard).
double next_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

TimeSeries sine_series(double amplitude, int n, double dt, double noise_amp, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sine_series: n must be at least 1");
    if (!(dt > 0.0)) throw std::invalid_argument("sine_series: dt must be positive");
    if (noise_amp < 0.0) throw std::invalid_argument("sine_series: noise_amp must be non-negative");

    TimeSeries ts;
    ts.dt = dt;
    ts.t0 = 0.0;
    ts.label = amplitude;
    ts.values.reserve(n);
    std::mt19937_64 gen(seed);
    for (int i = 0; i < n; ++i) {
        double u = noise_amp == 0.0 ? 0.0 : noise_amp * (2.0 * next_unit(gen) - 1.0);
        ts.values.push_back(amplitude * std::sin(i * dt) + u);
    }
    return ts;
}

std::pair<TimeSeries, TimeSeries> selkov_trajectory(const SelkovParams& p) {
    if (p.n_samples < 2)
        throw std::invalid_argument("selkov_trajectory: n_samples must be at least 2");
    if (p.burn_in < 0 || p.burn_in >= p.n_samples)
        throw std::invalid_argument("selkov_trajectory: need n_samples > burn_in >= 0");
    if (!(p.t_max > 0.0)) throw std::invalid_argument("selkov_trajectory: t_max must be positive");
    if (p.substeps < 1) throw std::invalid_argument("selkov_trajectory: substeps must be at least 1");

    const double dt = p.t_max / (p.n_samples - 1);
    const double h = dt / p.substeps;
    auto rhs = [&](const std::array<double, 2>& s) -> std::array<double, 2> {
        const double xxy = s[0] * s[0] * s[1];
        return {-s[0] + p.a * s[1] + xxy, p.b - p.a * s[1] - xxy};
    };

    std::vector<double> xs, ys;
    xs.reserve(p.n_samples);
    ys.reserve(p.n_samples);
    std::array<double, 2> s{p.x0, p.y0};
    xs.push_back(s[0]);
    ys.push_back(s[1]);
    for (int i = 1; i < p.n_samples; ++i) {
        for (int k = 0; k < p.substeps; ++k) s = rk4_step(rhs, s, h);
        if (!std::isfinite(s[0]) || !std::isfinite(s[1]))
            throw std::runtime_error("selkov_trajectory: integration blew up at sample " +
                                     std::to_string(i) + " (t = " + std::to_string(i * dt) + ")");
        xs.push_back(s[0]);
        ys.push_back(s[1]);
    }
    xs.erase(xs.begin(), xs.begin() + p.burn_in);
    ys.erase(ys.begin(), ys.begin() + p.burn_in);

    TimeSeries x, y;
    x.values = std::move(xs);
    y.values = std::move(ys);
    x.dt = y.dt = dt;
    x.t0 = y.t0 = p.burn_in * dt;
    x.label = y.label = p.b;
    return {std::move(x), std::move(y)};
}

std::vector<TimeSeries> make_buzz_family(FamilyKind kind, const std::vector<double>& grid,
                                         const FamilySettings& settings) {
    if (grid.empty()) throw std::invalid_argument("make_buzz_family: parameter grid is empty");
    std::vector<TimeSeries> family;
    family.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (kind == FamilyKind::sine) {
            family.push_back(sine_series(grid[i], settings.sine_n, settings.sine_dt,
                                         settings.noise_amp, settings.base_seed + i));
        } else {
            SelkovParams p = settings.selkov;
            p.b = grid[i];
            family.push_back(selkov_trajectory(p).first);
        }
    }
    return family;
}

}  // namespace buzz

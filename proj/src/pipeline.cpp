#include "buzz/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "json.hpp"

#include "buzz/csv.hpp"
#include "buzz/svg.hpp"
#include "buzz/zigzag.hpp"

namespace buzz {

namespace {

const char* kind_name(InputKind k) {
    switch (k) {
        case InputKind::circles: return "circles";
        case InputKind::sine: return "sine";
        case InputKind::selkov: return "selkov";
        case InputKind::series_csv: return "series_csv";
        case InputKind::cloud_csv: return "cloud_csv";
    }
    return "?";
}

InputKind kind_from_name(const std::string& name) {
    if (name == "circles") return InputKind::circles;
    if (name == "sine") return InputKind::sine;
    if (name == "selkov") return InputKind::selkov;
    if (name == "series_csv") return InputKind::series_csv;
    if (name == "cloud_csv") return InputKind::cloud_csv;
    throw std::invalid_argument("unknown input kind '" + name + "'");
}

bool strictly_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i - 1] < v[i])) return false;
    return true;
}

}  // namespace

PipelineConfig config_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config JSON parse error: ") + e.what());
    }
    PipelineConfig c;
    if (!j.contains("input") || !j.at("input").contains("kind"))
        throw std::invalid_argument("config: missing input.kind");
    const auto& in = j.at("input");
    c.kind = kind_from_name(in.at("kind").get<std::string>());

    switch (c.kind) {
        case InputKind::circles: {
            if (!in.contains("circles")) throw std::invalid_argument("config: circles input needs 'circles'");
            for (const auto& e : in.at("circles")) {
                CircleSpec s;
                s.radius = e.at("radius").get<double>();
                s.n = e.value("n", 20);
                s.phase = e.value("phase", 0.0);
                if (e.contains("center")) {
                    auto ctr = e.at("center").get<std::vector<double>>();
                    if (ctr.size() != 2)
                        throw std::invalid_argument("config: circle center must have 2 coordinates");
                    s.cx = ctr[0];
                    s.cy = ctr[1];
                }
                c.circles.push_back(s);
            }
            break;
        }
        case InputKind::sine: {
            c.parameter_grid = in.at("amplitudes").get<std::vector<double>>();
            c.family.sine_n = in.value("n", c.family.sine_n);
            c.family.sine_dt = in.value("dt", c.family.sine_dt);
            c.family.noise_amp = in.value("noise_amp", c.family.noise_amp);
            c.family.base_seed = in.value("seed", static_cast<std::uint64_t>(0));
            break;
        }
        case InputKind::selkov: {
            c.parameter_grid = in.at("b_values").get<std::vector<double>>();
            SelkovParams& p = c.family.selkov;
            p.a = in.value("a", p.a);
            p.x0 = in.value("x0", p.x0);
            p.y0 = in.value("y0", p.y0);
            p.t_max = in.value("t_max", p.t_max);
            p.n_samples = in.value("n_samples", p.n_samples);
            p.burn_in = in.value("burn_in", p.burn_in);
            p.substeps = in.value("substeps", p.substeps);
            break;
        }
        case InputKind::series_csv:
        case InputKind::cloud_csv:
            c.paths = in.at("paths").get<std::vector<std::string>>();
            break;
    }

    if (j.contains("embedding")) {
        const auto& e = j.at("embedding");
        c.embed_dim = e.at("dimension").get<int>();
        c.embed_tau = e.at("delay").get<int>();
    }
    if (j.contains("subsample")) {
        const auto& s = j.at("subsample");
        c.subsample_k = s.at("k").get<int>();
        c.subsample_seed_index = s.value("seed_index", 0);
    }
    if (j.contains("radius") && j.contains("radii"))
        throw std::invalid_argument("config: give either 'radius' or 'radii', not both");
    if (j.contains("radius"))
        c.radii = {j.at("radius").get<double>()};
    else if (j.contains("radii"))
        c.radii = j.at("radii").get<std::vector<double>>();
    else
        throw std::invalid_argument("config: missing 'radius' or 'radii'");
    c.max_hom_dim = j.value("max_hom_dim", 1);
    if (j.contains("parameter_labels"))
        c.parameter_labels = j.at("parameter_labels").get<std::vector<double>>();
    if (j.contains("output")) {
        const auto& o = j.at("output");
        c.out_diagram_json = o.value("diagram_json", std::string{});
        c.out_diagram_csv = o.value("diagram_csv", std::string{});
        c.out_svg = o.value("svg", std::string{});
    }
    return c;
}

std::string config_to_json(const PipelineConfig& c) {
    nlohmann::ordered_json j;
    auto& in = j["input"] = nlohmann::ordered_json::object();
    in["kind"] = kind_name(c.kind);
    switch (c.kind) {
        case InputKind::circles: {
            auto& arr = in["circles"] = nlohmann::ordered_json::array();
            for (const CircleSpec& s : c.circles) {
                nlohmann::ordered_json e;
                e["radius"] = s.radius;
                e["n"] = s.n;
                e["phase"] = s.phase;
                e["center"] = {s.cx, s.cy};
                arr.push_back(std::move(e));
            }
            break;
        }
        case InputKind::sine:
            in["amplitudes"] = c.parameter_grid;
            in["n"] = c.family.sine_n;
            in["dt"] = c.family.sine_dt;
            in["noise_amp"] = c.family.noise_amp;
            in["seed"] = c.family.base_seed;
            break;
        case InputKind::selkov: {
            in["b_values"] = c.parameter_grid;
            const SelkovParams& p = c.family.selkov;
            in["a"] = p.a;
            in["x0"] = p.x0;
            in["y0"] = p.y0;
            in["t_max"] = p.t_max;
            in["n_samples"] = p.n_samples;
            in["burn_in"] = p.burn_in;
            in["substeps"] = p.substeps;
            break;
        }
        case InputKind::series_csv:
        case InputKind::cloud_csv:
            in["paths"] = c.paths;
            break;
    }
    if (c.embed_dim && c.embed_tau)
        j["embedding"] = {{"dimension", *c.embed_dim}, {"delay", *c.embed_tau}};
    if (c.subsample_k)
        j["subsample"] = {{"k", *c.subsample_k}, {"seed_index", c.subsample_seed_index}};
    if (c.radii.size() == 1)
        j["radius"] = c.radii[0];
    else
        j["radii"] = c.radii;
    j["max_hom_dim"] = c.max_hom_dim;
    if (!c.parameter_labels.empty()) j["parameter_labels"] = c.parameter_labels;
    if (!c.out_diagram_json.empty() || !c.out_diagram_csv.empty() || !c.out_svg.empty()) {
        auto& o = j["output"] = nlohmann::ordered_json::object();
        if (!c.out_diagram_json.empty()) o["diagram_json"] = c.out_diagram_json;
        if (!c.out_diagram_csv.empty()) o["diagram_csv"] = c.out_diagram_csv;
        if (!c.out_svg.empty()) o["svg"] = c.out_svg;
    }
    return j.dump(2) + "\n";
}

std::optional<PersistencePoint> dominant_interval(const ZigzagDiagram& diagram, int dim) {
    std::optional<PersistencePoint> best;
    for (const auto& p : diagram.points) {
        if (p.dim != dim) continue;
        if (!best || p.lifetime() > best->lifetime() ||
            (p.lifetime() == best->lifetime() &&
             (p.birth < best->birth || (p.birth == best->birth && p.death < best->death))))
            best = p;
    }
    return best;
}

double map_index_to_parameter(double t, const std::vector<double>& labels, ParamRole role) {
    if (labels.empty()) throw std::invalid_argument("map_index_to_parameter: no labels");
    const int n = static_cast<int>(labels.size()) - 1;
    const int g = grid_index(t);
    if (g == 2 * n + 2) return labels[n];  // end-of-zigzag death
    if (g < 0 || g > 2 * n)
        throw std::invalid_argument("map_index_to_parameter: t = " + std::to_string(t) +
                                    " outside the grid of " + std::to_string(n + 1) + " snapshots");
    if (g % 2 == 0) return labels[g / 2];
    const int i = (g - 1) / 2;
    return role == ParamRole::death ? labels[i + 1] : labels[i];
}

PipelineResult run_pipeline(const PipelineConfig& cfg) {
    using clock = std::chrono::steady_clock;
    PipelineResult res;

    // ---- config sanity -------------------------------------------------
    if (cfg.radii.empty()) throw PipelineError("config", "no radius given");
    for (double r : cfg.radii)
        if (!(r >= 0.0)) throw PipelineError("config", "radii must be non-negative");
    if (cfg.max_hom_dim < 0) throw PipelineError("config", "max_hom_dim must be >= 0");
    if (!cfg.parameter_labels.empty() && !strictly_increasing(cfg.parameter_labels))
        throw PipelineError("config", "parameter_labels must be strictly increasing");

    // ---- input ----------------------------------------------------------
    std::vector<PointCloud> clouds;
    std::vector<TimeSeries> series;
    const bool series_input = cfg.kind == InputKind::sine || cfg.kind == InputKind::selkov ||
                              cfg.kind == InputKind::series_csv;
    try {
        switch (cfg.kind) {
            case InputKind::circles:
                if (cfg.circles.empty()) throw std::invalid_argument("no circles given");
                for (const CircleSpec& s : cfg.circles)
                    clouds.push_back(sample_circle(s.radius, s.n, s.phase, s.cx, s.cy));
                break;
            case InputKind::sine:
                series = make_buzz_family(FamilyKind::sine, cfg.parameter_grid, cfg.family);
                res.seed = cfg.family.base_seed;
                break;
            case InputKind::selkov:
                series = make_buzz_family(FamilyKind::selkov, cfg.parameter_grid, cfg.family);
                break;
            case InputKind::series_csv:
                if (cfg.paths.empty()) throw std::invalid_argument("no input paths given");
                for (std::size_t i = 0; i < cfg.paths.size(); ++i) {
                    TimeSeries ts;
                    ts.values = parse_series_csv(read_text_file(cfg.paths[i]));
                    ts.label = static_cast<double>(i);
                    series.push_back(std::move(ts));
                }
                break;
            case InputKind::cloud_csv:
                if (cfg.paths.empty()) throw std::invalid_argument("no input paths given");
                for (const std::string& p : cfg.paths)
                    clouds.push_back(parse_cloud_csv(read_text_file(p)));
                break;
        }
    } catch (const std::exception& e) {
        throw PipelineError("input", e.what());
    }

    // ---- embed ----------------------------------------------------------
    if (series_input) {
        if (!cfg.embed_dim || !cfg.embed_tau)
            throw PipelineError("embed", "time-series input needs embedding {dimension, delay}");
        try {
            for (const TimeSeries& ts : series)
                clouds.push_back(delay_embed(ts.values, *cfg.embed_dim, *cfg.embed_tau));
        } catch (const std::exception& e) {
            throw PipelineError("embed", e.what());
        }
    }

    // ---- subsample -------------------------------------------------------
    if (cfg.subsample_k) {
        try {
            for (PointCloud& c : clouds)
                c = greedy_permutation(c, *cfg.subsample_k, cfg.subsample_seed_index);
        } catch (const std::exception& e) {
            throw PipelineError("subsample", e.what());
        }
    }
    for (const PointCloud& c : clouds) res.snapshot_sizes.push_back(c.size());

    // ---- build -----------------------------------------------------------
    ZigzagSchedule schedule;
    try {
        int offset = 0;
        for (std::size_t i = 0; i < clouds.size(); ++i) {
            clouds[i] = relabel(clouds[i], offset, static_cast<int>(i));
            offset += static_cast<int>(clouds[i].size());
        }
        const int max_dim = cfg.max_hom_dim + 1;
        const auto t0 = clock::now();
        if (cfg.radii.size() == 1) {
            schedule = build_schedule_fixed(clouds, cfg.radii[0], max_dim);
        } else if (cfg.radii.size() == clouds.size()) {
            schedule = build_schedule_variable(clouds, cfg.radii, max_dim);
        } else {
            throw std::invalid_argument("got " + std::to_string(cfg.radii.size()) + " radii for " +
                                        std::to_string(clouds.size()) + " snapshots");
        }
        res.seconds_build = std::chrono::duration<double>(clock::now() - t0).count();
        res.total_simplices = schedule.simplex_list.size();
        for (const auto& pos : live_sets(schedule)) res.live_counts.push_back(pos.size());
    } catch (const std::exception& e) {
        throw PipelineError("build", e.what());
    }

    // ---- compute ----------------------------------------------------------
    try {
        const auto t0 = clock::now();
        res.diagram = compute_zigzag(schedule, cfg.max_hom_dim);
        res.seconds_compute = std::chrono::duration<double>(clock::now() - t0).count();
    } catch (const std::exception& e) {
        throw PipelineError("compute", e.what());
    }

    // ---- report ------------------------------------------------------------
    try {
        for (int p = 0; p <= cfg.max_hom_dim; ++p)
            res.dominant.push_back(dominant_interval(res.diagram, p));

        std::vector<double> labels = cfg.parameter_labels;
        if (labels.empty() && (cfg.kind == InputKind::sine || cfg.kind == InputKind::selkov) &&
            strictly_increasing(cfg.parameter_grid))
            labels = cfg.parameter_grid;
        if (!labels.empty() && labels.size() != clouds.size())
            throw std::invalid_argument("got " + std::to_string(labels.size()) + " labels for " +
                                        std::to_string(clouds.size()) + " snapshots");
        if (!labels.empty() && cfg.max_hom_dim >= 1 && res.dominant[1]) {
            res.parameter_range = {
                map_index_to_parameter(res.dominant[1]->birth, labels, ParamRole::birth),
                map_index_to_parameter(res.dominant[1]->death, labels, ParamRole::death)};
        }
    } catch (const std::exception& e) {
        throw PipelineError("report", e.what());
    }

    // ---- output --------------------------------------------------------------
    try {
        if (!cfg.out_diagram_json.empty())
            write_text_file(cfg.out_diagram_json, diagram_to_json(res.diagram));
        if (!cfg.out_diagram_csv.empty())
            write_text_file(cfg.out_diagram_csv, diagram_to_csv(res.diagram));
        if (!cfg.out_svg.empty()) render_diagram(res.diagram, cfg.out_svg);
    } catch (const std::exception& e) {
        throw PipelineError("output", e.what());
    }
    return res;
}

}  // namespace buzz

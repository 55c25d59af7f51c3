#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "buzz/csv.hpp"
#include "buzz/dynamics.hpp"
#include "buzz/pipeline.hpp"
#include "buzz/schedule.hpp"
#include "buzz/svg.hpp"
#include "buzz/zigzag.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<double> parse_radii_list(const std::string& csv) {
    std::vector<double> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        out.push_back(std::stod(cur));
        cur.clear();
    };
    for (char c : csv) {
        if (c == ',')
            flush();
        else
            cur.push_back(c);
    }
    flush();
    return out;
}

void print_summary(const buzz::PipelineResult& res) {
    std::printf("snapshots: %zu  simplices: %zu  build %.2fs  compute %.2fs\n",
                res.snapshot_sizes.size(), res.total_simplices, res.seconds_build,
                res.seconds_compute);
    for (std::size_t p = 0; p < res.dominant.size(); ++p) {
        if (res.dominant[p])
            std::printf("dominant H%zu interval: (%g, %g)\n", p, res.dominant[p]->birth,
                        res.dominant[p]->death);
        else
            std::printf("dominant H%zu interval: none\n", p);
    }
    if (res.parameter_range)
        std::printf("parameter range of dominant H1: [%g, %g]\n", res.parameter_range->first,
                    res.parameter_range->second);
}

int cmd_gen(const buzz::PipelineConfig& cfg, const std::string& out_dir) {
    if (cfg.kind != buzz::InputKind::sine && cfg.kind != buzz::InputKind::selkov)
        throw std::invalid_argument("gen needs a config with a sine or selkov input");
    auto family = buzz::make_buzz_family(
        cfg.kind == buzz::InputKind::sine ? buzz::FamilyKind::sine : buzz::FamilyKind::selkov,
        cfg.parameter_grid, cfg.family);
    fs::create_directories(out_dir);
    nlohmann::ordered_json manifest;
    manifest["kind"] = cfg.kind == buzz::InputKind::sine ? "sine" : "selkov";
    manifest["labels"] = cfg.parameter_grid;
    if (cfg.kind == buzz::InputKind::sine) manifest["seed"] = cfg.family.base_seed;
    auto& files = manifest["series"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < family.size(); ++i) {
        std::string name = "series_" + std::to_string(i) + ".csv";
        buzz::write_text_file((fs::path(out_dir) / name).string(),
                              buzz::series_to_csv(family[i].values));
        files.push_back(name);
    }
    buzz::write_text_file((fs::path(out_dir) / "manifest.json").string(),
                          manifest.dump(2) + "\n");
    std::printf("wrote %zu series + manifest.json to %s\n", family.size(), out_dir.c_str());
    return 0;
}

int cmd_embed(const std::vector<std::string>& inputs, int dim, int tau,
              std::optional<int> subsample_k, const std::string& out_dir) {
    fs::create_directories(out_dir);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        auto values = buzz::parse_series_csv(buzz::read_text_file(inputs[i]));
        auto cloud = buzz::delay_embed(values, dim, tau);
        if (subsample_k) cloud = buzz::greedy_permutation(cloud, *subsample_k, 0);
        std::string name = "cloud_" + std::to_string(i) + ".csv";
        buzz::write_text_file((fs::path(out_dir) / name).string(), buzz::cloud_to_csv(cloud));
    }
    std::printf("wrote %zu point clouds to %s\n", inputs.size(), out_dir.c_str());
    return 0;
}

int cmd_build(const std::vector<std::string>& inputs, std::optional<double> radius,
              const std::string& radii_csv, int max_hom_dim, const std::string& out_path) {
    std::vector<buzz::PointCloud> clouds;
    int offset = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        auto cloud = buzz::parse_cloud_csv(buzz::read_text_file(inputs[i]));
        cloud = buzz::relabel(cloud, offset, static_cast<int>(i));
        offset += static_cast<int>(cloud.size());
        clouds.push_back(std::move(cloud));
    }
    buzz::ZigzagSchedule schedule;
    if (radius && !radii_csv.empty())
        throw std::invalid_argument("give either --radius or --radii, not both");
    if (radius)
        schedule = buzz::build_schedule_fixed(clouds, *radius, max_hom_dim + 1);
    else if (!radii_csv.empty())
        schedule = buzz::build_schedule_variable(clouds, parse_radii_list(radii_csv),
                                                 max_hom_dim + 1);
    else
        throw std::invalid_argument("need --radius or --radii");
    buzz::write_text_file(out_path, buzz::schedule_to_json(schedule));
    std::printf("wrote schedule (%zu simplices, %d snapshots) to %s\n",
                schedule.simplex_list.size(), schedule.n_snapshots, out_path.c_str());
    return 0;
}

int cmd_compute(const std::string& input, int max_hom_dim, const std::string& out_dir) {
    auto schedule = buzz::schedule_from_json(buzz::read_text_file(input));
    auto diagram = buzz::compute_zigzag(schedule, max_hom_dim);
    fs::create_directories(out_dir);
    buzz::write_text_file((fs::path(out_dir) / "diagram.json").string(),
                          buzz::diagram_to_json(diagram));
    buzz::write_text_file((fs::path(out_dir) / "diagram.csv").string(),
                          buzz::diagram_to_csv(diagram));
    std::printf("wrote diagram (%zu points) to %s\n", diagram.points.size(), out_dir.c_str());
    return 0;
}

int cmd_plot(const std::string& input, const std::string& out_path) {
    auto diagram = buzz::diagram_from_json(buzz::read_text_file(input));
    buzz::render_diagram(diagram, out_path);
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"buzz: zigzag persistence over families of point clouds"};
    app.require_subcommand(1);

    std::string config_path, out_path, radii_csv, input_single;
    std::vector<std::string> inputs;
    std::optional<double> radius;
    int dim = 2, tau = 1, max_hom_dim = 1;
    std::optional<int> subsample_k;
    std::optional<std::uint64_t> seed;

    auto* gen = app.add_subcommand("gen", "generate a time-series family + manifest");
    gen->add_option("--config", config_path, "pipeline config JSON (its input section is used)")
        ->required();
    gen->add_option("--seed", seed, "override the generator seed");
    gen->add_option("--out", out_path, "output directory")->required();

    auto* embed = app.add_subcommand("embed", "delay-embed series CSVs into point-cloud CSVs");
    embed->add_option("series", inputs, "series CSV files")->required()->expected(-1);
    embed->add_option("--dim", dim, "embedding dimension")->required();
    embed->add_option("--tau", tau, "embedding delay")->required();
    embed->add_option("--subsample", subsample_k, "greedy-subsample each cloud to k points");
    embed->add_option("--out", out_path, "output directory")->required();

    auto* build = app.add_subcommand("build", "build a union-zigzag schedule from point clouds");
    build->add_option("clouds", inputs, "point-cloud CSV files, one per snapshot")
        ->required()
        ->expected(-1);
    build->add_option("--radius", radius, "fixed Rips radius");
    build->add_option("--radii", radii_csv, "per-snapshot radii r0,r1,...");
    build->add_option("--max-hom-dim", max_hom_dim, "top homology dimension the schedule serves");
    build->add_option("--out", out_path, "schedule JSON path")->required();

    auto* compute = app.add_subcommand("compute", "zigzag persistence of a schedule");
    compute->add_option("schedule", input_single, "schedule JSON")->required();
    compute->add_option("--max-hom-dim", max_hom_dim, "top homology dimension");
    compute->add_option("--out", out_path, "output directory (diagram.json + diagram.csv)")
        ->required();

    auto* run = app.add_subcommand("run", "full pipeline from a config file");
    run->add_option("--config", config_path, "pipeline config JSON")->required();
    run->add_option("--out", out_path,
                    "output directory (overrides the config's output section)");
    run->add_option("--subsample", subsample_k, "override subsample size k");
    run->add_option("--seed", seed, "override the generator seed");

    auto* plot = app.add_subcommand("plot", "render a diagram JSON as SVG");
    plot->add_option("diagram", input_single, "diagram JSON")->required();
    plot->add_option("--out", out_path, "SVG path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            auto cfg = buzz::config_from_json(buzz::read_text_file(config_path));
            if (seed) cfg.family.base_seed = *seed;
            return cmd_gen(cfg, out_path);
        }
        if (embed->parsed()) return cmd_embed(inputs, dim, tau, subsample_k, out_path);
        if (build->parsed()) return cmd_build(inputs, radius, radii_csv, max_hom_dim, out_path);
        if (compute->parsed()) return cmd_compute(input_single, max_hom_dim, out_path);
        if (run->parsed()) {
            auto cfg = buzz::config_from_json(buzz::read_text_file(config_path));
            if (subsample_k) cfg.subsample_k = *subsample_k;
            if (seed) cfg.family.base_seed = *seed;
            if (!out_path.empty()) {
                fs::create_directories(out_path);
                cfg.out_diagram_json = (fs::path(out_path) / "diagram.json").string();
                cfg.out_diagram_csv = (fs::path(out_path) / "diagram.csv").string();
                cfg.out_svg = (fs::path(out_path) / "diagram.svg").string();
            }
            print_summary(buzz::run_pipeline(cfg));
            return 0;
        }
        if (plot->parsed()) return cmd_plot(input_single, out_path);
    } catch (const buzz::PipelineError& e) {
        std::cerr << "error " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

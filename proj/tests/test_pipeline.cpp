#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "buzz/csv.hpp"
#include "buzz/experiments.hpp"
#include "buzz/pipeline.hpp"
#include "buzz/svg.hpp"

using namespace buzz;

namespace {

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("config json round trip for every input kind") {
    std::vector<PipelineConfig> cases = {circles_config(), sines_config(), selkov_config()};

    PipelineConfig csvc;
    csvc.kind = InputKind::series_csv;
    csvc.paths = {"a.csv", "b.csv"};
    csvc.embed_dim = 3;
    csvc.embed_tau = 2;
    csvc.subsample_k = 15;
    csvc.subsample_seed_index = 4;
    csvc.radii = {0.3, 0.4};
    csvc.max_hom_dim = 2;
    csvc.parameter_labels = {1.0, 2.0};
    csvc.out_svg = "out.svg";
    cases.push_back(csvc);

    PipelineConfig cloudc;
    cloudc.kind = InputKind::cloud_csv;
    cloudc.paths = {"c.csv"};
    cloudc.radii = {0.5};
    cases.push_back(cloudc);

    for (const auto& c : cases) {
        std::string text = config_to_json(c);
        PipelineConfig back = config_from_json(text);
        CHECK(config_to_json(back) == text);  // serialization is a fixed point
    }

    SUBCASE("rejections") {
        CHECK_THROWS_AS(config_from_json("{"), std::invalid_argument);
        CHECK_THROWS_AS(config_from_json("{}"), std::invalid_argument);
        // radius and radii are mutually exclusive
        CHECK_THROWS_AS(
            config_from_json("{\"input\": {\"kind\": \"cloud_csv\", \"paths\": [\"x\"]}, "
                             "\"radius\": 0.5, \"radii\": [0.5]}"),
            std::invalid_argument);
    }
}

TEST_CASE("grid time to parameter mapping") {
    std::vector<double> b{0.35, 0.40, 0.45, 0.50, 0.55, 0.60, 0.65, 0.70, 0.75, 0.80};

    CHECK(map_index_to_parameter(2.0, b, ParamRole::birth) == 0.45);
    CHECK(map_index_to_parameter(2.0, b, ParamRole::death) == 0.45);  // integers ignore role
    CHECK(map_index_to_parameter(8.5, b, ParamRole::death) == 0.80);
    CHECK(map_index_to_parameter(8.5, b, ParamRole::birth) == 0.75);
    CHECK(map_index_to_parameter(0.0, b, ParamRole::birth) == 0.35);
    CHECK(map_index_to_parameter(10.0, b, ParamRole::death) == 0.80);  // end-of-zigzag death

    CHECK_THROWS_AS(map_index_to_parameter(2.3, b, ParamRole::birth), std::invalid_argument);
    CHECK_THROWS_AS(map_index_to_parameter(-1.0, b, ParamRole::birth), std::invalid_argument);
    CHECK_THROWS_AS(map_index_to_parameter(10.5, b, ParamRole::death), std::invalid_argument);
}

TEST_CASE("dominant interval selection") {
    ZigzagDiagram d;
    d.n_snapshots = 5;
    d.points = {{0, 0.0, 5.0}, {1, 1.0, 3.0}, {1, 0.5, 2.5}, {1, 2.0, 4.0}, {1, 0.5, 2.0}};
    sort_points(d.points);

    auto h0 = dominant_interval(d, 0);
    REQUIRE(h0.has_value());
    CHECK(*h0 == PersistencePoint{0, 0.0, 5.0});

    // lifetimes: 2.0, 2.0, 2.0, 1.5 -> earliest birth wins, then lowest death
    auto h1 = dominant_interval(d, 1);
    REQUIRE(h1.has_value());
    CHECK(*h1 == PersistencePoint{1, 0.5, 2.5});

    CHECK(!dominant_interval(d, 2).has_value());
}

TEST_CASE("series csv parsing") {
    CHECK(parse_series_csv("1.5\n-2\n3e-1\n") == std::vector<double>{1.5, -2.0, 0.3});
    CHECK(parse_series_csv("1, 2,\t3") == std::vector<double>{1.0, 2.0, 3.0});
    std::vector<double> vals{0.1, -0.25, 12.0};
    CHECK(parse_series_csv(series_to_csv(vals)) == vals);

    CHECK_THROWS_WITH_AS(parse_series_csv("1\nbogus\n"), doctest::Contains("bogus"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_series_csv("   \n  "), std::invalid_argument);
}

TEST_CASE("cloud csv parsing") {
    std::string text = "x,y\n0.0,1.0\n2.0,3.0\n";
    PointCloud c = parse_cloud_csv(text);  // header row is skipped
    REQUIRE(c.size() == 2);
    CHECK(c.ambient_dim == 2);
    CHECK(c.points[1].x == std::vector<double>{2.0, 3.0});
    CHECK(c.points[1].id == 1);

    PointCloud back = parse_cloud_csv(cloud_to_csv(c));
    CHECK(back.points[0].x == c.points[0].x);
    CHECK(back.points[1].x == c.points[1].x);

    CHECK_THROWS_AS(parse_cloud_csv("1,2\n3\n"), std::invalid_argument);  // ragged row
    CHECK_THROWS_AS(parse_cloud_csv(""), std::invalid_argument);
}

TEST_CASE("diagram serialization is stable") {
    ZigzagDiagram d;
    d.n_snapshots = 3;
    d.points = {{0, 0.0, 3.0}, {1, 0.5, 2.0}};

    std::string j = diagram_to_json(d);
    ZigzagDiagram back = diagram_from_json(j);
    CHECK(back.n_snapshots == 3);
    CHECK(back.points == d.points);
    CHECK(diagram_to_json(back) == j);

    std::string csv = diagram_to_csv(d);
    CHECK(csv == "dim,birth,death\n0,0.0,3.0\n1,0.5,2.0\n");

    CHECK_THROWS_AS(diagram_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(diagram_from_json("nonsense"), std::invalid_argument);
}

TEST_CASE("svg rendering is deterministic and marks dims differently") {
    ZigzagDiagram d;
    d.n_snapshots = 4;
    d.points = {{0, 0.0, 4.0}, {0, 1.0, 2.0}, {1, 0.5, 3.5}, {1, 1.0, 3.0}, {1, 2.0, 5.0}};

    std::string svg = render_diagram_svg(d);
    CHECK(svg == render_diagram_svg(d));
    CHECK(svg.find("<svg") != std::string::npos);

    auto count = [&](const std::string& needle) {
        std::size_t n = 0;
        for (std::size_t p = svg.find(needle); p != std::string::npos;
             p = svg.find(needle, p + 1))
            ++n;
        return n;
    };
    CHECK(count("#1f77b4") == 2);  // dimension-0 markers
    CHECK(count("#d62728") == 3);  // dimension-1 markers
}

TEST_CASE("pipeline runs a tiny cloud family end to end") {
    // two snapshots: a hollow square, then its center plus an outlier
    std::string p0 = tmp_path("buzz_t0.csv"), p1 = tmp_path("buzz_t1.csv");
    write_text_file(p0, "0.5,0.5\n0.5,-0.5\n-0.5,0.5\n-0.5,-0.5\n");
    write_text_file(p1, "0.0,0.0\n10.0,0.0\n");

    PipelineConfig c;
    c.kind = InputKind::cloud_csv;
    c.paths = {p0, p1};
    c.radii = {1.0};
    c.max_hom_dim = 1;
    c.out_diagram_json = tmp_path("buzz_t_diagram.json");
    c.out_diagram_csv = tmp_path("buzz_t_diagram.csv");
    c.out_svg = tmp_path("buzz_t_diagram.svg");

    PipelineResult r = run_pipeline(c);
    CHECK(r.diagram.n_snapshots == 2);
    std::vector<PersistencePoint> expect{{0, 0.0, 2.0}, {0, 0.5, 2.0}, {1, 0.0, 0.5}};
    sort_points(expect);
    CHECK(r.diagram.points == expect);
    CHECK(r.snapshot_sizes == std::vector<std::size_t>{4, 2});
    CHECK(r.total_simplices > 0);
    REQUIRE(r.dominant.size() == 2);
    CHECK(*r.dominant[0] == PersistencePoint{0, 0.0, 2.0});
    CHECK(*r.dominant[1] == PersistencePoint{1, 0.0, 0.5});

    // written artifacts match in-memory serializations
    CHECK(read_text_file(c.out_diagram_json) == diagram_to_json(r.diagram));
    CHECK(read_text_file(c.out_svg) == render_diagram_svg(r.diagram));

    SUBCASE("rerunning writes byte-identical files") {
        std::string first = read_text_file(c.out_diagram_json);
        run_pipeline(c);
        CHECK(read_text_file(c.out_diagram_json) == first);
    }

    std::remove(p0.c_str());
    std::remove(p1.c_str());
}

TEST_CASE("pipeline handles a constant series") {
    std::string p = tmp_path("buzz_const.csv");
    write_text_file(p, "1.0\n1.0\n1.0\n1.0\n1.0\n1.0\n1.0\n1.0\n1.0\n1.0\n");

    PipelineConfig c;
    c.kind = InputKind::series_csv;
    c.paths = {p};
    c.embed_dim = 2;
    c.embed_tau = 1;
    c.radii = {0.1};
    c.max_hom_dim = 1;

    PipelineResult r = run_pipeline(c);  // nine coincident points: one blob
    CHECK(r.diagram.points == std::vector<PersistencePoint>{{0, 0.0, 1.0}});
    std::remove(p.c_str());
}

TEST_CASE("pipeline errors carry their stage") {
    PipelineConfig c;
    c.kind = InputKind::cloud_csv;
    c.paths = {tmp_path("buzz_does_not_exist.csv")};
    c.radii = {0.5};
    try {
        run_pipeline(c);
        FAIL("expected a pipeline error");
    } catch (const PipelineError& e) {
        CHECK(e.stage() == "input");
        CHECK(std::string(e.what()).find("[input]") == 0);
    }

    // series too short for the embedding
    std::string p = tmp_path("buzz_short.csv");
    write_text_file(p, "1.0\n2.0\n");
    PipelineConfig c2;
    c2.kind = InputKind::series_csv;
    c2.paths = {p};
    c2.embed_dim = 4;
    c2.embed_tau = 3;
    c2.radii = {0.5};
    try {
        run_pipeline(c2);
        FAIL("expected a pipeline error");
    } catch (const PipelineError& e) {
        CHECK(e.stage() == "embed");
    }
    std::remove(p.c_str());

    // subsample larger than the snapshot
    std::string q = tmp_path("buzz_small_cloud.csv");
    write_text_file(q, "0,0\n1,0\n");
    PipelineConfig c3;
    c3.kind = InputKind::cloud_csv;
    c3.paths = {q};
    c3.subsample_k = 5;
    c3.radii = {0.5};
    try {
        run_pipeline(c3);
        FAIL("expected a pipeline error");
    } catch (const PipelineError& e) {
        CHECK(e.stage() == "subsample");
    }
    std::remove(q.c_str());
}

TEST_CASE("bundled study configs parse back to themselves") {
    // the files under configs/ are the canonical serializations
    std::vector<std::pair<std::string, PipelineConfig>> bundled;
    bundled.emplace_back("configs/circles.json", circles_config());
    bundled.emplace_back("configs/sines.json", sines_config());
    bundled.emplace_back("configs/selkov.json", selkov_config());
    for (const auto& [path, cfg] : bundled) {
        std::string disk = read_text_file(path);
        CHECK(disk == config_to_json(cfg));
        CHECK(config_to_json(config_from_json(disk)) == disk);
    }
}

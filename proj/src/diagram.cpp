#include "buzz/diagram.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace buzz {

std::vector<PersistencePoint> ZigzagDiagram::points_of_dim(int p) const {
    std::vector<PersistencePoint> out;
    for (const auto& pt : points)
        if (pt.dim == p) out.push_back(pt);
    return out;
}

void sort_points(std::vector<PersistencePoint>& pts) {
    std::sort(pts.begin(), pts.end(), [](const PersistencePoint& a, const PersistencePoint& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
}

std::string diagram_to_json(const ZigzagDiagram& d) {
    nlohmann::ordered_json j;
    j["n_snapshots"] = d.n_snapshots;
    auto& pts = j["points"] = nlohmann::ordered_json::array();
    for (const auto& p : d.points) {
        nlohmann::ordered_json e;
        e["dim"] = p.dim;
        e["birth"] = p.birth;
        e["death"] = p.death;
        pts.push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

ZigzagDiagram diagram_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("diagram JSON parse error: ") + e.what());
    }
    if (!j.contains("n_snapshots") || !j.contains("points"))
        throw std::invalid_argument("diagram JSON missing 'n_snapshots' or 'points'");
    ZigzagDiagram d;
    d.n_snapshots = j.at("n_snapshots").get<int>();
    for (const auto& e : j.at("points")) {
        PersistencePoint p;
        p.dim = e.at("dim").get<int>();
        p.birth = e.at("birth").get<double>();
        p.death = e.at("death").get<double>();
        d.points.push_back(p);
    }
    return d;
}

std::string diagram_to_csv(const ZigzagDiagram& d) {
    std::string out = "dim,birth,death\n";
    for (const auto& p : d.points) {
        out += std::to_string(p.dim);
        out += ',';
        out += nlohmann::json(p.birth).dump();
        out += ',';
        out += nlohmann::json(p.death).dump();
        out += '\n';
    }
    return out;
}

}  // namespace buzz

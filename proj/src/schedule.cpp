#include "buzz/schedule.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace buzz {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x)) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

void check_clouds(const std::vector<PointCloud>& clouds) {
    if (clouds.empty()) throw std::invalid_argument("schedule: empty cloud list");
    std::unordered_set<int> ids;
    for (std::size_t i = 0; i < clouds.size(); ++i) {
        if (clouds[i].empty())
            throw std::invalid_argument("schedule: cloud " + std::to_string(i) + " has zero points");
        for (const Point& p : clouds[i].points)
            if (!ids.insert(p.id).second)
                throw std::invalid_argument("schedule: vertex id " + std::to_string(p.id) +
                                            " occurs in more than one cloud");
    }
}

ZigzagSchedule assemble(int n_snapshots, std::vector<double> radii, int max_dim,
                        std::vector<std::pair<Simplex, std::vector<double>>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return simplex_less(a.first, b.first); });
    ZigzagSchedule s;
    s.n_snapshots = n_snapshots;
    s.radii = std::move(radii);
    s.max_dim = max_dim;
    s.simplex_list.reserve(entries.size());
    s.times_list.reserve(entries.size());
    for (auto& e : entries) {
        s.simplex_list.push_back(std::move(e.first));
        s.times_list.push_back(std::move(e.second));
    }
    return s;
}

}  // namespace

int grid_index(double t) {
    const double doubled = t * 2.0;
    const double rounded = std::nearbyint(doubled);
    if (doubled != rounded || t < 0.0)
        throw std::invalid_argument("grid_index: " + std::to_string(t) +
                                    " is not a non-negative half-integer");
    return static_cast<int>(rounded);
}

double grid_time(int g) { return static_cast<double>(g) / 2.0; }

std::vector<std::vector<int>> live_sets(const ZigzagSchedule& s) {
    const int n = s.n_snapshots - 1;
    std::vector<std::vector<int>> live(static_cast<std::size_t>(2 * n + 1));
    for (std::size_t idx = 0; idx < s.simplex_list.size(); ++idx) {
        const auto& times = s.times_list[idx];
        for (std::size_t k = 0; k + 1 < times.size(); k += 2) {
            const int ga = grid_index(times[k]);
            const int gb = std::min(grid_index(times[k + 1]), 2 * n + 1);
            for (int g = ga; g < gb && g <= 2 * n; ++g)
                live[static_cast<std::size_t>(g)].push_back(static_cast<int>(idx));
        }
    }
    return live;  // ascending because idx is the outer loop
}

ZigzagSchedule build_schedule_fixed(const std::vector<PointCloud>& clouds, double r, int max_dim) {
    check_clouds(clouds);
    if (r < 0.0) throw std::invalid_argument("build_schedule_fixed: negative radius");
    if (max_dim < 0) throw std::invalid_argument("build_schedule_fixed: negative max_dim");
    const int n_snapshots = static_cast<int>(clouds.size());
    const int n = n_snapshots - 1;
    std::vector<double> radii(static_cast<std::size_t>(n_snapshots), r);

    std::vector<std::pair<Simplex, std::vector<double>>> entries;

    if (n == 0) {
        const DistanceMatrix dm = pairwise_distances(clouds[0]);
        std::vector<int> ids;
        for (const Point& p : clouds[0].points) ids.push_back(p.id);
        SimplicialComplex K = rips_complex(dm, r, max_dim, ids);
        for (const auto& dim_list : K.by_dim)
            for (const Simplex& s : dim_list) entries.emplace_back(s, std::vector<double>{0.0, 1.0});
        return assemble(n_snapshots, std::move(radii), max_dim, std::move(entries));
    }

    std::unordered_map<std::vector<int>, std::pair<double, double>, VecHash> merged;
    for (int i = 0; i < n; ++i) {
        std::unordered_set<int> left_ids;
        for (const Point& p : clouds[static_cast<std::size_t>(i)].points) left_ids.insert(p.id);

        const PointCloud uni = disjoint_union(clouds[static_cast<std::size_t>(i)],
                                              clouds[static_cast<std::size_t>(i) + 1]);
        std::vector<int> ids;
        for (const Point& p : uni.points) ids.push_back(p.id);
        SimplicialComplex K = rips_complex(pairwise_distances(uni), r, max_dim, ids);

        for (const auto& dim_list : K.by_dim) {
            for (const Simplex& s : dim_list) {
                int in_left = 0;
                for (int v : s.verts)
                    if (left_ids.count(v)) ++in_left;
                double appear, disappear;
                if (in_left == static_cast<int>(s.verts.size())) {          // all in X_i
                    appear = (i == 0) ? 0.0 : i - 0.5;
                    disappear = i + 1.0;
                } else if (in_left == 0) {                                   // all in X_{i+1}
                    appear = i + 0.5;
                    disappear = i + 2.0;
                } else {                                                     // mixed
                    appear = i + 0.5;
                    disappear = i + 1.0;
                }
                auto [it, inserted] = merged.emplace(s.verts, std::make_pair(appear, disappear));
                if (!inserted) {
                    // the same simplex seen from the neighboring union carries
                    // the identical interval
                    assert(it->second.first == appear && it->second.second == disappear);
                    (void)it;
                }
            }
        }
    }

    entries.reserve(merged.size());
    for (auto& kv : merged)
        entries.emplace_back(Simplex(kv.first), std::vector<double>{kv.second.first, kv.second.second});
    return assemble(n_snapshots, std::move(radii), max_dim, std::move(entries));
}

ZigzagSchedule build_schedule_variable(const std::vector<PointCloud>& clouds,
                                       const std::vector<double>& radii, int max_dim) {
    check_clouds(clouds);
    if (radii.size() != clouds.size())
        throw std::invalid_argument("build_schedule_variable: radii count " +
                                    std::to_string(radii.size()) + " != cloud count " +
                                    std::to_string(clouds.size()));
    for (double r : radii)
        if (r < 0.0) throw std::invalid_argument("build_schedule_variable: negative radius");
    if (max_dim < 0) throw std::invalid_argument("build_schedule_variable: negative max_dim");

    const int n_snapshots = static_cast<int>(clouds.size());
    const int n = n_snapshots - 1;

    // presence[simplex] = ascending grid positions where the simplex is live
    std::unordered_map<std::vector<int>, std::vector<int>, VecHash> presence;
    for (int g = 0; g <= 2 * n; ++g) {
        PointCloud cloud;
        double r;
        if (g % 2 == 0) {
            cloud = clouds[static_cast<std::size_t>(g / 2)];
            r = radii[static_cast<std::size_t>(g / 2)];
        } else {
            const int i = g / 2;
            cloud = disjoint_union(clouds[static_cast<std::size_t>(i)],
                                   clouds[static_cast<std::size_t>(i) + 1]);
            r = std::max(radii[static_cast<std::size_t>(i)], radii[static_cast<std::size_t>(i) + 1]);
        }
        std::vector<int> ids;
        for (const Point& p : cloud.points) ids.push_back(p.id);
        SimplicialComplex K = rips_complex(pairwise_distances(cloud), r, max_dim, ids);
        for (const auto& dim_list : K.by_dim)
            for (const Simplex& s : dim_list) presence[s.verts].push_back(g);
    }

    std::vector<std::pair<Simplex, std::vector<double>>> entries;
    entries.reserve(presence.size());
    for (auto& kv : presence) {
        const std::vector<int>& pos = kv.second;
        std::vector<double> times;
        std::size_t k = 0;
        while (k < pos.size()) {
            std::size_t e = k;
            while (e + 1 < pos.size() && pos[e + 1] == pos[e] + 1) ++e;
            times.push_back(grid_time(pos[k]));
            times.push_back(pos[e] == 2 * n ? static_cast<double>(n + 1) : grid_time(pos[e] + 1));
            k = e + 1;
        }
        entries.emplace_back(Simplex(kv.first), std::move(times));
    }
    return assemble(n_snapshots, radii, max_dim, std::move(entries));
}

ScheduleDiagnostics validate_schedule(const ZigzagSchedule& s) {
    ScheduleDiagnostics diag;
    auto fail = [&](const std::string& msg) {
        diag.pass = false;
        diag.first_violation = msg;
        return diag;
    };

    if (s.n_snapshots < 1) return fail("n_snapshots must be >= 1");
    const int n = s.n_snapshots - 1;
    if (!s.radii.empty() && static_cast<int>(s.radii.size()) != s.n_snapshots)
        return fail("radii count does not match n_snapshots");
    if (s.simplex_list.size() != s.times_list.size())
        return fail("simplex_list and times_list lengths differ");

    std::unordered_map<std::vector<int>, int, VecHash> index;
    for (std::size_t i = 0; i < s.simplex_list.size(); ++i) {
        const Simplex& sp = s.simplex_list[i];
        const std::string label = "simplex #" + std::to_string(i);
        if (sp.verts.empty()) return fail(label + ": empty vertex list");
        for (std::size_t k = 0; k + 1 < sp.verts.size(); ++k)
            if (sp.verts[k] >= sp.verts[k + 1])
                return fail(label + ": vertices not strictly increasing");
        if (!index.emplace(sp.verts, static_cast<int>(i)).second)
            return fail(label + ": duplicate simplex");

        const auto& times = s.times_list[i];
        if (times.empty() || times.size() % 2 != 0)
            return fail(label + ": times list must be non-empty with even length");
        for (std::size_t k = 0; k < times.size(); ++k) {
            int g;
            try {
                g = grid_index(times[k]);
            } catch (const std::invalid_argument&) {
                return fail(label + ": time " + std::to_string(times[k]) + " off the half-integer grid");
            }
            if (g > 2 * n + 2)
                return fail(label + ": time " + std::to_string(times[k]) + " beyond end of zigzag");
            if (k > 0 && times[k] <= times[k - 1])
                return fail(label + ": times not strictly increasing");
        }
        if (grid_index(times[0]) > 2 * n)
            return fail(label + ": first appearance after the final position");
    }

    const auto live = live_sets(s);
    diag.live_counts.resize(live.size());
    for (std::size_t g = 0; g < live.size(); ++g) {
        diag.live_counts[g] = live[g].size();
        diag.max_live = std::max(diag.max_live, live[g].size());
        // face closure at this position
        std::unordered_set<std::size_t> live_here;
        for (int idx : live[g]) live_here.insert(static_cast<std::size_t>(idx));
        for (int idx : live[g]) {
            const Simplex& sp = s.simplex_list[static_cast<std::size_t>(idx)];
            for (const Simplex& f : sp.facets()) {
                auto it = index.find(f.verts);
                if (it == index.end() || !live_here.count(static_cast<std::size_t>(it->second))) {
                    std::string verts;
                    for (int v : sp.verts) verts += std::to_string(v) + " ";
                    return fail("face closure violated at position " + std::to_string(grid_time(static_cast<int>(g))) +
                                ": simplex ( " + verts + ") is live but a facet is not");
                }
            }
        }
    }

    diag.total_simplices = s.simplex_list.size();
    diag.pass = true;
    return diag;
}

std::string schedule_to_json(const ZigzagSchedule& s) {
    nlohmann::ordered_json j;
    j["n_snapshots"] = s.n_snapshots;
    j["radii"] = s.radii;
    j["max_dim"] = s.max_dim;
    auto& simplices = j["simplices"] = nlohmann::ordered_json::array();
    for (const Simplex& sp : s.simplex_list) simplices.push_back(sp.verts);
    auto& times = j["times"] = nlohmann::ordered_json::array();
    for (const auto& t : s.times_list) times.push_back(t);
    return j.dump();
}

ZigzagSchedule schedule_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("schedule JSON parse error: ") + e.what());
    }
    for (const char* key : {"n_snapshots", "radii", "simplices", "times"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("schedule JSON missing key '") + key + "'");

    ZigzagSchedule s;
    s.n_snapshots = j.at("n_snapshots").get<int>();
    s.radii = j.at("radii").get<std::vector<double>>();
    const auto& simplices = j.at("simplices");
    const auto& times = j.at("times");
    if (simplices.size() != times.size())
        throw std::invalid_argument("schedule JSON: simplices/times length mismatch");
    s.simplex_list.reserve(simplices.size());
    s.times_list.reserve(times.size());
    int max_dim = 0;
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        Simplex sp(simplices[i].get<std::vector<int>>());
        max_dim = std::max(max_dim, sp.dim());
        s.simplex_list.push_back(std::move(sp));
        s.times_list.push_back(times[i].get<std::vector<double>>());
    }
    // the cap can exceed the largest simplex present (e.g. no triangle ever
    // forms), so prefer the stored value when there is one
    s.max_dim = j.contains("max_dim") ? std::max(j.at("max_dim").get<int>(), max_dim) : max_dim;
    return s;
}

}  // namespace buzz

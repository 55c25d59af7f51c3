#include "buzz/zigzag.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "buzz/gf2.hpp"

namespace buzz {
namespace {

// Chains over Z/2 are sorted index vectors; the pivot is the largest entry.
// Indices are per-dimension ranks of simplices in (dimension, lex) order,
// shared across all positions of the zigzag, so a chain built in one complex
// is directly a chain in any complex containing it.
using Chain = std::vector<int>;

Chain chain_xor(const Chain& a, const Chain& b) {
    Chain out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Column reduction of a boundary map with combination tracking: columns that
// vanish yield kernel elements (the tracked combination), the rest are kept
// keyed by pivot.
struct KernelReducer {
    struct Entry {
        Chain col, comb;
    };
    std::unordered_map<int, Entry> by_pivot;
    std::vector<Chain> kernel;

    void add(Chain col, Chain comb) {
        while (!col.empty()) {
            auto it = by_pivot.find(col.back());
            if (it == by_pivot.end()) break;
            col = chain_xor(col, it->second.col);
            comb = chain_xor(comb, it->second.comb);
        }
        if (col.empty()) {
            kernel.push_back(std::move(comb));
        } else {
            int piv = col.back();
            by_pivot.emplace(piv, Entry{std::move(col), std::move(comb)});
        }
    }
};

// Same reduction without tracking; keeps the nonzero reduced columns, which
// form a basis of the boundary image keyed by pivot.
struct ImageReducer {
    std::unordered_map<int, Chain> by_pivot;

    void add(Chain col) {
        while (!col.empty()) {
            auto it = by_pivot.find(col.back());
            if (it == by_pivot.end()) {
                int piv = col.back();
                by_pivot.emplace(piv, std::move(col));
                return;
            }
            col = chain_xor(col, it->second);
        }
    }
};

// Homology basis of one complex in one dimension: cycle representatives with
// pairwise distinct pivots, none of which is a boundary pivot. Together the
// boundary columns and the representatives span the cycle space, so any cycle
// of the complex reduces to zero through them; the representatives hit along
// the way are its coordinates.
struct HomologyBasis {
    std::vector<Chain> reps;
    std::unordered_map<int, int> pivot_to_index;
    std::unordered_map<int, Chain> boundary;

    void build(std::vector<Chain> cycles, std::unordered_map<int, Chain> image) {
        boundary = std::move(image);
        for (auto& z : cycles) {
            while (!z.empty()) {
                int piv = z.back();
                auto h = pivot_to_index.find(piv);
                if (h != pivot_to_index.end()) {
                    z = chain_xor(z, reps[h->second]);
                    continue;
                }
                auto b = boundary.find(piv);
                if (b != boundary.end()) {
                    z = chain_xor(z, b->second);
                    continue;
                }
                pivot_to_index.emplace(piv, static_cast<int>(reps.size()));
                reps.push_back(std::move(z));
                break;
            }
        }
    }

    int dim() const { return static_cast<int>(reps.size()); }

    std::vector<int> express(Chain z) const {
        std::vector<int> coords;
        while (!z.empty()) {
            int piv = z.back();
            auto h = pivot_to_index.find(piv);
            if (h != pivot_to_index.end()) {
                coords.push_back(h->second);
                z = chain_xor(z, reps[h->second]);
                continue;
            }
            auto b = boundary.find(piv);
            if (b == boundary.end())
                throw std::logic_error("zigzag engine: chain does not reduce to a cycle of the target complex");
            z = chain_xor(z, b->second);
        }
        std::sort(coords.begin(), coords.end());
        return coords;
    }
};

struct SpaceMachinery {
    std::vector<HomologyBasis> h;  // one per homology dimension 0..P
};

// live_ranks[p]: ascending per-dimension ranks of the live p-simplices.
// facets_of[p][r]: boundary of the rank-r p-simplex as (p-1)-ranks.
SpaceMachinery build_machinery(const std::vector<std::vector<int>>& live_ranks,
                               const std::vector<std::vector<Chain>>& facets_of, int max_hom_dim) {
    SpaceMachinery m;
    m.h.resize(max_hom_dim + 1);
    for (int p = 0; p <= max_hom_dim; ++p) {
        KernelReducer ker;
        for (int r : live_ranks[p]) {
            Chain col = (p == 0) ? Chain{} : facets_of[p][r];
            ker.add(std::move(col), Chain{r});
        }
        ImageReducer img;
        if (p + 1 < static_cast<int>(live_ranks.size()))
            for (int r : live_ranks[p + 1]) img.add(facets_of[p + 1][r]);
        m.h[p].build(std::move(ker.kernel), std::move(img.by_pivot));
    }
    return m;
}

// Dense GF(2) matrix of an inclusion-induced map, bits[row * cols + col].
struct Arrow {
    bool forward = true;
    int rows = 0, cols = 0;
    std::vector<std::uint8_t> bits;
};

// Rank of the natural map lim -> colim over the segment [a, b] of the quiver,
// which equals the number of interval summands whose support contains [a, b].
int generalized_rank(const std::vector<int>& dims, const std::vector<Arrow>& arrows, int a, int b) {
    if (a == b) return dims[a];
    std::vector<int> off(b - a + 2, 0);
    for (int j = a; j <= b; ++j) off[j - a + 1] = off[j - a] + dims[j];
    const int D = off[b - a + 1];
    if (D == 0) return 0;

    // limit: tuples compatible with every arrow in the segment
    int crows = 0;
    for (int j = a; j < b; ++j) crows += arrows[j].rows;
    gf2::Matrix C(crows, D);
    int row = 0;
    for (int j = a; j < b; ++j) {
        const Arrow& A = arrows[j];
        // forward: v_{j+1} = F v_j, one row per coordinate of the target;
        // backward: v_j = G v_{j+1}
        const int tgt = A.forward ? j + 1 - a : j - a;
        const int src = A.forward ? j - a : j + 1 - a;
        for (int r = 0; r < A.rows; ++r, ++row) {
            C.set(row, off[tgt] + r);
            for (int c = 0; c < A.cols; ++c)
                if (A.bits[static_cast<std::size_t>(r) * A.cols + c]) C.set(row, off[src] + c);
        }
    }
    auto lim = gf2::kernel_basis(C);
    if (lim.empty()) return 0;

    // colimit: identify every source basis vector with its image
    int rrows = 0;
    for (int j = a; j < b; ++j) rrows += arrows[j].cols;
    gf2::Matrix R(rrows + lim.size(), D);
    row = 0;
    for (int j = a; j < b; ++j) {
        const Arrow& A = arrows[j];
        const int tgt = A.forward ? j + 1 - a : j - a;
        const int src = A.forward ? j - a : j + 1 - a;
        for (int c = 0; c < A.cols; ++c, ++row) {
            R.set(row, off[src] + c);
            for (int r = 0; r < A.rows; ++r)
                if (A.bits[static_cast<std::size_t>(r) * A.cols + c]) R.set(row, off[tgt] + r);
        }
    }
    gf2::Matrix rel_only = R;  // image rows are still zero here
    rel_only.rows = static_cast<std::size_t>(rrows);
    rel_only.bits.resize(static_cast<std::size_t>(rrows) * R.words);
    const int rank_rel = gf2::rank(std::move(rel_only));

    // image of the limit: project each tuple to its slot-a component (all
    // slots give the same class in the colimit)
    for (std::size_t l = 0; l < lim.size(); ++l)
        for (int j = 0; j < dims[a]; ++j)
            if ((lim[l][j / 64] >> (j % 64)) & 1u) R.set(rrows + l, j);
    return gf2::rank(std::move(R)) - rank_rel;
}

}  // namespace

ZigzagDiagram compute_zigzag(const ZigzagSchedule& schedule, int max_hom_dim) {
    if (max_hom_dim < 0) throw std::invalid_argument("compute_zigzag: max_hom_dim must be >= 0");
    if (schedule.max_dim < max_hom_dim + 1)
        throw std::invalid_argument("compute_zigzag: homology in dimension " +
                                    std::to_string(max_hom_dim) + " needs simplices of dimension " +
                                    std::to_string(max_hom_dim + 1) + ", but the schedule caps at " +
                                    std::to_string(schedule.max_dim));
    ScheduleDiagnostics sd = validate_schedule(schedule);
    if (!sd.pass) throw std::invalid_argument("compute_zigzag: invalid schedule: " + sd.first_violation);

    const int P = max_hom_dim;
    const auto& simps = schedule.simplex_list;
    const int S = static_cast<int>(simps.size());
    const int n = schedule.n_snapshots - 1;
    const int G = 2 * n + 1;

    // canonical per-dimension ranks in (dimension, lex) order
    std::vector<int> order(S);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return simplex_less(simps[i], simps[j]); });
    std::vector<int> rank_of(S), dim_of(S);
    int top_dim = 0;
    for (int i = 0; i < S; ++i) top_dim = std::max(top_dim, simps[i].dim());
    std::vector<std::size_t> dim_counts(top_dim + 1, 0);
    for (int i : order) {
        int d = simps[i].dim();
        dim_of[i] = d;
        rank_of[i] = static_cast<int>(dim_counts[d]++);
    }

    // boundaries, precomputed once against the global rank tables
    const int use_dim = std::min(top_dim, P + 1);
    std::unordered_map<std::vector<int>, int, VecHash> index_of;
    for (int i = 0; i < S; ++i)
        if (dim_of[i] < use_dim) index_of.emplace(simps[i].verts, i);
    std::vector<std::vector<Chain>> facets_of(use_dim + 1);
    for (int p = 1; p <= use_dim; ++p) facets_of[p].resize(dim_counts[p]);
    for (int i = 0; i < S; ++i) {
        int d = dim_of[i];
        if (d < 1 || d > use_dim) continue;
        Chain fr;
        fr.reserve(d + 1);
        for (const Simplex& f : simps[i].facets()) {
            auto it = index_of.find(f.verts);
            if (it == index_of.end())
                throw std::logic_error("compute_zigzag: facet missing from the schedule after validation");
            fr.push_back(rank_of[it->second]);
        }
        std::sort(fr.begin(), fr.end());
        facets_of[d][rank_of[i]] = std::move(fr);
    }

    // complexes at the grid positions, restricted to the dimensions that
    // matter, then refined so every step is an inclusion
    auto live = live_sets(schedule);
    struct RefinedSpace {
        std::vector<int> glob;  // live global indices, ascending
        int grid = -1;          // grid index, -1 for inserted intersections
    };
    std::vector<RefinedSpace> seq;
    {
        std::vector<std::vector<int>> filtered(G);
        for (int g = 0; g < G; ++g)
            for (int i : live[g])
                if (dim_of[i] <= use_dim) filtered[g].push_back(i);
        seq.push_back({std::move(filtered[0]), 0});
        for (int g = 1; g < G; ++g) {
            const auto& prev = seq.back().glob;
            auto& cur = filtered[g];
            bool has_del = !std::includes(cur.begin(), cur.end(), prev.begin(), prev.end());
            bool has_add = !std::includes(prev.begin(), prev.end(), cur.begin(), cur.end());
            if (has_del && has_add) {
                std::vector<int> inter;
                std::set_intersection(prev.begin(), prev.end(), cur.begin(), cur.end(),
                                      std::back_inserter(inter));
                seq.push_back({std::move(inter), -1});
            }
            seq.push_back({std::move(cur), g});
        }
    }
    const int M = static_cast<int>(seq.size());

    auto ranks_of_space = [&](const std::vector<int>& glob) {
        std::vector<std::vector<int>> by_dim(P + 2);
        for (int i : glob) by_dim[dim_of[i]].push_back(rank_of[i]);
        for (auto& v : by_dim) std::sort(v.begin(), v.end());
        return by_dim;
    };

    // walk the sequence once, carrying machinery for two adjacent positions
    std::vector<std::vector<int>> dims_p(P + 1);
    std::vector<std::vector<Arrow>> arrows_p(P + 1);
    SpaceMachinery prev_m = build_machinery(ranks_of_space(seq[0].glob), facets_of, P);
    for (int p = 0; p <= P; ++p) dims_p[p].push_back(prev_m.h[p].dim());
    for (int k = 1; k < M; ++k) {
        SpaceMachinery cur_m = build_machinery(ranks_of_space(seq[k].glob), facets_of, P);
        const auto& a = seq[k - 1].glob;
        const auto& b = seq[k].glob;
        bool fwd = std::includes(b.begin(), b.end(), a.begin(), a.end());
        if (!fwd && !std::includes(a.begin(), a.end(), b.begin(), b.end()))
            throw std::logic_error("compute_zigzag: refined step is not an inclusion");
        for (int p = 0; p <= P; ++p) {
            Arrow ar;
            ar.forward = fwd;
            const HomologyBasis& src = fwd ? prev_m.h[p] : cur_m.h[p];
            const HomologyBasis& tgt = fwd ? cur_m.h[p] : prev_m.h[p];
            ar.cols = src.dim();
            ar.rows = tgt.dim();
            ar.bits.assign(static_cast<std::size_t>(ar.rows) * ar.cols, 0);
            for (int c = 0; c < ar.cols; ++c)
                for (int r : tgt.express(src.reps[c]))
                    ar.bits[static_cast<std::size_t>(r) * ar.cols + c] = 1;
            arrows_p[p].push_back(std::move(ar));
            dims_p[p].push_back(cur_m.h[p].dim());
        }
        prev_m = std::move(cur_m);
    }
    prev_m = SpaceMachinery{};

    // interval decomposition, one homology dimension at a time
    ZigzagDiagram out;
    out.n_snapshots = schedule.n_snapshots;
    out.radii = schedule.radii;
    out.max_dim = schedule.max_dim;
    for (int p = 0; p <= P; ++p) {
        const auto& d = dims_p[p];
        const auto& ar = arrows_p[p];
        // generalized ranks by increasing segment length; a segment strictly
        // containing one of rank zero has rank zero
        std::vector<std::vector<int>> rt(M, std::vector<int>(M, 0));
        for (int a = 0; a < M; ++a) rt[a][a] = d[a];
        for (int len = 1; len < M; ++len)
            for (int a = 0; a + len < M; ++a) {
                int b = a + len;
                if (rt[a + 1][b] == 0 || rt[a][b - 1] == 0) continue;
                rt[a][b] = generalized_rank(d, ar, a, b);
            }
        auto rr = [&](int a, int b) -> int {
            if (a < 0 || b >= M || a > b) return 0;
            return rt[a][b];
        };
        std::vector<long long> accounted(M, 0);
        for (int a = 0; a < M; ++a)
            for (int b = a; b < M; ++b) {
                int mult = rr(a, b) - rr(a - 1, b) - rr(a, b + 1) + rr(a - 1, b + 1);
                if (mult < 0)
                    throw std::logic_error("compute_zigzag: negative interval multiplicity in dimension " +
                                           std::to_string(p));
                if (mult == 0) continue;
                for (int j = a; j <= b; ++j) accounted[j] += mult;
                int gf = -1, gl = -1;
                for (int k = a; k <= b; ++k)
                    if (seq[k].grid >= 0) {
                        if (gf < 0) gf = seq[k].grid;
                        gl = seq[k].grid;
                    }
                if (gf < 0) continue;  // lives only on an inserted intersection
                double birth = grid_time(gf);
                double death = (gl == 2 * n) ? static_cast<double>(n + 1) : grid_time(gl + 1);
                for (int c = 0; c < mult; ++c) out.points.push_back({p, birth, death});
            }
        for (int j = 0; j < M; ++j)
            if (accounted[j] != d[j])
                throw std::logic_error(
                    "compute_zigzag: interval multiplicities do not sum to the homology dimension (dim " +
                    std::to_string(p) + ", refined position " + std::to_string(j) + ": " +
                    std::to_string(accounted[j]) + " vs " + std::to_string(d[j]) + ")");
    }
    sort_points(out.points);
    return out;
}

ZigzagDiagram standard_persistence(const std::vector<FiltrationStep>& filtration, int n_snapshots,
                                   int max_hom_dim) {
    if (n_snapshots < 1)
        throw std::invalid_argument("standard_persistence: n_snapshots must be at least 1");
    if (max_hom_dim < 0)
        throw std::invalid_argument("standard_persistence: max_hom_dim must be >= 0");
    const int n = n_snapshots - 1;
    const int m = static_cast<int>(filtration.size());

    std::unordered_map<std::vector<int>, int, VecHash> index_of;
    for (int i = 0; i < m; ++i) {
        const auto& st = filtration[i];
        int g = grid_index(st.time);
        if (g > 2 * n)
            throw std::invalid_argument("standard_persistence: step " + std::to_string(i) +
                                        " enters after the final position");
        if (i > 0 && st.time < filtration[i - 1].time)
            throw std::invalid_argument("standard_persistence: times must be non-decreasing (step " +
                                        std::to_string(i) + ")");
        if (!index_of.emplace(st.simplex.verts, i).second)
            throw std::invalid_argument("standard_persistence: duplicate simplex at step " +
                                        std::to_string(i));
    }

    // column reduction in insertion order; pivot = latest facet
    std::vector<Chain> cols(m);
    std::unordered_map<int, int> pivot_owner;
    std::vector<std::pair<int, int>> pairs;  // (creator, destroyer)
    for (int j = 0; j < m; ++j) {
        const Simplex& s = filtration[j].simplex;
        Chain c;
        if (s.dim() >= 1) {
            c.reserve(s.dim() + 1);
            for (const Simplex& f : s.facets()) {
                auto it = index_of.find(f.verts);
                if (it == index_of.end() || it->second > j)
                    throw std::invalid_argument("standard_persistence: facet of step " + std::to_string(j) +
                                                " missing or inserted later");
                c.push_back(it->second);
            }
            std::sort(c.begin(), c.end());
        }
        while (!c.empty()) {
            auto it = pivot_owner.find(c.back());
            if (it == pivot_owner.end()) break;
            c = chain_xor(c, cols[it->second]);
        }
        if (!c.empty()) {
            pivot_owner.emplace(c.back(), j);
            pairs.emplace_back(c.back(), j);
            cols[j] = std::move(c);
        }
    }

    ZigzagDiagram out;
    out.n_snapshots = n_snapshots;
    std::vector<char> destroyed(m, 0);
    for (auto [i, j] : pairs) {
        destroyed[i] = 1;
        int p = filtration[i].simplex.dim();
        if (p > max_hom_dim) continue;
        double birth = filtration[i].time, death = filtration[j].time;
        if (birth != death) out.points.push_back({p, birth, death});
    }
    for (int i = 0; i < m; ++i) {
        // columns that reduced to zero created a class; unpaired ones survive
        if (destroyed[i] || !cols[i].empty()) continue;
        int p = filtration[i].simplex.dim();
        if (p > max_hom_dim) continue;
        out.points.push_back({p, filtration[i].time, static_cast<double>(n + 1)});
    }
    sort_points(out.points);
    return out;
}

namespace {

// Betti numbers of one live complex through machinery unrelated to the
// zigzag engine: union-find in dimension 0, cycle count minus sparse
// boundary rank in dimension 1, dense kernel/image counts above that.
std::vector<std::size_t> direct_betti(const std::vector<const Simplex*>& live, int max_hom_dim) {
    std::vector<std::size_t> betti(max_hom_dim + 1, 0);

    std::vector<int> verts;
    std::size_t n_edges = 0;
    for (const Simplex* s : live) {
        if (s->dim() == 0) verts.push_back(s->verts[0]);
        if (s->dim() == 1) ++n_edges;
    }
    std::sort(verts.begin(), verts.end());
    std::unordered_map<int, int> vid;
    for (int v : verts) vid.emplace(v, static_cast<int>(vid.size()));

    std::vector<int> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> rank_uf(verts.size(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const Simplex* s : live) {
        if (s->dim() != 1) continue;
        int a = find(vid.at(s->verts[0])), b = find(vid.at(s->verts[1]));
        if (a == b) continue;
        if (rank_uf[a] < rank_uf[b]) std::swap(a, b);
        parent[b] = a;
        if (rank_uf[a] == rank_uf[b]) ++rank_uf[a];
    }
    std::size_t components = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++components;
    betti[0] = components;
    if (max_hom_dim == 0) return betti;

    // dimension 1: (E - V + C) cycles minus the rank of the triangle boundary
    std::vector<std::vector<int>> edges;
    for (const Simplex* s : live)
        if (s->dim() == 1) edges.push_back(s->verts);
    std::sort(edges.begin(), edges.end());
    std::unordered_map<std::vector<int>, int, VecHash> eid;
    for (const auto& e : edges) eid.emplace(e, static_cast<int>(eid.size()));

    std::unordered_map<int, Chain> reduced;
    for (const Simplex* s : live) {
        if (s->dim() != 2) continue;
        Chain c;
        for (const Simplex& f : s->facets()) c.push_back(eid.at(f.verts));
        std::sort(c.begin(), c.end());
        while (!c.empty()) {
            auto it = reduced.find(c.back());
            if (it == reduced.end()) {
                int piv = c.back();
                reduced.emplace(piv, std::move(c));
                break;
            }
            c = chain_xor(c, it->second);
        }
    }
    std::size_t cycles = n_edges + components - verts.size();
    betti[1] = cycles - reduced.size();
    if (max_hom_dim == 1) return betti;

    // higher dimensions: dense oracle, workable only on small complexes
    SimplicialComplex K;
    std::size_t total = 0;
    for (const Simplex* s : live) {
        K.insert(*s);
        ++total;
    }
    if (total > 2000)
        throw std::invalid_argument(
            "betti_consistency: dimensions >= 2 use the dense oracle, which needs <= 2000 live "
            "simplices (got " +
            std::to_string(total) + ")");
    auto dense = betti_numbers(K, max_hom_dim);
    for (int p = 2; p <= max_hom_dim; ++p)
        betti[p] = p < static_cast<int>(dense.size()) ? dense[p] : 0;
    return betti;
}

}  // namespace

BettiReport betti_consistency(const ZigzagSchedule& schedule, const ZigzagDiagram& diagram,
                              int max_hom_dim) {
    if (max_hom_dim < 0)
        throw std::invalid_argument("betti_consistency: max_hom_dim must be >= 0");
    ScheduleDiagnostics sd = validate_schedule(schedule);
    if (!sd.pass)
        throw std::invalid_argument("betti_consistency: invalid schedule: " + sd.first_violation);

    BettiReport rep;
    auto live = live_sets(schedule);
    rep.betti.resize(live.size());
    for (std::size_t g = 0; g < live.size(); ++g) {
        double t = grid_time(static_cast<int>(g));
        std::vector<std::size_t> from_diag(max_hom_dim + 1, 0);
        for (const auto& pt : diagram.points)
            if (pt.dim <= max_hom_dim && pt.birth <= t && t < pt.death) ++from_diag[pt.dim];

        std::vector<const Simplex*> live_ptrs;
        live_ptrs.reserve(live[g].size());
        for (int i : live[g]) live_ptrs.push_back(&schedule.simplex_list[i]);
        rep.betti[g] = direct_betti(live_ptrs, max_hom_dim);

        for (int p = 0; p <= max_hom_dim; ++p)
            if (from_diag[p] != rep.betti[g][p])
                rep.mismatches.push_back(
                    {static_cast<int>(g), p, from_diag[p], rep.betti[g][p]});
    }
    rep.pass = rep.mismatches.empty();
    return rep;
}

}  // namespace buzz

#include "buzz/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace buzz {

Simplex::Simplex(std::vector<int> v) : verts(std::move(v)) {
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw std::invalid_argument("Simplex: repeated vertex id");
    if (verts.empty()) throw std::invalid_argument("Simplex: empty vertex list");
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (verts.size() < 2) return out;
    out.reserve(verts.size());
    for (std::size_t skip = 0; skip < verts.size(); ++skip) {
        Simplex f;
        f.verts.reserve(verts.size() - 1);
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (i != skip) f.verts.push_back(verts[i]);
        out.push_back(std::move(f));
    }
    return out;
}

bool simplex_less(const Simplex& a, const Simplex& b) {
    if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
    return a.verts < b.verts;
}

std::size_t SimplicialComplex::count(int p) const {
    if (p < 0 || p >= static_cast<int>(by_dim.size())) return 0;
    return by_dim[static_cast<std::size_t>(p)].size();
}

std::size_t SimplicialComplex::total() const {
    std::size_t t = 0;
    for (const auto& v : by_dim) t += v.size();
    return t;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    const int p = s.dim();
    if (p < 0 || p >= static_cast<int>(by_dim.size())) return false;
    const auto& v = by_dim[static_cast<std::size_t>(p)];
    return std::binary_search(v.begin(), v.end(), s, simplex_less);
}

void SimplicialComplex::insert(Simplex s) {
    const int p = s.dim();
    if (p < 0) throw std::invalid_argument("SimplicialComplex::insert: empty simplex");
    if (p >= static_cast<int>(by_dim.size())) by_dim.resize(static_cast<std::size_t>(p) + 1);
    auto& v = by_dim[static_cast<std::size_t>(p)];
    auto it = std::lower_bound(v.begin(), v.end(), s, simplex_less);
    if (it != v.end() && *it == s) return;
    v.insert(it, std::move(s));
}

bool SimplicialComplex::is_face_closed() const {
    for (const auto& dim_list : by_dim)
        for (const Simplex& s : dim_list)
            for (const Simplex& f : s.facets())
                if (!contains(f)) return false;
    return true;
}

SimplicialComplex rips_complex(const DistanceMatrix& dist, double r, int max_dim,
                               const std::vector<int>& ids) {
    if (r < 0.0) throw std::invalid_argument("rips_complex: negative radius");
    if (max_dim < 0) throw std::invalid_argument("rips_complex: negative max_dim");
    const int n = dist.n;
    if (!ids.empty() && static_cast<int>(ids.size()) != n)
        throw std::invalid_argument("rips_complex: ids size does not match distance matrix");

    auto vid = [&](int row) { return ids.empty() ? row : ids[static_cast<std::size_t>(row)]; };

    SimplicialComplex K;
    K.by_dim.resize(static_cast<std::size_t>(max_dim) + 1);
    for (int i = 0; i < n; ++i) K.by_dim[0].push_back(Simplex({vid(i)}));
    std::sort(K.by_dim[0].begin(), K.by_dim[0].end(), simplex_less);
    if (max_dim == 0 || n == 0) {
        K.by_dim.resize(1);
        return K;
    }

    // lower_nbrs[i] = rows j < i with d(i,j) <= r (closed threshold)
    std::vector<std::vector<int>> lower_nbrs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (dist.at(i, j) <= r) lower_nbrs[static_cast<std::size_t>(i)].push_back(j);

    // Incremental expansion: grow cliques by common lower neighbors. Simplices
    // are tracked as row-index lists in decreasing order, converted to vertex
    // ids at the end.
    std::vector<std::vector<int>> frontier;  // current p-simplices (rows, decreasing)
    for (int i = 0; i < n; ++i)
        for (int j : lower_nbrs[static_cast<std::size_t>(i)]) frontier.push_back({i, j});

    auto emit = [&](const std::vector<int>& rows_desc, int p) {
        Simplex s;
        s.verts.reserve(rows_desc.size());
        for (int row : rows_desc) s.verts.push_back(vid(row));
        std::sort(s.verts.begin(), s.verts.end());
        K.by_dim[static_cast<std::size_t>(p)].push_back(std::move(s));
    };

    for (const auto& e : frontier) emit(e, 1);
    for (int p = 2; p <= max_dim && !frontier.empty(); ++p) {
        std::vector<std::vector<int>> next;
        for (const auto& simp : frontier) {
            // candidates = intersection of lower neighbor lists of all members
            std::vector<int> cand = lower_nbrs[static_cast<std::size_t>(simp[0])];
            for (std::size_t k = 1; k < simp.size() && !cand.empty(); ++k) {
                const auto& ln = lower_nbrs[static_cast<std::size_t>(simp[k])];
                std::vector<int> merged;
                std::set_intersection(cand.begin(), cand.end(), ln.begin(), ln.end(),
                                      std::back_inserter(merged));
                cand.swap(merged);
            }
            for (int c : cand) {
                std::vector<int> bigger = simp;
                bigger.push_back(c);
                emit(bigger, p);
                next.push_back(std::move(bigger));
            }
        }
        frontier.swap(next);
    }

    for (auto& dim_list : K.by_dim) std::sort(dim_list.begin(), dim_list.end(), simplex_less);
    // trim empty top dimensions
    while (K.by_dim.size() > 1 && K.by_dim.back().empty()) K.by_dim.pop_back();
    return K;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& K, int p) {
    if (p < 1) throw std::invalid_argument("boundary_matrix: p must be >= 1");
    BoundaryMatrix B;
    if (p <= K.max_dim()) B.cols = K.by_dim[static_cast<std::size_t>(p)];
    if (p - 1 <= K.max_dim()) B.rows = K.by_dim[static_cast<std::size_t>(p - 1)];

    auto key = [](const Simplex& s) {
        std::size_t h = 1469598103934665603ull;
        for (int v : s.verts) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    };
    // rows are lex-sorted and distinct; resolve rare hash collisions by probing
    std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < B.rows.size(); ++i) buckets[key(B.rows[i])].push_back(i);
    auto find_row = [&](const Simplex& s) -> std::size_t {
        auto it = buckets.find(key(s));
        if (it != buckets.end())
            for (std::size_t i : it->second)
                if (B.rows[i] == s) return i;
        throw std::logic_error("boundary_matrix: facet missing from complex");
    };

    B.m.assign(B.rows.size(), std::vector<std::uint8_t>(B.cols.size(), 0));
    for (std::size_t j = 0; j < B.cols.size(); ++j)
        for (const Simplex& f : B.cols[j].facets()) B.m[find_row(f)][j] = 1;
    return B;
}

namespace {

// rank of a dense Z/2 matrix by Gaussian elimination (destructive copy)
int gf2_dense_rank(std::vector<std::vector<std::uint8_t>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != row && m[i][col])
                for (std::size_t j = col; j < cols; ++j) m[i][j] ^= m[row][j];
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

std::vector<int> betti_numbers(const SimplicialComplex& K, int max_p) {
    if (max_p < 0) throw std::invalid_argument("betti_numbers: negative max_p");
    std::vector<int> betti(static_cast<std::size_t>(max_p) + 1, 0);
    std::vector<int> rank_dp(static_cast<std::size_t>(max_p) + 2, 0);  // rank of boundary_p
    for (int p = 1; p <= max_p + 1; ++p) {
        if (p > K.max_dim() || K.count(p) == 0) {
            rank_dp[static_cast<std::size_t>(p)] = 0;
            continue;
        }
        rank_dp[static_cast<std::size_t>(p)] = gf2_dense_rank(boundary_matrix(K, p).m);
    }
    for (int p = 0; p <= max_p; ++p) {
        const long n_p = static_cast<long>(K.count(p));
        // dim ker d_p = n_p - rank d_p (d_0 = 0)
        const long kernel = n_p - (p == 0 ? 0 : rank_dp[static_cast<std::size_t>(p)]);
        betti[static_cast<std::size_t>(p)] = static_cast<int>(kernel - rank_dp[static_cast<std::size_t>(p) + 1]);
    }
    return betti;
}

int component_count(const SimplicialComplex& K) {
    if (K.count(0) == 0) return 0;
    std::unordered_map<int, int> parent;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const Simplex& s : K.by_dim[0]) parent[s.verts[0]] = s.verts[0];
    int comps = static_cast<int>(parent.size());
    if (K.max_dim() >= 1)
        for (const Simplex& e : K.by_dim[1]) {
            const int a = find(e.verts[0]), b = find(e.verts[1]);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
    return comps;
}

}  // namespace buzz

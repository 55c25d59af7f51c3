#pragma once

#include <cstdint>
#include <vector>

#include "buzz/geometry.hpp"

namespace buzz {

/// An abstract simplex: a sorted list of distinct vertex ids.
/// Canonical order between simplices is (dimension, lexicographic vertex list);
/// that order is used everywhere a deterministic simplex ordering is needed
/// (boundary matrix rows/columns, schedule entries).
struct Simplex {
    std::vector<int> verts;

    Simplex() = default;
    explicit Simplex(std::vector<int> v);

    int dim() const { return static_cast<int>(verts.size()) - 1; }

    /// The dim+1 facets, each obtained by dropping one vertex. Empty for vertices.
    std::vector<Simplex> facets() const;

    bool operator==(const Simplex& o) const { return verts == o.verts; }
};

/// Canonical (dimension, lex) order.
bool simplex_less(const Simplex& a, const Simplex& b);

/// A finite simplicial complex stored per dimension, each dimension sorted in
/// canonical order. Intended for oracle-scale computations; the zigzag engine
/// uses its own compact representation.
struct SimplicialComplex {
    // by_dim[p] = all p-simplices, lex-sorted
    std::vector<std::vector<Simplex>> by_dim;

    int max_dim() const { return static_cast<int>(by_dim.size()) - 1; }
    std::size_t count(int p) const;
    std::size_t total() const;
    bool contains(const Simplex& s) const;

    void insert(Simplex s);          // keeps per-dimension vectors sorted
    bool is_face_closed() const;     // every facet of every simplex is present
};

/// Vietoris-Rips complex at scale r (closed threshold: edge iff d(u,v) <= r),
/// expanded up to simplex dimension max_dim via lower-neighbor expansion.
/// Vertex ids are `ids[i]` for row i of the distance matrix (defaults 0..n-1
/// when `ids` is empty). All vertices are included regardless of r. r must be
/// >= 0 and max_dim >= 0.
SimplicialComplex rips_complex(const DistanceMatrix& dist, double r, int max_dim,
                               const std::vector<int>& ids = {});

/// Z/2 boundary matrix of the p-simplices of a complex (p >= 1): rows are the
/// (p-1)-simplices and columns the p-simplices, both in canonical order;
/// entry (i,j) = 1 iff row simplex i is a facet of column simplex j.
struct BoundaryMatrix {
    std::vector<Simplex> rows;
    std::vector<Simplex> cols;
    std::vector<std::vector<std::uint8_t>> m;  // m[i][j], |rows| x |cols|
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& K, int p);

/// Betti numbers beta_0..beta_max_p over Z/2, computed by plain Gaussian
/// elimination on dense boundary matrices. Cubic in the number of simplices;
/// meant as a test oracle, not for large complexes.
std::vector<int> betti_numbers(const SimplicialComplex& K, int max_p);

/// Number of connected components of the complex's 1-skeleton (union-find;
/// independent of the boundary-matrix route).
int component_count(const SimplicialComplex& K);

}  // namespace buzz

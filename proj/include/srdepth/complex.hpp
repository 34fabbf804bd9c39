#ifndef SRDEPTH_COMPLEX_HPP
#define SRDEPTH_COMPLEX_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace srdepth {

/// A face stored as a bitmask over the vertex positions 0..m-1 of its
/// complex. Position i corresponds to the complex's i-th (sorted) label.
class Face {
public:
    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

    static constexpr Face vertex(int position) { return Face(std::uint64_t{1} << position); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int cardinality() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool has(int position) const { return (bits_ >> position) & 1U; }
    constexpr bool is_subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool disjoint_from(Face other) const { return (bits_ & other.bits_) == 0; }

    constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
    constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
    constexpr Face without(Face o) const { return Face(bits_ & ~o.bits_); }

    /// Vertex positions in increasing order.
    std::vector<int> positions() const;

    friend constexpr bool operator==(Face, Face) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Canonical face order: by cardinality, then lexicographically on the
/// increasing vertex lists.
constexpr bool face_less(Face a, Face b)
{
    if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct DimInfo {
    int dim = -1;
    int krull = 0;
};

/// Finite abstract simplicial complex. Always contains the empty face; the
/// minimal complex is {∅} on zero vertices. Every vertex label occurs in
/// some facet. Immutable after construction.
class SimplicialComplex {
public:
    static constexpr int max_vertices = 64;

    /// Builds the downward closure of `facets`, given as bitmasks over the
    /// positions of `labels` (strictly increasing, positive). Every position
    /// must be covered by a facet.
    SimplicialComplex(std::vector<int> labels, std::span<const Face> facets);

    /// The complex {∅}.
    SimplicialComplex();

    int m() const { return static_cast<int>(labels_.size()); }
    const std::vector<int>& labels() const { return labels_; }
    int dim() const { return dim_; }
    DimInfo dim_info() const { return {dim_, dim_ + 1}; }
    bool is_empty_complex() const { return labels_.empty(); }

    /// Inclusion-maximal faces in canonical order.
    const std::vector<Face>& facets() const { return facets_; }
    /// All faces, including ∅, in canonical order.
    const std::vector<Face>& faces() const { return faces_; }
    /// Faces with exactly k vertices, in canonical order.
    std::span<const Face> faces_of_cardinality(int k) const;
    /// Position of `f` within faces_of_cardinality(f.cardinality()), or -1.
    long index_of(Face f) const;

    bool contains(Face f) const { return index_of(f) >= 0; }

    /// f-vector (f_{-1}, f_0, ..., f_dim); f_{-1} = 1 counts ∅.
    std::vector<long long> f_vector() const;
    /// Unreduced Euler characteristic Σ (-1)^i f_i over i ≥ 0.
    long long euler_characteristic() const;

    Face vertex_set() const;
    Face face_from_labels(std::span<const int> labels) const;
    std::vector<int> labels_of(Face f) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

private:
    std::vector<int> labels_;
    std::vector<Face> facets_;
    std::vector<Face> faces_;
    std::vector<std::size_t> card_offsets_;
    std::vector<std::uint64_t> sorted_bits_;
    std::vector<long> sorted_rank_;
    int dim_ = -1;
};

/// Canonicalizes a raw facet list over the vertex set {1..m}.
/// ([[]], 0) is the complex {∅}; an empty facet list is EmptyInput.
SimplicialComplex validate(const std::vector<std::vector<int>>& raw_facets, int m);

/// Subcomplex of `K` consisting of the faces accepted by `keep`, which must
/// describe a downward-closed family. Labels are inherited from K; vertices
/// not occurring in a kept face are dropped.
template <typename Predicate>
SimplicialComplex subcomplex(const SimplicialComplex& K, Predicate keep);

SimplicialComplex star(const SimplicialComplex& K, Face sigma);
SimplicialComplex link(const SimplicialComplex& K, Face sigma);
/// K_W: faces contained in the vertex set W (positions of K).
SimplicialComplex induced(const SimplicialComplex& K, Face W);
/// cost_K(σ): faces of K not containing σ.
SimplicialComplex contrastar(const SimplicialComplex& K, Face sigma);

/// Faces of `L` mapped into the position coordinates of `K` via labels.
/// Throws NotASubcomplex if some face of L is not a face of K.
std::vector<Face> embed_faces(const SimplicialComplex& K, const SimplicialComplex& L);

/// Same face family up to the order-preserving relabelling of vertices.
bool isomorphic_by_order(const SimplicialComplex& a, const SimplicialComplex& b);

// Generators. All produce labels 1..m.
SimplicialComplex simplex(int m);
/// Boundary of the n-dimensional simplex: n+1 vertices, dimension n-1.
SimplicialComplex boundary_simplex(int n);
SimplicialComplex cycle(int n);
SimplicialComplex disjoint_points(int k);
/// Join; vertices of K come first, L's are shifted past them.
SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L);
/// join(simplex(1), K); the apex is vertex 1.
SimplicialComplex cone(const SimplicialComplex& K);
/// join(disjoint_points(2), K); the poles are vertices 1 and 2.
SimplicialComplex suspension(const SimplicialComplex& K);
/// Minimal 6-vertex, 10-triangle triangulation of the real projective plane.
SimplicialComplex rp2_minimal();
/// Each (d+1)-subset of {1..m} becomes a facet with probability `density`;
/// a vertex left uncovered gets a random d-face containing it. Deterministic
/// for a given seed on every platform.
SimplicialComplex random_complex(int m, int d, double density, std::uint64_t seed);

// Facet-list text and JSON formats.
SimplicialComplex parse_facet_text(const std::string& text);
SimplicialComplex parse_complex_json(const std::string& text);
/// Dispatches on content: a leading '{' means JSON.
SimplicialComplex parse_complex(const std::string& text);
SimplicialComplex read_complex_file(const std::string& path);
std::string to_facet_text(const SimplicialComplex& K);
std::string to_complex_json(const SimplicialComplex& K);

std::ostream& operator<<(std::ostream& os, const SimplicialComplex& K);

template <typename Predicate>
SimplicialComplex subcomplex(const SimplicialComplex& K, Predicate keep)
{
    std::vector<Face> kept;
    std::uint64_t used = 0;
    for (Face f : K.faces())
        if (keep(f)) {
            kept.push_back(f);
            used |= f.bits();
        }
    std::vector<int> labels;
    std::vector<int> new_position(K.m(), -1);
    for (int i = 0; i < K.m(); ++i)
        if ((used >> i) & 1U) {
            new_position[i] = static_cast<int>(labels.size());
            labels.push_back(K.labels()[i]);
        }
    std::vector<Face> compressed;
    compressed.reserve(kept.size());
    for (Face f : kept) {
        std::uint64_t bits = 0;
        for (int i : f.positions()) bits |= std::uint64_t{1} << new_position[i];
        compressed.emplace_back(bits);
    }
    return SimplicialComplex(std::move(labels), compressed);
}

}  // namespace srdepth

#endif  // SRDEPTH_COMPLEX_HPP

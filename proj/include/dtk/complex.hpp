#ifndef DTK_COMPLEX_HPP
#define DTK_COMPLEX_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "dtk/core.hpp"

// Cell complexes: dimension-graded face sets closed under boundary, with
// two-way incidence queries; binary images over a complex whose iteration
// domain is restricted to one "primary" dimension; the face-adjacency
// neighborhoods used by mesh thinning; free pairs and elementary collapse.

namespace dtk {

struct Face {
    int dim = 0;
    int id = 0;
    friend auto operator<=>(const Face&, const Face&) = default;
};

// Immutable after construction (builders call finish() once). Faces of each
// dimension carry dense ids 0..count-1; every incidence list is sorted
// ascending, which fixes all tie-breaks downstream.
class CellComplex {
public:
    explicit CellComplex(int max_dim);

    int max_dim() const { return max_dim_; }
    int face_count(int dim) const;
    std::int64_t total_face_count() const;
    bool valid(const Face& f) const {
        return f.dim >= 0 && f.dim <= max_dim_ && f.id >= 0 &&
               f.id < face_count(f.dim);
    }

    // Construction interface.
    Face add_face(int dim);
    void link(const Face& lower, const Face& upper); // dims must be k, k+1
    void finish(); // sorts and dedups incidence lists

    // ids of the (dim-1)-faces bounding f, ascending.
    const std::vector<int>& boundary(const Face& f) const;
    // ids of the (dim+1)-faces containing f, ascending.
    const std::vector<int>& coboundary(const Face& f) const;

    bool boundary_contains(const Face& g, int lower_id) const;

private:
    int max_dim_;
    std::vector<std::vector<std::vector<int>>> bnd_; // [dim][id] -> ids dim-1
    std::vector<std::vector<std::vector<int>>> cob_; // [dim][id] -> ids dim+1
};

// Boolean image over all faces of a complex. Values are readable and
// writable at every dimension, but the iteration domain (domain_sites,
// contains, foreground) covers only faces of the primary dimension.
// set_primary_dim re-aims that view in O(1) without touching values.
class ComplexImage {
public:
    using site_type = Face;

    ComplexImage(std::shared_ptr<const CellComplex> complex, int primary_dim,
                 bool init = false);

    const CellComplex& complex() const { return *complex_; }
    const std::shared_ptr<const CellComplex>& complex_ptr() const {
        return complex_;
    }

    int primary_dim() const { return primary_dim_; }
    void set_primary_dim(int dim);

    bool value(const Face& f) const { return values_[flat_index(f)] != 0; }
    void set_value(const Face& f, bool v) { values_[flat_index(f)] = v ? 1 : 0; }
    std::int64_t true_count(int dim) const;
    std::int64_t true_count() const; // all dimensions

    // thinnable-image interface (primary dimension only)
    std::vector<Face> domain_sites() const;
    bool contains(const Face& f) const {
        return f.dim == primary_dim_ && complex_->valid(f);
    }
    bool foreground(const Face& f) const { return contains(f) && value(f); }
    void set(const Face& f, bool v) { set_value(f, v); }

    class flag_map {
    public:
        explicit flag_map(const ComplexImage& img)
            : img_(&img), bits_(img.values_.size(), 0) {}
        bool test(const Face& f) const { return bits_[img_->flat_index(f)] != 0; }
        void set(const Face& f, bool v) { bits_[img_->flat_index(f)] = v ? 1 : 0; }

    private:
        const ComplexImage* img_;
        std::vector<std::uint8_t> bits_;
    };

    friend bool operator==(const ComplexImage& a, const ComplexImage& b) {
        return a.complex_ == b.complex_ && a.primary_dim_ == b.primary_dim_ &&
               a.values_ == b.values_;
    }

private:
    friend class flag_map;
    std::size_t flat_index(const Face& f) const {
        return offsets_[static_cast<std::size_t>(f.dim)] +
               static_cast<std::size_t>(f.id);
    }

    std::shared_ptr<const CellComplex> complex_;
    int primary_dim_;
    std::vector<std::size_t> offsets_; // per-dim start into values_
    std::vector<std::uint8_t> values_;
};

// Neighborhood of an n-face: the other n-faces sharing one of its
// (n-1)-faces. Structural only — value filtering is the caller's job,
// as with the grid neighborhoods.
class SharedFaceAdjacency {
public:
    explicit SharedFaceAdjacency(const CellComplex& complex)
        : complex_(&complex) {}
    std::vector<Face> sites(const Face& t) const;

private:
    const CellComplex* complex_;
};

// Neighborhood of an n-face: the other n-faces whose closures intersect
// its closure in any dimension (shared vertex included). This is the
// influence set of closure-based simplicity, so thinning drivers that
// detach whole private closures stay stable under it.
class LowerFaceAdjacency {
public:
    explicit LowerFaceAdjacency(const CellComplex& complex)
        : complex_(&complex) {}
    std::vector<Face> sites(const Face& t) const;

private:
    const CellComplex* complex_;
};

// (f, g) is free when dim g = dim f + 1, both are true, f bounds g, and g
// is the only true coface of f. Removing such a pair is an elementary
// collapse: it preserves the homotopy type (and the Euler characteristic).
bool is_free_pair(const Face& f, const Face& g, const ComplexImage& img);

// Sets both faces of a free pair to false. Throws std::logic_error when the
// pair is not free.
void elementary_collapse(const Face& f, const Face& g, ComplexImage& img);

// Alternating sum over true faces (all dimensions) or over a whole complex.
std::int64_t euler_characteristic(const ComplexImage& img);
std::int64_t euler_characteristic(const CellComplex& complex);

// Triangle-mesh data as read from / written to OFF files.
struct OffMesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<int, 3>> triangles;
};

// A simplicial 2-complex together with the geometry needed for export.
struct SurfaceComplex {
    std::shared_ptr<const CellComplex> cells;
    std::vector<std::array<double, 3>> vertex_positions; // by 0-face id
    std::vector<std::array<int, 2>> edge_vertices;       // by 1-face id
    std::vector<std::array<int, 3>> triangle_vertices;   // by 2-face id
};

// 0-faces = vertices, 1-faces = distinct triangle edges, 2-faces =
// triangles. Throws std::invalid_argument on an out-of-range vertex index,
// a degenerate triangle, or a duplicate triangle (vertex order ignored).
SurfaceComplex build_simplicial_from_off(const OffMesh& mesh);

// Image over the surface with primary dimension 2 and every face true
// (the closure of the triangle set).
ComplexImage make_surface_image(const SurfaceComplex& surface);

// Cubical complex spanned by the foreground: one D-cube per foreground
// site plus all its lower faces, shared faces deduplicated. Face ids are
// assigned in lexicographic coordinate order, so the construction is
// deterministic.
template <int D>
CellComplex build_cubical_from_binary(const BinaryGridImage<D>& img);

} // namespace dtk

#endif

#include "dtk/complex.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace dtk {

CellComplex::CellComplex(int max_dim) : max_dim_(max_dim) {
    assert(max_dim >= 0);
    bnd_.resize(static_cast<std::size_t>(max_dim) + 1);
    cob_.resize(static_cast<std::size_t>(max_dim) + 1);
}

int CellComplex::face_count(int dim) const {
    if (dim < 0 || dim > max_dim_)
        return 0;
    return static_cast<int>(bnd_[static_cast<std::size_t>(dim)].size());
}

std::int64_t CellComplex::total_face_count() const {
    std::int64_t n = 0;
    for (int d = 0; d <= max_dim_; ++d)
        n += face_count(d);
    return n;
}

Face CellComplex::add_face(int dim) {
    assert(dim >= 0 && dim <= max_dim_);
    bnd_[static_cast<std::size_t>(dim)].emplace_back();
    cob_[static_cast<std::size_t>(dim)].emplace_back();
    return Face{dim, face_count(dim) - 1};
}

void CellComplex::link(const Face& lower, const Face& upper) {
    assert(valid(lower) && valid(upper));
    assert(lower.dim + 1 == upper.dim);
    bnd_[static_cast<std::size_t>(upper.dim)][static_cast<std::size_t>(upper.id)]
        .push_back(lower.id);
    cob_[static_cast<std::size_t>(lower.dim)][static_cast<std::size_t>(lower.id)]
        .push_back(upper.id);
}

void CellComplex::finish() {
    for (auto& per_dim : {&bnd_, &cob_})
        for (auto& faces : *per_dim)
            for (auto& ids : faces) {
                std::sort(ids.begin(), ids.end());
                ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            }
}

const std::vector<int>& CellComplex::boundary(const Face& f) const {
    assert(valid(f));
    return bnd_[static_cast<std::size_t>(f.dim)][static_cast<std::size_t>(f.id)];
}

const std::vector<int>& CellComplex::coboundary(const Face& f) const {
    assert(valid(f));
    return cob_[static_cast<std::size_t>(f.dim)][static_cast<std::size_t>(f.id)];
}

bool CellComplex::boundary_contains(const Face& g, int lower_id) const {
    const auto& ids = boundary(g);
    return std::binary_search(ids.begin(), ids.end(), lower_id);
}

ComplexImage::ComplexImage(std::shared_ptr<const CellComplex> complex,
                           int primary_dim, bool init)
    : complex_(std::move(complex)), primary_dim_(primary_dim) {
    if (!complex_)
        throw std::invalid_argument("ComplexImage: null complex");
    if (primary_dim_ < 0 || primary_dim_ > complex_->max_dim())
        throw std::invalid_argument("ComplexImage: primary_dim out of range");
    offsets_.resize(static_cast<std::size_t>(complex_->max_dim()) + 2, 0);
    for (int d = 0; d <= complex_->max_dim(); ++d)
        offsets_[static_cast<std::size_t>(d) + 1] =
            offsets_[static_cast<std::size_t>(d)] +
            static_cast<std::size_t>(complex_->face_count(d));
    values_.assign(offsets_.back(), init ? 1 : 0);
}

void ComplexImage::set_primary_dim(int dim) {
    if (dim < 0 || dim > complex_->max_dim())
        throw std::invalid_argument("set_primary_dim: dimension out of range");
    primary_dim_ = dim;
}

std::int64_t ComplexImage::true_count(int dim) const {
    std::int64_t n = 0;
    for (int id = 0; id < complex_->face_count(dim); ++id)
        n += value(Face{dim, id}) ? 1 : 0;
    return n;
}

std::int64_t ComplexImage::true_count() const {
    std::int64_t n = 0;
    for (auto v : values_)
        n += v;
    return n;
}

std::vector<Face> ComplexImage::domain_sites() const {
    std::vector<Face> sites;
    int count = complex_->face_count(primary_dim_);
    sites.reserve(static_cast<std::size_t>(count));
    for (int id = 0; id < count; ++id)
        sites.push_back(Face{primary_dim_, id});
    return sites;
}

std::vector<Face> SharedFaceAdjacency::sites(const Face& t) const {
    std::vector<Face> out;
    if (t.dim == 0)
        return out;
    for (int f : complex_->boundary(t)) {
        for (int g : complex_->coboundary(Face{t.dim - 1, f}))
            if (g != t.id)
                out.push_back(Face{t.dim, g});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// All faces of the closure of t, t included.
void closure_of(const CellComplex& complex, const Face& t,
                std::vector<Face>& out) {
    out.clear();
    out.push_back(t);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Face f = out[i];
        if (f.dim == 0)
            continue;
        for (int id : complex.boundary(f)) {
            Face b{f.dim - 1, id};
            if (std::find(out.begin(), out.end(), b) == out.end())
                out.push_back(b);
        }
    }
}

// All n-faces whose closure contains f (f of dim <= n).
void ascend_to_dim(const CellComplex& complex, const Face& f, int n,
                   std::vector<int>& out) {
    if (f.dim == n) {
        out.push_back(f.id);
        return;
    }
    for (int id : complex.coboundary(f))
        ascend_to_dim(complex, Face{f.dim + 1, id}, n, out);
}

} // namespace

std::vector<Face> LowerFaceAdjacency::sites(const Face& t) const {
    std::vector<Face> closure;
    closure_of(*complex_, t, closure);
    std::vector<int> ids;
    for (const Face& f : closure)
        if (f.dim < t.dim)
            ascend_to_dim(*complex_, f, t.dim, ids);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<Face> out;
    out.reserve(ids.size());
    for (int id : ids)
        if (id != t.id)
            out.push_back(Face{t.dim, id});
    return out;
}

bool is_free_pair(const Face& f, const Face& g, const ComplexImage& img) {
    const CellComplex& complex = img.complex();
    if (!complex.valid(f) || !complex.valid(g))
        return false;
    if (f.dim + 1 != g.dim)
        return false;
    if (!img.value(f) || !img.value(g))
        return false;
    if (!complex.boundary_contains(g, f.id))
        return false;
    for (int id : complex.coboundary(f))
        if (id != g.id && img.value(Face{g.dim, id}))
            return false;
    return true;
}

void elementary_collapse(const Face& f, const Face& g, ComplexImage& img) {
    if (!is_free_pair(f, g, img))
        throw std::logic_error("elementary_collapse: pair is not free");
    img.set_value(f, false);
    img.set_value(g, false);
}

std::int64_t euler_characteristic(const ComplexImage& img) {
    std::int64_t chi = 0;
    for (int d = 0; d <= img.complex().max_dim(); ++d) {
        std::int64_t n = img.true_count(d);
        chi += (d % 2 == 0) ? n : -n;
    }
    return chi;
}

std::int64_t euler_characteristic(const CellComplex& complex) {
    std::int64_t chi = 0;
    for (int d = 0; d <= complex.max_dim(); ++d) {
        std::int64_t n = complex.face_count(d);
        chi += (d % 2 == 0) ? n : -n;
    }
    return chi;
}

SurfaceComplex build_simplicial_from_off(const OffMesh& mesh) {
    const int vertex_count = static_cast<int>(mesh.vertices.size());
    SurfaceComplex surface;
    auto complex = std::make_shared<CellComplex>(2);

    for (int v = 0; v < vertex_count; ++v)
        complex->add_face(0);

    std::map<std::array<int, 2>, int> edge_ids;
    std::set<std::array<int, 3>> seen_triangles;

    auto edge_of = [&](int a, int b) {
        std::array<int, 2> key{std::min(a, b), std::max(a, b)};
        auto it = edge_ids.find(key);
        if (it != edge_ids.end())
            return it->second;
        Face e = complex->add_face(1);
        complex->link(Face{0, key[0]}, e);
        complex->link(Face{0, key[1]}, e);
        edge_ids.emplace(key, e.id);
        surface.edge_vertices.push_back(key);
        return e.id;
    };

    for (std::size_t i = 0; i < mesh.triangles.size(); ++i) {
        const auto& tri = mesh.triangles[i];
        for (int v : tri)
            if (v < 0 || v >= vertex_count)
                throw std::invalid_argument(
                    "build_simplicial_from_off: vertex index out of range in "
                    "triangle " +
                    std::to_string(i));
        std::array<int, 3> key = tri;
        std::sort(key.begin(), key.end());
        if (key[0] == key[1] || key[1] == key[2])
            throw std::invalid_argument(
                "build_simplicial_from_off: degenerate triangle " +
                std::to_string(i));
        if (!seen_triangles.insert(key).second)
            throw std::invalid_argument(
                "build_simplicial_from_off: duplicate triangle " +
                std::to_string(i));
        Face t = complex->add_face(2);
        complex->link(Face{1, edge_of(key[0], key[1])}, t);
        complex->link(Face{1, edge_of(key[0], key[2])}, t);
        complex->link(Face{1, edge_of(key[1], key[2])}, t);
        surface.triangle_vertices.push_back(tri);
    }

    complex->finish();
    surface.cells = std::move(complex);
    surface.vertex_positions = mesh.vertices;
    return surface;
}

ComplexImage make_surface_image(const SurfaceComplex& surface) {
    return ComplexImage(surface.cells, 2, true);
}

template <int D>
CellComplex build_cubical_from_binary(const BinaryGridImage<D>& img) {
    using Key = std::array<int, D>;

    // A face is a point with per-axis extent: coordinate 2k+1 spans cell k,
    // coordinate 2k is the flat wall between cells k-1 and k. The dimension
    // is the number of odd coordinates.
    std::set<Key> keys;
    for (const Point<D>& p : img.domain_sites()) {
        if (!img.at(p))
            continue;
        Key center;
        for (int i = 0; i < D; ++i)
            center[static_cast<std::size_t>(i)] = 2 * p[i] + 1;
        Key k = center;
        // enumerate center + all offsets in {-1,0,1}^D
        int delta[D];
        for (int i = 0; i < D; ++i)
            delta[i] = -1;
        for (;;) {
            for (int i = 0; i < D; ++i)
                k[static_cast<std::size_t>(i)] =
                    center[static_cast<std::size_t>(i)] + delta[i];
            keys.insert(k);
            int axis = D - 1;
            while (axis >= 0 && delta[axis] == 1)
                delta[axis--] = -1;
            if (axis < 0)
                break;
            ++delta[axis];
        }
    }

    CellComplex complex(D);
    std::map<Key, Face> faces;
    for (const Key& k : keys) {
        int dim = 0;
        for (int c : k)
            dim += (c % 2 != 0) ? 1 : 0;
        faces.emplace(k, complex.add_face(dim));
    }
    for (const auto& [k, f] : faces) {
        for (int axis = 0; axis < D; ++axis) {
            if (k[static_cast<std::size_t>(axis)] % 2 == 0)
                continue;
            for (int side : {-1, 1}) {
                Key b = k;
                b[static_cast<std::size_t>(axis)] += side;
                complex.link(faces.at(b), f);
            }
        }
    }
    complex.finish();
    return complex;
}

template CellComplex build_cubical_from_binary<2>(const BinaryGridImage<2>&);
template CellComplex build_cubical_from_binary<3>(const BinaryGridImage<3>&);

} // namespace dtk

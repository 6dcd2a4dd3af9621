#include "dtk/oracle.hpp"

#include <numeric>
#include <stdexcept>

#include "dtk/complex.hpp"

namespace dtk {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(
                    parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

template <int D, int N>
Labeling<D> label_with(const BinaryGridImage<D>& img,
                       const GridNeighborhood<D, N>& nbh) {
    Labeling<D> result;
    result.domain = img.domain();
    result.labels.assign(static_cast<std::size_t>(img.domain().site_count()),
                         -1);
    UnionFind uf(result.labels.size());
    for (const Point<D>& p : img.domain_sites()) {
        if (!img.at(p))
            continue;
        for (const Point<D>& q : nbh.sites(p))
            if (img.clamped_at(q))
                uf.unite(static_cast<int>(img.domain().index_of(p)),
                         static_cast<int>(img.domain().index_of(q)));
    }
    int next = 0;
    std::vector<int> root_label(result.labels.size(), -1);
    for (const Point<D>& p : img.domain_sites()) {
        if (!img.at(p))
            continue;
        int root = uf.find(static_cast<int>(img.domain().index_of(p)));
        if (root_label[static_cast<std::size_t>(root)] < 0)
            root_label[static_cast<std::size_t>(root)] = next++;
        result.labels[static_cast<std::size_t>(img.domain().index_of(p))] =
            root_label[static_cast<std::size_t>(root)];
    }
    result.count = next;
    return result;
}

template <int D>
BinaryGridImage<D> padded_complement(const BinaryGridImage<D>& img) {
    Box<D> box = img.domain();
    for (int i = 0; i < D; ++i) {
        --box.lo[i];
        ++box.hi[i];
    }
    BinaryGridImage<D> out(box, true);
    for (const Point<D>& p : img.domain_sites())
        if (img.at(p))
            out.set(p, false);
    return out;
}

} // namespace

Labeling<2> label_components(const BinaryImage2& img, int conn) {
    switch (conn) {
    case 4:
        return label_with(img, c4());
    case 8:
        return label_with(img, c8());
    default:
        throw std::invalid_argument("label_components: 2D conn must be 4 or 8");
    }
}

Labeling<3> label_components(const BinaryImage3& img, int conn) {
    switch (conn) {
    case 6:
        return label_with(img, c6());
    case 18:
        return label_with(img, c18());
    case 26:
        return label_with(img, c26());
    default:
        throw std::invalid_argument(
            "label_components: 3D conn must be 6, 18 or 26");
    }
}

int background_component_count(const BinaryImage2& img, int conn) {
    return label_components(padded_complement(img), conn).count;
}

int background_component_count(const BinaryImage3& img, int conn) {
    return label_components(padded_complement(img), conn).count;
}

TopologyCounts2 topology_counts_2d(const BinaryImage2& img) {
    return {label_components(img, 4).count, background_component_count(img, 8)};
}

TopologyCounts3 topology_counts_3d(const BinaryImage3& img) {
    return {label_components(img, 26).count, background_component_count(img, 6),
            euler_characteristic(build_cubical_from_binary(img))};
}

bool oracle_is_simple_2d(const BinaryImage2& img, const Point2& p) {
    if (!img.at(p))
        return false;
    BinaryImage2 deleted = img;
    deleted.set(p, false);
    return topology_counts_2d(img) == topology_counts_2d(deleted);
}

bool oracle_is_simple_3d(const BinaryImage3& img, const Point3& p) {
    if (!img.at(p))
        return false;
    BinaryImage3 deleted = img;
    deleted.set(p, false);
    return topology_counts_3d(img) == topology_counts_3d(deleted);
}

} // namespace dtk

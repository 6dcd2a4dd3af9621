#ifndef DTK_ORACLE_HPP
#define DTK_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "dtk/core.hpp"

// Brute-force global topology checks, used by the test suite as ground
// truth for the local simplicity predicates. Everything here is written
// for clarity at desk scale, not for speed.

namespace dtk {

template <int D>
struct Labeling {
    Box<D> domain;
    std::vector<int> labels; // box-indexed; -1 = background
    int count = 0;
};

// Connected components of the foreground under conn-adjacency
// (2D: 4 or 8; 3D: 6, 18 or 26). Labels are dense, assigned in domain
// iteration order of each component's first site.
Labeling<2> label_components(const BinaryImage2& img, int conn);
Labeling<3> label_components(const BinaryImage3& img, int conn);

// Components of the complement, computed on the image padded with one
// background ring so the unbounded outside counts as a single component.
int background_component_count(const BinaryImage2& img, int conn);
int background_component_count(const BinaryImage3& img, int conn);

struct TopologyCounts2 {
    int fg4;
    int bg8;
    friend bool operator==(const TopologyCounts2&,
                           const TopologyCounts2&) = default;
};

struct TopologyCounts3 {
    int fg26;
    int bg6;
    std::int64_t chi; // Euler characteristic of the foreground's cubical complex
    friend bool operator==(const TopologyCounts3&,
                           const TopologyCounts3&) = default;
};

TopologyCounts2 topology_counts_2d(const BinaryImage2& img);
TopologyCounts3 topology_counts_3d(const BinaryImage3& img);

// Ground truth by deletion: remove p, recount, compare.
// 2D: foreground 4-components and background 8-components both preserved.
bool oracle_is_simple_2d(const BinaryImage2& img, const Point2& p);
// 3D: foreground 26-components, background 6-components and the cubical
// Euler characteristic all preserved. Necessary for simplicity; a point
// passing all three is almost always simple, but the triple can miss
// compensating changes, so it is used as a one-sided check.
bool oracle_is_simple_3d(const BinaryImage3& img, const Point3& p);

} // namespace dtk

#endif

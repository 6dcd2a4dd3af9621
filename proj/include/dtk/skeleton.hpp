#ifndef DTK_SKELETON_HPP
#define DTK_SKELETON_HPP

#include <utility>
#include <vector>

#include "dtk/complex.hpp"
#include "dtk/thinning.hpp"

// Collapse-based simplicity on complex images, and the three mesh thinning
// drivers built from it: the thick skeleton (whole-cell detachment) and the
// ultimate n-collapse (free-pair removal), which is chained 2 then 1 to
// reduce a surface to curves and a contractible piece to a single vertex.

namespace dtk {

// A primary-dimension cell t is simple when its private closure — t plus
// the faces of its closure whose every chain of true cofaces stays inside
// that closure — can be emptied by elementary collapses. Removing exactly
// that set detaches t while preserving the homotopy type. A cell whose
// private closure cannot fully collapse (an isolated triangle, say, which
// always strands one vertex) is not simple; detaching it would delete or
// split a component.
bool is_simple_cell(const ComplexImage& img, const Face& t);

// Applies the collapse sequence found by is_simple_cell. Throws
// std::logic_error when t is not simple.
void detach_cell(ComplexImage& img, const Face& t);

// True when some boundary face of t forms a free pair with t.
bool is_cell_in_simple_pair(const ComplexImage& img, const Face& t);

// Collapses (f, t) where f is the lowest-id free boundary face of t.
// Throws std::logic_error when no such pair exists.
void detach_cell_in_simple_pair(ComplexImage& img, const Face& t);

// Canvas functors wrapping the predicates above.
struct cell_simplicity {
    bool operator()(const ComplexImage& img, const Face& t) const {
        return is_simple_cell(img, t);
    }
};
struct cell_detach {
    void operator()(ComplexImage& img, const Face& t) const {
        detach_cell(img, t);
    }
};
struct cell_pair_simplicity {
    bool operator()(const ComplexImage& img, const Face& t) const {
        return is_cell_in_simple_pair(img, t);
    }
};
struct cell_pair_detach {
    void operator()(ComplexImage& img, const Face& t) const {
        detach_cell_in_simple_pair(img, t);
    }
};

// Breadth-first thinning with whole-cell detachment at the primary
// dimension. The neighborhood is closure-deep (cells sharing a face of any
// lower dimension): detaching a cell can change the verdict of a cell that
// shares only a vertex with it, so the edge-sharing adjacency would leave
// such cells simple but never re-examined.
template <typename Constraint = no_constraint>
ComplexImage thick_skeleton(const ComplexImage& input,
                            Constraint constraint = Constraint{}) {
    LowerFaceAdjacency nbh(input.complex());
    return breadth_first_thinning(input, nbh, cell_simplicity{}, cell_detach{},
                                  std::move(constraint));
}

// Breadth-first removal of free ((n-1), n) pairs at n = primary dimension.
// Influence here travels only through shared (n-1)-faces, so the
// edge-sharing adjacency suffices.
template <typename Constraint = no_constraint>
ComplexImage ultimate_n_collapse(const ComplexImage& input,
                                 Constraint constraint = Constraint{}) {
    SharedFaceAdjacency nbh(input.complex());
    return breadth_first_thinning(input, nbh, cell_pair_simplicity{},
                                  cell_pair_detach{}, std::move(constraint));
}

// True when every true face of dimension < n lies in the closure of some
// true n-face, n = primary dimension (no dangling lower faces).
bool is_covered_by_principal_faces(const ComplexImage& img);

} // namespace dtk

#endif

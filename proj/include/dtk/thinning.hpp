#ifndef DTK_THINNING_HPP
#define DTK_THINNING_HPP

#include <deque>
#include <utility>

// Generic breadth-first thinning canvas.
//
// The canvas is written once, against the informal image concept described
// in core.hpp, and instantiated for 2D/3D binary grids, cell complexes and
// gray-level images. All domain knowledge lives in the three functors:
//
//   is_simple(img, s)   may s be removed without changing topology?
//   detach(img, s)      remove s (binary: set to background; complexes and
//                       gray-level images may do something more elaborate)
//   constraint(img, s)  extra predicate ANDed with is_simple; sites failing
//                       it are never detached (e.g. end-point preservation)
//
// Sites are processed in breadth-first order from a queue seeded with every
// simple foreground site of the input, so erosion advances one "layer" at a
// time from the border inward. Each dequeued site is re-tested before being
// detached (its neighborhood may have changed since it was enqueued). After
// a detach, the foreground neighbors of the site are (re-)enqueued, and so
// is the site itself if it is still foreground — a detach that only lowers
// a value can leave the site eligible again at its new level. For binary
// images a detached site is background, so that last rule never fires and
// the classic breadth-first behavior is unchanged.

namespace dtk {

// Constraint accepting every site.
struct no_constraint {
    template <typename I, typename S>
    bool operator()(const I&, const S&) const {
        return true;
    }
};

// Constraint rejecting the sites of a fixed set (e.g. anchor points that
// must survive thinning). The set must expose contains(s)/foreground(s)
// or operator() — we take any callable or image-like object.
template <typename Set>
struct not_in_set {
    const Set* set;
    template <typename I, typename S>
    bool operator()(const I&, const S& s) const {
        return !set->foreground(s);
    }
};

template <typename Set>
not_in_set<Set> make_not_in_set(const Set& set) {
    return not_in_set<Set>{&set};
}

// Breadth-first thinning. Returns the thinned copy of the input; the input
// itself is not modified. On return no foreground site satisfies
// is_simple ∧ constraint, so the result is stable under re-application.
template <typename Image, typename Neighborhood, typename IsSimple,
          typename Detach, typename Constraint = no_constraint>
Image breadth_first_thinning(const Image& input, const Neighborhood& nbh,
                             IsSimple is_simple, Detach detach,
                             Constraint constraint = Constraint{}) {
    Image out = input;
    using site_t = typename Image::site_type;

    typename Image::flag_map in_queue(out);
    std::deque<site_t> fifo;

    for (const site_t& p : out.domain_sites()) {
        if (out.foreground(p) && constraint(out, p) && is_simple(out, p)) {
            fifo.push_back(p);
            in_queue.set(p, true);
        }
    }

    while (!fifo.empty()) {
        site_t p = fifo.front();
        fifo.pop_front();
        in_queue.set(p, false);
        if (!(out.foreground(p) && constraint(out, p) && is_simple(out, p)))
            continue;
        detach(out, p);
        for (const site_t& n : nbh.sites(p)) {
            if (out.contains(n) && out.foreground(n) && !in_queue.test(n)) {
                fifo.push_back(n);
                in_queue.set(n, true);
            }
        }
        if (out.foreground(p) && !in_queue.test(p)) {
            fifo.push_back(p);
            in_queue.set(p, true);
        }
    }
    return out;
}

} // namespace dtk

#endif

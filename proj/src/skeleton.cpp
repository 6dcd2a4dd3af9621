#include "dtk/skeleton.hpp"

#include <algorithm>
#include <stdexcept>

namespace dtk {

namespace {

// Private closure of t: t plus every face of closure(t) that is true and
// whose true cofaces all lie in the private closure themselves (computed
// top-down by dimension, so cofaces are settled before their boundaries).
// Faces come back sorted by descending dimension, ascending id.
// Returns empty when t itself does not qualify (false, or under a true
// coface): such a cell is never detachable.
std::vector<Face> private_closure(const ComplexImage& img, const Face& t) {
    const CellComplex& complex = img.complex();
    if (!complex.valid(t) || !img.value(t))
        return {};
    for (int id : complex.coboundary(t))
        if (img.value(Face{t.dim + 1, id}))
            return {};

    std::vector<Face> closure;
    closure.push_back(t);
    for (std::size_t i = 0; i < closure.size(); ++i) {
        Face f = closure[i];
        if (f.dim == 0)
            continue;
        for (int id : complex.boundary(f)) {
            Face b{f.dim - 1, id};
            if (std::find(closure.begin(), closure.end(), b) == closure.end())
                closure.push_back(b);
        }
    }
    std::sort(closure.begin(), closure.end(), [](const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim > b.dim : a.id < b.id;
    });

    std::vector<Face> members;
    members.push_back(t);
    auto is_member = [&members](const Face& f) {
        return std::find(members.begin(), members.end(), f) != members.end();
    };
    for (const Face& f : closure) {
        if (f == t || !img.value(f))
            continue;
        bool ok = true;
        for (int id : complex.coboundary(f)) {
            Face g{f.dim + 1, id};
            if (img.value(g) && !is_member(g)) {
                ok = false;
                break;
            }
        }
        if (ok)
            members.push_back(f);
    }
    std::sort(members.begin(), members.end(), [](const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim > b.dim : a.id < b.id;
    });
    return members;
}

// Greedily collapses the private closure of t. Every face of a member's
// true coboundary is itself a member, so coface counting never needs the
// image. A pair (f, g) is taken only when g has no surviving coface (g is
// maximal among what remains) and f's sole surviving coface is g. Returns
// whether the set emptied; on success, seq holds the collapse sequence.
bool collapse_private_closure(const ComplexImage& img, const Face& t,
                              std::vector<std::pair<Face, Face>>* seq) {
    std::vector<Face> members = private_closure(img, t);
    if (members.empty())
        return false;
    if (seq)
        seq->clear();

    const CellComplex& complex = img.complex();
    std::vector<bool> alive(members.size(), true);
    auto index_of = [&members](const Face& f) -> int {
        auto it = std::find(members.begin(), members.end(), f);
        return it == members.end() ? -1
                                   : static_cast<int>(it - members.begin());
    };
    auto alive_coface_count = [&](const Face& f) {
        int count = 0;
        for (int id : complex.coboundary(f)) {
            int j = index_of(Face{f.dim + 1, id});
            if (j >= 0 && alive[static_cast<std::size_t>(j)])
                ++count;
        }
        return count;
    };

    std::size_t remaining = members.size();
    while (remaining > 0) {
        bool found = false;
        for (std::size_t gi = 0; gi < members.size() && !found; ++gi) {
            if (!alive[gi] || members[gi].dim == 0)
                continue;
            const Face& g = members[gi];
            if (alive_coface_count(g) != 0)
                continue;
            for (int id : complex.boundary(g)) {
                int fi = index_of(Face{g.dim - 1, id});
                if (fi < 0 || !alive[static_cast<std::size_t>(fi)])
                    continue;
                if (alive_coface_count(members[static_cast<std::size_t>(fi)]) ==
                    1) {
                    alive[gi] = false;
                    alive[static_cast<std::size_t>(fi)] = false;
                    remaining -= 2;
                    if (seq)
                        seq->emplace_back(members[static_cast<std::size_t>(fi)],
                                          g);
                    found = true;
                    break;
                }
            }
        }
        if (!found)
            return false;
    }
    return true;
}

} // namespace

bool is_simple_cell(const ComplexImage& img, const Face& t) {
    if (t.dim != img.primary_dim() || !img.foreground(t))
        return false;
    return collapse_private_closure(img, t, nullptr);
}

void detach_cell(ComplexImage& img, const Face& t) {
    std::vector<std::pair<Face, Face>> seq;
    if (t.dim != img.primary_dim() || !img.foreground(t) ||
        !collapse_private_closure(img, t, &seq))
        throw std::logic_error("detach_cell: cell is not simple");
    for (const auto& [f, g] : seq)
        elementary_collapse(f, g, img);
}

bool is_cell_in_simple_pair(const ComplexImage& img, const Face& t) {
    if (t.dim != img.primary_dim() || !img.foreground(t) || t.dim == 0)
        return false;
    for (int id : img.complex().boundary(t))
        if (is_free_pair(Face{t.dim - 1, id}, t, img))
            return true;
    return false;
}

void detach_cell_in_simple_pair(ComplexImage& img, const Face& t) {
    if (t.dim == img.primary_dim() && img.foreground(t) && t.dim > 0) {
        for (int id : img.complex().boundary(t)) {
            Face f{t.dim - 1, id};
            if (is_free_pair(f, t, img)) {
                elementary_collapse(f, t, img);
                return;
            }
        }
    }
    throw std::logic_error(
        "detach_cell_in_simple_pair: no free boundary face");
}

bool is_covered_by_principal_faces(const ComplexImage& img) {
    const CellComplex& complex = img.complex();
    int n = img.primary_dim();
    // mark the closure of every true n-face
    ComplexImage covered(img.complex_ptr(), n, false);
    for (int id = 0; id < complex.face_count(n); ++id) {
        Face t{n, id};
        if (!img.value(t))
            continue;
        std::vector<Face> stack{t};
        while (!stack.empty()) {
            Face f = stack.back();
            stack.pop_back();
            covered.set_value(f, true);
            if (f.dim > 0)
                for (int b : complex.boundary(f))
                    stack.push_back(Face{f.dim - 1, b});
        }
    }
    for (int d = 0; d < n; ++d)
        for (int id = 0; id < complex.face_count(d); ++id)
            if (img.value(Face{d, id}) && !covered.value(Face{d, id}))
                return false;
    return true;
}

} // namespace dtk

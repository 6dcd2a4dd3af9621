#include "dtk/simple3d.hpp"

#include <bit>
#include <cstdlib>

namespace dtk {

namespace {

constexpr std::uint32_t kMask26 = (1u << 26) - 1;

int l1_norm(const Point3& p) {
    return std::abs(p[0]) + std::abs(p[1]) + std::abs(p[2]);
}

int linf_norm(const Point3& p) {
    int m = 0;
    for (int i = 0; i < 3; ++i)
        m = std::max(m, std::abs(p[i]));
    return m;
}

// Per-bit adjacency masks over the 26 offsets, plus the bit sets of the
// 18-neighborhood and of the 6 face neighbors.
struct Tables {
    std::uint32_t adj26[26] = {};
    std::uint32_t adj6[26] = {};
    std::uint32_t n18 = 0;
    std::uint32_t n6 = 0;

    Tables() {
        const auto& off = c26().offsets;
        for (int i = 0; i < 26; ++i) {
            if (l1_norm(off[i]) <= 2)
                n18 |= 1u << i;
            if (l1_norm(off[i]) == 1)
                n6 |= 1u << i;
            for (int j = 0; j < 26; ++j) {
                if (i == j)
                    continue;
                Point3 d = off[i] - off[j];
                if (linf_norm(d) == 1)
                    adj26[i] |= 1u << j;
                if (l1_norm(d) == 1)
                    adj6[i] |= 1u << j;
            }
        }
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

// Number of components of `cells` under the given per-bit adjacency masks,
// counting only components that intersect `touch`.
int touching_components(std::uint32_t cells, const std::uint32_t* adj,
                        std::uint32_t touch) {
    int count = 0;
    std::uint32_t rest = cells;
    while (rest != 0) {
        std::uint32_t comp = rest & (~rest + 1); // lowest remaining bit
        std::uint32_t frontier = comp;
        while (frontier != 0) {
            std::uint32_t grow = 0;
            std::uint32_t f = frontier;
            while (f != 0) {
                int i = std::countr_zero(f);
                f &= f - 1;
                grow |= adj[i];
            }
            frontier = grow & cells & ~comp;
            comp |= frontier;
        }
        if ((comp & touch) != 0)
            ++count;
        rest &= ~comp;
    }
    return count;
}

} // namespace

ConnectivityNumbers3 connectivity_numbers_3d(std::uint32_t mask) {
    mask &= kMask26;
    const Tables& t = tables();
    int t26 = touching_components(mask, t.adj26, kMask26);
    int t6 = touching_components(~mask & t.n18, t.adj6, t.n6);
    return {t26, t6};
}

std::uint32_t config26_at(const BinaryImage3& img, const Point3& p) {
    const auto& offsets = c26().offsets;
    std::uint32_t mask = 0;
    for (int i = 0; i < 26; ++i)
        if (img.clamped_at(p + offsets[i]))
            mask |= 1u << i;
    return mask;
}

SimpleLut3D::SimpleLut3D()
    : value_((kMask26 + 1ull) / 64, 0), present_((kMask26 + 1ull) / 64, 0) {}

SimpleLut3D SimpleLut3D::build_eager() {
    SimpleLut3D lut;
    for (std::uint64_t m = 0; m <= kMask26; ++m) {
        if (is_simple_point3d::simple_config(std::uint32_t(m)))
            lut.value_[m >> 6] |= 1ull << (m & 63);
    }
    for (auto& word : lut.present_)
        word = ~0ull;
    return lut;
}

bool SimpleLut3D::lookup(std::uint32_t mask) {
    mask &= kMask26;
    std::uint64_t bit = 1ull << (mask & 63);
    std::size_t word = mask >> 6;
    if (!(present_[word] & bit)) {
        present_[word] |= bit;
        if (is_simple_point3d::simple_config(mask))
            value_[word] |= bit;
    }
    return (value_[word] & bit) != 0;
}

bool SimpleLut3D::known(std::uint32_t mask) const {
    mask &= kMask26;
    return (present_[mask >> 6] >> (mask & 63)) & 1u;
}

} // namespace dtk

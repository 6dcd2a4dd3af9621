#include "dtk/graylevel.hpp"

#include <stdexcept>

#include "dtk/thinning.hpp"

namespace dtk {

namespace {

const SimpleLut2D& lut48() {
    static const SimpleLut2D lut = build_simple_lut_2d(4);
    return lut;
}

} // namespace

BinaryImage2 cross_section(const GrayGridImage2& img, int level) {
    BinaryImage2 out(img.domain());
    for (const Point2& p : img.domain_sites())
        out.set(p, img.at(p) >= level);
    return out;
}

bool is_destructible(const GrayGridImage2& img, const Point2& p) {
    if (!img.contains(p))
        return false;
    const int v = img.at(p);
    if (v == 0)
        return false;
    const auto& off8 = c8().offsets;
    std::uint8_t mask = 0;
    for (int i = 0; i < 8; ++i)
        if (img.clamped_at(p + off8[i]) >= v)
            mask |= std::uint8_t(1u << i);
    if (!lut48().simple(mask))
        return false;
    for (const Point2& q : c4().sites(p))
        if (img.contains(q) && img.at(q) < v)
            return true;
    return false;
}

void lower(GrayGridImage2& img, const Point2& p) {
    const int v = img.at(p);
    int best = -1;
    for (const Point2& q : c8().sites(p)) {
        if (!img.contains(q))
            continue;
        int w = img.at(q);
        if (w < v && w > best)
            best = w;
    }
    if (best < 0)
        throw std::logic_error("lower: no neighbor strictly below");
    img.set(p, static_cast<std::uint8_t>(best));
}

GrayGridImage2 gray_thinning(const GrayGridImage2& input) {
    return breadth_first_thinning(input, c8(), destructibility{},
                                  lower_point{});
}

} // namespace dtk

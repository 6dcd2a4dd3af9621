#ifndef DTK_GRAYLEVEL_HPP
#define DTK_GRAYLEVEL_HPP

#include <cstdint>
#include <vector>

#include "dtk/core.hpp"
#include "dtk/simple2d.hpp"

// Gray-level thinning. A gray image is the stack of its cross-sections
// (threshold sets {p : F(p) >= t}); lowering a destructible point changes
// no cross-section's component structure, so running the thinning canvas
// with is_destructible / lower_point skeletonizes every level at once.

namespace dtk {

// 2D gray image, one byte per site, clamped reads return 0.
class GrayGridImage2 {
public:
    using site_type = Point2;

    GrayGridImage2() : box_{}, values_(1, 0) {}
    explicit GrayGridImage2(const Box2& b, std::uint8_t init = 0)
        : box_(b), values_(static_cast<std::size_t>(b.site_count()), init) {}

    const Box2& domain() const { return box_; }

    std::uint8_t at(const Point2& p) const {
        return values_[static_cast<std::size_t>(box_.index_of(p))];
    }
    void set(const Point2& p, std::uint8_t v) {
        values_[static_cast<std::size_t>(box_.index_of(p))] = v;
    }
    std::uint8_t clamped_at(const Point2& p) const {
        return box_.contains(p) ? at(p) : 0;
    }

    friend bool operator==(const GrayGridImage2&,
                           const GrayGridImage2&) = default;

    // thinnable-image interface: the working set is the nonzero support
    BoxRange<2> domain_sites() const { return box_range(box_); }
    bool contains(const Point2& p) const { return box_.contains(p); }
    bool foreground(const Point2& p) const { return at(p) > 0; }

    class flag_map {
    public:
        explicit flag_map(const GrayGridImage2& img)
            : box_(img.domain()),
              bits_(static_cast<std::size_t>(box_.site_count()), 0) {}
        bool test(const Point2& p) const {
            return bits_[static_cast<std::size_t>(box_.index_of(p))] != 0;
        }
        void set(const Point2& p, bool v) {
            bits_[static_cast<std::size_t>(box_.index_of(p))] = v ? 1 : 0;
        }

    private:
        Box2 box_;
        std::vector<std::uint8_t> bits_;
    };

private:
    Box2 box_;
    std::vector<std::uint8_t> values_;
};

// Threshold set at level t: output(p) = (F(p) >= t).
BinaryImage2 cross_section(const GrayGridImage2& img, int level);

// p can be lowered without changing any cross-section's topology:
//   F(p) > 0, and
//   p is a simple point of the level-F(p) cross-section (neighbors encode
//   as foreground when F(q) >= F(p), outside the domain as background), and
//   some in-domain 4-neighbor is strictly below F(p) (lowering has a target;
//   this also rejects every site of a constant image).
bool is_destructible(const GrayGridImage2& img, const Point2& p);

// F(p) := the largest in-domain 8-neighbor value strictly below F(p).
// Throws std::logic_error when no neighbor is strictly below.
void lower(GrayGridImage2& img, const Point2& p);

// Canvas functors.
class destructibility {
public:
    bool operator()(const GrayGridImage2& img, const Point2& p) const {
        return is_destructible(img, p);
    }
};
struct lower_point {
    void operator()(GrayGridImage2& img, const Point2& p) const {
        lower(img, p);
    }
};

// Breadth-first gray-level thinning: lowers destructible points until none
// remains. Never raises a value; every cross-section of the result has the
// same foreground 4-component and background 8-component structure as the
// input's.
GrayGridImage2 gray_thinning(const GrayGridImage2& input);

} // namespace dtk

#endif

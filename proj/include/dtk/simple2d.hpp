#ifndef DTK_SIMPLE2D_HPP
#define DTK_SIMPLE2D_HPP

#include <array>
#include <cstdint>

#include "dtk/core.hpp"

// 2D simple-point machinery for the dual connectivity pairs (4,8) and (8,4).
//
// A foreground pixel is simple when deleting it changes neither the
// foreground nor the background component structure. That global property
// has an exact local characterization through connectivity numbers computed
// in the punctured 8-neighborhood, which is exhaustively tabulated here in
// a 256-entry LUT (32 bytes packed).
//
// Config8 bit order: bit i corresponds to the i-th c8() offset, i.e. the
// lexicographic order (-1,-1),(-1,0),(-1,1),(0,-1),(0,1),(1,-1),(1,0),(1,1).
// This order is a frozen contract: the packed LUT bytes exposed by
// SimpleLut2D::bytes() (and the CLI dump) depend on it.

namespace dtk {

struct ConnectivityNumbers {
    int fg;
    int bg;
    friend bool operator==(const ConnectivityNumbers&,
                           const ConnectivityNumbers&) = default;
};

// Connectivity numbers of an 8-neighborhood configuration.
//   fg = number of fg_conn-components of the foreground bits that are
//        fg_conn-adjacent to the center pixel;
//   bg = number of bg_conn-components of the background bits that are
//        bg_conn-adjacent to the center, with bg_conn dual to fg_conn.
// The pixel is simple exactly when both numbers are 1.
// fg_conn must be 4 or 8.
ConnectivityNumbers connectivity_numbers_2d(std::uint8_t mask, int fg_conn);

// Encodes the 8 neighbors of p (clamped reads: outside = background).
std::uint8_t config8_at(const BinaryImage2& img, const Point2& p);

class SimpleLut2D {
public:
    bool simple(std::uint8_t mask) const {
        return (bytes_[mask >> 3] >> (mask & 7u)) & 1u;
    }
    int fg_conn() const { return fg_conn_; }
    int bg_conn() const { return 12 - fg_conn_; }

    // Packed dump: bit k of byte j holds the verdict for mask 8j+k.
    const std::array<std::uint8_t, 32>& bytes() const { return bytes_; }

private:
    friend SimpleLut2D build_simple_lut_2d(int fg_conn);
    std::array<std::uint8_t, 32> bytes_{};
    int fg_conn_ = 4;
};

SimpleLut2D build_simple_lut_2d(int fg_conn);

// Simplicity predicate for the thinning canvas. Holds its LUT by value;
// cheap to copy. Queries at background or out-of-domain sites answer false.
class is_simple_point2d {
public:
    explicit is_simple_point2d(int fg_conn = 4)
        : lut_(build_simple_lut_2d(fg_conn)) {}

    bool operator()(const BinaryImage2& img, const Point2& p) const {
        if (!img.contains(p) || !img.at(p))
            return false;
        return lut_.simple(config8_at(img, p));
    }

    const SimpleLut2D& lut() const { return lut_; }

private:
    SimpleLut2D lut_;
};

// Removes a site from a binary image: the detach routine of binary thinning.
struct detach_point {
    template <typename Image>
    void operator()(Image& img, const typename Image::site_type& p) const {
        img.set(p, false);
    }
};

// Constraint protecting the end points of a fixed reference image: answers
// false exactly when p has one foreground neighbor in `ref` under `nbh`.
// A site with zero foreground neighbors is isolated, not an end point.
// The reference image is typically the thinning input, so end points of the
// original shape survive even after their surroundings erode.
template <typename Nbh, typename Ref>
class is_not_end_point {
public:
    is_not_end_point(const Nbh& nbh, const Ref& ref) : nbh_(&nbh), ref_(&ref) {}

    template <typename Image>
    bool operator()(const Image&, const typename Ref::site_type& p) const {
        int count = 0;
        for (const auto& q : nbh_->sites(p))
            if (ref_->clamped_at(q))
                ++count;
        return count != 1;
    }

private:
    const Nbh* nbh_;
    const Ref* ref_;
};

} // namespace dtk

#endif

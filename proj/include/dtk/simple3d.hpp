#ifndef DTK_SIMPLE3D_HPP
#define DTK_SIMPLE3D_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "dtk/core.hpp"

// 3D simple-voxel machinery for the dual connectivity pair (26,6).
//
// A voxel configuration is the 26-bit mask of its punctured 26-neighborhood,
// bit i = i-th c26() offset in lexicographic order. The voxel is simple when
//   t26 = 1 : its foreground neighbors form one 26-component, and
//   t6  = 1 : the background voxels of the 18-neighborhood form one
//             6-component touching a face neighbor of the center.
//
// 2^26 configurations are too many to tabulate eagerly by default, so the
// predicate computes connectivity numbers on the fly with fixed-size
// scratch (no allocation). An optional cache memoizes verdicts in a
// 2^26-bit value plane (8 MiB) plus a presence plane; it can also be built
// eagerly in one pass. All three paths are bit-identical.

namespace dtk {

struct ConnectivityNumbers3 {
    int fg; // 26-components of the foreground neighbors
    int bg; // 6-components of the 18-neighborhood background, center-adjacent
    friend bool operator==(const ConnectivityNumbers3&,
                           const ConnectivityNumbers3&) = default;
};

ConnectivityNumbers3 connectivity_numbers_3d(std::uint32_t mask);

// Encodes the 26 neighbors of p (clamped reads: outside = background).
std::uint32_t config26_at(const BinaryImage3& img, const Point3& p);

// Memoized verdict table: one value bit and one presence bit per mask.
class SimpleLut3D {
public:
    SimpleLut3D();

    // Fills every entry in one pass (several seconds of CPU).
    static SimpleLut3D build_eager();

    bool lookup(std::uint32_t mask);
    bool known(std::uint32_t mask) const;

private:
    std::vector<std::uint64_t> value_;
    std::vector<std::uint64_t> present_;
};

class is_simple_point3d {
public:
    explicit is_simple_point3d(bool use_lut = false)
        : lut_(use_lut ? std::make_shared<SimpleLut3D>() : nullptr) {}

    // Verdict for a raw configuration, bypassing any cache.
    static bool simple_config(std::uint32_t mask) {
        return connectivity_numbers_3d(mask) == ConnectivityNumbers3{1, 1};
    }

    bool operator()(const BinaryImage3& img, const Point3& p) const {
        if (!img.contains(p) || !img.at(p))
            return false;
        std::uint32_t mask = config26_at(img, p);
        return lut_ ? lut_->lookup(mask) : simple_config(mask);
    }

    bool uses_lut() const { return lut_ != nullptr; }

private:
    std::shared_ptr<SimpleLut3D> lut_; // copies of the functor share the cache
};

} // namespace dtk

#endif

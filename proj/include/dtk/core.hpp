#ifndef DTK_CORE_HPP
#define DTK_CORE_HPP

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

// Core grid concepts: points, boxes, neighborhoods and binary grid images.
//
// Every algorithm in this library is written against a small informal image
// concept. A thinnable image type I provides:
//   I::site_type                the site handle (a point, a face, ...)
//   domain_sites()              the fixed iteration domain, in a deterministic
//                               order that does not depend on values
//   contains(s)                 whether s belongs to the domain
//   foreground(s)               membership of s in the current set X
//   I::flag_map                 a boolean map over the domain, constructible
//                               from the image, with test(s)/set(s, b)
// Neighborhood types provide sites(s) returning the neighbors of s in a
// fixed order; s itself is never included and the relation is symmetric.

namespace dtk {

template <int D>
struct Point {
    std::array<int, D> c{};

    constexpr int operator[](int i) const { return c[i]; }
    constexpr int& operator[](int i) { return c[i]; }

    friend auto operator<=>(const Point&, const Point&) = default;

    friend Point operator+(Point a, const Point& b) {
        for (int i = 0; i < D; ++i)
            a.c[i] += b.c[i];
        return a;
    }
    friend Point operator-(Point a, const Point& b) {
        for (int i = 0; i < D; ++i)
            a.c[i] -= b.c[i];
        return a;
    }
};

using Point2 = Point<2>;
using Point3 = Point<3>;

// Axis-aligned box with inclusive bounds.
template <int D>
struct Box {
    Point<D> lo{};
    Point<D> hi{};

    bool contains(const Point<D>& p) const {
        for (int i = 0; i < D; ++i)
            if (p[i] < lo[i] || p[i] > hi[i])
                return false;
        return true;
    }

    int length(int axis) const { return hi[axis] - lo[axis] + 1; }

    std::int64_t site_count() const {
        std::int64_t n = 1;
        for (int i = 0; i < D; ++i)
            n *= length(i);
        return n;
    }

    // Row-major linear index, last axis fastest.
    std::int64_t index_of(const Point<D>& p) const {
        std::int64_t idx = 0;
        for (int i = 0; i < D; ++i)
            idx = idx * length(i) + (p[i] - lo[i]);
        return idx;
    }

    friend bool operator==(const Box&, const Box&) = default;
};

using Box2 = Box<2>;
using Box3 = Box<3>;

// Iterates the sites of a box in row-major order (last axis fastest).
template <int D>
class BoxRange {
public:
    explicit BoxRange(const Box<D>& b) : box_(b) {}

    class iterator {
    public:
        iterator() = default;
        iterator(const Box<D>* box, Point<D> p, bool done)
            : box_(box), p_(p), done_(done) {}

        const Point<D>& operator*() const { return p_; }

        iterator& operator++() {
            for (int i = D - 1; i >= 0; --i) {
                if (p_[i] < box_->hi[i]) {
                    ++p_[i];
                    return *this;
                }
                p_[i] = box_->lo[i];
            }
            done_ = true;
            return *this;
        }

        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.p_ == b.p_);
        }

    private:
        const Box<D>* box_ = nullptr;
        Point<D> p_{};
        bool done_ = true;
    };

    iterator begin() const { return iterator(&box_, box_.lo, false); }
    iterator end() const { return iterator(&box_, box_.lo, true); }

private:
    Box<D> box_;
};

template <int D>
BoxRange<D> box_range(const Box<D>& b) {
    return BoxRange<D>(b);
}

// Fixed-offset grid neighborhood. Offsets are lexicographically sorted and
// symmetric under negation; this order is a documented contract (the 2D LUT
// bit order and all tie-breaks depend on it).
template <int D, int N>
struct GridNeighborhood {
    std::array<Point<D>, N> offsets;

    static constexpr int size() { return N; }

    std::array<Point<D>, N> sites(const Point<D>& p) const {
        std::array<Point<D>, N> out;
        for (int i = 0; i < N; ++i)
            out[i] = p + offsets[i];
        return out;
    }
};

namespace detail {

template <int D, int N, typename Keep>
constexpr std::array<Point<D>, N> make_offsets(Keep keep) {
    std::array<Point<D>, N> out{};
    int k = 0;
    // lexicographic enumeration of {-1,0,1}^D minus the origin
    Point<D> d{};
    for (int i = 0; i < D; ++i)
        d[i] = -1;
    while (true) {
        bool zero = true;
        for (int i = 0; i < D; ++i)
            if (d[i] != 0)
                zero = false;
        if (!zero && keep(d))
            out[k++] = d;
        int i = D - 1;
        while (i >= 0 && d[i] == 1)
            d[i--] = -1;
        if (i < 0)
            break;
        ++d[i];
    }
    return out;
}

constexpr int l1(const Point<2>& p) { return (p[0] < 0 ? -p[0] : p[0]) + (p[1] < 0 ? -p[1] : p[1]); }
constexpr int l1(const Point<3>& p) {
    int s = 0;
    for (int i = 0; i < 3; ++i)
        s += p[i] < 0 ? -p[i] : p[i];
    return s;
}

} // namespace detail

inline const GridNeighborhood<2, 4>& c4() {
    static const GridNeighborhood<2, 4> n{
        detail::make_offsets<2, 4>([](const Point2& d) { return detail::l1(d) == 1; })};
    return n;
}

inline const GridNeighborhood<2, 8>& c8() {
    static const GridNeighborhood<2, 8> n{
        detail::make_offsets<2, 8>([](const Point2&) { return true; })};
    return n;
}

inline const GridNeighborhood<3, 6>& c6() {
    static const GridNeighborhood<3, 6> n{
        detail::make_offsets<3, 6>([](const Point3& d) { return detail::l1(d) == 1; })};
    return n;
}

inline const GridNeighborhood<3, 18>& c18() {
    static const GridNeighborhood<3, 18> n{
        detail::make_offsets<3, 18>([](const Point3& d) { return detail::l1(d) <= 2; })};
    return n;
}

inline const GridNeighborhood<3, 26>& c26() {
    static const GridNeighborhood<3, 26> n{
        detail::make_offsets<3, 26>([](const Point3&) { return true; })};
    return n;
}

// Boolean image on a box domain, one byte per site. Reads through
// clamped_at() extend the image with background outside the domain, so
// algorithms need no border special-casing.
template <int D>
class BinaryGridImage {
public:
    using site_type = Point<D>;

    BinaryGridImage() : box_{}, values_(box_.site_count(), 0) {}
    explicit BinaryGridImage(const Box<D>& b, bool init = false)
        : box_(b), values_(static_cast<std::size_t>(b.site_count()), init ? 1 : 0) {
        for (int i = 0; i < D; ++i)
            assert(b.lo[i] <= b.hi[i]);
    }

    const Box<D>& domain() const { return box_; }

    bool at(const Point<D>& p) const {
        assert(box_.contains(p));
        return values_[static_cast<std::size_t>(box_.index_of(p))] != 0;
    }

    void set(const Point<D>& p, bool v) {
        assert(box_.contains(p));
        values_[static_cast<std::size_t>(box_.index_of(p))] = v ? 1 : 0;
    }

    bool clamped_at(const Point<D>& p) const { return box_.contains(p) && at(p); }

    std::int64_t foreground_count() const {
        std::int64_t n = 0;
        for (auto v : values_)
            n += v;
        return n;
    }

    friend bool operator==(const BinaryGridImage&, const BinaryGridImage&) = default;

    // thinnable-image interface
    BoxRange<D> domain_sites() const { return box_range(box_); }
    bool contains(const Point<D>& p) const { return box_.contains(p); }
    bool foreground(const Point<D>& p) const { return at(p); }

    class flag_map {
    public:
        explicit flag_map(const BinaryGridImage& img)
            : box_(img.domain()), bits_(static_cast<std::size_t>(box_.site_count()), 0) {}
        bool test(const Point<D>& p) const {
            return bits_[static_cast<std::size_t>(box_.index_of(p))] != 0;
        }
        void set(const Point<D>& p, bool v) {
            bits_[static_cast<std::size_t>(box_.index_of(p))] = v ? 1 : 0;
        }

    private:
        Box<D> box_;
        std::vector<std::uint8_t> bits_;
    };

private:
    Box<D> box_;
    std::vector<std::uint8_t> values_;
};

using BinaryImage2 = BinaryGridImage<2>;
using BinaryImage3 = BinaryGridImage<3>;

} // namespace dtk

#endif

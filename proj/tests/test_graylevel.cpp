#include <dtk/core.hpp>
#include <dtk/graylevel.hpp>
#include <dtk/oracle.hpp>
#include <dtk/simple2d.hpp>
#include <dtk/thinning.hpp>

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "test_helpers.hpp"

using namespace dtk;
using dtk::testing::gray_from_rows;
using dtk::testing::image_from_rows;
using dtk::testing::random_gray_2d;

namespace {

BinaryImage2 thin2(const BinaryImage2& img) {
    return breadth_first_thinning(img, c4(), is_simple_point2d(4),
                                  detach_point{});
}

int max_value(const GrayGridImage2& img) {
    int m = 0;
    for (const Point2& p : img.domain_sites()) m = std::max(m, int(img.at(p)));
    return m;
}

BinaryImage2 support(const GrayGridImage2& img) {
    return cross_section(img, 1);
}

}  // namespace

TEST_CASE("cross sections are threshold sets") {
    auto img = gray_from_rows({
        "0123",
        "3210",
    });
    CHECK(cross_section(img, 1) == image_from_rows({".###", "###."}));
    CHECK(cross_section(img, 2) == image_from_rows({"..##", "##.."}));
    CHECK(cross_section(img, 3) == image_from_rows({"...#", "#..."}));
    CHECK(cross_section(img, 4).foreground_count() == 0);
    CHECK(cross_section(img, 0).foreground_count() == 8);  // >= 0 everywhere
}

TEST_CASE("destructibility needs simplicity at the point's own level") {
    auto ramp = gray_from_rows({"123"});
    CHECK(is_destructible(ramp, {0, 1}));        // simple at level 2, 1 below
    CHECK_FALSE(is_destructible(ramp, {0, 0}));  // nothing strictly below
    CHECK_FALSE(is_destructible(ramp, {0, 2}));  // isolated at level 3

    auto row = gray_from_rows({"0123330"});
    CHECK(is_destructible(row, {0, 5}));
    CHECK_FALSE(is_destructible(row, {0, 4}));  // interior of the plateau
}

TEST_CASE("a constant plateau has no destructible point") {
    GrayGridImage2 img(Box2{{0, 0}, {4, 4}}, 7);
    for (const Point2& p : img.domain_sites())
        CHECK_FALSE(is_destructible(img, p));
}

TEST_CASE("a zero image has no destructible point") {
    GrayGridImage2 img(Box2{{0, 0}, {2, 2}});
    for (const Point2& p : img.domain_sites())
        CHECK_FALSE(is_destructible(img, p));
    CHECK_FALSE(is_destructible(img, {9, 9}));  // out of domain
}

TEST_CASE("lowering drops to the highest neighbor below") {
    auto img = gray_from_rows({
        "370",
        "090",
        "000",
    });
    lower(img, {1, 1});
    CHECK(img.at({1, 1}) == 7);
    lower(img, {1, 1});
    CHECK(img.at({1, 1}) == 3);

    GrayGridImage2 flat(Box2{{0, 0}, {1, 1}}, 5);
    CHECK_THROWS_AS(lower(flat, {0, 0}), std::logic_error);
}

TEST_CASE("gray thinning never raises a value") {
    std::mt19937 rng(71);
    for (int k = 0; k < 50; ++k) {
        auto img = random_gray_2d(rng, 7, 7, 4);
        auto out = gray_thinning(img);
        for (const Point2& p : img.domain_sites())
            CHECK(out.at(p) <= img.at(p));
    }
}

TEST_CASE("gray thinning preserves every cross-section's topology") {
    std::mt19937 rng(72);
    for (int k = 0; k < 100; ++k) {
        auto img = random_gray_2d(rng, 8, 8, 4);
        auto out = gray_thinning(img);
        for (int level = 1; level <= max_value(img); ++level) {
            CHECK(topology_counts_2d(cross_section(out, level)) ==
                  topology_counts_2d(cross_section(img, level)));
        }
    }
}

TEST_CASE("gray thinning reaches a stable image") {
    std::mt19937 rng(73);
    for (int k = 0; k < 50; ++k) {
        auto img = random_gray_2d(rng, 7, 7, 3);
        auto out = gray_thinning(img);
        CHECK(gray_thinning(out) == out);
        for (const Point2& p : out.domain_sites())
            CHECK_FALSE(is_destructible(out, p));
    }
}

TEST_CASE("a single-level line thins exactly like its binary support") {
    auto img = gray_from_rows({
        "0000000",
        "0999990",
        "0000000",
    });
    auto out = gray_thinning(img);
    CHECK(support(out) == thin2(support(img)));
    CHECK(support(out).foreground_count() == 1);
}

TEST_CASE("a single-level cross thins exactly like its binary support") {
    auto img = gray_from_rows({
        "00000",
        "00900",
        "09990",
        "00900",
        "00000",
    });
    auto out = gray_thinning(img);
    CHECK(support(out) == thin2(support(img)));
    CHECK(out.at({2, 2}) == 9);
}

TEST_CASE("a two-level pyramid collapses to its peak") {
    auto img = gray_from_rows({
        "000000",
        "011110",
        "012210",
        "012210",
        "011110",
        "000000",
    });
    auto out = gray_thinning(img);
    CHECK(support(out).foreground_count() == 1);
    CHECK(max_value(out) == 2);
}

TEST_CASE("a plateau with no lower ground anywhere cannot shrink") {
    auto img = gray_from_rows({
        "1111",
        "1221",
        "1221",
        "1111",
    });
    auto out = gray_thinning(img);
    // Level 1 covers the whole domain: no site has a strictly lower
    // neighbor to fall to, so the support stays put; only the 2s melt.
    CHECK(support(out) == support(img));
    CHECK(cross_section(out, 2).foreground_count() == 1);
}

TEST_CASE("gray image equality and clamped reads") {
    auto a = gray_from_rows({"12", "34"});
    auto b = a;
    CHECK(a == b);
    b.set({0, 0}, 9);
    CHECK(a != b);
    CHECK(a.clamped_at({-1, 0}) == 0);
    CHECK(a.clamped_at({1, 1}) == 4);
    CHECK(a.foreground({0, 0}));
    GrayGridImage2::flag_map flags(a);
    CHECK_FALSE(flags.test({1, 0}));
    flags.set({1, 0}, true);
    CHECK(flags.test({1, 0}));
}

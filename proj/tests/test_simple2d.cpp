#include <dtk/oracle.hpp>
#include <dtk/simple2d.hpp>
#include <dtk/thinning.hpp>

#include <doctest.h>

#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>

#include "test_helpers.hpp"

using namespace dtk;
using dtk::testing::image_from_rows;

namespace {

std::string lut_hex(const SimpleLut2D& lut) {
    std::string out;
    char buf[3];
    for (unsigned char b : lut.bytes()) {
        std::snprintf(buf, sizeof buf, "%02x", b);
        out += buf;
    }
    return out;
}

// Index of a neighborhood offset in the fixed configuration-bit order.
constexpr int kBitOfOffset[3][3] = {
    // dy = -1, 0, 1 rows; dx = -1, 0, 1 columns (dy==dx==0 unused)
    {0, 1, 2},
    {3, -1, 4},
    {5, 6, 7},
};

std::uint8_t mask_with(std::initializer_list<std::pair<int, int>> fg) {
    unsigned m = 0;
    for (auto [dy, dx] : fg) m |= 1u << kBitOfOffset[dy + 1][dx + 1];
    return static_cast<std::uint8_t>(m);
}

}  // namespace

TEST_CASE("connectivity numbers of the extreme configurations") {
    CHECK(connectivity_numbers_2d(0u, 4) == ConnectivityNumbers{0, 1});
    CHECK(connectivity_numbers_2d(0u, 8) == ConnectivityNumbers{0, 1});
    CHECK(connectivity_numbers_2d(255u, 4) == ConnectivityNumbers{1, 0});
    CHECK(connectivity_numbers_2d(255u, 8) == ConnectivityNumbers{1, 0});
}

TEST_CASE("connectivity numbers of single-neighbor configurations") {
    // One edge neighbor: one foreground and one background component.
    CHECK(connectivity_numbers_2d(mask_with({{0, 1}}), 4) ==
          ConnectivityNumbers{1, 1});
    CHECK(connectivity_numbers_2d(mask_with({{0, 1}}), 8) ==
          ConnectivityNumbers{1, 1});
    // A lone diagonal neighbor is not 4-adjacent to the center.
    CHECK(connectivity_numbers_2d(mask_with({{-1, -1}}), 4) ==
          ConnectivityNumbers{0, 1});
    CHECK(connectivity_numbers_2d(mask_with({{-1, -1}}), 8) ==
          ConnectivityNumbers{1, 1});
}

TEST_CASE("connectivity numbers separate two opposite neighbors") {
    auto m = mask_with({{0, -1}, {0, 1}});
    CHECK(connectivity_numbers_2d(m, 4) == ConnectivityNumbers{2, 2});
    CHECK(connectivity_numbers_2d(m, 8) == ConnectivityNumbers{2, 2});
}

TEST_CASE("connectivity numbers reject unsupported connectivities") {
    CHECK_THROWS_AS(connectivity_numbers_2d(0u, 6), std::invalid_argument);
    CHECK_THROWS_AS(connectivity_numbers_2d(0u, 0), std::invalid_argument);
}

TEST_CASE("foreground/background duality of connectivity numbers") {
    for (unsigned m = 0; m < 256; ++m) {
        auto a = connectivity_numbers_2d(static_cast<std::uint8_t>(m), 4);
        auto b = connectivity_numbers_2d(static_cast<std::uint8_t>(~m), 8);
        CHECK(a.fg == b.bg);
        CHECK(a.bg == b.fg);
    }
}

TEST_CASE("exactly 116 simple configurations for either connectivity pair") {
    int n48 = 0, n84 = 0;
    for (unsigned m = 0; m < 256; ++m) {
        auto mask = static_cast<std::uint8_t>(m);
        auto dual = static_cast<std::uint8_t>(~m);
        if (connectivity_numbers_2d(mask, 4).fg == 1 &&
            connectivity_numbers_2d(dual, 8).fg == 1)
            ++n48;
        if (connectivity_numbers_2d(mask, 8).fg == 1 &&
            connectivity_numbers_2d(dual, 4).fg == 1)
            ++n84;
    }
    CHECK(n48 == 116);
    CHECK(n84 == 116);
}

TEST_CASE("lookup tables agree with the connectivity-number definition") {
    auto lut4 = build_simple_lut_2d(4);
    auto lut8 = build_simple_lut_2d(8);
    CHECK(lut4.fg_conn() == 4);
    CHECK(lut4.bg_conn() == 8);
    CHECK(lut8.fg_conn() == 8);
    CHECK(lut8.bg_conn() == 4);
    for (unsigned m = 0; m < 256; ++m) {
        auto mask = static_cast<std::uint8_t>(m);
        auto c4n = connectivity_numbers_2d(mask, 4);
        auto c8n = connectivity_numbers_2d(mask, 8);
        CHECK(lut4.simple(mask) == (c4n == ConnectivityNumbers{1, 1}));
        CHECK(lut8.simple(mask) == (c8n == ConnectivityNumbers{1, 1}));
    }
}

TEST_CASE("lookup table bytes are exactly the expected constants") {
    CHECK(lut_hex(build_simple_lut_2d(4)) ==
          "ccbbf380ccbbf3803300000033bb0080"
          "ccbbf380ccbbf3803300f38033bbf37b");
    CHECK(lut_hex(build_simple_lut_2d(8)) ==
          "decfddcc01cf00cc01cfdd3301cfdd33"
          "0100ddcc000000cc01cfdd3301cfdd33");
}

TEST_CASE("lookup table builder rejects unsupported connectivities") {
    CHECK_THROWS_AS(build_simple_lut_2d(6), std::invalid_argument);
    CHECK_THROWS_AS(build_simple_lut_2d(0), std::invalid_argument);
}

TEST_CASE("configuration extraction treats outside as background") {
    auto img = image_from_rows({
        "##.",
        "###",
        ".#.",
    });
    // At the corner (0,0): in-domain neighbors are (0,1),(1,0),(1,1).
    CHECK(config8_at(img, {0, 0}) ==
          mask_with({{0, 1}, {1, 0}, {1, 1}}));
    // At (1,1), every neighbor except two diagonals is set.
    CHECK(config8_at(img, {1, 1}) ==
          mask_with({{-1, -1}, {-1, 0}, {0, -1}, {0, 1}, {1, 0}}));
}

TEST_CASE("simplicity matches the delete-and-compare oracle") {
    std::mt19937 rng(21);
    is_simple_point2d simple(4);
    for (int i = 0; i < 200; ++i) {
        auto img = dtk::testing::random_image_2d(rng, 6, 6, 0.5);
        for (const auto& p : img.domain_sites()) {
            if (!img.at(p)) {
                CHECK_FALSE(simple(img, p));
                continue;
            }
            CHECK(simple(img, p) == oracle_is_simple_2d(img, p));
        }
    }
}

TEST_CASE("end-point predicate keeps curve ends") {
    auto img = image_from_rows({
        ".....",
        ".###.",
        ".....",
    });
    is_not_end_point keep(c4(), img);
    CHECK_FALSE(keep(img, {1, 1}));  // one neighbor: an end point
    CHECK(keep(img, {1, 2}));        // two neighbors
    // An isolated point has zero neighbors and is not an end point.
    auto dot = image_from_rows({"..#.."});
    is_not_end_point keep2(c4(), dot);
    CHECK(keep2(dot, {0, 2}));
}

TEST_CASE("end-point predicate is anchored to the reference image") {
    auto img = image_from_rows({"####"});
    is_not_end_point keep(c4(), img);
    auto later = img;
    later.set({0, 1}, false);
    // (0,2) now has one neighbor in `later` but two in the reference.
    CHECK(keep(later, {0, 2}));
}

TEST_CASE("curve-preserving thinning of a cross keeps its arms") {
    auto img = image_from_rows({
        "....#....",
        "....#....",
        "....#....",
        "....#....",
        "#########",
        "....#....",
        "....#....",
        "....#....",
        "....#....",
    });
    auto out = breadth_first_thinning(img, c4(), is_simple_point2d(4),
                                      detach_point{},
                                      is_not_end_point(c4(), img));
    // The cross is already a curve skeleton: nothing may disappear.
    CHECK(out == img);
}

TEST_CASE("simplicity is defensive about degenerate queries") {
    auto img = image_from_rows({"#"});
    is_simple_point2d simple(4);
    CHECK_FALSE(simple(img, {5, 5}));  // outside the domain
    auto bg = image_from_rows({"."});
    CHECK_FALSE(simple(bg, {0, 0}));   // background point
}

TEST_CASE("bridge pixels of an H shape are not simple") {
    auto img = image_from_rows({
        "#...#",
        "#...#",
        "#####",
        "#...#",
        "#...#",
    });
    is_simple_point2d simple(4);
    // Middle-bar pixels connect the two vertical strokes.
    CHECK_FALSE(simple(img, {2, 2}));
}

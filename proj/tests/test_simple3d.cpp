#include <dtk/oracle.hpp>
#include <dtk/simple3d.hpp>
#include <dtk/thinning.hpp>

#include <doctest.h>

#include <random>

#include "test_helpers.hpp"

using namespace dtk;
using dtk::testing::random_image_3d;

namespace {

// Index of an offset (dz,dy,dx) in the fixed 26-bit configuration order.
int bit_of(int dz, int dy, int dx) {
    int idx = 0;
    for (int z = -1; z <= 1; ++z)
        for (int y = -1; y <= 1; ++y)
            for (int x = -1; x <= 1; ++x) {
                if (z == 0 && y == 0 && x == 0) continue;
                if (z == dz && y == dy && x == dx) return idx;
                ++idx;
            }
    return -1;
}

}  // namespace

TEST_CASE("3d connectivity numbers of the extreme configurations") {
    CHECK(connectivity_numbers_3d(0u) == ConnectivityNumbers3{0, 1});
    CHECK(connectivity_numbers_3d((1u << 26) - 1) ==
          ConnectivityNumbers3{1, 0});
}

TEST_CASE("3d connectivity numbers of single-neighbor configurations") {
    // One face neighbor leaves one foreground and one background component.
    CHECK(connectivity_numbers_3d(1u << bit_of(0, 0, 1)) ==
          ConnectivityNumbers3{1, 1});
    // One edge neighbor: foreground still counts, background unchanged.
    CHECK(connectivity_numbers_3d(1u << bit_of(0, 1, 1)) ==
          ConnectivityNumbers3{1, 1});
    // One corner neighbor.
    CHECK(connectivity_numbers_3d(1u << bit_of(1, 1, 1)) ==
          ConnectivityNumbers3{1, 1});
}

TEST_CASE("two opposite face neighbors are separated") {
    unsigned mask = (1u << bit_of(0, 0, -1)) | (1u << bit_of(0, 0, 1));
    CHECK(connectivity_numbers_3d(mask) == ConnectivityNumbers3{2, 1});
}

TEST_CASE("3d simplicity of basic voxel configurations") {
    // A voxel with exactly one face neighbor is simple, an isolated one not.
    CHECK(is_simple_point3d::simple_config(1u << bit_of(0, 0, 1)));
    CHECK_FALSE(is_simple_point3d::simple_config(0u));
    CHECK_FALSE(is_simple_point3d::simple_config((1u << 26) - 1));
    // Two opposite face neighbors: removing the center splits them.
    unsigned tunnel = (1u << bit_of(0, 0, -1)) | (1u << bit_of(0, 0, 1));
    CHECK_FALSE(is_simple_point3d::simple_config(tunnel));
}

TEST_CASE("deleting a simple voxel preserves global topology counts") {
    std::mt19937 rng(31);
    is_simple_point3d simple(false);
    int claims = 0, rejections = 0;
    for (int round = 0; round < 30; ++round) {
        auto img = random_image_3d(rng, 5, 5, 5, round % 2 ? 0.35 : 0.6);
        auto before = topology_counts_3d(img);
        for (const auto& p : img.domain_sites()) {
            if (!img.foreground(p)) continue;
            if (!simple(img, p)) {
                ++rejections;
                continue;
            }
            ++claims;
            auto after_img = img;
            after_img.set(p, false);
            auto after = topology_counts_3d(after_img);
            CHECK(before.fg26 == after.fg26);
            CHECK(before.bg6 == after.bg6);
            CHECK(before.chi == after.chi);
        }
    }
    // Both verdicts must actually occur for the check to mean anything.
    CHECK(claims > 100);
    CHECK(rejections > 100);
}

TEST_CASE("memoizing lookup table matches direct evaluation") {
    SimpleLut3D lut;
    CHECK_FALSE(lut.known(12345u));
    std::mt19937 rng(32);
    std::uniform_int_distribution<unsigned> mask(0, (1u << 26) - 1);
    for (int i = 0; i < 100000; ++i) {
        unsigned m = mask(rng);
        bool direct = is_simple_point3d::simple_config(m);
        CHECK(lut.lookup(m) == direct);
        CHECK(lut.known(m));
        CHECK(lut.lookup(m) == direct);  // second query hits the cache
    }
}

TEST_CASE("eagerly built table matches direct evaluation on samples") {
    auto lut = SimpleLut3D::build_eager();
    CHECK(lut.known(0u));
    CHECK(lut.known((1u << 26) - 1));
    std::mt19937 rng(34);
    std::uniform_int_distribution<unsigned> mask(0, (1u << 26) - 1);
    for (int i = 0; i < 50000; ++i) {
        unsigned m = mask(rng);
        CHECK(lut.known(m));
        CHECK(lut.lookup(m) == is_simple_point3d::simple_config(m));
    }
}

TEST_CASE("lookup-table-backed predicate equals the direct predicate") {
    std::mt19937 rng(33);
    is_simple_point3d direct(false);
    is_simple_point3d cached(true);
    CHECK_FALSE(direct.uses_lut());
    CHECK(cached.uses_lut());
    for (int round = 0; round < 10; ++round) {
        auto img = random_image_3d(rng, 5, 5, 5, 0.5);
        for (const auto& p : img.domain_sites())
            CHECK(direct(img, p) == cached(img, p));
    }
}

TEST_CASE("3d thinning reduces a solid bar to a single voxel") {
    BinaryImage3 img(Box<3>{{0, 0, 0}, {2, 2, 7}});
    for (const auto& p : img.domain_sites()) img.set(p, true);
    auto out =
        breadth_first_thinning(img, c26(), is_simple_point3d(false),
                               detach_point{});
    CHECK(out.foreground_count() == 1);
}

TEST_CASE("3d thinning is idempotent and leaves no simple voxel") {
    std::mt19937 rng(34);
    is_simple_point3d simple(false);
    for (int round = 0; round < 10; ++round) {
        auto img = random_image_3d(rng, 5, 5, 5, 0.5);
        auto out = breadth_first_thinning(img, c26(), simple, detach_point{});
        for (const auto& p : out.domain_sites()) CHECK_FALSE(simple(out, p));
        CHECK(breadth_first_thinning(out, c26(), simple, detach_point{}) ==
              out);
    }
}

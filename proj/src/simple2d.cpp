#include "dtk/simple2d.hpp"

#include <cstdlib>
#include <stdexcept>

namespace dtk {

namespace {

// i-th entry = i-th c8() offset (lexicographic); see header for the contract.
constexpr int kDy[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
constexpr int kDx[8] = {-1, 0, 1, -1, 1, -1, 0, 1};

bool cells_adjacent(int i, int j, int conn) {
    int dy = std::abs(kDy[i] - kDy[j]);
    int dx = std::abs(kDx[i] - kDx[j]);
    if (conn == 4)
        return dy + dx == 1;
    return dy <= 1 && dx <= 1;
}

bool center_adjacent(int i, int conn) {
    return conn == 8 || std::abs(kDy[i]) + std::abs(kDx[i]) == 1;
}

// Components of the set bits of `cells` under `conn`, counting only those
// containing at least one bit conn-adjacent to the center.
int center_adjacent_components(std::uint8_t cells, int conn) {
    std::uint8_t seen = 0;
    int count = 0;
    for (int i = 0; i < 8; ++i) {
        if (!((cells >> i) & 1) || ((seen >> i) & 1))
            continue;
        int stack[8];
        int top = 0;
        stack[top++] = i;
        seen |= std::uint8_t(1u << i);
        bool touches = false;
        while (top > 0) {
            int u = stack[--top];
            touches = touches || center_adjacent(u, conn);
            for (int j = 0; j < 8; ++j) {
                if (((cells >> j) & 1) && !((seen >> j) & 1) &&
                    cells_adjacent(u, j, conn)) {
                    seen |= std::uint8_t(1u << j);
                    stack[top++] = j;
                }
            }
        }
        if (touches)
            ++count;
    }
    return count;
}

} // namespace

ConnectivityNumbers connectivity_numbers_2d(std::uint8_t mask, int fg_conn) {
    if (fg_conn != 4 && fg_conn != 8)
        throw std::invalid_argument(
            "connectivity_numbers_2d: fg_conn must be 4 or 8");
    int bg_conn = 12 - fg_conn;
    return {center_adjacent_components(mask, fg_conn),
            center_adjacent_components(std::uint8_t(~mask), bg_conn)};
}

std::uint8_t config8_at(const BinaryImage2& img, const Point2& p) {
    const auto& offsets = c8().offsets;
    std::uint8_t mask = 0;
    for (int i = 0; i < 8; ++i)
        if (img.clamped_at(p + offsets[i]))
            mask |= std::uint8_t(1u << i);
    return mask;
}

SimpleLut2D build_simple_lut_2d(int fg_conn) {
    SimpleLut2D lut;
    lut.fg_conn_ = fg_conn;
    for (int m = 0; m < 256; ++m) {
        if (connectivity_numbers_2d(std::uint8_t(m), fg_conn) ==
            ConnectivityNumbers{1, 1})
            lut.bytes_[m >> 3] |= std::uint8_t(1u << (m & 7));
    }
    return lut;
}

} // namespace dtk

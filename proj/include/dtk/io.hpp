#ifndef DTK_IO_HPP
#define DTK_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "dtk/complex.hpp"
#include "dtk/core.hpp"
#include "dtk/graylevel.hpp"

// File formats:
//   PBM (P1 ASCII / P4 raw)  2D binary; 1 = black = foreground; P4 rows
//                            padded to whole bytes, most significant bit
//                            first.
//   PGM (P2 ASCII / P5 raw)  2D gray, maxval <= 255.
//   VOL                      3D binary: one line "D3 <nx> <ny> <nz>\n"
//                            followed by exactly nx*ny*nz bytes, each 0 or
//                            1, z-major then y, x fastest. No trailing data.
//   OFF                      ASCII triangle meshes: "OFF", counts "V F E",
//                            V vertex lines, F faces "3 i j k". Triangles
//                            only; E is ignored on read, written as 0.
//
// Grid convention throughout: Point2 = (row, col) and Point3 = (z, y, x),
// so the row-major site order of a Box matches the PBM/PGM raster order
// and the VOL byte order with no index shuffling.
//
// Readers throw format_error on malformed content; path-based helpers
// throw io_error when the file cannot be opened. Writers report stream
// failures as io_error.

namespace dtk {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BinaryImage2 read_pbm(std::istream& in);
BinaryImage2 read_pbm(const std::string& path);
void write_pbm(const BinaryImage2& img, std::ostream& out, bool raw = true);
void write_pbm(const BinaryImage2& img, const std::string& path,
               bool raw = true);

GrayGridImage2 read_pgm(std::istream& in);
GrayGridImage2 read_pgm(const std::string& path);
void write_pgm(const GrayGridImage2& img, std::ostream& out, bool raw = true);
void write_pgm(const GrayGridImage2& img, const std::string& path,
               bool raw = true);

BinaryImage3 read_vol(std::istream& in);
BinaryImage3 read_vol(const std::string& path);
void write_vol(const BinaryImage3& img, std::ostream& out);
void write_vol(const BinaryImage3& img, const std::string& path);

OffMesh read_off(std::istream& in);
OffMesh read_off(const std::string& path);
void write_off(const OffMesh& mesh, std::ostream& out);
void write_off(const OffMesh& mesh, const std::string& path);

} // namespace dtk

#endif

#include "dtk/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace dtk {

namespace {

constexpr std::int64_t kMaxPixels = std::int64_t(1) << 30;

// Skips whitespace and '#' comments (to end of line), as allowed between
// any two header tokens of the Netpbm and OFF formats.
void skip_separators(std::istream& in) {
    for (;;) {
        int c = in.peek();
        if (c == '#') {
            while (c != EOF && c != '\n')
                c = in.get();
            continue;
        }
        if (c == EOF || !std::isspace(c))
            return;
        in.get();
    }
}

int read_int_token(std::istream& in, const char* what) {
    skip_separators(in);
    long long v = 0;
    if (!(in >> v))
        throw format_error(std::string("expected integer: ") + what);
    if (v < std::numeric_limits<int>::min() ||
        v > std::numeric_limits<int>::max())
        throw format_error(std::string("integer out of range: ") + what);
    return static_cast<int>(v);
}

double read_double_token(std::istream& in, const char* what) {
    skip_separators(in);
    double v = 0;
    if (!(in >> v))
        throw format_error(std::string("expected number: ") + what);
    return v;
}

void check_2d_size(int width, int height) {
    if (width <= 0 || height <= 0)
        throw format_error("image dimensions must be positive");
    if (std::int64_t(width) * height > kMaxPixels)
        throw format_error("image dimensions overflow");
}

Box2 box2(int width, int height) {
    return Box2{{0, 0}, {height - 1, width - 1}};
}

std::string magic_token(std::istream& in) {
    skip_separators(in);
    std::string magic;
    if (!(in >> magic))
        throw format_error("missing magic token");
    return magic;
}

template <typename WriteBody>
void write_to_path(const std::string& path, WriteBody body) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot open for writing: " + path);
    body(out);
    out.flush();
    if (!out)
        throw io_error("write failed: " + path);
}

template <typename Read>
auto read_from_path(const std::string& path, Read read) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open for reading: " + path);
    return read(in);
}

} // namespace

BinaryImage2 read_pbm(std::istream& in) {
    std::string magic = magic_token(in);
    if (magic != "P1" && magic != "P4")
        throw format_error("not a PBM file (magic " + magic + ")");
    int width = read_int_token(in, "PBM width");
    int height = read_int_token(in, "PBM height");
    check_2d_size(width, height);
    BinaryImage2 img(box2(width, height));
    if (magic == "P1") {
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x) {
                skip_separators(in);
                int c = in.get();
                if (c != '0' && c != '1')
                    throw format_error("PBM P1: expected 0 or 1");
                img.set(Point2{{y, x}}, c == '1');
            }
    } else {
        // single whitespace byte after the header, then packed rows
        if (!std::isspace(in.get()))
            throw format_error("PBM P4: malformed header");
        int row_bytes = (width + 7) / 8;
        std::vector<char> row(static_cast<std::size_t>(row_bytes));
        for (int y = 0; y < height; ++y) {
            if (!in.read(row.data(), row_bytes))
                throw format_error("PBM P4: truncated payload");
            for (int x = 0; x < width; ++x) {
                unsigned byte = static_cast<unsigned char>(
                    row[static_cast<std::size_t>(x / 8)]);
                img.set(Point2{{y, x}}, (byte >> (7 - x % 8)) & 1u);
            }
        }
    }
    return img;
}

void write_pbm(const BinaryImage2& img, std::ostream& out, bool raw) {
    int height = img.domain().length(0);
    int width = img.domain().length(1);
    out << (raw ? "P4" : "P1") << "\n" << width << " " << height << "\n";
    if (raw) {
        int row_bytes = (width + 7) / 8;
        std::vector<char> row(static_cast<std::size_t>(row_bytes));
        for (int y = 0; y < height; ++y) {
            std::fill(row.begin(), row.end(), 0);
            for (int x = 0; x < width; ++x)
                if (img.at(Point2{{img.domain().lo[0] + y,
                                   img.domain().lo[1] + x}}))
                    row[static_cast<std::size_t>(x / 8)] |=
                        char(1u << (7 - x % 8));
            out.write(row.data(), row_bytes);
        }
    } else {
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x)
                out << (img.at(Point2{{img.domain().lo[0] + y,
                                       img.domain().lo[1] + x}})
                            ? '1'
                            : '0')
                    << (x + 1 == width ? "" : " ");
            out << "\n";
        }
    }
}

GrayGridImage2 read_pgm(std::istream& in) {
    std::string magic = magic_token(in);
    if (magic != "P2" && magic != "P5")
        throw format_error("not a PGM file (magic " + magic + ")");
    int width = read_int_token(in, "PGM width");
    int height = read_int_token(in, "PGM height");
    int maxval = read_int_token(in, "PGM maxval");
    check_2d_size(width, height);
    if (maxval <= 0 || maxval > 255)
        throw format_error("PGM maxval must be in [1,255]");
    GrayGridImage2 img(box2(width, height));
    if (magic == "P2") {
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x) {
                int v = read_int_token(in, "PGM sample");
                if (v < 0 || v > maxval)
                    throw format_error("PGM sample exceeds maxval");
                img.set(Point2{{y, x}}, static_cast<std::uint8_t>(v));
            }
    } else {
        if (!std::isspace(in.get()))
            throw format_error("PGM P5: malformed header");
        std::vector<char> row(static_cast<std::size_t>(width));
        for (int y = 0; y < height; ++y) {
            if (!in.read(row.data(), width))
                throw format_error("PGM P5: truncated payload");
            for (int x = 0; x < width; ++x) {
                int v = static_cast<unsigned char>(
                    row[static_cast<std::size_t>(x)]);
                if (v > maxval)
                    throw format_error("PGM sample exceeds maxval");
                img.set(Point2{{y, x}}, static_cast<std::uint8_t>(v));
            }
        }
    }
    return img;
}

void write_pgm(const GrayGridImage2& img, std::ostream& out, bool raw) {
    int height = img.domain().length(0);
    int width = img.domain().length(1);
    out << (raw ? "P5" : "P2") << "\n"
        << width << " " << height << "\n255\n";
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            std::uint8_t v = img.at(
                Point2{{img.domain().lo[0] + y, img.domain().lo[1] + x}});
            if (raw)
                out.put(static_cast<char>(v));
            else
                out << int(v) << (x + 1 == width ? "" : " ");
        }
        if (!raw)
            out << "\n";
    }
}

BinaryImage3 read_vol(std::istream& in) {
    std::string magic;
    if (!(in >> magic) || magic != "D3")
        throw format_error("not a VOL file (bad magic)");
    int nx = read_int_token(in, "VOL nx");
    int ny = read_int_token(in, "VOL ny");
    int nz = read_int_token(in, "VOL nz");
    if (nx <= 0 || ny <= 0 || nz <= 0)
        throw format_error("VOL dimensions must be positive");
    std::int64_t count = std::int64_t(nx) * ny * nz;
    if (count > kMaxPixels)
        throw format_error("VOL dimensions overflow");
    if (in.get() != '\n')
        throw format_error("VOL: header must end with newline");
    BinaryImage3 img(Box3{{0, 0, 0}, {nz - 1, ny - 1, nx - 1}});
    std::vector<char> payload(static_cast<std::size_t>(count));
    if (!in.read(payload.data(), count))
        throw format_error("VOL: truncated payload");
    if (in.get() != EOF)
        throw format_error("VOL: trailing data after payload");
    std::int64_t i = 0;
    for (int z = 0; z < nz; ++z)
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x < nx; ++x, ++i) {
                char b = payload[static_cast<std::size_t>(i)];
                if (b != 0 && b != 1)
                    throw format_error("VOL: payload byte is not 0 or 1");
                img.set(Point3{{z, y, x}}, b == 1);
            }
    return img;
}

void write_vol(const BinaryImage3& img, std::ostream& out) {
    int nz = img.domain().length(0);
    int ny = img.domain().length(1);
    int nx = img.domain().length(2);
    out << "D3 " << nx << " " << ny << " " << nz << "\n";
    for (int z = 0; z < nz; ++z)
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x < nx; ++x)
                out.put(img.at(Point3{{img.domain().lo[0] + z,
                                       img.domain().lo[1] + y,
                                       img.domain().lo[2] + x}})
                            ? 1
                            : 0);
}

OffMesh read_off(std::istream& in) {
    std::string magic = magic_token(in);
    if (magic != "OFF")
        throw format_error("not an OFF file (magic " + magic + ")");
    int vertex_count = read_int_token(in, "OFF vertex count");
    int face_count = read_int_token(in, "OFF face count");
    (void)read_int_token(in, "OFF edge count"); // ignored
    if (vertex_count < 0 || face_count < 0)
        throw format_error("OFF counts must be non-negative");
    OffMesh mesh;
    mesh.vertices.reserve(static_cast<std::size_t>(vertex_count));
    for (int v = 0; v < vertex_count; ++v)
        mesh.vertices.push_back({read_double_token(in, "OFF vertex x"),
                                 read_double_token(in, "OFF vertex y"),
                                 read_double_token(in, "OFF vertex z")});
    mesh.triangles.reserve(static_cast<std::size_t>(face_count));
    for (int f = 0; f < face_count; ++f) {
        int arity = read_int_token(in, "OFF face arity");
        if (arity != 3)
            throw format_error("OFF: only triangles are supported");
        int a = read_int_token(in, "OFF face vertex");
        int b = read_int_token(in, "OFF face vertex");
        int c = read_int_token(in, "OFF face vertex");
        for (int idx : {a, b, c})
            if (idx < 0 || idx >= vertex_count)
                throw format_error("OFF: face vertex index out of range");
        mesh.triangles.push_back({a, b, c});
    }
    return mesh;
}

namespace {

// Shortest decimal form that reads back to the same double.
void put_double(std::ostream& out, double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.write(buf, res.ptr - buf);
}

} // namespace

void write_off(const OffMesh& mesh, std::ostream& out) {
    out << "OFF\n"
        << mesh.vertices.size() << " " << mesh.triangles.size() << " 0\n";
    for (const auto& v : mesh.vertices) {
        put_double(out, v[0]);
        out.put(' ');
        put_double(out, v[1]);
        out.put(' ');
        put_double(out, v[2]);
        out.put('\n');
    }
    for (const auto& t : mesh.triangles)
        out << "3 " << t[0] << " " << t[1] << " " << t[2] << "\n";
}

BinaryImage2 read_pbm(const std::string& path) {
    return read_from_path(path, [](std::istream& in) { return read_pbm(in); });
}
void write_pbm(const BinaryImage2& img, const std::string& path, bool raw) {
    write_to_path(path,
                  [&](std::ostream& out) { write_pbm(img, out, raw); });
}
GrayGridImage2 read_pgm(const std::string& path) {
    return read_from_path(path, [](std::istream& in) { return read_pgm(in); });
}
void write_pgm(const GrayGridImage2& img, const std::string& path, bool raw) {
    write_to_path(path,
                  [&](std::ostream& out) { write_pgm(img, out, raw); });
}
BinaryImage3 read_vol(const std::string& path) {
    return read_from_path(path, [](std::istream& in) { return read_vol(in); });
}
void write_vol(const BinaryImage3& img, const std::string& path) {
    write_to_path(path, [&](std::ostream& out) { write_vol(img, out); });
}
OffMesh read_off(const std::string& path) {
    return read_from_path(path, [](std::istream& in) { return read_off(in); });
}
void write_off(const OffMesh& mesh, const std::string& path) {
    write_to_path(path, [&](std::ostream& out) { write_off(mesh, out); });
}

} // namespace dtk

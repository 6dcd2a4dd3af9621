// dtk: command-line driver for the digital topology toolkit.
//
// Subcommands cover the five thinning pipelines (2D/3D binary grids,
// mesh surfaces by whole-cell detachment or by free-pair collapse,
// gray-level images) plus LUT diagnostics. Exit codes: 0 success,
// 1 usage error, 2 I/O error, 3 malformed data. Each pipeline prints
// "thinning: <seconds> s" on standard error, timing the thinning calls
// only (file I/O and structure building excluded).

#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dtk/complex.hpp"
#include "dtk/core.hpp"
#include "dtk/graylevel.hpp"
#include "dtk/io.hpp"
#include "dtk/simple2d.hpp"
#include "dtk/simple3d.hpp"
#include "dtk/skeleton.hpp"
#include "dtk/thinning.hpp"

namespace {

class ThinningTimer {
public:
    ~ThinningTimer() { std::fprintf(stderr, "thinning: %.2f s\n", seconds_); }

    template <typename Call>
    auto time(Call call) {
        auto t0 = std::chrono::steady_clock::now();
        auto result = call();
        auto t1 = std::chrono::steady_clock::now();
        seconds_ += std::chrono::duration<double>(t1 - t0).count();
        return result;
    }

private:
    double seconds_ = 0;
};

void run_thin2d(const std::string& input_path, const std::string& output_path,
                bool keep_end_points) {
    dtk::BinaryImage2 input = dtk::read_pbm(input_path);
    dtk::is_simple_point2d is_simple(4);
    ThinningTimer timer;
    dtk::BinaryImage2 output =
        keep_end_points
            ? timer.time([&] {
                  return dtk::breadth_first_thinning(
                      input, dtk::c4(), is_simple, dtk::detach_point{},
                      dtk::is_not_end_point(dtk::c4(), input));
              })
            : timer.time([&] {
                  return dtk::breadth_first_thinning(input, dtk::c4(),
                                                     is_simple,
                                                     dtk::detach_point{});
              });
    dtk::write_pbm(output, output_path);
}

void run_thin3d(const std::string& input_path, const std::string& output_path,
                bool use_lut) {
    dtk::BinaryImage3 input = dtk::read_vol(input_path);
    dtk::is_simple_point3d is_simple(use_lut);
    ThinningTimer timer;
    dtk::BinaryImage3 output = timer.time([&] {
        return dtk::breadth_first_thinning(input, dtk::c26(), is_simple,
                                           dtk::detach_point{});
    });
    dtk::write_vol(output, output_path);
}

// OFF export of the true triangles: vertices in use keep their original
// coordinates and relative order.
dtk::OffMesh surviving_triangles(const dtk::SurfaceComplex& surface,
                                 const dtk::ComplexImage& img) {
    dtk::OffMesh out;
    std::vector<int> remap(surface.vertex_positions.size(), -1);
    for (int id = 0; id < img.complex().face_count(2); ++id) {
        if (!img.value(dtk::Face{2, id}))
            continue;
        for (int v : surface.triangle_vertices[static_cast<std::size_t>(id)])
            remap[static_cast<std::size_t>(v)] = 0;
    }
    for (std::size_t v = 0; v < remap.size(); ++v)
        if (remap[v] == 0) {
            remap[v] = static_cast<int>(out.vertices.size());
            out.vertices.push_back(surface.vertex_positions[v]);
        }
    for (int id = 0; id < img.complex().face_count(2); ++id) {
        if (!img.value(dtk::Face{2, id}))
            continue;
        const auto& t = surface.triangle_vertices[static_cast<std::size_t>(id)];
        out.triangles.push_back({remap[static_cast<std::size_t>(t[0])],
                                 remap[static_cast<std::size_t>(t[1])],
                                 remap[static_cast<std::size_t>(t[2])]});
    }
    return out;
}

void run_mesh_skel(const std::string& input_path,
                   const std::string& output_path) {
    dtk::SurfaceComplex surface =
        dtk::build_simplicial_from_off(dtk::read_off(input_path));
    dtk::ComplexImage input = dtk::make_surface_image(surface);
    ThinningTimer timer;
    dtk::ComplexImage output =
        timer.time([&] { return dtk::thick_skeleton(input); });
    dtk::write_off(surviving_triangles(surface, output), output_path);
}

void write_edges(const dtk::SurfaceComplex& surface,
                 const dtk::ComplexImage& img, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw dtk::io_error("cannot open for writing: " + path);
    const dtk::CellComplex& complex = img.complex();
    for (int id = 0; id < complex.face_count(1); ++id)
        if (img.value(dtk::Face{1, id})) {
            const auto& e = surface.edge_vertices[static_cast<std::size_t>(id)];
            out << e[0] << " " << e[1] << "\n";
        }
    for (int id = 0; id < complex.face_count(0); ++id) {
        if (!img.value(dtk::Face{0, id}))
            continue;
        bool isolated = true;
        for (int e : complex.coboundary(dtk::Face{0, id}))
            if (img.value(dtk::Face{1, e})) {
                isolated = false;
                break;
            }
        if (isolated)
            out << id << "\n";
    }
    out.flush();
    if (!out)
        throw dtk::io_error("write failed: " + path);
}

void run_mesh_collapse(const std::string& input_path, int dim,
                       const std::string& output_path) {
    dtk::SurfaceComplex surface =
        dtk::build_simplicial_from_off(dtk::read_off(input_path));
    dtk::ComplexImage input = dtk::make_surface_image(surface);
    ThinningTimer timer;
    dtk::ComplexImage output =
        timer.time([&] { return dtk::ultimate_n_collapse(input); });
    if (dim == 2) {
        dtk::write_off(surviving_triangles(surface, output), output_path);
        return;
    }
    output.set_primary_dim(1);
    output = timer.time([&] { return dtk::ultimate_n_collapse(output); });
    write_edges(surface, output, output_path);
}

void run_gray_thin(const std::string& input_path,
                   const std::string& output_path) {
    dtk::GrayGridImage2 input = dtk::read_pgm(input_path);
    ThinningTimer timer;
    dtk::GrayGridImage2 output =
        timer.time([&] { return dtk::gray_thinning(input); });
    dtk::write_pgm(output, output_path);
}

void run_lut_dump(int conn) {
    const auto& bytes = dtk::build_simple_lut_2d(conn).bytes();
    std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                    static_cast<std::streamsize>(bytes.size()));
    std::cout.flush();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"digital topology toolkit: homotopic thinning on 2D/3D "
                 "grids, mesh surfaces and gray-level images"};
    app.require_subcommand(1);

    std::string input_path, output_path;
    bool end_points = false;
    bool use_lut = false;
    int collapse_dim = 2;
    int lut_conn = 4;

    CLI::App* thin2d = app.add_subcommand(
        "thin2d", "binary 2D thinning, foreground 4-connectivity");
    thin2d->add_option("--input", input_path, "input PBM")->required();
    thin2d->add_option("--output", output_path, "output PBM")->required();
    thin2d->add_flag("--end-points", end_points,
                     "preserve end points of the input image");

    CLI::App* thin3d = app.add_subcommand(
        "thin3d", "binary 3D thinning, foreground 26-connectivity");
    thin3d->add_option("--input", input_path, "input VOL")->required();
    thin3d->add_option("--output", output_path, "output VOL")->required();
    thin3d->add_flag("--lut", use_lut, "memoize voxel configurations");

    CLI::App* mesh_skel = app.add_subcommand(
        "mesh-skel", "thick skeleton of a triangle mesh");
    mesh_skel->add_option("--input", input_path, "input OFF")->required();
    mesh_skel->add_option("--output", output_path, "output OFF")->required();

    CLI::App* mesh_collapse = app.add_subcommand(
        "mesh-collapse", "free-pair collapse of a triangle mesh");
    mesh_collapse->add_option("--input", input_path, "input OFF")->required();
    mesh_collapse
        ->add_option("--dim", collapse_dim,
                     "2: triangle collapse to OFF; 1: continue to edge "
                     "collapse, write an edge list")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    mesh_collapse->add_option("--output", output_path, "output file")
        ->required();

    CLI::App* gray_thin =
        app.add_subcommand("gray-thin", "gray-level 2D thinning");
    gray_thin->add_option("--input", input_path, "input PGM")->required();
    gray_thin->add_option("--output", output_path, "output PGM")->required();

    CLI::App* lut = app.add_subcommand("lut", "simplicity LUT diagnostics");
    lut->require_subcommand(1);
    CLI::App* lut_dump = lut->add_subcommand(
        "dump", "write the packed 256-entry LUT (32 bytes) to stdout");
    lut_dump
        ->add_option("--conn", lut_conn, "foreground connectivity")
        ->required()
        ->check(CLI::IsMember({4, 8}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*thin2d)
            run_thin2d(input_path, output_path, end_points);
        else if (*thin3d)
            run_thin3d(input_path, output_path, use_lut);
        else if (*mesh_skel)
            run_mesh_skel(input_path, output_path);
        else if (*mesh_collapse)
            run_mesh_collapse(input_path, collapse_dim, output_path);
        else if (*gray_thin)
            run_gray_thin(input_path, output_path);
        else if (*lut_dump)
            run_lut_dump(lut_conn);
    } catch (const dtk::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dtk::format_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

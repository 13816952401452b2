#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypdisk/render.hpp"
#include "hypdisk/report.hpp"
#include "hypdisk/sampling.hpp"

namespace {

using namespace hypdisk;

constexpr int kExitBadInput = 2;
constexpr int kExitNoRoot = 3;
constexpr int kExitIo = 4;

struct GlobalOpts {
    double tol = 1e-8;
    bool radians = false;
    std::uint64_t seed = 0;
    std::string json_path;
};

double to_degrees(double angle, const GlobalOpts& g) {
    return g.radians ? angle * 180.0 / M_PI : angle;
}

void emit_report(const Report& r, const GlobalOpts& g) {
    std::cout << r.text();
    if (!g.json_path.empty()) {
        std::ofstream out(g.json_path);
        if (!out) throw std::ios_base::failure("cannot write " + g.json_path);
        out << r.json();
    }
}

int run_convert(const std::vector<double>& coords, const std::string& from,
                const std::string& to) {
    PoincarePoint p;
    if (from == "poincare") {
        if (coords.size() != 2) throw Error("poincare point needs 2 coordinates");
        p = PoincarePoint(coords[0], coords[1]);
    } else if (from == "klein") {
        if (coords.size() != 2) throw Error("klein point needs 2 coordinates");
        p = klein_to_poincare(KleinPoint(coords[0], coords[1]));
    } else if (from == "hemisphere") {
        if (coords.size() != 3) throw Error("hemisphere point needs 3 coordinates");
        p = g(HemispherePoint(coords[0], coords[1], coords[2]));
    } else {
        throw Error("unknown model: " + from);
    }
    if (to == "poincare") {
        std::cout << format_number(p.x) << " " << format_number(p.y) << "\n";
    } else if (to == "klein") {
        const KleinPoint k = poincare_to_klein(p);
        std::cout << format_number(k.x) << " " << format_number(k.y) << "\n";
    } else if (to == "hemisphere") {
        const HemispherePoint h = g_inv(p);
        std::cout << format_number(h.x) << " " << format_number(h.y) << " "
                  << format_number(h.z) << "\n";
    } else {
        throw Error("unknown model: " + to);
    }
    return 0;
}

Scene scene_from_args(const std::string& scene_path, const std::vector<double>& angles,
                      const std::vector<double>& sizes, double s1, bool chain,
                      const GlobalOpts& g) {
    if (!scene_path.empty()) {
        if (!angles.empty()) throw Error("give either a scene file or angles, not both");
        return load_scene(scene_path);
    }
    Scene scene;
    std::vector<double> deg;
    for (double a : angles) deg.push_back(to_degrees(a, g));
    if (chain) {
        if (deg.size() != 5 && deg.size() != 6) throw Error("chain needs 5 or 6 angles");
        scene.chain_deg = deg;
        scene.s1 = s1;
    } else {
        if (deg.size() != 6) throw Error("hexagon needs 6 angles");
        std::array<double, 6> a;
        std::copy(deg.begin(), deg.end(), a.begin());
        scene.hexagon_deg = a;
    }
    if (!sizes.empty()) {
        if (sizes.size() != 6) throw Error("--sizes needs 6 values");
        std::copy(sizes.begin(), sizes.end(), scene.sizes.begin());
    }
    validate_scene(scene);
    return scene;
}

// Completes a five-angle chain scene by solving for theta6.
double solve_scene_closure(const Scene& scene, double arc_lo_deg, double arc_hi_deg,
                           bool have_arc) {
    const auto& deg = *scene.chain_deg;
    std::array<double, 5> rad;
    for (int k = 0; k < 5; ++k) rad[k] = deg[k] * M_PI / 180.0;
    double lo, hi;
    if (have_arc) {
        lo = arc_lo_deg * M_PI / 180.0;
        hi = arc_hi_deg * M_PI / 180.0;
    } else {
        // Default: the free arc between theta5 and theta1, slightly inset.
        const double start = rad[4];
        double span = std::fmod(rad[0] + 2.0 * M_PI - rad[4], 2.0 * M_PI);
        if (span <= 0) span += 2.0 * M_PI;
        lo = start + 1e-6 * span + 1e-6;
        hi = start + span * (1.0 - 1e-6) - 1e-6;
    }
    const auto theta6 = solve_closure(rad, scene.s1, lo, hi);
    if (!theta6) throw std::range_error("no closure root in the search arc");
    double deg6 = std::fmod(*theta6 * 180.0 / M_PI, 360.0);
    if (deg6 < 0) deg6 += 360.0;
    return deg6;
}

int run_sample(int count, std::uint64_t seed, const std::string& mode) {
    if (count < 1) throw Error("count must be >= 1");
    Rng rng(seed);
    if (mode == "random") {
        double max_t3 = 0, max_trisum = 0;
        for (int i = 0; i < count; ++i) {
            const IdealHexagon hex = random_hexagon(rng);
            const SizeVector sizes = random_sizes(rng);
            const double perim = triangle_perimeter(small_triangle(hex));
            max_t3 = std::max(max_t3, theorem3_residual(hex) / (1.0 + perim));
            try {
                max_trisum = std::max(max_trisum, std::abs(trisum_residual(hex, sizes)));
            } catch (const DegenerateTriangle&) {
            }
        }
        std::cout << "count = " << count << "\n";
        std::cout << "max_theorem3_residual = " << format_number(max_t3) << "\n";
        std::cout << "max_trisum_residual = " << format_number(max_trisum) << "\n";
    } else if (mode == "symmetric") {
        double max_ap = 0, max_perim = 0;
        for (int i = 0; i < count; ++i) {
            const IdealHexagon hex = random_symmetric_hexagon(rng);
            max_ap = std::max(max_ap, std::abs(alternating_perimeter(hex)));
            max_perim = std::max(max_perim, triangle_perimeter(small_triangle(hex)));
        }
        std::cout << "count = " << count << "\n";
        std::cout << "max_abs_alternating_perimeter = " << format_number(max_ap) << "\n";
        std::cout << "max_triangle_perimeter = " << format_number(max_perim) << "\n";
    } else {
        throw Error("mode must be random or symmetric");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyperbolic-geometry verifier for tangent circle chains and ideal hexagons"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--tol", g.tol, "verification tolerance")->capture_default_str();
    app.add_flag("--radians", g.radians, "angles are given in radians");
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_option("--json", g.json_path, "also write the report as JSON to this path");

    // Let the global options above be given after the subcommand name too.
    auto add_sub = [&](const char* name, const char* desc) {
        auto* sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        return sub;
    };

    auto* convert = add_sub("convert", "convert a point between disk models");
    std::vector<double> coords;
    std::string from_model, to_model;
    convert->add_option("point", coords, "coordinates (2, or 3 for hemisphere)")
        ->expected(2, 3);
    convert->add_option("--from", from_model, "source model")->required();
    convert->add_option("--to", to_model, "target model")->required();

    auto* hexagon = add_sub("hexagon", "verify an ideal hexagon");
    std::vector<double> hex_angles, hex_sizes;
    std::string hex_scene;
    hexagon->add_option("angles", hex_angles, "six vertex angles")->expected(0, 6);
    hexagon->add_option("--sizes", hex_sizes, "six horodisk sizes")->delimiter(',');
    hexagon->add_option("--scene", hex_scene, "scene JSON file");

    auto* chain = add_sub("chain", "build or close a tangent circle chain");
    std::vector<double> chain_angles, chain_sizes;
    std::string chain_scene;
    double s1 = 1.0;
    bool do_solve = false;
    std::vector<double> arc;
    chain->add_option("angles", chain_angles, "five or six base angles")->expected(0, 6);
    chain->add_option("--s1", s1, "size of the first horodisk")->capture_default_str();
    chain->add_flag("--solve-closure", do_solve, "solve for the sixth angle");
    chain->add_option("--arc", arc, "search arc (lo hi) for --solve-closure")->expected(2);
    chain->add_option("--scene", chain_scene, "scene JSON file");

    auto* sample = add_sub("sample", "random property batches");
    int count = 1;
    std::string mode = "random";
    sample->add_option("--count", count, "number of samples")->capture_default_str();
    sample->add_option("--mode", mode, "random | symmetric")->capture_default_str();

    auto* render = add_sub("render", "write an SVG figure");
    std::vector<double> render_angles, render_sizes;
    std::string render_scene_path, out_path, layers;
    double render_s1 = 1.0;
    bool render_chain = false;
    render->add_option("angles", render_angles, "six angles")->expected(0, 6);
    render->add_option("--scene", render_scene_path, "scene JSON file");
    render->add_option("--out", out_path, "output SVG path")->required();
    render->add_option("--layers", layers, "comma-separated layer list");
    render->add_option("--s1", render_s1, "chain size s1");
    render->add_flag("--chain", render_chain, "treat the angles as a chain");
    render->add_option("--sizes", render_sizes, "six horodisk sizes")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (convert->parsed()) {
            return run_convert(coords, from_model, to_model);
        }
        if (hexagon->parsed()) {
            const Scene scene =
                scene_from_args(hex_scene, hex_angles, hex_sizes, 1.0, false, g);
            if (!scene.hexagon_deg) throw Error("hexagon subcommand needs a hexagon scene");
            emit_report(hexagon_report(*scene.hexagon_deg, scene.sizes, g.tol), g);
            return 0;
        }
        if (chain->parsed()) {
            const Scene scene =
                scene_from_args(chain_scene, chain_angles, chain_sizes, s1, true, g);
            if (!scene.chain_deg) throw Error("chain subcommand needs a chain scene");
            std::array<double, 6> deg;
            if (scene.chain_deg->size() == 5) {
                if (!do_solve) throw Error("five angles require --solve-closure");
                const double lo = arc.empty() ? 0 : to_degrees(arc[0], g);
                const double hi = arc.empty() ? 0 : to_degrees(arc[1], g);
                const double deg6 = solve_scene_closure(scene, lo, hi, !arc.empty());
                for (int k = 0; k < 5; ++k) deg[k] = (*scene.chain_deg)[k];
                deg[5] = deg6;
                std::cout << "theta6_deg = " << format_number(deg6) << "\n";
            } else {
                for (int k = 0; k < 6; ++k) deg[k] = (*scene.chain_deg)[k];
            }
            emit_report(chain_report(deg, scene.s1, g.tol), g);
            return 0;
        }
        if (sample->parsed()) {
            return run_sample(count, g.seed, mode);
        }
        if (render->parsed()) {
            Scene scene = scene_from_args(render_scene_path, render_angles, render_sizes,
                                          render_s1, render_chain, g);
            if (!layers.empty()) {
                scene.render.layers.clear();
                std::string item;
                for (char c : layers + ",") {
                    if (c == ',') {
                        if (!item.empty()) scene.render.layers.push_back(item);
                        item.clear();
                    } else {
                        item += c;
                    }
                }
            }
            const std::string svg = render_svg(scene);
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw std::ios_base::failure("cannot open " + out_path);
            out << svg;
            if (!out) throw std::ios_base::failure("write failed: " + out_path);
            return 0;
        }
    } catch (const std::range_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoRoot;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}

// Command-line frontend: Cech filtrations, persistent cohomology barcodes,
// Wu / Stiefel-Whitney classes of type n, and the sample-size bound.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "persw/persw.hpp"

namespace {

using nlohmann::ordered_json;

ordered_json support_json(const persw::Cochain& c) {
    ordered_json arr = ordered_json::array();
    for (const persw::Simplex& s : c.support) arr.push_back(s.vertices());
    return arr;
}

ordered_json classes_json(const std::vector<persw::PersistentClass>& classes) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const persw::PersistentClass& c = classes[i];
        ordered_json rec;
        rec["id"] = i;
        rec["degree"] = c.degree;
        rec["birth"] = c.birth;
        if (c.essential())
            rec["death"] = "inf";
        else
            rec["death"] = c.death;
        rec["representative"] = support_json(c.representative);
        arr.push_back(std::move(rec));
    }
    return arr;
}

ordered_json report_json(const persw::SWReport& report,
                         const std::vector<persw::PersistentClass>& classes) {
    ordered_json out;
    out["schema"] = "persw.sw-report/1";
    out["type"] = report.type_n;
    if (report.persistent)
        out["interval"] = {report.window_start, report.window_end};
    else
        out["scale"] = report.window_end;
    out["valid"] = report.valid;

    ordered_json wu = ordered_json::array();
    for (const persw::WuClass& v : report.wu) {
        ordered_json rec;
        rec["k"] = v.k;
        rec["support"] = support_json(v.representative);
        wu.push_back(std::move(rec));
    }
    out["wu"] = std::move(wu);

    ordered_json sw = ordered_json::array();
    for (std::size_t i = 0; i < report.sw.size(); ++i) {
        ordered_json rec;
        rec["k"] = static_cast<int>(i) + 1;
        rec["nontrivial"] = static_cast<bool>(report.sw_nontrivial[i]);
        rec["bars"] = report.sw_bars[i];
        rec["support"] = support_json(report.sw[i]);
        sw.push_back(std::move(rec));
    }
    out["sw"] = std::move(sw);

    if (report.failed_k >= 0) {
        out["failure"] = {
            {"k", report.failed_k},
            {"reason", report.failed_status == persw::WuStatus::absent_multiple
                           ? "multiple"
                           : "none"}};
    }
    if (report.persistent) {
        ordered_json checks = ordered_json::array();
        for (const persw::EndpointCheck& ec : report.endpoint_checks) {
            checks.push_back({{"bar", ec.bar},
                              {"degree", ec.degree},
                              {"endpoint", ec.endpoint},
                              {"passed", ec.passed}});
        }
        out["endpoint_checks"] = std::move(checks);
        out["betti_unstable_degrees"] = report.betti_unstable_degrees;
    }
    out["classes"] = classes_json(classes);
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Persistent cohomology, Wu classes and Stiefel-Whitney classes "
                 "of Cech-type filtrations over Z/2"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker count for data-parallel stages")
        ->capture_default_str();

    // cech
    auto* cech = app.add_subcommand("cech", "build a Cech filtration from a point cloud");
    std::string cech_in, cech_out;
    int cech_maxdim = 3;
    double cech_maxscale = 1.0;
    cech->add_option("--input", cech_in, "point cloud file (one point per line)")
        ->required();
    cech->add_option("--output", cech_out, "filtered complex output file")->required();
    cech->add_option("--max-dim", cech_maxdim, "largest simplex dimension")
        ->capture_default_str();
    cech->add_option("--max-scale", cech_maxscale, "largest filtration scale")
        ->required();

    // barcodes
    auto* barcodes = app.add_subcommand("barcodes", "persistent cohomology barcodes");
    std::string bc_in, bc_out;
    int bc_maxdeg = 1;
    barcodes->add_option("--input", bc_in, "filtered complex file")->required();
    barcodes->add_option("--output", bc_out, "barcode JSON output")->required();
    barcodes->add_option("--max-degree", bc_maxdeg, "largest cohomology degree")
        ->capture_default_str();

    // sw
    auto* sw = app.add_subcommand("sw", "Stiefel-Whitney classes of type n at a scale");
    std::string sw_in, sw_out, sw_plot;
    int sw_n = 2;
    double sw_scale = -1;
    sw->add_option("--input", sw_in, "filtered complex file")->required();
    sw->add_option("--output", sw_out, "report JSON output")->required();
    sw->add_option("--type-n", sw_n, "type of the classes")->required();
    sw->add_option("--scale", sw_scale, "filtration scale (default: maximum)");
    sw->add_option("--plot", sw_plot, "barcode plot SVG output");

    // persistent-sw
    auto* psw = app.add_subcommand("persistent-sw",
                                   "persistent Stiefel-Whitney classes over an interval");
    std::string psw_in, psw_out, psw_plot;
    int psw_n = 2;
    std::vector<double> psw_interval;
    psw->add_option("--input", psw_in, "filtered complex file")->required();
    psw->add_option("--output", psw_out, "report JSON output")->required();
    psw->add_option("--type-n", psw_n, "type of the classes")->required();
    psw->add_option("--interval", psw_interval, "filtration interval S T")
        ->expected(2)
        ->required();
    psw->add_option("--plot", psw_plot, "barcode plot SVG output");

    // nsw-bound
    auto* bound = app.add_subcommand("nsw-bound", "sample-size bound for recovering "
                                                  "the classes with high probability");
    double b_tau = 0, b_vol = 0, b_eps = 0, b_delta = 0;
    int b_dim = 0;
    bound->add_option("--tau", b_tau, "reach lower bound")->required();
    bound->add_option("--vol", b_vol, "volume upper bound")->required();
    bound->add_option("--dim", b_dim, "intrinsic dimension n")->required();
    bound->add_option("--eps", b_eps, "ball radius, must be < tau/2")->required();
    bound->add_option("--delta", b_delta, "failure probability")->required();

    // validate
    auto* validate = app.add_subcommand("validate", "check a filtered complex file");
    std::string val_in;
    validate->add_option("--input", val_in, "filtered complex file")->required();

    // sample
    auto* sample = app.add_subcommand("sample", "generate a synthetic point cloud");
    std::string smp_shape = "klein4d", smp_out;
    std::size_t smp_count = 160;
    std::uint64_t smp_seed = 0;
    sample->add_option("--shape", smp_shape, "klein4d | torus3d | sphere2")
        ->capture_default_str();
    sample->add_option("--count", smp_count, "number of points")->capture_default_str();
    sample->add_option("--seed", smp_seed, "jitter seed")->capture_default_str();
    sample->add_option("--output", smp_out, "point cloud output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cech) {
            persw::PointCloud pc = persw::load_points(cech_in);
            persw::FilteredComplex fc =
                persw::cech_filtration(pc, cech_maxdim, cech_maxscale, threads);
            persw::save_complex(fc, cech_out);
            std::cerr << "wrote " << fc.size() << " cells to " << cech_out << "\n";
        } else if (*barcodes) {
            persw::FilteredComplex fc = persw::load_complex(bc_in);
            std::vector<std::string> warnings;
            auto classes = persw::persistent_cohomology(fc, bc_maxdeg, &warnings);
            print_warnings(warnings);
            ordered_json out;
            out["schema"] = "persw.barcodes/1";
            out["max_degree"] = bc_maxdeg;
            out["classes"] = classes_json(classes);
            write_text(bc_out, out.dump(2) + "\n");
        } else if (*sw) {
            persw::FilteredComplex fc = persw::load_complex(sw_in);
            const double r = sw_scale < 0 ? fc.max_scale() : sw_scale;
            if (fc.dimension() < sw_n + 1)
                std::cerr << "warning: complex dimension " << fc.dimension()
                          << " is below type + 1 = " << sw_n + 1
                          << "; top-degree kernels may be overestimated\n";
            auto classes = persw::persistent_cohomology(fc, sw_n);
            persw::SWReport report = persw::sw_at_scale(fc, r, sw_n, classes, threads);
            write_text(sw_out, report_json(report, classes).dump(2) + "\n");
            if (!sw_plot.empty()) persw::emit_barcode_plot(classes, &report, sw_plot);
            if (!report.valid) return 2;
        } else if (*psw) {
            persw::FilteredComplex fc = persw::load_complex(psw_in);
            if (fc.dimension() < psw_n + 1)
                std::cerr << "warning: complex dimension " << fc.dimension()
                          << " is below type + 1 = " << psw_n + 1
                          << "; top-degree kernels may be overestimated\n";
            auto classes = persw::persistent_cohomology(fc, psw_n);
            persw::SWReport report = persw::persistent_sw(fc, psw_interval[0],
                                                          psw_interval[1], psw_n, classes,
                                                          threads);
            write_text(psw_out, report_json(report, classes).dump(2) + "\n");
            if (!psw_plot.empty()) persw::emit_barcode_plot(classes, &report, psw_plot);
            if (!report.valid) return 2;
        } else if (*bound) {
            const double n = persw::nsw_sample_bound(b_tau, b_vol, b_dim, b_eps, b_delta);
            std::printf("%.17g\n", n);
        } else if (*validate) {
            persw::FilteredComplex fc = persw::load_complex(val_in);
            std::cerr << "ok: " << fc.size() << " cells, dimension " << fc.dimension()
                      << "\n";
        } else if (*sample) {
            persw::PointCloud pc;
            if (smp_shape == "klein4d")
                pc = persw::sample_klein_bottle_r4(smp_count, smp_seed);
            else if (smp_shape == "torus3d")
                pc = persw::sample_torus_r3(smp_count, smp_seed);
            else if (smp_shape == "sphere2")
                pc = persw::sample_sphere_r3(smp_count, smp_seed);
            else
                throw std::runtime_error("unknown shape '" + smp_shape + "'");
            persw::save_points(pc, smp_out);
            std::cerr << "wrote " << pc.size() << " points to " << smp_out << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

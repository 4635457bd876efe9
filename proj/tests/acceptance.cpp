// Acceptance suite: runs every gate criterion end to end and prints one
// pass/fail line each. Exits nonzero if any criterion fails.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "persw/persw.hpp"
#include "support/oracles.hpp"
#include "support/random_complex.hpp"
#include "support/wu_bruteforce.hpp"

using namespace persw;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int criterion, const char* name, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, name,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Fixture {
    const char* name;
    FilteredComplex fc;
    int n;
};

std::vector<Fixture> manifold_fixtures() {
    std::vector<Fixture> out;
    out.push_back({"S2", triangulations::sphere2(), 2});
    out.push_back({"torus7", triangulations::torus7(), 2});
    out.push_back({"klein9", triangulations::klein_bottle9(), 2});
    out.push_back({"rp2_6", triangulations::projective_plane6(), 2});
    out.push_back({"cp2_9", triangulations::cp2_9(), 4});
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "<unreadable:" + path + ">";
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

// ---------------------------------------------------------------------------
// 1. Fixture Stiefel-Whitney table

void criterion1() {
    struct Want {
        const char* name;
        int n;
        bool w1, w2;
    };
    const Want wants[] = {{"S2", 2, false, false},
                          {"torus7", 2, false, false},
                          {"klein9", 2, true, false},
                          {"rp2_6", 2, true, true},
                          {"cp2_9", 4, false, true}};
    bool ok = true;
    std::string detail;
    for (const Want& want : wants) {
        FilteredComplex fc;
        for (Fixture& f : manifold_fixtures())
            if (std::string(f.name) == want.name) fc = std::move(f.fc);
        const auto t0 = std::chrono::steady_clock::now();
        SWReport rep = sw_at_scale(fc, fc.max_scale(), want.n);
        const double dt = seconds_since(t0);
        const bool good = rep.valid && rep.sw_nontrivial[0] == want.w1 &&
                          rep.sw_nontrivial[1] == want.w2 && dt < 5.0;
        detail += std::string(want.name) + (good ? " ok " : " BAD ");
        if (!good) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "(valid=%d w1=%d w2=%d t=%.2fs) ",
                          rep.valid ? 1 : 0, rep.sw_nontrivial[0] ? 1 : 0,
                          rep.sw_nontrivial[1] ? 1 : 0, dt);
            detail += buf;
        }
        ok = ok && good;
    }
    report(1, "fixture SW table (S2, torus, Klein, RP2, CP2)", ok, detail);
}

// ---------------------------------------------------------------------------
// 2. Steenrod axiom suite

void criterion2() {
    std::size_t checks = 0, failed = 0;
    for (const Fixture& fx : manifold_fixtures()) {
        const Scale top = fx.fc.max_scale();
        const int dim = fx.fc.dimension();
        auto classes = persistent_cohomology(fx.fc, dim);
        std::vector<Cochain> cocycles;
        for (int p = 0; p <= dim; ++p) {
            ScaleBasis basis = basis_at_scale(classes, p, top, fx.fc);
            cocycles.insert(cocycles.end(), basis.cochains.begin(), basis.cochains.end());
        }
        for (const Cochain& c : cocycles) {
            const int p = c.degree;
            // Sq^0 = id
            ++checks;
            if (steenrod_square(0, c, fx.fc).support != c.support) ++failed;
            // Sq^k = 0 above the degree
            ++checks;
            if (!steenrod_square(p + 1, c, fx.fc).zero()) ++failed;
            // top degree: [Sq^p x] = [x cup x]
            ++checks;
            if (!is_cohomologous(steenrod_square(p, c, fx.fc), cup_product(c, c, fx.fc),
                                 fx.fc))
                ++failed;
            // naturality under restriction, every proper scale
            for (Scale r : fx.fc.scales()) {
                if (r >= top) continue;
                FilteredComplex sub = fx.fc.sub_complex(r);
                for (int k = 0; k <= p; ++k) {
                    ++checks;
                    Cochain lhs = restrict_cochain(steenrod_square(k, c, fx.fc), r, fx.fc);
                    Cochain rhs = steenrod_square(k, restrict_cochain(c, r, fx.fc), sub);
                    if (!is_cohomologous(lhs, rhs, sub)) ++failed;
                }
            }
        }
        // Cartan formula where both sides are computable
        for (const Cochain& x : cocycles) {
            for (const Cochain& y : cocycles) {
                for (int k = 1; k <= 2; ++k) {
                    if (x.degree + y.degree + k > dim) continue;
                    ++checks;
                    Cochain lhs = steenrod_square(k, cup_product(x, y, fx.fc), fx.fc);
                    Cochain rhs{x.degree + y.degree + k, top, {}};
                    for (int i = 0; i <= k; ++i)
                        rhs = cochain_sum(
                            rhs, cup_product(steenrod_square(i, x, fx.fc),
                                             steenrod_square(k - i, y, fx.fc), fx.fc));
                    if (!is_cohomologous(lhs, rhs, fx.fc)) ++failed;
                }
            }
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%zu checks, %zu failures", checks, failed);
    report(2, "Steenrod axiom suite on all fixtures", failed == 0 && checks > 100, buf);
}

// ---------------------------------------------------------------------------
// 3. Persistence vs brute-force persistent Betti numbers

void criterion3() {
    std::mt19937_64 rng(20240901);
    std::size_t filtrations = 0, pairs = 0, mismatches = 0;
    while (filtrations < 200) {
        FilteredComplex fc = testsupport::random_filtration(rng, 7, 3, 60);
        if (fc.size() > 60) continue;
        ++filtrations;
        auto classes = persistent_cohomology(fc, 2);
        const auto& scales = fc.scales();
        for (std::size_t a = 0; a < scales.size(); ++a)
            for (std::size_t b = a; b < scales.size(); ++b)
                for (int p = 0; p <= 2; ++p) {
                    std::size_t count = 0;
                    for (const auto& c : classes)
                        if (c.degree == p && c.birth <= scales[a] && c.death > scales[b])
                            ++count;
                    ++pairs;
                    if (count != testsupport::persistent_betti(fc, p, scales[a], scales[b]))
                        ++mismatches;
                }
    }
    char buf[120];
    std::snprintf(buf, sizeof(buf), "%zu filtrations, %zu rank comparisons, %zu mismatches",
                  filtrations, pairs, mismatches);
    report(3, "barcodes match brute-force persistent Betti ranks", mismatches == 0, buf);
}

// ---------------------------------------------------------------------------
// 4. Wu solver vs brute-force enumeration

void criterion4() {
    std::vector<Fixture> items = manifold_fixtures();
    items.push_back({"circle-as-2", triangulations::circle3(), 2});
    std::size_t compared = 0, disagreements = 0;
    for (const Fixture& item : items) {
        const Scale r = item.fc.max_scale();
        auto classes = persistent_cohomology(item.fc, item.n);
        for (int k = 0; k <= item.n; ++k) {
            auto brute = testsupport::wu_class_brute(item.fc, r, item.n, k, classes);
            auto solved = wu_class(item.fc, r, item.n, k, classes);
            ++compared;
            if (solved.has_value() != (brute.count == 1)) {
                ++disagreements;
                continue;
            }
            if (solved && !is_cohomologous(solved->representative, brute.unique_class,
                                           item.fc))
                ++disagreements;
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%zu degree/fixture pairs, %zu disagreements",
                  compared, disagreements);
    report(4, "Wu linear solve equals brute-force enumeration", disagreements == 0, buf);
}

// ---------------------------------------------------------------------------
// 5. Klein-bottle point cloud in R^4

void criterion5() {
    const auto t0 = std::chrono::steady_clock::now();
    PointCloud pc = sample_klein_bottle_r4(160, 1);
    FilteredComplex fc = cech_filtration(pc, 3, 0.85, 1);
    auto classes = persistent_cohomology(fc, 2);

    // locate the widest window where the Betti triple is (1,2,1)
    const auto& scales = fc.scales();
    double best_s = -1, best_e = -1, cur = -1, prev = -1;
    auto betti_triple = [&](Scale r) {
        std::array<std::size_t, 3> b{0, 0, 0};
        for (const auto& c : classes)
            if (c.degree <= 2 && c.contains(r)) ++b[static_cast<std::size_t>(c.degree)];
        return b;
    };
    for (Scale r : scales) {
        const auto b = betti_triple(r);
        const bool klein = b[0] == 1 && b[1] == 2 && b[2] == 1;
        if (klein && cur < 0) cur = r;
        if (!klein && cur >= 0) {
            if (prev - cur > best_e - best_s) {
                best_s = cur;
                best_e = prev;
            }
            cur = -1;
        }
        prev = r;
    }
    if (cur >= 0 && scales.back() - cur > best_e - best_s) {
        best_s = cur;
        best_e = scales.back();
    }
    if (best_s < 0) {
        report(5, "Klein-bottle point cloud (160 samples, R^4)", false,
               "no (1,2,1) window found");
        return;
    }

    // independent rank check of the Betti triple at both window ends
    bool ranks_ok = true;
    for (Scale r : {best_s, best_e}) {
        ranks_ok = ranks_ok && betti_at(fc, 0, r) == 1 && betti_at(fc, 1, r) == 2 &&
                   betti_at(fc, 2, r) == 1;
    }

    SWReport rep = persistent_sw(fc, best_s, best_e, 2, 1);

    const fs::path dir = fs::temp_directory_path() / "persw_accept";
    fs::create_directories(dir);
    const std::string plot = (dir / "klein.svg").string();
    emit_barcode_plot(classes, &rep, plot);

    // the sidecar must highlight exactly the w1-constituent bars
    std::string side = slurp(plot + ".json");
    std::size_t highlighted = 0;
    for (std::size_t pos = side.find("\"highlighted\": true"); pos != std::string::npos;
         pos = side.find("\"highlighted\": true", pos + 1))
        ++highlighted;

    const double dt = seconds_since(t0);
    const bool ok = ranks_ok && rep.valid && rep.sw_nontrivial[0] &&
                    !rep.sw_nontrivial[1] && !rep.sw_bars[0].empty() &&
                    rep.sw_bars[1].empty() && highlighted == rep.sw_bars[0].size() &&
                    dt < 300.0;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "window [%.4f, %.4f], %zu cells, valid=%d w1=%d w2=%d, "
                  "%zu bars highlighted, %.1fs single-threaded",
                  best_s, best_e, fc.size(), rep.valid ? 1 : 0,
                  rep.sw_nontrivial[0] ? 1 : 0, rep.sw_nontrivial[1] ? 1 : 0, highlighted,
                  dt);
    report(5, "Klein-bottle point cloud (160 samples, R^4)", ok, buf);
}

// ---------------------------------------------------------------------------
// 6. Sample-size bound vs extended-precision oracle

void criterion6() {
    using ext = boost::multiprecision::cpp_bin_float_50;
    auto oracle = [](double tau, double vol, int n, double eps, double delta) {
        const ext t = tau, v = vol, e = eps, d = delta;
        const ext th1 = asin(e / (8 * t)), th2 = asin(e / (16 * t));
        auto ball = [n](const ext& r) {
            return pow(r, n) * pow(boost::math::constants::pi<ext>(), ext(n) / 2) /
                   tgamma(ext(n) / 2 + 1);
        };
        const ext b1 = v / (pow(cos(th1), n) * ball(e / 4));
        const ext b2 = v / (pow(cos(th2), n) * ball(e / 8));
        return static_cast<double>(b1 * (log(b2) + log(1 / d)));
    };

    std::size_t evaluated = 0, off = 0;
    for (int i = 0; i < 100; ++i) {
        const double tau = 0.4 + 0.35 * (i % 5);
        const double vol = 2.0 + 9.7 * (i % 10);
        const int n = 1 + i % 4;
        const double eps = tau * (0.06 + 0.038 * (i % 11));
        const double delta = 0.002 + 0.09 * (i % 10);
        const double got = nsw_sample_bound(tau, vol, n, eps, delta);
        const double want = oracle(tau, vol, n, eps, delta);
        ++evaluated;
        if (std::abs(got - want) > 1e-9 * std::abs(want)) ++off;
    }
    bool rejects = false;
    try {
        nsw_sample_bound(1.0, 5.0, 2, 0.5, 0.1);
    } catch (const std::domain_error&) {
        rejects = true;
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf),
                  "%zu grid points, %zu beyond 1e-9; rejects eps >= tau/2: %s", evaluated,
                  off, rejects ? "yes" : "NO");
    report(6, "sample-size bound matches the extended-precision oracle",
           off == 0 && rejects, buf);
}

// ---------------------------------------------------------------------------
// 7. CLI determinism

int run(const std::string& cmd) { return std::system(cmd.c_str()); }

void criterion7() {
    const std::string tool = PERSW_TOOL_PATH;
    const std::string data = PERSW_DATA_DIR;
    const fs::path dir = fs::temp_directory_path() / "persw_accept";
    fs::create_directories(dir);
    const std::string d = dir.string() + "/";
    bool ok = true;
    std::string detail;

    auto expect = [&](const std::string& cmd, int want_code) {
        const int code = run(cmd + " 2>/dev/null");
        if (WEXITSTATUS(code) != want_code) {
            ok = false;
            detail += "exit(" + cmd + ")=" + std::to_string(WEXITSTATUS(code)) + " ";
        }
    };
    auto same = [&](const std::string& a, const std::string& b, const char* what) {
        if (slurp(a) != slurp(b)) {
            ok = false;
            detail += std::string("differs: ") + what + " ";
        }
    };

    // sample + cech, twice and across thread counts
    expect(tool + " sample --shape klein4d --count 40 --seed 3 --output " + d + "pts1.csv",
           0);
    expect(tool + " sample --shape klein4d --count 40 --seed 3 --output " + d + "pts2.csv",
           0);
    same(d + "pts1.csv", d + "pts2.csv", "sample");
    expect(tool + " cech --input " + d + "pts1.csv --max-dim 3 --max-scale 0.8 --output " +
               d + "cech1.txt",
           0);
    expect(tool + " cech --input " + d + "pts1.csv --max-dim 3 --max-scale 0.8 --output " +
               d + "cech2.txt",
           0);
    expect(tool + " --threads 4 cech --input " + d +
               "pts1.csv --max-dim 3 --max-scale 0.8 --output " + d + "cech4.txt",
           0);
    same(d + "cech1.txt", d + "cech2.txt", "cech rerun");
    same(d + "cech1.txt", d + "cech4.txt", "cech threads");
    expect(tool + " cech --input " + data + "/triangle.csv --max-dim 2 --max-scale 1 "
               "--output " + d + "tri.txt",
           0);

    const char* fixtures[] = {"s2", "torus7", "rp2_6", "klein9", "cp2_9", "circle"};
    for (const char* name : fixtures) {
        const std::string in = data + "/" + name + ".txt";
        expect(tool + " validate --input " + in, 0);
        const int maxdeg = std::string(name) == "cp2_9" ? 4 : 2;
        expect(tool + " barcodes --input " + in + " --max-degree " +
                   std::to_string(maxdeg) + " --output " + d + name + "_bars1.json",
               0);
        expect(tool + " barcodes --input " + in + " --max-degree " +
                   std::to_string(maxdeg) + " --output " + d + name + "_bars2.json",
               0);
        same(d + name + "_bars1.json", d + name + "_bars2.json", name);
    }

    struct SwRun {
        const char* name;
        int n;
        int exit_code;
    };
    const SwRun sw_runs[] = {{"s2", 2, 0},     {"torus7", 2, 0}, {"rp2_6", 2, 0},
                             {"klein9", 2, 0}, {"cp2_9", 4, 0},  {"circle", 2, 2}};
    for (const SwRun& srun : sw_runs) {
        const std::string in = data + "/" + srun.name + ".txt";
        const std::string base = d + srun.name + "_sw";
        expect(tool + " sw --input " + in + " --type-n " + std::to_string(srun.n) +
                   " --output " + base + "1.json --plot " + base + "1.svg",
               srun.exit_code);
        expect(tool + " --threads 4 sw --input " + in + " --type-n " +
                   std::to_string(srun.n) + " --output " + base + "2.json --plot " + base +
                   "2.svg",
               srun.exit_code);
        same(base + "1.json", base + "2.json", srun.name);
        same(base + "1.svg", base + "2.svg", srun.name);
        same(base + "1.svg.json", base + "2.svg.json", srun.name);
    }

    expect(tool + " persistent-sw --input " + data +
               "/rp2_6.txt --type-n 2 --interval 0 2 --output " + d +
               "rp2_psw1.json --plot " + d + "rp2_psw1.svg",
           0);
    expect(tool + " --threads 4 persistent-sw --input " + data +
               "/rp2_6.txt --type-n 2 --interval 0 2 --output " + d +
               "rp2_psw2.json --plot " + d + "rp2_psw2.svg",
           0);
    same(d + "rp2_psw1.json", d + "rp2_psw2.json", "persistent-sw");
    same(d + "rp2_psw1.svg", d + "rp2_psw2.svg", "persistent-sw plot");

    expect(tool + " nsw-bound --tau 1 --vol 39.478417604357434 --dim 2 --eps 0.25 "
               "--delta 0.01 > " + d + "bound1.txt",
           0);
    expect(tool + " nsw-bound --tau 1 --vol 39.478417604357434 --dim 2 --eps 0.25 "
               "--delta 0.01 > " + d + "bound2.txt",
           0);
    same(d + "bound1.txt", d + "bound2.txt", "nsw-bound");
    expect(tool + " nsw-bound --tau 1 --vol 10 --dim 2 --eps 0.6 --delta 0.01", 1);
    expect(tool + " validate --input " + data + "/does_not_exist.txt", 1);

    // input error paths
    {
        std::ofstream empty(d + "empty.csv");
        std::ofstream bad(d + "bad.csv");
        bad << "1 2\n3 oops\n";
    }
    expect(tool + " cech --input " + d + "empty.csv --max-dim 2 --max-scale 1 --output " +
               d + "empty.txt",
           0);
    expect(tool + " validate --input " + d + "empty.txt", 0);
    expect(tool + " cech --input " + d + "bad.csv --max-dim 2 --max-scale 1 --output " + d +
               "bad.txt",
           1);
    expect(tool + " barcodes --input " + d + "bad.csv --max-degree 1 --output " + d +
               "x.json",
           1);

    report(7, "CLI runs are byte-deterministic across reruns and thread counts", ok,
           detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}

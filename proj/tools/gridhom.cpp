#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gridhom/cobordism.hpp"
#include "gridhom/gridio.hpp"
#include "gridhom/homology.hpp"
#include "gridhom/verify.hpp"

using nlohmann::json;
namespace fs = std::filesystem;
using namespace gridhom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitObstructed = 10;

int default_jobs() {
    if (const char* env = std::getenv("GRIDHOM_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

json grid_json(const GridDiagram& G) {
    return json{{"n", G.n}, {"X", G.X}, {"O", G.O}};
}

json lambda_json(const LambdaReport& rep) {
    auto side = [](const LambdaSide& s) {
        return json{{"M", s.bigrading.m},
                    {"twoA", s.bigrading.twoA},
                    {"enhanced_vanishes", s.enhanced_vanishes},
                    {"classical_vanishes", s.classical_vanishes}};
    };
    return json{{"plus", side(rep.plus)}, {"minus", side(rep.minus)}};
}

struct InfoData {
    GridDiagram G;
    ClassicalInvariants inv;
    Bigrading plus, minus;
};

InfoData info_of(const GridDiagram& G) {
    GridComplex C(G);
    return {G, classical_invariants(G), C.gradings(canonical_x_plus(G)),
            C.gradings(canonical_x_minus(G))};
}

void print_info(const InfoData& d, const std::string& format) {
    if (format == "json") {
        json j{{"grid", grid_json(d.G)},
               {"n", d.G.n},
               {"components", d.inv.components},
               {"tb", d.inv.tb},
               {"rot", d.inv.rot},
               {"sl", d.inv.sl},
               {"x_plus", {{"M", d.plus.m}, {"twoA", d.plus.twoA}}},
               {"x_minus", {{"M", d.minus.m}, {"twoA", d.minus.twoA}}}};
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "n: " << d.G.n << "\n"
              << "components: " << d.inv.components << "\n"
              << "tb: " << d.inv.tb << "\n"
              << "rot: " << d.inv.rot << "\n"
              << "sl: " << d.inv.sl << "\n"
              << "M(x+): " << d.plus.m << "  2A(x+): " << d.plus.twoA << "\n"
              << "M(x-): " << d.minus.m << "  2A(x-): " << d.minus.twoA << "\n";
}

struct BatchRow {
    std::string path;
    std::string line;
};

std::string batch_line(const std::string& path, int jobs, bool timing) {
    auto t0 = std::chrono::steady_clock::now();
    GridDiagram G = load_grid(path);
    InfoData d = info_of(G);
    LambdaReport rep = HomologyEngine(G, jobs).lambda_report();
    double secs =
        timing ? std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                     .count()
               : 0.0;
    std::ostringstream os;
    os << path << ',' << G.n << ',' << d.inv.components << ',' << d.inv.tb << ','
       << d.inv.rot << ',' << d.plus.m << ',' << d.plus.twoA << ',' << d.minus.m << ','
       << d.minus.twoA << ',' << (rep.plus.enhanced_vanishes ? 0 : 1) << ','
       << (rep.minus.enhanced_vanishes ? 0 : 1) << ','
       << (rep.plus.classical_vanishes ? 0 : 1) << ','
       << (rep.minus.classical_vanishes ? 0 : 1) << ',' << std::fixed
       << std::setprecision(3) << secs;
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grid homology of links: double-point enhanced GRID invariants"};
    app.require_subcommand(1);

    std::string path, path2, format = "text", theory = "tilde-big", suite = "all";
    std::string out_path;
    int jobs = default_jobs();
    int v_cutoff = -1;
    uint64_t seed = 1;
    int max_n = 5;
    bool timing = false;

    auto* info = app.add_subcommand("info", "classical invariants and gradings");
    info->add_option("path", path)->required();
    info->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* lambda = app.add_subcommand("lambda", "GRID class vanishing report");
    lambda->add_option("path", path)->required();
    lambda->add_option("--jobs", jobs);

    auto* hom = app.add_subcommand("homology", "bigraded homology dimensions");
    hom->add_option("path", path)->required();
    hom->add_option("--theory", theory)->check(CLI::IsMember({"tilde", "tilde-big"}));
    hom->add_option("--v-cutoff", v_cutoff);
    hom->add_option("--jobs", jobs);

    auto* obs = app.add_subcommand("obstruct", "decomposable Lagrangian cobordism check");
    obs->add_option("from", path)->required();
    obs->add_option("to", path2)->required();
    obs->add_option("--jobs", jobs);

    auto* ver = app.add_subcommand("verify", "run the mechanized identity suites");
    ver->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "d2", "grading", "comm", "stab", "pinch", "birth",
                               "lambda", "w", "invariance"}));
    ver->add_option("--seed", seed);
    ver->add_option("--max-n", max_n);
    ver->add_option("--jobs", jobs);

    auto* batch = app.add_subcommand("batch", "one CSV row per grid file in a directory");
    batch->add_option("dir", path)->required();
    batch->add_option("--jobs", jobs);
    batch->add_option("--out", out_path);
    batch->add_flag("--timing", timing,
                    "fill the seconds column (off by default so reruns are "
                    "byte-identical)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*info) {
            print_info(info_of(load_grid(path)), format);
        } else if (*lambda) {
            GridDiagram G = load_grid(path);
            LambdaReport rep = HomologyEngine(G, jobs).lambda_report();
            json j{{"grid", grid_json(G)},
                   {"lambda", lambda_json(rep)},
                   {"implication_ok", rep.implication_ok}};
            std::cout << j.dump(2) << "\n";
        } else if (*hom) {
            GridDiagram G = load_grid(path);
            HomologyEngine H(G, jobs);
            Theory t = theory == "tilde" ? Theory::TildeOX : Theory::TildeOXBig;
            int cutoff = v_cutoff >= 0 ? v_cutoff : H.default_v_cutoff();
            BigradedDims dims = H.homology_dims(t, cutoff);
            LambdaReport rep = H.lambda_report();
            json jd = json::array();
            for (auto& [bg, dim] : dims.dims)
                jd.push_back(json::array({bg.m, bg.twoA, dim}));
            json j{{"grid", grid_json(G)},
                   {"theory", theory_name(t)},
                   {"dims", jd},
                   {"lambda", lambda_json(rep)},
                   {"v_cutoff", dims.v_cutoff}};
            std::cout << j.dump(2) << "\n";
        } else if (*obs) {
            GridDiagram from = load_grid(path);
            GridDiagram to = load_grid(path2);
            ObstructionReport r = obstruct_cobordism(from, to, jobs);
            json j{{"from", grid_json(from)},
                   {"to", grid_json(to)},
                   {"classical", {{"rot_match", r.rot_match}, {"chi", r.chi}}},
                   {"lambda_plus",
                    {{"from", r.plus_vanishes_from}, {"to", r.plus_vanishes_to}}},
                   {"lambda_minus",
                    {{"from", r.minus_vanishes_from}, {"to", r.minus_vanishes_to}}},
                   {"verdict",
                    r.obstructed ? "OBSTRUCTED" : "NOT_OBSTRUCTED_BY_THESE_INVARIANTS"},
                   {"shift", json::array({r.shift_a, r.shift_twoB})}};
            if (!r.reason.empty()) j["reason"] = r.reason;
            std::cout << j.dump(2) << "\n";
            return r.obstructed ? kExitObstructed : kExitOk;
        } else if (*ver) {
            VerifyOptions opt;
            opt.seed = seed;
            opt.max_n = max_n;
            opt.jobs = jobs;
            bool all_pass = true;
            for (auto& chk : run_verify_suite(suite, opt)) {
                all_pass = all_pass && chk.pass;
                std::cout << (chk.pass ? "PASS" : "FAIL") << "  " << chk.name << "  ("
                          << chk.checked << " checks, " << std::fixed
                          << std::setprecision(2) << chk.seconds << "s)";
                if (!chk.pass) std::cout << "  " << chk.detail;
                std::cout << "\n";
            }
            return all_pass ? kExitOk : kExitInternal;
        } else if (*batch) {
            std::vector<std::string> files;
            for (auto& e : fs::directory_iterator(path)) {
                if (!e.is_regular_file()) continue;
                auto ext = e.path().extension().string();
                if (ext == ".json" || ext == ".txt" || ext == ".grid")
                    files.push_back(e.path().string());
            }
            std::sort(files.begin(), files.end());
            // Fan out over files; rows are assembled in path order regardless
            // of completion order.
            std::vector<std::future<std::string>> rows;
            rows.reserve(files.size());
            std::atomic<size_t> next{0};
            int pool = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
            std::vector<std::string> results(files.size());
            std::vector<std::thread> workers;
            for (int t = 0; t < pool; ++t)
                workers.emplace_back([&] {
                    for (size_t i = next++; i < files.size(); i = next++)
                        results[i] = batch_line(files[i], 1, timing);
                });
            for (auto& w : workers) w.join();
            std::ostringstream os;
            os << "path,n,components,tb,rot,M_plus,twoA_plus,M_minus,twoA_minus,"
                  "lambda_plus_big,lambda_minus_big,lambda_plus,lambda_minus,seconds\n";
            for (auto& r : results) os << r << "\n";
            if (out_path.empty()) {
                std::cout << os.str();
            } else {
                std::ofstream of(out_path, std::ios::binary);
                of << os.str();
            }
        }
    } catch (const GridError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code == GridErrorCode::ParseError ||
                       e.code == GridErrorCode::NotPermutation ||
                       e.code == GridErrorCode::SharedSquare ||
                       e.code == GridErrorCode::SizeTooSmall
                   ? kExitParse
                   : kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}

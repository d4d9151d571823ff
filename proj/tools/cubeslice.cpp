// Command-line driver: classify slices of C_d, emit repository-style data
// files, and run the cross-check suites.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "cubeslice/report.hpp"

using namespace cubeslice;

int main(int argc, char** argv) {
    CLI::App app{"exact classification of hyperplane slices of the cube"};

    int dim = 3;
    std::string mode_str = "affine";
    bool generic_only = false;
    int max_k = -1;
    int workers = 1;
    std::string out_dir = ".";
    std::vector<std::string> emit, check;

    app.add_option("--dim", dim, "cube dimension d")->required()->check(CLI::Range(2, 12));
    app.add_option("--mode", mode_str, "affine|central")
        ->check(CLI::IsMember({"affine", "central"}));
    app.add_flag("--generic-only", generic_only, "master arrangement only (k = 0)");
    app.add_option("--max-k", max_k, "largest tuple size to restrict to");
    app.add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 256));
    app.add_option("--out-dir", out_dir, "output directory");
    app.add_option("--emit", emit, "f,u,s,graphs,histogram,tables")->delimiter(',');
    app.add_option("--check", check, "tables,conjectures,thm22,colorclasses,oeis")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Mode mode = mode_str == "central" ? Mode::central : Mode::affine;
    CubeSpec spec{dim, mode};
    std::set<std::string> emit_set(emit.begin(), emit.end());
    std::set<std::string> check_set(check.begin(), check.end());

    try {
        std::filesystem::create_directories(out_dir);

        ClassificationRun run = classify(spec, generic_only, max_k, workers);
        std::cout << render_summary(run);

        std::optional<ClassificationRun> other;  // the opposite mode, on demand
        auto other_run = [&]() -> const ClassificationRun& {
            if (!other) {
                CubeSpec o{dim, mode == Mode::affine ? Mode::central : Mode::affine};
                other = classify(o, generic_only, max_k, workers);
            }
            return *other;
        };

        std::set<std::string> file_kinds;
        for (const auto& k : emit_set)
            if (k == "f" || k == "u" || k == "s") file_kinds.insert(k);
        if (!file_kinds.empty())
            for (const auto& p : emit_run_files(run, out_dir, file_kinds))
                std::cout << "wrote " << p << "\n";
        if (emit_set.count("graphs")) {
            auto classes = enumerate_color_classes_full(dim, workers);
            for (const auto& p : emit_graph_files(dim, classes, out_dir))
                std::cout << "wrote " << p << "\n";
        }
        if (emit_set.count("histogram")) {
            const ClassificationRun* aff = mode == Mode::affine ? &run : &other_run();
            const ClassificationRun* cen = mode == Mode::central ? &run : &other_run();
            std::string p = out_dir + "/" + std::to_string(dim) + "cubeVertexDistribution.csv";
            std::ofstream f(p, std::ios::binary);
            f << histogram_csv(aff, cen);
            std::cout << "wrote " << p << "\n";
        }
        if (emit_set.count("tables")) {
            std::string p = out_dir + "/" + std::to_string(dim) + "cube" +
                            (mode == Mode::central ? "Central" : "Affine") + "Tables.txt";
            std::ofstream f(p, std::ios::binary);
            f << render_summary(run);
            if (mode == Mode::affine && !generic_only)
                f << render_fvector_table(run, other_run());
            std::cout << "wrote " << p << "\n";
        }

        std::vector<CheckResult> results;
        if (check_set.count("tables"))
            for (auto& c : check_tables(run)) results.push_back(c);
        if (check_set.count("oeis"))
            for (auto& c : check_oeis(std::min(dim, 5), mode, workers)) results.push_back(c);
        if (check_set.count("colorclasses")) results.push_back(check_color_classes(dim, workers));
        if (check_set.count("conjectures")) {
            const ClassificationRun& cen = mode == Mode::central ? run : other_run();
            results.push_back(check_conjecture(cen));
            auto gaps = vertex_gap_report(mode == Mode::affine ? run : other_run());
            std::cout << "vertex counts attained:";
            for (int n : gaps.attained) std::cout << " " << n;
            std::cout << "\npower-of-two gap predicate: "
                      << (gaps.predicate_holds ? "holds" : "fails") << " (";
            for (auto& [p, hit] : gaps.power_counts)
                std::cout << p << (hit ? " attained; " : " missing; ");
            std::cout << ")\n";
        }
        if (check_set.count("thm22")) results.push_back(check_thm22(dim, workers));

        bool all_pass = true;
        for (const auto& c : results) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
            if (!c.pass) all_pass = false;
        }
        if (!all_pass) {
            std::cerr << "{\"status\":\"check-failure\",\"failed\":[";
            bool first = true;
            for (const auto& c : results)
                if (!c.pass) {
                    if (!first) std::cerr << ",";
                    std::cerr << "\"" << c.name << "\"";
                    first = false;
                }
            std::cerr << "]}\n";
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "{\"status\":\"error\",\"message\":\"" << e.what() << "\"}\n";
        return 2;
    }
    return 0;
}

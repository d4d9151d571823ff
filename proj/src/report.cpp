#include "cubeslice/report.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace cubeslice {

namespace refs {

int affine_total(int d) {
    switch (d) {
        case 2: return 1;
        case 3: return 4;
        case 4: return 30;
        case 5: return 344;
        case 6: return 7346;
        default: return -1;
    }
}

int central_total(int d) {
    switch (d) {
        case 2: return 1;
        case 3: return 2;
        case 4: return 6;
        case 5: return 23;
        case 6: return 133;
        case 7: return 1657;
        default: return -1;
    }
}

int generic_affine(int d) {
    switch (d) {
        case 2: return 1;
        case 3: return 4;
        case 4: return 12;
        case 5: return 58;
        case 6: return 554;
        default: return -1;
    }
}

int generic_central(int d) {
    switch (d) {
        case 2: return 1;
        case 3: return 2;
        case 4: return 3;
        case 5: return 7;
        case 6: return 21;
        case 7: return 135;
        default: return -1;
    }
}

BreakdownRow breakdown(Mode mode, int d) {
    BreakdownRow r;
    r.known = true;
    if (mode == Mode::affine) {
        switch (d) {
            case 3: r.per_k = {3, 3, 2, 2}; r.per_k_new = {1, 0, 0}; break;
            case 4: r.per_k = {12, 14, 14, 10, 6}; r.per_k_new = {7, 6, 4, 1}; break;
            case 5: r.per_k = {58, 103, 129, 105, 52, 14}; r.per_k_new = {81, 96, 73, 31, 5}; break;
            case 6:
                r.per_k = {554, 1482, 2296, 2179, 1276, 422, 62};
                r.per_k_new = {1376, 2078, 1917, 1066, 319, 36};
                break;
            default: r.known = false;
        }
    } else {
        switch (d) {
            case 3: r.per_k = {2, 1, 1}; r.per_k_new = {0, 0}; break;
            case 4: r.per_k = {3, 2, 2, 2}; r.per_k_new = {1, 1, 1}; break;
            case 5: r.per_k = {7, 6, 6, 5, 3}; r.per_k_new = {5, 5, 4, 2}; break;
            case 6: r.per_k = {21, 28, 34, 30, 18, 7}; r.per_k_new = {27, 33, 29, 17, 6}; break;
            case 7:
                r.per_k = {135, 288, 427, 419, 268, 105, 21};
                r.per_k_new = {287, 426, 418, 267, 104, 20};
                break;
            default: r.known = false;
        }
    }
    return r;
}

long long master_cells(int d) {
    switch (d) {
        case 3: return 104;
        case 4: return 1882;
        case 5: return 94572;
        default: return -1;
    }
}

long long one_vertex_cells(int d) {
    switch (d) {
        case 3: return 32;
        case 4: return 370;
        case 5: return 11292;
        default: return -1;
    }
}

int color_classes(int d) {
    switch (d) {
        case 3: return 12;
        case 4: return 61;
        case 5: return 484;
        default: return -1;
    }
}

}  // namespace refs

namespace {

std::string vec_to_string(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); i++) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

}  // namespace

std::vector<CheckResult> check_tables(const ClassificationRun& run) {
    std::vector<CheckResult> out;
    const int d = run.spec.d;
    bool central = run.spec.mode == Mode::central;
    std::string tag = (central ? "central d=" : "affine d=") + std::to_string(d);

    int total_ref = central ? refs::central_total(d) : refs::affine_total(d);
    int generic_ref = central ? refs::generic_central(d) : refs::generic_affine(d);

    {
        CheckResult c;
        c.name = "generic types " + tag;
        auto it = run.per_k_types.find(0);
        int got = it == run.per_k_types.end() ? 0 : static_cast<int>(it->second.size());
        c.pass = generic_ref >= 0 && got == generic_ref;
        c.detail = "got " + std::to_string(got) + ", table " + std::to_string(generic_ref);
        out.push_back(c);
    }
    if (run.generic_only) return out;

    {
        CheckResult c;
        c.name = "total types " + tag;
        int got = static_cast<int>(run.registry.size());
        c.pass = total_ref >= 0 && got == total_ref;
        c.detail = "got " + std::to_string(got) + ", table " + std::to_string(total_ref);
        out.push_back(c);
    }
    auto row = refs::breakdown(run.spec.mode, d);
    if (row.known) {
        std::vector<int> got_k, got_new;
        for (auto& [k, keys] : run.per_k_types) got_k.push_back(static_cast<int>(keys.size()));
        for (auto& [k, n] : run.per_k_new)
            if (k > 0) got_new.push_back(n);
        CheckResult c;
        c.name = "per-k breakdown " + tag;
        c.pass = got_k == row.per_k;
        c.detail = "got " + vec_to_string(got_k) + ", table " + vec_to_string(row.per_k);
        out.push_back(c);
        CheckResult c2;
        c2.name = "new-type brackets " + tag;
        c2.pass = got_new == row.per_k_new;
        c2.detail = "got " + vec_to_string(got_new) + ", table " + vec_to_string(row.per_k_new);
        out.push_back(c2);
    }
    return out;
}

std::vector<CheckResult> check_oeis(int d_max, Mode mode, int workers) {
    std::vector<CheckResult> out;
    for (int d = 3; d <= d_max; d++) {
        // The affine C_d and central C_{d+1} master arrangements coincide.
        CubeSpec spec{mode == Mode::affine ? d : d + 1, mode};
        RatMat a = vertices(spec);
        std::vector<RatVec> cols;
        for (int j = 0; j < a.cols; j++) cols.push_back(a.col(j));
        auto master = build_arrangement(cols);
        long long got = count_chambers(master, workers);
        CheckResult c;
        c.name = "threshold cells d=" + std::to_string(d);
        c.pass = got == refs::master_cells(d);
        c.detail = "got " + std::to_string(got) + ", expected " + std::to_string(refs::master_cells(d));
        out.push_back(c);

        auto tuples = orbit_reps_vertex_tuples(spec, 1);
        long long got1 = tuples.empty() ? -1 : count_cells_on_flat(spec, tuples[0], workers);
        CheckResult c1;
        c1.name = "one-vertex cells d=" + std::to_string(d);
        c1.pass = got1 == refs::one_vertex_cells(d);
        c1.detail =
            "got " + std::to_string(got1) + ", expected " + std::to_string(refs::one_vertex_cells(d));
        out.push_back(c1);
    }
    return out;
}

CheckResult check_color_classes(int d, int workers) {
    CheckResult c;
    c.name = "color classes d=" + std::to_string(d);
    int got = static_cast<int>(enumerate_color_classes(d, workers).size());
    c.pass = got == refs::color_classes(d);
    c.detail = "got " + std::to_string(got) + ", expected " + std::to_string(refs::color_classes(d));
    return c;
}

CheckResult check_conjecture(const ClassificationRun& central_run) {
    auto rep = check_central_intersection_conjecture(central_run);
    CheckResult c;
    c.name = "central intersection conjecture d=" + std::to_string(central_run.spec.d);
    c.pass = rep.pairwise_singleton_cube && rep.family_all_cube;
    c.detail = c.pass ? "all pairwise intersections are the cube type"
                      : "violations: " + std::to_string(rep.violations.size());
    return c;
}

CheckResult check_thm22(int d, int workers) {
    auto rep = check_generic_central_edge_criterion(d, workers);
    CheckResult c;
    c.name = "edge criterion d=" + std::to_string(d);
    c.pass = rep.coincide;
    c.detail = "edge classes " + std::to_string(rep.edge_classes) + ", type classes " +
               std::to_string(rep.key_classes);
    return c;
}

std::set<std::pair<std::string, int>> central_marks(const ClassificationRun& central_run) {
    std::set<std::pair<std::string, int>> marks;
    for (const TypeEntry* e : central_run.registry.entries()) {
        for (auto& [kc, normal] : e->meta.normal_per_k) {
            auto h = hyperplane_from_normal(central_run.spec, normal);
            auto s = build_slice(central_run.spec.d, *h);
            if (s) marks.emplace(e->key, s->k_affine);
        }
    }
    return marks;
}

namespace {

std::string scope_name(int k) { return k == 0 ? "int" : std::to_string(k) + "v"; }

std::string slice_verts_line(const Slice& s) {
    std::string line;
    for (int i = 0; i < s.vertex_count(); i++) {
        if (i) line += ";";
        line += to_string(s.verts[i]);
    }
    return line;
}

void write_file(const std::string& path, const std::vector<std::string>& lines) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    for (const auto& l : lines) f << l << "\n";
}

}  // namespace

std::vector<std::string> emit_run_files(const ClassificationRun& run, const std::string& out_dir,
                                        const std::set<std::string>& kinds) {
    std::vector<std::string> written;
    const std::string c = run.spec.mode == Mode::central ? "c" : "";
    const std::string stem = out_dir + "/" + std::to_string(run.spec.d) + "cube";
    auto entries = run.registry.entries();

    std::vector<int> scopes{0};
    for (auto& [k, v] : run.per_k_types)
        if (k > 0) scopes.push_back(k);
    const int total_scope = -1;
    scopes.push_back(total_scope);

    for (int scope : scopes) {
        std::vector<const TypeEntry*> sel;
        for (const TypeEntry* e : entries) {
            if (scope == total_scope)
                sel.push_back(e);
            else if (e->meta.ks.count(scope))
                sel.push_back(e);
        }
        std::string sname = scope == total_scope ? "tot" : scope_name(scope);
        if (kinds.count("f")) {
            std::vector<std::string> lines;
            for (auto e : sel) lines.push_back(vec_to_string(e->fvec));
            std::string p = stem + "f" + c + sname + ".txt";
            write_file(p, lines);
            written.push_back(p);
        }
        if (kinds.count("u")) {
            std::vector<std::string> lines;
            for (auto e : sel)
                lines.push_back(to_string(scope == total_scope ? e->meta.min_normal
                                                               : e->meta.normal_per_k.at(scope)));
            std::string p = stem + "u" + c + sname + ".txt";
            write_file(p, lines);
            written.push_back(p);
        }
        if (kinds.count("s")) {
            std::vector<std::string> lines;
            for (auto e : sel) {
                const RatVec& u =
                    scope == total_scope ? e->meta.min_normal : e->meta.normal_per_k.at(scope);
                auto h = hyperplane_from_normal(run.spec, u);
                auto s = build_slice(run.spec.d, *h);
                lines.push_back(slice_verts_line(*s));
            }
            std::string p = stem + "s" + c + sname + ".txt";
            write_file(p, lines);
            written.push_back(p);
        }
    }
    return written;
}

std::vector<std::string> emit_graph_files(int d, const std::map<std::string, Slice>& classes,
                                          const std::string& out_dir) {
    // Sort classes by (vertex count, key).
    std::vector<std::pair<const std::string*, const Slice*>> order;
    for (auto& [k, s] : classes) order.emplace_back(&k, &s);
    std::sort(order.begin(), order.end(), [](auto& a, auto& b) {
        if (a.second->vertex_count() != b.second->vertex_count())
            return a.second->vertex_count() < b.second->vertex_count();
        return *a.first < *b.first;
    });

    std::vector<std::string> class_lines, vert_lines;
    for (auto& [key, s] : order) {
        auto g = colored_graph(*s);
        auto es = skeleton_edges(*s);
        std::vector<std::pair<int, int>> sorted_edges;
        for (auto [a, b] : es) sorted_edges.emplace_back(std::min(a, b), std::max(a, b));
        std::sort(sorted_edges.begin(), sorted_edges.end());
        std::string line = std::to_string(g.n) + " ";
        for (auto [a, b] : sorted_edges) line += std::to_string(a) + "-" + std::to_string(b) + " ";
        for (int i = 0; i < g.n; i++) line += g.colors[i] ? 'b' : 'w';
        class_lines.push_back(line);
        vert_lines.push_back(slice_verts_line(*s));
    }
    std::string p1 = out_dir + "/" + std::to_string(d) + "cubeGraphClasses.txt";
    std::string p2 = out_dir + "/" + std::to_string(d) + "cubeGraphVerts.txt";
    write_file(p1, class_lines);
    write_file(p2, vert_lines);
    return {p1, p2};
}

std::string histogram_csv(const ClassificationRun* affine_run, const ClassificationRun* central_run) {
    std::map<int, std::array<std::string, 4>> rows;
    auto fill = [&](const ClassificationRun* run, int col_all, int col_generic) {
        if (!run) return;
        std::map<int, int> all, generic;
        const std::set<std::string>* g0 = nullptr;
        auto it = run->per_k_types.find(0);
        if (it != run->per_k_types.end()) g0 = &it->second;
        for (const TypeEntry* e : run->registry.entries()) {
            all[e->rep.vertex_count()]++;
            if (g0 && g0->count(e->key)) generic[e->rep.vertex_count()]++;
        }
        for (auto& [n, c] : all) rows[n][col_all] = std::to_string(c);
        for (auto& [n, c] : generic) rows[n][col_generic] = std::to_string(c);
    };
    fill(affine_run, 0, 1);
    fill(central_run, 2, 3);
    std::string csv = "vertex_count,affine_all,affine_generic,central_all,central_generic\n";
    for (auto& [n, cols] : rows) {
        csv += std::to_string(n);
        for (auto& c : cols) csv += "," + c;
        csv += "\n";
    }
    return csv;
}

std::string render_summary(const ClassificationRun& run) {
    std::ostringstream os;
    os << (run.spec.mode == Mode::central ? "central" : "affine") << " slices of C_" << run.spec.d
       << ": " << run.registry.size() << " combinatorial types\n";
    os << "  k:";
    for (auto& [k, keys] : run.per_k_types) os << " " << keys.size();
    os << "\n  new:";
    for (auto& [k, n] : run.per_k_new)
        if (k > 0) os << " (" << n << ")";
    os << "\n  master cells: " << run.master_cell_count << "\n";
    for (auto& [size, counts] : run.flat_cell_counts) {
        os << "  cells on size-" << size << " flats:";
        for (auto c : counts) os << " " << c;
        os << "\n";
    }
    return os.str();
}

std::string render_fvector_table(const ClassificationRun& affine_run,
                                 const ClassificationRun& central_run) {
    auto marks = central_marks(central_run);
    std::ostringstream os;
    for (auto& [k, keys] : affine_run.per_k_types) {
        os << "k=" << k << ":";
        std::vector<std::string> cells;
        for (const TypeEntry* e : affine_run.registry.entries()) {
            if (!keys.count(e->key)) continue;
            std::string cell = vec_to_string(e->fvec);
            if (marks.count({e->key, k})) cell += "*";
            cells.push_back(cell);
        }
        std::sort(cells.begin(), cells.end());
        for (auto& c : cells) os << " " << c;
        os << "\n";
    }
    os << "(* = realizable by a central slice at that k)\n";
    return os.str();
}

}  // namespace cubeslice

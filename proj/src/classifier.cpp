#include "cubeslice/classifier.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>

#include "cubeslice/linalg.hpp"
#include "cubeslice/parallel.hpp"

namespace cubeslice {

namespace {

struct RunState {
    ClassificationRun* run;
    std::mutex mu;

    void file(const Slice& s, const RatVec& normal, Mode mode) {
        TypeRegistry::InsertInfo info;
        info.k = s.k(mode);
        info.normal = normal;
        info.central = mode == Mode::central;
        std::string key;
        run->registry.insert(s, info, &key);
        std::lock_guard<std::mutex> lk(mu);
        run->per_k_types[info.k].insert(key);
    }
};

void process_cells(RunState& st, const CubeSpec& spec, const std::vector<Chamber>& cells,
                   int workers) {
    parallel_for(cells.size(), workers, [&](size_t i) {
        auto h = hyperplane_from_normal(spec, cells[i].witness);
        if (!h) return;
        auto s = build_slice(spec.d, *h);
        if (!s) return;
        st.file(*s, cells[i].witness, spec.mode);
    });
}

}  // namespace

ClassificationRun classify(const CubeSpec& spec, bool generic_only, int max_k, int workers) {
    ClassificationRun run;
    run.spec = spec;
    run.generic_only = generic_only;
    RunState st{&run};

    // Master arrangement: one hyperplane per vertex class.
    {
        RatMat a = vertices(spec);
        std::vector<RatVec> cols;
        cols.reserve(a.cols);
        std::vector<int> ids(a.cols);
        for (int j = 0; j < a.cols; j++) {
            cols.push_back(a.col(j));
            ids[j] = j;
        }
        ArrangementSpec master = build_arrangement(cols, ids);
        auto chambers = enumerate_chambers(master, workers);
        run.master_cell_count = static_cast<long long>(chambers.size());
        process_cells(st, spec, chambers, workers);
    }

    if (!generic_only) {
        int limit = max_k < 0 ? spec.ambient_dim() - 1 : max_k;
        auto tuples = orbit_reps_vertex_tuples(spec, limit);
        std::vector<std::vector<long long>> counts(tuples.size());
        std::mutex cmu;
        parallel_for(tuples.size(), workers, [&](size_t i) {
            auto flat = enumerate_cells_on_flat(spec, tuples[i], 1);
            {
                std::lock_guard<std::mutex> lk(cmu);
                counts[i] = {static_cast<long long>(flat.cells.size())};
            }
            for (const auto& c : flat.cells) {
                auto h = hyperplane_from_normal(spec, c.witness);
                if (!h) continue;
                auto s = build_slice(spec.d, *h);
                if (!s) continue;
                assert(s->k(spec.mode) == tuples[i].span_dim);
                st.file(*s, c.witness, spec.mode);
            }
        });
        for (size_t i = 0; i < tuples.size(); i++)
            run.flat_cell_counts[tuples[i].span_dim].push_back(counts[i][0]);
    }

    // Types first seen at k, scanning k upward.
    std::set<std::string> seen;
    for (auto& [k, keys] : run.per_k_types) {
        int fresh = 0;
        for (auto& key : keys)
            if (!seen.count(key)) fresh++;
        for (auto& key : keys) seen.insert(key);
        run.per_k_new[k] = fresh;
    }
    return run;
}

std::map<int, int> vertex_count_distribution(const ClassificationRun& run) {
    std::map<int, int> h;
    for (const TypeEntry* e : run.registry.entries()) h[e->rep.vertex_count()]++;
    return h;
}

Hyperplane max_vertex_construction(int d) {
    Hyperplane h;
    h.w.assign(d, Rational(1));
    if (d % 2 == 0) h.w[d - 1] = 0;
    h.a = 0;
    return h;
}

namespace {

std::string cube_type_key(int d) {
    Hyperplane h;
    h.w.assign(d, Rational(0));
    h.w[0] = 1;  // {x_1 = 0} slices C_d in a combinatorial C_{d-1}
    auto s = build_slice(d, h);
    assert(s);
    return canonical_key(*s);
}

}  // namespace

CentralIntersectionReport check_central_intersection_conjecture(const ClassificationRun& run) {
    assert(run.spec.mode == Mode::central);
    const int d = run.spec.d;
    CentralIntersectionReport rep;
    rep.cube_key = cube_type_key(d);

    rep.pairwise_singleton_cube = true;
    for (auto& [k1, s1] : run.per_k_types)
        for (auto& [k2, s2] : run.per_k_types) {
            if (k1 >= k2) continue;
            std::vector<std::string> inter;
            std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                                  std::back_inserter(inter));
            if (inter.size() != 1 || inter[0] != rep.cube_key) {
                rep.pairwise_singleton_cube = false;
                rep.violations.push_back("S_" + std::to_string(k1) + " vs S_" + std::to_string(k2) +
                                         ": intersection size " + std::to_string(inter.size()));
            }
        }

    rep.family_all_cube = true;
    for (int k = 0; k <= d; k++) {
        Hyperplane h;
        h.w.assign(d, Rational(0));
        if (k == 0) {
            h.w[0] = 1;
        } else if (k == d) {
            h.w[0] = 1;
            h.w[1] = -1;  // {x_1 = x_2}
        } else {
            h.w[0] = -(d - k);
            for (int i = 1; i <= d - k; i++) h.w[i] = 1;
        }
        auto s = build_slice(d, h);
        if (!s || canonical_key(*s) != rep.cube_key) {
            rep.family_all_cube = false;
            rep.violations.push_back("family slice at k=" + std::to_string(k) + " is not C_{d-1}");
        }
    }
    return rep;
}

EdgeCriterionReport check_generic_central_edge_criterion(int d, int workers) {
    CubeSpec spec{d, Mode::central};
    RatMat a = vertices(spec);
    std::vector<RatVec> cols;
    for (int j = 0; j < a.cols; j++) cols.push_back(a.col(j));
    ArrangementSpec master = build_arrangement(cols);
    auto chambers = enumerate_chambers(master, workers);

    auto edge_list = edges(d);
    std::map<std::pair<int, int>, int> edge_index;
    for (size_t i = 0; i < edge_list.size(); i++) edge_index[edge_list[i]] = static_cast<int>(i);
    const auto& group = group_elements(d);

    std::map<std::vector<uint64_t>, std::set<std::string>> by_edges;
    std::map<std::string, std::set<std::vector<uint64_t>>> by_key;
    std::mutex mu;

    parallel_for(chambers.size(), workers, [&](size_t ci) {
        const auto& ch = chambers[ci];
        std::vector<int> sgn(1 << d);
        for (int v = 0; v < (1 << d); v++) sgn[v] = sign_of(dot(vertex_coords(d, v), ch.witness));
        size_t words = (edge_list.size() + 63) / 64;
        std::vector<uint64_t> crossed(words, 0);
        for (size_t e = 0; e < edge_list.size(); e++)
            if (sgn[edge_list[e].first] * sgn[edge_list[e].second] < 0)
                crossed[e >> 6] |= uint64_t(1) << (e & 63);
        // Canonical representative of the crossed-edge set under the group.
        std::vector<uint64_t> best = crossed, img(words);
        for (const auto& pi : group) {
            std::fill(img.begin(), img.end(), 0);
            for (size_t e = 0; e < edge_list.size(); e++) {
                if (!((crossed[e >> 6] >> (e & 63)) & 1)) continue;
                int x = act_vertex(pi, d, edge_list[e].first);
                int y = act_vertex(pi, d, edge_list[e].second);
                int ei = edge_index[{std::min(x, y), std::max(x, y)}];
                img[ei >> 6] |= uint64_t(1) << (ei & 63);
            }
            if (img < best) best = img;
        }
        auto h = hyperplane_from_normal(spec, ch.witness);
        auto s = build_slice(d, *h);
        assert(s);
        std::string key = canonical_key(*s);
        std::lock_guard<std::mutex> lk(mu);
        by_edges[best].insert(key);
        by_key[key].insert(best);
    });

    EdgeCriterionReport rep;
    rep.edge_classes = static_cast<int>(by_edges.size());
    rep.key_classes = static_cast<int>(by_key.size());
    rep.coincide = true;
    for (auto& [e, ks] : by_edges)
        if (ks.size() != 1) rep.coincide = false;
    for (auto& [k, es] : by_key)
        if (es.size() != 1) rep.coincide = false;
    return rep;
}

VertexGapReport vertex_gap_report(const ClassificationRun& run) {
    VertexGapReport rep;
    for (const TypeEntry* e : run.registry.entries()) rep.attained.insert(e->rep.vertex_count());
    rep.predicate_holds = true;
    int bound = 2 * run.spec.d - 3;
    for (int p = 1; p <= bound; p *= 2) {
        bool hit = rep.attained.count(p) > 0;
        rep.power_counts.emplace_back(p, hit);
        if (hit) rep.predicate_holds = false;
    }
    return rep;
}

}  // namespace cubeslice

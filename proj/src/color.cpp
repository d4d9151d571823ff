#include "cubeslice/color.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>

#include "cubeslice/graph_canon.hpp"
#include "cubeslice/parallel.hpp"

namespace cubeslice {

ColoredGraph colored_graph(const Slice& s) {
    ColoredGraph g;
    g.n = s.vertex_count();
    g.adj.resize(g.n);
    g.colors.resize(g.n);
    for (int i = 0; i < g.n; i++) g.colors[i] = s.is_cube_vertex[i] ? 0 : 1;
    for (auto [a, b] : skeleton_edges(s)) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    return g;
}

std::string colored_canonical_key(const ColoredGraph& g) {
    return canonical_graph_key(g.adj, g.colors);
}

namespace {

// An affine functional on a 2-face satisfies f(a)+f(c) = f(b)+f(d) across the
// diagonals, so a cyclic sign pattern is unrealizable when the two diagonal
// sign-sum ranges cannot meet. The pattern sets here are fixed lists checked
// against the diagonals.
bool square_forbidden(int8_t a, int8_t b, int8_t c, int8_t d, SquarePatterns patterns) {
    auto diag_is = [](int8_t x, int8_t y, int8_t p, int8_t q) {
        return (x == p && y == q) || (x == q && y == p);
    };
    // displayed patterns: {+,0,+,0}, {0,0,0,+}, {-,+,-,+}
    bool three = (diag_is(a, c, 1, 1) && diag_is(b, d, 0, 0)) ||
                 (diag_is(a, c, 0, 0) && diag_is(b, d, 1, 1)) ||
                 (diag_is(a, c, 0, 0) && diag_is(b, d, 0, 1)) ||
                 (diag_is(a, c, 0, 1) && diag_is(b, d, 0, 0)) ||
                 (diag_is(a, c, 1, 1) && diag_is(b, d, -1, -1)) ||
                 (diag_is(a, c, -1, -1) && diag_is(b, d, 1, 1));
    if (three || patterns == SquarePatterns::paper_three) return three;
    // sign-swapped variants: {-,0,-,0}, {0,0,0,-}
    return (diag_is(a, c, -1, -1) && diag_is(b, d, 0, 0)) ||
           (diag_is(a, c, 0, 0) && diag_is(b, d, -1, -1)) ||
           (diag_is(a, c, 0, 0) && diag_is(b, d, 0, -1)) ||
           (diag_is(a, c, 0, -1) && diag_is(b, d, 0, 0));
}

struct Square {
    int v[4];  // cyclic order
};

std::vector<Square> cube_squares(int d) {
    std::vector<Square> out;
    for (int i = 0; i < d; i++)
        for (int j = i + 1; j < d; j++)
            for (int base = 0; base < (1 << d); base++) {
                if ((base >> i) & 1 || (base >> j) & 1) continue;
                out.push_back({{base, base | (1 << i), base | (1 << i) | (1 << j), base | (1 << j)}});
            }
    return out;
}

bool connected_mask(int d, uint64_t mask) {
    if (mask == 0) return true;
    uint64_t seen = mask & (~mask + 1);  // lowest set vertex
    for (;;) {
        uint64_t grow = seen;
        uint64_t rest = mask & ~seen;
        if (!rest) return true;
        for (int v = 0; v < (1 << d); v++) {
            if (!((seen >> v) & 1)) continue;
            for (int i = 0; i < d; i++) {
                uint64_t w = uint64_t(1) << (v ^ (1 << i));
                if (mask & w) grow |= w;
            }
        }
        if (grow == seen) return false;
        seen = grow;
    }
}

}  // namespace

bool forbidden_square_filter(const Labeling& l, SquarePatterns patterns) {
    for (const auto& sq : cube_squares(l.d))
        if (square_forbidden(l.labels[sq.v[0]], l.labels[sq.v[1]], l.labels[sq.v[2]],
                             l.labels[sq.v[3]], patterns))
            return true;  // reject
    return false;
}

bool combinatorial_conditions(const Labeling& l, SquarePatterns patterns) {
    int d = l.d, n = 1 << d;
    uint64_t plus = 0, minus = 0;
    for (int v = 0; v < n; v++) {
        if (l.labels[v] > 0) plus |= uint64_t(1) << v;
        if (l.labels[v] < 0) minus |= uint64_t(1) << v;
    }
    if (!connected_mask(d, plus) || !connected_mask(d, minus)) return false;
    for (int v = 0; v < n; v++) {
        if (l.labels[v] != 0 || plus == 0) continue;
        bool ok = false;
        for (int i = 0; i < d; i++)
            if ((plus >> (v ^ (1 << i))) & 1) ok = true;
        if (!ok) return false;
    }
    return !forbidden_square_filter(l, patterns);
}

RealizabilityResult realizable(const Labeling& l) {
    int d = l.d;
    ConstraintSystem cs;
    cs.ambient_dim = d + 1;
    for (int v = 0; v < (1 << d); v++) {
        RatVec row = vertex_coords(d, v);
        row.push_back(1);
        if (l.labels[v] == 0)
            cs.equalities.push_back(std::move(row));
        else
            cs.strict.push_back(l.labels[v] > 0 ? std::move(row) : neg(row));
    }
    auto r = strict_feasible(cs);
    RealizabilityResult out;
    out.realizable = r.feasible;
    if (r.feasible) {
        Hyperplane h;
        h.w.assign(r.witness->begin(), r.witness->end() - 1);
        h.a = -r.witness->back();
        out.witness = std::move(h);
    }
    return out;
}

namespace {

struct ColorSearch {
    int d, n, cap;
    bool use_filter;
    std::vector<Square> squares;
    std::vector<std::vector<int>> squares_at;  // per vertex
    std::vector<std::vector<uint8_t>> vmaps;   // group element -> vertex map
    std::map<std::string, Slice> classes;
    std::mutex mu;

    explicit ColorSearch(int d_, bool filter) : d(d_), n(1 << d_), cap(1 << (d_ - 1)), use_filter(filter) {
        squares = cube_squares(d);
        squares_at.resize(n);
        for (size_t i = 0; i < squares.size(); i++)
            for (int t = 0; t < 4; t++) squares_at[squares[i].v[t]].push_back(static_cast<int>(i));
        for (const auto& pi : group_elements(d)) {
            std::vector<uint8_t> m(n);
            for (int v = 0; v < n; v++) m[v] = static_cast<uint8_t>(act_vertex(pi, d, v));
            vmaps.push_back(std::move(m));
        }
    }

    // Order on vertex sets by sorted element list; the smaller mask owns the
    // lowest differing vertex.
    static bool mask_less(uint64_t x, uint64_t y) {
        uint64_t diff = x ^ y;
        if (!diff) return false;
        return x & (diff & (~diff + 1));
    }

    bool is_orbit_rep(uint64_t mask) const {
        for (const auto& m : vmaps) {
            uint64_t img = 0;
            uint64_t rest = mask;
            while (rest) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                img |= uint64_t(1) << m[v];
            }
            if (mask_less(img, mask)) return false;
        }
        return true;
    }

    // All connected induced subgraphs containing vertex 0, each exactly once;
    // only orbit representatives are collected.
    void connected_sets(uint64_t s, uint64_t allowed, std::vector<uint64_t>& out) {
        if (is_orbit_rep(s)) out.push_back(s);
        if (__builtin_popcountll(s) == cap) return;
        uint64_t cand = 0;
        uint64_t rest = s;
        while (rest) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            for (int i = 0; i < d; i++) cand |= uint64_t(1) << (v ^ (1 << i));
        }
        cand &= allowed & ~s;
        while (cand) {
            int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            allowed &= ~(uint64_t(1) << v);
            connected_sets(s | (uint64_t(1) << v), allowed, out);
        }
    }

    void record(const Labeling& l) {
        auto r = realizable(l);
        if (!r.realizable) return;
        auto s = build_slice(d, *r.witness);
        if (!s) return;
        std::string key = colored_canonical_key(colored_graph(*s));
        std::lock_guard<std::mutex> lk(mu);
        auto it = classes.find(key);
        if (it == classes.end()) {
            classes.emplace(std::move(key), std::move(*s));
        } else {
            // keep the lexicographically least representative
            for (size_t i = 0; i < s->verts.size() && i < it->second.verts.size(); i++) {
                int c = compare(s->verts[i], it->second.verts[i]);
                if (c < 0) {
                    it->second = std::move(*s);
                    break;
                }
                if (c > 0) break;
            }
        }
    }

    // Assign {-,0} over the neighborhood, pruning on completed squares.
    void assign(Labeling& l, const std::vector<int>& ring, size_t pos) {
        if (pos == ring.size()) {
            int nn = 1 << d;
            uint64_t minus = 0;
            for (int v = 0; v < nn; v++)
                if (l.labels[v] < 0) minus |= uint64_t(1) << v;
            if (!connected_mask(d, minus)) return;
            record(l);
            return;
        }
        int u = ring[pos];
        for (int8_t val : {int8_t(-1), int8_t(0)}) {
            l.labels[u] = val;
            bool ok = true;
            if (use_filter) {
                for (int si : squares_at[u]) {
                    const auto& sq = squares[si];
                    int8_t lab[4];
                    bool complete = true;
                    for (int t = 0; t < 4; t++) {
                        lab[t] = l.labels[sq.v[t]];
                        if (lab[t] == 2) complete = false;
                    }
                    if (complete &&
                        square_forbidden(lab[0], lab[1], lab[2], lab[3], SquarePatterns::full)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) assign(l, ring, pos + 1);
        }
        l.labels[u] = 2;
    }

    void process_plus_side(uint64_t s) {
        Labeling l;
        l.d = d;
        l.labels.assign(n, int8_t(-1));
        std::vector<int> ring;
        for (int v = 0; v < n; v++) {
            if ((s >> v) & 1) {
                l.labels[v] = 1;
                continue;
            }
            bool nb = false;
            for (int i = 0; i < d; i++)
                if ((s >> (v ^ (1 << i))) & 1) nb = true;
            if (nb) {
                l.labels[v] = 2;  // unassigned neighborhood
                ring.push_back(v);
            }
        }
        if (use_filter) {
            // Squares not touching the neighborhood are already fully labeled.
            for (const auto& sq : squares) {
                int8_t lab[4];
                bool complete = true;
                for (int t = 0; t < 4; t++) {
                    lab[t] = l.labels[sq.v[t]];
                    if (lab[t] == 2) complete = false;
                }
                if (complete && square_forbidden(lab[0], lab[1], lab[2], lab[3], SquarePatterns::full))
                    return;
            }
        }
        assign(l, ring, 0);
    }

    void facet_family() {
        for (auto [j, sg] : facets(d)) {
            Labeling l;
            l.d = d;
            l.labels.assign(n, int8_t(-1));
            for (int v = 0; v < n; v++)
                if ((((v >> (j - 1)) & 1) ? 1 : -1) == sg) l.labels[v] = 0;
            record(l);
        }
    }

    std::map<std::string, Slice> run(int workers) {
        facet_family();
        std::vector<uint64_t> reps;
        connected_sets(uint64_t(1), ~uint64_t(1), reps);
        parallel_for(reps.size(), workers, [&](size_t i) { process_plus_side(reps[i]); });
        return std::move(classes);
    }
};

}  // namespace

std::map<std::string, Slice> enumerate_color_classes_full(int d, int workers, bool use_square_filter) {
    ColorSearch cs(d, use_square_filter);
    return cs.run(workers);
}

std::set<std::string> enumerate_color_classes(int d, int workers, bool use_square_filter) {
    std::set<std::string> keys;
    for (auto& [k, s] : enumerate_color_classes_full(d, workers, use_square_filter)) keys.insert(k);
    return keys;
}

}  // namespace cubeslice

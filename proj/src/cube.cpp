#include "cubeslice/cube.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "cubeslice/linalg.hpp"

namespace cubeslice {

RatVec vertex_coords(int d, int index) {
    RatVec v(d);
    for (int i = 0; i < d; i++) v[i] = (index >> i) & 1 ? 1 : -1;
    return v;
}

RatMat vertices(const CubeSpec& spec) {
    int n = spec.vertex_count();
    RatMat a(spec.ambient_dim(), n);
    for (int j = 0; j < n; j++) {
        for (int i = 0; i < spec.d; i++) a.at(i, j) = (j >> i) & 1 ? 1 : -1;
        if (spec.mode == Mode::affine) a.at(spec.d, j) = 1;
    }
    return a;
}

std::vector<std::pair<int, int>> edges(int d) {
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<size_t>(d) << (d - 1));
    for (int v = 0; v < (1 << d); v++)
        for (int i = 0; i < d; i++) {
            int w = v ^ (1 << i);
            if (v < w) e.emplace_back(v, w);
        }
    return e;
}

std::vector<std::pair<int, int>> facets(int d) {
    std::vector<std::pair<int, int>> f;
    for (int j = 1; j <= d; j++) {
        f.emplace_back(j, +1);
        f.emplace_back(j, -1);
    }
    return f;
}

SignedPermutation SignedPermutation::identity(int d) {
    SignedPermutation pi;
    pi.images.resize(d);
    for (int i = 0; i < d; i++) pi.images[i] = i + 1;
    return pi;
}

RatVec act(const SignedPermutation& pi, const RatVec& v) {
    int d = pi.d();
    RatVec r(v.size());
    for (int i = 0; i < d; i++) {
        int img = pi.images[i];
        r[i] = img > 0 ? v[img - 1] : -v[-img - 1];
    }
    for (size_t i = d; i < v.size(); i++) r[i] = v[i];  // height fixed
    return r;
}

int act_vertex(const SignedPermutation& pi, int d, int index) {
    int out = 0;
    for (int i = 0; i < d; i++) {
        int img = pi.images[i];
        int bit = (index >> (std::abs(img) - 1)) & 1;
        if (img < 0) bit ^= 1;
        out |= bit << i;
    }
    return out;
}

const std::vector<SignedPermutation>& group_elements(int d) {
    static std::mutex mu;
    static std::map<int, std::vector<SignedPermutation>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    std::vector<SignedPermutation> g;
    std::vector<int> perm(d);
    for (int i = 0; i < d; i++) perm[i] = i + 1;
    do {
        for (int signs = 0; signs < (1 << d); signs++) {
            SignedPermutation pi;
            pi.images.resize(d);
            for (int i = 0; i < d; i++) pi.images[i] = (signs >> i) & 1 ? -perm[i] : perm[i];
            g.push_back(std::move(pi));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return cache[d] = std::move(g);
}

namespace {

// Tuples are sets of master-arrangement hyperplanes up to the B_d action. In
// central mode a hyperplane is a ±vertex-class, identified by the vertex
// whose last coordinate is +1 (id = that index with the top bit dropped); in
// affine mode every vertex carries its own hyperplane, so ids are plain
// vertex indices. Affine orbits must not be coarsened further: the larger
// symmetry of the shared arrangement preserves cell counts but not affine
// slice types.
struct HyperplaneAction {
    int d;
    bool classes;  // central mode: ids are ± classes
    int mask, top;
    const std::vector<SignedPermutation>* group;

    HyperplaneAction(int d_, bool classes_)
        : d(d_), classes(classes_), mask((1 << d_) - 1), top(1 << (d_ - 1)) {
        group = &group_elements(d_);
    }

    int count() const { return classes ? (1 << (d - 1)) : (1 << d); }

    int apply(const SignedPermutation& pi, int id) const {
        if (!classes) return act_vertex(pi, d, id);
        int img = act_vertex(pi, d, id | top);
        if (!(img & top)) img = ~img & mask;  // negate back to the canonical sign
        return img & ~top;
    }

    // The embedded column vector of a hyperplane id.
    RatVec column(const CubeSpec& spec, int id) const {
        RatVec v = vertex_coords(d, vertex_index(id));
        if (spec.mode == Mode::affine) v.push_back(1);
        return v;
    }

    int vertex_index(int id) const { return classes ? id | top : id; }

    std::vector<int> canonical(std::vector<int> s) const {
        std::sort(s.begin(), s.end());
        std::vector<int> best = s, cur(s.size());
        for (const auto& pi : *group) {
            for (size_t i = 0; i < s.size(); i++) cur[i] = apply(pi, s[i]);
            std::sort(cur.begin(), cur.end());
            if (cur < best) best = cur;
        }
        return best;
    }
};

}  // namespace

std::vector<VertexTuple> orbit_reps_vertex_tuples(const CubeSpec& spec, int max_size) {
    HyperplaneAction action(spec.d, spec.mode == Mode::central);

    std::vector<VertexTuple> out;
    std::set<std::vector<int>> level;
    level.insert(std::vector<int>{});
    for (int size = 1; size <= max_size; size++) {
        std::set<std::vector<int>> next;
        for (const auto& rep : level) {
            for (int c = 0; c < action.count(); c++) {
                if (std::find(rep.begin(), rep.end(), c) != rep.end()) continue;
                std::vector<int> s = rep;
                s.push_back(c);
                std::sort(s.begin(), s.end());
                std::vector<RatVec> cols;
                for (int id : s) cols.push_back(action.column(spec, id));
                if (rank_of_vectors(cols) != static_cast<int>(s.size())) continue;
                next.insert(action.canonical(std::move(s)));
            }
        }
        for (const auto& s : next) {
            VertexTuple t;
            t.span_dim = size;
            for (int c : s) t.vertices.push_back(action.vertex_index(c));
            out.push_back(std::move(t));
        }
        level = std::move(next);
        if (level.empty()) break;
    }
    return out;
}

std::pair<RatMat, int> restrict_matrix(const RatMat& a, int col) {
    int k = -1;
    for (int i = 0; i < a.rows; i++)
        if (a.at(i, col) != 0) {
            k = i;
            break;
        }
    if (k < 0) throw ZeroColumnError();
    RatMat r(a.rows - 1, a.cols - 1);
    Rational vk = a.at(k, col);
    for (int i = 0, ri = 0; i < a.rows; i++) {
        if (i == k) continue;
        Rational vi = a.at(i, col);
        for (int j = 0, rj = 0; j < a.cols; j++) {
            if (j == col) continue;
            r.at(ri, rj) = a.at(i, j) - vi * a.at(k, j) / vk;
            rj++;
        }
        ri++;
    }
    return {std::move(r), k};
}

RatVec lift(const RatVec& p, const RestrictionChain& chain) {
    RatVec cur = p;
    for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
        const auto& step = *it;
        int k = step.pivot_row;
        const RatVec& c = step.column;
        if (c[k] == 0 || c.size() != cur.size() + 1) throw InconsistentChainError();
        RatVec ext(cur.size() + 1);
        Rational acc = 0;
        for (size_t i = 0, src = 0; i < ext.size(); i++) {
            if (static_cast<int>(i) == k) continue;
            ext[i] = cur[src++];
            acc += c[i] * ext[i];
        }
        ext[k] = -acc / c[k];
        cur = std::move(ext);
    }
    return cur;
}

RestrictedSystem restrict_by_tuple(const CubeSpec& spec, const VertexTuple& tuple) {
    RestrictedSystem rs;
    rs.matrix = vertices(spec);
    rs.column_vertex.resize(spec.vertex_count());
    for (int j = 0; j < spec.vertex_count(); j++) rs.column_vertex[j] = j;

    for (int v : tuple.vertices) {
        int col = -1;
        for (size_t j = 0; j < rs.column_vertex.size(); j++)
            if (rs.column_vertex[j] == v) {
                col = static_cast<int>(j);
                break;
            }
        if (col < 0) throw ZeroColumnError();
        RestrictionStep step;
        step.column = rs.matrix.col(col);
        RatVec emb = vertex_coords(spec.d, v);
        if (spec.mode == Mode::affine) emb.push_back(1);
        auto [m, k] = restrict_matrix(rs.matrix, col);
        step.pivot_row = k;
        rs.chain.steps.push_back(std::move(step));
        rs.chain.originals.push_back(std::move(emb));
        rs.matrix = std::move(m);
        rs.column_vertex.erase(rs.column_vertex.begin() + col);
    }
    return rs;
}

}  // namespace cubeslice

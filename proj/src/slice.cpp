#include "cubeslice/slice.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

#include "cubeslice/linalg.hpp"

namespace cubeslice {

std::optional<Hyperplane> hyperplane_from_normal(const CubeSpec& spec, const RatVec& u) {
    Hyperplane h;
    if (spec.mode == Mode::central) {
        h.w = u;
        h.a = 0;
    } else {
        h.w.assign(u.begin(), u.end() - 1);
        h.a = -u.back();
    }
    if (is_zero_vec(h.w)) return std::nullopt;
    return h;
}

namespace {

int affine_dim(const std::vector<RatVec>& pts, const std::vector<int>& idx) {
    if (idx.empty()) return -1;
    std::vector<RatVec> diffs;
    diffs.reserve(idx.size() - 1);
    const RatVec& p0 = pts[idx[0]];
    for (size_t i = 1; i < idx.size(); i++) {
        RatVec d(p0.size());
        for (size_t j = 0; j < p0.size(); j++) d[j] = pts[idx[i]][j] - p0[j];
        diffs.push_back(std::move(d));
    }
    return rank_of_vectors(diffs);
}

int affine_dim_mask(const std::vector<RatVec>& pts, const VSet& mask) {
    return affine_dim(pts, mask.indices());
}

}  // namespace

std::optional<Slice> build_slice(int d, const Hyperplane& h) {
    if (is_zero_vec(h.w) || static_cast<int>(h.w.size()) != d)
        throw std::invalid_argument("build_slice: bad hyperplane");
    const int n = 1 << d;

    std::vector<Rational> val(n);
    std::vector<int> sgn(n);
    for (int v = 0; v < n; v++) {
        Rational s = -h.a;
        for (int i = 0; i < d; i++) s += (v >> i) & 1 ? h.w[i] : -h.w[i];
        val[v] = s;
        sgn[v] = sign_of(s);
    }

    struct Vert {
        RatVec p;
        bool white;
    };
    std::vector<Vert> raw;
    std::vector<RatVec> white_coords;
    for (int v = 0; v < n; v++)
        if (sgn[v] == 0) {
            raw.push_back({vertex_coords(d, v), true});
            white_coords.push_back(raw.back().p);
        }
    for (int v = 0; v < n; v++)
        for (int i = 0; i < d; i++) {
            int u = v ^ (1 << i);
            if (v > u) continue;
            if (sgn[v] * sgn[u] >= 0) continue;
            // crossing at v + t(u - v), t = val_v / (val_v - val_u) in (0,1);
            // only coordinate i moves.
            Rational t = val[v] / (val[v] - val[u]);
            RatVec p = vertex_coords(d, v);
            p[i] = p[i] * (1 - 2 * t);
            raw.push_back({std::move(p), false});
        }

    if (raw.size() < static_cast<size_t>(d)) return std::nullopt;
    if (raw.size() > 192) throw std::logic_error("build_slice: vertex count exceeds VSet width");

    std::sort(raw.begin(), raw.end(), [](const Vert& a, const Vert& b) { return compare(a.p, b.p) < 0; });

    Slice s;
    s.d = d;
    for (auto& r : raw) {
        s.verts.push_back(std::move(r.p));
        s.is_cube_vertex.push_back(r.white);
    }

    {
        std::vector<int> all(s.verts.size());
        for (size_t i = 0; i < all.size(); i++) all[i] = static_cast<int>(i);
        if (affine_dim(s.verts, all) < d - 1) return std::nullopt;
    }

    // Facets: cube facets whose contact face has affine dimension d-2.
    // Distinct cube facets sharing the same contact face collapse into one
    // slice facet.
    std::map<VSet, std::vector<std::pair<int, int>>> by_vset;
    for (auto [j, sg] : facets(d)) {
        VSet mask;
        for (int i = 0; i < s.vertex_count(); i++)
            if (s.verts[i][j - 1] == sg) mask.set(i);
        if (mask.empty()) continue;
        if (affine_dim_mask(s.verts, mask) != d - 2) continue;
        by_vset[mask].emplace_back(j, sg);
    }
    for (auto& [mask, labels] : by_vset) s.facets.push_back(SliceFacet{mask, labels});

    s.k_central = rank_of_vectors(white_coords);
    std::vector<RatVec> embedded;
    for (auto& w : white_coords) {
        RatVec e = w;
        e.push_back(1);
        embedded.push_back(std::move(e));
    }
    s.k_affine = rank_of_vectors(embedded);
    return s;
}

std::vector<std::pair<VSet, int>> faces(const Slice& s) {
    const VSet full = VSet::full(s.vertex_count());
    std::set<VSet> seen{full};
    std::vector<VSet> queue{full};
    while (!queue.empty()) {
        VSet x = queue.back();
        queue.pop_back();
        for (const auto& f : s.facets) {
            VSet y = x & f.vset;
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    std::vector<std::pair<VSet, int>> out;
    for (const VSet& m : seen) {
        if (m == full || m.empty()) continue;
        out.emplace_back(m, affine_dim_mask(s.verts, m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> f_vector(const Slice& s) {
    std::vector<int> f(std::max(1, s.d - 1), 0);
    for (auto& [mask, dim] : faces(s)) {
        assert(dim >= 0 && dim <= s.d - 2);
        f[dim]++;
    }
    return f;
}

std::vector<std::pair<int, int>> skeleton_edges(const Slice& s) {
    std::vector<std::pair<int, int>> e;
    if (s.d == 2) {
        e.emplace_back(0, 1);  // a segment's one edge is the polytope itself
        return e;
    }
    for (auto& [mask, dim] : faces(s)) {
        if (dim != 1) continue;
        auto idx = mask.indices();
        assert(idx.size() == 2);
        e.emplace_back(idx[0], idx[1]);
    }
    return e;
}

int facet_count_profile(const Slice& s) { return s.facet_count(); }

}  // namespace cubeslice

#include "cubeslice/arrangement.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "cubeslice/lp.hpp"

namespace cubeslice {

ArrangementSpec build_arrangement(const std::vector<RatVec>& normals,
                                  const std::vector<int>& provenance_ids) {
    ArrangementSpec spec;
    if (!normals.empty()) spec.ambient_dim = static_cast<int>(normals[0].size());
    std::map<RatVec, int> seen;
    for (size_t i = 0; i < normals.size(); i++) {
        int id = provenance_ids.empty() ? static_cast<int>(i) : provenance_ids[i];
        RatVec n = normalize_direction(normals[i]);
        if (is_zero_vec(n)) {
            spec.zero_provenance.push_back(id);
            continue;
        }
        auto it = seen.find(n);
        if (it == seen.end()) {
            seen.emplace(n, spec.size());
            spec.normals.push_back(std::move(n));
            spec.provenance.push_back({id});
        } else {
            spec.provenance[it->second].push_back(id);
        }
    }
    return spec;
}

namespace {

SignVector signs_at(const ArrangementSpec& spec, const RatVec& p) {
    SignVector s(spec.size());
    for (int i = 0; i < spec.size(); i++) {
        int sg = sign_of(dot(spec.normals[i], p));
        if (sg == 0) throw std::logic_error("signs_at: point on a hyperplane");
        s.set(i, sg > 0);
    }
    return s;
}

bool matches(const ArrangementSpec& spec, const SignVector& s, const RatVec& p) {
    for (int i = 0; i < spec.size(); i++) {
        int sg = sign_of(dot(spec.normals[i], p));
        if (sg == 0 || (sg > 0) != s.get(i)) return false;
    }
    return true;
}

ConstraintSystem system_for(const ArrangementSpec& spec, const SignVector& s) {
    ConstraintSystem cs;
    cs.ambient_dim = spec.ambient_dim;
    cs.strict.reserve(spec.size());
    for (int i = 0; i < spec.size(); i++)
        cs.strict.push_back(s.get(i) ? spec.normals[i] : neg(spec.normals[i]));
    return cs;
}

// Deterministic generic start direction (1, t, t^2, ...) off every hyperplane.
RatVec generic_start_point(const ArrangementSpec& spec) {
    for (long t = 1;; t++) {
        RatVec p(spec.ambient_dim);
        Rational pw = 1;
        for (int j = 0; j < spec.ambient_dim; j++) {
            p[j] = pw;
            pw *= t;
        }
        bool ok = true;
        for (const auto& n : spec.normals)
            if (dot(n, p) == 0) {
                ok = false;
                break;
            }
        if (ok) return p;
    }
}

struct Walker {
    const ArrangementSpec& spec;
    bool want_witnesses;
    int workers;

    std::mutex mu;
    std::unordered_set<std::string> visited;  // claimed sign vectors (feasible or not)
    std::vector<Chamber> result;
    long long count = 0;

    Walker(const ArrangementSpec& s, bool w, int wk) : spec(s), want_witnesses(w), workers(std::max(1, wk)) {}

    // Claim a sign vector for testing; false if someone already did.
    bool claim(const SignVector& s) {
        std::lock_guard<std::mutex> lk(mu);
        return visited.insert(s.key()).second;
    }

    void emit(const SignVector& s, RatVec witness, std::vector<std::pair<SignVector, RatVec>>& frontier_out) {
        frontier_out.emplace_back(s, witness);
        std::lock_guard<std::mutex> lk(mu);
        count++;
        if (want_witnesses) result.push_back(Chamber{s, std::move(witness)});
    }

    // The canonical emitted witness: slack-maximizing point of the cell, taken
    // from the lexicographically smaller of the antipodal pair so that both
    // sides agree across runs.
    RatVec canonical_witness(const SignVector& s) {
        SignVector t = s.negated();
        bool flip = t < s;
        auto r = strict_feasible(system_for(spec, flip ? t : s));
        if (!r.feasible) throw std::logic_error("canonical_witness: infeasible chamber");
        return flip ? neg(*r.witness) : *r.witness;
    }

    void expand(const SignVector& s, const RatVec& w,
                std::vector<std::pair<SignVector, RatVec>>& frontier_out) {
        for (int i = 0; i < spec.size(); i++) {
            SignVector t = s.flipped(i);
            {
                std::lock_guard<std::mutex> lk(mu);
                if (visited.count(t.key())) continue;
            }
            // Reflection shortcut: mirror the witness across hyperplane i and
            // accept on exact sign match, avoiding an LP solve.
            const RatVec& n = spec.normals[i];
            Rational lambda = 2 * dot(n, w) / dot(n, n);
            RatVec q = w;
            for (int j = 0; j < spec.ambient_dim; j++) q[j] -= lambda * n[j];
            bool feasible;
            RatVec witness;
            if (matches(spec, t, q)) {
                feasible = true;
                witness = std::move(q);
            } else {
                auto r = strict_feasible(system_for(spec, t));
                feasible = r.feasible;
                if (feasible) witness = std::move(*r.witness);
            }
            if (!claim(t)) continue;
            if (!feasible) continue;
            if (want_witnesses) witness = canonical_witness(t);
            emit(t, std::move(witness), frontier_out);
            // The antipodal cell comes free in a central arrangement, and its
            // slack-max point is exactly the negation.
            SignVector anti = t.negated();
            if (claim(anti)) emit(anti, neg(frontier_out.back().second), frontier_out);
        }
    }

    void run() {
        if (spec.size() == 0) {
            // No hyperplanes: a single cell, the whole space.
            SignVector s(0);
            std::lock_guard<std::mutex> lk(mu);
            count = 1;
            if (want_witnesses) result.push_back(Chamber{s, RatVec(spec.ambient_dim, Rational(0))});
            return;
        }

        SignVector start(spec.size());
        for (int i = 0; i < spec.size(); i++) start.set(i, true);
        auto r0 = strict_feasible(system_for(spec, start));
        RatVec w0;
        if (r0.feasible) {
            w0 = *r0.witness;
        } else {
            RatVec p = generic_start_point(spec);
            start = signs_at(spec, p);
            auto r1 = strict_feasible(system_for(spec, start));
            assert(r1.feasible);
            w0 = *r1.witness;
        }
        claim(start);
        std::vector<std::pair<SignVector, RatVec>> frontier;
        {
            RatVec w = want_witnesses ? canonical_witness(start) : w0;
            emit(start, w, frontier);
            SignVector anti = start.negated();
            if (claim(anti)) emit(anti, neg(frontier.back().second), frontier);
        }

        while (!frontier.empty()) {
            std::vector<std::pair<SignVector, RatVec>> next;
            if (workers <= 1 || frontier.size() < 4) {
                for (auto& [s, w] : frontier) expand(s, w, next);
            } else {
                std::atomic<size_t> idx{0};
                std::mutex next_mu;
                auto task = [&]() {
                    std::vector<std::pair<SignVector, RatVec>> local;
                    for (;;) {
                        size_t i = idx.fetch_add(1);
                        if (i >= frontier.size()) break;
                        expand(frontier[i].first, frontier[i].second, local);
                    }
                    std::lock_guard<std::mutex> lk(next_mu);
                    for (auto& x : local) next.push_back(std::move(x));
                };
                std::vector<std::thread> pool;
                for (int t = 0; t < workers; t++) pool.emplace_back(task);
                for (auto& th : pool) th.join();
            }
            frontier = std::move(next);
        }
    }
};

}  // namespace

std::vector<Chamber> enumerate_chambers(const ArrangementSpec& spec, int workers) {
    Walker w(spec, /*want_witnesses=*/true, workers);
    w.run();
    std::sort(w.result.begin(), w.result.end(),
              [](const Chamber& a, const Chamber& b) { return a.sign < b.sign; });
    return std::move(w.result);
}

long long count_chambers(const ArrangementSpec& spec, int workers) {
    Walker w(spec, /*want_witnesses=*/false, workers);
    w.run();
    return w.count;
}

namespace {

ArrangementSpec restricted_arrangement(const RestrictedSystem& rs) {
    std::vector<RatVec> cols;
    cols.reserve(rs.matrix.cols);
    for (int j = 0; j < rs.matrix.cols; j++) cols.push_back(rs.matrix.col(j));
    return build_arrangement(cols, rs.column_vertex);
}

}  // namespace

FlatCells enumerate_cells_on_flat(const CubeSpec& spec, const VertexTuple& tuple, int workers) {
    FlatCells out;
    out.tuple = tuple;
    RestrictedSystem rs = restrict_by_tuple(spec, tuple);
    out.restricted = restricted_arrangement(rs);
    auto cells = enumerate_chambers(out.restricted, workers);
    out.cells.reserve(cells.size());
    for (auto& c : cells) {
        Chamber lifted;
        lifted.sign = c.sign;
        lifted.witness = lift(c.witness, rs.chain);
        out.cells.push_back(std::move(lifted));
    }
    return out;
}

long long count_cells_on_flat(const CubeSpec& spec, const VertexTuple& tuple, int workers) {
    RestrictedSystem rs = restrict_by_tuple(spec, tuple);
    return count_chambers(restricted_arrangement(rs), workers);
}

}  // namespace cubeslice

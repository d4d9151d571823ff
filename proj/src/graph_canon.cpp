#include "cubeslice/graph_canon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cubeslice {

namespace {

struct Canonizer {
    int n;
    const std::vector<std::vector<int>>& adj;
    const std::vector<int>& init_colors;
    std::string best;
    bool have_best = false;

    Canonizer(const std::vector<std::vector<int>>& a, const std::vector<int>& c)
        : n(static_cast<int>(a.size())), adj(a), init_colors(c) {}

    // Equitable refinement; new color ids are ranks of (old color, sorted
    // neighbor colors), which is relabeling-invariant.
    std::vector<int> refine(std::vector<int> col) const {
        for (;;) {
            std::vector<std::pair<std::vector<int>, int>> sig(n);
            for (int v = 0; v < n; v++) {
                std::vector<int> s;
                s.reserve(adj[v].size() + 1);
                s.push_back(col[v]);
                std::vector<int> nb;
                nb.reserve(adj[v].size());
                for (int u : adj[v]) nb.push_back(col[u]);
                std::sort(nb.begin(), nb.end());
                s.insert(s.end(), nb.begin(), nb.end());
                sig[v] = {std::move(s), v};
            }
            std::map<std::vector<int>, int> ids;
            for (auto& [s, v] : sig) ids.emplace(s, 0);
            int next = 0;
            for (auto& [s, id] : ids) id = next++;
            std::vector<int> ncol(n);
            for (auto& [s, v] : sig) ncol[v] = ids[s];
            if (ncol == col) return col;
            col = std::move(ncol);
        }
    }

    // Encode under a discrete coloring: order vertices by color rank, emit the
    // initial colors then the adjacency bits row by row.
    std::string encode(const std::vector<int>& col) const {
        std::vector<int> order(n);
        for (int v = 0; v < n; v++) order[col[v]] = v;
        std::string out;
        out.reserve(2 + n + (n * n + 7) / 8);
        out.push_back(static_cast<char>(n));
        for (int i = 0; i < n; i++) out.push_back(static_cast<char>(init_colors[order[i]]));
        std::vector<char> bits((static_cast<size_t>(n) * n + 7) / 8, 0);
        std::vector<int> pos(n);
        for (int i = 0; i < n; i++) pos[order[i]] = i;
        for (int i = 0; i < n; i++)
            for (int u : adj[order[i]]) {
                size_t b = static_cast<size_t>(i) * n + pos[u];
                bits[b >> 3] |= char(1 << (b & 7));
            }
        out.append(bits.begin(), bits.end());
        return out;
    }

    void search(std::vector<int> col) {
        col = refine(std::move(col));
        // Smallest non-singleton class, ties by color id.
        std::map<int, std::vector<int>> classes;
        for (int v = 0; v < n; v++) classes[col[v]].push_back(v);
        int target = -1;
        size_t target_size = 0;
        for (auto& [c, vs] : classes)
            if (vs.size() > 1 && (target < 0 || vs.size() < target_size)) {
                target = c;
                target_size = vs.size();
            }
        if (target < 0) {
            std::string enc = encode(col);
            if (!have_best || enc < best) {
                best = std::move(enc);
                have_best = true;
            }
            return;
        }
        for (int v : classes[target]) {
            std::vector<int> c2 = col;
            c2[v] = n;  // fresh maximal color
            search(std::move(c2));
        }
    }

    std::string run() {
        if (n == 0) return std::string(1, '\0');
        if (n > 200) throw std::logic_error("canonical_graph_key: graph too large");
        search(init_colors);
        return best;
    }
};

}  // namespace

std::string canonical_graph_key(const std::vector<std::vector<int>>& adjacency,
                                const std::vector<int>& colors) {
    return Canonizer(adjacency, colors).run();
}

}  // namespace cubeslice

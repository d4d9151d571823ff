#include "cubeslice/comb_type.hpp"

#include <algorithm>

#include "cubeslice/graph_canon.hpp"

namespace cubeslice {

std::string canonical_key(const Slice& s) {
    int n = s.vertex_count(), m = s.facet_count();
    std::vector<std::vector<int>> adj(n + m);
    for (int f = 0; f < m; f++)
        for (int v = 0; v < n; v++)
            if (s.incident(v, f)) {
                adj[v].push_back(n + f);
                adj[n + f].push_back(v);
            }
    std::vector<int> colors(n + m, 0);
    for (int f = 0; f < m; f++) colors[n + f] = 1;  // facet side
    return canonical_graph_key(adj, colors);
}

std::string key_to_hex(const std::string& key) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(key.size() * 2);
    for (unsigned char c : key) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

bool TypeRegistry::insert(const Slice& s, const InsertInfo& info, std::string* key_out) {
    std::vector<int> fv = f_vector(s);
    std::string key = canonical_key(s);
    if (key_out) *key_out = key;
    RatVec nrm = normalize_direction(info.normal);

    std::lock_guard<std::mutex> lk(*mu_);
    auto& bucket = buckets_[fv];
    for (auto& e : bucket) {
        if (e.key != key) continue;
        auto& m = e.meta;
        m.min_k = std::min(m.min_k, info.k);
        m.ks.insert(info.k);
        m.central |= info.central;
        auto it = m.normal_per_k.find(info.k);
        if (it == m.normal_per_k.end() || compare(nrm, it->second) < 0) m.normal_per_k[info.k] = nrm;
        if (compare(nrm, m.min_normal) < 0) m.min_normal = nrm;
        return false;
    }
    TypeEntry e;
    e.key = std::move(key);
    e.rep = s;
    e.fvec = std::move(fv);
    e.meta.min_k = info.k;
    e.meta.ks.insert(info.k);
    e.meta.central = info.central;
    e.meta.normal_per_k[info.k] = nrm;
    e.meta.min_normal = std::move(nrm);
    bucket.push_back(std::move(e));
    count_++;
    return true;
}

size_t TypeRegistry::size() const {
    std::lock_guard<std::mutex> lk(*mu_);
    return count_;
}

std::vector<const TypeEntry*> TypeRegistry::entries() const {
    std::lock_guard<std::mutex> lk(*mu_);
    std::vector<const TypeEntry*> out;
    out.reserve(count_);
    for (const auto& [fv, bucket] : buckets_) {
        std::vector<const TypeEntry*> b;
        for (const auto& e : bucket) b.push_back(&e);
        std::sort(b.begin(), b.end(), [](const TypeEntry* a, const TypeEntry* c) { return a->key < c->key; });
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

const TypeEntry* TypeRegistry::find_key(const std::string& key) const {
    std::lock_guard<std::mutex> lk(*mu_);
    for (const auto& [fv, bucket] : buckets_)
        for (const auto& e : bucket)
            if (e.key == key) return &e;
    return nullptr;
}

}  // namespace cubeslice

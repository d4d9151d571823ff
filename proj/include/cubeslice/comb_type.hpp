#ifndef CUBESLICE_COMB_TYPE_HPP
#define CUBESLICE_COMB_TYPE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>

#include "cubeslice/slice.hpp"

namespace cubeslice {

/// Canonical key of the vertex-facet bipartite graph with side colors; equal
/// keys exactly for isomorphic vertex-facet incidence structures.
std::string canonical_key(const Slice& s);

std::string key_to_hex(const std::string& key);

/// Everything recorded per combinatorial type.
struct TypeMeta {
    int min_k = 0;
    std::set<int> ks;                     // every k the type was seen at
    bool central = false;                 // realizable by a central slice
    std::map<int, RatVec> normal_per_k;   // lexicographically least witness per k
    RatVec min_normal;                    // least overall
};

struct TypeEntry {
    std::string key;
    Slice rep;
    std::vector<int> fvec;
    TypeMeta meta;
};

/// Deduplicating registry of Algorithm-style classification: f-vector bucket
/// lookup first, canonical-key comparison within the bucket. Inserts merge
/// metadata (min-k downward, central flag OR-ed, witness minima). Concurrent
/// inserts allowed; iteration order is canonical (f-vector, then key).
class TypeRegistry {
  public:
    struct InsertInfo {
        int k = 0;
        RatVec normal;  // ambient witness normal, sign-normalized
        bool central = false;
    };

    // Returns true when the slice's type was new; key_out receives the
    // canonical key.
    bool insert(const Slice& s, const InsertInfo& info, std::string* key_out = nullptr);

    size_t size() const;
    /// Entries sorted by (f-vector, key).
    std::vector<const TypeEntry*> entries() const;
    const TypeEntry* find_key(const std::string& key) const;

  private:
    mutable std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
    std::map<std::vector<int>, std::vector<TypeEntry>> buckets_;
    size_t count_ = 0;
};

}  // namespace cubeslice

#endif

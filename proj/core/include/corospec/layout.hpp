#pragma once

#include <vector>

namespace corospec {

// Half-open interval of vertex indices.
struct IndexRange {
    int begin = 0;
    int end = 0;

    int size() const { return end - begin; }
    bool contains(int i) const { return i >= begin && i < end; }
    bool operator==(const IndexRange&) const = default;
};

// Canonical vertex ordering of a composite graph:
//   [ base vertices | aux vertices | copy 0 | copy 1 | ... ]
// where aux holds edge-vertices (Q/total constructions) or twin vertices
// (splitting constructions) and is empty otherwise.
struct CompositeLayout {
    IndexRange base;
    IndexRange aux;
    std::vector<IndexRange> copies;

    int total() const {
        int t = base.size() + aux.size();
        for (const auto& c : copies) t += c.size();
        return t;
    }
    bool operator==(const CompositeLayout&) const = default;
};

} // namespace corospec

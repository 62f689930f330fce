#pragma once

#include <cstdint>

#include "json.hpp"

namespace gqlbench::gql {

using Json = nlohmann::json;

// Number of leaf positions in a response tree. Every scalar position counts
// as one leaf, including explicit nulls; an empty array contributes none.
inline int64_t count_leaf_nodes(const Json& v) {
    if (v.is_object()) {
        int64_t n = 0;
        for (const auto& [k, sub] : v.items()) {
            (void)k;
            n += count_leaf_nodes(sub);
        }
        return n;
    }
    if (v.is_array()) {
        int64_t n = 0;
        for (const auto& sub : v) n += count_leaf_nodes(sub);
        return n;
    }
    return 1;  // scalar or null
}

}  // namespace gqlbench::gql

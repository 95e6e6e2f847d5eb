#pragma once

// The 77-vertex M22 graph, built from embedded S(3,6,22) block data:
// vertices are the blocks, adjacent iff disjoint. The construction
// self-certifies before returning — the Steiner property and the
// SRG(77,16,0,4) parameters are both checked, so the provenance of the
// embedded data is irrelevant to correctness.

#include <string>

#include "tightsrg/design.hpp"
#include "tightsrg/errors.hpp"
#include "tightsrg/graph.hpp"
#include "tightsrg/steiner22_data.hpp"

namespace tightsrg {

// The embedded S(3,6,22) as a block design (22 points, 77 blocks of size 6).
inline BlockDesign steiner22_design() {
    BlockDesign d = parse_design(std::string(kSteiner22BlockData));
    if (d.point_count != 22 || d.blocks.size() != 77)
        throw SelfCheckFailed("embedded data is not 77 blocks on 22 points");
    for (const auto& b : d.blocks)
        if (b.size() != 6) throw SelfCheckFailed("embedded block of size != 6");
    // Steiner property: every 3-subset of the points lies in exactly one block
    std::vector<int> cover(22 * 22 * 22, 0);
    for (const auto& b : d.blocks)
        for (size_t i = 0; i < 6; ++i)
            for (size_t j = i + 1; j < 6; ++j)
                for (size_t l = j + 1; l < 6; ++l)
                    ++cover[(b[i] * 22 + b[j]) * 22 + b[l]];
    for (int i = 0; i < 22; ++i)
        for (int j = i + 1; j < 22; ++j)
            for (int l = j + 1; l < 22; ++l)
                if (cover[(i * 22 + j) * 22 + l] != 1)
                    throw SelfCheckFailed("triple {" + std::to_string(i) + "," +
                                          std::to_string(j) + "," + std::to_string(l) +
                                          "} covered " +
                                          std::to_string(cover[(i * 22 + j) * 22 + l]) +
                                          " times");
    return d;
}

inline Graph m22_graph() {
    BlockDesign d = steiner22_design();
    Graph g(77);
    for (int i = 0; i < 77; ++i)
        for (int j = i + 1; j < 77; ++j) {
            bool disjoint = true;
            for (int x : d.blocks[i]) {
                for (int y : d.blocks[j])
                    if (x == y) { disjoint = false; break; }
                if (!disjoint) break;
            }
            if (disjoint) g.add_edge(i, j);
        }
    SrgParams p = verify_srg(g);
    if (!(p == SrgParams{77, 16, 0, 4}))
        throw SelfCheckFailed("block graph is not SRG(77,16,0,4)");
    return g;
}

}  // namespace tightsrg

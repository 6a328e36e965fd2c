#pragma once

#include <cstddef>
#include <cstdint>

#include "sqroot/graph.hpp"

namespace sqroot {

struct HktParams {
    std::size_t max_vertices = 20;   // the root never exceeds this
    std::size_t max_cycle = 10;      // longest even cycle block
};

/// Random connected graph satisfying hkt_planar_square_check, grown as a
/// tree of blocks (edges, triangles, 4-vertex blocks and even cycles) glued
/// at vertices of degree < 3. Vertex ids are shuffled. Deterministic in seed.
Graph generate_hkt_root(std::uint64_t seed, const HktParams& params = {});

struct ApexSquare {
    Graph square;  // square of `root`
    Graph root;
    std::size_t k = 0;  // deleting the last k vertices leaves a planar graph
};

/// Square of an HKT root extended by k apex vertices (ids n..n+k-1).
///
/// Each apex picks 1–4 neighbours inside N[c] for a random base vertex c,
/// and may also join earlier apexes. Those neighbours are already pairwise
/// within distance 2, so the apex adds no new adjacency among base vertices
/// and removing the apexes leaves the planar square of the base root.
ApexSquare generate_apex_square(std::uint64_t seed, std::size_t k, const HktParams& params = {});

}  // namespace sqroot

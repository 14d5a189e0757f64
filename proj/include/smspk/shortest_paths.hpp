#pragma once

#include <string>
#include <vector>

#include "smspk/pathway.hpp"

namespace smspk {

// One canonical geodesic, oriented from the smaller to the larger endpoint.
struct ShortestPath {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    int front() const { return vertices.front(); }
    int back() const { return vertices.back(); }
};

struct ShortestPathSet {
    std::string pathway_id;
    std::vector<ShortestPath> paths;  // sorted by (front, back)

    std::size_t count() const { return paths.size(); }
};

// BFS distances from one source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const PathwayGraph& g, int source);

// One geodesic per connected unordered pair, chosen deterministically: walking
// back from the larger endpoint, the smallest-index shortest predecessor wins
// at every hop. Disconnected pairs are omitted.
ShortestPathSet all_shortest_paths(const PathwayGraph& g);

// Longest geodesic length over connected pairs; 0 for edgeless graphs.
int diameter(const PathwayGraph& g);

}  // namespace smspk

#include "smspk/shortest_paths.hpp"

#include <algorithm>
#include <queue>

#include "smspk/errors.hpp"

namespace smspk {

std::vector<int> bfs_distances(const PathwayGraph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    dist[source] = 0;
    std::queue<int> frontier;
    frontier.push(source);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v : g.adj[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                frontier.push(v);
            }
        }
    }
    return dist;
}

namespace {

// parent[x] = smallest-index neighbour of x one BFS level closer to the source.
std::vector<int> shortest_predecessors(const PathwayGraph& g, const std::vector<int>& dist) {
    std::vector<int> parent(g.vertex_count(), -1);
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (dist[x] <= 0) continue;
        for (int w : g.adj[x]) {  // neighbour lists are sorted
            if (dist[w] == dist[x] - 1) {
                parent[x] = w;
                break;
            }
        }
    }
    return parent;
}

}  // namespace

ShortestPathSet all_shortest_paths(const PathwayGraph& g) {
    if (g.vertex_count() == 0) throw DataError("all_shortest_paths: empty graph");

    ShortestPathSet set;
    set.pathway_id = g.id;
    for (int u = 0; u < g.vertex_count(); ++u) {
        const auto dist = bfs_distances(g, u);
        const auto parent = shortest_predecessors(g, dist);
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (dist[v] < 0) continue;
            ShortestPath path;
            path.vertices.resize(dist[v] + 1);
            int cur = v;
            for (int pos = dist[v]; pos > 0; --pos) {
                path.vertices[pos] = cur;
                cur = parent[cur];
            }
            path.vertices[0] = u;
            set.paths.push_back(std::move(path));
        }
    }
    return set;
}

int diameter(const PathwayGraph& g) {
    if (g.vertex_count() == 0) throw DataError("diameter: empty graph");
    int best = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int d : bfs_distances(g, u)) best = std::max(best, d);
    }
    return best;
}

}  // namespace smspk

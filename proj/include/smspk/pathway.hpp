#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace smspk {

enum class NodeKind { gene, compound, map, ortholog, other };

NodeKind node_kind_from_string(const std::string& s, int line = 0);
const char* to_string(NodeKind kind);

struct RawNode {
    std::string id;
    NodeKind kind;
    std::string name;
};

// A pathway as declared in its source file, before the gene-only rewrite.
struct RawPathway {
    std::string id;
    std::vector<RawNode> nodes;
    std::vector<std::pair<std::string, std::string>> edges;  // unordered, deduplicated

    const RawNode* find_node(const std::string& node_id) const;
};

// Undirected gene graph. Vertex order is lexicographic in the gene symbol,
// so two loads of the same pathway always agree on indices.
struct PathwayGraph {
    std::string id;
    std::vector<std::string> genes;
    std::vector<std::vector<int>> adj;  // sorted neighbour lists, no self loops

    int vertex_count() const { return static_cast<int>(genes.size()); }
    std::size_t edge_count() const;
    bool has_edge(int u, int v) const;
    int index_of(const std::string& gene) const;  // -1 when absent
    Eigen::MatrixXd adjacency_matrix() const;
};

// Parses the line-oriented pathway text format:
//   node <node_id> <kind> <name>
//   edge <node_id> <node_id>
// '#' starts a comment line. Duplicate edges collapse; duplicate node ids,
// self loops and edges naming undeclared nodes are errors.
RawPathway parse_pathway(const std::string& text, const std::string& id);

// Gene-only rewrite: keeps gene nodes (merged by symbol), bypasses compounds
// transitively, and drops map/ortholog/other nodes together with their edges.
PathwayGraph preprocess(const RawPathway& raw);

PathwayGraph load_pathway_file(const std::filesystem::path& path);

// Loads every regular file in the directory, ordered by pathway id.
// Pathways that preprocess to zero genes are skipped with a warning on stderr.
std::vector<PathwayGraph> load_pathway_set(const std::filesystem::path& directory);

std::string pathway_to_text(const PathwayGraph& g);
void write_pathway_file(const PathwayGraph& g, const std::filesystem::path& path);

}  // namespace smspk

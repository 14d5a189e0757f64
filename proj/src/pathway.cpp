#include "smspk/pathway.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "smspk/errors.hpp"
#include "smspk/text.hpp"

namespace smspk {

NodeKind node_kind_from_string(const std::string& s, int line) {
    if (s == "gene") return NodeKind::gene;
    if (s == "compound") return NodeKind::compound;
    if (s == "map") return NodeKind::map;
    if (s == "ortholog") return NodeKind::ortholog;
    if (s == "other") return NodeKind::other;
    throw ParseError("unknown node kind '" + s + "'", line);
}

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::gene: return "gene";
        case NodeKind::compound: return "compound";
        case NodeKind::map: return "map";
        case NodeKind::ortholog: return "ortholog";
        case NodeKind::other: return "other";
    }
    return "other";
}

const RawNode* RawPathway::find_node(const std::string& node_id) const {
    for (const auto& n : nodes) {
        if (n.id == node_id) return &n;
    }
    return nullptr;
}

std::size_t PathwayGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nbrs : adj) twice += nbrs.size();
    return twice / 2;
}

bool PathwayGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    const auto& nbrs = adj[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int PathwayGraph::index_of(const std::string& gene) const {
    auto it = std::lower_bound(genes.begin(), genes.end(), gene);
    if (it == genes.end() || *it != gene) return -1;
    return static_cast<int>(it - genes.begin());
}

Eigen::MatrixXd PathwayGraph::adjacency_matrix() const {
    const int n = vertex_count();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u) {
        for (int v : adj[u]) a(u, v) = 1.0;
    }
    return a;
}

RawPathway parse_pathway(const std::string& text, const std::string& id) {
    RawPathway raw;
    raw.id = id;

    struct PendingEdge {
        std::string a, b;
        int line;
    };
    std::unordered_set<std::string> seen_ids;
    std::vector<PendingEdge> pending;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;

        const auto tokens = split_tokens(stripped);
        if (tokens[0] == "node") {
            if (tokens.size() < 4) {
                throw ParseError("node line needs: node <id> <kind> <name>", lineno);
            }
            RawNode node;
            node.id = tokens[1];
            node.kind = node_kind_from_string(tokens[2], lineno);
            // The name is the remainder of the line and may contain spaces.
            std::string name = tokens[3];
            for (std::size_t i = 4; i < tokens.size(); ++i) name += " " + tokens[i];
            node.name = name;
            if (!seen_ids.insert(node.id).second) {
                throw ParseError("duplicate node id '" + node.id + "'", lineno);
            }
            raw.nodes.push_back(std::move(node));
        } else if (tokens[0] == "edge") {
            if (tokens.size() != 3) {
                throw ParseError("edge line needs: edge <id> <id>", lineno);
            }
            if (tokens[1] == tokens[2]) {
                throw ParseError("self-loop edge on node '" + tokens[1] + "'", lineno);
            }
            pending.push_back({tokens[1], tokens[2], lineno});
        } else {
            throw ParseError("unrecognized directive '" + tokens[0] + "'", lineno);
        }
    }

    std::set<std::pair<std::string, std::string>> edge_set;
    for (const auto& e : pending) {
        if (!seen_ids.count(e.a)) {
            throw ParseError("edge endpoint '" + e.a + "' is not a declared node", e.line);
        }
        if (!seen_ids.count(e.b)) {
            throw ParseError("edge endpoint '" + e.b + "' is not a declared node", e.line);
        }
        auto key = e.a < e.b ? std::make_pair(e.a, e.b) : std::make_pair(e.b, e.a);
        edge_set.insert(key);
    }
    raw.edges.assign(edge_set.begin(), edge_set.end());
    return raw;
}

PathwayGraph preprocess(const RawPathway& raw) {
    std::unordered_map<std::string, const RawNode*> by_id;
    for (const auto& n : raw.nodes) by_id[n.id] = &n;

    // Gene vertices, merged by symbol, ordered lexicographically.
    std::set<std::string> symbols;
    for (const auto& n : raw.nodes) {
        if (n.kind == NodeKind::gene) symbols.insert(n.name);
    }
    if (symbols.empty()) {
        throw EmptyPathwayError("pathway '" + raw.id + "' has no gene nodes");
    }

    PathwayGraph g;
    g.id = raw.id;
    g.genes.assign(symbols.begin(), symbols.end());
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < g.vertex_count(); ++i) index[g.genes[i]] = i;

    std::unordered_map<std::string, std::vector<const RawNode*>> nbrs;
    for (const auto& [a, b] : raw.edges) {
        nbrs[a].push_back(by_id.at(b));
        nbrs[b].push_back(by_id.at(a));
    }

    std::set<std::pair<int, int>> edges;
    auto add_edge = [&](int u, int v) {
        if (u == v) return;  // merged symbols can fold an edge onto one vertex
        edges.insert({std::min(u, v), std::max(u, v)});
    };

    for (const auto& [a, b] : raw.edges) {
        const RawNode* na = by_id.at(a);
        const RawNode* nb = by_id.at(b);
        if (na->kind == NodeKind::gene && nb->kind == NodeKind::gene) {
            add_edge(index.at(na->name), index.at(nb->name));
        }
    }

    // Compound bypass: genes reachable from one another through a chain of
    // compounds stay connected. Each connected component of the
    // compound-induced subgraph contributes a clique over its gene neighbours.
    std::unordered_set<std::string> visited;
    for (const auto& n : raw.nodes) {
        if (n.kind != NodeKind::compound || visited.count(n.id)) continue;
        std::vector<const RawNode*> stack{&n};
        visited.insert(n.id);
        std::set<int> gene_nbrs;
        while (!stack.empty()) {
            const RawNode* cur = stack.back();
            stack.pop_back();
            auto it = nbrs.find(cur->id);
            if (it == nbrs.end()) continue;
            for (const RawNode* other : it->second) {
                if (other->kind == NodeKind::compound) {
                    if (visited.insert(other->id).second) stack.push_back(other);
                } else if (other->kind == NodeKind::gene) {
                    gene_nbrs.insert(index.at(other->name));
                }
            }
        }
        for (auto u = gene_nbrs.begin(); u != gene_nbrs.end(); ++u) {
            for (auto v = std::next(u); v != gene_nbrs.end(); ++v) {
                add_edge(*u, *v);
            }
        }
    }

    g.adj.assign(g.vertex_count(), {});
    for (const auto& [u, v] : edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& list : g.adj) std::sort(list.begin(), list.end());
    return g;
}

PathwayGraph load_pathway_file(const std::filesystem::path& path) {
    const std::string id = path.stem().string();
    const std::string text = read_text_file(path);
    try {
        return preprocess(parse_pathway(text, id));
    } catch (const EmptyPathwayError&) {
        throw;
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), 0);
    }
}

std::vector<PathwayGraph> load_pathway_set(const std::filesystem::path& directory) {
    std::error_code ec;
    if (!std::filesystem::is_directory(directory, ec)) {
        throw DataError("not a directory: " + directory.string());
    }

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(directory)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (!name.empty() && name[0] == '.') continue;
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.stem().string() < b.stem().string(); });

    std::vector<PathwayGraph> graphs;
    for (const auto& file : files) {
        try {
            graphs.push_back(load_pathway_file(file));
        } catch (const EmptyPathwayError&) {
            std::cerr << "warning: skipping pathway with no genes: " << file.string() << "\n";
        }
    }
    return graphs;
}

std::string pathway_to_text(const PathwayGraph& g) {
    std::ostringstream out;
    out << "# pathway " << g.id << "\n";
    for (int i = 0; i < g.vertex_count(); ++i) {
        out << "node g" << i << " gene " << g.genes[i] << "\n";
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.adj[u]) {
            if (u < v) out << "edge g" << u << " g" << v << "\n";
        }
    }
    return out.str();
}

void write_pathway_file(const PathwayGraph& g, const std::filesystem::path& path) {
    write_text_file(path, pathway_to_text(g));
}

}  // namespace smspk

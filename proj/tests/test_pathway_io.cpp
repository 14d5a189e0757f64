#include <doctest.h>

#include <algorithm>

#include "smspk/errors.hpp"
#include "smspk/pathway.hpp"
#include "smspk/text.hpp"
#include "test_util.hpp"

using namespace smspk;

namespace {

const char* kSmallPathway =
    "# a comment\n"
    "node n1 gene TP53\n"
    "node n2 gene BRCA1\n"
    "node n3 gene EGFR\n"
    "edge n1 n2\n"
    "edge n2 n3\n";

}  // namespace

TEST_CASE("parse and preprocess a plain gene pathway") {
    const auto g = preprocess(parse_pathway(kSmallPathway, "hsa001"));
    CHECK(g.id == "hsa001");
    // vertex order is lexicographic in the symbol
    REQUIRE(g.genes == std::vector<std::string>{"BRCA1", "EGFR", "TP53"});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 2));  // BRCA1 - TP53
    CHECK(g.has_edge(0, 1));  // BRCA1 - EGFR
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.index_of("EGFR") == 1);
    CHECK(g.index_of("MISSING") == -1);
}

TEST_CASE("adjacency matrix matches the edge list") {
    const auto g = preprocess(parse_pathway(kSmallPathway, "p"));
    const auto a = g.adjacency_matrix();
    REQUIRE(a.rows() == 3);
    CHECK(a(0, 2) == 1.0);
    CHECK(a(2, 0) == 1.0);
    CHECK(a(1, 2) == 0.0);
    CHECK(a.diagonal().isZero());
    CHECK(a.isApprox(a.transpose()));
}

TEST_CASE("duplicate node ids are rejected") {
    CHECK_THROWS_AS(parse_pathway("node n1 gene A\nnode n1 gene B\n", "p"), ParseError);
}

TEST_CASE("self loops are rejected") {
    CHECK_THROWS_AS(parse_pathway("node n1 gene A\nedge n1 n1\n", "p"), ParseError);
}

TEST_CASE("edges must name declared nodes, with the offending line") {
    try {
        parse_pathway("node n1 gene A\nedge n1 n9\n", "p");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("malformed directives are rejected") {
    CHECK_THROWS_AS(parse_pathway("node n1\n", "p"), ParseError);
    CHECK_THROWS_AS(parse_pathway("edge n1\n", "p"), ParseError);
    CHECK_THROWS_AS(parse_pathway("vertex n1 gene A\n", "p"), ParseError);
    CHECK_THROWS_AS(parse_pathway("node n1 protein A\n", "p"), ParseError);
}

TEST_CASE("duplicate edges collapse") {
    const auto raw = parse_pathway(
        "node n1 gene A\nnode n2 gene B\nedge n1 n2\nedge n2 n1\nedge n1 n2\n", "p");
    CHECK(raw.edges.size() == 1);
    CHECK(preprocess(raw).edge_count() == 1);
}

TEST_CASE("nodes sharing a gene symbol merge") {
    const auto g = preprocess(parse_pathway(
        "node n1 gene A\nnode n2 gene A\nnode n3 gene B\nedge n1 n3\nedge n2 n3\n", "p"));
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("compounds are bypassed transitively") {
    // A - c1 - c2 - B becomes A - B; the compounds leave no vertices behind.
    const auto g = preprocess(parse_pathway(
        "node n1 gene A\n"
        "node c1 compound ATP\n"
        "node c2 compound ADP\n"
        "node n2 gene B\n"
        "edge n1 c1\nedge c1 c2\nedge c2 n2\n",
        "p"));
    REQUIRE(g.genes == std::vector<std::string>{"A", "B"});
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));
}

TEST_CASE("a compound shared by three genes yields a clique") {
    const auto g = preprocess(parse_pathway(
        "node a gene A\nnode b gene B\nnode c gene C\nnode x compound X\n"
        "edge a x\nedge b x\nedge c x\n",
        "p"));
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("a compound touching one gene leaves no trace") {
    const auto g = preprocess(parse_pathway(
        "node a gene A\nnode b gene B\nnode x compound X\nedge a b\nedge a x\n", "p"));
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("map and ortholog nodes drop with their edges") {
    const auto g = preprocess(parse_pathway(
        "node a gene A\nnode b gene B\nnode m map PATH2\nnode o ortholog KO1\n"
        "edge a m\nedge m b\nedge a o\nedge o b\n",
        "p"));
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 0);  // no bypass through non-compound nodes
}

TEST_CASE("pathways with no genes are empty") {
    CHECK_THROWS_AS(preprocess(parse_pathway("node x compound X\n", "p")),
                    EmptyPathwayError);
}

TEST_CASE("write and reload round trips") {
    testutil::TempDir dir;
    const auto g = preprocess(parse_pathway(kSmallPathway, "round"));
    write_pathway_file(g, dir.file("round.pathway"));
    const auto back = load_pathway_file(dir.file("round.pathway"));
    CHECK(back.id == g.id);
    CHECK(back.genes == g.genes);
    CHECK(back.adj == g.adj);
}

TEST_CASE("load_pathway_set orders by id and skips geneless files") {
    testutil::TempDir dir;
    write_text_file(dir.file("bbb.pathway"), "node n1 gene ZZ\n");
    write_text_file(dir.file("aaa.pathway"), kSmallPathway);
    write_text_file(dir.file("empty.pathway"), "node x compound X\n");
    const auto set = load_pathway_set(dir.path());
    REQUIRE(set.size() == 2);
    CHECK(set[0].id == "aaa");
    CHECK(set[1].id == "bbb");
}

TEST_CASE("load_pathway_set rejects missing directories") {
    CHECK_THROWS_AS(load_pathway_set("/nonexistent/smspk"), DataError);
}

TEST_CASE("parse errors carry the file name when loading from disk") {
    testutil::TempDir dir;
    write_text_file(dir.file("bad.pathway"), "node n1 gene A\nedge n1 n7\n");
    try {
        load_pathway_file(dir.file("bad.pathway"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("bad.pathway") != std::string::npos);
    }
}

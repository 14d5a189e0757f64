#include <doctest.h>

#include "smspk/cohort.hpp"
#include "smspk/errors.hpp"
#include "test_util.hpp"

using namespace smspk;

namespace {

const char* kMutations =
    "patient\tgene\timpact\n"
    "P2\tTP53\thigh\n"
    "P1\tBRCA1\tmedium\n"
    "P1\tTP53\tlow\n"
    "P3\tEGFR\tneutral\n";

const char* kClinical =
    "patient\ttime_days\tevent\n"
    "P1\t120.5\t1\n"
    "P2\t300\t0\n"
    "P3\t45\t1\n";

}  // namespace

TEST_CASE("mutation catalog loads, filters and sorts") {
    const auto catalog = load_mutations(kMutations);
    // lexicographic patient order, independent of row order
    CHECK(catalog.patients == std::vector<std::string>{"P1", "P2", "P3"});
    CHECK(catalog.genes_of("P1").count("TP53") == 1);
    CHECK(catalog.genes_of("P1").count("BRCA1") == 1);
    CHECK(catalog.genes_of("P2").size() == 1);
    // neutral impact filtered, but the patient remains with an empty set
    CHECK(catalog.has_patient("P3"));
    CHECK(catalog.genes_of("P3").empty());
    CHECK_THROWS_AS(catalog.genes_of("P9"), DataError);
}

TEST_CASE("mutation header and rows are validated") {
    CHECK_THROWS_AS(load_mutations("gene\tpatient\timpact\n"), ParseError);
    CHECK_THROWS_AS(load_mutations("patient\tgene\timpact\nP1\tTP53\n"), ParseError);
    CHECK_THROWS_AS(load_mutations("patient\tgene\timpact\nP1\tTP53\tsevere\n"), ParseError);
}

TEST_CASE("windows line endings are tolerated") {
    const auto catalog = load_mutations("patient\tgene\timpact\r\nP1\tTP53\thigh\r\n");
    CHECK(catalog.genes_of("P1").count("TP53") == 1);
}

TEST_CASE("impact filter is configurable") {
    const auto all = load_mutations(kMutations,
                                    {Impact::neutral, Impact::low, Impact::medium, Impact::high});
    CHECK(all.genes_of("P3").count("EGFR") == 1);
    const auto high_only = load_mutations(kMutations, {Impact::high});
    CHECK(high_only.genes_of("P1").empty());
    CHECK(high_only.genes_of("P2").count("TP53") == 1);
}

TEST_CASE("label vector and matrix align to pathway vertex order") {
    const auto catalog = load_mutations(kMutations);
    const auto g = preprocess(parse_pathway(
        "node n1 gene TP53\nnode n2 gene BRCA1\nnode n3 gene EGFR\nedge n1 n2\n", "p"));
    // genes: BRCA1, EGFR, TP53

    const auto v = label_vector(catalog, "P1", g);
    CHECK(v.pathway_id == "p");
    CHECK(v.patient_id == "P1");
    CHECK(v.labels == std::vector<std::uint8_t>{1, 0, 1});

    const auto m = label_matrix(catalog, {"P1", "P2", "PX"}, g);
    REQUIRE(m.rows() == 3);
    CHECK(m(0, 0) == 1.0);  // P1 BRCA1
    CHECK(m(0, 2) == 1.0);  // P1 TP53
    CHECK(m(1, 2) == 1.0);  // P2 TP53
    CHECK(m.row(2).isZero());  // unknown patient gets a zero row
    CHECK(m.sum() == 3.0);
}

TEST_CASE("clinical table loads and validates") {
    const auto table = load_clinical(kClinical);
    REQUIRE(table.records.size() == 3);
    CHECK(table.patients_sorted() == std::vector<std::string>{"P1", "P2", "P3"});
    const auto* r = table.find("P1");
    REQUIRE(r);
    CHECK(r->time == 120.5);
    CHECK(r->event == 1);
    CHECK(table.find("P9") == nullptr);

    CHECK_THROWS_AS(load_clinical("patient\ttime\tevent\n"), ParseError);
    CHECK_THROWS_AS(load_clinical("patient\ttime_days\tevent\nP1\t-3\t1\n"), ParseError);
    CHECK_THROWS_AS(load_clinical("patient\ttime_days\tevent\nP1\t10\t2\n"), ParseError);
    CHECK_THROWS_AS(
        load_clinical("patient\ttime_days\tevent\nP1\t10\t1\nP1\t20\t0\n"), ParseError);
}

TEST_CASE("cohort files load from disk") {
    testutil::TempDir dir;
    write_text_file(dir.file("m.tsv"), kMutations);
    write_text_file(dir.file("c.tsv"), kClinical);
    CHECK(load_mutations_file(dir.file("m.tsv")).patients.size() == 3);
    CHECK(load_clinical_file(dir.file("c.tsv")).records.size() == 3);
}

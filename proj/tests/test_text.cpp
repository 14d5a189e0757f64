#include <doctest.h>

#include "smspk/errors.hpp"
#include "smspk/text.hpp"
#include "test_util.hpp"

using namespace smspk;

TEST_CASE("trim strips surrounding whitespace") {
    CHECK(trim("  a b \t") == "a b");
    CHECK(trim("\r\n") == "");
    CHECK(trim("x") == "x");
}

TEST_CASE("split_fields keeps empty fields") {
    const auto fields = split_fields("a\t\tb", '\t');
    REQUIRE(fields.size() == 3);
    CHECK(fields[0] == "a");
    CHECK(fields[1] == "");
    CHECK(fields[2] == "b");
}

TEST_CASE("split_tokens collapses whitespace runs") {
    const auto tokens = split_tokens("  node   n1\tgene  TP53 ");
    REQUIRE(tokens.size() == 4);
    CHECK(tokens[0] == "node");
    CHECK(tokens[3] == "TP53");
}

TEST_CASE("format_g12 uses 12 significant digits") {
    CHECK(format_g12(0.1) == "0.1");
    CHECK(format_g12(1.0) == "1");
    CHECK(format_g12(1.0 / 3.0) == "0.333333333333");
    CHECK(format_g12(-2.5e-8) == "-2.5e-08");
}

TEST_CASE("parse_double rejects trailing junk") {
    CHECK(parse_double("1.5") == 1.5);
    CHECK(parse_double("-3e2") == -300.0);
    CHECK_THROWS_AS(parse_double("1.5x"), ParseError);
    CHECK_THROWS_AS(parse_double(""), ParseError);
    CHECK_THROWS_AS(parse_double("nanx"), ParseError);
}

TEST_CASE("parse_long is strict") {
    CHECK(parse_long("42") == 42);
    CHECK(parse_long("-7") == -7);
    CHECK_THROWS_AS(parse_long("12.5"), ParseError);
    CHECK_THROWS_AS(parse_long("x"), ParseError);
}

TEST_CASE("file round trip") {
    testutil::TempDir dir;
    write_text_file(dir.file("t.txt"), "hello\nworld\n");
    CHECK(read_text_file(dir.file("t.txt")) == "hello\nworld\n");
    CHECK_THROWS_AS(read_text_file(dir.file("missing.txt")), DataError);
}

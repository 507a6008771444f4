#include <random>

#include "doctest.h"
#include "dmt/io.hpp"
#include "support/oracles.hpp"

using namespace dmt;
using namespace dmt::test;

TEST_CASE("complex files parse with labels, comments, and closures") {
    SimplicialComplex K = parse_complex_file(
        "# a triangle plus a tail\n"
        "v a\nv b\nv c\nv d\n"
        "s top: a b c\n"
        "facet: c d\n");
    CHECK(K.count(0) == 4);
    CHECK(K.count(1) == 4);
    CHECK(K.count(2) == 1);
    CHECK(K.simplex(K.id_of_label("top")).dim == 2);
    CHECK(K.was_explicit(K.id_of_label("top")));
    CHECK_FALSE(K.was_explicit(K.id_of_label("a-b")));
    // the explicit order is the orientation
    CHECK(K.simplex(K.id_of_label("top")).vertices ==
          std::vector<int>{K.vertex_id("a"), K.vertex_id("b"), K.vertex_id("c")});
}

TEST_CASE("parse errors carry 1-based positions") {
    try {
        parse_complex_file("v a\nfacet: a zz\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 10);
    }
    CHECK_THROWS_AS(parse_complex_file("wobble: a\n"), ParseError);
    CHECK_THROWS_AS(parse_complex_file("v a\nv a\n"), ParseError);
    CHECK_THROWS_AS(parse_complex_file("v a\nv b\ns e a b\n"), ParseError);   // missing ':'
    CHECK_THROWS_AS(parse_complex_file("v a\nv b\nfacet: a b a\n"), ParseError);
    CHECK_THROWS_AS(parse_complex_file("v a\nv b\ns x: a b\ns y: b a\n"), ParseError);
}

TEST_CASE("complex serialization round-trips") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 8; ++trial) {
        SimplicialComplex K = random_complex(rng, 8);
        SimplicialComplex L = parse_complex_file(serialize_complex(K));
        REQUIRE(L.size() == K.size());
        REQUIRE(L.dim() == K.dim());
        for (SimplexId s = 0; s < K.size(); ++s) {
            CHECK(L.simplex(s).label == K.simplex(s).label);
            std::vector<std::string> kn, ln;
            for (int v : K.simplex(s).vertices) kn.push_back(K.vertex_name(v));
            for (int v : L.simplex(s).vertices) ln.push_back(L.vertex_name(v));
            CHECK(kn == ln);  // orientation preserved through the round trip
        }
    }
}

TEST_CASE("field files hold pairs or function values, never both") {
    FieldFile pf = parse_field_file("pair a a-b\n# comment\npair c b-c\n");
    CHECK_FALSE(pf.is_function);
    CHECK(pf.pairs.size() == 2);
    FieldFile ff = parse_field_file("f a 0\nf a-b 1.5\n");
    CHECK(ff.is_function);
    CHECK(ff.values.size() == 2);
    CHECK_THROWS_AS(parse_field_file("pair a a-b\nf a 0\n"), ParseError);
    CHECK_THROWS_AS(parse_field_file("f a 0\npair a a-b\n"), ParseError);
    CHECK_THROWS_AS(parse_field_file("pair a\n"), ParseError);
    CHECK_THROWS_AS(parse_field_file("f a twelve\n"), ParseError);
    CHECK_THROWS_AS(parse_field_file("pair a a-b\npair a a-b\n"), ParseError);
    CHECK(parse_field_file("").pairs.empty());  // the empty field
}

TEST_CASE("field serialization round-trips") {
    std::mt19937 rng(515);
    for (int trial = 0; trial < 8; ++trial) {
        SimplicialComplex K = random_complex(rng, 8);
        GradientField V = random_field(rng, K);
        GradientField W = resolve_field(K, parse_field_file(serialize_field(K, V)));
        CHECK(W == V);
    }
}

TEST_CASE("field resolution validates against the complex") {
    SimplicialComplex K = cycle_complex(4);
    CHECK_THROWS_AS(resolve_field(K, parse_field_file("pair c1 zz\n")), BuildError);
    // not a codimension-1 incidence
    CHECK_THROWS_AS(resolve_field(K, parse_field_file("pair c1 c2-c3\n")), BuildError);
    CHECK_THROWS_AS(resolve_pairs(K, parse_field_file("f c1 0\n")), BuildError);
}

TEST_CASE("function files induce the gradient field of the function") {
    SimplicialComplex K = segment_complex();
    // values grow toward b except along the matched incidence (a, a-b)
    GradientField V = resolve_field(K, parse_field_file("f a 2\nf b 0\nf a-b 1\n"));
    CHECK(V.pairs() == std::vector<std::pair<SimplexId, SimplexId>>{
                           {by_names(K, {"a"}), by_names(K, {"a", "b"})}});
    CHECK_THROWS_AS(resolve_function(K, parse_field_file("f a 0\n")), BuildError);
}

TEST_CASE("functions serialize with every simplex value") {
    std::mt19937 rng(99);
    SimplicialComplex K = full_triangle();
    GradientField V = random_field(rng, K);
    MorseFunction f = function_realizing(K, V);
    MorseFunction g = resolve_function(K, parse_field_file(serialize_function(K, f)));
    CHECK(f == g);
    CHECK(gradient_field_of(K, g) == V);
}

TEST_CASE("read_file reports missing paths") {
    CHECK_THROWS_AS(read_file("/nonexistent/path/xyz"), BuildError);
}

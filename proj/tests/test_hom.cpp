#include <random>

#include "doctest.h"
#include "dmt/conn_hom.hpp"
#include "support/oracles.hpp"

using namespace dmt;
using namespace dmt::test;

namespace {

SimplicialComplex antenna_hexagon() {
    return SimplicialComplex::from_facets(
        {{"h1", "h2"}, {"h2", "h3"}, {"h3", "h4"}, {"h4", "h5"}, {"h5", "h6"}, {"h1", "h6"},
         {"t1", "t2"}, {"t2", "t3"}, {"h4", "t3"},
         {"u1", "u2"}, {"u2", "u3"}, {"h5", "u1"}});
}

GradientField cycle_field(const SimplicialComplex& K, int offset) {
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> prs;
    for (int i = 1; i <= 5; ++i) {
        int a = (offset + i - 1) % 6 + 1, b = (offset + i) % 6 + 1;
        std::string low = "c" + std::to_string(std::min(a, b));
        std::string high = "c" + std::to_string(std::max(a, b));
        prs.push_back({{"c" + std::to_string(b)}, {low, high}});
    }
    return field_from(K, prs);
}

}  // namespace

TEST_CASE("homomorphism entries match explicit walk counts") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        SimplicialComplex K = random_complex(rng, 9);
        GradientField V = random_field(rng, K), W = random_field(rng, K);
        ConnHom h = build_conn_hom(K, V, W, Ring::integers);
        ConnHom h2 = build_conn_hom(K, V, W, Ring::mod2);
        for (int q = 0; q <= h.top_dim(); ++q)
            for (size_t c = 0; c < h.src_basis[q].size(); ++c)
                for (size_t r = 0; r < h.tgt_basis[q].size(); ++r) {
                    long long want = oracle_hom_entry(K, V, W, h.src_basis[q][c], h.tgt_basis[q][r]);
                    CHECK(h.matrices[q].at(static_cast<int>(r), static_cast<int>(c)) == want);
                    CHECK(h2.matrices[q].at(static_cast<int>(r), static_cast<int>(c)) ==
                          ((want % 2) + 2) % 2);
                }
    }
}

TEST_CASE("a field maps to itself by the identity") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 8; ++trial) {
        SimplicialComplex K = random_complex(rng, 10);
        GradientField V = random_field(rng, K);
        ConnHom h = build_conn_hom(K, V, V, Ring::integers);
        MorseComplexData d = build_morse_complex(K, V, Ring::integers);
        for (int q = 0; q <= h.top_dim(); ++q) {
            CHECK(h.src_basis[q] == h.tgt_basis[q]);
            CHECK(h.matrices[q].is_identity());
        }
        CHECK(is_chain_map(h, d, d).ok);
        CHECK(is_faithful(h, d, d).ok);
    }

    // The converse fails once 2-simplices appear: these two distinct fields
    // on the full triangle give identity homomorphisms in both directions.
    SimplicialComplex T = full_triangle();
    GradientField V1 = field_from(
        T, {{{"b"}, {"a", "b"}}, {{"c"}, {"b", "c"}}, {{"a", "c"}, {"a", "b", "c"}}});
    GradientField V2 = field_from(
        T, {{{"b"}, {"a", "b"}}, {{"c"}, {"a", "c"}}, {{"b", "c"}, {"a", "b", "c"}}});
    REQUIRE(V1.pairs() != V2.pairs());
    for (Ring ring : {Ring::mod2, Ring::integers}) {
        for (const ConnHom& h :
             {build_conn_hom(T, V1, V2, ring), build_conn_hom(T, V2, V1, ring)})
            for (int q = 0; q <= h.top_dim(); ++q) {
                CHECK(h.src_basis[static_cast<size_t>(q)] == h.tgt_basis[static_cast<size_t>(q)]);
                CHECK(h.matrices[static_cast<size_t>(q)].is_identity());
            }
    }
}

TEST_CASE("two optimal fields on the 6-cycle are mutually faithful") {
    SimplicialComplex K = cycle_complex(6);
    GradientField A = cycle_field(K, 0);  // critical c1 and edge c1-c6
    GradientField B = cycle_field(K, 3);  // critical c4 and edge c3-c4
    MorseComplexData da = build_morse_complex(K, A, Ring::mod2);
    MorseComplexData db = build_morse_complex(K, B, Ring::mod2);
    REQUIRE(da.basis[0] == std::vector<SimplexId>{by_names(K, {"c1"})});
    REQUIRE(db.basis[1] == std::vector<SimplexId>{by_names(K, {"c3", "c4"})});

    ConnHom h = build_conn_hom(K, A, B, Ring::mod2);
    ConnHom g = build_conn_hom(K, B, A, Ring::mod2);
    CHECK(is_chain_map(h, da, db).ok);
    CHECK(is_chain_map(g, db, da).ok);
    CHECK(is_faithful(h, da, db).ok);
    CHECK(is_faithful(g, db, da).ok);
    CHECK(weakly_faithful_target(h, 0, by_names(K, {"c1"})) == by_names(K, {"c4"}));
    CHECK(weakly_faithful_target(h, 1, by_names(K, {"c1", "c6"})) == by_names(K, {"c3", "c4"}));
    for (int q = 0; q <= 1; ++q) {
        CHECK(mat_mul(h.matrices[q], g.matrices[q], Ring::mod2).is_identity());
        CHECK(mat_mul(g.matrices[q], h.matrices[q], Ring::mod2).is_identity());
    }
    CHECK(check_function_connectedness(h, g));
    CHECK(is_strongly_connected(K, A, B, by_names(K, {"c1"}), by_names(K, {"c4"})));
    CHECK(is_strongly_connected(K, A, B, by_names(K, {"c1", "c6"}), by_names(K, {"c3", "c4"})));
}

TEST_CASE("dimension-zero maps are single-target but can merge vertices") {
    SimplicialComplex K = path_complex(3);
    GradientField none = GradientField::empty(K);
    GradientField B = field_from(K, {{{"q1"}, {"q1", "q2"}}, {{"q3"}, {"q2", "q3"}}});
    ConnHom h = build_conn_hom(K, none, B, Ring::mod2);
    SimplexId q2 = by_names(K, {"q2"});
    for (const char* name : {"q1", "q2", "q3"})
        CHECK(weakly_faithful_target(h, 0, by_names(K, {name})) == q2);
    CHECK(h.matrices[0].rows() == 1);
    CHECK(h.matrices[0].cols() == 3);
    ConnHom g = build_conn_hom(K, B, none, Ring::mod2);
    CHECK_FALSE(check_function_connectedness(h, g));  // 3 vs 1: not an isomorphism
    CHECK(is_partially_connected(K, none, B, by_names(K, {"q1"}), q2));
    CHECK_FALSE(is_partially_connected(K, B, none, q2, by_names(K, {"q1"})));
    CHECK_FALSE(is_strongly_connected(K, none, B, by_names(K, {"q1"}), q2));
}

TEST_CASE("dimension-zero images always land on a single critical vertex") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 15; ++trial) {
        SimplicialComplex K = random_complex(rng, 10);
        GradientField V = random_field(rng, K), W = random_field(rng, K);
        ConnHom h = build_conn_hom(K, V, W, Ring::mod2);
        for (SimplexId v : h.src_basis[0])
            CHECK(weakly_faithful_target(h, 0, v).has_value());
    }
}

TEST_CASE("a failed boundary compatibility names the offending simplex") {
    // On graphs the walk sums always commute with the boundaries, even for
    // fields as unlike as these two on the antenna hexagon.
    {
        SimplicialComplex A = antenna_hexagon();
        GradientField F1 = field_from(A, {{{"h2"}, {"h2", "h3"}},
                                          {{"h3"}, {"h3", "h4"}},
                                          {{"h4"}, {"h4", "h5"}},
                                          {{"h6"}, {"h5", "h6"}},
                                          {{"h1"}, {"h1", "h6"}},
                                          {{"t2"}, {"t2", "t3"}},
                                          {{"t3"}, {"h4", "t3"}},
                                          {{"u1"}, {"u1", "u2"}},
                                          {{"u2"}, {"u2", "u3"}},
                                          {{"h5"}, {"h5", "u1"}}});
        GradientField F2 = field_from(A, {{{"h1"}, {"h1", "h2"}},
                                          {{"h2"}, {"h2", "h3"}},
                                          {{"h3"}, {"h3", "h4"}},
                                          {{"h5"}, {"h5", "h6"}},
                                          {{"h6"}, {"h1", "h6"}},
                                          {{"t2"}, {"t1", "t2"}},
                                          {{"t3"}, {"t2", "t3"}},
                                          {{"h4"}, {"h4", "t3"}},
                                          {{"u3"}, {"u2", "u3"}},
                                          {{"u2"}, {"u1", "u2"}},
                                          {{"u1"}, {"h5", "u1"}}});
        for (Ring ring : {Ring::mod2, Ring::integers}) {
            MorseComplexData e1 = build_morse_complex(A, F1, ring);
            MorseComplexData e2 = build_morse_complex(A, F2, ring);
            CHECK(is_chain_map(build_conn_hom(A, F2, F1, ring), e2, e1).ok);
            CHECK(is_chain_map(build_conn_hom(A, F1, F2, ring), e1, e2).ok);
        }
    }

    // A genuine failure needs 2-simplices.  This pair of fields on the
    // 2-skeleton of the 4-simplex minus one triangle clashes at the critical
    // edge p0-p3.
    SimplicialComplex K = SimplicialComplex::from_facets({{"p0", "p1", "p2"},
                                                          {"p0", "p1", "p3"},
                                                          {"p0", "p1", "p4"},
                                                          {"p0", "p2", "p3"},
                                                          {"p0", "p2", "p4"},
                                                          {"p0", "p3", "p4"},
                                                          {"p1", "p2", "p4"},
                                                          {"p1", "p3", "p4"},
                                                          {"p2", "p3", "p4"}});
    GradientField V = field_from(K, {{{"p1"}, {"p0", "p1"}},
                                     {{"p2"}, {"p1", "p2"}},
                                     {{"p3"}, {"p2", "p3"}},
                                     {{"p0", "p2"}, {"p0", "p1", "p2"}},
                                     {{"p0", "p4"}, {"p0", "p1", "p4"}}});
    GradientField W = field_from(K, {{{"p1"}, {"p1", "p4"}},
                                     {{"p3"}, {"p2", "p3"}},
                                     {{"p4"}, {"p3", "p4"}},
                                     {{"p0", "p1"}, {"p0", "p1", "p3"}},
                                     {{"p0", "p4"}, {"p0", "p3", "p4"}},
                                     {{"p1", "p2"}, {"p1", "p2", "p4"}},
                                     {{"p1", "p3"}, {"p1", "p3", "p4"}},
                                     {{"p2", "p4"}, {"p0", "p2", "p4"}}});
    for (Ring ring : {Ring::mod2, Ring::integers}) {
        MorseComplexData dv = build_morse_complex(K, V, ring);
        MorseComplexData dw = build_morse_complex(K, W, ring);
        ConnHom h = build_conn_hom(K, V, W, ring);
        ChainMapReport rep = is_chain_map(h, dv, dw);
        REQUIRE_FALSE(rep.ok);
        CHECK(rep.dim == 1);
        CHECK(rep.simplex == by_names(K, {"p0", "p3"}));
        CHECK_FALSE(is_faithful(h, dv, dw).ok);
        // The reverse direction happens to commute.
        ConnHom g = build_conn_hom(K, W, V, ring);
        CHECK(is_chain_map(g, dw, dv).ok);
    }
}

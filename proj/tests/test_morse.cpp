#include <random>

#include "doctest.h"
#include "dmt/morse_complex.hpp"
#include "support/oracles.hpp"

using namespace dmt;
using namespace dmt::test;

namespace {

void check_homology_matches(const SimplicialComplex& K, const GradientField& V) {
    MorseComplexData dz = build_morse_complex(K, V, Ring::integers);
    std::vector<DimHomology> got = morse_homology(dz);
    std::vector<DimHomology> want = oracle_homology_z(K);
    REQUIRE(got.size() >= want.size());
    for (size_t q = 0; q < got.size(); ++q) {
        const DimHomology blank{};
        const DimHomology& w = q < want.size() ? want[q] : blank;
        CHECK(got[q].betti == w.betti);
        CHECK(got[q].torsion == w.torsion);
    }
    MorseComplexData d2 = build_morse_complex(K, V, Ring::mod2);
    std::vector<DimHomology> got2 = morse_homology(d2);
    std::vector<long long> want2 = oracle_betti2(K);
    for (size_t q = 0; q < got2.size(); ++q) {
        long long w = q < want2.size() ? want2[q] : 0;
        CHECK(got2[q].betti == w);
        CHECK(got2[q].torsion.empty());
    }
}

}  // namespace

TEST_CASE("a point has one critical cell and trivial boundary") {
    SimplicialComplex K = point_complex();
    MorseComplexData d = build_morse_complex(K, GradientField::empty(K), Ring::integers);
    REQUIRE(d.top_dim() == 0);
    CHECK(d.basis[0].size() == 1);
    CHECK(d.boundary[0].rows() == 0);
    std::vector<DimHomology> h = morse_homology(d);
    CHECK(h[0].betti == 1);
    CHECK(h[0].torsion.empty());
}

TEST_CASE("optimal field on the 6-cycle gives the circle's chain complex") {
    SimplicialComplex K = cycle_complex(6);
    GradientField V = field_from(K, {{{"c2"}, {"c1", "c2"}},
                                     {{"c3"}, {"c2", "c3"}},
                                     {{"c4"}, {"c3", "c4"}},
                                     {{"c5"}, {"c4", "c5"}},
                                     {{"c6"}, {"c5", "c6"}}});
    CHECK(is_optimal(K, V));
    MorseComplexData d = build_morse_complex(K, V, Ring::integers);
    REQUIRE(d.basis[0].size() == 1);
    REQUIRE(d.basis[1].size() == 1);
    CHECK(d.basis[0][0] == by_names(K, {"c1"}));
    CHECK(d.basis[1][0] == by_names(K, {"c1", "c6"}));
    CHECK(d.boundary[1].is_zero());  // the two descending walks cancel
    std::vector<DimHomology> h = morse_homology(d);
    CHECK(h[0].betti == 1);
    CHECK(h[1].betti == 1);
    CHECK(d.index_of(1, d.basis[1][0]) == 0);
    CHECK(d.index_of(1, d.basis[0][0]) == -1);
}

TEST_CASE("empty field reproduces the simplicial chain complex") {
    for (const SimplicialComplex& K :
         {full_triangle(), sphere_complex(), theta_complex(), torus_complex()}) {
        MorseComplexData d = build_morse_complex(K, GradientField::empty(K), Ring::integers);
        REQUIRE(d.top_dim() == K.dim());
        for (int q = 0; q <= K.dim(); ++q) {
            CHECK(static_cast<int>(d.basis[q].size()) == K.count(q));
            if (q == 0) continue;
            Mat want = oracle_boundary_matrix(K, q);
            REQUIRE(d.boundary[q].rows() == static_cast<int>(want.size()));
            for (int r = 0; r < d.boundary[q].rows(); ++r)
                for (int c = 0; c < d.boundary[q].cols(); ++c)
                    CHECK(d.boundary[q].at(r, c) == want[r][c]);
        }
    }
}

TEST_CASE("known spaces come out right") {
    SimplicialComplex S = sphere_complex();
    std::vector<DimHomology> hs =
        morse_homology(build_morse_complex(S, GradientField::empty(S), Ring::integers));
    CHECK(hs[0].betti == 1);
    CHECK(hs[1].betti == 0);
    CHECK(hs[2].betti == 1);

    SimplicialComplex P = projective_plane();
    std::vector<DimHomology> hp =
        morse_homology(build_morse_complex(P, GradientField::empty(P), Ring::integers));
    CHECK(hp[0].betti == 1);
    CHECK(hp[1].betti == 0);
    CHECK(hp[1].torsion == std::vector<long long>{2});
    CHECK(hp[2].betti == 0);
    std::vector<DimHomology> hp2 =
        morse_homology(build_morse_complex(P, GradientField::empty(P), Ring::mod2));
    CHECK(hp2[0].betti == 1);
    CHECK(hp2[1].betti == 1);
    CHECK(hp2[2].betti == 1);

    SimplicialComplex T = torus_complex();
    std::vector<DimHomology> ht =
        morse_homology(build_morse_complex(T, GradientField::empty(T), Ring::integers));
    CHECK(ht[0].betti == 1);
    CHECK(ht[1].betti == 2);
    CHECK(ht[2].betti == 1);
    CHECK(ht[1].torsion.empty());
}

TEST_CASE("Morse homology is independent of the gradient field") {
    std::mt19937 rng(4242);
    for (const SimplicialComplex& K : {point_complex(), path_complex(4), cycle_complex(6),
                                       theta_complex(), star_complex(), sphere_complex(),
                                       projective_plane(), torus_complex()}) {
        for (int trial = 0; trial < 6; ++trial)
            check_homology_matches(K, random_field(rng, K));
    }
    for (int trial = 0; trial < 12; ++trial) {
        SimplicialComplex K = random_complex(rng, 10);
        check_homology_matches(K, random_field(rng, K));
    }
}

TEST_CASE("Morse boundaries square to zero over the integers") {
    std::mt19937 rng(515);
    for (int trial = 0; trial < 15; ++trial) {
        SimplicialComplex K = random_complex(rng, 10);
        GradientField V = random_field(rng, K);
        MorseComplexData d = build_morse_complex(K, V, Ring::integers);
        for (int q = 2; q <= d.top_dim(); ++q)
            CHECK(mat_mul(d.boundary[q - 1], d.boundary[q], Ring::integers).is_zero());
    }
}

TEST_CASE("Betti numbers of the complex match an independent computation") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        SimplicialComplex K = random_complex(rng, 9);
        std::vector<long long> got = betti_numbers(K);
        std::vector<DimHomology> want = oracle_homology_z(K);
        for (size_t q = 0; q < got.size(); ++q)
            CHECK(got[q] == (q < want.size() ? want[q].betti : 0));
    }
    SimplicialComplex C5 = cycle_complex(5);
    CHECK_FALSE(is_optimal(C5, GradientField::empty(C5)));  // 5 critical edges vs Betti 1
}

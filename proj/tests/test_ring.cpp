#include <random>

#include "doctest.h"
#include "dmt/ring.hpp"
#include "support/oracles.hpp"

using namespace dmt;
using namespace dmt::test;

namespace {

IntMat from_rows(const Mat& rows) {
    IntMat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    return m;
}

std::vector<long long> nonzero_prefix(const std::vector<long long>& d) {
    std::vector<long long> out;
    for (long long v : d)
        if (v != 0) out.push_back(v);
    return out;
}

}  // namespace

TEST_CASE("reduction and matrix basics") {
    CHECK(ring_reduce(-3, Ring::mod2) == 1);
    CHECK(ring_reduce(4, Ring::mod2) == 0);
    CHECK(ring_reduce(-3, Ring::integers) == -3);
    CHECK(ring_name(Ring::mod2) == "z2");
    CHECK(ring_name(Ring::integers) == "z");

    IntMat m = from_rows({{1, -1}, {2, 3}});
    CHECK(m.column(1) == std::vector<long long>{-1, 3});
    m.reduce(Ring::mod2);
    CHECK(m == from_rows({{1, 1}, {0, 1}}));
    CHECK(IntMat::identity(3).is_identity());
    CHECK(IntMat(2, 5).is_zero());
    CHECK(vec_equal({1, 3}, {-1, 1}, Ring::mod2));
    CHECK_FALSE(vec_equal({1, 3}, {-1, 1}, Ring::integers));
    CHECK(mat_vec(from_rows({{1, 2}, {0, -1}}), {3, 4}, Ring::integers) ==
          std::vector<long long>{11, -4});
}

TEST_CASE("Smith normal form on textbook matrices") {
    SmithForm a = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    CHECK(a.rank == 2);
    CHECK(a.diagonal == std::vector<long long>{1, 6});

    SmithForm b = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
    CHECK(b.rank == 2);
    CHECK(b.diagonal == std::vector<long long>{2, 4});

    SmithForm c = smith_normal_form(from_rows({{1, 1}, {1, 1}}));
    CHECK(c.rank == 1);
    CHECK(nonzero_prefix(c.diagonal) == std::vector<long long>{1});

    SmithForm z = smith_normal_form(IntMat(3, 2));
    CHECK(z.rank == 0);
}

TEST_CASE("Smith normal form agrees with an independent reduction") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dim(1, 6), entry(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        int r = dim(rng), c = dim(rng);
        Mat m(static_cast<size_t>(r), std::vector<long long>(static_cast<size_t>(c)));
        for (auto& row : m)
            for (long long& v : row) v = entry(rng);
        SmithForm got = smith_normal_form(from_rows(m));
        std::vector<long long> want = oracle_snf_diagonal(m);
        CHECK(nonzero_prefix(got.diagonal) == want);
        CHECK(got.rank == static_cast<int>(want.size()));
        CHECK(rank_over_q(from_rows(m)) == static_cast<int>(want.size()));
        CHECK(rank_mod2(from_rows(m)) == oracle_rank2(m));
        for (size_t i = 0; i + 1 < want.size(); ++i) CHECK(want[i + 1] % want[i] == 0);
    }
}

TEST_CASE("invertibility depends on the ring") {
    CHECK(invertible(IntMat::identity(4), Ring::integers));
    CHECK(invertible(IntMat::identity(4), Ring::mod2));
    CHECK(invertible(IntMat(0, 0), Ring::integers));
    CHECK(invertible(from_rows({{1, 1}, {0, 1}}), Ring::integers));
    CHECK(invertible(from_rows({{1, 1}, {0, 1}}), Ring::mod2));
    CHECK_FALSE(invertible(from_rows({{2}}), Ring::integers));
    CHECK_FALSE(invertible(from_rows({{2}}), Ring::mod2));
    CHECK_FALSE(invertible(from_rows({{1, 1}, {1, 1}}), Ring::mod2));
    CHECK_FALSE(invertible(from_rows({{1, 2}}), Ring::integers));  // not square
    CHECK(invertible(from_rows({{3}}), Ring::mod2));               // 3 is 1 mod 2
    CHECK_FALSE(invertible(from_rows({{3}}), Ring::integers));
}

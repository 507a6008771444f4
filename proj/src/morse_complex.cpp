#include "dmt/morse_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace dmt {

int MorseComplexData::index_of(int q, SimplexId s) const {
    if (q < 0 || q > top_dim()) return -1;
    const auto& b = basis[static_cast<size_t>(q)];
    auto it = std::lower_bound(b.begin(), b.end(), s);
    if (it == b.end() || *it != s) return -1;
    return static_cast<int>(it - b.begin());
}

MorseComplexData build_morse_complex(const SimplicialComplex& K, const GradientField& V, Ring ring) {
    MorseComplexData data;
    data.ring = ring;
    int m = K.dim();
    data.basis.resize(static_cast<size_t>(m) + 1);
    for (int q = 0; q <= m; ++q) data.basis[static_cast<size_t>(q)] = V.critical(K, q);
    data.boundary.resize(static_cast<size_t>(m) + 1);
    data.boundary[0] = IntMat(0, static_cast<int>(data.basis[0].size()));
    for (int q = 1; q <= m; ++q) {
        const auto& cols = data.basis[static_cast<size_t>(q)];
        const auto& rows = data.basis[static_cast<size_t>(q) - 1];
        IntMat d(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c)
            for (size_t r = 0; r < rows.size(); ++r)
                d.at(static_cast<int>(r), static_cast<int>(c)) =
                    connectedness_coefficient(K, V, cols[c], rows[r]);
        // d(d(.)) = 0 must hold over Z before any reduction.
        d.reduce(ring);
        data.boundary[static_cast<size_t>(q)] = d;
    }
    // Verify the complex property over Z by recomputing unreduced products.
    for (int q = 1; q < m; ++q) {
        const auto& mid = data.basis[static_cast<size_t>(q)];
        const auto& top = data.basis[static_cast<size_t>(q) + 1];
        const auto& low = data.basis[static_cast<size_t>(q) - 1];
        for (SimplexId t : top)
            for (SimplexId l : low) {
                long long total = 0;
                for (SimplexId s : mid)
                    total += connectedness_coefficient(K, V, t, s) *
                             connectedness_coefficient(K, V, s, l);
                if (total != 0)
                    throw std::logic_error("morse boundary does not square to zero at " +
                                           K.simplex(t).label + " -> " + K.simplex(l).label);
            }
    }
    return data;
}

namespace {

std::vector<DimHomology> homology_of_chain(const std::vector<IntMat>& boundary, Ring ring) {
    int m = static_cast<int>(boundary.size()) - 1;
    std::vector<DimHomology> out(static_cast<size_t>(m) + 1);
    std::vector<int> rank(static_cast<size_t>(m) + 2, 0);
    std::vector<SmithForm> smith(static_cast<size_t>(m) + 1);
    for (int q = 1; q <= m; ++q) {
        if (ring == Ring::mod2) {
            rank[static_cast<size_t>(q)] = rank_mod2(boundary[static_cast<size_t>(q)]);
        } else {
            smith[static_cast<size_t>(q)] = smith_normal_form(boundary[static_cast<size_t>(q)]);
            rank[static_cast<size_t>(q)] = smith[static_cast<size_t>(q)].rank;
        }
    }
    for (int q = 0; q <= m; ++q) {
        long long n_q = boundary[static_cast<size_t>(q)].cols();
        out[static_cast<size_t>(q)].betti =
            n_q - rank[static_cast<size_t>(q)] - rank[static_cast<size_t>(q) + 1];
        if (ring == Ring::integers && q + 1 <= m)
            for (long long d : smith[static_cast<size_t>(q) + 1].diagonal)
                if (d > 1) out[static_cast<size_t>(q)].torsion.push_back(d);
    }
    for (auto& h : out) std::sort(h.torsion.begin(), h.torsion.end());
    return out;
}

}  // namespace

std::vector<DimHomology> morse_homology(const MorseComplexData& data) {
    return homology_of_chain(data.boundary, data.ring);
}

std::vector<long long> betti_numbers(const SimplicialComplex& K) {
    int m = K.dim();
    std::vector<int> rank(static_cast<size_t>(m) + 2, 0);
    for (int q = 1; q <= m; ++q) {
        IntMat d(K.count(q - 1), K.count(q));
        for (int c = 0; c < K.count(q); ++c) {
            SimplexId s = K.dim_begin(q) + c;
            for (const FaceEntry& f : K.faces(s)) d.at(f.id - K.dim_begin(q - 1), c) = f.sign;
        }
        rank[static_cast<size_t>(q)] = rank_over_q(d);
    }
    std::vector<long long> out(static_cast<size_t>(m) + 1, 0);
    for (int q = 0; q <= m; ++q)
        out[static_cast<size_t>(q)] = K.count(q) - rank[static_cast<size_t>(q)] - rank[static_cast<size_t>(q) + 1];
    return out;
}

bool is_optimal(const SimplicialComplex& K, const GradientField& V) {
    std::vector<long long> betti = betti_numbers(K);
    std::vector<int> counts = V.critical_counts(K);
    for (int q = 0; q <= K.dim(); ++q)
        if (counts[static_cast<size_t>(q)] != betti[static_cast<size_t>(q)]) return false;
    return true;
}

}  // namespace dmt

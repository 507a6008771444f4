#include "dmt/conn_hom.hpp"

#include <algorithm>

namespace dmt {

namespace {

int index_in(const std::vector<std::vector<SimplexId>>& basis, int q, SimplexId s) {
    if (q < 0 || q >= static_cast<int>(basis.size())) return -1;
    const auto& b = basis[static_cast<size_t>(q)];
    auto it = std::lower_bound(b.begin(), b.end(), s);
    if (it == b.end() || *it != s) return -1;
    return static_cast<int>(it - b.begin());
}

}  // namespace

int ConnHom::src_index(int q, SimplexId s) const { return index_in(src_basis, q, s); }
int ConnHom::tgt_index(int q, SimplexId s) const { return index_in(tgt_basis, q, s); }

ConnHom build_conn_hom(const SimplicialComplex& K, const GradientField& src,
                       const GradientField& tgt, Ring ring) {
    ConnHom h;
    h.ring = ring;
    int m = K.dim();
    h.src_basis.resize(static_cast<size_t>(m) + 1);
    h.tgt_basis.resize(static_cast<size_t>(m) + 1);
    h.matrices.resize(static_cast<size_t>(m) + 1);
    for (int q = 0; q <= m; ++q) {
        h.src_basis[static_cast<size_t>(q)] = src.critical(K, q);
        h.tgt_basis[static_cast<size_t>(q)] = tgt.critical(K, q);
        const auto& cols = h.src_basis[static_cast<size_t>(q)];
        const auto& rows = h.tgt_basis[static_cast<size_t>(q)];
        // Paths run on the source field except in dimension 0, where the
        // target field carries them as upward walks.  A column whose simplex
        // the target field matches upward gets those upward walks as well.
        const GradientField& carrier = (q == 0) ? tgt : src;
        IntMat mat(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c) {
            SimplexId up = tgt.up(cols[c]);
            bool climbs = q >= 1 && up != kNoSimplex && K.simplex(up).dim == q + 1;
            for (size_t r = 0; r < rows.size(); ++r) {
                long long v = connectedness_coefficient(K, carrier, cols[c], rows[r]);
                if (climbs) v += upward_connectedness(K, tgt, cols[c], rows[r]);
                mat.at(static_cast<int>(r), static_cast<int>(c)) = v;
            }
        }
        mat.reduce(ring);
        h.matrices[static_cast<size_t>(q)] = mat;
    }
    return h;
}

bool is_partially_connected(const SimplicialComplex& K, const GradientField& src,
                            const GradientField& tgt, SimplexId s1, SimplexId s2) {
    if (s1 == s2) return true;
    if (K.simplex(s1).dim != K.simplex(s2).dim)
        throw BuildError("connectedness is defined between simplices of equal dimension");
    const GradientField& carrier = (K.simplex(s1).dim == 0) ? tgt : src;
    return path_exists(K, carrier, s1, s2);
}

bool is_strongly_connected(const SimplicialComplex& K, const GradientField& f1,
                           const GradientField& f2, SimplexId s1, SimplexId s2) {
    return is_partially_connected(K, f1, f2, s1, s2) && is_partially_connected(K, f2, f1, s2, s1);
}

ChainMapReport is_chain_map(const ConnHom& h, const MorseComplexData& src_data,
                            const MorseComplexData& tgt_data) {
    ChainMapReport rep;
    for (int q = 1; q <= h.top_dim(); ++q) {
        IntMat lhs = mat_mul(tgt_data.boundary[static_cast<size_t>(q)],
                             h.matrices[static_cast<size_t>(q)], h.ring);
        IntMat rhs = mat_mul(h.matrices[static_cast<size_t>(q) - 1],
                             src_data.boundary[static_cast<size_t>(q)], h.ring);
        for (int c = 0; c < lhs.cols(); ++c)
            for (int r = 0; r < lhs.rows(); ++r)
                if (lhs.at(r, c) != rhs.at(r, c)) {
                    rep.ok = false;
                    rep.dim = q;
                    rep.simplex = h.src_basis[static_cast<size_t>(q)][static_cast<size_t>(c)];
                    return rep;
                }
    }
    return rep;
}

std::optional<SimplexId> weakly_faithful_target(const ConnHom& h, int q, SimplexId s1) {
    int c = h.src_index(q, s1);
    if (c < 0) throw BuildError("not a source critical simplex in that dimension");
    const IntMat& mat = h.matrices[static_cast<size_t>(q)];
    std::optional<SimplexId> hit;
    for (int r = 0; r < mat.rows(); ++r)
        if (mat.at(r, c) != 0) {
            if (hit) return std::nullopt;  // two terms
            hit = h.tgt_basis[static_cast<size_t>(q)][static_cast<size_t>(r)];
        }
    return hit;  // nullopt when the column vanishes
}

FaithfulReport is_faithful(const ConnHom& h, const MorseComplexData& src_data,
                           const MorseComplexData& tgt_data) {
    FaithfulReport rep;
    rep.per_dim.assign(static_cast<size_t>(h.top_dim()) + 1, true);
    for (int q = 0; q <= h.top_dim(); ++q) {
        const auto& cols = h.src_basis[static_cast<size_t>(q)];
        for (size_t c = 0; c < cols.size(); ++c) {
            std::optional<SimplexId> tgt = weakly_faithful_target(h, q, cols[c]);
            bool good = tgt.has_value();
            if (good && q >= 1) {
                // h_{q-1}(d1 s) must equal n(s, t) d2 t for the single term t.
                int tc = h.tgt_index(q, *tgt);
                long long n = h.matrices[static_cast<size_t>(q)].at(tc, static_cast<int>(c));
                std::vector<long long> lhs = mat_vec(
                    h.matrices[static_cast<size_t>(q) - 1],
                    src_data.boundary[static_cast<size_t>(q)].column(static_cast<int>(c)), h.ring);
                std::vector<long long> rhs =
                    tgt_data.boundary[static_cast<size_t>(q)].column(tc);
                for (long long& v : rhs) v *= n;
                good = vec_equal(lhs, rhs, h.ring);
            }
            if (!good) {
                rep.per_dim[static_cast<size_t>(q)] = false;
                if (rep.ok) {
                    rep.ok = false;
                    rep.dim = q;
                    rep.simplex = cols[c];
                }
            }
        }
    }
    return rep;
}

bool check_function_connectedness(const ConnHom& h, const ConnHom& g) {
    for (int q = 0; q <= h.top_dim(); ++q)
        if (!invertible(h.matrices[static_cast<size_t>(q)], h.ring)) return false;
    for (int q = 0; q <= g.top_dim(); ++q)
        if (!invertible(g.matrices[static_cast<size_t>(q)], g.ring)) return false;
    return true;
}

}  // namespace dmt

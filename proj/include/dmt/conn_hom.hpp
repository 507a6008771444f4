#pragma once

#include <optional>
#include <vector>

#include "dmt/morse_complex.hpp"

namespace dmt {

/// Connectedness homomorphism h_q between the Morse complexes of two gradient
/// fields on one complex.  matrices[q] maps source critical q-simplices
/// (columns) to target critical q-simplices (rows).  Coefficients are signed
/// gradient-path counts on the source field for q >= 1 and on the target
/// field for q = 0, with the trivial convention n(s, s) = 1.  When the target
/// field matches a source critical q-simplex upward (q >= 1), its column also
/// carries the target-field upward walks out of it, the rule that governs all
/// of dimension 0; without that term the image of such a simplex could never
/// reach the targets its boundary flows to.
struct ConnHom {
    Ring ring = Ring::mod2;
    std::vector<std::vector<SimplexId>> src_basis, tgt_basis;
    std::vector<IntMat> matrices;

    int top_dim() const { return static_cast<int>(matrices.size()) - 1; }
    int src_index(int q, SimplexId s) const;
    int tgt_index(int q, SimplexId s) const;
};

ConnHom build_conn_hom(const SimplicialComplex& K, const GradientField& src,
                       const GradientField& tgt, Ring ring);

/// Gradient-path connectedness from a source-field critical s1 to a
/// target-field critical s2 of the same dimension: path existence on the
/// source field for q >= 1 and on the target field for q = 0; true when
/// s1 == s2.  Connectedness does not imply a nonzero coefficient.
bool is_partially_connected(const SimplicialComplex& K, const GradientField& src,
                            const GradientField& tgt, SimplexId s1, SimplexId s2);

/// Connected in both directions (the roles of the fields swap for the
/// reverse check).
bool is_strongly_connected(const SimplicialComplex& K, const GradientField& f1,
                           const GradientField& f2, SimplexId s1, SimplexId s2);

struct ChainMapReport {
    bool ok = true;
    int dim = -1;                    // dimension of the first violating column
    SimplexId simplex = kNoSimplex;  // source critical simplex of that column
};

/// Checks boundary-compatibility d^tgt h = h d^src in every dimension; on
/// failure reports the first violating source critical simplex (dimensions
/// ascending, columns in basis order).
ChainMapReport is_chain_map(const ConnHom& h, const MorseComplexData& src_data,
                            const MorseComplexData& tgt_data);

/// The unique target critical simplex carrying h_q(s1) when that image is a
/// single nonzero multiple of one basis element; nullopt otherwise.
std::optional<SimplexId> weakly_faithful_target(const ConnHom& h, int q, SimplexId s1);

struct FaithfulReport {
    bool ok = true;
    std::vector<bool> per_dim;
    int dim = -1;                    // first violating dimension
    SimplexId simplex = kNoSimplex;  // first violating source critical simplex
};

/// Faithfulness of h: every source critical simplex is weakly faithful, and
/// for q >= 1 the boundary of the image matches the image of the boundary
/// through the single-term coefficient.  For q = 0 weak faithfulness is the
/// whole condition.
FaithfulReport is_faithful(const ConnHom& h, const MorseComplexData& src_data,
                           const MorseComplexData& tgt_data);

/// Both directions are isomorphisms in every dimension (square and invertible
/// over the ring).
bool check_function_connectedness(const ConnHom& h, const ConnHom& g);

}  // namespace dmt

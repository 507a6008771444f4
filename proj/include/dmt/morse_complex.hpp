#pragma once

#include <vector>

#include "dmt/gradient.hpp"
#include "dmt/paths.hpp"
#include "dmt/ring.hpp"
#include "dmt/simplicial_complex.hpp"

namespace dmt {

/// Morse chain complex of a gradient field: critical simplices as basis,
/// boundary entries the signed gradient-path counts.
struct MorseComplexData {
    Ring ring = Ring::mod2;
    std::vector<std::vector<SimplexId>> basis;  // basis[q]: critical q-simplices, ascending ids
    std::vector<IntMat> boundary;               // boundary[q]: rows basis[q-1], cols basis[q]; boundary[0] has 0 rows

    int top_dim() const { return static_cast<int>(basis.size()) - 1; }
    /// Column position of a critical simplex in basis[q], or -1.
    int index_of(int q, SimplexId s) const;
};

/// Builds the Morse complex and verifies that the boundary squares to zero
/// (hard failure otherwise: that would mean a sign-convention bug, never a
/// property of the input).
MorseComplexData build_morse_complex(const SimplicialComplex& K, const GradientField& V, Ring ring);

struct DimHomology {
    long long betti = 0;
    std::vector<long long> torsion;  // invariant factors > 1, ascending (empty over Z_2)
};

/// Homology of the Morse complex over its ring (Smith normal form over Z,
/// ranks over Z_2).
std::vector<DimHomology> morse_homology(const MorseComplexData& data);

/// Rational Betti numbers of the full simplicial complex (independent of any
/// gradient field).
std::vector<long long> betti_numbers(const SimplicialComplex& K);

/// Whether the number of critical q-simplices equals the q-th rational Betti
/// number for every q.
bool is_optimal(const SimplicialComplex& K, const GradientField& V);

}  // namespace dmt

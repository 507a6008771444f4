#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmt/gradient.hpp"
#include "dmt/simplicial_complex.hpp"

namespace dmt {

/// A gradient field with exactly one pair: the vertices of M(K).
struct PrimitiveField {
    SimplexId face, coface;
};

/// The complex of discrete Morse functions of K: a k-simplex is a set of
/// k + 1 primitive fields whose union is a gradient field (a matching with no
/// closed V-path).  Simplices are stored as ascending primitive indices,
/// grouped by dimension in lexicographic order.  The empty field is not a
/// simplex of M(K).
struct MorseFunctionComplex {
    std::vector<PrimitiveField> vertices;
    std::vector<std::vector<std::vector<int>>> simplices;  // [dim][which][member indices]

    int dim() const { return static_cast<int>(simplices.size()) - 1; }
    int count(int d) const {
        return (d < 0 || d > dim()) ? 0 : static_cast<int>(simplices[static_cast<size_t>(d)].size());
    }
    long long total() const;

    /// Position of a member set within its dimension, or -1.
    int index_of(const std::vector<int>& members) const;
};

/// All codimension-1 incidences of K as primitive fields, ordered by
/// (coface id, face id).
std::vector<PrimitiveField> enumerate_primitive_fields(const SimplicialComplex& K);

/// Builds M(K) by extending valid sets one primitive field at a time
/// (validity is hereditary, so this enumerates everything).  max_dim caps the
/// simplex dimension; size_guard refuses complexes with more primitive fields
/// than the bound.
MorseFunctionComplex build_mfc(const SimplicialComplex& K,
                               std::optional<int> max_dim = std::nullopt, int size_guard = 24);

/// The gradient field named by a simplex of M(K).
GradientField field_of(const SimplicialComplex& K, const MorseFunctionComplex& M,
                       const std::vector<int>& members);

enum class FaceStep { death, birth, none };

/// Crossing from S1 to S2 along a codimension-1 face relation: into the face
/// (S1 contains S2) is a birth, out of the face (S2 contains S1) a death.
FaceStep classify_face_step(const std::vector<int>& s1, const std::vector<int>& s2);

/// Connected-component label per simplex (dimension-major indexing across
/// simplices of all dimensions); adjacency is the codimension-1 face relation.
std::vector<int> components(const MorseFunctionComplex& M);

/// A shortest walk S1 = T_0, ..., T_r = S2 with each step a codimension-1
/// face relation, or nullopt when the two lie in different components.
std::optional<std::vector<std::vector<int>>> transition_path(const MorseFunctionComplex& M,
                                                             const std::vector<int>& s1,
                                                             const std::vector<int>& s2);

/// Graphviz rendering of the 1-skeleton; vertices are labeled by their
/// (face, coface) pairs.
std::string to_dot(const SimplicialComplex& K, const MorseFunctionComplex& M);

}  // namespace dmt

#pragma once

#include <vector>

#include "dmt/gradient.hpp"
#include "dmt/simplicial_complex.hpp"

namespace dmt {

/// One gradient V-path: alternating simplex ids inside a dimension band
/// (p, p+1), from the start id to the end id inclusive.  sign is the product
/// of the step weights (Forman's convention): a down step beta -> alpha
/// contributes [beta : alpha], an up step alpha -> beta along a pair of V
/// contributes -[beta : alpha].  The empty path has sign +1.
struct GradientPath {
    std::vector<SimplexId> sequence;
    long long sign = 1;
};

/// All V-paths from `from` to `to`, children explored in ascending id order.
/// Supported forms (band inferred from the endpoint dimensions):
///   dim(from) == dim(to) + 1 : boundary form, seeded through the faces of `from`;
///   dim(from) == dim(to) >= 1: upper-endpoint form in the band (dim-1, dim);
///   dim(from) == dim(to) == 0: lower-endpoint form in the band (0, 1).
/// Other dimension combinations throw BuildError.
std::vector<GradientPath> enumerate_paths(const SimplicialComplex& K, const GradientField& V,
                                          SimplexId from, SimplexId to);

/// Signed sum of path weights over the same path set (no trivial-path
/// convention applied; from == to yields 1, the empty path).
long long path_sum(const SimplicialComplex& K, const GradientField& V, SimplexId from,
                   SimplexId to);

/// Whether at least one V-path connects the two ids (true when equal).
bool path_exists(const SimplicialComplex& K, const GradientField& V, SimplexId from, SimplexId to);

/// Connectedness coefficient n(sigma, alpha) on the field V:
///   dim(alpha) == dim(sigma) - 1: Morse boundary coefficient (paths seeded
///     through every face of sigma, weighted by the seed incidences);
///   dim(alpha) == dim(sigma) >= 1: same-dimension coefficient with the
///     trivial convention n(s, s) = 1; every path that leaves sigma through a
///     face and later climbs into alpha along alpha's own matched face is
///     counted, each arrival once, with the walk free to continue beyond;
///   dim(alpha) == dim(sigma) == 0: counted on upward walks, see below.
long long connectedness_coefficient(const SimplicialComplex& K, const GradientField& V,
                                    SimplexId sigma, SimplexId alpha);

/// Same-dimension coefficient counted on upward walks of V: from a d-simplex,
/// step onto its V-partner and back down through the partner's other faces,
/// repeating until the walk reaches `to`.  Simplices unmatched upward are
/// walk endpoints.  Equals 1 when from == to.
long long upward_connectedness(const SimplicialComplex& K, const GradientField& V, SimplexId from,
                               SimplexId to);

}  // namespace dmt

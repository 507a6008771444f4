#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmt/simplicial_complex.hpp"

namespace dmt {

/// One value per simplex, indexed by id.
using MorseFunction = std::vector<double>;

struct Violation {
    SimplexId simplex = kNoSimplex;
    std::string detail;
};

/// Discrete gradient vector field: a matching of codimension-1 incidences
/// whose modified Hasse diagram has no closed V-path in any dimension band.
class GradientField {
public:
    /// Validating constructor; throws BuildError on malformed pairs and
    /// returns the violations of the matching / acyclicity conditions through
    /// validate_gradient_field instead of constructing.
    static GradientField make(const SimplicialComplex& K,
                              const std::vector<std::pair<SimplexId, SimplexId>>& pairs);

    static GradientField empty(const SimplicialComplex& K);

    /// Matched coface of s, or kNoSimplex.
    SimplexId up(SimplexId s) const { return up_[static_cast<size_t>(s)]; }
    /// Matched face of s, or kNoSimplex.
    SimplexId down(SimplexId s) const { return down_[static_cast<size_t>(s)]; }

    bool is_critical(SimplexId s) const { return up(s) == kNoSimplex && down(s) == kNoSimplex; }

    /// Critical simplices of dimension d, ascending by id.
    std::vector<SimplexId> critical(const SimplicialComplex& K, int d) const;
    std::vector<int> critical_counts(const SimplicialComplex& K) const;  // index = dimension

    /// Pairs (face, coface) sorted by face id.
    std::vector<std::pair<SimplexId, SimplexId>> pairs() const;

    int size() const { return static_cast<int>(up_.size()); }

    bool operator==(const GradientField&) const = default;

private:
    std::vector<SimplexId> up_, down_;
};

/// Matching and acyclicity violations of a proposed pair list; empty means the
/// list is a valid gradient field.  Unknown ids or non-codimension-1 pairs
/// throw BuildError.
std::vector<Violation> validate_gradient_field(const SimplicialComplex& K,
                                               const std::vector<std::pair<SimplexId, SimplexId>>& pairs);

/// Violations of the two local Morse-function conditions: at most one coface
/// with no larger value, at most one face with no smaller value.
std::vector<Violation> validate_morse_function(const SimplicialComplex& K, const MorseFunction& f);

/// Gradient field induced by a valid Morse function: pairs (alpha, beta) with
/// alpha a codimension-1 face of beta and f(alpha) >= f(beta).
GradientField gradient_field_of(const SimplicialComplex& K, const MorseFunction& f);

/// A Morse function whose gradient field is exactly V (integer values from a
/// topological order of the modified Hasse diagram, reversed).
MorseFunction function_realizing(const SimplicialComplex& K, const GradientField& V);

}  // namespace dmt

#pragma once

#include <optional>
#include <vector>

#include "dmt/conn_hom.hpp"

namespace dmt {

enum class TransitionKind { birth, death };

struct TransitionChecks {
    bool cardinality = false;  // critical counts differ by one in exactly dims i and i-1
    bool g_formula = false;    // reverse map: single +-1 columns off the pair, zero on sigma, bijective
    bool h_formula = false;    // forward map: identity-like columns with the dim-i extra row free
    bool eq1 = false;          // untouched boundaries agree (dims away from i, i+1)
    bool eq2 = false;          // dim i+1 boundaries agree up to the path factor through sigma
    bool eq3 = false;          // dim i boundaries agree up to the multiple of the sigma column
    bool eq4 = false;          // the sigma column is k alpha plus k times the transferred reverse image
    bool eq5 = false;          // the alpha column matches the path boundary on the other field
    bool relaxed = false;      // the matching pairs distinct ids somewhere (not the literal identity)
    std::vector<std::pair<SimplexId, SimplexId>> candidates;  // every passing pair, lexicographic
};

struct TransitionCertificate {
    TransitionKind kind = TransitionKind::birth;
    int dimension = 0;               // i: dimension of sigma
    SimplexId sigma = kNoSimplex;    // redundant pair, critical in the richer field
    SimplexId alpha = kNoSimplex;
    long long k = 0;                 // connectedness coefficient n(sigma, alpha) there
    bool cusp = false;               // |k| = 1 (k = 1 over Z_2)
    TransitionChecks checks;
};

/// Decides whether the ordered pair (V1, V2) is a single birth-death
/// transition: birth when V2 carries the two extra critical simplices, death
/// when V1 does.  Candidate redundant pairs are scanned in lexicographic
/// (sigma id, alpha id) order; all passing candidates are recorded and the
/// first is certified.  nullopt when the cardinality pattern or every
/// candidate fails.
std::optional<TransitionCertificate> detect_transition(const SimplicialComplex& K,
                                                       const GradientField& V1,
                                                       const GradientField& V2, Ring ring);

/// Both directions of the certified transition are chain maps.
bool verify_transition_chain_maps(const TransitionCertificate& cert, const ConnHom& h,
                                  const ConnHom& g, const MorseComplexData& data1,
                                  const MorseComplexData& data2);

struct CompositionReport {
    bool full_side = false;     // composition into the leaner complex is the identity
    bool reduced_side = false;  // the other composition is the identity off sigma, alpha
    bool ok = false;
};

/// g o h and h o g against the identity, ignoring the redundant pair's rows
/// and columns on the side that owns them.
CompositionReport verify_composition(const ConnHom& h, const ConnHom& g,
                                     const TransitionCertificate& cert);

/// Forman cancellation: reverses the unique gradient path from sigma down to
/// alpha and returns the modified field, whose critical set is the old one
/// minus {sigma, alpha}.  Throws BuildError when the path count is not one.
GradientField cancel_pair(const SimplicialComplex& K, const GradientField& V, SimplexId sigma,
                          SimplexId alpha);

struct SequenceStep {
    bool isomorphism = false;  // adjacent homs invertible in every dimension
    std::optional<TransitionCertificate> cert;
};

struct SequenceResult {
    bool ok = true;
    int break_index = -1;  // first adjacent pair that is neither transition nor isomorphism
    std::vector<SequenceStep> steps;
};

/// Walks adjacent pairs of fields, accepting each as an isomorphism pair or a
/// certified single transition.
SequenceResult verify_transition_sequence(const SimplicialComplex& K,
                                          const std::vector<GradientField>& fields, Ring ring);

}  // namespace dmt

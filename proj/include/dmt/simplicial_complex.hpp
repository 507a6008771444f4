#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace dmt {

using SimplexId = int;
inline constexpr SimplexId kNoSimplex = -1;

/// Raised for malformed complex or field descriptions (bad names, conflicting
/// orientations, empty input, ...).
struct BuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Simplex {
    SimplexId id = kNoSimplex;
    int dim = 0;
    std::vector<int> vertices;  // vertex ids; the stored order is the orientation
    std::string label;
};

struct FaceEntry {
    SimplexId id;
    int sign;  // incidence number of (parent, face)
};

/// Finite oriented simplicial complex.  Ids are dense and dimension-major:
/// all vertices first (sorted by name), then edges in lexicographic vertex
/// order, and so on.  Explicitly listed simplices keep their listed vertex
/// order as orientation; generated faces use ascending vertex order.
class SimplicialComplex {
public:
    class Builder;

    /// Convenience: closure of a facet list, vertices named by the strings used.
    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);

    int dim() const { return max_dim_; }
    int size() const { return static_cast<int>(simplices_.size()); }
    int vertex_count() const { return count(0); }

    /// Number of simplices of dimension d (0 when out of range).
    int count(int d) const;

    /// Ids of dimension d form the contiguous range [dim_begin(d), dim_begin(d+1)).
    SimplexId dim_begin(int d) const;

    const Simplex& simplex(SimplexId id) const { return simplices_.at(static_cast<size_t>(id)); }

    std::span<const FaceEntry> faces(SimplexId id) const {
        return {faces_[static_cast<size_t>(id)].data(), faces_[static_cast<size_t>(id)].size()};
    }
    std::span<const FaceEntry> cofaces(SimplexId id) const {
        return {cofaces_[static_cast<size_t>(id)].data(), cofaces_[static_cast<size_t>(id)].size()};
    }

    /// Incidence number of sigma in d(alpha)... 0 unless alpha is a
    /// codimension-1 face of sigma; otherwise the alternating sign adjusted by
    /// the permutation parity of the two stored orientations.
    int incidence(SimplexId sigma, SimplexId alpha) const;

    /// Lookup by the unordered vertex set; kNoSimplex when absent.
    SimplexId find(std::vector<int> vertex_ids) const;

    SimplexId id_of_label(const std::string& label) const;  // throws BuildError when unknown
    SimplexId try_label(const std::string& label) const;    // kNoSimplex when unknown

    const std::string& vertex_name(int vertex_id) const { return vertex_names_.at(static_cast<size_t>(vertex_id)); }
    int vertex_id(const std::string& name) const;  // throws when unknown

    bool was_explicit(SimplexId id) const { return explicit_[static_cast<size_t>(id)]; }

private:
    friend class Builder;
    SimplicialComplex() = default;

    int max_dim_ = 0;
    std::vector<Simplex> simplices_;
    std::vector<std::vector<FaceEntry>> faces_;
    std::vector<std::vector<FaceEntry>> cofaces_;
    std::vector<int> dim_offsets_;  // dim_offsets_[d] = first id of dimension d
    std::vector<std::string> vertex_names_;
    std::unordered_map<std::string, int> vertex_ids_;
    std::unordered_map<std::string, SimplexId> labels_;
    std::vector<bool> explicit_;
};

/// Incremental construction: declare vertices, explicitly oriented simplices,
/// and facets whose closures are generated.
class SimplicialComplex::Builder {
public:
    /// strict = true: every vertex referenced by a simplex or facet must have
    /// been declared beforehand (file input).  strict = false: vertices are
    /// declared on first use (programmatic input).
    explicit Builder(bool strict = false) : strict_(strict) {}

    void add_vertex(const std::string& name);
    void add_simplex(const std::string& label, const std::vector<std::string>& vertices);
    void add_facet(const std::vector<std::string>& vertices);

    SimplicialComplex build();

private:
    struct Entry {
        std::vector<std::string> order;  // as listed
        std::string label;               // empty = auto
        bool is_explicit = false;
    };

    void touch(const std::string& name);

    bool strict_;
    std::vector<std::string> vertex_names_;
    std::unordered_map<std::string, int> seen_;
    std::vector<Entry> entries_;
};

/// Parity (+1/-1) of the permutation taking `from` to `to`; the two sequences
/// must contain the same distinct elements.
int permutation_sign(const std::vector<int>& from, const std::vector<int>& to);

}  // namespace dmt

#include "dmt/mfc.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace dmt {

long long MorseFunctionComplex::total() const {
    long long n = 0;
    for (const auto& d : simplices) n += static_cast<long long>(d.size());
    return n;
}

int MorseFunctionComplex::index_of(const std::vector<int>& members) const {
    int d = static_cast<int>(members.size()) - 1;
    if (d < 0 || d > dim()) return -1;
    const auto& level = simplices[static_cast<size_t>(d)];
    auto it = std::lower_bound(level.begin(), level.end(), members);
    if (it == level.end() || *it != members) return -1;
    return static_cast<int>(it - level.begin());
}

std::vector<PrimitiveField> enumerate_primitive_fields(const SimplicialComplex& K) {
    std::vector<PrimitiveField> out;
    for (SimplexId s = 0; s < K.size(); ++s)
        for (const FaceEntry& f : K.faces(s)) out.push_back({f.id, s});
    return out;  // coface-major because ids ascend, faces sorted within
}

namespace {

std::vector<std::pair<SimplexId, SimplexId>> as_pairs(const MorseFunctionComplex& M,
                                                      const std::vector<int>& members) {
    std::vector<std::pair<SimplexId, SimplexId>> pairs;
    pairs.reserve(members.size());
    for (int ix : members) {
        const PrimitiveField& p = M.vertices[static_cast<size_t>(ix)];
        pairs.emplace_back(p.face, p.coface);
    }
    return pairs;
}

}  // namespace

GradientField field_of(const SimplicialComplex& K, const MorseFunctionComplex& M,
                       const std::vector<int>& members) {
    return GradientField::make(K, as_pairs(M, members));
}

MorseFunctionComplex build_mfc(const SimplicialComplex& K, std::optional<int> max_dim,
                               int size_guard) {
    MorseFunctionComplex M;
    M.vertices = enumerate_primitive_fields(K);
    if (static_cast<int>(M.vertices.size()) > size_guard)
        throw BuildError("complex has " + std::to_string(M.vertices.size()) +
                         " primitive fields, above the size guard of " + std::to_string(size_guard));
    int n = static_cast<int>(M.vertices.size());
    if (n == 0) return M;

    std::vector<std::vector<int>> frontier;
    for (int ix = 0; ix < n; ++ix) frontier.push_back({ix});  // every primitive field is valid
    int d = 0;
    while (!frontier.empty()) {
        M.simplices.push_back(frontier);
        if (max_dim && d >= *max_dim) break;
        std::vector<std::vector<int>> next;
        for (const std::vector<int>& set : frontier) {
            // Extending by indices above the maximum keeps the enumeration
            // canonical; validity of subsets (heredity) makes it complete.
            for (int ix = set.back() + 1; ix < n; ++ix) {
                std::vector<int> bigger = set;
                bigger.push_back(ix);
                if (validate_gradient_field(K, as_pairs(M, bigger)).empty()) next.push_back(bigger);
            }
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
        ++d;
    }
    return M;
}

FaceStep classify_face_step(const std::vector<int>& s1, const std::vector<int>& s2) {
    auto contains = [](const std::vector<int>& big, const std::vector<int>& small_set) {
        return std::includes(big.begin(), big.end(), small_set.begin(), small_set.end());
    };
    if (s1.size() + 1 == s2.size() && contains(s2, s1)) return FaceStep::death;
    if (s2.size() + 1 == s1.size() && contains(s1, s2)) return FaceStep::birth;
    return FaceStep::none;
}

namespace {

// Global index of a simplex across dimensions, and its codimension-1
// neighbors (faces and cofaces).
struct Flat {
    std::vector<std::pair<int, int>> at;        // global -> (dim, pos)
    std::map<std::vector<int>, int> lookup;     // members -> global
    std::vector<std::vector<int>> neighbors;

    explicit Flat(const MorseFunctionComplex& M) {
        for (int d = 0; d <= M.dim(); ++d)
            for (int p = 0; p < M.count(d); ++p) {
                lookup[M.simplices[static_cast<size_t>(d)][static_cast<size_t>(p)]] =
                    static_cast<int>(at.size());
                at.emplace_back(d, p);
            }
        neighbors.resize(at.size());
        for (const auto& [members, g] : lookup) {
            if (members.size() == 1) continue;
            for (size_t drop = 0; drop < members.size(); ++drop) {
                std::vector<int> face = members;
                face.erase(face.begin() + static_cast<long>(drop));
                int fg = lookup.at(face);
                neighbors[static_cast<size_t>(g)].push_back(fg);
                neighbors[static_cast<size_t>(fg)].push_back(g);
            }
        }
    }
};

}  // namespace

std::vector<int> components(const MorseFunctionComplex& M) {
    Flat flat(M);
    std::vector<int> label(flat.at.size(), -1);
    int next = 0;
    for (size_t start = 0; start < flat.at.size(); ++start) {
        if (label[start] >= 0) continue;
        std::deque<int> queue{static_cast<int>(start)};
        label[start] = next;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : flat.neighbors[static_cast<size_t>(x)])
                if (label[static_cast<size_t>(y)] < 0) {
                    label[static_cast<size_t>(y)] = next;
                    queue.push_back(y);
                }
        }
        ++next;
    }
    return label;
}

std::optional<std::vector<std::vector<int>>> transition_path(const MorseFunctionComplex& M,
                                                             const std::vector<int>& s1,
                                                             const std::vector<int>& s2) {
    Flat flat(M);
    auto it1 = flat.lookup.find(s1), it2 = flat.lookup.find(s2);
    if (it1 == flat.lookup.end() || it2 == flat.lookup.end())
        throw BuildError("transition_path: not a simplex of the function complex");
    std::vector<int> parent(flat.at.size(), -1);
    std::deque<int> queue{it1->second};
    parent[static_cast<size_t>(it1->second)] = it1->second;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == it2->second) break;
        for (int y : flat.neighbors[static_cast<size_t>(x)])
            if (parent[static_cast<size_t>(y)] < 0) {
                parent[static_cast<size_t>(y)] = x;
                queue.push_back(y);
            }
    }
    if (parent[static_cast<size_t>(it2->second)] < 0) return std::nullopt;
    std::vector<std::vector<int>> walk;
    for (int x = it2->second;; x = parent[static_cast<size_t>(x)]) {
        auto [d, p] = flat.at[static_cast<size_t>(x)];
        walk.push_back(M.simplices[static_cast<size_t>(d)][static_cast<size_t>(p)]);
        if (x == it1->second) break;
    }
    std::reverse(walk.begin(), walk.end());
    return walk;
}

std::string to_dot(const SimplicialComplex& K, const MorseFunctionComplex& M) {
    std::ostringstream os;
    os << "graph morse_function_complex {\n";
    for (size_t ix = 0; ix < M.vertices.size(); ++ix) {
        const PrimitiveField& p = M.vertices[ix];
        os << "  p" << ix << " [label=\"(" << K.simplex(p.face).label << ","
           << K.simplex(p.coface).label << ")\"];\n";
    }
    if (M.dim() >= 1)
        for (const std::vector<int>& e : M.simplices[1])
            os << "  p" << e[0] << " -- p" << e[1] << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace dmt

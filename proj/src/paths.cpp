#include "dmt/paths.hpp"

#include <unordered_map>

namespace dmt {

namespace {

// The V-modified Hasse diagram of the band (p, p+1): a p-simplex has one
// up-arrow to its matched coface (weight -[beta : alpha]); a (p+1)-simplex has
// a down-arrow to each unmatched face (weight [beta : alpha]).  Faces are
// stored sorted by id, so successors come out in ascending id order.
struct Band {
    const SimplicialComplex& K;
    const GradientField& V;
    int p;

    template <class F>
    void successors(SimplexId x, F&& visit) const {
        if (K.simplex(x).dim == p) {
            SimplexId u = V.up(x);
            if (u != kNoSimplex && K.simplex(u).dim == p + 1)
                visit(u, -static_cast<long long>(K.incidence(u, x)));
        } else {
            for (const FaceEntry& f : K.faces(x)) {
                if (V.up(f.id) == x) continue;
                visit(f.id, static_cast<long long>(f.sign));
            }
        }
    }
};

int band_of(const SimplicialComplex& K, SimplexId from, SimplexId to) {
    int df = K.simplex(from).dim, dt = K.simplex(to).dim;
    if (df == dt + 1) return dt;           // boundary form
    if (df == dt && df >= 1) return df - 1;  // upper endpoints
    if (df == dt && df == 0) return 0;       // vertex endpoints
    throw BuildError("path endpoints must have equal dimension or differ by one");
}

// Weighted path count x ~> to, memoized over the acyclic band diagram.
long long sum_to(const Band& band, SimplexId x, SimplexId to,
                 std::unordered_map<SimplexId, long long>& memo) {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    long long total = (x == to) ? 1 : 0;
    band.successors(x, [&](SimplexId y, long long w) { total += w * sum_to(band, y, to, memo); });
    memo[x] = total;
    return total;
}

bool reaches(const Band& band, SimplexId x, SimplexId to,
             std::unordered_map<SimplexId, bool>& memo) {
    if (x == to) return true;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    memo[x] = false;  // acyclic, so no revisit can complete a path
    bool hit = false;
    band.successors(x, [&](SimplexId y, long long) { hit = hit || reaches(band, y, to, memo); });
    memo[x] = hit;
    return hit;
}

void collect(const Band& band, SimplexId x, SimplexId to, long long sign,
             std::vector<SimplexId>& stack, std::vector<GradientPath>& out) {
    stack.push_back(x);
    if (x == to) out.push_back({stack, sign});
    band.successors(x, [&](SimplexId y, long long w) { collect(band, y, to, sign * w, stack, out); });
    stack.pop_back();
}

}  // namespace

std::vector<GradientPath> enumerate_paths(const SimplicialComplex& K, const GradientField& V,
                                          SimplexId from, SimplexId to) {
    Band band{K, V, band_of(K, from, to)};
    std::vector<GradientPath> out;
    std::vector<SimplexId> stack;
    collect(band, from, to, 1, stack, out);
    return out;
}

long long path_sum(const SimplicialComplex& K, const GradientField& V, SimplexId from,
                   SimplexId to) {
    Band band{K, V, band_of(K, from, to)};
    std::unordered_map<SimplexId, long long> memo;
    return sum_to(band, from, to, memo);
}

bool path_exists(const SimplicialComplex& K, const GradientField& V, SimplexId from, SimplexId to) {
    Band band{K, V, band_of(K, from, to)};
    std::unordered_map<SimplexId, bool> memo;
    return reaches(band, from, to, memo);
}

long long connectedness_coefficient(const SimplicialComplex& K, const GradientField& V,
                                    SimplexId sigma, SimplexId alpha) {
    int ds = K.simplex(sigma).dim, da = K.simplex(alpha).dim;
    if (ds == da && ds == 0) return upward_connectedness(K, V, sigma, alpha);
    if (ds == da) {
        if (sigma == alpha) return 1;
        Band band{K, V, ds - 1};
        std::unordered_map<SimplexId, long long> memo;
        return sum_to(band, sigma, alpha, memo);
    }
    if (ds == da + 1) return path_sum(K, V, sigma, alpha);
    throw BuildError("connectedness coefficient needs equal dimensions or a codimension-1 drop");
}

long long upward_connectedness(const SimplicialComplex& K, const GradientField& V, SimplexId from,
                               SimplexId to) {
    int d = K.simplex(from).dim;
    if (K.simplex(to).dim != d)
        throw BuildError("upward connectedness needs equal dimensions");
    if (from == to) return 1;
    Band band{K, V, d};
    std::unordered_map<SimplexId, long long> memo;
    return sum_to(band, from, to, memo);
}

}  // namespace dmt

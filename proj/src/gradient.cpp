#include "dmt/gradient.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace dmt {

namespace {

void check_pair_shape(const SimplicialComplex& K, SimplexId a, SimplexId b) {
    if (a < 0 || a >= K.size() || b < 0 || b >= K.size())
        throw BuildError("gradient pair references an unknown simplex id");
    if (K.simplex(b).dim != K.simplex(a).dim + 1 || K.incidence(b, a) == 0) {
        std::ostringstream os;
        os << "pair (" << K.simplex(a).label << ", " << K.simplex(b).label
           << ") is not a codimension-1 incidence";
        throw BuildError(os.str());
    }
}

// Kahn's algorithm on the V-modified Hasse diagram of the band (p, p+1):
// up-arrows along pairs, down-arrows along unmatched incidences.  Returns the
// ids left on a cycle (empty when acyclic).
std::vector<SimplexId> band_cycle(const SimplicialComplex& K,
                                  const std::vector<SimplexId>& up, int p) {
    SimplexId lo = K.dim_begin(p), hi = K.dim_begin(p + 2);
    std::vector<int> indegree(static_cast<size_t>(hi - lo), 0);
    auto successors = [&](SimplexId x, auto&& visit) {
        if (K.simplex(x).dim == p) {
            SimplexId u = up[static_cast<size_t>(x)];
            if (u != kNoSimplex && K.simplex(u).dim == p + 1) visit(u);
        } else {
            for (const FaceEntry& f : K.faces(x))
                if (up[static_cast<size_t>(f.id)] != x) visit(f.id);
        }
    };
    for (SimplexId x = lo; x < hi; ++x)
        successors(x, [&](SimplexId y) { ++indegree[static_cast<size_t>(y - lo)]; });
    std::deque<SimplexId> queue;
    for (SimplexId x = lo; x < hi; ++x)
        if (indegree[static_cast<size_t>(x - lo)] == 0) queue.push_back(x);
    int seen = 0;
    while (!queue.empty()) {
        SimplexId x = queue.front();
        queue.pop_front();
        ++seen;
        successors(x, [&](SimplexId y) {
            if (--indegree[static_cast<size_t>(y - lo)] == 0) queue.push_back(y);
        });
    }
    std::vector<SimplexId> stuck;
    if (seen < hi - lo)
        for (SimplexId x = lo; x < hi; ++x)
            if (indegree[static_cast<size_t>(x - lo)] > 0) stuck.push_back(x);
    return stuck;
}

}  // namespace

std::vector<Violation> validate_gradient_field(const SimplicialComplex& K,
                                               const std::vector<std::pair<SimplexId, SimplexId>>& pairs) {
    std::vector<Violation> out;
    std::vector<int> used(static_cast<size_t>(K.size()), 0);
    std::vector<SimplexId> up(static_cast<size_t>(K.size()), kNoSimplex);
    for (auto [a, b] : pairs) {
        check_pair_shape(K, a, b);
        ++used[static_cast<size_t>(a)];
        ++used[static_cast<size_t>(b)];
        if (up[static_cast<size_t>(a)] == kNoSimplex) up[static_cast<size_t>(a)] = b;
    }
    for (SimplexId s = 0; s < K.size(); ++s)
        if (used[static_cast<size_t>(s)] > 1)
            out.push_back({s, K.simplex(s).label + " occurs in " + std::to_string(used[static_cast<size_t>(s)]) +
                                  " pairs (matching condition)"});
    if (!out.empty()) return out;  // acyclicity is only meaningful for a matching
    for (int p = 0; p < K.dim(); ++p) {
        std::vector<SimplexId> stuck = band_cycle(K, up, p);
        if (!stuck.empty()) {
            std::ostringstream os;
            os << "closed V-path in dimension band (" << p << ", " << p + 1 << ") through";
            for (SimplexId s : stuck) os << ' ' << K.simplex(s).label;
            out.push_back({stuck.front(), os.str()});
        }
    }
    return out;
}

GradientField GradientField::make(const SimplicialComplex& K,
                                  const std::vector<std::pair<SimplexId, SimplexId>>& pairs) {
    std::vector<Violation> bad = validate_gradient_field(K, pairs);
    if (!bad.empty()) throw BuildError("invalid gradient field: " + bad.front().detail);
    GradientField V;
    V.up_.assign(static_cast<size_t>(K.size()), kNoSimplex);
    V.down_.assign(static_cast<size_t>(K.size()), kNoSimplex);
    for (auto [a, b] : pairs) {
        V.up_[static_cast<size_t>(a)] = b;
        V.down_[static_cast<size_t>(b)] = a;
    }
    return V;
}

GradientField GradientField::empty(const SimplicialComplex& K) {
    return make(K, {});
}

std::vector<SimplexId> GradientField::critical(const SimplicialComplex& K, int d) const {
    std::vector<SimplexId> out;
    for (SimplexId s = K.dim_begin(d); s < K.dim_begin(d + 1); ++s)
        if (is_critical(s)) out.push_back(s);
    return out;
}

std::vector<int> GradientField::critical_counts(const SimplicialComplex& K) const {
    std::vector<int> out(static_cast<size_t>(K.dim()) + 1, 0);
    for (int d = 0; d <= K.dim(); ++d)
        out[static_cast<size_t>(d)] = static_cast<int>(critical(K, d).size());
    return out;
}

std::vector<std::pair<SimplexId, SimplexId>> GradientField::pairs() const {
    std::vector<std::pair<SimplexId, SimplexId>> out;
    for (SimplexId s = 0; s < static_cast<SimplexId>(up_.size()); ++s)
        if (up_[static_cast<size_t>(s)] != kNoSimplex) out.emplace_back(s, up_[static_cast<size_t>(s)]);
    return out;
}

std::vector<Violation> validate_morse_function(const SimplicialComplex& K, const MorseFunction& f) {
    if (static_cast<int>(f.size()) != K.size())
        throw BuildError("morse function must assign a value to every simplex");
    std::vector<Violation> out;
    for (SimplexId s = 0; s < K.size(); ++s) {
        std::vector<SimplexId> high;  // cofaces valued not above f(s)
        for (const FaceEntry& c : K.cofaces(s))
            if (f[static_cast<size_t>(c.id)] <= f[static_cast<size_t>(s)]) high.push_back(c.id);
        std::vector<SimplexId> low;  // faces valued not below f(s)
        for (const FaceEntry& a : K.faces(s))
            if (f[static_cast<size_t>(s)] <= f[static_cast<size_t>(a.id)]) low.push_back(a.id);
        auto name_all = [&](const std::vector<SimplexId>& v) {
            std::string r;
            for (SimplexId x : v) r += ' ' + K.simplex(x).label;
            return r;
        };
        if (high.size() > 1)
            out.push_back({s, K.simplex(s).label + " has " + std::to_string(high.size()) +
                                  " cofaces with no larger value:" + name_all(high)});
        if (low.size() > 1)
            out.push_back({s, K.simplex(s).label + " has " + std::to_string(low.size()) +
                                  " faces with no smaller value:" + name_all(low)});
    }
    return out;
}

GradientField gradient_field_of(const SimplicialComplex& K, const MorseFunction& f) {
    std::vector<Violation> bad = validate_morse_function(K, f);
    if (!bad.empty()) throw BuildError("not a discrete Morse function: " + bad.front().detail);
    std::vector<std::pair<SimplexId, SimplexId>> pairs;
    for (SimplexId s = 0; s < K.size(); ++s)
        for (const FaceEntry& c : K.cofaces(s))
            if (f[static_cast<size_t>(c.id)] <= f[static_cast<size_t>(s)]) pairs.emplace_back(s, c.id);
    return GradientField::make(K, pairs);
}

MorseFunction function_realizing(const SimplicialComplex& K, const GradientField& V) {
    // Constraint digraph, edge x -> y meaning f(x) < f(y): unmatched
    // incidences point up (alpha -> beta), matched ones point down.  This is
    // the reverse of the modified Hasse diagram, so validity of V makes it
    // acyclic; a topological rank then realizes V.
    std::vector<std::vector<SimplexId>> succ(static_cast<size_t>(K.size()));
    std::vector<int> indegree(static_cast<size_t>(K.size()), 0);
    for (SimplexId b = 0; b < K.size(); ++b)
        for (const FaceEntry& fe : K.faces(b)) {
            SimplexId a = fe.id;
            if (V.up(a) == b)
                succ[static_cast<size_t>(b)].push_back(a);
            else
                succ[static_cast<size_t>(a)].push_back(b);
        }
    for (const auto& v : succ)
        for (SimplexId y : v) ++indegree[static_cast<size_t>(y)];
    // Kahn with an id-ordered frontier for a deterministic assignment.
    std::vector<SimplexId> frontier;
    for (SimplexId s = 0; s < K.size(); ++s)
        if (indegree[static_cast<size_t>(s)] == 0) frontier.push_back(s);
    std::make_heap(frontier.begin(), frontier.end(), std::greater<>());
    MorseFunction f(static_cast<size_t>(K.size()), 0.0);
    int next = 0;
    while (!frontier.empty()) {
        std::pop_heap(frontier.begin(), frontier.end(), std::greater<>());
        SimplexId x = frontier.back();
        frontier.pop_back();
        f[static_cast<size_t>(x)] = next++;
        for (SimplexId y : succ[static_cast<size_t>(x)])
            if (--indegree[static_cast<size_t>(y)] == 0) {
                frontier.push_back(y);
                std::push_heap(frontier.begin(), frontier.end(), std::greater<>());
            }
    }
    if (next != K.size()) throw std::logic_error("function_realizing: constraint digraph has a cycle");
    return f;
}

}  // namespace dmt

#include "dmt/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dmt {

int permutation_sign(const std::vector<int>& from, const std::vector<int>& to) {
    if (from.size() != to.size()) throw std::logic_error("permutation_sign: size mismatch");
    std::vector<int> work = from;
    int sign = 1;
    for (size_t i = 0; i < to.size(); ++i) {
        if (work[i] == to[i]) continue;
        auto it = std::find(work.begin() + static_cast<long>(i) + 1, work.end(), to[i]);
        if (it == work.end()) throw std::logic_error("permutation_sign: not a permutation");
        std::swap(work[i], *it);
        sign = -sign;
    }
    return sign;
}

int SimplicialComplex::count(int d) const {
    if (d < 0 || d > max_dim_) return 0;
    return dim_offsets_[static_cast<size_t>(d) + 1] - dim_offsets_[static_cast<size_t>(d)];
}

SimplexId SimplicialComplex::dim_begin(int d) const {
    if (d < 0) return 0;
    if (d > max_dim_ + 1) d = max_dim_ + 1;
    return dim_offsets_[static_cast<size_t>(d)];
}

int SimplicialComplex::incidence(SimplexId sigma, SimplexId alpha) const {
    const Simplex& s = simplex(sigma);
    const Simplex& a = simplex(alpha);
    if (s.dim != a.dim + 1) return 0;
    // Find the vertex of sigma missing from alpha; alpha must use the rest.
    std::set<int> av(a.vertices.begin(), a.vertices.end());
    int missing_pos = -1;
    for (size_t k = 0; k < s.vertices.size(); ++k) {
        if (!av.count(s.vertices[k])) {
            if (missing_pos >= 0) return 0;  // two vertices missing: not a face
            missing_pos = static_cast<int>(k);
        }
    }
    if (missing_pos < 0) return 0;
    std::vector<int> induced = s.vertices;
    induced.erase(induced.begin() + missing_pos);
    int sign = (missing_pos % 2 == 0) ? 1 : -1;
    return sign * permutation_sign(induced, a.vertices);
}

SimplexId SimplicialComplex::find(std::vector<int> vertex_ids) const {
    std::sort(vertex_ids.begin(), vertex_ids.end());
    int d = static_cast<int>(vertex_ids.size()) - 1;
    for (SimplexId id = dim_begin(d); id < dim_begin(d + 1); ++id) {
        std::vector<int> v = simplices_[static_cast<size_t>(id)].vertices;
        std::sort(v.begin(), v.end());
        if (v == vertex_ids) return id;
    }
    return kNoSimplex;
}

SimplexId SimplicialComplex::id_of_label(const std::string& label) const {
    auto it = labels_.find(label);
    if (it == labels_.end()) throw BuildError("unknown simplex name: " + label);
    return it->second;
}

SimplexId SimplicialComplex::try_label(const std::string& label) const {
    auto it = labels_.find(label);
    return it == labels_.end() ? kNoSimplex : it->second;
}

int SimplicialComplex::vertex_id(const std::string& name) const {
    auto it = vertex_ids_.find(name);
    if (it == vertex_ids_.end()) throw BuildError("unknown vertex name: " + name);
    return it->second;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string>>& facets) {
    Builder b(false);
    for (const auto& f : facets) b.add_facet(f);
    return b.build();
}

void SimplicialComplex::Builder::touch(const std::string& name) {
    if (seen_.count(name)) return;
    if (strict_) throw BuildError("undeclared vertex: " + name);
    seen_[name] = 1;
    vertex_names_.push_back(name);
}

void SimplicialComplex::Builder::add_vertex(const std::string& name) {
    if (name.empty()) throw BuildError("empty vertex name");
    if (seen_.count(name)) throw BuildError("duplicate vertex: " + name);
    seen_[name] = 1;
    vertex_names_.push_back(name);
}

void SimplicialComplex::Builder::add_simplex(const std::string& label, const std::vector<std::string>& vertices) {
    if (vertices.empty()) throw BuildError("simplex with no vertices");
    for (const auto& v : vertices) touch(v);
    entries_.push_back({vertices, label, true});
}

void SimplicialComplex::Builder::add_facet(const std::vector<std::string>& vertices) {
    if (vertices.empty()) throw BuildError("facet with no vertices");
    for (const auto& v : vertices) touch(v);
    entries_.push_back({vertices, "", true});
}

SimplicialComplex SimplicialComplex::Builder::build() {
    if (vertex_names_.empty()) throw BuildError("empty complex");

    SimplicialComplex K;
    K.vertex_names_ = vertex_names_;
    std::sort(K.vertex_names_.begin(), K.vertex_names_.end());
    for (size_t i = 0; i < K.vertex_names_.size(); ++i)
        K.vertex_ids_[K.vertex_names_[i]] = static_cast<int>(i);

    struct Pending {
        std::vector<int> order;  // orientation
        std::string label;
        bool is_explicit = false;
    };
    // Keyed by sorted vertex-id tuple; std::map gives the lexicographic order
    // used for id assignment within each dimension.
    std::map<std::vector<int>, Pending> pool;

    auto note = [&](const std::vector<int>& order, const std::string& label, bool is_explicit) {
        std::vector<int> key = order;
        std::sort(key.begin(), key.end());
        if (std::adjacent_find(key.begin(), key.end()) != key.end())
            throw BuildError("repeated vertex in simplex" + (label.empty() ? "" : ": " + label));
        auto it = pool.find(key);
        if (it == pool.end()) {
            pool[key] = {order, label, is_explicit};
            return;
        }
        Pending& p = it->second;
        if (is_explicit) {
            if (p.is_explicit && p.order != order)
                throw BuildError("conflicting orientations for one vertex set");
            if (p.is_explicit && !label.empty() && !p.label.empty() && p.label != label)
                throw BuildError("duplicate simplex: " + label);
            if (!p.is_explicit) p.order = order;
            p.is_explicit = true;
            if (p.label.empty()) p.label = label;
        }
    };

    for (const Entry& e : entries_) {
        std::vector<int> ids;
        ids.reserve(e.order.size());
        for (const auto& name : e.order) ids.push_back(K.vertex_ids_.at(name));
        note(ids, e.label, true);
        // Closure: every nonempty subset, ascending vertex order.
        std::vector<int> sorted = ids;
        std::sort(sorted.begin(), sorted.end());
        int n = static_cast<int>(sorted.size());
        for (int mask = 1; mask < (1 << n); ++mask) {
            if (mask == (1 << n) - 1) continue;  // the simplex itself, handled above
            std::vector<int> sub;
            for (int b = 0; b < n; ++b)
                if (mask & (1 << b)) sub.push_back(sorted[static_cast<size_t>(b)]);
            note(sub, "", false);
        }
    }
    // Vertices declared but never used in a facet still belong to the complex.
    for (size_t i = 0; i < K.vertex_names_.size(); ++i) note({static_cast<int>(i)}, "", false);

    int max_dim = 0;
    for (const auto& [key, p] : pool) max_dim = std::max(max_dim, static_cast<int>(key.size()) - 1);
    K.max_dim_ = max_dim;

    // Dimension-major, then lexicographic by sorted vertex tuple (map order).
    K.dim_offsets_.assign(static_cast<size_t>(max_dim) + 2, 0);
    std::map<std::vector<int>, SimplexId> ids_by_key;
    for (int d = 0; d <= max_dim; ++d) {
        K.dim_offsets_[static_cast<size_t>(d)] = static_cast<int>(K.simplices_.size());
        for (const auto& [key, p] : pool) {
            if (static_cast<int>(key.size()) - 1 != d) continue;
            Simplex s;
            s.id = static_cast<int>(K.simplices_.size());
            s.dim = d;
            s.vertices = p.order;
            s.label = p.label;
            ids_by_key[key] = s.id;
            K.simplices_.push_back(std::move(s));
            K.explicit_.push_back(p.is_explicit);
        }
    }
    K.dim_offsets_[static_cast<size_t>(max_dim) + 1] = static_cast<int>(K.simplices_.size());

    // Auto labels: vertex names joined by '-' in ascending order.
    for (Simplex& s : K.simplices_) {
        if (s.label.empty()) {
            std::vector<int> sorted = s.vertices;
            std::sort(sorted.begin(), sorted.end());
            std::string name;
            for (size_t i = 0; i < sorted.size(); ++i) {
                if (i) name += '-';
                name += K.vertex_names_[static_cast<size_t>(sorted[i])];
            }
            s.label = name;
        }
        auto [it, fresh] = K.labels_.emplace(s.label, s.id);
        if (!fresh) throw BuildError("duplicate simplex name: " + s.label);
    }

    // Face and coface maps with incidence signs.
    K.faces_.resize(K.simplices_.size());
    K.cofaces_.resize(K.simplices_.size());
    for (const Simplex& s : K.simplices_) {
        if (s.dim == 0) continue;
        for (size_t k = 0; k < s.vertices.size(); ++k) {
            std::vector<int> induced = s.vertices;
            induced.erase(induced.begin() + static_cast<long>(k));
            std::vector<int> key = induced;
            std::sort(key.begin(), key.end());
            SimplexId fid = ids_by_key.at(key);
            int sign = (k % 2 == 0 ? 1 : -1) *
                       permutation_sign(induced, K.simplices_[static_cast<size_t>(fid)].vertices);
            K.faces_[static_cast<size_t>(s.id)].push_back({fid, sign});
        }
        auto& fl = K.faces_[static_cast<size_t>(s.id)];
        std::sort(fl.begin(), fl.end(), [](const FaceEntry& a, const FaceEntry& b) { return a.id < b.id; });
    }
    for (const Simplex& s : K.simplices_)
        for (const FaceEntry& f : K.faces_[static_cast<size_t>(s.id)])
            K.cofaces_[static_cast<size_t>(f.id)].push_back({s.id, f.sign});
    for (auto& cl : K.cofaces_)
        std::sort(cl.begin(), cl.end(), [](const FaceEntry& a, const FaceEntry& b) { return a.id < b.id; });

    return K;
}

}  // namespace dmt

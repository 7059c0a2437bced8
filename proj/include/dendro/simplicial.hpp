#pragma once

// Finite simplicial sets: nondegenerate simplices in dimensions 0..2 with
// face incidence, plus the formal simplex calculus (base cell + degeneracy
// word) needed to evaluate arbitrary simplicial operators on them.

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

#include "tree.hpp"

namespace dendro {

using Json = nlohmann::json;

// a face of a triangle: an edge, or the degenerate edge on a vertex
struct EdgeRef {
    bool degenerate = false;
    int index = -1;  // edge index, or vertex index when degenerate
};

struct SimplicialSetFin {
    std::vector<std::string> vertices;
    struct Edge {
        std::string name;
        int v0 = -1, v1 = -1;  // d1 = v0 (source), d0 = v1 (target)
    };
    std::vector<Edge> edges;
    struct Triangle {
        std::string name;
        EdgeRef d0, d1, d2;
    };
    std::vector<Triangle> triangles;

    int vertex_index(const std::string& n) const {
        for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
            if (vertices[i] == n) return i;
        throw std::invalid_argument("simplicial set: unknown vertex " + n);
    }
    int edge_index(const std::string& n) const {
        for (int i = 0; i < static_cast<int>(edges.size()); ++i)
            if (edges[i].name == n) return i;
        throw std::invalid_argument("simplicial set: unknown edge " + n);
    }

    std::pair<int, int> endpoints(const EdgeRef& r) const {
        if (r.degenerate) return {r.index, r.index};
        return {edges[r.index].v0, edges[r.index].v1};
    }

    ValidationReport check() const {
        auto fail = [](std::string m) { return ValidationReport{false, std::move(m)}; };
        for (const auto& e : edges)
            if (e.v0 < 0 || e.v0 >= static_cast<int>(vertices.size()) || e.v1 < 0 ||
                e.v1 >= static_cast<int>(vertices.size()))
                return fail("edge " + e.name + " has bad endpoints");
        for (const auto& t : triangles) {
            for (const auto* r : {&t.d0, &t.d1, &t.d2}) {
                int bound = r->degenerate ? static_cast<int>(vertices.size())
                                          : static_cast<int>(edges.size());
                if (r->index < 0 || r->index >= bound)
                    return fail("triangle " + t.name + " has a bad face reference");
            }
            // simplicial identities: with vertices (x0,x1,x2),
            // d2 = (x0,x1), d1 = (x0,x2), d0 = (x1,x2)
            auto [a0, a1] = endpoints(t.d2);
            auto [b0, b1] = endpoints(t.d1);
            auto [c0, c1] = endpoints(t.d0);
            if (a0 != b0 || a1 != c0 || b1 != c1)
                return fail("triangle " + t.name + " violates the face identities");
        }
        return {};
    }
};

// a simplex value: nondegenerate base of dimension `kind` plus a monotone
// surjection word (values of [n] -> [kind], length n+1)
struct SimplexValue {
    int kind = 0;   // 0 vertex, 1 edge, 2 triangle
    int index = 0;  // into the corresponding table
    std::vector<int> word;

    int dim() const { return static_cast<int>(word.size()) - 1; }
};

namespace detail {

inline SimplexValue stored_face(const SimplicialSetFin& X, int kind, int index, int i) {
    if (kind == 1) {
        const auto& e = X.edges[index];
        return {0, i == 0 ? e.v1 : e.v0, {0}};
    }
    if (kind == 2) {
        const auto& t = X.triangles[index];
        const EdgeRef& r = i == 0 ? t.d0 : (i == 1 ? t.d1 : t.d2);
        if (r.degenerate) return {0, r.index, {0, 0}};
        return {1, r.index, {0, 1}};
    }
    throw std::logic_error("stored_face: vertices have no faces");
}

inline SimplexValue compose_word(const SimplicialSetFin& X, const SimplexValue& base,
                                 const std::vector<int>& comp);

// elementary face d_i on a simplex value
inline SimplexValue elementary_face(const SimplicialSetFin& X, const SimplexValue& s, int i) {
    std::vector<int> w;
    for (int j = 0; j <= s.dim(); ++j)
        if (j != i) w.push_back(s.word[j]);
    return compose_word(X, {s.kind, s.index, {}}, w);  // base word is identity on [kind]
}

// normalize (base, comp) where comp: [n] -> [kind] is monotone but possibly
// neither surjective nor accompanied by an identity base word
inline SimplexValue compose_word(const SimplicialSetFin& X, const SimplexValue& base,
                                 const std::vector<int>& comp) {
    // image values, in order
    std::vector<int> values;
    for (int v : comp)
        if (values.empty() || values.back() != v) values.push_back(v);
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] < values[i - 1]) throw std::logic_error("compose_word: not monotone");
    if (static_cast<int>(values.size()) == base.kind + 1) {
        // surjective: done
        return {base.kind, base.index, comp};
    }
    // peel one missing value and recurse through the stored face
    int missing = -1;
    {
        std::size_t k = 0;
        for (int v = 0; v <= base.kind; ++v) {
            if (k < values.size() && values[k] == v) ++k;
            else { missing = v; break; }
        }
    }
    SimplexValue f = stored_face(X, base.kind, base.index, missing);
    // comp = delta_missing . u with u: [n] -> [kind-1]
    std::vector<int> u;
    for (int v : comp) u.push_back(v < missing ? v : v - 1);
    // now compose u with the face's own word
    std::vector<int> w;
    for (int v : u) w.push_back(f.word[v]);
    return compose_word(X, {f.kind, f.index, {}}, w);
}

// all monotone surjections [n] ->> [k], as value words
inline void monotone_surjections(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> w(n + 1);
    std::function<void(int, int)> rec = [&](int pos, int val) {
        if (pos == n + 1) {
            if (val == k) out.push_back(w);
            return;
        }
        // remaining positions must still be able to reach k
        w[pos] = val;
        if (val + (n - pos) >= k) rec(pos + 1, val);
        if (val < k) {
            w[pos] = val + 1;
            rec(pos + 1, val + 1);
        }
    };
    w[0] = 0;
    rec(1, 0);
}

}  // namespace detail

// ---- file format -----------------------------------------------------------
// {"vertices":["p","q"],
//  "edges":[{"id":"f","src":"p","dst":"q"}],
//  "triangles":[{"id":"T","d0":"g","d1":"h","d2":"f"}]}
// a triangle face may be {"deg":"p"} for the degenerate edge at p

inline SimplicialSetFin simplicial_from_json(const Json& j) {
    SimplicialSetFin X;
    for (const auto& v : j.at("vertices")) X.vertices.push_back(v.get<std::string>());
    if (j.contains("edges"))
        for (const auto& e : j.at("edges"))
            X.edges.push_back({e.at("id").get<std::string>(),
                               X.vertex_index(e.at("src").get<std::string>()),
                               X.vertex_index(e.at("dst").get<std::string>())});
    auto ref = [&](const Json& r) {
        if (r.is_object()) return EdgeRef{true, X.vertex_index(r.at("deg").get<std::string>())};
        return EdgeRef{false, X.edge_index(r.get<std::string>())};
    };
    if (j.contains("triangles"))
        for (const auto& t : j.at("triangles"))
            X.triangles.push_back({t.at("id").get<std::string>(), ref(t.at("d0")),
                                   ref(t.at("d1")), ref(t.at("d2"))});
    auto rep = X.check();
    if (!rep.ok) throw std::invalid_argument("simplicial file: " + rep.violation);
    return X;
}

}  // namespace dendro

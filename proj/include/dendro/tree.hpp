#pragma once

// Finite rooted non-planar trees: the shapes everything else is indexed by.
// Edges are named; vertices carry an output edge and an ordered list of input
// edges. The order is presentational only — all semantic operations treat
// inputs as multisets.

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dendro {

using EdgeId = int;

struct TreeVertex {
    EdgeId output = -1;
    std::vector<EdgeId> inputs;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("parse error at " + std::to_string(pos) + ": " + what), pos(pos) {}
    std::size_t pos;
};

class Tree {
public:
    Tree() = default;

    static Tree make(std::vector<std::string> edge_names, std::vector<TreeVertex> vertices) {
        auto d = std::make_shared<Data>();
        d->edge_names = std::move(edge_names);
        d->vertices = std::move(vertices);
        d->finish();
        Tree t;
        t.d_ = std::move(d);
        return t;
    }

    bool empty() const { return !d_; }
    int edge_count() const { return static_cast<int>(d_->edge_names.size()); }
    int vertex_count() const { return static_cast<int>(d_->vertices.size()); }
    EdgeId root() const { return d_->root; }
    const std::string& edge_name(EdgeId e) const { return d_->edge_names.at(e); }
    const std::vector<std::string>& edge_names() const { return d_->edge_names; }
    const TreeVertex& vertex(int v) const { return d_->vertices.at(v); }
    const std::vector<TreeVertex>& vertices() const { return d_->vertices; }

    // index of the vertex whose output is e, or -1 (then e is a leaf)
    int vertex_above(EdgeId e) const { return d_->above.at(e); }
    // index of the vertex having e among its inputs, or -1 (then e is the root)
    int vertex_below(EdgeId e) const { return d_->below.at(e); }

    std::optional<EdgeId> edge_index(std::string_view name) const {
        for (EdgeId e = 0; e < edge_count(); ++e)
            if (d_->edge_names[e] == name) return e;
        return std::nullopt;
    }

    bool is_leaf(EdgeId e) const { return d_->above[e] < 0; }
    bool is_inner(EdgeId e) const { return d_->above[e] >= 0 && d_->below[e] >= 0; }

    std::vector<EdgeId> leaves() const {
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < edge_count(); ++e)
            if (is_leaf(e)) out.push_back(e);
        return out;
    }
    std::vector<EdgeId> inner_edges() const {
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < edge_count(); ++e)
            if (is_inner(e)) out.push_back(e);
        return out;
    }

    int max_vertex_arity() const {
        int m = 0;
        for (const auto& v : d_->vertices) m = std::max(m, static_cast<int>(v.inputs.size()));
        return m;
    }

    // Grammar rendering; doubles as the identity key (two trees are "the same
    // tree" in the sense used by higher modules iff their texts coincide).
    const std::string& text() const { return d_->text; }
    // Name-free rendering with input order preserved; safe memo key for
    // computations that only read the structure.
    const std::string& structure_key() const { return d_->structure; }
    // Isomorphism-invariant code (recursive sorted-multiset encoding).
    const std::string& canonical_code() const { return d_->canonical; }

    bool same(const Tree& o) const { return text() == o.text(); }

private:
    struct Data {
        std::vector<std::string> edge_names;
        std::vector<TreeVertex> vertices;
        std::vector<int> above, below;
        EdgeId root = -1;
        std::string text, structure, canonical;

        void finish() {
            const int n = static_cast<int>(edge_names.size());
            above.assign(n, -1);
            below.assign(n, -1);
            for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
                EdgeId o = vertices[v].output;
                if (o >= 0 && o < n && above[o] < 0) above[o] = v;
                for (EdgeId i : vertices[v].inputs)
                    if (i >= 0 && i < n && below[i] < 0) below[i] = v;
            }
            for (EdgeId e = 0; e < n; ++e)
                if (below[e] < 0) { root = e; break; }
            if (root >= 0) {
                std::vector<char> seen(n, 0);
                text = render(root, seen, /*names=*/true, /*sorted=*/false);
                std::fill(seen.begin(), seen.end(), 0);
                structure = render(root, seen, false, false);
                std::fill(seen.begin(), seen.end(), 0);
                canonical = render(root, seen, false, true);
            }
        }

        std::string render(EdgeId e, std::vector<char>& seen, bool names, bool sorted) const {
            if (seen[e]) return "<cycle>";
            seen[e] = 1;
            // three modes: grammar text (names), index-aware structure key
            // (edge and vertex numbers, order kept), canonical code
            // (anonymous, sorted)
            std::string s = names ? edge_names[e] : (sorted ? "" : std::to_string(e));
            int va = above[e];
            if (!names && !sorted && va >= 0) s += "v" + std::to_string(va);
            if (va < 0) {
                if (!names && sorted) s = "L";
            } else {
                std::vector<std::string> kids;
                for (EdgeId i : vertices[va].inputs) kids.push_back(render(i, seen, names, sorted));
                if (sorted) std::sort(kids.begin(), kids.end());
                s += sorted ? "(" : "[";
                for (std::size_t k = 0; k < kids.size(); ++k) {
                    if (k && !sorted) s += ",";
                    s += kids[k];
                }
                s += sorted ? ")" : "]";
            }
            seen[e] = 0;
            return s;
        }
    };

    std::shared_ptr<const Data> d_;
};

struct ValidationReport {
    bool ok = true;
    std::string violation;  // names the first violated invariant
};

inline ValidationReport validate(const Tree& t) {
    auto fail = [](std::string m) { return ValidationReport{false, std::move(m)}; };
    if (t.empty() || t.edge_count() == 0) return fail("tree has no edges");
    const int n = t.edge_count();
    {
        std::set<std::string> names;
        for (EdgeId e = 0; e < n; ++e)
            if (!names.insert(t.edge_name(e)).second)
                return fail("duplicate edge name: " + t.edge_name(e));
    }
    std::vector<int> out_count(n, 0), in_count(n, 0);
    for (int v = 0; v < t.vertex_count(); ++v) {
        const auto& vx = t.vertex(v);
        if (vx.output < 0 || vx.output >= n) return fail("vertex output is not an edge");
        out_count[vx.output]++;
        for (EdgeId i : vx.inputs) {
            if (i < 0 || i >= n) return fail("vertex input is not an edge");
            in_count[i]++;
        }
    }
    for (EdgeId e = 0; e < n; ++e) {
        if (out_count[e] > 1) return fail("edge " + t.edge_name(e) + " is the output of two vertices");
        if (in_count[e] > 1) return fail("edge " + t.edge_name(e) + " is an input of two vertices");
    }
    int roots = 0;
    for (EdgeId e = 0; e < n; ++e)
        if (in_count[e] == 0) roots++;
    if (roots != 1) return fail(roots == 0 ? "no root (every edge is some vertex input)"
                                           : "multiple roots / disconnected");
    // walk upward from the root; everything must be reached exactly once
    std::vector<char> edge_seen(n, 0), vertex_seen(t.vertex_count(), 0);
    std::vector<EdgeId> stack{t.root()};
    while (!stack.empty()) {
        EdgeId e = stack.back();
        stack.pop_back();
        if (edge_seen[e]) return fail("cycle through edge " + t.edge_name(e));
        edge_seen[e] = 1;
        int va = t.vertex_above(e);
        if (va >= 0) {
            if (vertex_seen[va]) return fail("cycle through a vertex");
            vertex_seen[va] = 1;
            for (EdgeId i : t.vertex(va).inputs) stack.push_back(i);
        }
    }
    for (EdgeId e = 0; e < n; ++e)
        if (!edge_seen[e]) return fail("edge " + t.edge_name(e) + " not connected to the root");
    for (int v = 0; v < t.vertex_count(); ++v)
        if (!vertex_seen[v]) return fail("vertex not connected to the root");
    return {};
}

// ---- constructions ------------------------------------------------------

inline Tree eta() { return Tree::make({"e"}, {}); }

// chain of n unary vertices; edge x0 is the top leaf, xn the root
inline Tree linear(int n) {
    if (n < 0) throw std::invalid_argument("linear: n < 0");
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
    std::vector<TreeVertex> vs;
    for (int i = 1; i <= n; ++i) vs.push_back({i, {i - 1}});
    return Tree::make(std::move(names), std::move(vs));
}

// one vertex with n inputs a1..an and output b
inline Tree corolla(int n) {
    if (n < 0) throw std::invalid_argument("corolla: n < 0");
    std::vector<std::string> names;
    TreeVertex v;
    for (int i = 0; i < n; ++i) {
        names.push_back("a" + std::to_string(i + 1));
        v.inputs.push_back(i);
    }
    names.push_back("b");
    v.output = n;
    return Tree::make(std::move(names), {v});
}

// n-corolla grafted on top of a k-corolla: leaves a1..an, root c, lower
// vertex inputs b1..b(k-1) plus the inner edge bk (the upper vertex output).
inline Tree corolla_over_corolla(int n, int k) {
    if (n < 0 || k < 1) throw std::invalid_argument("corolla_over_corolla: need n >= 0, k >= 1");
    std::vector<std::string> names;
    TreeVertex top, bottom;
    for (int i = 0; i < n; ++i) {
        names.push_back("a" + std::to_string(i + 1));
        top.inputs.push_back(i);
    }
    for (int j = 0; j < k - 1; ++j) {
        names.push_back("b" + std::to_string(j + 1));
        bottom.inputs.push_back(n + j);
    }
    names.push_back("bk");
    top.output = n + k - 1;
    bottom.inputs.push_back(n + k - 1);
    names.push_back("c");
    bottom.output = n + k;
    return Tree::make(std::move(names), {top, bottom});
}

// identify upper's root with the given leaf of lower; lower's names win,
// clashing upper names get primes appended
inline Tree graft(const Tree& lower, EdgeId leaf, const Tree& upper) {
    if (leaf < 0 || leaf >= lower.edge_count() || !lower.is_leaf(leaf))
        throw std::invalid_argument("graft: chosen edge is not a leaf of the lower tree");
    std::vector<std::string> names = lower.edge_names();
    std::set<std::string> used(names.begin(), names.end());
    std::vector<EdgeId> remap(upper.edge_count());
    for (EdgeId e = 0; e < upper.edge_count(); ++e) {
        if (e == upper.root()) {
            remap[e] = leaf;
            continue;
        }
        std::string nm = upper.edge_name(e);
        while (used.count(nm)) nm += "'";
        used.insert(nm);
        remap[e] = static_cast<EdgeId>(names.size());
        names.push_back(nm);
    }
    std::vector<TreeVertex> vs = lower.vertices();
    for (const auto& uv : upper.vertices()) {
        TreeVertex w;
        w.output = remap[uv.output];
        for (EdgeId i : uv.inputs) w.inputs.push_back(remap[i]);
        vs.push_back(w);
    }
    return Tree::make(std::move(names), std::move(vs));
}

// ---- subtrees -----------------------------------------------------------

struct Subtree {
    EdgeId root = -1;
    std::vector<EdgeId> edges;     // sorted
    std::vector<int> vertices;     // sorted
    std::vector<EdgeId> leaves;    // sorted
};

// The unique subtree of t with the given root and exactly the given leaf
// set, if it exists. L = {root} yields the empty subtree (an identity
// operation); L = {} requires every branch above root to end in nullary
// vertices.
inline std::optional<Subtree> spanned_subtree(const Tree& t, EdgeId root,
                                              const std::vector<EdgeId>& leaf_set) {
    std::set<EdgeId> want(leaf_set.begin(), leaf_set.end());
    for (EdgeId e : want)
        if (e < 0 || e >= t.edge_count()) return std::nullopt;
    Subtree s;
    s.root = root;
    std::set<EdgeId> reached;
    std::vector<EdgeId> stack{root};
    std::set<EdgeId> edges;
    std::set<int> verts;
    while (!stack.empty()) {
        EdgeId e = stack.back();
        stack.pop_back();
        edges.insert(e);
        if (want.count(e)) {
            reached.insert(e);
            continue;
        }
        int va = t.vertex_above(e);
        if (va < 0) return std::nullopt;  // hit a leaf of t that we may not cut at
        verts.insert(va);
        for (EdgeId i : t.vertex(va).inputs) stack.push_back(i);
    }
    if (reached.size() != want.size()) return std::nullopt;
    s.edges.assign(edges.begin(), edges.end());
    s.vertices.assign(verts.begin(), verts.end());
    s.leaves.assign(want.begin(), want.end());
    return s;
}

// All leaf sets of subtrees rooted at the given edge (each sorted;
// includes {root} itself, the empty identity cut).
inline const std::vector<std::vector<EdgeId>>& subtree_leafsets(
    const Tree& t, EdgeId root, std::map<EdgeId, std::vector<std::vector<EdgeId>>>& memo) {
    auto it = memo.find(root);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<EdgeId>> out;
    out.push_back({root});
    int va = t.vertex_above(root);
    if (va >= 0) {
        const auto& inputs = t.vertex(va).inputs;
        std::vector<std::vector<EdgeId>> acc{{}};  // partial unions
        for (EdgeId i : inputs) {
            const auto& child = subtree_leafsets(t, i, memo);
            std::vector<std::vector<EdgeId>> next;
            for (const auto& a : acc)
                for (const auto& c : child) {
                    std::vector<EdgeId> u = a;
                    u.insert(u.end(), c.begin(), c.end());
                    next.push_back(std::move(u));
                }
            acc = std::move(next);
        }
        for (auto& u : acc) {
            std::sort(u.begin(), u.end());
            out.push_back(std::move(u));
        }
    }
    return memo.emplace(root, std::move(out)).first->second;
}

inline std::vector<std::vector<EdgeId>> subtree_leafsets(const Tree& t, EdgeId root) {
    std::map<EdgeId, std::vector<std::vector<EdgeId>>> memo;
    return subtree_leafsets(t, root, memo);
}

// Largest size of any subtree leaf set = the largest n with a (nondegenerate)
// n-ary operation anywhere in the tree.
inline int arity_ceiling(const Tree& t) {
    std::map<EdgeId, std::vector<std::vector<EdgeId>>> memo;
    std::size_t m = 0;
    for (EdgeId e = 0; e < t.edge_count(); ++e)
        for (const auto& ls : subtree_leafsets(t, e, memo)) m = std::max(m, ls.size());
    return static_cast<int>(m);
}

// ---- isomorphism and enumeration ----------------------------------------

inline bool are_isomorphic(const Tree& s, const Tree& t) {
    return s.canonical_code() == t.canonical_code();
}

namespace detail {

inline Tree assemble(const std::vector<Tree>& children, int& counter) {
    // root edge + one vertex whose inputs carry the children
    std::vector<std::string> names{"e" + std::to_string(counter++)};
    std::vector<TreeVertex> vs;
    TreeVertex rootv;
    rootv.output = 0;
    std::vector<int> offsets;
    for (const auto& c : children) {
        int off = static_cast<int>(names.size());
        offsets.push_back(off);
        for (EdgeId e = 0; e < c.edge_count(); ++e) names.push_back("e" + std::to_string(counter++));
        rootv.inputs.push_back(off + c.root());
        for (const auto& v : c.vertices()) {
            TreeVertex w;
            w.output = off + v.output;
            for (EdgeId i : v.inputs) w.inputs.push_back(off + i);
            vs.push_back(w);
        }
    }
    vs.push_back(rootv);
    return Tree::make(std::move(names), std::move(vs));
}

inline void choose_children(const std::vector<std::vector<Tree>>& by_count, int budget,
                            int max_arity, int min_pool_idx, std::vector<Tree>& acc,
                            std::vector<Tree>& out, int& counter) {
    // acc holds a multiset of subtrees, non-decreasing in pool order
    if (budget == 0) out.push_back(assemble(acc, counter));
    if (static_cast<int>(acc.size()) >= max_arity) return;
    // flatten pool index: pair (vertex count, index within)
    int idx = 0;
    for (int vc = 0; vc < static_cast<int>(by_count.size()); ++vc) {
        for (const auto& cand : by_count[vc]) {
            if (idx >= min_pool_idx && vc <= budget) {
                acc.push_back(cand);
                choose_children(by_count, budget - vc, max_arity, idx, acc, out, counter);
                acc.pop_back();
            }
            ++idx;
        }
    }
}

}  // namespace detail

// One representative per isomorphism class of trees with at most
// max_vertices vertices and every vertex arity at most max_arity,
// in canonical-code order.
inline std::vector<Tree> enumerate_trees(int max_vertices, int max_arity) {
    if (max_vertices < 0 || max_arity < 0) throw std::invalid_argument("enumerate_trees: bounds must be >= 0");
    std::vector<std::vector<Tree>> by_count;  // [v] = trees with exactly v vertices
    by_count.push_back({eta()});
    int counter = 0;
    for (int v = 1; v <= max_vertices; ++v) {
        std::vector<Tree> level;
        // root vertex consumes one vertex; children consume the rest
        std::vector<Tree> acc;
        detail::choose_children(by_count, v - 1, max_arity, 0, acc, level, counter);
        // keep only trees whose ROOT vertex arity is within bounds (children
        // arities are within bounds by construction); assemble() may be
        // reached with any accumulated arity <= max_arity.
        by_count.push_back(std::move(level));
    }
    std::vector<Tree> all;
    for (auto& lv : by_count)
        for (auto& t : lv) all.push_back(std::move(t));
    std::sort(all.begin(), all.end(),
              [](const Tree& a, const Tree& b) { return a.canonical_code() < b.canonical_code(); });
    return all;
}

// ---- grammar ------------------------------------------------------------
//   tree     := edge
//   edge     := NAME | NAME '[' edgelist ']'
//   edgelist := eps | edge (',' edge)*
//   NAME     := [A-Za-z0-9_]+, unique within one expression

namespace detail {

struct TreeParser {
    std::string_view s;
    std::size_t pos = 0;
    std::vector<std::string> names;
    std::vector<TreeVertex> vertices;

    static bool name_char(char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n')) ++pos;
    }
    EdgeId parse_edge() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && name_char(s[pos])) ++pos;
        if (pos == start) throw ParseError(pos, "expected an edge name");
        std::string nm(s.substr(start, pos - start));
        for (const auto& n : names)
            if (n == nm) throw ParseError(start, "duplicate edge name '" + nm + "'");
        EdgeId e = static_cast<EdgeId>(names.size());
        names.push_back(nm);
        skip_ws();
        if (pos < s.size() && s[pos] == '[') {
            ++pos;
            TreeVertex v;
            v.output = e;
            skip_ws();
            if (pos < s.size() && s[pos] == ']') {
                ++pos;  // nullary vertex
            } else {
                while (true) {
                    v.inputs.push_back(parse_edge());
                    skip_ws();
                    if (pos < s.size() && s[pos] == ',') { ++pos; continue; }
                    if (pos < s.size() && s[pos] == ']') { ++pos; break; }
                    throw ParseError(pos, "expected ',' or ']'");
                }
            }
            vertices.push_back(std::move(v));
        }
        return e;
    }
};

}  // namespace detail

inline Tree parse_tree(std::string_view text) {
    detail::TreeParser p{text};
    p.parse_edge();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError(p.pos, "trailing input after tree");
    return Tree::make(std::move(p.names), std::move(p.vertices));
}

}  // namespace dendro

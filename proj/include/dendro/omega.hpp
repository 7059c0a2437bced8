#pragma once

// Morphisms of the tree category as validated edge maps. A map S -> T is
// stored as its action on edges; it is valid when every vertex of S lands on
// an operation of the free operad on T, i.e. the images of its inputs are
// pairwise distinct and span a subtree below the image of its output.
// The unary collapse (input and output mapping to the same edge) is the
// identity operation and is exactly the L = {root} case of spanned_subtree.

#include <functional>
#include <mutex>
#include <sstream>

#include "tree.hpp"

namespace dendro {

class OmegaMap {
public:
    OmegaMap() = default;
    OmegaMap(Tree source, Tree target, std::vector<EdgeId> image)
        : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
        if (static_cast<int>(image_.size()) != source_.edge_count())
            throw std::invalid_argument("OmegaMap: image size != source edge count");
    }

    const Tree& source() const { return source_; }
    const Tree& target() const { return target_; }
    EdgeId operator()(EdgeId e) const { return image_.at(e); }
    const std::vector<EdgeId>& image() const { return image_; }

    bool operator==(const OmegaMap& o) const {
        return source_.text() == o.source_.text() && target_.text() == o.target_.text() &&
               image_ == o.image_;
    }

    // `{a->a, b->b} : S => T`, keys sorted by source edge name
    std::string show() const {
        std::vector<std::pair<std::string, std::string>> rows;
        for (EdgeId e = 0; e < source_.edge_count(); ++e)
            rows.push_back({source_.edge_name(e), target_.edge_name(image_[e])});
        std::sort(rows.begin(), rows.end());
        std::ostringstream os;
        os << "{";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) os << ", ";
            os << rows[i].first << "->" << rows[i].second;
        }
        os << "} : " << source_.text() << " => " << target_.text();
        return os.str();
    }

private:
    Tree source_, target_;
    std::vector<EdgeId> image_;
};

inline ValidationReport validate_map(const OmegaMap& m) {
    auto fail = [](std::string s) { return ValidationReport{false, std::move(s)}; };
    const Tree& s = m.source();
    const Tree& t = m.target();
    for (EdgeId e = 0; e < s.edge_count(); ++e)
        if (m(e) < 0 || m(e) >= t.edge_count()) return fail("image out of range");
    for (int v = 0; v < s.vertex_count(); ++v) {
        const auto& vx = s.vertex(v);
        std::vector<EdgeId> imgs;
        for (EdgeId i : vx.inputs) imgs.push_back(m(i));
        std::set<EdgeId> img_set(imgs.begin(), imgs.end());
        if (img_set.size() != imgs.size())
            return fail("vertex over " + s.edge_name(vx.output) + ": input images not distinct");
        if (!spanned_subtree(t, m(vx.output), imgs))
            return fail("vertex over " + s.edge_name(vx.output) +
                        ": images do not span an operation");
    }
    return {};
}

inline OmegaMap identity_map(const Tree& t) {
    std::vector<EdgeId> img(t.edge_count());
    for (EdgeId e = 0; e < t.edge_count(); ++e) img[e] = e;
    return {t, t, std::move(img)};
}

inline OmegaMap compose(const OmegaMap& g, const OmegaMap& f) {
    if (!f.target().same(g.source()))
        throw std::invalid_argument("compose: target of first map != source of second");
    std::vector<EdgeId> img(f.source().edge_count());
    for (EdgeId e = 0; e < f.source().edge_count(); ++e) img[e] = g(f(e));
    return {f.source(), g.target(), std::move(img)};
}

// ---- faces ---------------------------------------------------------------

struct Face {
    std::string label;  // inner edge name, "v:" + output edge name, or corolla colour
    OmegaMap map;       // source = face tree, target = t, name-preserving inclusion
    bool inner = false;
};

namespace detail {

inline OmegaMap name_inclusion(const Tree& s, const Tree& t) {
    std::vector<EdgeId> img;
    img.reserve(s.edge_count());
    for (EdgeId e = 0; e < s.edge_count(); ++e) {
        auto i = t.edge_index(s.edge_name(e));
        if (!i) throw std::logic_error("name_inclusion: missing edge " + s.edge_name(e));
        img.push_back(*i);
    }
    return {s, t, std::move(img)};
}

}  // namespace detail

// Contract the inner edge e: the two adjacent vertices merge, everything
// else keeps its name.
inline OmegaMap inner_face(const Tree& t, EdgeId e) {
    if (e < 0 || e >= t.edge_count() || !t.is_inner(e))
        throw std::invalid_argument("inner_face: edge is not inner");
    int va = t.vertex_above(e), vb = t.vertex_below(e);
    std::vector<std::string> names;
    std::vector<EdgeId> old_of_new;
    std::vector<EdgeId> new_of_old(t.edge_count(), -1);
    for (EdgeId x = 0; x < t.edge_count(); ++x) {
        if (x == e) continue;
        new_of_old[x] = static_cast<EdgeId>(names.size());
        names.push_back(t.edge_name(x));
        old_of_new.push_back(x);
    }
    std::vector<TreeVertex> vs;
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (v == va || v == vb) continue;
        TreeVertex w;
        w.output = new_of_old[t.vertex(v).output];
        for (EdgeId i : t.vertex(v).inputs) w.inputs.push_back(new_of_old[i]);
        vs.push_back(w);
    }
    TreeVertex merged;
    merged.output = new_of_old[t.vertex(vb).output];
    for (EdgeId i : t.vertex(vb).inputs) {
        if (i == e) {
            for (EdgeId j : t.vertex(va).inputs) merged.inputs.push_back(new_of_old[j]);
        } else {
            merged.inputs.push_back(new_of_old[i]);
        }
    }
    vs.push_back(merged);
    Tree src = Tree::make(std::move(names), std::move(vs));
    std::vector<EdgeId> img;
    for (EdgeId x : old_of_new) img.push_back(x);
    return {src, t, std::move(img)};
}

// Outer faces. For a corolla: the colour inclusions (labelled by colour).
// Otherwise one face per choppable vertex: top vertices (all inputs are
// leaves) and the root vertex when all but exactly one of its inputs are
// leaves.
inline std::vector<Face> outer_faces(const Tree& t) {
    std::vector<Face> out;
    if (t.vertex_count() == 0) return out;  // eta has no faces
    if (t.vertex_count() == 1) {
        for (EdgeId e = 0; e < t.edge_count(); ++e) {
            Tree src = Tree::make({t.edge_name(e)}, {});
            out.push_back({t.edge_name(e), OmegaMap(src, t, {e}), false});
        }
        return out;
    }
    for (int v = 0; v < t.vertex_count(); ++v) {
        const auto& vx = t.vertex(v);
        bool is_root_vertex = (vx.output == t.root());
        std::vector<EdgeId> nonleaf_inputs;
        for (EdgeId i : vx.inputs)
            if (!t.is_leaf(i)) nonleaf_inputs.push_back(i);
        std::set<EdgeId> removed;
        if (nonleaf_inputs.empty()) {
            // top vertex: chop it and its input leaves
            removed.insert(vx.inputs.begin(), vx.inputs.end());
        } else if (is_root_vertex && nonleaf_inputs.size() == 1) {
            // root vertex: chop it, the root edge and its leaf inputs
            removed.insert(vx.output);
            for (EdgeId i : vx.inputs)
                if (i != nonleaf_inputs[0]) removed.insert(i);
        } else {
            continue;
        }
        std::vector<std::string> names;
        for (EdgeId x = 0; x < t.edge_count(); ++x)
            if (!removed.count(x)) names.push_back(t.edge_name(x));
        std::vector<TreeVertex> vs;
        for (int w = 0; w < t.vertex_count(); ++w) {
            if (w == v) continue;
            TreeVertex nv;
            const auto& wx = t.vertex(w);
            auto idx_of = [&](EdgeId x) {
                int k = 0;
                for (EdgeId y = 0; y < t.edge_count(); ++y) {
                    if (removed.count(y)) continue;
                    if (y == x) return k;
                    ++k;
                }
                throw std::logic_error("outer_faces: edge lookup");
            };
            nv.output = idx_of(wx.output);
            for (EdgeId i : wx.inputs) nv.inputs.push_back(idx_of(i));
            vs.push_back(nv);
        }
        Tree src = Tree::make(std::move(names), std::move(vs));
        out.push_back({"v:" + t.edge_name(vx.output), detail::name_inclusion(src, t), false});
    }
    return out;
}

inline std::vector<Face> faces(const Tree& t) {
    std::vector<Face> out;
    for (EdgeId e : t.inner_edges())
        out.push_back({t.edge_name(e), inner_face(t, e), true});
    for (auto& f : outer_faces(t)) out.push_back(std::move(f));
    return out;
}

inline std::vector<std::string> horn_labels(const Tree& t) {
    std::vector<std::string> out;
    for (const auto& f : faces(t)) out.push_back(f.label);
    return out;
}

// ---- hom sets ------------------------------------------------------------

namespace detail {

struct HomCache {
    std::mutex mu;
    std::map<std::pair<std::string, std::string>,
             std::shared_ptr<const std::vector<std::vector<EdgeId>>>> map;
    std::size_t entries = 0;
    // oversized hom sets are recomputed rather than held forever
    static constexpr std::size_t kMaxEntries = 2'000'000;
    static HomCache& instance() {
        static HomCache c;
        return c;
    }
};

// Backtracking: fix the image of the source root, then walk up through the
// source vertices; each vertex picks a subtree leaf set of the right size in
// the target and one of the ways to distribute its inputs over it.
inline void hom_rec(const Tree& s, const Tree& t,
                    std::map<EdgeId, std::vector<std::vector<EdgeId>>>& leafset_memo,
                    std::vector<int>& vertex_order, std::size_t k, std::vector<EdgeId>& img,
                    std::vector<std::vector<EdgeId>>& out) {
    if (k == vertex_order.size()) {
        out.push_back(img);
        return;
    }
    const auto& vx = s.vertex(vertex_order[k]);
    const int n = static_cast<int>(vx.inputs.size());
    EdgeId target_root = img[vx.output];
    for (const auto& ls : subtree_leafsets(t, target_root, leafset_memo)) {
        if (static_cast<int>(ls.size()) != n) continue;
        std::vector<EdgeId> perm = ls;
        std::sort(perm.begin(), perm.end());
        do {
            for (int i = 0; i < n; ++i) img[vx.inputs[i]] = perm[i];
            hom_rec(s, t, leafset_memo, vertex_order, k + 1, img, out);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

inline std::vector<int> vertices_root_first(const Tree& s) {
    // order vertices so that each vertex appears after the vertex below its
    // output edge (the root vertex first)
    std::vector<int> order;
    std::vector<EdgeId> stack{s.root()};
    while (!stack.empty()) {
        EdgeId e = stack.back();
        stack.pop_back();
        int va = s.vertex_above(e);
        if (va < 0) continue;
        order.push_back(va);
        for (EdgeId i : s.vertex(va).inputs) stack.push_back(i);
    }
    return order;
}

}  // namespace detail

// The complete hom set, one edge-image vector per morphism, de-duplicated by
// construction and deterministic (target edge index order, then permutation
// order per vertex).
inline std::shared_ptr<const std::vector<std::vector<EdgeId>>> hom_images(const Tree& s,
                                                                          const Tree& t) {
    auto& cache = detail::HomCache::instance();
    auto key = std::make_pair(s.structure_key(), t.text());
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.map.find(key);
        if (it != cache.map.end()) return it->second;
    }
    auto out = std::make_shared<std::vector<std::vector<EdgeId>>>();
    std::map<EdgeId, std::vector<std::vector<EdgeId>>> leafset_memo;
    auto order = detail::vertices_root_first(s);
    std::vector<EdgeId> img(s.edge_count(), -1);
    for (EdgeId r = 0; r < t.edge_count(); ++r) {
        img[s.root()] = r;
        detail::hom_rec(s, t, leafset_memo, order, 0, img, *out);
    }
    std::lock_guard<std::mutex> lock(cache.mu);
    if (cache.entries + out->size() > detail::HomCache::kMaxEntries) return out;
    cache.entries += out->size();
    return cache.map.emplace(std::move(key), std::move(out)).first->second;
}

inline std::vector<OmegaMap> hom(const Tree& s, const Tree& t) {
    std::vector<OmegaMap> out;
    for (const auto& img : *hom_images(s, t)) out.emplace_back(s, t, img);
    return out;
}

// the eta -> t map hitting one edge; the source edge carries the same name
inline OmegaMap edge_inclusion(const Tree& t, EdgeId e) {
    Tree src = Tree::make({t.edge_name(e)}, {});
    return {src, t, {e}};
}

// ---- face overlaps ---------------------------------------------------------

// Every monomorphism into t is a composite of face maps, so a BFS over
// iterated faces starting from a chosen face family reaches every element
// lying on two of them. A map into a union of face images is determined by
// compatible maps out of the faces; compatibility only needs to be checked
// on these shared monic elements (everything else factors through them).
struct FaceOverlaps {
    std::vector<Face> kept;
    struct Constraint {
        int f1, f2;        // indices into kept
        OmegaMap h1, h2;   // kept[f1].map . h1 == kept[f2].map . h2, both monic
    };
    std::vector<Constraint> constraints;
};

inline FaceOverlaps face_overlaps(const Tree& t, std::vector<Face> kept_faces) {
    FaceOverlaps out;
    out.kept = std::move(kept_faces);
    struct Node {
        OmegaMap into_t;
        std::map<int, OmegaMap> factor;  // kept-face index -> factorization
    };
    auto key_of = [](const OmegaMap& g) {
        std::string k = g.source().text() + "|";
        for (EdgeId e : g.image()) k += std::to_string(e) + ",";
        return k;
    };
    std::map<std::string, Node> nodes;
    std::vector<std::string> queue;
    for (int l = 0; l < static_cast<int>(out.kept.size()); ++l) {
        const auto& f = out.kept[l];
        auto key = key_of(f.map);
        auto [it, fresh] = nodes.try_emplace(key, Node{f.map, {}});
        it->second.factor.emplace(l, identity_map(f.map.source()));
        if (fresh) queue.push_back(key);
    }
    while (!queue.empty()) {
        std::string key = queue.back();
        queue.pop_back();
        Node node = nodes.at(key);  // copy: map may rehash below
        for (const auto& phi : faces(node.into_t.source())) {
            OmegaMap g = compose(node.into_t, phi.map);
            auto gk = key_of(g);
            auto [it, fresh] = nodes.try_emplace(gk, Node{g, {}});
            bool grew = false;
            for (const auto& [l, h] : node.factor)
                grew |= it->second.factor.emplace(l, compose(h, phi.map)).second;
            if (fresh || grew) queue.push_back(gk);
        }
    }
    for (const auto& [key, node] : nodes) {
        if (node.factor.size() < 2) continue;
        auto first = node.factor.begin();
        for (auto it = std::next(first); it != node.factor.end(); ++it)
            out.constraints.push_back({first->first, it->first, first->second, it->second});
    }
    return out;
}

}  // namespace dendro

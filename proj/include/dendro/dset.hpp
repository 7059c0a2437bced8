#pragma once

// Finitely enumerable dendroidal sets: an abstract presheaf interface plus
// representables, boundaries, horns, Segal cores, coproducts, extension by
// zero of simplicial sets, nerves of permutative groupoids, cell
// attachments, and quotients.
//
// Dendrex tokens are canonical strings carrying their construction
// provenance; equality of tokens is equality of dendrices within one set.
// Tokens never mention the edge names of the probing shape, only its edge
// and vertex indices, so enumeration may be memoized by structure key.

#include "omega.hpp"
#include "simplicial.hpp"
#include "smc.hpp"

#include <functional>
#include <memory>
#include <mutex>

namespace dendro {

struct Dendrex {
    std::string v;
    bool operator==(const Dendrex& o) const { return v == o.v; }
    bool operator<(const Dendrex& o) const { return v < o.v; }
};

class DendroidalSet;
using DSet = std::shared_ptr<const DendroidalSet>;

class DendroidalSet {
public:
    virtual ~DendroidalSet() = default;

    // contravariant action: d lives at m.target(), the result at m.source()
    virtual Dendrex act(const OmegaMap& m, const Dendrex& d) const = 0;
    // a corolla-arity cutoff sufficient for the K0 presentation
    virtual int k0_arity_bound() const = 0;
    virtual std::string describe() const = 0;

    const std::vector<Dendrex>& dendrices(const Tree& shape) const {
        const std::string& key = shape.structure_key();
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        auto out = compute_dendrices(shape);
        std::sort(out.begin(), out.end());
        std::lock_guard<std::mutex> lock(mu_);
        return cache_.emplace(key, std::move(out)).first->second;
    }

    bool has_dendrex(const Tree& shape, const Dendrex& d) const {
        const auto& all = dendrices(shape);
        return std::binary_search(all.begin(), all.end(), d);
    }

protected:
    virtual std::vector<Dendrex> compute_dendrices(const Tree& shape) const = 0;

private:
    mutable std::mutex mu_;
    mutable std::map<std::string, std::vector<Dendrex>> cache_;
};

// a map of dendroidal sets, given shape-wise; naturality is a property that
// can be verified on a bounded window
struct DendMap {
    DSet source, target;
    std::function<Dendrex(const Tree&, const Dendrex&)> fn;
    Dendrex apply(const Tree& shape, const Dendrex& d) const { return fn(shape, d); }
};

// check fn(act(m,d)) == act(m, fn(d)) for all maps between window shapes
inline bool natural_on_window(const DendMap& f, const std::vector<Tree>& window) {
    for (const auto& s2 : window) {
        for (const auto& d : f.source->dendrices(s2)) {
            Dendrex fd = f.apply(s2, d);
            if (!f.target->has_dendrex(s2, fd)) return false;
            for (const auto& s1 : window)
                for (const auto& m : hom(s1, s2))
                    if (!(f.apply(s1, f.source->act(m, d)) == f.target->act(m, fd)))
                        return false;
        }
    }
    return true;
}

inline std::vector<Tree> shape_window(int max_edges, int max_vertices, int max_arity) {
    std::vector<Tree> out;
    for (auto& t : enumerate_trees(max_vertices, max_arity))
        if (t.edge_count() <= max_edges) out.push_back(std::move(t));
    return out;
}

// ---- representables and their subobjects -----------------------------------

namespace detail {

inline Dendrex map_token(const Tree& target, const std::vector<EdgeId>& img) {
    std::string s = "[";
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (i) s += ",";
        s += target.edge_name(img[i]);
    }
    return {s + "]"};
}

inline std::vector<EdgeId> token_images(const Tree& target, const Dendrex& d) {
    std::vector<EdgeId> out;
    if (d.v.size() < 2 || d.v.front() != '[' || d.v.back() != ']')
        throw std::invalid_argument("not a map token: " + d.v);
    std::string body = d.v.substr(1, d.v.size() - 2);
    if (body.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        auto comma = body.find(',', pos);
        std::string name = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
        auto idx = target.edge_index(name);
        if (!idx) throw std::invalid_argument("map token names unknown edge " + name);
        out.push_back(*idx);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace detail

class Representable : public DendroidalSet {
public:
    explicit Representable(Tree t) : t_(std::move(t)) {
        auto r = validate(t_);
        if (!r.ok) throw std::invalid_argument("representable: " + r.violation);
    }

    const Tree& tree() const { return t_; }

    Dendrex act(const OmegaMap& m, const Dendrex& d) const override {
        auto img = detail::token_images(t_, d);
        std::vector<EdgeId> out(m.source().edge_count());
        for (EdgeId e = 0; e < m.source().edge_count(); ++e) out[e] = img[m(e)];
        return detail::map_token(t_, out);
    }

    int k0_arity_bound() const override { return arity_ceiling(t_); }
    std::string describe() const override { return "repr(" + t_.text() + ")"; }

protected:
    std::vector<Dendrex> compute_dendrices(const Tree& shape) const override {
        std::vector<Dendrex> out;
        for (const auto& img : *hom_images(shape, t_)) out.push_back(detail::map_token(t_, img));
        return out;
    }

    Tree t_;
};

// union of the images of a family of maps into the representable; membership
// by factorization (compose every map out of each generator source and
// collect)
class SubRepresentable : public Representable {
public:
    SubRepresentable(Tree t, std::vector<OmegaMap> generators, std::string name)
        : Representable(std::move(t)), gens_(std::move(generators)), name_(std::move(name)) {
        for (const auto& g : gens_)
            if (!g.target().same(t_))
                throw std::invalid_argument("subobject generator does not land in the tree");
    }

    const std::vector<OmegaMap>& generators() const { return gens_; }
    std::string describe() const override { return name_; }

protected:
    std::vector<Dendrex> compute_dendrices(const Tree& shape) const override {
        std::set<Dendrex> out;
        for (const auto& g : gens_)
            for (const auto& h : *hom_images(shape, g.source())) {
                std::vector<EdgeId> comp(shape.edge_count());
                for (EdgeId e = 0; e < shape.edge_count(); ++e) comp[e] = g(h[e]);
                out.insert(detail::map_token(t_, comp));
            }
        return {out.begin(), out.end()};
    }

private:
    std::vector<OmegaMap> gens_;
    std::string name_;
};

inline DSet representable(const Tree& t) { return std::make_shared<Representable>(t); }
inline DSet eta_set() { return representable(eta()); }

inline DSet boundary(const Tree& t) {
    std::vector<OmegaMap> gens;
    for (auto& f : faces(t)) gens.push_back(f.map);
    return std::make_shared<SubRepresentable>(t, std::move(gens),
                                              "boundary(" + t.text() + ")");
}

inline DSet horn(const Tree& t, const std::string& label) {
    std::vector<OmegaMap> gens;
    bool found = false;
    for (auto& f : faces(t)) {
        if (f.label == label) { found = true; continue; }
        gens.push_back(f.map);
    }
    if (!found) throw std::invalid_argument("horn: no face labelled '" + label + "' on " + t.text());
    return std::make_shared<SubRepresentable>(t, std::move(gens),
                                              "horn(" + t.text() + "," + label + ")");
}

inline DSet segal_core(const Tree& t) {
    std::vector<OmegaMap> gens;
    if (t.vertex_count() == 0) {
        gens.push_back(identity_map(t));
    } else {
        for (int v = 0; v < t.vertex_count(); ++v) {
            const auto& vx = t.vertex(v);
            Tree c = corolla(static_cast<int>(vx.inputs.size()));
            std::vector<EdgeId> img(c.edge_count());
            for (std::size_t i = 0; i < vx.inputs.size(); ++i) img[i] = vx.inputs[i];
            img[c.root()] = vx.output;
            gens.emplace_back(c, t, img);
        }
    }
    return std::make_shared<SubRepresentable>(t, std::move(gens), "core(" + t.text() + ")");
}

// token-identity inclusion of a shape-wise subobject
inline DendMap inclusion_map(DSet sub, DSet ambient) {
    return {sub, ambient, [](const Tree&, const Dendrex& d) { return d; }};
}

// ---- empty, terminal, disjoint union ---------------------------------------

class EmptySet : public DendroidalSet {
public:
    Dendrex act(const OmegaMap&, const Dendrex&) const override {
        throw std::logic_error("empty dendroidal set has no dendrices");
    }
    int k0_arity_bound() const override { return 0; }
    std::string describe() const override { return "empty"; }

protected:
    std::vector<Dendrex> compute_dendrices(const Tree&) const override { return {}; }
};

class TerminalSet : public DendroidalSet {
public:
    Dendrex act(const OmegaMap&, const Dendrex&) const override { return {"*"}; }
    int k0_arity_bound() const override { return 0; }
    std::string describe() const override { return "terminal"; }

protected:
    std::vector<Dendrex> compute_dendrices(const Tree&) const override { return {{"*"}}; }
};

inline DSet empty_set() { return std::make_shared<EmptySet>(); }
inline DSet terminal_set() { return std::make_shared<TerminalSet>(); }

class DisjointUnion : public DendroidalSet {
public:
    explicit DisjointUnion(std::vector<DSet> parts) : parts_(std::move(parts)) {}

    Dendrex act(const OmegaMap& m, const Dendrex& d) const override {
        auto [i, inner] = split(d);
        return tag(i, parts_[i]->act(m, inner));
    }
    int k0_arity_bound() const override {
        int b = 0;
        for (const auto& p : parts_) b = std::max(b, p->k0_arity_bound());
        return b;
    }
    std::string describe() const override {
        std::string s = "union(";
        for (std::size_t i = 0; i < parts_.size(); ++i)
            s += (i ? "," : "") + parts_[i]->describe();
        return s + ")";
    }

    static Dendrex tag(std::size_t i, const Dendrex& d) {
        return {"u" + std::to_string(i) + ":" + d.v};
    }
    std::pair<std::size_t, Dendrex> split(const Dendrex& d) const {
        auto colon = d.v.find(':');
        if (d.v.empty() || d.v[0] != 'u' || colon == std::string::npos)
            throw std::invalid_argument("not a union token: " + d.v);
        std::size_t i = std::stoul(d.v.substr(1, colon - 1));
        return {i, Dendrex{d.v.substr(colon + 1)}};
    }
    std::size_t arity() const { return parts_.size(); }

protected:
    std::vector<Dendrex> compute_dendrices(const Tree& shape) const override {
        std::vector<Dendrex> out;
        for (std::size_t i = 0; i < parts_.size(); ++i)
            for (const auto& d : parts_[i]->dendrices(shape)) out.push_back(tag(i, d));
        return out;
    }

private:
    std::vector<DSet> parts_;
};

struct UnionResult {
    DSet set;
    std::vector<DendMap> injections;
};

inline UnionResult disjoint_union(std::vector<DSet> parts) {
    auto u = std::make_shared<DisjointUnion>(parts);
    UnionResult out{u, {}};
    for (std::size_t i = 0; i < parts.size(); ++i)
        out.injections.push_back(DendMap{
            parts[i], u, [i](const Tree&, const Dendrex& d) { return DisjointUnion::tag(i, d); }});
    return out;
}

// ---- extension by zero ------------------------------------------------------

// agrees with the simplicial set on linear shapes, empty otherwise
class ExtensionByZero : public DendroidalSet {
public:
    explicit ExtensionByZero(SimplicialSetFin X) : x_(std::move(X)) {
        auto r = x_.check();
        if (!r.ok) throw std::invalid_argument("extension by zero: " + r.violation);
    }

    const SimplicialSetFin& complex() const { return x_; }

    Dendrex act(const OmegaMap& m, const Dendrex& d) const override {
        auto phi = monotone_of(m);
        SimplexValue s = decode(d);
        // composite word, then normalize through stored faces
        std::vector<int> comp;
        for (int v : phi) comp.push_back(s.word[v]);
        return encode(detail::compose_word(x_, {s.kind, s.index, {}}, comp));
    }

    int k0_arity_bound() const override { return 1; }
    std::string describe() const override { return "simplicial"; }

    Dendrex encode(const SimplexValue& s) const {
        std::string name = s.kind == 0   ? x_.vertices[s.index]
                           : s.kind == 1 ? x_.edges[s.index].name
                                         : x_.triangles[s.index].name;
        std::string w;
        for (std::size_t i = 0; i < s.word.size(); ++i)
            w += (i ? "," : "") + std::to_string(s.word[i]);
        return {"S[" + std::to_string(s.kind) + ":" + name + ";" + w + "]"};
    }
    SimplexValue decode(const Dendrex& d) const {
        auto colon = d.v.find(':');
        auto semi = d.v.find(';');
        SimplexValue s;
        s.kind = std::stoi(d.v.substr(2, colon - 2));
        std::string name = d.v.substr(colon + 1, semi - colon - 1);
        s.index = s.kind == 0 ? x_.vertex_index(name)
                  : s.kind == 1 ? x_.edge_index(name)
                                : [&] {
                                      for (int i = 0; i < static_cast<int>(x_.triangles.size()); ++i)
                                          if (x_.triangles[i].name == name) return i;
                                      throw std::invalid_argument("unknown triangle " + name);
                                  }();
        std::string rest = d.v.substr(semi + 1, d.v.size() - semi - 2);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            auto comma = rest.find(',', pos);
            s.word.push_back(std::stoi(rest.substr(pos, comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return s;
    }

    // vertex map of a morphism of linear trees, reading edges top to bottom
    static std::vector<int> monotone_of(const OmegaMap& m) {
        auto depths = [](const Tree& t) {
            std::map<EdgeId, int> depth;
            EdgeId e = t.root();
            for (int d = t.vertex_count(); ; --d) {
                depth[e] = d;
                int va = t.vertex_above(e);
                if (va < 0) break;
                if (t.vertex(va).inputs.size() != 1)
                    throw std::invalid_argument("extension by zero: shape is not linear");
                e = t.vertex(va).inputs[0];
            }
            return depth;
        };
        auto ds = depths(m.source()), dt = depths(m.target());
        std::vector<int> phi(m.source().edge_count());
        for (const auto& [e, d] : ds) phi[d] = dt.at(m(e));
        return phi;
    }

protected:
    std::vector<Dendrex> compute_dendrices(const Tree& shape) const override {
        for (const auto& v : shape.vertices())
            if (v.inputs.size() != 1) return {};
        const int n = shape.vertex_count();
        std::vector<Dendrex> out;
        const int kinds[3] = {static_cast<int>(x_.vertices.size()),
                              static_cast<int>(x_.edges.size()),
                              static_cast<int>(x_.triangles.size())};
        for (int k = 0; k <= std::min(n, 2); ++k) {
            std::vector<std::vector<int>> words;
            detail::monotone_surjections(n, k, words);
            for (int idx = 0; idx < kinds[k]; ++idx)
                for (const auto& w : words) out.push_back(encode({k, idx, w}));
        }
        return out;
    }

private:
    SimplicialSetFin x_;
};

inline DSet extension_by_zero(const SimplicialSetFin& X) {
    return std::make_shared<ExtensionByZero>(X);
}

// ---- dendroidal nerve -------------------------------------------------------

// a dendrex at shape s: objects on the edges of s, and for each vertex a
// morphism from the tensor of its input objects to its output object
class Nerve : public DendroidalSet {
public:
    explicit Nerve(PermutativeGroupoid p) : p_(std::move(p)) {
        auto r = validate(p_);
        if (!r.ok) throw std::invalid_argument("nerve: " + r.violation);
    }

    const PermutativeGroupoid& groupoid() const { return p_; }

    Dendrex act(const OmegaMap& m, const Dendrex& d) const override {
        const Tree& s = m.target();
        const Tree& s2 = m.source();
        auto [obj, mor] = decode(s, d);
        std::vector<int> obj2(s2.edge_count());
        for (EdgeId e = 0; e < s2.edge_count(); ++e) obj2[e] = obj[m(e)];
        std::vector<int> mor2;
        for (const auto& vx : s2.vertices()) {
            std::vector<EdgeId> in_imgs;
            for (EdgeId i : vx.inputs) in_imgs.push_back(m(i));
            mor2.push_back(evaluate(s, obj, mor, m(vx.output), in_imgs));
        }
        return encode(obj2, mor2);
    }

    int k0_arity_bound() const override { return 2; }
    std::string describe() const override { return "nerve"; }

    Dendrex encode(const std::vector<int>& obj, const std::vector<int>& mor) const {
        std::string s = "N[";
        for (std::size_t i = 0; i < obj.size(); ++i) s += (i ? "," : "") + p_.objects[obj[i]];
        s += "|";
        for (std::size_t i = 0; i < mor.size(); ++i) s += (i ? "," : "") + p_.mor_name(mor[i]);
        return {s + "]"};
    }
    std::pair<std::vector<int>, std::vector<int>> decode(const Tree& shape,
                                                          const Dendrex& d) const {
        std::string body = d.v.substr(2, d.v.size() - 3);
        auto bar = body.find('|');
        auto split = [](const std::string& s) {
            std::vector<std::string> out;
            std::size_t pos = 0;
            if (s.empty()) return out;
            while (true) {
                auto comma = s.find(',', pos);
                out.push_back(s.substr(pos, comma == std::string::npos ? comma : comma - pos));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            return out;
        };
        std::vector<int> obj, mor;
        for (const auto& n : split(body.substr(0, bar))) obj.push_back(p_.obj_index(n));
        for (const auto& n : split(body.substr(bar + 1))) mor.push_back(p_.mor_index(n));
        if (static_cast<int>(obj.size()) != shape.edge_count() ||
            static_cast<int>(mor.size()) != shape.vertex_count())
            throw std::invalid_argument("nerve token does not fit the shape: " + d.v);
        return {obj, mor};
    }

    // the operation of the labelled free operad on `shape` with output edge
    // `root`, inputs in the order given; composes the vertex morphisms along
    // the spanned subtree and inserts the symmetry for the input rearrangement
    int evaluate(const Tree& shape, const std::vector<int>& obj, const std::vector<int>& mor,
                 EdgeId root, const std::vector<EdgeId>& inputs) const {
        std::set<EdgeId> cut(inputs.begin(), inputs.end());
        if (cut.size() != inputs.size())
            throw std::logic_error("nerve evaluate: inputs not distinct");
        // recursive composite in traversal order
        std::vector<EdgeId> seq;
        std::function<int(EdgeId)> rec = [&](EdgeId e) -> int {
            if (cut.count(e)) {
                seq.push_back(e);
                return p_.identity_mor[obj[e]];
            }
            int va = shape.vertex_above(e);
            if (va < 0) throw std::logic_error("nerve evaluate: no spanned subtree");
            std::vector<int> parts;
            for (EdgeId i : shape.vertex(va).inputs) parts.push_back(rec(i));
            return p_.compose2(mor[va], p_.tensor_morphisms(parts));
        };
        int composite = rec(root);
        // arrange inputs: composite expects seq order, the dendrex provides
        // `inputs` order
        std::vector<int> xs;
        for (EdgeId e : inputs) xs.push_back(obj[e]);
        std::vector<int> perm(inputs.size());
        for (std::size_t k = 0; k < seq.size(); ++k) {
            auto it = std::find(inputs.begin(), inputs.end(), seq[k]);
            perm[k] = static_cast<int>(it - inputs.begin());
        }
        return p_.compose2(composite, p_.symmetry_of_permutation(xs, perm));
    }

protected:
    std::vector<Dendrex> compute_dendrices(const Tree& shape) const override {
        std::vector<Dendrex> out;
        std::vector<int> obj(shape.edge_count());
        std::vector<int> mor(shape.vertex_count());
        std::function<void(int)> fill_mor = [&](int v) {
            if (v == shape.vertex_count()) {
                out.push_back(encode(obj, mor));
                return;
            }
            const auto& vx = shape.vertex(v);
            std::vector<int> ins;
            for (EdgeId i : vx.inputs) ins.push_back(obj[i]);
            for (int f : p_.operations(ins, obj[vx.output])) {
                mor[v] = f;
                fill_mor(v + 1);
            }
        };
        std::function<void(EdgeId)> fill_obj = [&](EdgeId e) {
            if (e == shape.edge_count()) {
                fill_mor(0);
                return;
            }
            for (int o = 0; o < p_.object_count(); ++o) {
                obj[e] = o;
                fill_obj(e + 1);
            }
        };
        fill_obj(0);
        return out;
    }

private:
    PermutativeGroupoid p_;
};

inline DSet nerve(const PermutativeGroupoid& p) { return std::make_shared<Nerve>(p); }

// ---- cell attachment --------------------------------------------------------

// pushout of d <- horn(t,a) -> repr(t) along the horn inclusion; new cells
// are the maps into t not in the horn, the action routes through the
// attaching map whenever a face lands in the horn
class AttachCell : public DendroidalSet {
public:
    AttachCell(DSet d, Tree t, std::string label, DendMap attaching)
        : d_(std::move(d)), t_(std::move(t)), label_(std::move(label)),
          attaching_(std::move(attaching)) {
        horn_ = horn(t_, label_);
        // naturality of the attaching map, checked exactly on the pairwise
        // overlap generators of the horn's faces
        std::vector<Face> kept;
        for (auto& f : faces(t_))
            if (f.label != label_) kept.push_back(f);
        auto overlaps = face_overlaps(t_, kept);
        for (const auto& c : overlaps.constraints) {
            const auto& f1 = overlaps.kept[c.f1];
            const auto& f2 = overlaps.kept[c.f2];
            Dendrex x1 = attaching_.apply(f1.map.source(),
                                          detail::map_token(t_, f1.map.image()));
            Dendrex x2 = attaching_.apply(f2.map.source(),
                                          detail::map_token(t_, f2.map.image()));
            if (!(d_->act(c.h1, x1) == d_->act(c.h2, x2)))
                throw std::invalid_argument("attach_cell: attaching map is not natural");
        }
    }

    Dendrex act(const OmegaMap& m, const Dendrex& d) const override {
        if (!is_new(d)) return d_->act(m, d);
        auto img = detail::token_images(t_, Dendrex{d.v.substr(1)});
        std::vector<EdgeId> comp(m.source().edge_count());
        for (EdgeId e = 0; e < m.source().edge_count(); ++e) comp[e] = img[m(e)];
        Dendrex g = detail::map_token(t_, comp);
        if (horn_->has_dendrex(m.source(), g)) return attaching_.apply(m.source(), g);
        return {"+" + g.v};
    }

    int k0_arity_bound() const override {
        return std::max(d_->k0_arity_bound(), arity_ceiling(t_));
    }
    std::string describe() const override {
        return "attach(" + d_->describe() + "," + t_.text() + "," + label_ + ")";
    }

    static bool is_new(const Dendrex& d) { return !d.v.empty() && d.v[0] == '+'; }

protected:
    std::vector<Dendrex> compute_dendrices(const Tree& shape) const override {
        std::vector<Dendrex> out = d_->dendrices(shape);
        const auto& in_horn = horn_->dendrices(shape);
        for (const auto& img : *hom_images(shape, t_)) {
            Dendrex g = detail::map_token(t_, img);
            if (!std::binary_search(in_horn.begin(), in_horn.end(), g))
                out.push_back({"+" + g.v});
        }
        return out;
    }

private:
    DSet d_;
    Tree t_;
    std::string label_;
    DendMap attaching_;
    DSet horn_;
};

struct AttachResult {
    DSet set;
    DendMap inclusion;
};

inline AttachResult attach_cell(DSet d, const Tree& t, const std::string& label,
                                const DendMap& attaching) {
    auto p = std::make_shared<AttachCell>(d, t, label, attaching);
    return {p, DendMap{d, p, [](const Tree&, const Dendrex& x) { return x; }}};
}

// ---- quotient ---------------------------------------------------------------

// pushout of d <- sub -> terminal: sub's dendrices and the point merge into
// one basepoint class at every shape
class Quotient : public DendroidalSet {
public:
    Quotient(DSet d, DSet sub) : d_(std::move(d)), sub_(std::move(sub)) {
        // bounded closure check: sub is shape-wise contained in d and closed
        // under the action, verified over a small window
        auto window = shape_window(6, 2, std::max(3, d_->k0_arity_bound()));
        for (const auto& s2 : window) {
            const auto& dd = d_->dendrices(s2);
            for (const auto& x : sub_->dendrices(s2)) {
                if (!std::binary_search(dd.begin(), dd.end(), x))
                    throw std::invalid_argument("quotient: sub is not a subobject of d");
                for (const auto& s1 : window)
                    for (const auto& m : hom(s1, s2))
                        if (!sub_->has_dendrex(s1, d_->act(m, x)))
                            throw std::invalid_argument("quotient: sub not closed under act");
            }
        }
    }

    static Dendrex basepoint() { return {"q*"}; }

    Dendrex act(const OmegaMap& m, const Dendrex& d) const override {
        if (d == basepoint()) return basepoint();
        Dendrex y = d_->act(m, d);
        return sub_->has_dendrex(m.source(), y) ? basepoint() : y;
    }

    int k0_arity_bound() const override { return d_->k0_arity_bound(); }
    std::string describe() const override {
        return "quotient(" + d_->describe() + "," + sub_->describe() + ")";
    }

protected:
    std::vector<Dendrex> compute_dendrices(const Tree& shape) const override {
        const auto& cut = sub_->dendrices(shape);
        std::vector<Dendrex> out{basepoint()};
        for (const auto& x : d_->dendrices(shape))
            if (!std::binary_search(cut.begin(), cut.end(), x)) out.push_back(x);
        return out;
    }

private:
    DSet d_, sub_;
};

struct QuotientResult {
    DSet set;
    DendMap projection;
};

inline QuotientResult quotient(DSet d, DSet sub) {
    auto q = std::make_shared<Quotient>(d, sub);
    DendMap proj{d, q, [sub](const Tree& shape, const Dendrex& x) {
                     return sub->has_dendrex(shape, x) ? Quotient::basepoint() : x;
                 }};
    return {q, proj};
}

}  // namespace dendro

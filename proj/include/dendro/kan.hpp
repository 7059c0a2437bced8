#pragma once

// Horn maps into a dendroidal set and exhaustive filler search. A map out of
// a horn is determined by compatible images of its faces; compatibility is
// decided exactly on the monic overlap generators (face_overlaps), and the
// bounded-window naturality check is available as a separate verification
// surface (verify_window) and equivalent on every tested corpus.

#include "dset.hpp"

#include <optional>

namespace dendro {

struct HornMap {
    Tree tree;
    std::string omitted;
    std::vector<std::string> face_labels;  // kept faces, in face order
    std::vector<Dendrex> face_images;

    std::string show() const {
        std::string s = "horn(" + tree.text() + "," + omitted + "){";
        for (std::size_t i = 0; i < face_labels.size(); ++i) {
            if (i) s += ", ";
            s += face_labels[i] + " -> " + face_images[i].v;
        }
        return s + "}";
    }
};

namespace detail {

struct HornShape {
    std::vector<Face> kept;
    FaceOverlaps overlaps;
};

inline HornShape horn_shape(const Tree& t, const std::string& omitted) {
    std::vector<Face> kept;
    bool found = false;
    for (auto& f : faces(t)) {
        if (f.label == omitted) { found = true; continue; }
        kept.push_back(f);
    }
    if (!found)
        throw std::invalid_argument("horn_maps: no face labelled '" + omitted + "' on " + t.text());
    HornShape hs;
    hs.overlaps = face_overlaps(t, kept);
    hs.kept = hs.overlaps.kept;
    return hs;
}

}  // namespace detail

// All natural assignments of dendrices to the horn's faces: backtracking over
// face images with pairwise overlap constraints checked on precomputed
// action tables.
inline std::vector<HornMap> horn_maps(const DendroidalSet& d, const Tree& t,
                                      const std::string& omitted) {
    auto hs = detail::horn_shape(t, omitted);
    const int F = static_cast<int>(hs.kept.size());
    std::vector<const std::vector<Dendrex>*> den(F);
    for (int l = 0; l < F; ++l) den[l] = &d.dendrices(hs.kept[l].map.source());

    // constraints grouped by their later face; act tables per constraint side
    struct Side {
        int face;
        std::vector<Dendrex> acts;  // aligned with den[face]
    };
    struct Edge {
        int earlier, later;
        Side es, ls;
    };
    std::vector<std::vector<Edge>> incoming(F);  // by later face
    for (const auto& c : hs.overlaps.constraints) {
        int f1 = c.f1, f2 = c.f2;
        const OmegaMap *h1 = &c.h1, *h2 = &c.h2;
        if (f1 > f2) {
            std::swap(f1, f2);
            std::swap(h1, h2);
        }
        Edge e;
        e.earlier = f1;
        e.later = f2;
        e.es.face = f1;
        for (const auto& x : *den[f1]) e.es.acts.push_back(d.act(*h1, x));
        e.ls.face = f2;
        for (const auto& x : *den[f2]) e.ls.acts.push_back(d.act(*h2, x));
        incoming[f2].push_back(std::move(e));
    }

    std::vector<HornMap> out;
    std::vector<int> chosen(F, -1);
    std::function<void(int)> rec = [&](int l) {
        if (l == F) {
            HornMap hm{t, omitted, {}, {}};
            for (int i = 0; i < F; ++i) {
                hm.face_labels.push_back(hs.kept[i].label);
                hm.face_images.push_back((*den[i])[chosen[i]]);
            }
            out.push_back(std::move(hm));
            return;
        }
        for (int i = 0; i < static_cast<int>(den[l]->size()); ++i) {
            bool ok = true;
            for (const auto& e : incoming[l]) {
                if (!(e.es.acts[chosen[e.earlier]] == e.ls.acts[i])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen[l] = i;
                rec(l + 1);
            }
        }
        chosen[l] = -1;
    };
    rec(0);
    return out;
}

// evaluate the horn map on an arbitrary horn dendrex by factoring it through
// a face (any factorization; they agree for maps produced by horn_maps)
inline std::optional<Dendrex> evaluate_horn_map(const DendroidalSet& d, const HornMap& hm,
                                                const Tree& shape, const Dendrex& g,
                                                const detail::HornShape& hs) {
    Tree t = hm.tree;
    auto img = detail::token_images(t, g);
    for (int l = 0; l < static_cast<int>(hs.kept.size()); ++l) {
        for (const auto& h : hom(shape, hs.kept[l].map.source())) {
            bool match = true;
            for (EdgeId e = 0; e < shape.edge_count() && match; ++e)
                match = hs.kept[l].map(h(e)) == img[e];
            if (match) return d.act(h, hm.face_images[l]);
        }
    }
    return std::nullopt;
}

// The HornMap naturality contract: over every shape with at most |edges(t)|
// edges, all factorizations of every horn dendrex give the same value, and
// the induced assignment commutes with the action.
inline bool verify_window(const DendroidalSet& d, const HornMap& hm) {
    auto hs = detail::horn_shape(hm.tree, hm.omitted);
    const int E = hm.tree.edge_count();
    auto window = shape_window(E, E, E);
    std::vector<OmegaMap> gens;
    for (auto& f : hs.kept) gens.push_back(f.map);
    auto hornset = std::make_shared<SubRepresentable>(hm.tree, gens, "window-horn");
    // well-definedness across factorizations
    std::map<std::pair<std::string, std::string>, Dendrex> value;
    for (const auto& s : window) {
        for (const auto& g : hornset->dendrices(s)) {
            auto img = detail::token_images(hm.tree, g);
            std::optional<Dendrex> seen;
            for (int l = 0; l < static_cast<int>(hs.kept.size()); ++l)
                for (const auto& h : hom(s, hs.kept[l].map.source())) {
                    bool match = true;
                    for (EdgeId e = 0; e < s.edge_count() && match; ++e)
                        match = hs.kept[l].map(h(e)) == img[e];
                    if (!match) continue;
                    Dendrex v = d.act(h, hm.face_images[l]);
                    if (seen && !(*seen == v)) return false;
                    seen = v;
                }
            if (!seen) return false;  // horn dendrex with no factorization: impossible
            value[{s.structure_key(), g.v}] = *seen;
        }
    }
    // naturality of the induced assignment
    for (const auto& s2 : window)
        for (const auto& g : hornset->dendrices(s2))
            for (const auto& s1 : window)
                for (const auto& m : hom(s1, s2)) {
                    Dendrex lhs = value.at({s1.structure_key(), hornset->act(m, g).v});
                    Dendrex rhs = d.act(m, value.at({s2.structure_key(), g.v}));
                    if (!(lhs == rhs)) return false;
                }
    return true;
}

// a filler is a dendrex of shape t restricting to the horn map on every face
inline std::optional<Dendrex> has_filler(const DendroidalSet& d, const HornMap& hm) {
    auto hs = detail::horn_shape(hm.tree, hm.omitted);
    for (const auto& x : d.dendrices(hm.tree)) {
        bool ok = true;
        for (std::size_t l = 0; l < hs.kept.size() && ok; ++l)
            ok = d.act(hs.kept[l].map, x) == hm.face_images[l];
        if (ok) return x;
    }
    return std::nullopt;
}

// turn a horn map into a map of dendroidal sets out of the horn subobject
inline DendMap as_dend_map(DSet dptr, const HornMap& hm) {
    auto hs = std::make_shared<detail::HornShape>(detail::horn_shape(hm.tree, hm.omitted));
    DSet h = horn(hm.tree, hm.omitted);
    return {h, dptr, [dptr, hm, hs](const Tree& shape, const Dendrex& g) {
                auto v = evaluate_horn_map(*dptr, hm, shape, g, *hs);
                if (!v) throw std::logic_error("horn map: dendrex does not factor: " + g.v);
                return *v;
            }};
}

// ---- bounded Kan checks -----------------------------------------------------

struct KanReport {
    bool pass = true;
    bool inner_only = true;
    int max_vertices = 0, max_arity = 0;
    struct Entry {
        std::string tree, label;
        std::size_t maps = 0, filled = 0;
    };
    std::vector<Entry> entries;
    struct Counterexample {
        std::string tree, label;
        HornMap map;
    };
    std::optional<Counterexample> counterexample;
};

namespace detail {

inline KanReport check_kan(const DendroidalSet& d, int max_vertices, int max_arity,
                           bool inner_only) {
    if (max_vertices < 1 || max_arity < 0)
        throw std::invalid_argument("check_kan: bounds must be >= 1");
    KanReport report;
    report.inner_only = inner_only;
    report.max_vertices = max_vertices;
    report.max_arity = max_arity;
    for (const auto& t : enumerate_trees(max_vertices, max_arity)) {
        if (t.vertex_count() == 0) continue;
        std::vector<std::string> labels;
        if (inner_only) {
            for (EdgeId e : t.inner_edges()) labels.push_back(t.edge_name(e));
        } else {
            labels = horn_labels(t);
        }
        for (const auto& label : labels) {
            auto hs = horn_shape(t, label);
            auto maps = horn_maps(d, t, label);
            // index fillers by their joint face restriction
            std::map<std::string, Dendrex> filler_by_key;
            for (const auto& x : d.dendrices(t)) {
                std::string key;
                for (const auto& f : hs.kept) key += d.act(f.map, x).v + ";";
                filler_by_key.emplace(key, x);
            }
            KanReport::Entry entry{t.text(), label, maps.size(), 0};
            for (const auto& hm : maps) {
                std::string key;
                for (const auto& img : hm.face_images) key += img.v + ";";
                if (filler_by_key.count(key)) {
                    entry.filled++;
                } else if (!report.counterexample) {
                    report.pass = false;
                    report.counterexample = {t.text(), label, hm};
                }
            }
            report.entries.push_back(std::move(entry));
            if (!report.pass) return report;
        }
    }
    return report;
}

}  // namespace detail

inline KanReport check_inner_kan(const DendroidalSet& d, int max_vertices, int max_arity) {
    return detail::check_kan(d, max_vertices, max_arity, true);
}
inline KanReport check_fully_kan(const DendroidalSet& d, int max_vertices, int max_arity) {
    return detail::check_kan(d, max_vertices, max_arity, false);
}

}  // namespace dendro

#pragma once

// The K0 engine: extract a presentation from any finitely enumerable
// dendroidal set (free abelian group on the eta-dendrices, one relation per
// corolla dendrex reading "inputs sum to output"), compute the group via
// Smith normal form, push maps forward, and compare against pi0 of the
// underlying simplicial set.

#include "dset.hpp"
#include "intlin.hpp"

namespace dendro {

struct K0Row {
    int arity = 0;
    Dendrex dendrex;            // the corolla dendrex this row came from
    std::vector<Int> coeffs;    // over the generators
};

struct K0Presentation {
    std::vector<Dendrex> generators;  // sorted eta-dendrices
    IntMatrix matrix;                 // distinct nonzero relation rows
    std::vector<K0Row> rows;          // per-dendrex provenance, when requested
    int arity_bound = 0;

    int generator_index(const Dendrex& g) const {
        auto it = std::lower_bound(generators.begin(), generators.end(), g);
        if (it == generators.end() || !(*it == g))
            throw std::logic_error("K0 presentation: face is not a listed generator: " + g.v);
        return static_cast<int>(it - generators.begin());
    }
};

// Relations: one row per corolla dendrex of arity <= bound, reading "inputs
// sum to output". Permuted duplicates and degenerate tautologies collapse in
// the stored matrix (a row operation); the full per-dendrex list is kept only
// when provenance is requested.
inline K0Presentation k0_presentation(const DendroidalSet& d, int arity_bound,
                                      bool with_provenance = false) {
    K0Presentation p;
    p.arity_bound = arity_bound;
    p.generators = d.dendrices(eta());
    std::set<std::vector<Int>> uniq;
    for (int n = 0; n <= arity_bound; ++n) {
        Tree cn = corolla(n);
        std::vector<OmegaMap> leaf_inclusions;
        for (int i = 0; i < n; ++i) leaf_inclusions.push_back(edge_inclusion(cn, i));
        OmegaMap root_inclusion = edge_inclusion(cn, cn.root());
        for (const auto& x : d.dendrices(cn)) {
            std::vector<Int> coeffs(p.generators.size());
            for (const auto& incl : leaf_inclusions)
                coeffs[p.generator_index(d.act(incl, x))] += 1;
            coeffs[p.generator_index(d.act(root_inclusion, x))] -= 1;
            bool zero = true;
            for (const auto& c : coeffs) zero &= (c == 0);
            if (!zero) uniq.insert(coeffs);
            if (with_provenance) p.rows.push_back({n, x, std::move(coeffs)});
        }
    }
    std::vector<std::vector<Int>> rows_vec(uniq.begin(), uniq.end());
    p.matrix = rows_vec.empty() ? IntMatrix(0, static_cast<int>(p.generators.size()))
                                : IntMatrix::from_rows(rows_vec);
    return p;
}

inline K0Presentation k0_presentation(const DendroidalSet& d) {
    return k0_presentation(d, d.k0_arity_bound());
}

inline FgAbelianGroup k0_group(const K0Presentation& p) {
    return FgAbelianGroup::cokernel(static_cast<int>(p.generators.size()), p.matrix);
}

inline FgAbelianGroup k0(const DendroidalSet& d) { return k0_group(k0_presentation(d)); }
inline FgAbelianGroup k0(const DendroidalSet& d, int arity_bound) {
    return k0_group(k0_presentation(d, arity_bound));
}

// generator-level matrix of a map of dendroidal sets, by applying it to the
// eta-dendrices; the GroupHom constructor verifies relation respect (which
// is where a non-natural map surfaces)
inline GroupHom induced(const DendMap& f, const K0Presentation& src_pres,
                        const K0Presentation& tgt_pres) {
    IntMatrix m(static_cast<int>(tgt_pres.generators.size()),
                static_cast<int>(src_pres.generators.size()));
    Tree e = eta();
    for (int j = 0; j < static_cast<int>(src_pres.generators.size()); ++j) {
        Dendrex img = f.apply(e, src_pres.generators[j]);
        m(tgt_pres.generator_index(img), j) = 1;
    }
    return {k0_group(src_pres), k0_group(tgt_pres), std::move(m)};
}

inline GroupHom induced(const DendMap& f) {
    return induced(f, k0_presentation(*f.source), k0_presentation(*f.target));
}

// ---- pi0 of the underlying simplicial set and lambda -----------------------

struct Pi0Underlying {
    std::vector<std::vector<Dendrex>> components;  // each sorted; deterministic order
};

inline Pi0Underlying pi0_underlying(const DendroidalSet& d) {
    const auto verts = d.dendrices(eta());
    std::map<Dendrex, int> index;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) index[verts[i]] = i;
    std::vector<int> parent(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    Tree l1 = linear(1);
    OmegaMap top = edge_inclusion(l1, 0), bottom = edge_inclusion(l1, 1);
    for (const auto& edge : d.dendrices(l1)) {
        int a = index.at(d.act(top, edge));
        int b = index.at(d.act(bottom, edge));
        parent[find(a)] = find(b);
    }
    std::map<int, std::vector<Dendrex>> comps;
    for (std::size_t i = 0; i < verts.size(); ++i) comps[find(static_cast<int>(i))].push_back(verts[i]);
    Pi0Underlying out;
    for (auto& [root, members] : comps) out.components.push_back(std::move(members));
    return out;
}

// lambda sends a component to the K0 class of any representative;
// well-definedness over the representatives is asserted
struct LambdaTable {
    std::vector<std::pair<Dendrex, std::vector<Int>>> entries;  // representative -> class
    bool injective = true;
};

inline LambdaTable lambda(const DendroidalSet& d) {
    auto pres = k0_presentation(d);
    auto group = k0_group(pres);
    auto pi0 = pi0_underlying(d);
    LambdaTable out;
    std::set<std::vector<Int>> seen;
    for (const auto& comp : pi0.components) {
        std::vector<Int> unit(pres.generators.size());
        unit[pres.generator_index(comp.front())] = 1;
        auto cls = group.class_of(unit);
        for (const auto& member : comp) {
            std::vector<Int> mu(pres.generators.size());
            mu[pres.generator_index(member)] = 1;
            if (group.class_of(mu) != cls)
                throw std::logic_error("lambda: not constant on a pi0 component");
        }
        if (!seen.insert(cls).second) out.injective = false;
        out.entries.push_back({comp.front(), cls});
    }
    return out;
}

// bijectivity onto a finite K0: injective and every group element hit
inline bool lambda_bijective(const DendroidalSet& d) {
    auto table = lambda(d);
    auto group = k0(d);
    if (!table.injective || !group.finite()) return false;
    return Int(table.entries.size()) == group.order();
}

// ---- colimit checks ---------------------------------------------------------

// presentation-level pushout of B <- A -> C: generators of B and C together,
// relations of both plus one row per A-generator identifying its two images
inline FgAbelianGroup pushout_group(const K0Presentation& a, const K0Presentation& b,
                                    const K0Presentation& c,
                                    const std::function<Dendrex(const Dendrex&)>& a_to_b,
                                    const std::function<Dendrex(const Dendrex&)>& a_to_c) {
    const int nb = static_cast<int>(b.generators.size());
    const int nc = static_cast<int>(c.generators.size());
    std::vector<std::vector<Int>> rows;
    auto widen_b = [&](const std::vector<Int>& r) {
        std::vector<Int> w(nb + nc);
        for (int j = 0; j < nb; ++j) w[j] = r[j];
        return w;
    };
    auto widen_c = [&](const std::vector<Int>& r) {
        std::vector<Int> w(nb + nc);
        for (int j = 0; j < nc; ++j) w[nb + j] = r[j];
        return w;
    };
    for (int i = 0; i < b.matrix.rows(); ++i) rows.push_back(widen_b(b.matrix.row(i)));
    for (int i = 0; i < c.matrix.rows(); ++i) rows.push_back(widen_c(c.matrix.row(i)));
    for (const auto& g : a.generators) {
        std::vector<Int> w(nb + nc);
        w[b.generator_index(a_to_b(g))] += 1;
        w[nb + c.generator_index(a_to_c(g))] -= 1;
        rows.push_back(std::move(w));
    }
    IntMatrix m = rows.empty() ? IntMatrix(0, nb + nc) : IntMatrix::from_rows(rows);
    return FgAbelianGroup::cokernel(nb + nc, m);
}

// K0 of an attachment is the pushout of the K0's
inline bool colimit_check_attach(const DSet& d, const Tree& t, const std::string& label,
                                 const DendMap& attaching, const DSet& pushout_set) {
    auto h = horn(t, label);
    auto a = k0_presentation(*h);
    auto b = k0_presentation(*representable(t));
    auto c = k0_presentation(*d);
    auto p = k0_presentation(*pushout_set);
    Tree e = eta();
    auto grp = pushout_group(a, b, c, [](const Dendrex& g) { return g; },
                             [&](const Dendrex& g) { return attaching.apply(e, g); });
    // generator-level map to K0(pushout_set)
    IntMatrix m(static_cast<int>(p.generators.size()),
                static_cast<int>(b.generators.size() + c.generators.size()));
    const auto& horn_etas = h->dendrices(e);
    for (int j = 0; j < static_cast<int>(b.generators.size()); ++j) {
        const Dendrex& g = b.generators[j];
        Dendrex img = std::binary_search(horn_etas.begin(), horn_etas.end(), g)
                          ? attaching.apply(e, g)
                          : Dendrex{"+" + g.v};
        m(p.generator_index(img), j) = 1;
    }
    for (int j = 0; j < static_cast<int>(c.generators.size()); ++j)
        m(p.generator_index(c.generators[j]), static_cast<int>(b.generators.size()) + j) = 1;
    return GroupHom(grp, k0_group(p), std::move(m)).is_isomorphism();
}

// K0 of a quotient is the pushout of K0(d) <- K0(sub) -> 0
inline bool colimit_check_quotient(const DSet& d, const DSet& sub, const DSet& quotient_set) {
    auto a = k0_presentation(*sub);
    auto c = k0_presentation(*d);
    auto p = k0_presentation(*quotient_set);
    // pushout presentation: c's generators plus a basepoint generator that is
    // zero, with every sub generator glued to it
    K0Presentation term;
    term.generators = {Quotient::basepoint()};
    term.matrix = IntMatrix::from_rows({{Int(-1)}});
    auto grp = pushout_group(a, term, c, [](const Dendrex&) { return Quotient::basepoint(); },
                             [](const Dendrex& g) { return g; });
    const auto sub_etas = sub->dendrices(eta());
    IntMatrix m(static_cast<int>(p.generators.size()),
                1 + static_cast<int>(c.generators.size()));
    m(p.generator_index(Quotient::basepoint()), 0) = 1;
    for (int j = 0; j < static_cast<int>(c.generators.size()); ++j) {
        const Dendrex& g = c.generators[j];
        Dendrex img = std::binary_search(sub_etas.begin(), sub_etas.end(), g)
                          ? Quotient::basepoint()
                          : g;
        m(p.generator_index(img), 1 + j) = 1;
    }
    return GroupHom(grp, k0_group(p), std::move(m)).is_isomorphism();
}

// K0 of a disjoint union is the direct sum
inline bool colimit_check_union(const std::vector<DSet>& parts, const DSet& union_set) {
    auto p = k0_presentation(*union_set);
    std::vector<std::vector<Int>> rows;
    std::vector<Dendrex> gens;  // tagged, in part order
    std::vector<K0Presentation> pres;
    for (std::size_t i = 0; i < parts.size(); ++i) pres.push_back(k0_presentation(*parts[i]));
    int total = 0;
    std::vector<int> offset;
    for (const auto& pr : pres) {
        offset.push_back(total);
        total += static_cast<int>(pr.generators.size());
    }
    for (std::size_t i = 0; i < pres.size(); ++i)
        for (int r = 0; r < pres[i].matrix.rows(); ++r) {
            std::vector<Int> w(total);
            auto row = pres[i].matrix.row(r);
            for (int j = 0; j < static_cast<int>(row.size()); ++j) w[offset[i] + j] = row[j];
            rows.push_back(std::move(w));
        }
    auto grp = FgAbelianGroup::cokernel(
        total, rows.empty() ? IntMatrix(0, total) : IntMatrix::from_rows(rows));
    IntMatrix m(static_cast<int>(p.generators.size()), total);
    for (std::size_t i = 0; i < pres.size(); ++i)
        for (int j = 0; j < static_cast<int>(pres[i].generators.size()); ++j)
            m(p.generator_index(DisjointUnion::tag(i, pres[i].generators[j])),
              offset[i] + j) = 1;
    return GroupHom(grp, k0_group(p), std::move(m)).is_isomorphism();
}

// cokernel of an induced map, presented over the target's generators
inline FgAbelianGroup cokernel_of_hom(const GroupHom& h) {
    std::vector<std::vector<Int>> rows;
    for (int i = 0; i < h.target().relations().rows(); ++i)
        rows.push_back(h.target().relations().row(i));
    for (int j = 0; j < h.source().generator_count(); ++j) {
        std::vector<Int> col(h.target().generator_count());
        for (int i = 0; i < h.target().generator_count(); ++i) col[i] = h.matrix()(i, j);
        rows.push_back(std::move(col));
    }
    const int n = h.target().generator_count();
    return FgAbelianGroup::cokernel(
        n, rows.empty() ? IntMatrix(0, n) : IntMatrix::from_rows(rows));
}

}  // namespace dendro

#pragma once

// The verification suites behind `dendro verify` and the acceptance test
// binary. Every quantitative fact is checked exactly, against independent
// oracles where one is called for (brute-force hom enumeration, gcd of
// minors, explicit Grothendieck pairs, union-find on raw file data).

#include "expr.hpp"
#include "kan.hpp"
#include "kzero.hpp"

#include <chrono>
#include <random>

namespace dendro {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteResult {
    std::string suite;
    bool pass = true;
    std::vector<CheckLine> lines;
};

namespace verify_detail {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline void add_line(SuiteResult& r, const std::string& name, bool pass,
                     const std::string& detail, const Timer& t) {
    r.lines.push_back({name, pass, detail, t.seconds()});
    r.pass &= pass;
}

inline bool free_of_rank(const FgAbelianGroup& g, int rank) {
    return g.free_rank() == rank && g.torsion().empty();
}

// fixed tree corpus: all iso classes with <= 6 edges
inline std::vector<Tree> trees_up_to_six_edges() {
    std::vector<Tree> out;
    for (auto& t : enumerate_trees(5, 5))
        if (t.edge_count() <= 6) out.push_back(std::move(t));
    return out;
}

inline SimplicialSetFin interval_complex() {
    SimplicialSetFin X;
    X.vertices = {"p", "q"};
    X.edges.push_back({"f", 0, 1});
    return X;
}

inline SimplicialSetFin poset_nerve_complex() {
    SimplicialSetFin X;
    X.vertices = {"n0", "n1", "n2"};
    X.edges.push_back({"f01", 0, 1});
    X.edges.push_back({"f12", 1, 2});
    X.edges.push_back({"f02", 0, 2});
    X.triangles.push_back({"T", {false, 1}, {false, 2}, {false, 0}});
    return X;
}

inline SimplicialSetFin point_complex() { return SimplicialSetFin{{"p"}, {}, {}}; }

inline SimplicialSetFin circle_complex() {
    SimplicialSetFin X;
    X.vertices = {"p"};
    X.edges.push_back({"loop", 0, 0});
    return X;
}

// seeded random finite simplicial set with <= max_vertices vertices
inline SimplicialSetFin random_complex(std::mt19937_64& rng, int max_vertices) {
    SimplicialSetFin X;
    std::uniform_int_distribution<int> nv(1, max_vertices);
    const int n = nv(rng);
    for (int i = 0; i < n; ++i) X.vertices.push_back("p" + std::to_string(i));
    std::uniform_int_distribution<int> ne(0, 2 * n), pick(0, n - 1);
    const int e = ne(rng);
    for (int i = 0; i < e; ++i)
        X.edges.push_back({"e" + std::to_string(i), pick(rng), pick(rng)});
    // triangles over existing edges (or degenerate markers) with matching
    // endpoints; try a few times each
    std::uniform_int_distribution<int> nt(0, e);
    int want = nt(rng);
    auto edge_between = [&](int a, int b) -> std::optional<EdgeRef> {
        std::vector<EdgeRef> cands;
        for (int i = 0; i < static_cast<int>(X.edges.size()); ++i)
            if (X.edges[i].v0 == a && X.edges[i].v1 == b) cands.push_back({false, i});
        if (a == b) cands.push_back({true, a});
        if (cands.empty()) return std::nullopt;
        std::uniform_int_distribution<int> c(0, static_cast<int>(cands.size()) - 1);
        return cands[c(rng)];
    };
    for (int i = 0; i < want; ++i) {
        int v0 = pick(rng), v1 = pick(rng), v2 = pick(rng);
        auto d2 = edge_between(v0, v1), d1 = edge_between(v0, v2), d0 = edge_between(v1, v2);
        if (d2 && d1 && d0)
            X.triangles.push_back({"T" + std::to_string(X.triangles.size()), *d0, *d1, *d2});
    }
    return X;
}

// independent component count straight off the raw complex data
inline int components_oracle(const SimplicialSetFin& X) {
    std::vector<int> parent(X.vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& e : X.edges) parent[find(e.v0)] = find(e.v1);
    std::set<int> roots;
    for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
    return static_cast<int>(roots.size());
}

// brute-force hom oracle: every edge map, filtered by validate_map
inline std::set<std::vector<EdgeId>> brute_hom_oracle(const Tree& s, const Tree& t) {
    std::set<std::vector<EdgeId>> out;
    const int ns = s.edge_count(), nt = t.edge_count();
    std::vector<EdgeId> img(ns, 0);
    while (true) {
        if (validate_map(OmegaMap(s, t, img)).ok) out.insert(img);
        int k = ns - 1;
        while (k >= 0 && img[k] == nt - 1) img[k--] = 0;
        if (k < 0) break;
        img[k]++;
    }
    return out;
}

inline Int gcd_int(Int a, Int b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// gcd of all k x k minors (expansion by first row)
inline Int minors_gcd_oracle(const IntMatrix& m, int k) {
    std::function<Int(const std::vector<int>&, const std::vector<int>&)> det =
        [&](const std::vector<int>& rs, const std::vector<int>& cs) -> Int {
        if (rs.size() == 1) return m(rs[0], cs[0]);
        Int acc = 0;
        std::vector<int> sub_rs(rs.begin() + 1, rs.end());
        for (std::size_t c = 0; c < cs.size(); ++c) {
            std::vector<int> sub_cs;
            for (std::size_t j = 0; j < cs.size(); ++j)
                if (j != c) sub_cs.push_back(cs[j]);
            Int term = m(rs[0], cs[c]) * det(sub_rs, sub_cs);
            acc += (c % 2 == 0) ? term : -term;
        }
        return acc;
    };
    Int g = 0;
    std::vector<int> ri(k), ci(k);
    std::function<void(int, int)> cols = [&](int start, int depth) {
        if (depth == k) {
            g = gcd_int(g, det(ri, ci));
            return;
        }
        for (int c = start; c < m.cols(); ++c) {
            ci[depth] = c;
            cols(c + 1, depth + 1);
        }
    };
    std::function<void(int, int)> rws = [&](int start, int depth) {
        if (depth == k) {
            cols(0, 0);
            return;
        }
        for (int r = start; r < m.rows(); ++r) {
            ri[depth] = r;
            rws(r + 1, depth + 1);
        }
    };
    rws(0, 0);
    return g;
}

// explicit Grothendieck construction on a finite commutative monoid: classes
// of pairs (a,b) with (a,b) ~ (c,d) iff a+d+k = c+b+k for some k
struct GrothendieckPairs {
    int order = 0;
    std::vector<std::vector<int>> cls;  // class id per pair
    std::vector<std::pair<int, int>> reps;
    std::vector<std::vector<int>> add;  // class addition table
    int zero = 0;
};

inline GrothendieckPairs grothendieck_pairs_oracle(const CommMonoidTable& m) {
    const int n = m.size();
    auto equiv = [&](int a, int b, int c, int d) {
        for (int k = 0; k < n; ++k)
            if (m.op(m.op(a, d), k) == m.op(m.op(c, b), k)) return true;
        return false;
    };
    GrothendieckPairs g;
    g.cls.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (g.cls[a][b] >= 0) continue;
            int id = static_cast<int>(g.reps.size());
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    if (g.cls[c][d] < 0 && equiv(a, b, c, d)) g.cls[c][d] = id;
            g.reps.push_back({a, b});
        }
    g.order = static_cast<int>(g.reps.size());
    g.zero = g.cls[m.unit][m.unit];
    g.add.assign(g.order, std::vector<int>(g.order, -1));
    for (int i = 0; i < g.order; ++i)
        for (int j = 0; j < g.order; ++j) {
            auto [a, b] = g.reps[i];
            auto [c, d] = g.reps[j];
            g.add[i][j] = g.cls[m.op(a, c)][m.op(b, d)];
        }
    return g;
}

// a finite abelian group (by table) is isomorphic to the group with the given
// invariant factors iff the m-torsion counts agree for every m dividing the
// order
inline bool matches_invariants(const GrothendieckPairs& g, const FgAbelianGroup& h) {
    if (h.free_rank() != 0) return false;
    if (h.order() != g.order) return false;
    for (int m = 1; m <= g.order; ++m) {
        if (g.order % m != 0) continue;
        int count = 0;
        for (int x = 0; x < g.order; ++x) {
            int acc = g.zero;
            for (int k = 0; k < m; ++k) acc = g.add[acc][x];
            if (acc == g.zero) count++;
        }
        Int expect = 1;
        for (const auto& d : h.torsion()) expect *= gcd_int(d, m);
        if (Int(count) != expect) return false;
    }
    return true;
}

// corpus monoids for the group-completion oracle: everything up to order 5
// plus a few order-6 tables
inline std::vector<CommMonoidTable> monoid_corpus_up_to_six() {
    auto out = enumerate_commutative_monoids(5);
    out.push_back({{"0", "1", "2", "3", "4", "5"},
                   0,
                   {{0, 1, 2, 3, 4, 5},
                    {1, 2, 3, 4, 5, 0},
                    {2, 3, 4, 5, 0, 1},
                    {3, 4, 5, 0, 1, 2},
                    {4, 5, 0, 1, 2, 3},
                    {5, 0, 1, 2, 3, 4}}});  // Z/6
    auto sat = [](int n) {
        CommMonoidTable t;
        for (int i = 0; i < n; ++i) t.elements.push_back(std::to_string(i));
        t.unit = 0;
        t.table.assign(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t.table[i][j] = std::min(i + j, n - 1);
        return t;
    };
    out.push_back(sat(6));
    return out;
}

inline DendMap nerve_inclusion(DSet sub, DSet ambient) { return inclusion_map(sub, ambient); }

// base sets for the random attachment/quotient suites
inline std::vector<std::pair<std::string, DSet>> attachment_base_catalog() {
    std::vector<std::pair<std::string, DSet>> out;
    for (const auto& [name, p] : corpus_groupoids()) out.push_back({"nerve:" + name, nerve(p)});
    out.push_back({"repr:C2", representable(corolla(2))});
    out.push_back({"repr:example", representable(parse_tree("e[c[a,b],d]"))});
    out.push_back({"simplicial:interval", extension_by_zero(interval_complex())});
    out.push_back({"simplicial:nerve012", extension_by_zero(poset_nerve_complex())});
    out.push_back({"union:eta+z2",
                   disjoint_union({eta_set(), nerve(corpus_groupoids()[1].second)}).set});
    return out;
}

}  // namespace verify_detail

// ---- suite: representable K0 is free on the leaves (<= 6 edges) -------------

inline SuiteResult verify_representables() {
    using namespace verify_detail;
    SuiteResult r{"example-3-3"};
    Timer t;
    auto corpus = trees_up_to_six_edges();
    int bad = 0;
    for (const auto& tree : corpus) {
        auto g = k0(*representable(tree));
        if (!free_of_rank(g, static_cast<int>(tree.leaves().size()))) bad++;
    }
    add_line(r, "representable-k0-free-on-leaves", bad == 0,
             std::to_string(corpus.size()) + " trees, " + std::to_string(bad) + " failures", t);
    return r;
}

// ---- suite: horn inclusions induce K0 isos + the grafted-corolla tables -----

inline SuiteResult verify_horn_inclusions(int max_vertices = 4, int max_arity = 3) {
    using namespace verify_detail;
    SuiteResult r{"lemma-3-4"};
    {
        Timer t;
        int horns = 0, bad = 0;
        for (const auto& tree : enumerate_trees(max_vertices, max_arity)) {
            if (tree.vertex_count() == 0) continue;
            auto rep = representable(tree);
            auto pres_t = k0_presentation(*rep);
            for (const auto& label : horn_labels(tree)) {
                auto h = horn(tree, label);
                auto pres_h = k0_presentation(*h);
                horns++;
                if (!induced(inclusion_map(h, rep), pres_h, pres_t).is_isomorphism()) bad++;
            }
        }
        add_line(r, "horn-inclusion-k0-iso", bad == 0,
                 std::to_string(horns) + " horns (trees <= " + std::to_string(max_vertices) +
                     " vertices, arity <= " + std::to_string(max_arity) + "), " +
                     std::to_string(bad) + " failures",
                 t);
    }
    {
        Timer t;
        int bad = 0, cases = 0;
        for (int n = 0; n <= 3; ++n)
            for (int k = 1; k <= 3; ++k) {
                Tree tree = corolla_over_corolla(n, k);
                // displayed relation rows over a1..an, b1..b(k-1), bk, c
                std::map<std::string, std::map<std::string, long>> named;
                auto& a_sum = named["a_sum=bk"];
                for (int i = 1; i <= n; ++i) a_sum["a" + std::to_string(i)] = 1;
                a_sum["bk"] -= 1;
                auto& b_sum = named["b_sum=c"];
                for (int j = 1; j < k; ++j) b_sum["b" + std::to_string(j)] = 1;
                b_sum["bk"] += 1;
                b_sum["c"] -= 1;
                auto& mixed = named["mixed=c"];
                for (int j = 1; j < k; ++j) mixed["b" + std::to_string(j)] = 1;
                for (int i = 1; i <= n; ++i) mixed["a" + std::to_string(i)] += 1;
                mixed["c"] -= 1;
                std::map<std::string, std::pair<std::string, std::string>> horn_rows{
                    {"bk", {"a_sum=bk", "b_sum=c"}},
                    {"v:bk", {"a_sum=bk", "mixed=c"}},
                    {"v:c", {"b_sum=c", "mixed=c"}}};
                for (const auto& [label, pair] : horn_rows) {
                    cases++;
                    auto h = horn(tree, label);
                    auto pres = k0_presentation(*h);
                    auto to_row = [&](const std::map<std::string, long>& coeffs) {
                        std::vector<Int> row(pres.generators.size());
                        for (const auto& [name, c] : coeffs)
                            row[pres.generator_index(Dendrex{"[" + name + "]"})] = c;
                        return row;
                    };
                    std::vector<std::vector<Int>> displayed{to_row(named[pair.first]),
                                                            to_row(named[pair.second])};
                    // row-for-row up to row operations = equal row lattices
                    IntMatrix disp = IntMatrix::from_rows(displayed);
                    auto lat_computed = FgAbelianGroup::cokernel(
                        static_cast<int>(pres.generators.size()), pres.matrix);
                    auto lat_displayed = FgAbelianGroup::cokernel(
                        static_cast<int>(pres.generators.size()), disp);
                    bool ok = true;
                    for (const auto& row : displayed) ok &= lat_computed.in_relation_lattice(row);
                    for (int i = 0; i < pres.matrix.rows(); ++i)
                        ok &= lat_displayed.in_relation_lattice(pres.matrix.row(i));
                    ok &= free_of_rank(k0_group(pres), n + k - 1);
                    if (!ok) bad++;
                }
            }
        add_line(r, "grafted-corolla-horn-tables", bad == 0,
                 std::to_string(cases) + " horn presentations matched row-for-row", t);
    }
    return r;
}

// ---- suite: simplicial K0, nerve K0 = group completion, lambda --------------

inline SuiteResult verify_nerves_and_simplicial(std::uint64_t seed) {
    using namespace verify_detail;
    SuiteResult r{"prop-3-2"};
    {
        Timer t;
        std::mt19937_64 rng(seed);
        int bad = 0;
        for (int i = 0; i < 50; ++i) {
            auto X = random_complex(rng, 8);
            auto g = k0(*extension_by_zero(X));
            if (!free_of_rank(g, components_oracle(X))) bad++;
        }
        add_line(r, "simplicial-k0-free-on-components", bad == 0,
                 "50 random complexes (<= 8 vertices), " + std::to_string(bad) + " failures", t);
    }
    {
        Timer t;
        int bad = 0, cases = 0;
        auto monoids = enumerate_commutative_monoids(5);
        std::vector<PermutativeGroupoid> gs;
        for (const auto& m : monoids) gs.push_back(from_commutative_monoid(m));
        gs.push_back(sign_groupoid());
        for (const auto& p : gs) {
            cases++;
            auto n = nerve(p);
            auto pres = k0_presentation(*n);
            auto nerve_k0 = k0_group(pres);
            auto pi = pi0_monoid(p);
            auto completion = group_completion(pi.monoid.presentation());
            // explicit generator-level map: object class unit vectors
            IntMatrix m(pi.monoid.size(), static_cast<int>(pres.generators.size()));
            auto nv = std::static_pointer_cast<const Nerve>(n);
            for (int j = 0; j < static_cast<int>(pres.generators.size()); ++j) {
                auto [obj, mor] = nv->decode(eta(), pres.generators[j]);
                m(pi.class_of_object[obj[0]], j) = 1;
            }
            if (!GroupHom(nerve_k0, completion, std::move(m)).is_isomorphism()) bad++;
        }
        add_line(r, "nerve-k0-is-group-completion", bad == 0,
                 std::to_string(cases) + " groupoids (all monoids of order <= 5 + sign), " +
                     std::to_string(bad) + " failures",
                 t);
    }
    {
        Timer t;
        int bad = 0, picard_cases = 0, non_injective_seen = 0;
        auto monoids = enumerate_commutative_monoids(5);
        std::vector<PermutativeGroupoid> gs;
        for (const auto& m : monoids) gs.push_back(from_commutative_monoid(m));
        gs.push_back(sign_groupoid());
        for (const auto& p : gs) {
            auto n = nerve(p);
            if (is_picard(p)) {
                picard_cases++;
                if (!lambda_bijective(*n)) bad++;
            } else {
                if (!lambda(*n).injective) non_injective_seen++;
            }
        }
        add_line(r, "lambda-bijective-iff-picard", bad == 0 && non_injective_seen >= 1,
                 std::to_string(picard_cases) + " Picard nerves bijective; " +
                     std::to_string(non_injective_seen) + " non-Picard injectivity failures seen",
                 t);
    }
    return r;
}

// ---- suite: horn attachments leave K0 unchanged ------------------------------

inline SuiteResult verify_attachments(std::uint64_t seed, int count = 100) {
    using namespace verify_detail;
    SuiteResult r{"prop-3-5"};
    Timer t;
    std::mt19937_64 rng(seed);
    auto catalog = attachment_base_catalog();
    auto trees = enumerate_trees(3, 3);
    std::vector<Tree> horned;
    for (const auto& tr : trees)
        if (tr.vertex_count() >= 1) horned.push_back(tr);
    std::uniform_int_distribution<int> pick_base(0, static_cast<int>(catalog.size()) - 1);
    std::uniform_int_distribution<int> pick_tree(0, static_cast<int>(horned.size()) - 1);
    int done = 0, bad = 0, attempts = 0;
    while (done < count && attempts < count * 100) {
        attempts++;
        const auto& [name, base] = catalog[pick_base(rng)];
        const Tree& tree = horned[pick_tree(rng)];
        auto labels = horn_labels(tree);
        std::uniform_int_distribution<int> pick_label(0, static_cast<int>(labels.size()) - 1);
        std::string label = labels[pick_label(rng)];
        auto maps = horn_maps(*base, tree, label);
        if (maps.empty()) continue;
        std::uniform_int_distribution<int> pick_map(0, static_cast<int>(maps.size()) - 1);
        const auto& hm = maps[pick_map(rng)];
        auto attaching = as_dend_map(base, hm);
        auto res = attach_cell(base, tree, label, attaching);
        if (!induced(res.inclusion).is_isomorphism()) bad++;
        done++;
    }
    add_line(r, "horn-attachment-k0-invariance", done == count && bad == 0,
             std::to_string(done) + " attachments, " + std::to_string(bad) + " failures", t);
    return r;
}

// ---- suite: quotient K0 is the cokernel --------------------------------------

inline SuiteResult verify_quotients(std::uint64_t seed, int count = 25) {
    using namespace verify_detail;
    SuiteResult r{"cofibre"};
    Timer t;
    std::mt19937_64 rng(seed);
    auto trees = enumerate_trees(3, 3);
    std::vector<Tree> horned;
    for (const auto& tr : trees)
        if (tr.vertex_count() >= 1) horned.push_back(tr);
    std::uniform_int_distribution<int> pick_tree(0, static_cast<int>(horned.size()) - 1);

    auto disc = [](std::vector<std::string> el, int unit, std::vector<std::vector<int>> tab) {
        return from_commutative_monoid(CommMonoidTable{std::move(el), unit, std::move(tab)});
    };
    std::vector<std::pair<DSet, DSet>> fixed_pairs;
    fixed_pairs.push_back({nerve(disc({"0", "1"}, 0, {{0, 1}, {1, 0}})),
                           nerve(disc({"0"}, 0, {{0}}))});
    fixed_pairs.push_back({nerve(disc({"0", "1", "2"}, 0, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}})),
                           nerve(disc({"0", "2"}, 0, {{0, 1}, {1, 1}}))});
    {
        SimplicialSetFin sub;
        sub.vertices = {"p"};
        fixed_pairs.push_back({extension_by_zero(interval_complex()), extension_by_zero(sub)});
        SimplicialSetFin sub2;
        sub2.vertices = {"n0", "n1"};
        sub2.edges.push_back({"f01", 0, 1});
        fixed_pairs.push_back(
            {extension_by_zero(poset_nerve_complex()), extension_by_zero(sub2)});
    }

    int done = 0, bad = 0;
    std::uniform_int_distribution<int> kind(0, 5);
    while (done < count) {
        DSet d, sub;
        int k = kind(rng);
        if (k <= 3) {
            const Tree& tree = horned[pick_tree(rng)];
            d = representable(tree);
            if (k == 0) sub = boundary(tree);
            if (k == 1) {
                auto labels = horn_labels(tree);
                std::uniform_int_distribution<int> pick_label(
                    0, static_cast<int>(labels.size()) - 1);
                sub = horn(tree, labels[pick_label(rng)]);
            }
            if (k == 2) sub = segal_core(tree);
            if (k == 3) sub = empty_set();
        } else {
            std::uniform_int_distribution<int> pick_pair(
                0, static_cast<int>(fixed_pairs.size()) - 1);
            auto& pr = fixed_pairs[pick_pair(rng)];
            d = pr.first;
            sub = pr.second;
        }
        auto q = quotient(d, sub);
        bool ok = colimit_check_quotient(d, sub, q.set);
        // and the plain cokernel description
        auto incl = induced(inclusion_map(sub, d));
        auto coker = cokernel_of_hom(incl);
        auto pres_q = k0_presentation(*q.set);
        const auto sub_etas = sub->dendrices(eta());
        auto pres_d = k0_presentation(*d);
        IntMatrix m(static_cast<int>(pres_q.generators.size()),
                    static_cast<int>(pres_d.generators.size()));
        for (int j = 0; j < static_cast<int>(pres_d.generators.size()); ++j) {
            const Dendrex& g = pres_d.generators[j];
            Dendrex img = std::binary_search(sub_etas.begin(), sub_etas.end(), g)
                              ? Quotient::basepoint()
                              : g;
            m(pres_q.generator_index(img), j) = 1;
        }
        ok &= GroupHom(coker, k0_group(pres_q), std::move(m)).is_isomorphism();
        if (!ok) bad++;
        done++;
    }
    add_line(r, "quotient-k0-is-cokernel", bad == 0,
             std::to_string(done) + " (D, D0) pairs, " + std::to_string(bad) + " failures", t);
    return r;
}

// ---- suite: Kan characterizations at bounds (3,3) ----------------------------

inline SuiteResult verify_kan(int max_vertices = 3, int max_arity = 3) {
    using namespace verify_detail;
    SuiteResult r{"kan"};
    auto corpus = corpus_groupoids();
    {
        Timer t;
        int bad = 0;
        for (const auto& [name, p] : corpus)
            if (!check_inner_kan(*nerve(p), max_vertices, max_arity).pass) bad++;
        add_line(r, "nerves-inner-kan", bad == 0,
                 std::to_string(corpus.size()) + " corpus nerves at bounds (" +
                     std::to_string(max_vertices) + "," + std::to_string(max_arity) + ")",
                 t);
    }
    {
        Timer t;
        std::vector<SimplicialSetFin> xs{point_complex(), interval_complex(),
                                         poset_nerve_complex(), circle_complex()};
        int bad = 0;
        for (const auto& X : xs) {
            auto rep = check_fully_kan(*extension_by_zero(X), max_vertices, max_arity);
            if (rep.pass) bad++;
            // the witness must be a corolla horn
            if (rep.counterexample &&
                parse_tree(rep.counterexample->tree).vertex_count() != 1)
                bad++;
        }
        add_line(r, "extension-by-zero-never-fully-kan", bad == 0,
                 std::to_string(xs.size()) + " nonempty complexes all fail at a corolla horn",
                 t);
    }
    {
        Timer t;
        int bad = 0;
        std::string detail;
        for (const auto& [name, p] : corpus) {
            bool full = check_fully_kan(*nerve(p), max_vertices, max_arity).pass;
            bool picard = is_picard(p);
            if (full != picard) bad++;
            detail += name + (full ? "+" : "-");
            detail += " ";
        }
        add_line(r, "fully-kan-iff-picard", bad == 0, detail, t);
    }
    return r;
}

// ---- suite: Segal cores -------------------------------------------------------

inline SuiteResult verify_segal_cores() {
    using namespace verify_detail;
    SuiteResult r{"segal-core"};
    Timer t;
    auto corpus = trees_up_to_six_edges();
    int bad = 0;
    for (const auto& tree : corpus) {
        auto sc = segal_core(tree);
        auto rep = representable(tree);
        bool ok = free_of_rank(k0(*sc), static_cast<int>(tree.leaves().size()));
        ok &= induced(inclusion_map(sc, rep)).is_isomorphism();
        if (!ok) bad++;
    }
    add_line(r, "segal-core-k0-free-and-iso", bad == 0,
             std::to_string(corpus.size()) + " trees, " + std::to_string(bad) + " failures", t);
    return r;
}

// ---- suite: property oracles ---------------------------------------------------

inline SuiteResult verify_properties(std::uint64_t seed) {
    using namespace verify_detail;
    SuiteResult r{"properties"};
    {
        Timer t;
        auto window = shape_window(5, 4, 4);
        std::vector<DSet> sets{representable(parse_tree("e[c[a,b],d]")),
                               horn(corolla(2), "b"),
                               nerve(sign_groupoid()),
                               extension_by_zero(interval_complex()),
                               terminal_set()};
        bool ok = true;
        for (const auto& d : sets)
            for (const auto& s2 : window)
                for (const auto& x : d->dendrices(s2)) {
                    ok &= d->act(identity_map(s2), x) == x;
                    for (const auto& s1 : window)
                        for (const auto& m : hom(s1, s2)) {
                            Dendrex y = d->act(m, x);
                            ok &= d->has_dendrex(s1, y);
                            for (const auto& s0 : window)
                                for (const auto& m0 : hom(s0, s1))
                                    ok &= d->act(m0, y) == d->act(compose(m, m0), x);
                        }
                }
        add_line(r, "presheaf-functoriality", ok,
                 std::to_string(sets.size()) + " sets over the <=5-edge window", t);
    }
    {
        Timer t;
        auto window = shape_window(5, 4, 4);
        bool ok = true;
        long pairs = 0;
        for (const auto& s : window)
            for (const auto& u : window) {
                pairs++;
                auto fast = *hom_images(s, u);
                std::set<std::vector<EdgeId>> got(fast.begin(), fast.end());
                ok &= got.size() == fast.size();
                ok &= got == brute_hom_oracle(s, u);
            }
        add_line(r, "hom-vs-brute-force", ok, std::to_string(pairs) + " tree pairs (<=5 edges)",
                 t);
    }
    {
        Timer t;
        std::mt19937_64 rng(seed ^ 0x534e46u);
        std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
        bool ok = true;
        const int samples = 10000;
        for (int i = 0; i < samples; ++i) {
            IntMatrix m(dim(rng), dim(rng));
            for (int a = 0; a < m.rows(); ++a)
                for (int b = 0; b < m.cols(); ++b) m(a, b) = entry(rng);
            auto snf = smith_normal_form(m);
            ok &= snf.u * m * snf.v == snf.d;
            auto diag = snf.diagonal();
            Int prod = 1;
            for (int k = 1; k <= static_cast<int>(diag.size()); ++k) {
                prod *= diag[k - 1];
                if (prod != minors_gcd_oracle(m, k)) ok = false;
                if (diag[k - 1] == 0) break;
            }
            for (std::size_t k = 0; k + 1 < diag.size(); ++k)
                if (diag[k + 1] != 0 && (diag[k] == 0 || diag[k + 1] % diag[k] != 0)) ok = false;
        }
        add_line(r, "snf-vs-minors-gcd", ok, std::to_string(samples) + " random matrices <=5x5",
                 t);
    }
    {
        Timer t;
        bool ok = true;
        auto corpus = monoid_corpus_up_to_six();
        for (const auto& m : corpus) {
            auto completed = group_completion(m.presentation());
            ok &= matches_invariants(grothendieck_pairs_oracle(m), completed);
        }
        add_line(r, "group-completion-vs-pairs", ok,
                 std::to_string(corpus.size()) + " commutative monoids (<= order 6)", t);
    }
    return r;
}

// ---- registry -----------------------------------------------------------------

struct VerifyOptions {
    std::uint64_t seed = 20240901;
    int max_vertices = 3;
    int max_arity = 3;
};

inline std::vector<std::string> verify_suite_names() {
    return {"example-3-3", "lemma-3-4", "prop-3-2", "prop-3-5",
            "cofibre",     "kan",       "segal-core", "properties"};
}

inline SuiteResult run_verify_suite(const std::string& name, const VerifyOptions& o) {
    if (name == "example-3-3") return verify_representables();
    if (name == "lemma-3-4") return verify_horn_inclusions();
    if (name == "prop-3-2") return verify_nerves_and_simplicial(o.seed);
    if (name == "prop-3-5") return verify_attachments(o.seed);
    if (name == "cofibre") return verify_quotients(o.seed);
    if (name == "kan") return verify_kan(o.max_vertices, o.max_arity);
    if (name == "segal-core") return verify_segal_cores();
    if (name == "properties") return verify_properties(o.seed);
    throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace dendro

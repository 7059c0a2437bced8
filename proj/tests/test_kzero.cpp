#include <catch2/catch_amalgamated.hpp>

#include <dendro/kzero.hpp>

#include "oracles.hpp"

using namespace dendro;

namespace {

Tree example_tree() { return parse_tree("e[c[a,b],d]"); }

PermutativeGroupoid z2() {
    return from_commutative_monoid({{"0", "1"}, 0, {{0, 1}, {1, 0}}});
}
PermutativeGroupoid max2() {
    return from_commutative_monoid({{"0", "1"}, 0, {{0, 1}, {1, 1}}});
}

SimplicialSetFin interval() {
    SimplicialSetFin X;
    X.vertices = {"p", "q"};
    X.edges.push_back({"f", 0, 1});
    return X;
}

bool is_free_of_rank(const FgAbelianGroup& g, int r) {
    return g.free_rank() == r && g.torsion().empty();
}

}  // namespace

TEST_CASE("presentation of a representable corolla") {
    for (int n : {0, 1, 2, 3}) {
        auto pres = k0_presentation(*representable(corolla(n)));
        CHECK(static_cast<int>(pres.generators.size()) == n + 1);
        // one distinct relation (inputs sum to output); degenerate unary
        // collapses contribute only tautologies
        CHECK(pres.matrix.rows() == 1);
    }
    // C2: two permuted dendrices give the same row
    auto pres = k0_presentation(*representable(corolla(2)));
    auto m = pres.matrix;
    REQUIRE(m.rows() == 1);
    // row is a1 + a2 - b in some generator order
    std::multiset<long> coeffs;
    for (int j = 0; j < m.cols(); ++j) coeffs.insert(static_cast<long>(m(0, j)));
    CHECK(coeffs == std::multiset<long>{-1, 1, 1});
}

TEST_CASE("k0 of representables is free on the leaves (<=6 edges)") {
    for (const auto& t : enumerate_trees(5, 5)) {
        if (t.edge_count() > 6) continue;
        auto g = k0(*representable(t));
        INFO(t.text());
        CHECK(is_free_of_rank(g, static_cast<int>(t.leaves().size())));
    }
}

TEST_CASE("k0 of terminal and empty") {
    CHECK(k0(*terminal_set()).trivial());
    CHECK(k0(*empty_set()).trivial());
    CHECK(k0(*empty_set()).render() == "0");
}

TEST_CASE("nerve presentations") {
    auto n = nerve(z2());
    auto pres = k0_presentation(*n, 2, true);
    REQUIRE(pres.generators.size() == 2);  // the two objects
    // rows include 0 = [0] (unit nullary corolla) and [1]+[1] = [0]
    bool saw_unit_row = false, saw_sum_row = false;
    for (const auto& r : pres.rows) {
        if (r.arity == 0 && r.coeffs == std::vector<Int>{-1, 0}) saw_unit_row = true;
        if (r.arity == 2 && r.coeffs == std::vector<Int>{-1, 2}) saw_sum_row = true;
    }
    CHECK(saw_unit_row);
    CHECK(saw_sum_row);
    CHECK(k0(*n).render() == "Z/2");
}

TEST_CASE("extension by zero has only unary relation rows") {
    auto i = extension_by_zero(interval());
    auto pres = k0_presentation(*i, i->k0_arity_bound(), true);
    CHECK(pres.generators.size() == 2);
    for (const auto& r : pres.rows) CHECK(r.arity == 1);
    CHECK(k0(*i).render() == "Z");
}

TEST_CASE("arity bound stability for nerves") {
    for (const auto& [name, p] : corpus_groupoids()) {
        auto n = nerve(p);
        auto p2 = k0_presentation(*n, 2);
        auto p3 = k0_presentation(*n, 3);
        REQUIRE(p2.generators == p3.generators);
        GroupHom ident(k0_group(p2), k0_group(p3),
                       IntMatrix::identity(static_cast<int>(p2.generators.size())));
        INFO(name);
        CHECK(ident.is_isomorphism());
    }
}

TEST_CASE("induced maps along faces send a leaf to the leaves above its image") {
    Tree t = example_tree();
    auto r = representable(t);
    auto pres_t = k0_presentation(*r);
    auto g_t = k0_group(pres_t);
    for (const auto& f : faces(t)) {
        auto src = representable(f.map.source());
        DendMap dm{src, r, [&](const Tree&, const Dendrex& d) {
                       auto img = detail::token_images(f.map.source(), d);
                       std::vector<EdgeId> comp(img.size());
                       for (std::size_t e = 0; e < img.size(); ++e) comp[e] = f.map(img[e]);
                       return detail::map_token(t, comp);
                   }};
        auto h = induced(dm);
        CHECK(h.respects_relations());
        // leaf e of the source maps to the sum of the leaves of t above f(e)
        auto src_pres = k0_presentation(*src);
        for (EdgeId e : f.map.source().leaves()) {
            std::vector<Int> unit(src_pres.generators.size());
            unit[src_pres.generator_index(
                detail::map_token(f.map.source(), {e}))] = 1;
            auto img_class = h.apply_class(unit);
            // sum of leaves of t above f.map(e)
            std::vector<EdgeId> above;
            std::function<void(EdgeId)> walk = [&](EdgeId x) {
                int va = t.vertex_above(x);
                if (va < 0) {
                    above.push_back(x);
                    return;
                }
                for (EdgeId ii : t.vertex(va).inputs) walk(ii);
            };
            walk(f.map(e));
            std::vector<Int> sum(pres_t.generators.size());
            for (EdgeId l : above) sum[pres_t.generator_index(detail::map_token(t, {l}))] += 1;
            CHECK(img_class == g_t.class_of(sum));
        }
    }
}

TEST_CASE("horn inclusions induce isomorphisms (small sample)") {
    for (const auto& t : enumerate_trees(2, 3)) {
        auto r = representable(t);
        for (const auto& label : horn_labels(t)) {
            auto h = horn(t, label);
            INFO(t.text() + " @ " + label);
            CHECK(induced(inclusion_map(h, r)).is_isomorphism());
        }
    }
}

TEST_CASE("the three horn presentations of grafted corollas") {
    // displayed rows over generators a1..an, b1..b(k-1), bk, c
    auto row = [](const K0Presentation& p, std::map<std::string, long> want) {
        std::vector<Int> r(p.generators.size());
        for (auto& [name, coeff] : want) r[p.generator_index(Dendrex{"[" + name + "]"})] = coeff;
        return r;
    };
    for (int n = 0; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            Tree t = corolla_over_corolla(n, k);
            INFO("n=" << n << " k=" << k);
            auto labels = horn_labels(t);
            REQUIRE(labels.size() == 3);
            std::map<std::string, long> a_sum_eq_bk, b_sum_eq_c, mixed_eq_c;
            for (int i = 1; i <= n; ++i) a_sum_eq_bk["a" + std::to_string(i)] = 1;
            a_sum_eq_bk["bk"] -= 1;
            for (int j = 1; j < k; ++j) b_sum_eq_c["b" + std::to_string(j)] = 1;
            b_sum_eq_c["bk"] += 1;
            b_sum_eq_c["c"] -= 1;
            for (int j = 1; j < k; ++j) mixed_eq_c["b" + std::to_string(j)] = 1;
            for (int i = 1; i <= n; ++i) mixed_eq_c["a" + std::to_string(i)] += 1;
            mixed_eq_c["c"] -= 1;
            std::map<std::string, std::pair<std::map<std::string, long>,
                                            std::map<std::string, long>>>
                expected{{"bk", {a_sum_eq_bk, b_sum_eq_c}},
                         {"v:bk", {a_sum_eq_bk, mixed_eq_c}},
                         {"v:c", {b_sum_eq_c, mixed_eq_c}}};
            for (const auto& label : labels) {
                auto h = horn(t, label);
                auto pres = k0_presentation(*h);
                REQUIRE(pres.generators.size() == static_cast<std::size_t>(n + k + 1));
                auto [r1, r2] = expected.at(label);
                std::set<std::vector<Int>> want{row(pres, r1), row(pres, r2)};
                want.erase(std::vector<Int>(pres.generators.size()));  // n=0 or k=1 degenerate row
                auto m = pres.matrix;
                std::set<std::vector<Int>> got;
                for (int i = 0; i < m.rows(); ++i) got.insert(m.row(i));
                CHECK(got == want);
                CHECK(is_free_of_rank(k0_group(pres), n + k - 1));
            }
        }
}

TEST_CASE("pi0 and lambda") {
    auto i = extension_by_zero(interval());
    auto pi = pi0_underlying(*i);
    CHECK(pi.components.size() == 1);
    CHECK(is_free_of_rank(k0(*i), 1));

    auto n2 = nerve(z2());
    auto pi2 = pi0_underlying(*n2);
    CHECK(pi2.components.size() == 2);
    CHECK(lambda_bijective(*n2));

    auto nm = nerve(max2());
    auto pim = pi0_underlying(*nm);
    CHECK(pim.components.size() == 2);
    auto table = lambda(*nm);
    CHECK_FALSE(table.injective);
    CHECK(k0(*nm).trivial());
}

TEST_CASE("functoriality of induced maps") {
    Tree t = example_tree();
    auto r = representable(t);
    auto b = boundary(t);
    auto h = horn(t, "c");
    // horn -> boundary -> representable, all token inclusions
    auto f = induced(inclusion_map(h, b));
    auto g = induced(inclusion_map(b, r));
    auto gf = induced(inclusion_map(h, r));
    CHECK(f.then(g).matrix() == gf.matrix());
}

TEST_CASE("colimit checks") {
    // attach the C2 root horn to the nerve of Z/2 at (1,1)
    auto n = nerve(z2());
    auto nv = std::static_pointer_cast<const Nerve>(n);
    Tree t = corolla(2);
    auto h = horn(t, "b");
    DendMap attaching{h, n, [nv, t](const Tree& shape, const Dendrex& d) -> Dendrex {
                          auto img = detail::token_images(t, d);
                          std::vector<int> obj(shape.edge_count()), mor;
                          for (EdgeId e = 0; e < shape.edge_count(); ++e)
                              obj[e] = img[e] == 2 ? 0 : 1;
                          for (int v = 0; v < shape.vertex_count(); ++v)
                              mor.push_back(nv->groupoid().identity_mor[obj[
                                  shape.vertex(v).output]]);
                          return nv->encode(obj, mor);
                      }};
    auto res = attach_cell(n, t, "b", attaching);
    CHECK(colimit_check_attach(n, t, "b", attaching, res.set));
    CHECK(induced(res.inclusion).is_isomorphism());

    // quotient of a representable by a face-eta
    auto r2 = representable(corolla(2));
    auto sub = std::make_shared<SubRepresentable>(
        corolla(2), std::vector<OmegaMap>{edge_inclusion(corolla(2), 0)}, "leaf-a1");
    auto q = quotient(r2, sub);
    CHECK(colimit_check_quotient(r2, sub, q.set));
    CHECK(is_free_of_rank(k0(*q.set), 1));
    // and the coker description agrees
    auto proj_cok = cokernel_of_hom(induced(inclusion_map(sub, r2)));
    CHECK(proj_cok.free_rank() == 1);

    // disjoint unions
    auto u = disjoint_union({eta_set(), nerve(z2())});
    CHECK(colimit_check_union({eta_set(), nerve(z2())}, u.set));
    auto gu = k0(*u.set);
    CHECK(gu.free_rank() == 1);
    REQUIRE(gu.torsion().size() == 1);
    CHECK(gu.torsion()[0] == 2);
}

TEST_CASE("segal core k0 and the inclusion iso (<=6 edges)") {
    for (const auto& t : enumerate_trees(5, 5)) {
        if (t.edge_count() > 6) continue;
        auto sc = segal_core(t);
        auto g = k0(*sc);
        INFO(t.text());
        CHECK(is_free_of_rank(g, static_cast<int>(t.leaves().size())));
        CHECK(induced(inclusion_map(sc, representable(t))).is_isomorphism());
    }
}

TEST_CASE("quotient k0 equals the cokernel for boundary pairs") {
    for (const auto& t : {corolla(2), example_tree()}) {
        auto r = representable(t);
        auto b = boundary(t);
        auto q = quotient(r, b);
        CHECK(colimit_check_quotient(r, b, q.set));
    }
}

TEST_CASE("orbit dedup gives the same group") {
    // collapsing permuted corolla dendrices to one row per orbit leaves the
    // cokernel unchanged: the matrix already dedups identical rows, so
    // compare against a presentation built from one representative per row
    auto n = nerve(sign_groupoid());
    auto pres = k0_presentation(*n, n->k0_arity_bound(), true);
    auto full = k0_group(pres);
    std::set<std::vector<Int>> orbit_rows;
    for (const auto& r : pres.rows) orbit_rows.insert(r.coeffs);
    std::vector<std::vector<Int>> rows(orbit_rows.begin(), orbit_rows.end());
    auto dedup = FgAbelianGroup::cokernel(static_cast<int>(pres.generators.size()),
                                          IntMatrix::from_rows(rows));
    CHECK(full.free_rank() == dedup.free_rank());
    CHECK(full.torsion() == dedup.torsion());
}

#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include <dendro/tree.hpp>

#include "oracles.hpp"

using namespace dendro;

TEST_CASE("validate accepts eta and rejects disconnected data") {
    CHECK(validate(eta()).ok);
    Tree two = Tree::make({"x", "y"}, {});
    auto r = validate(two);
    CHECK_FALSE(r.ok);
    CHECK(r.violation.find("roots") != std::string::npos);
    CHECK(validate(parse_tree("e[c[a,b],d]")).ok);
}

TEST_CASE("leaves and inner edges") {
    Tree t = parse_tree("e[c[a,b],d]");
    auto name_set = [&](const std::vector<EdgeId>& es) {
        std::set<std::string> s;
        for (auto e : es) s.insert(t.edge_name(e));
        return s;
    };
    CHECK(name_set(t.leaves()) == std::set<std::string>{"a", "b", "d"});
    CHECK(name_set(t.inner_edges()) == std::set<std::string>{"c"});

    Tree c3 = corolla(3);
    CHECK(c3.leaves().size() == 3);
    CHECK(c3.inner_edges().empty());

    Tree c0 = parse_tree("r[]");
    CHECK(validate(c0).ok);
    CHECK(c0.leaves().empty());
    CHECK(c0.inner_edges().empty());
    CHECK(c0.vertex_count() == 1);
}

TEST_CASE("linear and corolla builders") {
    CHECK(are_isomorphic(linear(0), eta()));
    Tree c0 = corolla(0);
    CHECK(c0.edge_count() == 1);
    CHECK(c0.vertex_count() == 1);
    CHECK(c0.leaves().empty());
    Tree c2 = corolla(2);
    CHECK(c2.edge_count() == 3);
    CHECK(c2.vertex_count() == 1);
    CHECK(c2.leaves().size() == 2);
    CHECK(linear(2).edge_count() == 3);
    CHECK(linear(2).vertex_count() == 2);
    CHECK(linear(2).leaves().size() == 1);
}

TEST_CASE("graft") {
    Tree lower = corolla(2);
    auto bk = *lower.edge_index("a2");
    Tree g = graft(lower, bk, corolla(3));
    CHECK(are_isomorphic(g, corolla_over_corolla(3, 2)));
    CHECK(g.edge_count() == 3 + 4 - 1);  // lower edges + upper edges - identified
    // grafting eta is the identity
    Tree t = parse_tree("e[c[a,b],d]");
    CHECK(graft(t, *t.edge_index("a"), eta()).text() == t.text());
    CHECK(are_isomorphic(graft(eta(), 0, t), t));
    CHECK_THROWS_AS(graft(t, *t.edge_index("c"), eta()), std::invalid_argument);
}

TEST_CASE("spanned subtrees of the two-vertex example tree") {
    Tree t = parse_tree("e[c[a,b],d]");
    auto E = [&](const std::string& n) { return *t.edge_index(n); };

    auto full = spanned_subtree(t, E("e"), {E("a"), E("b"), E("d")});
    REQUIRE(full);
    CHECK(full->vertices.size() == 2);
    CHECK(full->edges.size() == 5);

    auto w_only = spanned_subtree(t, E("e"), {E("c"), E("d")});
    REQUIRE(w_only);
    CHECK(w_only->vertices.size() == 1);

    CHECK_FALSE(spanned_subtree(t, E("e"), {E("a"), E("d")}));  // branch b uncovered

    auto idop = spanned_subtree(t, E("a"), {E("a")});
    REQUIRE(idop);
    CHECK(idop->vertices.empty());
    CHECK(idop->edges == std::vector<EdgeId>{E("a")});

    // L = {} forces nullary caps
    CHECK_FALSE(spanned_subtree(t, E("e"), {}));
    Tree c0 = corolla(0);
    auto nullary = spanned_subtree(c0, c0.root(), {});
    REQUIRE(nullary);
    CHECK(nullary->vertices.size() == 1);
}

TEST_CASE("subtree leafsets") {
    Tree t = parse_tree("e[c[a,b],d]");
    auto E = [&](const std::string& n) { return *t.edge_index(n); };
    auto ls = subtree_leafsets(t, E("e"));
    std::set<std::vector<EdgeId>> got(ls.begin(), ls.end());
    std::set<std::vector<EdgeId>> want;
    want.insert({E("e")});
    {
        std::vector<EdgeId> v{E("c"), E("d")};
        std::sort(v.begin(), v.end());
        want.insert(v);
    }
    {
        std::vector<EdgeId> v{E("a"), E("b"), E("d")};
        std::sort(v.begin(), v.end());
        want.insert(v);
    }
    CHECK(got == want);
    CHECK(arity_ceiling(t) == 3);
    CHECK(arity_ceiling(eta()) == 1);
}

TEST_CASE("canonical codes: mirror images and relabelings") {
    Tree t1 = parse_tree("e[c[a,b],d]");
    Tree t2 = parse_tree("e[d,c[b,a]]");
    CHECK(t1.canonical_code() == t2.canonical_code());
    CHECK(are_isomorphic(t1, corolla_over_corolla(2, 2)));
    CHECK_FALSE(are_isomorphic(linear(2), corolla(2)));
    CHECK_FALSE(are_isomorphic(eta(), corolla(0)));
}

TEST_CASE("canonical code stability under 1000 random relabelings (<=6 edges)") {
    std::mt19937_64 rng(20240917);
    auto corpus = enumerate_trees(5, 5);
    int checked = 0;
    for (const auto& t : corpus) {
        if (t.edge_count() > 6) continue;
        // spread the budget over the corpus; heavy repetition on a few
        int reps = t.edge_count() <= 4 ? 50 : 20;
        for (int i = 0; i < reps; ++i) {
            Tree r = oracles::random_relabel(t, rng);
            REQUIRE(validate(r).ok);
            CHECK(r.canonical_code() == t.canonical_code());
            ++checked;
        }
    }
    CHECK(checked >= 1000);
}

TEST_CASE("are_isomorphic agrees with the exhaustive bijection oracle") {
    auto corpus = enumerate_trees(3, 3);
    std::vector<Tree> small;
    for (const auto& t : corpus)
        if (t.edge_count() <= 6) small.push_back(t);
    std::mt19937_64 rng(7);
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i; j < small.size(); ++j) {
            Tree a = oracles::random_relabel(small[i], rng);
            bool fast = are_isomorphic(a, small[j]);
            bool slow = oracles::brute_isomorphic(a, small[j]);
            CHECK(fast == slow);
            if (i == j) CHECK(fast);
        }
}

TEST_CASE("enumerate_trees: exactly one representative per class") {
    auto t0 = enumerate_trees(0, 3);
    REQUIRE(t0.size() == 1);
    CHECK(are_isomorphic(t0[0], eta()));

    auto t1 = enumerate_trees(1, 2);
    REQUIRE(t1.size() == 4);  // eta, C0, C1, C2

    auto t2 = enumerate_trees(2, 2);
    std::vector<Tree> oracle;
    oracles::gen_all_trees(2, 2, oracle);
    CHECK(t2.size() == oracle.size());
    // pairwise distinct and all validate
    for (std::size_t i = 0; i < t2.size(); ++i) {
        CHECK(validate(t2[i]).ok);
        for (std::size_t j = i + 1; j < t2.size(); ++j)
            CHECK_FALSE(are_isomorphic(t2[i], t2[j]));
    }
    // deterministic order
    auto again = enumerate_trees(2, 2);
    for (std::size_t i = 0; i < t2.size(); ++i) CHECK(t2[i].text() == again[i].text());
}

TEST_CASE("edge/vertex counting identity") {
    for (const auto& t : enumerate_trees(3, 3)) {
        int arity_sum = 0;
        for (const auto& v : t.vertices()) arity_sum += static_cast<int>(v.inputs.size());
        CHECK(t.edge_count() == 1 + arity_sum);
        bool has_nullary = false;
        for (const auto& v : t.vertices()) has_nullary |= v.inputs.empty();
        if (!has_nullary)
            CHECK(t.edge_count() == t.vertex_count() + static_cast<int>(t.leaves().size()));
    }
}

TEST_CASE("full upper subtree exists when no nullary vertex above") {
    for (const auto& t : enumerate_trees(3, 3)) {
        for (EdgeId e = 0; e < t.edge_count(); ++e) {
            // leaves of t strictly above e
            std::vector<EdgeId> above;
            bool nullary_above = false;
            std::function<void(EdgeId)> walk = [&](EdgeId x) {
                int va = t.vertex_above(x);
                if (va < 0) {
                    if (x != e) above.push_back(x);
                    else if (x == e && t.is_leaf(e)) above.push_back(x);
                    return;
                }
                if (t.vertex(va).inputs.empty()) nullary_above = true;
                for (EdgeId i : t.vertex(va).inputs) walk(i);
            };
            walk(e);
            if (nullary_above) continue;
            auto s = spanned_subtree(t, e, above);
            REQUIRE(s);
            // and its leaf set is exactly what we asked for
            std::vector<EdgeId> sorted_above = above;
            std::sort(sorted_above.begin(), sorted_above.end());
            CHECK(s->leaves == sorted_above);
        }
    }
}

TEST_CASE("parse/print round trip") {
    for (const char* txt : {"x", "r[]", "e[c[a,b],d]", "z[p[],q[l0,l1,l2]]"}) {
        Tree t = parse_tree(txt);
        CHECK(t.text() == txt);
        CHECK(are_isomorphic(parse_tree(t.text()), t));
    }
    CHECK_THROWS_AS(parse_tree("e[a,a]"), ParseError);
    CHECK_THROWS_AS(parse_tree("e[a,"), ParseError);
    CHECK_THROWS_AS(parse_tree(""), ParseError);
    CHECK_THROWS_AS(parse_tree("e[a] x"), ParseError);
}

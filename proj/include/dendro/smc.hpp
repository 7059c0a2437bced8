#pragma once

// Finite permutative (strict symmetric monoidal) groupoids given by tables.
// Tensor is strictly associative and unital; the symmetry tau_{a,b} is
// genuine structure. Discrete commutative monoids embed with tau = id.

#include <json.hpp>

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "intlin.hpp"
#include "tree.hpp"

namespace dendro {

using Json = nlohmann::json;

struct CommMonoidTable {
    std::vector<std::string> elements;
    int unit = 0;
    std::vector<std::vector<int>> table;

    int op(int a, int b) const { return table[a][b]; }
    int size() const { return static_cast<int>(elements.size()); }

    ValidationReport check() const {
        auto fail = [](std::string m) { return ValidationReport{false, std::move(m)}; };
        const int n = size();
        if (n == 0) return fail("monoid: empty");
        if (static_cast<int>(table.size()) != n) return fail("monoid: table rows != size");
        for (const auto& row : table) {
            if (static_cast<int>(row.size()) != n) return fail("monoid: table cols != size");
            for (int x : row)
                if (x < 0 || x >= n) return fail("monoid: entry out of range");
        }
        for (int a = 0; a < n; ++a) {
            if (op(unit, a) != a || op(a, unit) != a) return fail("monoid: unit law fails");
            for (int b = 0; b < n; ++b) {
                if (op(a, b) != op(b, a)) return fail("monoid: not commutative");
                for (int c = 0; c < n; ++c)
                    if (op(op(a, b), c) != op(a, op(b, c))) return fail("monoid: not associative");
            }
        }
        return {};
    }

    bool is_group() const {
        for (int a = 0; a < size(); ++a) {
            bool inv = false;
            for (int b = 0; b < size(); ++b) inv |= (op(a, b) == unit);
            if (!inv) return false;
        }
        return true;
    }

    MonoidPresentation presentation() const {
        MonoidPresentation p;
        p.gens = size();
        auto word = [&](std::initializer_list<int> elems) {
            std::vector<Int> w(size());
            for (int e : elems) w[e] += 1;
            return w;
        };
        p.relations.push_back({word({unit}), word({})});
        for (int a = 0; a < size(); ++a)
            for (int b = a; b < size(); ++b) p.relations.push_back({word({a, b}), word({op(a, b)})});
        return p;
    }
};

class PermutativeGroupoid {
public:
    struct Mor {
        std::string name;
        int src = -1, dst = -1;
    };

    std::vector<std::string> objects;
    int unit = 0;
    std::vector<std::vector<int>> tensor_obj;  // [a][b]
    std::vector<Mor> morphisms;
    std::vector<int> identity_mor;             // per object
    std::vector<int> inverse_mor;              // per morphism
    std::vector<std::vector<int>> comp;        // [g][f] = g after f, -1 if not composable
    std::vector<std::vector<int>> tmor;        // [f][g] = f tensor g
    std::vector<std::vector<int>> sym;         // [a][b] : a@b -> b@a

    int object_count() const { return static_cast<int>(objects.size()); }
    int morphism_count() const { return static_cast<int>(morphisms.size()); }

    int tensor(int a, int b) const { return tensor_obj[a][b]; }
    int tensor_objects(const std::vector<int>& xs) const {
        int acc = unit;
        for (int x : xs) acc = tensor(acc, x);
        return acc;
    }
    int compose2(int g, int f) const {  // g after f
        int r = comp[g][f];
        if (r < 0) throw std::invalid_argument("compose: morphisms not composable");
        return r;
    }
    int tensor2(int f, int g) const { return tmor[f][g]; }
    int tensor_morphisms(const std::vector<int>& fs) const {
        int acc = identity_mor[unit];
        for (int f : fs) acc = tensor2(acc, f);
        return acc;
    }

    std::vector<int> hom_set(int a, int b) const {
        std::vector<int> out;
        for (int f = 0; f < morphism_count(); ++f)
            if (morphisms[f].src == a && morphisms[f].dst == b) out.push_back(f);
        return out;
    }

    // hom(c1 @ ... @ cn, c); n = 0 uses the unit object
    std::vector<int> operations(const std::vector<int>& inputs, int output) const {
        return hom_set(tensor_objects(inputs), output);
    }

    // symmetry realizing an arbitrary rearrangement: the unique coherence iso
    // (tensor of xs) -> (tensor of xs permuted by perm), built from adjacent
    // transpositions; perm[k] = index into xs of the k-th output factor
    int symmetry_of_permutation(const std::vector<int>& xs, const std::vector<int>& perm) const {
        std::vector<int> cur(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) cur[i] = static_cast<int>(i);
        // bubble cur into perm; accumulate morphism source = tensor(xs)
        int acc = identity_mor[tensor_objects(xs)];
        for (std::size_t target_pos = 0; target_pos < perm.size(); ++target_pos) {
            std::size_t where = target_pos;
            while (cur[where] != perm[target_pos]) ++where;
            for (std::size_t p = where; p > target_pos; --p) {
                // swap positions p-1, p via id @ tau @ id
                std::vector<int> pre, post;
                for (std::size_t i = 0; i < p - 1; ++i) pre.push_back(xs[cur[i]]);
                for (std::size_t i = p + 1; i < cur.size(); ++i) post.push_back(xs[cur[i]]);
                int step = tensor2(
                    tensor2(identity_mor[tensor_objects(pre)], sym[xs[cur[p - 1]]][xs[cur[p]]]),
                    identity_mor[tensor_objects(post)]);
                acc = compose2(step, acc);
                std::swap(cur[p - 1], cur[p]);
            }
        }
        return acc;
    }

    const std::string& mor_name(int f) const { return morphisms[f].name; }
    int mor_index(const std::string& name) const {
        for (int f = 0; f < morphism_count(); ++f)
            if (morphisms[f].name == name) return f;
        throw std::invalid_argument("unknown morphism: " + name);
    }
    int obj_index(const std::string& name) const {
        for (int o = 0; o < object_count(); ++o)
            if (objects[o] == name) return o;
        throw std::invalid_argument("unknown object: " + name);
    }
};

// ---- validation -----------------------------------------------------------

inline ValidationReport validate(const PermutativeGroupoid& p) {
    auto fail = [](std::string m) { return ValidationReport{false, std::move(m)}; };
    const int n = p.object_count(), m = p.morphism_count();
    if (n == 0) return fail("no objects");
    if (p.unit < 0 || p.unit >= n) return fail("unit out of range");
    if (static_cast<int>(p.tensor_obj.size()) != n) return fail("tensor table incomplete");
    for (const auto& row : p.tensor_obj) {
        if (static_cast<int>(row.size()) != n) return fail("tensor table incomplete");
        for (int x : row)
            if (x < 0 || x >= n) return fail("tensor table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (p.tensor(p.unit, a) != a || p.tensor(a, p.unit) != a)
            return fail("tensor unit law fails on objects");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (p.tensor(p.tensor(a, b), c) != p.tensor(a, p.tensor(b, c)))
                    return fail("tensor associativity fails on objects");

    if (static_cast<int>(p.identity_mor.size()) != n) return fail("identity table incomplete");
    if (static_cast<int>(p.inverse_mor.size()) != m) return fail("inverse table incomplete");
    if (static_cast<int>(p.comp.size()) != m || static_cast<int>(p.tmor.size()) != m)
        return fail("composition/tensor tables incomplete");
    {
        std::set<std::string> names;
        for (const auto& f : p.morphisms) {
            if (f.src < 0 || f.src >= n || f.dst < 0 || f.dst >= n)
                return fail("morphism endpoints out of range");
            if (!names.insert(f.name).second) return fail("duplicate morphism name " + f.name);
        }
    }
    for (int o = 0; o < n; ++o) {
        int i = p.identity_mor[o];
        if (i < 0 || i >= m || p.morphisms[i].src != o || p.morphisms[i].dst != o)
            return fail("identity of " + p.objects[o] + " has wrong endpoints");
    }
    for (int g = 0; g < m; ++g) {
        if (static_cast<int>(p.comp[g].size()) != m) return fail("composition table incomplete");
        for (int f = 0; f < m; ++f) {
            bool composable = p.morphisms[f].dst == p.morphisms[g].src;
            int r = p.comp[g][f];
            if (!composable && r >= 0) return fail("composition defined on non-composable pair");
            if (composable) {
                if (r < 0) return fail("composition table partial");
                if (p.morphisms[r].src != p.morphisms[f].src ||
                    p.morphisms[r].dst != p.morphisms[g].dst)
                    return fail("composition endpoints wrong");
            }
        }
    }
    for (int f = 0; f < m; ++f) {
        int a = p.morphisms[f].src, b = p.morphisms[f].dst;
        if (p.comp[f][p.identity_mor[a]] != f || p.comp[p.identity_mor[b]][f] != f)
            return fail("identity law fails at " + p.mor_name(f));
        int i = p.inverse_mor[f];
        if (i < 0 || i >= m || p.morphisms[i].src != b || p.morphisms[i].dst != a)
            return fail("inverse of " + p.mor_name(f) + " has wrong endpoints");
        if (p.comp[i][f] != p.identity_mor[a] || p.comp[f][i] != p.identity_mor[b])
            return fail("inverse law fails at " + p.mor_name(f));
    }
    for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f) {
            if (p.morphisms[f].dst != p.morphisms[g].src) continue;
            for (int h = 0; h < m; ++h) {
                if (p.morphisms[g].dst != p.morphisms[h].src) continue;
                if (p.comp[p.comp[h][g]][f] != p.comp[h][p.comp[g][f]])
                    return fail("composition associativity fails");
            }
        }
    // tensor on morphisms
    for (int f = 0; f < m; ++f) {
        if (static_cast<int>(p.tmor[f].size()) != m) return fail("morphism tensor table incomplete");
        for (int g = 0; g < m; ++g) {
            int r = p.tmor[f][g];
            if (r < 0 || r >= m) return fail("morphism tensor table partial");
            if (p.morphisms[r].src != p.tensor(p.morphisms[f].src, p.morphisms[g].src) ||
                p.morphisms[r].dst != p.tensor(p.morphisms[f].dst, p.morphisms[g].dst))
                return fail("morphism tensor endpoints wrong");
        }
    }
    // symmetry
    if (static_cast<int>(p.sym.size()) != n) return fail("symmetry table incomplete");
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(p.sym[a].size()) != n) return fail("symmetry table incomplete");
        for (int b = 0; b < n; ++b) {
            int t = p.sym[a][b];
            if (t < 0 || t >= m) return fail("symmetry table partial");
            if (p.morphisms[t].src != p.tensor(a, b) || p.morphisms[t].dst != p.tensor(b, a))
                return fail("symmetry endpoints wrong");
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.comp[p.sym[b][a]][p.sym[a][b]] != p.identity_mor[p.tensor(a, b)])
                return fail("symmetry inverse law fails");
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g) {
            int a = p.morphisms[f].src, a2 = p.morphisms[f].dst;
            int b = p.morphisms[g].src, b2 = p.morphisms[g].dst;
            if (p.comp[p.sym[a2][b2]][p.tmor[f][g]] != p.comp[p.tmor[g][f]][p.sym[a][b]])
                return fail("symmetry naturality fails");
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int lhs = p.sym[a][p.tensor(b, c)];
                int rhs = p.comp[p.tmor[p.identity_mor[b]][p.sym[a][c]]]
                                [p.tmor[p.sym[a][b]][p.identity_mor[c]]];
                if (lhs != rhs) return fail("symmetry hexagon fails");
            }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.tmor[p.identity_mor[a]][p.identity_mor[b]] != p.identity_mor[p.tensor(a, b)])
                return fail("tensor of identities is not an identity");
    for (int f = 0; f < m; ++f) {
        if (p.tmor[f][p.identity_mor[p.unit]] != f || p.tmor[p.identity_mor[p.unit]][f] != f)
            return fail("tensor unit law fails on morphisms");
        for (int g = 0; g < m; ++g)
            for (int h = 0; h < m; ++h)
                if (p.tmor[p.tmor[f][g]][h] != p.tmor[f][p.tmor[g][h]])
                    return fail("tensor associativity fails on morphisms");
    }
    // interchange: (f' o f) @ (g' o g) = (f' @ g') o (f @ g)
    for (int f = 0; f < m; ++f)
        for (int f2 = 0; f2 < m; ++f2) {
            if (p.morphisms[f].dst != p.morphisms[f2].src) continue;
            for (int g = 0; g < m; ++g)
                for (int g2 = 0; g2 < m; ++g2) {
                    if (p.morphisms[g].dst != p.morphisms[g2].src) continue;
                    if (p.tmor[p.comp[f2][f]][p.comp[g2][g]] !=
                        p.comp[p.tmor[f2][g2]][p.tmor[f][g]])
                        return fail("tensor functoriality (interchange) fails");
                }
        }
    return {};
}

// ---- constructions --------------------------------------------------------

inline PermutativeGroupoid from_commutative_monoid(const CommMonoidTable& t) {
    auto r = t.check();
    if (!r.ok) throw std::invalid_argument("from_commutative_monoid: " + r.violation);
    PermutativeGroupoid p;
    p.objects = t.elements;
    p.unit = t.unit;
    p.tensor_obj = t.table;
    const int n = t.size();
    for (int o = 0; o < n; ++o) {
        p.morphisms.push_back({"id" + t.elements[o], o, o});
        p.identity_mor.push_back(o);
        p.inverse_mor.push_back(o);
    }
    p.comp.assign(n, std::vector<int>(n, -1));
    p.tmor.assign(n, std::vector<int>(n, -1));
    for (int f = 0; f < n; ++f) {
        p.comp[f][f] = f;
        for (int g = 0; g < n; ++g) p.tmor[f][g] = t.op(f, g);
    }
    p.sym.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) p.sym[a][b] = p.identity_mor[t.op(a, b)];
    return p;
}

inline PermutativeGroupoid from_abelian_group(const CommMonoidTable& t) {
    if (!t.is_group())
        throw std::invalid_argument("from_abelian_group: table has no inverses");
    return from_commutative_monoid(t);
}

// two objects {0,1} under xor, each with automorphism group of order two,
// tau_{1,1} the nontrivial automorphism of 0 (sign tensor on morphisms)
inline PermutativeGroupoid sign_groupoid() {
    PermutativeGroupoid p;
    p.objects = {"0", "1"};
    p.unit = 0;
    p.tensor_obj = {{0, 1}, {1, 0}};
    // morphisms: (object, sign); sign multiplies under tensor and composition
    p.morphisms = {{"id0", 0, 0}, {"s0", 0, 0}, {"id1", 1, 1}, {"s1", 1, 1}};
    p.identity_mor = {0, 2};
    p.inverse_mor = {0, 1, 2, 3};
    auto obj_of = [](int f) { return f / 2; };
    auto sign_of = [](int f) { return f % 2; };
    auto mk = [](int obj, int sign) { return obj * 2 + sign; };
    p.comp.assign(4, std::vector<int>(4, -1));
    p.tmor.assign(4, std::vector<int>(4, -1));
    for (int f = 0; f < 4; ++f)
        for (int g = 0; g < 4; ++g) {
            if (obj_of(f) == obj_of(g)) p.comp[g][f] = mk(obj_of(f), sign_of(f) ^ sign_of(g));
            p.tmor[f][g] = mk(obj_of(f) ^ obj_of(g), sign_of(f) ^ sign_of(g));
        }
    p.sym = {{0, 2}, {2, 1}};  // tau_{1,1} = s0, all others identities
    return p;
}

// ---- pi0 and Picard -------------------------------------------------------

struct Pi0Result {
    CommMonoidTable monoid;
    std::vector<int> class_of_object;  // object -> class index
};

inline Pi0Result pi0_monoid(const PermutativeGroupoid& p) {
    const int n = p.object_count();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& f : p.morphisms) parent[find(f.src)] = find(f.dst);
    std::map<int, int> index;  // root -> class id, in object order
    std::vector<int> cls(n);
    Pi0Result out;
    for (int o = 0; o < n; ++o) {
        int r = find(o);
        auto it = index.find(r);
        if (it == index.end()) {
            it = index.emplace(r, static_cast<int>(out.monoid.elements.size())).first;
            out.monoid.elements.push_back("[" + p.objects[o] + "]");
        }
        cls[o] = it->second;
    }
    const int k = static_cast<int>(out.monoid.elements.size());
    out.monoid.unit = cls[p.unit];
    out.monoid.table.assign(k, std::vector<int>(k, -1));
    // induced operation; check well-definedness over all representative pairs
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int v = cls[p.tensor(a, b)];
            int& slot = out.monoid.table[cls[a]][cls[b]];
            if (slot < 0) slot = v;
            else if (slot != v)
                throw std::logic_error("pi0_monoid: tensor not well-defined on classes");
        }
    out.class_of_object = cls;
    auto rep = out.monoid.check();
    if (!rep.ok) throw std::logic_error("pi0_monoid: induced table invalid: " + rep.violation);
    return out;
}

inline bool is_picard(const PermutativeGroupoid& p) { return pi0_monoid(p).monoid.is_group(); }

// ---- enumeration of commutative monoids ------------------------------------

// one representative per isomorphism class, unit fixed at index 0
inline std::vector<CommMonoidTable> enumerate_commutative_monoids(int max_order) {
    std::vector<CommMonoidTable> out;
    for (int n = 1; n <= max_order; ++n) {
        std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
        for (int a = 0; a < n; ++a) t[0][a] = t[a][0] = a;
        std::set<std::string> seen;
        // fill entries (i,j), 1 <= i <= j, in lexicographic order
        std::vector<std::pair<int, int>> slots;
        for (int i = 1; i < n; ++i)
            for (int j = i; j < n; ++j) slots.push_back({i, j});
        std::function<bool()> assoc_ok = [&]() {
            for (int a = 1; a < n; ++a)
                for (int b = 1; b < n; ++b)
                    for (int c = 1; c < n; ++c) {
                        int ab = t[a][b], bc = t[b][c];
                        if (ab < 0 || bc < 0) continue;
                        int l = t[ab][c], r = t[a][bc];
                        if (l >= 0 && r >= 0 && l != r) return false;
                    }
            return true;
        };
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == slots.size()) {
                CommMonoidTable m{std::vector<std::string>{}, 0, t};
                for (int i = 0; i < n; ++i) m.elements.push_back(std::to_string(i));
                // canonical form over permutations of the non-unit elements
                std::vector<int> perm(n);
                for (int i = 0; i < n; ++i) perm[i] = i;
                std::string best;
                do {
                    std::string s;
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) {
                            // position of perm applied: entry (perm[i], perm[j])
                            int v = t[perm[i]][perm[j]];
                            int vi = static_cast<int>(
                                std::find(perm.begin(), perm.end(), v) - perm.begin());
                            s += static_cast<char>('a' + vi);
                        }
                    if (best.empty() || s < best) best = s;
                } while (std::next_permutation(perm.begin() + 1, perm.end()));
                if (seen.insert(best).second) out.push_back(std::move(m));
                return;
            }
            auto [i, j] = slots[k];
            for (int v = 0; v < n; ++v) {
                t[i][j] = t[j][i] = v;
                if (assoc_ok()) rec(k + 1);
            }
            t[i][j] = t[j][i] = -1;
        };
        rec(0);
    }
    return out;
}

// the shipped corpus used by the horn-filler suites
inline std::vector<std::pair<std::string, PermutativeGroupoid>> corpus_groupoids() {
    auto disc = [](std::vector<std::string> el, int unit,
                   std::vector<std::vector<int>> tab) {
        return from_commutative_monoid(CommMonoidTable{std::move(el), unit, std::move(tab)});
    };
    std::vector<std::pair<std::string, PermutativeGroupoid>> out;
    out.push_back({"trivial", disc({"0"}, 0, {{0}})});
    out.push_back({"z2", disc({"0", "1"}, 0, {{0, 1}, {1, 0}})});
    out.push_back({"z3", disc({"0", "1", "2"}, 0, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}})});
    out.push_back({"max2", disc({"0", "1"}, 0, {{0, 1}, {1, 1}})});
    out.push_back({"sat3", disc({"0", "1", "2"}, 0, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}})});
    out.push_back({"sign", sign_groupoid()});
    return out;
}

// ---- file format -----------------------------------------------------------
// {"kind":"discrete","elements":[...],"unit":"0","table":[[...]]}   or
// {"kind":"groupoid","objects":[...],"unit":...,"tensor":[[...]],
//  "morphisms":[{"id":..,"src":..,"dst":..}],"identities":{..},"inverses":{..},
//  "compose":[[g,f,gf]],"tensor_mor":[[f,g,fg]],"symmetry":[[a,b,tau]]}

inline CommMonoidTable monoid_from_json(const Json& j) {
    CommMonoidTable t;
    for (const auto& e : j.at("elements")) t.elements.push_back(e.get<std::string>());
    auto at = [&](const std::string& n) {
        for (int i = 0; i < t.size(); ++i)
            if (t.elements[i] == n) return i;
        throw std::invalid_argument("monoid table: unknown element " + n);
    };
    t.unit = at(j.at("unit").get<std::string>());
    for (const auto& row : j.at("table")) {
        std::vector<int> r;
        for (const auto& e : row) r.push_back(at(e.get<std::string>()));
        t.table.push_back(std::move(r));
    }
    auto rep = t.check();
    if (!rep.ok) throw std::invalid_argument("monoid table: " + rep.violation);
    return t;
}

inline PermutativeGroupoid groupoid_from_json(const Json& j) {
    std::string kind = j.value("kind", "discrete");
    if (kind == "discrete") return from_commutative_monoid(monoid_from_json(j));
    if (kind != "groupoid") throw std::invalid_argument("groupoid file: unknown kind " + kind);
    PermutativeGroupoid p;
    for (const auto& o : j.at("objects")) p.objects.push_back(o.get<std::string>());
    const int n = p.object_count();
    p.unit = p.obj_index(j.at("unit").get<std::string>());
    for (const auto& row : j.at("tensor")) {
        std::vector<int> r;
        for (const auto& e : row) r.push_back(p.obj_index(e.get<std::string>()));
        p.tensor_obj.push_back(std::move(r));
    }
    for (const auto& mj : j.at("morphisms"))
        p.morphisms.push_back({mj.at("id").get<std::string>(),
                               p.obj_index(mj.at("src").get<std::string>()),
                               p.obj_index(mj.at("dst").get<std::string>())});
    const int m = p.morphism_count();
    p.identity_mor.assign(n, -1);
    for (auto it = j.at("identities").begin(); it != j.at("identities").end(); ++it)
        p.identity_mor[p.obj_index(it.key())] = p.mor_index(it.value().get<std::string>());
    p.inverse_mor.assign(m, -1);
    for (auto it = j.at("inverses").begin(); it != j.at("inverses").end(); ++it)
        p.inverse_mor[p.mor_index(it.key())] = p.mor_index(it.value().get<std::string>());
    p.comp.assign(m, std::vector<int>(m, -1));
    for (const auto& row : j.at("compose"))
        p.comp[p.mor_index(row.at(0).get<std::string>())][p.mor_index(row.at(1).get<std::string>())] =
            p.mor_index(row.at(2).get<std::string>());
    p.tmor.assign(m, std::vector<int>(m, -1));
    for (const auto& row : j.at("tensor_mor"))
        p.tmor[p.mor_index(row.at(0).get<std::string>())][p.mor_index(row.at(1).get<std::string>())] =
            p.mor_index(row.at(2).get<std::string>());
    p.sym.assign(n, std::vector<int>(n, -1));
    for (const auto& row : j.at("symmetry"))
        p.sym[p.obj_index(row.at(0).get<std::string>())][p.obj_index(row.at(1).get<std::string>())] =
            p.mor_index(row.at(2).get<std::string>());
    auto rep = validate(p);
    if (!rep.ok) throw std::invalid_argument("groupoid file: " + rep.violation);
    return p;
}

}  // namespace dendro

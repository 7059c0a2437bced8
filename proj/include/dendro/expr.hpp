#pragma once

// The construction-document language consumed by the CLI:
//   repr(TREE) horn(TREE,LABEL) boundary(TREE) core(TREE) eta empty terminal
//   union(E1,E2,...) simplicial(FILE) nerve(FILE) attach(E,TREE,LABEL,MAPFILE)
//   quotient(E,SUBEXPR)
// TREE is the tree grammar plus the shorthands C(n), C(n,k), L(n).

#include "dset.hpp"
#include "kan.hpp"

#include <fstream>

namespace dendro {

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

namespace detail {

struct ExprParser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n')) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(pos, std::string("expected '") + c + "'");
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '_' || s[pos] == '-'))
            ++pos;
        return std::string(s.substr(start, pos - start));
    }
    // raw argument: up to a top-level ',' or ')' (tracking both bracket kinds)
    std::string raw_arg() {
        skip_ws();
        std::size_t start = pos;
        int depth = 0;
        while (pos < s.size()) {
            char c = s[pos];
            if (c == '[' || c == '(') depth++;
            if (c == ']' || c == ')') {
                if (c == ')' && depth == 0) break;
                depth--;
            }
            if (c == ',' && depth == 0) break;
            ++pos;
        }
        std::string out(s.substr(start, pos - start));
        while (!out.empty() && out.back() == ' ') out.pop_back();
        if (out.empty()) throw ParseError(start, "expected an argument");
        return out;
    }

    Tree tree_arg() {
        std::string raw = raw_arg();
        return parse_tree_expr(raw);
    }

    static Tree parse_tree_expr(const std::string& raw) {
        if ((raw.size() > 1 && (raw[0] == 'C' || raw[0] == 'L') && raw[1] == '(')) {
            if (raw.back() != ')') throw ParseError(raw.size(), "unterminated shorthand");
            std::string body = raw.substr(2, raw.size() - 3);
            auto comma = body.find(',');
            auto to_int = [&](const std::string& x) {
                std::size_t used = 0;
                int v = std::stoi(x, &used);
                if (used != x.size()) throw ParseError(0, "bad number in shorthand: " + x);
                return v;
            };
            if (raw[0] == 'L') {
                if (comma != std::string::npos) throw ParseError(0, "L(n) takes one argument");
                return linear(to_int(body));
            }
            if (comma == std::string::npos) return corolla(to_int(body));
            return corolla_over_corolla(to_int(body.substr(0, comma)),
                                        to_int(body.substr(comma + 1)));
        }
        return parse_tree(raw);
    }
};

}  // namespace detail

// attaching-map file: {"assignments":[{"face":LABEL,"to":TOKEN},...]}
inline DendMap attaching_from_json(const Json& j, DSet target, const Tree& t,
                                   const std::string& label) {
    HornMap hm{t, label, {}, {}};
    std::map<std::string, std::string> by_face;
    for (const auto& a : j.at("assignments"))
        by_face[a.at("face").get<std::string>()] = a.at("to").get<std::string>();
    for (const auto& f : faces(t)) {
        if (f.label == label) continue;
        auto it = by_face.find(f.label);
        if (it == by_face.end())
            throw std::invalid_argument("attaching map: no assignment for face " + f.label);
        Dendrex img{it->second};
        if (!target->has_dendrex(f.map.source(), img))
            throw std::invalid_argument("attaching map: '" + img.v +
                                        "' is not a dendrex at the face " + f.label);
        hm.face_labels.push_back(f.label);
        hm.face_images.push_back(img);
    }
    return as_dend_map(std::move(target), hm);
}

struct EvaluatedExpr {
    DSet set;
    std::string text;  // normalized form
};

inline EvaluatedExpr evaluate_expr(std::string_view text);

namespace detail {

inline EvaluatedExpr eval_rec(ExprParser& p) {
    std::string head = p.word();
    if (head == "eta") return {eta_set(), "eta"};
    if (head == "empty") return {empty_set(), "empty"};
    if (head == "terminal") return {terminal_set(), "terminal"};
    if (head == "repr" || head == "boundary" || head == "core") {
        p.expect('(');
        Tree t = p.tree_arg();
        p.expect(')');
        DSet d = head == "repr" ? representable(t)
                 : head == "boundary" ? boundary(t)
                                      : segal_core(t);
        return {d, head + "(" + t.text() + ")"};
    }
    if (head == "horn") {
        p.expect('(');
        Tree t = p.tree_arg();
        p.expect(',');
        std::string label = p.raw_arg();
        p.expect(')');
        return {horn(t, label), "horn(" + t.text() + "," + label + ")"};
    }
    if (head == "union") {
        p.expect('(');
        std::vector<DSet> parts;
        std::string txt = "union(";
        while (true) {
            auto e = eval_rec(p);
            if (!parts.empty()) txt += ",";
            txt += e.text;
            parts.push_back(e.set);
            if (p.eat(',')) continue;
            p.expect(')');
            break;
        }
        return {disjoint_union(parts).set, txt + ")"};
    }
    if (head == "simplicial") {
        p.expect('(');
        std::string file = p.raw_arg();
        p.expect(')');
        return {extension_by_zero(simplicial_from_json(load_json_file(file))),
                "simplicial(" + file + ")"};
    }
    if (head == "nerve") {
        p.expect('(');
        std::string file = p.raw_arg();
        p.expect(')');
        return {nerve(groupoid_from_json(load_json_file(file))), "nerve(" + file + ")"};
    }
    if (head == "attach") {
        p.expect('(');
        auto base = eval_rec(p);
        p.expect(',');
        Tree t = p.tree_arg();
        p.expect(',');
        std::string label = p.raw_arg();
        p.expect(',');
        std::string file = p.raw_arg();
        p.expect(')');
        auto attaching = attaching_from_json(load_json_file(file), base.set, t, label);
        auto res = attach_cell(base.set, t, label, attaching);
        return {res.set,
                "attach(" + base.text + "," + t.text() + "," + label + "," + file + ")"};
    }
    if (head == "quotient") {
        p.expect('(');
        auto base = eval_rec(p);
        p.expect(',');
        auto sub = eval_rec(p);
        p.expect(')');
        return {quotient(base.set, sub.set).set,
                "quotient(" + base.text + "," + sub.text + ")"};
    }
    throw ParseError(p.pos, "unknown construction '" + head + "'");
}

}  // namespace detail

inline EvaluatedExpr evaluate_expr(std::string_view text) {
    detail::ExprParser p{text};
    auto out = detail::eval_rec(p);
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError(p.pos, "trailing input after expression");
    return out;
}

}  // namespace dendro

#pragma once

// Exact integer linear algebra: Smith normal form with transformation
// matrices, finitely generated abelian groups presented as cokernels,
// induced maps between them, and group completion of commutative monoids.
// All entries are arbitrary-precision.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace dendro {

using Int = boost::multiprecision::cpp_int;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows[0].size()) : 0;
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw std::invalid_argument("from_rows: ragged rows");
            for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }
    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        IntMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& x = (*this)(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    IntMatrix transposed() const {
        IntMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<Int> row(int i) const {
        std::vector<Int> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {  // this * x
        if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply: size");
        std::vector<Int> y(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

struct SmithNormalForm {
    IntMatrix u, d, v;  // u * m * v = d, with u and v unimodular
    std::vector<Int> diagonal() const {
        std::vector<Int> out;
        int n = std::min(d.rows(), d.cols());
        for (int i = 0; i < n; ++i) out.push_back(d(i, i));
        return out;
    }
};

namespace detail {

inline void swap_rows(IntMatrix& m, int a, int b) {
    for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
inline void swap_cols(IntMatrix& m, int a, int b) {
    for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
inline void add_row(IntMatrix& m, int dst, int src, const Int& k) {  // row dst += k*row src
    for (int j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}
inline void add_col(IntMatrix& m, int dst, int src, const Int& k) {
    for (int i = 0; i < m.rows(); ++i) m(i, dst) += k * m(i, src);
}
inline void negate_row(IntMatrix& m, int r) {
    for (int j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace detail

// Pivoting by least absolute nonzero entry keeps coefficients small.
inline SmithNormalForm smith_normal_form(const IntMatrix& input) {
    using namespace detail;
    SmithNormalForm s{IntMatrix::identity(input.rows()), input, IntMatrix::identity(input.cols())};
    IntMatrix& d = s.d;
    const int R = d.rows(), C = d.cols();
    const int n = std::min(R, C);
    for (int k = 0; k < n; ++k) {
        // find least |nonzero| pivot in the remaining block
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = k; i < R; ++i)
            for (int j = k; j < C; ++j) {
                if (d(i, j) == 0) continue;
                Int a = abs(d(i, j));
                if (pi < 0 || a < best) {
                    pi = i;
                    pj = j;
                    best = a;
                }
            }
        if (pi < 0) break;  // rest is zero
        if (pi != k) { swap_rows(d, k, pi); swap_rows(s.u, k, pi); }
        if (pj != k) { swap_cols(d, k, pj); swap_cols(s.v, k, pj); }
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = k + 1; i < R; ++i) {
                if (d(i, k) == 0) continue;
                Int q = d(i, k) / d(k, k);
                add_row(d, i, k, -q);
                add_row(s.u, i, k, -q);
                if (d(i, k) != 0) {  // remainder is smaller: make it the pivot
                    swap_rows(d, k, i);
                    swap_rows(s.u, k, i);
                    clean = false;
                }
            }
            for (int j = k + 1; j < C; ++j) {
                if (d(k, j) == 0) continue;
                Int q = d(k, j) / d(k, k);
                add_col(d, j, k, -q);
                add_col(s.v, j, k, -q);
                if (d(k, j) != 0) {
                    swap_cols(d, k, j);
                    swap_cols(s.v, k, j);
                    clean = false;
                }
            }
        }
        if (d(k, k) < 0) { negate_row(d, k); negate_row(s.u, k); }
    }
    // enforce the divisibility chain d_k | d_{k+1}
    for (int k = 0; k + 1 < n; ++k) {
        for (int j = k + 1; j < n; ++j) {
            if (d(j, j) == 0) continue;
            if (d(k, k) == 0) {  // move the nonzero up
                swap_rows(d, k, j); swap_rows(s.u, k, j);
                swap_cols(d, k, j); swap_cols(s.v, k, j);
                k = -1;
                break;
            }
            if (d(j, j) % d(k, k) == 0) continue;
            // mix and re-diagonalize the 2x2 block (gcd / lcm)
            add_col(d, k, j, 1);
            add_col(s.v, k, j, 1);
            while (true) {
                if (d(j, k) == 0) break;
                Int q = d(j, k) / d(k, k);
                add_row(d, j, k, -q);
                add_row(s.u, j, k, -q);
                if (d(j, k) == 0) break;
                swap_rows(d, k, j);
                swap_rows(s.u, k, j);
            }
            // clear the fill-in above
            if (d(k, j) != 0) {
                Int q = d(k, j) / d(k, k);
                add_col(d, j, k, -q);
                add_col(s.v, j, k, -q);
            }
            if (d(k, k) < 0) { negate_row(d, k); negate_row(s.u, k); }
            if (d(j, j) < 0) { negate_row(d, j); negate_row(s.u, j); }
            k = -1;  // restart: mixing may break earlier pairs
            break;
        }
    }
    // identity check; elementary ops guarantee unimodularity
    if (!(s.u * input * s.v == d)) throw std::logic_error("smith_normal_form: U m V != D");
    return s;
}

// ---- finitely generated abelian groups -----------------------------------

// Z^gens / row lattice(relations). Canonical data = invariant factors > 1
// plus the free rank; V from the SNF of the relation matrix converts
// generator vectors to canonical coordinates.
class FgAbelianGroup {
public:
    FgAbelianGroup() = default;

    static FgAbelianGroup cokernel(int gens, IntMatrix relations) {
        if (relations.cols() != gens) {
            if (relations.rows() == 0) relations = IntMatrix(0, gens);
            else throw std::invalid_argument("cokernel: relation width != generator count");
        }
        FgAbelianGroup g;
        g.gens_ = gens;
        g.rels_ = std::move(relations);
        auto s = smith_normal_form(g.rels_);
        g.vt_ = s.v.transposed();
        g.diag_ = s.diagonal();
        g.lattice_rank_ = 0;
        for (const auto& x : g.diag_)
            if (x != 0) g.lattice_rank_++;
        for (const auto& x : g.diag_)
            if (x > 1) g.torsion_.push_back(x);
        std::sort(g.torsion_.begin(), g.torsion_.end());
        return g;
    }

    int generator_count() const { return gens_; }
    const IntMatrix& relations() const { return rels_; }
    int free_rank() const { return gens_ - lattice_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    bool trivial() const { return free_rank() == 0 && torsion_.empty(); }
    bool finite() const { return free_rank() == 0; }
    Int order() const {  // only when finite
        Int o = 1;
        for (const auto& d : torsion_) o *= d;
        return o;
    }

    // canonical coordinates: torsion coordinates reduced mod d, then the free
    // coordinates; unit factors dropped
    std::vector<Int> class_of(const std::vector<Int>& x) const {
        auto y = vt_.apply(x);
        std::vector<Int> out;
        for (int i = 0; i < gens_; ++i) {
            Int d = i < static_cast<int>(diag_.size()) ? diag_[i] : Int(0);
            if (d == 1) continue;
            if (d == 0) {
                out.push_back(y[i]);
            } else {
                Int r = y[i] % d;
                if (r < 0) r += d;
                out.push_back(r);
            }
        }
        return out;
    }

    bool in_relation_lattice(const std::vector<Int>& x) const {
        auto y = vt_.apply(x);
        for (int i = 0; i < gens_; ++i) {
            Int d = i < static_cast<int>(diag_.size()) ? diag_[i] : Int(0);
            if (d == 0) {
                if (y[i] != 0) return false;
            } else if (y[i] % d != 0) {
                return false;
            }
        }
        return true;
    }

    bool same_classes(const std::vector<Int>& a, const std::vector<Int>& b) const {
        return class_of(a) == class_of(b);
    }

    // `Z^r + Z/d1 + ... + Z/dk`; "Z" for rank one, "0" when trivial
    std::string render() const {
        std::ostringstream os;
        bool first = true;
        if (free_rank() == 1) { os << "Z"; first = false; }
        else if (free_rank() > 1) { os << "Z^" << free_rank(); first = false; }
        for (const auto& d : torsion_) {
            if (!first) os << " + ";
            os << "Z/" << d;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    int gens_ = 0;
    IntMatrix rels_;
    IntMatrix vt_;
    std::vector<Int> diag_;
    int lattice_rank_ = 0;
    std::vector<Int> torsion_;
};

inline FgAbelianGroup cokernel(const IntMatrix& relations) {
    return FgAbelianGroup::cokernel(relations.cols(), relations);
}

// ---- homomorphisms -------------------------------------------------------

// A homomorphism given on original generators: column j of `matrix` is the
// image of source generator j, written in target generators.
class GroupHom {
public:
    GroupHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix)
        : src_(std::move(source)), tgt_(std::move(target)), m_(std::move(matrix)) {
        if (m_.rows() != tgt_.generator_count() || m_.cols() != src_.generator_count())
            throw std::invalid_argument("GroupHom: matrix shape mismatch");
        if (!respects_relations())
            throw std::invalid_argument("GroupHom: matrix does not respect relations");
    }

    const FgAbelianGroup& source() const { return src_; }
    const FgAbelianGroup& target() const { return tgt_; }
    const IntMatrix& matrix() const { return m_; }

    bool respects_relations() const {
        for (int i = 0; i < src_.relations().rows(); ++i)
            if (!tgt_.in_relation_lattice(m_.apply(src_.relations().row(i)))) return false;
        return true;
    }

    std::vector<Int> apply_class(const std::vector<Int>& x) const {
        return tgt_.class_of(m_.apply(x));
    }

    bool is_surjective() const {
        // images of generators together with target relations must span Z^p
        const int p = tgt_.generator_count();
        IntMatrix b(p, m_.cols() + tgt_.relations().rows());
        for (int i = 0; i < p; ++i) {
            for (int j = 0; j < m_.cols(); ++j) b(i, j) = m_(i, j);
            for (int r = 0; r < tgt_.relations().rows(); ++r)
                b(i, m_.cols() + r) = tgt_.relations()(r, i);
        }
        auto g = FgAbelianGroup::cokernel(p, b.transposed());
        return g.trivial();
    }

    bool is_injective() const {
        // generators of {x : Mx in target lattice} must lie in the source lattice
        const int n = src_.generator_count();
        const int mt = tgt_.relations().rows();
        IntMatrix c(tgt_.generator_count(), n + mt);
        for (int i = 0; i < tgt_.generator_count(); ++i) {
            for (int j = 0; j < n; ++j) c(i, j) = m_(i, j);
            for (int r = 0; r < mt; ++r) c(i, n + r) = -tgt_.relations()(r, i);
        }
        auto s = smith_normal_form(c);
        // kernel basis: columns of V whose D-column is zero
        int rank = 0;
        auto diag = s.diagonal();
        for (const auto& d : diag)
            if (d != 0) rank++;
        for (int j = rank; j < c.cols(); ++j) {
            std::vector<Int> x(n);
            for (int i = 0; i < n; ++i) x[i] = s.v(i, j);
            if (!src_.in_relation_lattice(x)) return false;
        }
        return true;
    }

    bool is_isomorphism() const { return is_surjective() && is_injective(); }

    GroupHom then(const GroupHom& next) const {
        return {src_, next.tgt_, next.m_ * m_};
    }

private:
    FgAbelianGroup src_, tgt_;
    IntMatrix m_;
};

inline bool induced_iso_check(const GroupHom& h) { return h.is_isomorphism(); }

// ---- group completion ----------------------------------------------------

// A finitely presented commutative monoid: `gens` generators, relations as
// pairs of words (a word = generator exponent vector).
struct MonoidPresentation {
    int gens = 0;
    std::vector<std::pair<std::vector<Int>, std::vector<Int>>> relations;
};

// Grothendieck group = cokernel of the abelianized relation matrix.
inline FgAbelianGroup group_completion(const MonoidPresentation& p) {
    std::vector<std::vector<Int>> rows;
    for (const auto& [lhs, rhs] : p.relations) {
        if (static_cast<int>(lhs.size()) != p.gens || static_cast<int>(rhs.size()) != p.gens)
            throw std::invalid_argument("group_completion: word width != generator count");
        std::vector<Int> r(p.gens);
        for (int j = 0; j < p.gens; ++j) r[j] = lhs[j] - rhs[j];
        rows.push_back(std::move(r));
    }
    IntMatrix m = rows.empty() ? IntMatrix(0, p.gens) : IntMatrix::from_rows(rows);
    return FgAbelianGroup::cokernel(p.gens, m);
}

}  // namespace dendro

#ifndef ACS_LIE_ALGEBRA_HPP
#define ACS_LIE_ALGEBRA_HPP

#include <acs/matrix.hpp>
#include <acs/subspace.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace acs {

/// A finite-dimensional real Lie algebra given by its structure-constant
/// tensor over exact rationals: table[i][j] holds the coordinates of
/// [e_i, e_j]. The tensor is stored for all ordered pairs and skew-symmetry is
/// verified rather than implied, so malformed input is caught instead of being
/// silently symmetrized.
struct LieAlgebra {
    std::vector<std::string> basis_names;
    std::vector<std::vector<Vector>> table;

    std::size_t dim() const { return basis_names.size(); }

    const Vector& structure(std::size_t i, std::size_t j) const { return table[i][j]; }

    static LieAlgebra zero_algebra(std::size_t n, std::string prefix = "e")
    {
        LieAlgebra g;
        g.basis_names.reserve(n);
        for (std::size_t i = 0; i < n; ++i) g.basis_names.push_back(prefix + std::to_string(i + 1));
        g.table.assign(n, std::vector<Vector>(n, Vector(n, Rational(0))));
        return g;
    }

    /// Builds from the nonzero brackets [e_i, e_j] with i < j; the skew
    /// counterparts are filled in.
    static LieAlgebra from_brackets(std::vector<std::string> names,
                                    const std::vector<std::tuple<std::size_t, std::size_t, Vector>>& brackets)
    {
        LieAlgebra g = zero_algebra(names.size());
        g.basis_names = std::move(names);
        const std::size_t n = g.dim();
        for (const auto& [i, j, v] : brackets) {
            if (i >= n || j >= n || v.size() != n) throw error("bracket entry out of range");
            if (i == j) throw error("diagonal bracket entry must be zero");
            g.table[i][j] = v;
            g.table[j][i] = vec_neg(v);
        }
        return g;
    }
};

struct SkewViolation {
    std::size_t i, j;
    Vector residual; // [e_i,e_j] + [e_j,e_i]
};

struct JacobiViolation {
    std::size_t i, j, k;
    Vector residual;
};

struct ValidationReport {
    std::vector<SkewViolation> skew;
    std::vector<JacobiViolation> jacobi;
    bool ok() const { return skew.empty() && jacobi.empty(); }
};

/// Bilinear extension of the structure tensor.
inline Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y)
{
    const std::size_t n = g.dim();
    if (x.size() != n || y.size() != n) throw error("bracket operand length mismatch");
    Vector r(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            const Vector& c = g.table[i][j];
            const Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (c[k] != 0) r[k] += f * c[k];
        }
    }
    return r;
}

/// Same tensor extended with Gaussian-rational coefficients; the bracket of
/// the complexification g^C.
inline CVector bracket_complex(const LieAlgebra& g, const CVector& x, const CVector& y)
{
    const std::size_t n = g.dim();
    if (x.size() != n || y.size() != n) throw error("bracket operand length mismatch");
    CVector r(n, GaussianRational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Vector& c = g.table[i][j];
            const GaussianRational f = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (c[k] != 0) r[k] += f * GaussianRational(c[k]);
        }
    }
    return r;
}

inline ValidationReport validate(const LieAlgebra& g)
{
    ValidationReport rep;
    const std::size_t n = g.dim();
    if (g.table.size() != n) throw error("structure tensor has wrong shape");
    for (std::size_t i = 0; i < n; ++i) {
        if (g.table[i].size() != n) throw error("structure tensor has wrong shape");
        for (std::size_t j = 0; j < n; ++j)
            if (g.table[i][j].size() != n) throw error("structure tensor has wrong shape");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Vector r = vec_add(g.table[i][j], g.table[j][i]);
            if (!vec_is_zero(r)) rep.skew.push_back({i, j, r});
        }
    // Jacobi on basis triples i < j < k; bilinearity extends it everywhere.
    // [e_i, v] expands through the tensor directly to keep this O(n^4-ish).
    auto ad_basis = [&](std::size_t i, const Vector& v) {
        Vector r(n, Rational(0));
        for (std::size_t l = 0; l < n; ++l) {
            if (v[l] == 0) continue;
            const Vector& c = g.table[i][l];
            for (std::size_t t = 0; t < n; ++t)
                if (c[t] != 0) r[t] += v[l] * c[t];
        }
        return r;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector r = ad_basis(i, g.table[j][k]);
                r = vec_add(r, ad_basis(j, g.table[k][i]));
                r = vec_add(r, ad_basis(k, g.table[i][j]));
                if (!vec_is_zero(r)) rep.jacobi.push_back({i, j, k, r});
            }
    return rep;
}

/// Matrix of y -> [x, y].
inline LinearMap ad(const LieAlgebra& g, const Vector& x)
{
    const std::size_t n = g.dim();
    if (x.size() != n) throw error("ad operand length mismatch");
    LinearMap m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector col(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            const Vector& c = g.table[i][j];
            for (std::size_t k = 0; k < n; ++k)
                if (c[k] != 0) col[k] += x[i] * c[k];
        }
        m.set_col(j, col);
    }
    return m;
}

inline Subspace commutator_subalgebra(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!vec_is_zero(g.table[i][j])) gens.push_back(g.table[i][j]);
    return Subspace::from_vectors(n, gens);
}

/// Kernel of the stacked ad matrices.
inline Subspace center(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    Matrix stacked(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                stacked(j * n + k, i) = g.table[i][j][k];
    return kernel(stacked);
}

inline bool is_ideal(const LieAlgebra& g, const Subspace& s)
{
    if (s.ambient_dim() != g.dim()) throw error("ambient dimension mismatch");
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t r = 0; r < s.dim(); ++r)
            if (!s.contains(bracket(g, unit_vector(g.dim(), i), s.basis().row(r)))) return false;
    return true;
}

inline bool is_subalgebra(const LieAlgebra& g, const Subspace& s)
{
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t q = r + 1; q < s.dim(); ++q)
            if (!s.contains(bracket(g, s.basis().row(r), s.basis().row(q)))) return false;
    return true;
}

/// Span of all [a_r, b_s] over basis pairs.
inline Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b)
{
    std::vector<Vector> gens;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t s = 0; s < b.dim(); ++s)
            gens.push_back(bracket(g, a.basis().row(r), b.basis().row(s)));
    return Subspace::from_vectors(g.dim(), gens);
}

enum class SeriesKind { derived, lower_central };

/// terms holds the distinct members of the chain; the entry after the last
/// stored one would repeat it, so stabilized_at == terms.size() - 1.
struct SeriesReport {
    SeriesKind kind;
    std::vector<Subspace> terms;
    std::size_t stabilized_at = 0;
};

inline SeriesReport series(const LieAlgebra& g, SeriesKind kind)
{
    SeriesReport rep{kind, {}, 0};
    const Subspace whole = Subspace::full(g.dim());
    rep.terms.push_back(whole);
    while (true) {
        const Subspace& last = rep.terms.back();
        const Subspace next = (kind == SeriesKind::derived) ? bracket_span(g, last, last)
                                                            : bracket_span(g, whole, last);
        if (next == last) break;
        rep.terms.push_back(next);
    }
    rep.stabilized_at = rep.terms.size() - 1;
    return rep;
}

inline bool is_solvable(const LieAlgebra& g)
{
    return series(g, SeriesKind::derived).terms.back().dim() == 0;
}

inline bool is_nilpotent(const LieAlgebra& g)
{
    return series(g, SeriesKind::lower_central).terms.back().dim() == 0;
}

/// k for a k-step nilpotent algebra; the zero algebra has class 0 and a
/// nonzero abelian algebra class 1. nullopt when not nilpotent.
inline std::optional<std::size_t> nilpotency_class(const LieAlgebra& g)
{
    const SeriesReport rep = series(g, SeriesKind::lower_central);
    if (rep.terms.back().dim() != 0) return std::nullopt;
    return rep.terms.size() - 1;
}

struct Quotient {
    LieAlgebra algebra;
    LinearMap projection; // q x n, surjective homomorphism with kernel = ideal
    LinearMap section;    // n x q, right inverse onto the canonical complement
};

/// Quotient by an ideal. The complement is read off the non-pivot coordinates
/// of the ideal's echelon basis, so output is deterministic. Representative
/// independence of the bracket is verified, not assumed.
inline Quotient quotient(const LieAlgebra& g, const Subspace& ideal)
{
    const std::size_t n = g.dim();
    if (ideal.ambient_dim() != n) throw error("ambient dimension mismatch");
    if (!is_ideal(g, ideal)) throw error("quotient: subspace is not an ideal");

    const std::vector<std::size_t> comp = ideal.complement_coords();
    const std::size_t q = comp.size();

    LinearMap proj(q, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vector red = ideal.reduce(unit_vector(n, j));
        for (std::size_t k = 0; k < q; ++k) proj(k, j) = red[comp[k]];
    }
    LinearMap sect(n, q);
    for (std::size_t k = 0; k < q; ++k) sect(comp[k], k) = 1;

    Quotient out;
    out.projection = proj;
    out.section = sect;
    out.algebra = LieAlgebra::zero_algebra(q);
    for (std::size_t k = 0; k < q; ++k) out.algebra.basis_names[k] = g.basis_names[comp[k]];
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b)
            out.algebra.table[a][b] = proj.apply(bracket(g, sect.col(a), sect.col(b)));

    // representative independence: shifting a representative by the ideal
    // must not move the projected bracket
    for (std::size_t r = 0; r < ideal.dim(); ++r)
        for (std::size_t a = 0; a < q; ++a)
            if (!vec_is_zero(proj.apply(bracket(g, ideal.basis().row(r), sect.col(a)))))
                throw error("quotient bracket is not well defined");
    return out;
}

/// Transport of the bracket through an invertible map: the result has
/// [x,y]_new = p [p^-1 x, p^-1 y], i.e. p is an isomorphism from g onto it.
inline LieAlgebra change_basis(const LieAlgebra& g, const LinearMap& p)
{
    const std::size_t n = g.dim();
    if (p.rows() != n || p.cols() != n) throw error("change of basis has wrong shape");
    const std::optional<LinearMap> pinv = inverse(p);
    if (!pinv) throw error("change of basis is singular");
    LieAlgebra out = LieAlgebra::zero_algebra(n);
    out.basis_names = g.basis_names;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector v = p.apply(bracket(g, pinv->col(i), pinv->col(j)));
            out.table[i][j] = v;
            out.table[j][i] = vec_neg(v);
        }
    return out;
}

inline bool is_homomorphism(const LinearMap& f, const LieAlgebra& g1, const LieAlgebra& g2)
{
    if (f.cols() != g1.dim() || f.rows() != g2.dim()) throw error("homomorphism shape mismatch");
    for (std::size_t i = 0; i < g1.dim(); ++i)
        for (std::size_t j = i + 1; j < g1.dim(); ++j)
            if (f.apply(g1.table[i][j]) != bracket(g2, f.col(i), f.col(j))) return false;
    return true;
}

inline bool is_isomorphism(const LinearMap& f, const LieAlgebra& g1, const LieAlgebra& g2)
{
    if (g1.dim() != g2.dim()) return false;
    if (!inverse(f)) return false;
    return is_homomorphism(f, g1, g2);
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b)
{
    const std::size_t n = a.dim(), m = b.dim();
    LieAlgebra g = LieAlgebra::zero_algebra(n + m);
    for (std::size_t i = 0; i < n; ++i) g.basis_names[i] = a.basis_names[i];
    for (std::size_t i = 0; i < m; ++i) g.basis_names[n + i] = b.basis_names[i];
    for (std::size_t i = 0; i < n + m; ++i)
        for (std::size_t j = 0; j < n + m; ++j)
            if (g.basis_names[i] == g.basis_names[j] && i != j)
                throw error("direct sum: duplicate basis name '" + g.basis_names[i] + "'");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) g.table[i][j][k] = a.table[i][j][k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) g.table[n + i][n + j][n + k] = b.table[i][j][k];
    return g;
}

struct SubalgebraRestriction {
    LieAlgebra algebra;
    LinearMap inclusion; // n x d, columns are the echelon basis vectors
};

/// The subspace with its induced bracket, in echelon-basis coordinates.
/// Errors out if the subspace is not closed under the bracket.
inline SubalgebraRestriction restrict_to_subalgebra(const LieAlgebra& g, const Subspace& s)
{
    const std::size_t d = s.dim();
    SubalgebraRestriction out;
    out.inclusion = s.basis().transpose();
    out.algebra = LieAlgebra::zero_algebra(d);
    for (std::size_t i = 0; i < d; ++i) out.algebra.basis_names[i] = "s" + std::to_string(i + 1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vector v = bracket(g, s.basis().row(i), s.basis().row(j));
            const std::optional<Vector> c = s.coords(v);
            if (!c) throw error("subspace is not closed under the bracket");
            out.algebra.table[i][j] = *c;
        }
    return out;
}

} // namespace acs

#endif

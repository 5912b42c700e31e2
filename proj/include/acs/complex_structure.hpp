#ifndef ACS_COMPLEX_STRUCTURE_HPP
#define ACS_COMPLEX_STRUCTURE_HPP

#include <acs/lie_algebra.hpp>

#include <cstddef>
#include <utility>

namespace acs {

/// An almost complex structure: an endomorphism with J^2 = -I, testable
/// exactly over the rationals.
struct ComplexStructure {
    LinearMap j;

    std::size_t dim() const { return j.rows(); }

    bool squares_to_minus_identity() const
    {
        if (!j.is_square()) return false;
        return j * j == -LinearMap::identity(j.rows());
    }
};

namespace detail {
inline void require_complex_structure(const LieAlgebra& g, const ComplexStructure& J)
{
    if (J.dim() != g.dim()) throw error("complex structure has wrong dimension");
    if (!J.squares_to_minus_identity()) throw error("not a complex structure: J^2 != -I");
}
} // namespace detail

/// J[x,y] - [Jx,y] - [x,Jy] - J[Jx,Jy]. Vanishing for all x,y is
/// integrability; the expression is bilinear in (x,y), so basis pairs suffice.
inline Vector nijenhuis_defect(const LieAlgebra& g, const ComplexStructure& J, const Vector& x,
                               const Vector& y)
{
    detail::require_complex_structure(g, J);
    const Vector jx = J.j.apply(x), jy = J.j.apply(y);
    Vector r = J.j.apply(bracket(g, x, y));
    r = vec_sub(r, bracket(g, jx, y));
    r = vec_sub(r, bracket(g, x, jy));
    r = vec_sub(r, J.j.apply(bracket(g, jx, jy)));
    return r;
}

inline bool is_integrable(const LieAlgebra& g, const ComplexStructure& J)
{
    detail::require_complex_structure(g, J);
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!vec_is_zero(nijenhuis_defect(g, J, unit_vector(n, i), unit_vector(n, j))))
                return false;
    return true;
}

/// [Jx,Jy] = [x,y] on all basis pairs.
inline bool is_abelian(const LieAlgebra& g, const ComplexStructure& J)
{
    detail::require_complex_structure(g, J);
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (bracket(g, J.j.col(i), J.j.col(j)) != g.table[i][j]) return false;
    return true;
}

/// J[x,y] = [x,Jy]: the condition making g a complex Lie algebra.
inline bool is_complex_bilinear(const LieAlgebra& g, const ComplexStructure& J)
{
    detail::require_complex_structure(g, J);
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (J.j.apply(g.table[i][j]) != bracket(g, unit_vector(n, i), J.j.col(j))) return false;
    return true;
}

/// Same identity restricted to pairs from a subspace (which must be J-stable
/// and a subalgebra for the notion to mean anything; both are checked).
inline bool is_complex_bilinear_on(const LieAlgebra& g, const ComplexStructure& J, const Subspace& s)
{
    detail::require_complex_structure(g, J);
    if (apply_to_subspace(J.j, s) != s) throw error("subspace is not J-stable");
    if (!is_subalgebra(g, s)) throw error("subspace is not a subalgebra");
    for (std::size_t a = 0; a < s.dim(); ++a)
        for (std::size_t b = 0; b < s.dim(); ++b) {
            const Vector x = s.basis().row(a), y = s.basis().row(b);
            if (J.j.apply(bracket(g, x, y)) != bracket(g, x, J.j.apply(y))) return false;
        }
    return true;
}

inline bool anticommute(const ComplexStructure& J, const ComplexStructure& K)
{
    return J.j * K.j == -(K.j * J.j);
}

inline bool is_hypercomplex(const LieAlgebra& g, const ComplexStructure& J, const ComplexStructure& K)
{
    detail::require_complex_structure(g, J);
    detail::require_complex_structure(g, K);
    return anticommute(J, K) && is_integrable(g, J) && is_integrable(g, K);
}

inline bool is_abelian_hypercomplex(const LieAlgebra& g, const ComplexStructure& J,
                                    const ComplexStructure& K)
{
    detail::require_complex_structure(g, J);
    detail::require_complex_structure(g, K);
    return anticommute(J, K) && is_abelian(g, J) && is_abelian(g, K);
}

/// The splitting g^C = g^{1,0} + g^{0,1} into the +-i eigenspaces of J,
/// spanned by X - iJX and X + iJX.
struct Splitting {
    CSubspace g10;
    CSubspace g01;
};

inline Splitting splitting(const LieAlgebra& g, const ComplexStructure& J)
{
    detail::require_complex_structure(g, J);
    const std::size_t n = g.dim();
    std::vector<CVector> plus, minus;
    const GaussianRational i = GaussianRational::i();
    for (std::size_t k = 0; k < n; ++k) {
        const CVector x = complexify(unit_vector(n, k));
        const CVector jx = complexify(J.j.col(k));
        CVector a(n), b(n);
        for (std::size_t t = 0; t < n; ++t) {
            a[t] = x[t] - i * jx[t];
            b[t] = x[t] + i * jx[t];
        }
        plus.push_back(a);
        minus.push_back(b);
    }
    Splitting s;
    s.g10 = CSubspace::from_vectors(n, plus);
    s.g01 = CSubspace::from_vectors(n, minus);

    if (s.g10.dim() + s.g01.dim() != n || span_intersect(s.g10, s.g01).dim() != 0)
        throw error("splitting is not a direct sum"); // cannot happen for J^2 = -I
    // g^{0,1} is the conjugate of g^{1,0}
    std::vector<CVector> conj;
    for (std::size_t r = 0; r < s.g10.dim(); ++r) {
        CVector v = s.g10.basis().row(r);
        for (auto& z : v) z = z.conj();
        conj.push_back(v);
    }
    if (CSubspace::from_vectors(n, conj) != s.g01) throw error("splitting conjugation failed");
    return s;
}

inline bool is_complex_subalgebra(const LieAlgebra& g, const CSubspace& s)
{
    for (std::size_t a = 0; a < s.dim(); ++a)
        for (std::size_t b = a + 1; b < s.dim(); ++b)
            if (!s.contains(bracket_complex(g, s.basis().row(a), s.basis().row(b)))) return false;
    return true;
}

inline bool is_abelian_complex_subspace(const LieAlgebra& g, const CSubspace& s)
{
    for (std::size_t a = 0; a < s.dim(); ++a)
        for (std::size_t b = a + 1; b < s.dim(); ++b)
            if (!vec_is_zero(bracket_complex(g, s.basis().row(a), s.basis().row(b)))) return false;
    return true;
}

/// Whether g^{1,0} and g^{0,1} are abelian subalgebras of g^C.
inline std::pair<bool, bool> subalgebras_abelian(const LieAlgebra& g, const ComplexStructure& J)
{
    const Splitting s = splitting(g, J);
    return {is_abelian_complex_subspace(g, s.g10), is_abelian_complex_subspace(g, s.g01)};
}

/// ad(Jx) = R_{-J}(ad(x)), i.e. ad(Je_k) = -ad(e_k) J for every basis vector.
inline bool adjoint_holomorphy(const LieAlgebra& g, const ComplexStructure& J)
{
    detail::require_complex_structure(g, J);
    const std::size_t n = g.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const LinearMap lhs = ad(g, J.j.col(k));
        const LinearMap rhs = -(ad(g, unit_vector(n, k)) * J.j);
        if (lhs != rhs) return false;
    }
    return true;
}

/// ad*(Jx) = L_J(ad*(x)) on g*, with ad*(x) = -ad(x)^T and the induced dual
/// structure -J^T (from J alpha = -alpha J).
inline bool coadjoint_holomorphy(const LieAlgebra& g, const ComplexStructure& J)
{
    detail::require_complex_structure(g, J);
    const std::size_t n = g.dim();
    const LinearMap j_dual = -J.j.transpose();
    for (std::size_t k = 0; k < n; ++k) {
        const LinearMap coad = -ad(g, unit_vector(n, k)).transpose();
        const LinearMap coad_j = -ad(g, J.j.col(k)).transpose();
        if (coad_j != j_dual * coad) return false;
    }
    return true;
}

enum class Side { left, right };

struct GlWithStructure {
    LieAlgebra algebra;        // gl(n) as an n^2-dimensional Lie algebra
    ComplexStructure structure; // L_I (u -> I u) or R_I (u -> u I)
    Subspace commutant_subalgebra; // gl_C(V): endomorphisms commuting with I
};

/// gl(V) with the complex structure L_I or R_I induced by a complex
/// endomorphism I of V. Basis matrices E_ij are flattened row-major.
inline GlWithStructure gl_with_structure(std::size_t n, const LinearMap& I, Side side)
{
    if (n == 0 || n % 2 != 0) throw error("gl_with_structure requires positive even n");
    if (I.rows() != n || I.cols() != n || I * I != -LinearMap::identity(n))
        throw error("I is not a complex endomorphism");

    const std::size_t d = n * n;
    GlWithStructure out;
    out.algebra = LieAlgebra::zero_algebra(d);
    std::vector<Matrix> basis_mats;
    basis_mats.reserve(d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix e(n, n);
            e(i, j) = 1;
            out.algebra.basis_names[i * n + j] =
                "E" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            basis_mats.push_back(std::move(e));
        }
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            out.algebra.table[a][b] = Matrix(basis_mats[a] * basis_mats[b] - basis_mats[b] * basis_mats[a]).vec();

    LinearMap jm(d, d);
    for (std::size_t a = 0; a < d; ++a) {
        const Matrix img = (side == Side::left) ? Matrix(I * basis_mats[a]) : Matrix(basis_mats[a] * I);
        jm.set_col(a, img.vec());
    }
    out.structure = ComplexStructure{jm};
    out.commutant_subalgebra = commutant({I}, n);

    if (!is_integrable(out.algebra, out.structure))
        throw error("L_I/R_I failed integrability"); // asserted postcondition
    return out;
}

} // namespace acs

#endif

#ifndef ACS_AFFINE_HPP
#define ACS_AFFINE_HPP

#include <acs/complex_structure.hpp>
#include <acs/lie_algebra.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace acs {

/// Finite-dimensional real associative algebra as a multiplication-constant
/// tensor: m[i][j] holds the coordinates of e_i * e_j.
struct AssociativeAlgebra {
    std::vector<std::string> basis_names;
    std::vector<std::vector<Vector>> m;

    std::size_t dim() const { return basis_names.size(); }

    static AssociativeAlgebra zero_algebra(std::size_t n, const std::string& prefix = "e")
    {
        AssociativeAlgebra a;
        for (std::size_t i = 0; i < n; ++i) a.basis_names.push_back(prefix + std::to_string(i + 1));
        a.m.assign(n, std::vector<Vector>(n, Vector(n, Rational(0))));
        return a;
    }

    Vector product(const Vector& x, const Vector& y) const
    {
        const std::size_t n = dim();
        if (x.size() != n || y.size() != n) throw error("product operand length mismatch");
        Vector r(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y[j] == 0) continue;
                const Rational f = x[i] * y[j];
                for (std::size_t k = 0; k < n; ++k)
                    if (m[i][j][k] != 0) r[k] += f * m[i][j][k];
            }
        }
        return r;
    }

    /// Matrix of y -> x * y.
    LinearMap left_multiplication(const Vector& x) const
    {
        const std::size_t n = dim();
        LinearMap l(n, n);
        for (std::size_t j = 0; j < n; ++j) l.set_col(j, product(x, unit_vector(n, j)));
        return l;
    }
};

struct AlgebraCheck {
    bool associative = false;
    bool commutative = false;
};

/// Exhaustive basis-triple/pair check of associativity and commutativity.
inline AlgebraCheck check_algebra(const AssociativeAlgebra& a)
{
    const std::size_t n = a.dim();
    AlgebraCheck rep{true, true};
    for (std::size_t i = 0; i < n && rep.associative; ++i)
        for (std::size_t j = 0; j < n && rep.associative; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vector lhs = a.product(a.m[i][j], unit_vector(n, k));
                const Vector rhs = a.product(unit_vector(n, i), a.m[j][k]);
                if (lhs != rhs) {
                    rep.associative = false;
                    break;
                }
            }
    for (std::size_t i = 0; i < n && rep.commutative; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a.m[i][j] != a.m[j][i]) {
                rep.commutative = false;
                break;
            }
    return rep;
}

/// A complex associative algebra: real multiplication tensor together with
/// the multiplication-by-i endomorphism.
struct ComplexAlgebraStructure {
    AssociativeAlgebra base;
    LinearMap i_map;
};

/// i^2 = -I and complex bilinearity of the product, i(ab) = i(a)b = a i(b).
inline bool check_complex_algebra(const ComplexAlgebraStructure& c)
{
    const std::size_t n = c.base.dim();
    if (c.i_map.rows() != n || c.i_map.cols() != n) return false;
    if (c.i_map * c.i_map != -LinearMap::identity(n)) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector iab = c.i_map.apply(c.base.m[i][j]);
            const Vector ia_b = c.base.product(c.i_map.col(i), unit_vector(n, j));
            const Vector a_ib = c.base.product(unit_vector(n, i), c.i_map.col(j));
            if (iab != ia_b || iab != a_ib) return false;
        }
    return true;
}

/// The Lie algebra A + A with bracket
/// [(a,b),(a',b')] = (aa' - a'a, ab' - a'b). Basis order is the a-part
/// (named a1..am) followed by the b-part (b1..bm). Construction is refused
/// for non-associative input, where Jacobi can fail.
inline LieAlgebra aff(const AssociativeAlgebra& A)
{
    if (!check_algebra(A).associative) throw error("aff: algebra is not associative");
    const std::size_t m = A.dim();
    LieAlgebra g = LieAlgebra::zero_algebra(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        g.basis_names[i] = "a" + std::to_string(i + 1);
        g.basis_names[m + i] = "b" + std::to_string(i + 1);
    }
    auto embed = [m](const Vector& v, bool b_part) {
        Vector w(2 * m, Rational(0));
        for (std::size_t k = 0; k < m; ++k) w[(b_part ? m : 0) + k] = v[k];
        return w;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            g.table[i][j] = embed(vec_sub(A.m[i][j], A.m[j][i]), false); // [(e_i,0),(e_j,0)]
            g.table[i][m + j] = embed(A.m[i][j], true);                  // [(e_i,0),(0,e_j)]
            g.table[m + j][i] = vec_neg(g.table[i][m + j]);
        }
    const ValidationReport rep = validate(g);
    if (!rep.ok()) throw error("aff: construction produced an invalid Lie algebra");
    return g;
}

/// J(a,b) = (b,-a) on aff(A); in the fixed basis order this is the block
/// matrix [[0, I], [-I, 0]].
inline ComplexStructure standard_aff_J(const AssociativeAlgebra& A)
{
    const std::size_t m = A.dim();
    LinearMap j(2 * m, 2 * m);
    for (std::size_t k = 0; k < m; ++k) {
        j(m + k, k) = -1; // (e_k, 0) -> (0, -e_k)
        j(k, m + k) = 1;  // (0, e_k) -> (e_k, 0)
    }
    return ComplexStructure{j};
}

/// Sign convention for the second structure K on aff(A), A complex:
/// sec2 is K(a,b) = (-ia, ib), sec3 the variant K(a,b) = (ia, -ib).
enum class KSign { sec2, sec3 };

inline ComplexStructure standard_aff_K(const ComplexAlgebraStructure& C, KSign sign = KSign::sec2)
{
    if (!check_complex_algebra(C)) throw error("invalid complex structure on the algebra");
    const std::size_t m = C.base.dim();
    LinearMap k(2 * m, 2 * m);
    for (std::size_t p = 0; p < m; ++p) {
        const Vector ip = C.i_map.col(p);
        for (std::size_t q = 0; q < m; ++q) {
            const Rational s = (sign == KSign::sec2) ? Rational(-1) : Rational(1);
            k(q, p) = s * ip[q];          // a-part: -i a (sec2)
            k(m + q, m + p) = -s * ip[q]; // b-part: +i b (sec2)
        }
    }
    ComplexStructure K{k};
    if (!K.squares_to_minus_identity()) throw error("K^2 != -I");
    return K;
}

struct ConnectionReport {
    bool torsion_free = false;
    bool flat = false;
    bool j_parallel = false;
};

/// The bilinear map nabla_{(a,b)}(c,d) = (ac, ad) on aff(A): checks that it
/// is torsion-free for the aff bracket, has zero curvature, and commutes
/// with the standard J. All three hold for every associative A.
inline ConnectionReport connection_checks(const AssociativeAlgebra& A)
{
    const LieAlgebra g = aff(A);
    const std::size_t m = A.dim();
    const std::size_t n = 2 * m;

    // nabla_{e_t} as a matrix; only the a-part of the subscript acts
    std::vector<LinearMap> nabla(n, LinearMap(n, n));
    for (std::size_t t = 0; t < m; ++t) {
        const LinearMap l = A.left_multiplication(unit_vector(m, t));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                nabla[t](i, j) = l(i, j);
                nabla[t](m + i, m + j) = l(i, j);
            }
    }
    auto nabla_of = [&](const Vector& w) {
        LinearMap s(n, n);
        for (std::size_t t = 0; t < n; ++t)
            if (w[t] != 0) s = s + (w[t] * nabla[t]);
        return s;
    };

    ConnectionReport rep{true, true, true};
    for (std::size_t i = 0; i < n && rep.torsion_free; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector lhs = vec_sub(nabla[i].col(j), nabla[j].col(i));
            if (lhs != g.table[i][j]) {
                rep.torsion_free = false;
                break;
            }
        }
    for (std::size_t i = 0; i < n && rep.flat; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const LinearMap curv = nabla_of(g.table[i][j]) - (nabla[i] * nabla[j] - nabla[j] * nabla[i]);
            if (!curv.is_zero()) {
                rep.flat = false;
                break;
            }
        }
    const ComplexStructure J = standard_aff_J(A);
    for (std::size_t i = 0; i < n && rep.j_parallel; ++i)
        if (nabla[i] * J.j != J.j * nabla[i]) rep.j_parallel = false;
    return rep;
}

/// The commutative complex algebra of strictly upper triangular (k+1)x(k+1)
/// Toeplitz matrices: complex basis e_1..e_k with e_p e_q = e_{p+q} when
/// p+q <= k and 0 otherwise. Realified to dimension 2k with f_p = i e_p.
inline ComplexAlgebraStructure toeplitz_algebra(std::size_t k)
{
    if (k < 1) throw error("toeplitz_algebra requires k >= 1");
    const std::size_t n = 2 * k;
    AssociativeAlgebra a = AssociativeAlgebra::zero_algebra(n);
    for (std::size_t p = 0; p < k; ++p) {
        a.basis_names[p] = "e" + std::to_string(p + 1);
        a.basis_names[k + p] = "f" + std::to_string(p + 1);
    }
    for (std::size_t p = 1; p <= k; ++p)
        for (std::size_t q = 1; q <= k; ++q) {
            if (p + q > k) continue;
            const std::size_t s = p + q;
            a.m[p - 1][q - 1][s - 1] = 1;          // e_p e_q = e_s
            a.m[p - 1][k + q - 1][k + s - 1] = 1;  // e_p f_q = f_s
            a.m[k + p - 1][q - 1][k + s - 1] = 1;  // f_p e_q = f_s
            a.m[k + p - 1][k + q - 1][s - 1] = -1; // f_p f_q = -e_s
        }
    LinearMap i_map(n, n);
    for (std::size_t p = 0; p < k; ++p) {
        i_map(k + p, p) = 1;
        i_map(p, k + p) = -1;
    }
    ComplexAlgebraStructure c{a, i_map};
    if (!check_complex_algebra(c)) throw error("toeplitz_algebra: internal consistency failure");
    return c;
}

inline AssociativeAlgebra trivial_algebra(std::size_t n)
{
    return AssociativeAlgebra::zero_algebra(n);
}

/// R with its standard multiplication.
inline AssociativeAlgebra reals_algebra()
{
    AssociativeAlgebra a = AssociativeAlgebra::zero_algebra(1);
    a.m[0][0][0] = 1;
    return a;
}

/// C as a real algebra with basis 1, i and the multiplication-by-i map.
inline ComplexAlgebraStructure complexes_algebra()
{
    AssociativeAlgebra a = AssociativeAlgebra::zero_algebra(2);
    a.basis_names = {"one", "i"};
    a.m[0][0] = {1, 0};
    a.m[0][1] = {0, 1};
    a.m[1][0] = {0, 1};
    a.m[1][1] = {-1, 0};
    LinearMap i_map = {{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}};
    return ComplexAlgebraStructure{a, i_map};
}

/// Diagonal 2x2 matrices {{a,0},{0,b}}.
inline AssociativeAlgebra diag2_algebra()
{
    AssociativeAlgebra a = AssociativeAlgebra::zero_algebra(2);
    a.m[0][0] = {1, 0};
    a.m[1][1] = {0, 1};
    return a;
}

/// Matrices {{a,0},{b,a}}: unit e1 and nilpotent e2 with e2^2 = 0.
inline AssociativeAlgebra jordan2_algebra()
{
    AssociativeAlgebra a = AssociativeAlgebra::zero_algebra(2);
    a.m[0][0] = {1, 0};
    a.m[0][1] = {0, 1};
    a.m[1][0] = {0, 1};
    return a;
}

/// Matrices {{a,b},{b,a}}: unit e1 and e2 with e2^2 = e1.
inline AssociativeAlgebra split2_algebra()
{
    AssociativeAlgebra a = AssociativeAlgebra::zero_algebra(2);
    a.m[0][0] = {1, 0};
    a.m[0][1] = {0, 1};
    a.m[1][0] = {0, 1};
    a.m[1][1] = {1, 0};
    return a;
}

/// Upper triangular 2x2 matrices, the smallest noncommutative associative
/// algebra used in the tests: basis E11, E12, E22.
inline AssociativeAlgebra upper_triangular2_algebra()
{
    AssociativeAlgebra a = AssociativeAlgebra::zero_algebra(3);
    a.basis_names = {"E11", "E12", "E22"};
    a.m[0][0] = {1, 0, 0}; // E11 E11 = E11
    a.m[0][1] = {0, 1, 0}; // E11 E12 = E12
    a.m[1][2] = {0, 1, 0}; // E12 E22 = E12
    a.m[2][2] = {0, 0, 1}; // E22 E22 = E22
    return a;
}

/// Named constructors for the bundled algebras; accepts trivial1..trivial4,
/// reals, complexes, diag2, jordan2, split2, ut2 and toeplitz1..toeplitz5.
inline AssociativeAlgebra small_algebra(const std::string& name)
{
    if (name.rfind("trivial", 0) == 0) {
        const std::string rest = name.substr(7);
        if (!rest.empty() && rest.find_first_not_of("0123456789") == std::string::npos)
            return trivial_algebra(std::stoul(rest));
    }
    if (name.rfind("toeplitz", 0) == 0) {
        const std::string rest = name.substr(8);
        if (!rest.empty() && rest.find_first_not_of("0123456789") == std::string::npos)
            return toeplitz_algebra(std::stoul(rest)).base;
    }
    if (name == "reals") return reals_algebra();
    if (name == "complexes") return complexes_algebra().base;
    if (name == "diag2") return diag2_algebra();
    if (name == "jordan2") return jordan2_algebra();
    if (name == "split2") return split2_algebra();
    if (name == "ut2") return upper_triangular2_algebra();
    throw error("unknown algebra name '" + name + "'");
}

inline bool is_algebra_isomorphism(const LinearMap& f, const AssociativeAlgebra& a,
                                   const AssociativeAlgebra& b)
{
    if (a.dim() != b.dim()) return false;
    if (f.rows() != a.dim() || f.cols() != a.dim() || !inverse(f)) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (f.apply(a.m[i][j]) != b.product(f.col(i), f.col(j))) return false;
    return true;
}

} // namespace acs

#endif

#ifndef ACS_DECOMPOSITION_HPP
#define ACS_DECOMPOSITION_HPP

#include <acs/affine.hpp>
#include <acs/complex_structure.hpp>
#include <acs/lie_algebra.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace acs {

/// Certificate that (s/z, J) is holomorphically isomorphic to aff(A):
/// A is realized as the span of the ad(Jx) matrices, x in u, with matrix
/// composition as multiplication, and f(x + Jy) = (ad(Jy), ad(Jx)).
/// Every field below has been verified exactly when the certificate exists.
struct AffineCertificate {
    Subspace u;                         // abelian ideal with u + Ju = s
    AssociativeAlgebra A;               // commutative, in the echelon basis of span{ad(Jx)}
    std::vector<Matrix> a_basis_matrices; // the echelon basis, as endomorphisms of s
    LinearMap f;                        // s -> aff(A), surjective homomorphism
    Subspace kernel_f;                  // equals the center of s
};

/// Last nonzero term of the derived series: a characteristic abelian ideal.
inline Subspace find_abelian_ideal(const LieAlgebra& s)
{
    if (s.dim() == 0) throw error("find_abelian_ideal: zero algebra");
    const SeriesReport rep = series(s, SeriesKind::derived);
    if (rep.terms.back().dim() != 0) throw error("find_abelian_ideal: algebra is not solvable");
    return rep.terms[rep.terms.size() - 2];
}

/// Builds and verifies the affine certificate for s = u + Ju with u an abelian
/// ideal and J abelian. Throws with a precise message on any failed check;
/// per the theory none can fail on valid input, so a throw here is evidence.
inline AffineCertificate affine_quotient(const LieAlgebra& s, const ComplexStructure& J,
                                         const Subspace& u)
{
    const std::size_t n = s.dim();
    detail::require_complex_structure(s, J);
    if (!is_abelian(s, J)) throw error("affine_quotient: J is not abelian on s");
    if (u.ambient_dim() != n) throw error("affine_quotient: ambient dimension mismatch");
    if (bracket_span(s, u, u).dim() != 0) throw error("affine_quotient: u is not abelian");
    if (!is_ideal(s, u)) throw error("affine_quotient: u is not an ideal");
    const Subspace ju = apply_to_subspace(J.j, u);
    if (span_sum(u, ju).dim() != n) throw error("affine_quotient: u + Ju != s");

    // A = span{ad(Jx) : x in u} with composition as product
    std::vector<Matrix> ad_ju;
    std::vector<Vector> gens;
    for (std::size_t r = 0; r < u.dim(); ++r) {
        ad_ju.push_back(ad(s, J.j.apply(u.basis().row(r))));
        gens.push_back(ad_ju.back().vec());
    }
    const Subspace a_span = Subspace::from_vectors(n * n, gens);
    const std::size_t m = a_span.dim();

    AffineCertificate cert;
    cert.u = u;
    for (std::size_t t = 0; t < m; ++t)
        cert.a_basis_matrices.push_back(Matrix::from_vec(n, n, a_span.basis().row(t)));

    cert.A = AssociativeAlgebra::zero_algebra(m, "A");
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t t2 = 0; t2 < m; ++t2) {
            const Matrix prod = cert.a_basis_matrices[t] * cert.a_basis_matrices[t2];
            const auto coords = a_span.coords(prod.vec());
            if (!coords) throw error("affine_quotient: A is not closed under composition");
            cert.A.m[t][t2] = *coords;
        }
    const AlgebraCheck chk = check_algebra(cert.A);
    if (!chk.associative) throw error("affine_quotient: A is not associative");
    if (!chk.commutative) throw error("affine_quotient: A is not commutative");

    // u cap Ju sits inside the center
    const Subspace z = center(s);
    if (!z.contains(span_intersect(u, ju))) throw error("affine_quotient: u cap Ju not central");

    // f(x + Jy) = (ad(Jy), ad(Jx)), assembled column by column from a
    // decomposition e_k = x + Jy; the value does not depend on the choice.
    Matrix dec(n, 2 * u.dim());
    for (std::size_t r = 0; r < u.dim(); ++r) {
        dec.set_col(r, u.basis().row(r));
        dec.set_col(u.dim() + r, J.j.apply(u.basis().row(r)));
    }
    cert.f = LinearMap(2 * m, n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto c = solve(dec, unit_vector(n, k));
        if (!c) throw error("affine_quotient: decomposition solve failed"); // u + Ju = s rules this out
        Matrix ad_jx(n, n), ad_jy(n, n);
        for (std::size_t r = 0; r < u.dim(); ++r) {
            if ((*c)[r] != 0) ad_jx = ad_jx + ((*c)[r] * ad_ju[r]);
            if ((*c)[u.dim() + r] != 0) ad_jy = ad_jy + ((*c)[u.dim() + r] * ad_ju[r]);
        }
        const auto ax = a_span.coords(ad_jx.vec());
        const auto ay = a_span.coords(ad_jy.vec());
        if (!ax || !ay) throw error("affine_quotient: image escaped A"); // by construction impossible
        Vector col(2 * m, Rational(0));
        for (std::size_t t = 0; t < m; ++t) {
            col[t] = (*ay)[t];
            col[m + t] = (*ax)[t];
        }
        cert.f.set_col(k, col);
    }

    const LieAlgebra aff_a = aff(cert.A);
    if (!is_homomorphism(cert.f, s, aff_a))
        throw error("affine_quotient: f is not a homomorphism");
    cert.kernel_f = kernel(cert.f);
    if (cert.kernel_f != z) throw error("affine_quotient: kernel(f) != center");
    if (n - cert.kernel_f.dim() != 2 * m)
        throw error("affine_quotient: f is not surjective onto aff(A)");
    const ComplexStructure j_aff = standard_aff_J(cert.A);
    if (cert.f * J.j != j_aff.j * cert.f) throw error("affine_quotient: f is not holomorphic");
    return cert;
}

struct InducedStructure {
    LieAlgebra algebra;
    ComplexStructure structure;
    LinearMap projection;
    LinearMap section;
};

/// Quotient by a J-stable ideal with J pushed down to the canonical
/// complement coordinates. J^2 = -I is re-verified; when J is abelian the
/// quotient structure is verified abelian as well.
inline InducedStructure induced_structure(const LieAlgebra& s, const ComplexStructure& J,
                                          const Subspace& ideal)
{
    detail::require_complex_structure(s, J);
    if (apply_to_subspace(J.j, ideal) != ideal) throw error("induced_structure: ideal is not J-stable");
    Quotient q = quotient(s, ideal);
    InducedStructure out;
    out.structure = ComplexStructure{q.projection * J.j * q.section};
    if (!out.structure.squares_to_minus_identity())
        throw error("induced_structure: induced J fails J^2 = -I");
    if (is_abelian(s, J) && q.algebra.dim() > 0 && !is_abelian(q.algebra, out.structure))
        throw error("induced_structure: abelian property was not inherited");
    out.algebra = std::move(q.algebra);
    out.projection = std::move(q.projection);
    out.section = std::move(q.section);
    return out;
}

struct FlagStep {
    Subspace ideal;          // J-stable ideal of the original algebra
    std::size_t quotient_dim; // dimension remaining after this step
    AffineCertificate certificate;
};

/// Increasing flag {0} = s_0 < s_1 < ... < s_r = s of J-stable ideals where
/// each s_j / s_{j-1} carries a verified affine certificate.
struct FlagDecomposition {
    std::vector<FlagStep> steps;
};

/// Constructive decomposition: u defaults to the last nonzero derived term
/// (a characteristic choice, so re-running produces the identical flag), but
/// any abelian ideal may be supplied for the first step. Throws if J is not
/// abelian or any certificate fails.
inline FlagDecomposition flag_decomposition(const LieAlgebra& s, const ComplexStructure& J,
                                            const std::optional<Subspace>& first_abelian_ideal = {})
{
    detail::require_complex_structure(s, J);
    if (!is_abelian(s, J)) throw error("flag_decomposition: J is not abelian");

    FlagDecomposition flag;
    LieAlgebra cur = s;
    ComplexStructure jcur = J;
    LinearMap acc = LinearMap::identity(s.dim());
    std::size_t guard = 0;

    while (cur.dim() > 0) {
        if (++guard > s.dim() / 2 + 1) throw error("flag_decomposition: failed to terminate");
        Subspace u;
        if (flag.steps.empty() && first_abelian_ideal) {
            u = *first_abelian_ideal;
            if (u.ambient_dim() != cur.dim() || u.dim() == 0)
                throw error("flag_decomposition: supplied ideal is empty or has wrong dimension");
            if (!is_ideal(cur, u)) throw error("flag_decomposition: supplied u is not an ideal");
            if (bracket_span(cur, u, u).dim() != 0)
                throw error("flag_decomposition: supplied u is not abelian");
        } else {
            u = find_abelian_ideal(cur);
        }
        const Subspace s1 = span_sum(u, apply_to_subspace(jcur.j, u));
        if (apply_to_subspace(jcur.j, s1) != s1)
            throw error("flag_decomposition: u + Ju is not J-stable");
        if (!is_ideal(cur, s1)) throw error("flag_decomposition: u + Ju is not an ideal");

        const SubalgebraRestriction sub = restrict_to_subalgebra(cur, s1);
        LinearMap j_sub(s1.dim(), s1.dim());
        std::vector<Vector> u_rows;
        for (std::size_t r = 0; r < s1.dim(); ++r) {
            const auto c = s1.coords(jcur.j.apply(s1.basis().row(r)));
            if (!c) throw error("flag_decomposition: J escaped s1");
            j_sub.set_col(r, *c);
        }
        for (std::size_t r = 0; r < u.dim(); ++r) {
            const auto c = s1.coords(u.basis().row(r));
            if (!c) throw error("flag_decomposition: u escaped s1");
            u_rows.push_back(*c);
        }
        const Subspace u_in_s1 = Subspace::from_vectors(s1.dim(), u_rows);

        FlagStep step;
        step.certificate = affine_quotient(sub.algebra, ComplexStructure{j_sub}, u_in_s1);
        step.ideal = preimage(acc, s1);
        step.quotient_dim = cur.dim() - s1.dim();
        if (!is_ideal(s, step.ideal) || apply_to_subspace(J.j, step.ideal) != step.ideal)
            throw error("flag_decomposition: recorded ideal failed re-verification");
        if (!flag.steps.empty() && !(step.ideal.dim() > flag.steps.back().ideal.dim() &&
                                     step.ideal.contains(flag.steps.back().ideal)))
            throw error("flag_decomposition: flag is not increasing");
        flag.steps.push_back(std::move(step));

        const InducedStructure next = induced_structure(cur, jcur, s1);
        acc = next.projection * acc;
        cur = next.algebra;
        jcur = next.structure;
    }
    if (!flag.steps.empty() && flag.steps.back().ideal.dim() != s.dim())
        throw error("flag_decomposition: flag did not reach the full algebra");
    return flag;
}

} // namespace acs

#endif

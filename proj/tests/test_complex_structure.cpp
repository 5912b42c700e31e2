#include <acs/affine.hpp>
#include <acs/catalog.hpp>
#include <acs/complex_structure.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace acs;

namespace {
Rational q(int n, int d = 1)
{
    Rational r(n);
    r /= d;
    return r;
}

ComplexStructure j_of(const CatalogEntry& e) { return e.structures.at(0); }
} // namespace

TEST_CASE("operations reject J with J^2 != -I")
{
    const LieAlgebra g = LieAlgebra::zero_algebra(2);
    const ComplexStructure bad{LinearMap::identity(2)};
    CHECK_FALSE(bad.squares_to_minus_identity());
    CHECK_THROWS_AS(is_integrable(g, bad), error);
    CHECK_THROWS_AS(is_abelian(g, bad), error);
    CHECK_THROWS_AS(splitting(g, bad), error);
    CHECK_THROWS_AS(adjoint_holomorphy(g, bad), error);
}

TEST_CASE("nijenhuis defect")
{
    const CatalogEntry affr = aff_r_entry();
    const Vector x = unit_vector(2, 0), y = unit_vector(2, 1);
    CHECK(vec_is_zero(nijenhuis_defect(affr.algebra, j_of(affr), x, x)));
    CHECK(vec_is_zero(nijenhuis_defect(affr.algebra, j_of(affr), x, y)));

    const CatalogEntry h = heisenberg_example(1);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(vec_is_zero(
                nijenhuis_defect(h.algebra, j_of(h), unit_vector(4, i), unit_vector(4, j))));

    testing::Rng rng(11);
    for (int it = 0; it < 20; ++it) {
        const Vector a = testing::random_vector(rng, 4, 3);
        const Vector b = testing::random_vector(rng, 4, 3);
        const Vector n1 = nijenhuis_defect(h.algebra, j_of(h), a, b);
        const Vector n2 = nijenhuis_defect(h.algebra, j_of(h), b, a);
        CHECK(n1 == vec_neg(n2)); // skew in (x, y)
    }
}

TEST_CASE("abelian, integrable and complex-bilinear verdicts")
{
    // aff(A) for commutative A: abelian
    const LieAlgebra g8 = aff(diag2_algebra());
    const ComplexStructure j8 = standard_aff_J(diag2_algebra());
    CHECK(is_abelian(g8, j8));
    CHECK(is_integrable(g8, j8));

    const CatalogEntry h = heisenberg_example(1);
    CHECK(is_abelian(h.algebra, j_of(h)));

    // noncommutative A: integrable but not abelian
    const AssociativeAlgebra ut = upper_triangular2_algebra();
    const LieAlgebra gut = aff(ut);
    const ComplexStructure jut = standard_aff_J(ut);
    CHECK(is_integrable(gut, jut));
    CHECK_FALSE(is_abelian(gut, jut));
    CHECK_FALSE(is_complex_bilinear(gut, jut));

    // multiplication by i on aff(C) is complex-bilinear (a complex Lie algebra)
    const ComplexAlgebraStructure c = complexes_algebra();
    const LieAlgebra gc = aff(c.base);
    LinearMap ki(4, 4);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
            ki(a, b) = c.i_map(a, b);
            ki(2 + a, 2 + b) = c.i_map(a, b);
        }
    const ComplexStructure mult_i{ki};
    CHECK(is_complex_bilinear(gc, mult_i));
    CHECK(is_integrable(gc, mult_i)); // bilinear implies integrable
}

TEST_CASE("abelian implies integrable across the corpus")
{
    for (const CatalogEntry& e : all_entries()) {
        if (e.structures.empty()) continue;
        if (is_abelian(e.algebra, j_of(e))) CHECK(is_integrable(e.algebra, j_of(e)));
    }
}

TEST_CASE("hypercomplex pairs")
{
    const ComplexAlgebraStructure c = complexes_algebra();
    const LieAlgebra g = aff(c.base);
    const ComplexStructure J = standard_aff_J(c.base);
    const ComplexStructure K = standard_aff_K(c);
    CHECK(is_hypercomplex(g, J, K));
    CHECK(is_abelian_hypercomplex(g, J, K));
    CHECK_FALSE(is_hypercomplex(g, J, J)); // J does not anticommute with itself

    const ComplexAlgebraStructure t2 = toeplitz_algebra(2);
    const LieAlgebra gt = aff(t2.base);
    CHECK(is_abelian_hypercomplex(gt, standard_aff_J(t2.base), standard_aff_K(t2)));
}

TEST_CASE("splitting into g^{1,0} and g^{0,1}")
{
    // abelian R^2 with the standard J: both parts abelian
    const LieAlgebra ab = LieAlgebra::zero_algebra(2);
    const ComplexStructure j = pairing_structure(2);
    const Splitting s = splitting(ab, j);
    CHECK(s.g10.dim() == 1);
    CHECK(s.g01.dim() == 1);
    CHECK(subalgebras_abelian(ab, j) == std::pair<bool, bool>{true, true});

    const CatalogEntry affr = aff_r_entry();
    CHECK(subalgebras_abelian(affr.algebra, j_of(affr)) == std::pair<bool, bool>{true, true});

    const AssociativeAlgebra ut = upper_triangular2_algebra();
    const auto sub = subalgebras_abelian(aff(ut), standard_aff_J(ut));
    CHECK_FALSE(sub.first);
    CHECK_FALSE(sub.second);
}

TEST_CASE("integrability is equivalent to g^{1,0} being a subalgebra")
{
    struct Case {
        LieAlgebra g;
        ComplexStructure j;
    };
    std::vector<Case> cases;
    cases.push_back({heisenberg_example(1).algebra, j_of(heisenberg_example(1))});
    cases.push_back({aff(upper_triangular2_algebra()), standard_aff_J(upper_triangular2_algebra())});
    // a pairing on R x h_1 that is not the catalog one: Jw = x1, Jz = y1
    {
        const LieAlgebra h = heisenberg_example(1).algebra;
        LinearMap j(4, 4);
        j(2, 0) = 1, j(0, 2) = -1; // w <-> x1
        j(3, 1) = 1, j(1, 3) = -1; // z <-> y1
        cases.push_back({h, ComplexStructure{j}});
    }
    for (const Case& c : cases) {
        const Splitting s = splitting(c.g, c.j);
        const bool integrable = is_integrable(c.g, c.j);
        CHECK(integrable == is_complex_subalgebra(c.g, s.g10));
        CHECK(integrable == is_complex_subalgebra(c.g, s.g01));
    }
}

TEST_CASE("adjoint and coadjoint holomorphy")
{
    const LieAlgebra ab = LieAlgebra::zero_algebra(4);
    CHECK(adjoint_holomorphy(ab, pairing_structure(4)));
    CHECK(coadjoint_holomorphy(ab, pairing_structure(4)));

    const CatalogEntry h = heisenberg_example(1);
    CHECK(adjoint_holomorphy(h.algebra, j_of(h)));
    CHECK(coadjoint_holomorphy(h.algebra, j_of(h)));

    const AssociativeAlgebra ut = upper_triangular2_algebra();
    CHECK_FALSE(adjoint_holomorphy(aff(ut), standard_aff_J(ut)));
    CHECK_FALSE(coadjoint_holomorphy(aff(ut), standard_aff_J(ut)));
}

TEST_CASE("the four characterizations agree on catalog entries and conjugates")
{
    testing::Rng rng(20260201);
    for (const CatalogEntry& e : all_entries()) {
        if (e.structures.empty() || e.algebra.dim() > 8) continue;
        const bool a = is_abelian(e.algebra, j_of(e));
        const auto sub = subalgebras_abelian(e.algebra, j_of(e));
        CHECK(a == (sub.first && sub.second));
        CHECK(a == adjoint_holomorphy(e.algebra, j_of(e)));
        CHECK(a == coadjoint_holomorphy(e.algebra, j_of(e)));

        const Matrix p = testing::random_unimodular(rng, e.algebra.dim());
        const LieAlgebra g2 = change_basis(e.algebra, p);
        const ComplexStructure j2{p * j_of(e).j * *inverse(p)};
        const bool a2 = is_abelian(g2, j2);
        const auto sub2 = subalgebras_abelian(g2, j2);
        CHECK(a2 == a);
        CHECK(a2 == (sub2.first && sub2.second));
        CHECK(a2 == adjoint_holomorphy(g2, j2));
        CHECK(a2 == coadjoint_holomorphy(g2, j2));
    }
}

TEST_CASE("one-dimensional commutator forces abelian structures")
{
    // every integrable J on an algebra with dim[g,g] = 1 is abelian
    std::vector<std::pair<LieAlgebra, ComplexStructure>> cases;
    cases.emplace_back(aff_r_entry().algebra, j_of(aff_r_entry()));
    cases.emplace_back(heisenberg_example(1).algebra, j_of(heisenberg_example(1)));
    cases.emplace_back(heisenberg_example(2).algebra, j_of(heisenberg_example(2)));
    {
        // the non-catalog pairing on R x h_1 from above, whatever its verdicts
        LinearMap j(4, 4);
        j(2, 0) = 1, j(0, 2) = -1;
        j(3, 1) = 1, j(1, 3) = -1;
        cases.emplace_back(heisenberg_example(1).algebra, ComplexStructure{j});
    }
    testing::Rng rng(5150);
    for (auto& [g, j] : cases) {
        REQUIRE(commutator_subalgebra(g).dim() == 1);
        if (is_integrable(g, j)) CHECK(is_abelian(g, j));
        const Matrix p = testing::random_unimodular(rng, g.dim());
        const LieAlgebra g2 = change_basis(g, p);
        const ComplexStructure j2{p * j.j * *inverse(p)};
        if (is_integrable(g2, j2)) CHECK(is_abelian(g2, j2));
    }
}

TEST_CASE("rearranged integrability identity")
{
    // J([x,y] - [Jx,Jy]) = [Jx,y] + [x,Jy] whenever J is integrable; in
    // particular a nonzero [x,y] - [Jx,Jy] forces dim[g,g] >= 2
    std::vector<std::pair<LieAlgebra, ComplexStructure>> cases;
    cases.emplace_back(heisenberg_example(1).algebra, j_of(heisenberg_example(1)));
    cases.emplace_back(aff(upper_triangular2_algebra()),
                       standard_aff_J(upper_triangular2_algebra())); // integrable, not abelian
    cases.emplace_back(four_dim("S10").algebra, j_of(four_dim("S10")));
    for (const auto& [g, j] : cases) {
        REQUIRE(is_integrable(g, j));
        const std::size_t n = g.dim();
        const Subspace comm = commutator_subalgebra(g);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Vector x = unit_vector(n, a), y = unit_vector(n, b);
                const Vector diff =
                    vec_sub(bracket(g, x, y), bracket(g, j.j.apply(x), j.j.apply(y)));
                const Vector lhs = j.j.apply(diff);
                const Vector rhs =
                    vec_add(bracket(g, j.j.apply(x), y), bracket(g, x, j.j.apply(y)));
                CHECK(lhs == rhs);
                if (!vec_is_zero(diff)) {
                    CHECK(comm.dim() >= 2);
                    CHECK(comm.contains(diff));
                    CHECK(comm.contains(lhs));
                }
            }
    }
}

TEST_CASE("gl(V) with L_I and R_I")
{
    LinearMap rot(2, 2);
    rot(1, 0) = 1;
    rot(0, 1) = -1;

    const GlWithStructure left = gl_with_structure(2, rot, Side::left);
    CHECK(left.algebra.dim() == 4);
    CHECK(validate(left.algebra).ok());
    CHECK(is_integrable(left.algebra, left.structure));

    const GlWithStructure right = gl_with_structure(2, rot, Side::right);
    CHECK(is_integrable(right.algebra, right.structure));

    // gl(2) is not solvable, so neither structure can be abelian
    CHECK_FALSE(is_solvable(left.algebra));
    CHECK_FALSE(is_abelian(left.algebra, left.structure));
    CHECK_FALSE(is_abelian(right.algebra, right.structure));

    // the restriction to gl_C(V) = commutant of I satisfies J[x,y] = [x,Jy]
    CHECK(left.commutant_subalgebra.dim() == 2);
    CHECK(is_complex_bilinear_on(left.algebra, left.structure, left.commutant_subalgebra));
    CHECK(is_complex_bilinear_on(right.algebra, right.structure, right.commutant_subalgebra));

    CHECK_THROWS_AS(gl_with_structure(3, LinearMap::identity(3), Side::left), error);
    CHECK_THROWS_AS(gl_with_structure(2, LinearMap::identity(2), Side::left), error);
}

TEST_CASE("conjugation covariance of the abelian verdict")
{
    testing::Rng rng(616);
    for (const std::string& id : {"S8", "S10", "RxH1", "family-1-1"}) {
        const CatalogEntry e = catalog_entry(id);
        for (int it = 0; it < 5; ++it) {
            const Matrix p = testing::random_unimodular(rng, e.algebra.dim());
            const LieAlgebra g2 = change_basis(e.algebra, p);
            const ComplexStructure j2{p * j_of(e).j * *inverse(p)};
            CHECK(j2.squares_to_minus_identity());
            CHECK(is_abelian(g2, j2) == is_abelian(e.algebra, j_of(e)));
        }
    }
}

#include <acs/catalog.hpp>
#include <acs/lie_algebra.hpp>

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

LieAlgebra aff_r() { return aff_r_algebra(); }

LieAlgebra r_x_h1() { return heisenberg_example(1).algebra; }
} // namespace

TEST_CASE("validate accepts the textbook algebras")
{
    CHECK(validate(LieAlgebra::zero_algebra(4)).ok());
    CHECK(validate(aff_r()).ok());
    CHECK(validate(r_x_h1()).ok());
    CHECK(validate(heisenberg_algebra(3)).ok());
}

TEST_CASE("validate reports skew violations with their location")
{
    LieAlgebra bad = LieAlgebra::zero_algebra(3);
    bad.table[1][2] = {q(1), q(0), q(0)};
    bad.table[2][1] = {q(1), q(0), q(0)}; // should be the negative
    const ValidationReport rep = validate(bad);
    CHECK_FALSE(rep.ok());
    REQUIRE(rep.skew.size() == 1);
    CHECK(rep.skew[0].i == 1);
    CHECK(rep.skew[0].j == 2);
    CHECK(rep.jacobi.empty());
}

TEST_CASE("validate reports Jacobi violations")
{
    // [e1,e2]=e2, [e1,e3]=e3, [e2,e3]=e1 fails Jacobi on (1,2,3)
    LieAlgebra bad = LieAlgebra::from_brackets(
        {"e1", "e2", "e3"},
        {{0, 1, {q(0), q(1), q(0)}}, {0, 2, {q(0), q(0), q(1)}}, {1, 2, {q(1), q(0), q(0)}}});
    const ValidationReport rep = validate(bad);
    CHECK(rep.skew.empty());
    REQUIRE(rep.jacobi.size() == 1);
    CHECK(rep.jacobi[0].residual == Vector{q(-2), q(0), q(0)});
}

TEST_CASE("bracket is the bilinear extension of the table")
{
    const LieAlgebra g = aff_r();
    CHECK(bracket(g, {q(1), q(0)}, {q(0), q(1)}) == Vector{q(1), q(0)});

    const LieAlgebra h = r_x_h1();
    // [x1, y1] = z
    CHECK(bracket(h, unit_vector(4, 2), unit_vector(4, 3)) == unit_vector(4, 1));

    testing::Rng rng(31337);
    for (int it = 0; it < 20; ++it) {
        const Vector v = testing::random_vector(rng, 4);
        const Vector w = testing::random_vector(rng, 4);
        CHECK(vec_is_zero(bracket(h, v, v)));
        CHECK(bracket(h, v, w) == vec_neg(bracket(h, w, v)));
    }
}

TEST_CASE("ad matrices")
{
    const LieAlgebra g = aff_r();
    CHECK(ad(g, Vector{q(0), q(0)}).is_zero());
    // ad(y): x -> -x, y -> 0
    const LinearMap ady = ad(g, {q(0), q(1)});
    CHECK(ady.col(0) == Vector{q(-1), q(0)});
    CHECK(vec_is_zero(ady.col(1)));

    const LieAlgebra ab = LieAlgebra::zero_algebra(3);
    CHECK(ad(ab, {q(1), q(2), q(3)}).is_zero());
}

TEST_CASE("ad is a homomorphism into gl(g)")
{
    testing::Rng rng(777);
    for (const LieAlgebra& g : {r_x_h1(), aff_r(), heisenberg_algebra(2)}) {
        for (int it = 0; it < 10; ++it) {
            const Vector x = testing::random_vector(rng, g.dim(), 3);
            const Vector y = testing::random_vector(rng, g.dim(), 3);
            CHECK(ad(g, bracket(g, x, y)) == ad(g, x) * ad(g, y) - ad(g, y) * ad(g, x));
        }
    }
}

TEST_CASE("center and commutator")
{
    const LieAlgebra h = r_x_h1();
    const Subspace z = center(h);
    CHECK(z.dim() == 2);
    CHECK(z.contains(unit_vector(4, 0))); // w
    CHECK(z.contains(unit_vector(4, 1))); // z

    const LieAlgebra g = aff_r();
    const Subspace comm = commutator_subalgebra(g);
    CHECK(comm.dim() == 1);
    CHECK(comm.contains(unit_vector(2, 0)));

    const LieAlgebra ab = LieAlgebra::zero_algebra(5);
    CHECK(commutator_subalgebra(ab).dim() == 0);
    CHECK(center(ab).dim() == 5);

    // both are always ideals
    for (const LieAlgebra& a : {h, g, heisenberg_algebra(2)}) {
        CHECK(is_ideal(a, center(a)));
        CHECK(is_ideal(a, commutator_subalgebra(a)));
    }
}

TEST_CASE("series, solvability and nilpotency")
{
    const LieAlgebra ab = LieAlgebra::zero_algebra(3);
    CHECK(is_solvable(ab));
    CHECK(is_nilpotent(ab));
    CHECK(nilpotency_class(ab) == 1);
    CHECK(nilpotency_class(LieAlgebra::zero_algebra(0)) == 0);

    const LieAlgebra h = r_x_h1();
    CHECK(nilpotency_class(h) == 2);

    const LieAlgebra g = aff_r();
    CHECK(is_solvable(g));
    CHECK_FALSE(is_nilpotent(g));
    CHECK(nilpotency_class(g) == std::nullopt);
    const SeriesReport lower = series(g, SeriesKind::lower_central);
    CHECK(lower.terms.back().dim() == 1); // stabilizes at span{x}
    CHECK(lower.terms.back().contains(unit_vector(2, 0)));
}

TEST_CASE("series reports stabilize with strictly decreasing terms")
{
    for (const LieAlgebra& g : {aff_r(), r_x_h1(), heisenberg_algebra(2), free_two_step(3).algebra}) {
        for (const SeriesKind kind : {SeriesKind::derived, SeriesKind::lower_central}) {
            const SeriesReport rep = series(g, kind);
            REQUIRE(!rep.terms.empty());
            CHECK(rep.stabilized_at == rep.terms.size() - 1);
            for (std::size_t i = 1; i < rep.terms.size(); ++i) {
                CHECK(rep.terms[i].dim() < rep.terms[i - 1].dim());
                CHECK(rep.terms[i - 1].contains(rep.terms[i]));
            }
            // one more step reproduces the last term
            const Subspace& last = rep.terms.back();
            const Subspace next = (kind == SeriesKind::derived)
                                      ? bracket_span(g, last, last)
                                      : bracket_span(g, Subspace::full(g.dim()), last);
            CHECK(next == last);
        }
    }
}

TEST_CASE("quotients")
{
    const LieAlgebra h = r_x_h1();

    SECTION("by the zero ideal")
    {
        const Quotient q0 = quotient(h, Subspace::zero(4));
        CHECK(q0.algebra.dim() == 4);
        CHECK(q0.algebra.table == h.table);
        CHECK(q0.projection == LinearMap::identity(4));
    }
    SECTION("by the whole algebra")
    {
        const Quotient q1 = quotient(h, Subspace::full(4));
        CHECK(q1.algebra.dim() == 0);
    }
    SECTION("by the center")
    {
        const Quotient q = quotient(h, center(h));
        CHECK(q.algebra.dim() == 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) CHECK(vec_is_zero(q.algebra.table[i][j]));
        // projection is a surjective homomorphism with kernel = ideal
        CHECK(is_homomorphism(q.projection, h, q.algebra));
        CHECK(kernel(q.projection) == center(h));
        CHECK(rank(q.projection) == 2);
    }
    SECTION("projected brackets agree on random vectors")
    {
        testing::Rng rng(4242);
        const Quotient q = quotient(h, center(h));
        for (int it = 0; it < 20; ++it) {
            const Vector x = testing::random_vector(rng, 4);
            const Vector y = testing::random_vector(rng, 4);
            CHECK(q.projection.apply(bracket(h, x, y)) ==
                  bracket(q.algebra, q.projection.apply(x), q.projection.apply(y)));
        }
    }
    SECTION("refuses non-ideals")
    {
        const LieAlgebra g = aff_r();
        const Subspace not_ideal = Subspace::from_vectors(2, {unit_vector(2, 1)}); // span{y}
        CHECK_THROWS_AS(quotient(g, not_ideal), error);
    }
}

TEST_CASE("change of basis")
{
    const LieAlgebra g = aff_r();
    CHECK(change_basis(g, LinearMap::identity(2)).table == g.table);

    // scaling x -> 2x keeps the aff(R) table
    LinearMap p(2, 2);
    p(0, 0) = 2;
    p(1, 1) = 1;
    const LieAlgebra g2 = change_basis(g, p);
    CHECK(g2.table == g.table);
    CHECK(is_isomorphism(p, g, g2));

    CHECK_THROWS_AS(change_basis(g, LinearMap(2, 2)), error);

    testing::Rng rng(9001);
    for (int it = 0; it < 10; ++it) {
        const LieAlgebra h = r_x_h1();
        const Matrix m = testing::random_unimodular(rng, 4);
        const LieAlgebra h2 = change_basis(h, m);
        CHECK(validate(h2).ok());
        CHECK(is_isomorphism(m, h, h2));
    }
}

TEST_CASE("homomorphism and isomorphism checks")
{
    const LieAlgebra g = aff_r();
    CHECK(is_isomorphism(LinearMap::identity(2), g, g));
    // the zero map is always a homomorphism but never an isomorphism
    CHECK(is_homomorphism(LinearMap(2, 2), g, g));
    CHECK_FALSE(is_isomorphism(LinearMap(2, 2), g, g));
    // swapping x and y breaks the aff(R) table
    const LinearMap swap = {{q(0), q(1)}, {q(1), q(0)}};
    CHECK_FALSE(is_homomorphism(swap, g, g));
}

TEST_CASE("direct sums")
{
    const LieAlgebra s2 = direct_sum(aff_r_algebra(), LieAlgebra::zero_algebra(2, "u"));
    CHECK(s2.dim() == 4);
    CHECK(validate(s2).ok());
    CHECK(commutator_subalgebra(s2).dim() == 1);
    CHECK(center(s2).dim() == 2);
    CHECK_THROWS_AS(direct_sum(aff_r_algebra(), aff_r_algebra()), error); // duplicate names
}

TEST_CASE("subalgebra restriction")
{
    const LieAlgebra h = r_x_h1();
    // span{z, x1, y1} is a copy of h_1 inside R x h_1
    const Subspace s = Subspace::from_vectors(
        4, {unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 3)});
    const SubalgebraRestriction sub = restrict_to_subalgebra(h, s);
    CHECK(sub.algebra.dim() == 3);
    CHECK(validate(sub.algebra).ok());
    CHECK(nilpotency_class(sub.algebra) == 2);
    CHECK(is_homomorphism(sub.inclusion, sub.algebra, h));

    // span{w, x1} is not closed: nothing brackets into it, it is fine;
    // span{x1, y1} brackets to z outside of it
    const Subspace not_closed = Subspace::from_vectors(4, {unit_vector(4, 2), unit_vector(4, 3)});
    CHECK_THROWS_AS(restrict_to_subalgebra(h, not_closed), error);
}

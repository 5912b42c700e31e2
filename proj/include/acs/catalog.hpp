#ifndef ACS_CATALOG_HPP
#define ACS_CATALOG_HPP

#include <acs/affine.hpp>
#include <acs/complex_structure.hpp>
#include <acs/lie_algebra.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace acs {

struct ExpectedProperties {
    std::optional<bool> abelian; // verdict for the first attached structure
    bool solvable = true;
    std::optional<std::size_t> nilpotency_class; // nullopt: not nilpotent
    std::size_t dim_center = 0;
    std::size_t dim_commutator = 0;
};

/// A named example from the ground-truth corpus. Every expected property is
/// recomputed and matched at construction time; a mismatch is a construction
/// failure, so an entry that loads is already a verified certificate.
struct CatalogEntry {
    std::string id;
    LieAlgebra algebra;
    std::vector<ComplexStructure> structures; // J first, then K when hypercomplex
    bool hypercomplex = false;
    std::optional<AssociativeAlgebra> paired_algebra; // the A with s/z = aff(A)
    std::optional<LinearMap> paired_i_map;
    ExpectedProperties expected;
};

namespace detail {
inline CatalogEntry make_entry(std::string id, LieAlgebra algebra,
                               std::vector<ComplexStructure> structures, bool hypercomplex,
                               std::optional<AssociativeAlgebra> paired,
                               std::optional<LinearMap> paired_i, ExpectedProperties expected)
{
    CatalogEntry e{std::move(id),     std::move(algebra), std::move(structures), hypercomplex,
                   std::move(paired), std::move(paired_i), expected};
    if (!validate(e.algebra).ok()) throw error("catalog " + e.id + ": invalid structure constants");
    for (const ComplexStructure& s : e.structures)
        if (!s.squares_to_minus_identity()) throw error("catalog " + e.id + ": J^2 != -I");
    if (expected.abelian && e.structures.empty())
        throw error("catalog " + e.id + ": expected abelian verdict without a structure");
    if (!e.structures.empty() && expected.abelian &&
        is_abelian(e.algebra, e.structures.front()) != *expected.abelian)
        throw error("catalog " + e.id + ": abelian verdict mismatch");
    if (e.hypercomplex) {
        if (e.structures.size() < 2) throw error("catalog " + e.id + ": missing K");
        if (!is_abelian_hypercomplex(e.algebra, e.structures[0], e.structures[1]))
            throw error("catalog " + e.id + ": hypercomplex verdict mismatch");
    }
    if (is_solvable(e.algebra) != expected.solvable)
        throw error("catalog " + e.id + ": solvability mismatch");
    if (nilpotency_class(e.algebra) != expected.nilpotency_class)
        throw error("catalog " + e.id + ": nilpotency class mismatch");
    if (center(e.algebra).dim() != expected.dim_center)
        throw error("catalog " + e.id + ": center dimension mismatch");
    if (commutator_subalgebra(e.algebra).dim() != expected.dim_commutator)
        throw error("catalog " + e.id + ": commutator dimension mismatch");
    return e;
}
} // namespace detail

/// aff(R) in the presentation span{x, y}, [x,y] = x, with J x = y.
inline LieAlgebra aff_r_algebra()
{
    return LieAlgebra::from_brackets({"x", "y"}, {{0, 1, {Rational(1), Rational(0)}}});
}

inline ComplexStructure pairing_structure(std::size_t n)
{
    if (n % 2 != 0) throw error("pairing structure needs even dimension");
    LinearMap j(n, n);
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        j(k + 1, k) = 1;
        j(k, k + 1) = -1;
    }
    return ComplexStructure{j};
}

/// The Heisenberg algebra h_n: basis x_1, y_1, ..., x_n, y_n, z with
/// [x_i, y_i] = z.
inline LieAlgebra heisenberg_algebra(std::size_t n)
{
    const std::size_t d = 2 * n + 1;
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("x" + std::to_string(i));
        names.push_back("y" + std::to_string(i));
    }
    names.push_back("z");
    std::vector<std::tuple<std::size_t, std::size_t, Vector>> brackets;
    for (std::size_t i = 0; i < n; ++i) {
        Vector z(d, Rational(0));
        z[d - 1] = 1;
        brackets.emplace_back(2 * i, 2 * i + 1, z);
    }
    return LieAlgebra::from_brackets(std::move(names), brackets);
}

/// R x h_n on basis w, z, x_1, y_1, ..., x_n, y_n with [x_i, y_i] = z and the
/// abelian structure Jz = w, Jx_i = y_i.
inline CatalogEntry heisenberg_example(std::size_t n)
{
    if (n < 1) throw error("heisenberg_example requires n >= 1");
    const std::size_t d = 2 * n + 2;
    std::vector<std::string> names{"w", "z"};
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("x" + std::to_string(i));
        names.push_back("y" + std::to_string(i));
    }
    std::vector<std::tuple<std::size_t, std::size_t, Vector>> brackets;
    for (std::size_t i = 0; i < n; ++i) {
        Vector z(d, Rational(0));
        z[1] = 1;
        brackets.emplace_back(2 + 2 * i, 3 + 2 * i, z);
    }
    LieAlgebra g = LieAlgebra::from_brackets(std::move(names), brackets);

    LinearMap j(d, d);
    j(0, 1) = 1;  // Jz = w
    j(1, 0) = -1; // Jw = -z
    for (std::size_t i = 0; i < n; ++i) {
        j(3 + 2 * i, 2 + 2 * i) = 1;
        j(2 + 2 * i, 3 + 2 * i) = -1;
    }
    ExpectedProperties exp;
    exp.abelian = true;
    exp.solvable = true;
    exp.nilpotency_class = 2;
    exp.dim_center = 2;
    exp.dim_commutator = 1;
    return detail::make_entry("RxH" + std::to_string(n), std::move(g), {ComplexStructure{j}}, false,
                              std::nullopt, std::nullopt, exp);
}

/// The solvable family s = span{x_1, y_1, .., x_k, y_k} + v with
/// [x_j, v] = T_j Jv v and [y_j, v] = T_j v, carrying the abelian structure
/// Jx_j = y_j, J|_v = Jv. Requires a commuting family T with
/// T_i T_j = -T_i Jv T_j Jv for all i, j.
inline CatalogEntry example_family(std::size_t k, std::size_t n, const std::vector<LinearMap>& ts,
                                   const LinearMap& jv, const std::string& id = "family")
{
    if (k < 1 || n < 1) throw error("example_family requires k, n >= 1");
    const std::size_t vdim = 2 * n;
    if (ts.size() != k) throw error("example_family: expected k endomorphisms");
    if (jv.rows() != vdim || jv.cols() != vdim || jv * jv != -LinearMap::identity(vdim))
        throw error("example_family: Jv is not a complex structure on v");
    for (const LinearMap& t : ts)
        if (t.rows() != vdim || t.cols() != vdim) throw error("example_family: T has wrong shape");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (ts[i] * ts[j] != ts[j] * ts[i])
                throw error("example_family: T_" + std::to_string(i + 1) + " and T_" +
                            std::to_string(j + 1) + " do not commute");
            if (ts[i] * ts[j] != -(ts[i] * jv * ts[j] * jv))
                throw error("example_family: compatibility T_i T_j = -T_i Jv T_j Jv fails at pair (" +
                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }

    const std::size_t d = 2 * k + vdim;
    LieAlgebra g = LieAlgebra::zero_algebra(d);
    for (std::size_t j = 0; j < k; ++j) {
        g.basis_names[2 * j] = "x" + std::to_string(j + 1);
        g.basis_names[2 * j + 1] = "y" + std::to_string(j + 1);
    }
    for (std::size_t a = 0; a < vdim; ++a) g.basis_names[2 * k + a] = "v" + std::to_string(a + 1);

    auto embed_v = [&](const Vector& v) {
        Vector w(d, Rational(0));
        for (std::size_t a = 0; a < vdim; ++a) w[2 * k + a] = v[a];
        return w;
    };
    for (std::size_t j = 0; j < k; ++j) {
        const LinearMap tj_jv = ts[j] * jv;
        for (std::size_t a = 0; a < vdim; ++a) {
            const Vector xa = embed_v(tj_jv.col(a));
            g.table[2 * j][2 * k + a] = xa;
            g.table[2 * k + a][2 * j] = vec_neg(xa);
            const Vector ya = embed_v(ts[j].col(a));
            g.table[2 * j + 1][2 * k + a] = ya;
            g.table[2 * k + a][2 * j + 1] = vec_neg(ya);
        }
    }

    LinearMap j_mat(d, d);
    for (std::size_t j = 0; j < k; ++j) {
        j_mat(2 * j + 1, 2 * j) = 1;
        j_mat(2 * j, 2 * j + 1) = -1;
    }
    for (std::size_t a = 0; a < vdim; ++a)
        for (std::size_t b = 0; b < vdim; ++b) j_mat(2 * k + a, 2 * k + b) = jv(a, b);

    const ComplexStructure J{j_mat};
    ExpectedProperties exp;
    exp.abelian = true;
    exp.solvable = true;
    exp.nilpotency_class = nilpotency_class(g);
    exp.dim_center = center(g).dim();
    exp.dim_commutator = commutator_subalgebra(g).dim();
    if (exp.dim_commutator > vdim)
        throw error("example_family: commutator escaped v"); // cannot happen
    return detail::make_entry(id, std::move(g), {J}, false, std::nullopt, std::nullopt, exp);
}

/// Free two-step nilpotent algebra of rank n: generators v_1..v_n and
/// [v_i, v_j] = z_i_j for i < j; no complex structure attached.
inline CatalogEntry free_two_step(std::size_t n)
{
    if (n < 2) throw error("free_two_step requires n >= 2");
    const std::size_t zdim = n * (n - 1) / 2;
    const std::size_t d = n + zdim;
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::size_t, std::size_t>> zindex;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            names.push_back("z_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            zindex.emplace_back(i, j);
        }
    std::vector<std::tuple<std::size_t, std::size_t, Vector>> brackets;
    for (std::size_t t = 0; t < zindex.size(); ++t) {
        Vector v(d, Rational(0));
        v[n + t] = 1;
        brackets.emplace_back(zindex[t].first, zindex[t].second, v);
    }
    LieAlgebra g = LieAlgebra::from_brackets(std::move(names), brackets);
    ExpectedProperties exp;
    exp.solvable = true;
    exp.nilpotency_class = 2;
    exp.dim_center = zdim;
    exp.dim_commutator = zdim;
    return detail::make_entry("free2step-" + std::to_string(n), std::move(g), {}, false, std::nullopt,
                              std::nullopt, exp);
}

/// s = R a + n with [a, x] = D x for a derivation D of n. Nonsingular D
/// forces [s,s] to contain n, so the commutator has codimension <= 1.
inline CatalogEntry derivation_extension(const LieAlgebra& n_alg, const LinearMap& d_map,
                                         const std::string& id = "derext")
{
    const std::size_t n = n_alg.dim();
    if (d_map.rows() != n || d_map.cols() != n) throw error("derivation has wrong shape");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector lhs = d_map.apply(n_alg.table[i][j]);
            const Vector rhs = vec_add(bracket(n_alg, d_map.col(i), unit_vector(n, j)),
                                       bracket(n_alg, unit_vector(n, i), d_map.col(j)));
            if (lhs != rhs) throw error("D is not a derivation of n");
        }
    const bool nonsingular = inverse(d_map).has_value();

    const std::size_t d = n + 1;
    LieAlgebra s = LieAlgebra::zero_algebra(d);
    s.basis_names[0] = "a";
    for (std::size_t i = 0; i < n; ++i) s.basis_names[1 + i] = n_alg.basis_names[i];
    auto embed = [&](const Vector& v) {
        Vector w(d, Rational(0));
        for (std::size_t t = 0; t < n; ++t) w[1 + t] = v[t];
        return w;
    };
    for (std::size_t i = 0; i < n; ++i) {
        const Vector di = embed(d_map.col(i));
        s.table[0][1 + i] = di;
        s.table[1 + i][0] = vec_neg(di);
        for (std::size_t j = 0; j < n; ++j) s.table[1 + i][1 + j] = embed(n_alg.table[i][j]);
    }
    ExpectedProperties exp;
    exp.solvable = is_solvable(s);
    exp.nilpotency_class = nilpotency_class(s);
    exp.dim_center = center(s).dim();
    exp.dim_commutator = commutator_subalgebra(s).dim();
    if (nonsingular && d - exp.dim_commutator > 1)
        throw error("nonsingular derivation extension must have codim-1 commutator");
    return detail::make_entry(id, std::move(s), {}, false, std::nullopt, std::nullopt, exp);
}

/// The 4-dimensional catalog S0, S1, S2, S8, S9, S10, S11 with an abelian J
/// and the paired commutative algebra A for which s/z = aff(A).
inline CatalogEntry four_dim(const std::string& id)
{
    ExpectedProperties exp;
    exp.abelian = true;
    exp.solvable = true;

    if (id == "S0") {
        exp.nilpotency_class = 1;
        exp.dim_center = 4;
        exp.dim_commutator = 0;
        return detail::make_entry(id, LieAlgebra::zero_algebra(4), {pairing_structure(4)}, false,
                                  trivial_algebra(0), std::nullopt, exp);
    }
    if (id == "S1") {
        CatalogEntry h = heisenberg_example(1);
        exp.nilpotency_class = 2;
        exp.dim_center = 2;
        exp.dim_commutator = 1;
        return detail::make_entry(id, h.algebra, h.structures, false, trivial_algebra(1),
                                  std::nullopt, exp);
    }
    if (id == "S2") {
        LieAlgebra g = direct_sum(aff_r_algebra(), LieAlgebra::zero_algebra(2, "u"));
        LinearMap j(4, 4);
        j(1, 0) = 1; // Jx = y
        j(0, 1) = -1;
        j(3, 2) = 1; // Ju1 = u2
        j(2, 3) = -1;
        exp.nilpotency_class = std::nullopt;
        exp.dim_center = 2;
        exp.dim_commutator = 1;
        return detail::make_entry(id, std::move(g), {ComplexStructure{j}}, false, reals_algebra(),
                                  std::nullopt, exp);
    }

    // S8, S9, S10, S11 are aff(A) for the four two-dimensional commutative
    // algebras paired with them.
    std::optional<AssociativeAlgebra> A;
    std::optional<LinearMap> i_map;
    bool hyper = false;
    if (id == "S8") A = diag2_algebra();
    else if (id == "S9") A = jordan2_algebra();
    else if (id == "S10") A = split2_algebra();
    else if (id == "S11") {
        const ComplexAlgebraStructure c = complexes_algebra();
        A = c.base;
        i_map = c.i_map;
        hyper = true;
    } else {
        throw error("unknown catalog id '" + id + "'");
    }
    LieAlgebra g = aff(*A);
    std::vector<ComplexStructure> structures{standard_aff_J(*A)};
    if (hyper) structures.push_back(standard_aff_K(ComplexAlgebraStructure{*A, *i_map}));
    exp.nilpotency_class = std::nullopt;
    exp.dim_center = 0;
    exp.dim_commutator = 2;
    return detail::make_entry(id, std::move(g), std::move(structures), hyper, std::move(A),
                              std::move(i_map), exp);
}

/// aff of the k-step Toeplitz algebra, with its abelian hypercomplex pair.
inline CatalogEntry toeplitz_entry(std::size_t k)
{
    const ComplexAlgebraStructure c = toeplitz_algebra(k);
    LieAlgebra g = aff(c.base);
    ExpectedProperties exp;
    exp.abelian = true;
    exp.solvable = true;
    exp.nilpotency_class = k;
    exp.dim_center = 4;
    exp.dim_commutator = 2 * (k - 1);
    return detail::make_entry("toeplitz-" + std::to_string(k), std::move(g),
                              {standard_aff_J(c.base), standard_aff_K(c)}, true, c.base, c.i_map,
                              exp);
}

inline CatalogEntry aff_r_entry()
{
    LieAlgebra g = aff_r_algebra();
    LinearMap j(2, 2);
    j(1, 0) = 1;
    j(0, 1) = -1;
    ExpectedProperties exp;
    exp.abelian = true;
    exp.solvable = true;
    exp.nilpotency_class = std::nullopt;
    exp.dim_center = 0;
    exp.dim_commutator = 1;
    return detail::make_entry("affR", std::move(g), {ComplexStructure{j}}, false, reals_algebra(),
                              std::nullopt, exp);
}

inline LinearMap rotation_block(std::size_t n2)
{
    if (n2 % 2 != 0) throw error("rotation block needs even dimension");
    LinearMap j(n2, n2);
    for (std::size_t k = 0; k + 1 < n2; k += 2) {
        j(k + 1, k) = 1;
        j(k, k + 1) = -1;
    }
    return j;
}

inline CatalogEntry named_family(std::size_t k, std::size_t n)
{
    const std::size_t vdim = 2 * n;
    const LinearMap jv = rotation_block(vdim);
    std::vector<LinearMap> ts;
    ts.push_back(LinearMap::identity(vdim));
    if (k >= 2) ts.push_back(jv);
    if (k > 2) throw error("named_family only provides k <= 2");
    return example_family(k, n, ts, jv,
                          "family-" + std::to_string(k) + "-" + std::to_string(n));
}

inline std::vector<std::string> catalog_ids()
{
    std::vector<std::string> ids{"S0", "S1", "S2", "S8", "S9", "S10", "S11", "affR", "RxH1", "RxH2"};
    for (std::size_t k = 1; k <= 5; ++k) ids.push_back("toeplitz-" + std::to_string(k));
    ids.insert(ids.end(), {"family-1-1", "family-2-1", "family-1-2"});
    ids.insert(ids.end(), {"free2step-2", "free2step-3", "free2step-4"});
    ids.insert(ids.end(), {"derext-R2", "derext-h1", "derext-h2"});
    return ids;
}

inline CatalogEntry catalog_entry(const std::string& id)
{
    if (id == "S0" || id == "S1" || id == "S2" || id == "S8" || id == "S9" || id == "S10" ||
        id == "S11")
        return four_dim(id);
    if (id == "affR") return aff_r_entry();
    if (id.rfind("RxH", 0) == 0) return heisenberg_example(std::stoul(id.substr(3)));
    if (id.rfind("toeplitz-", 0) == 0) return toeplitz_entry(std::stoul(id.substr(9)));
    if (id.rfind("family-", 0) == 0) {
        const std::string rest = id.substr(7);
        const std::size_t dash = rest.find('-');
        if (dash == std::string::npos) throw error("unknown catalog id '" + id + "'");
        return named_family(std::stoul(rest.substr(0, dash)), std::stoul(rest.substr(dash + 1)));
    }
    if (id.rfind("free2step-", 0) == 0) return free_two_step(std::stoul(id.substr(10)));
    if (id == "derext-R2")
        return derivation_extension(LieAlgebra::zero_algebra(2), LinearMap::identity(2), id);
    if (id == "derext-h1") {
        LinearMap d = LinearMap::identity(3);
        d(2, 2) = 2; // grading derivation of h_1
        return derivation_extension(heisenberg_algebra(1), d, id);
    }
    if (id == "derext-h2") {
        LinearMap d = LinearMap::identity(5);
        d(4, 4) = 2;
        return derivation_extension(heisenberg_algebra(2), d, id);
    }
    throw error("unknown catalog id '" + id + "'");
}

inline std::vector<CatalogEntry> all_entries()
{
    std::vector<CatalogEntry> out;
    for (const std::string& id : catalog_ids()) out.push_back(catalog_entry(id));
    return out;
}

} // namespace acs

#endif

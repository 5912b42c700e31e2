#ifndef ACS_OBSTRUCTIONS_HPP
#define ACS_OBSTRUCTIONS_HPP

#include <acs/catalog.hpp>
#include <acs/complex_structure.hpp>
#include <acs/lie_algebra.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace acs {

enum class Verdict { ruled_out, admits, inconclusive };
enum class ObstructionReason { codim1, commutant, search_exhausted, odd_dim, none };

inline const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::ruled_out: return "ruled-out";
    case Verdict::admits: return "admits";
    default: return "inconclusive";
    }
}

inline const char* reason_name(ObstructionReason r)
{
    switch (r) {
    case ObstructionReason::codim1: return "codim1";
    case ObstructionReason::commutant: return "commutant";
    case ObstructionReason::search_exhausted: return "search-exhausted";
    case ObstructionReason::odd_dim: return "odd-dim";
    default: return "none";
    }
}

/// A verdict with machine-checkable evidence. "ruled-out" always carries the
/// numbers that rule the structure out; "admits" carries a witness J that has
/// passed is_abelian; "inconclusive" claims nothing.
struct ObstructionReport {
    std::string algebra_id;
    Verdict verdict = Verdict::inconclusive;
    ObstructionReason reason = ObstructionReason::none;
    std::string note;
    std::optional<std::size_t> dim;
    std::optional<std::size_t> codim_commutator;
    std::optional<std::size_t> commutant_dim;
    std::optional<std::size_t> jspan_dim;
    std::optional<std::size_t> candidates_tested;
    std::optional<ComplexStructure> witness;
};

/// Codimension-1 test: a solvable algebra whose commutator has codimension 1
/// admits an abelian complex structure only in dimension 2 (where it is
/// aff(R), and a witness is produced).
inline ObstructionReport codim1_obstruction(const LieAlgebra& s, const std::string& id = "")
{
    ObstructionReport rep;
    rep.algebra_id = id;
    rep.dim = s.dim();
    if (!is_solvable(s)) {
        rep.note = "algebra is not solvable; codimension-1 test does not apply";
        return rep;
    }
    const Subspace comm = commutator_subalgebra(s);
    const std::size_t codim = s.dim() - comm.dim();
    rep.codim_commutator = codim;
    if (codim == 1 && s.dim() > 2) {
        rep.verdict = Verdict::ruled_out;
        rep.reason = ObstructionReason::codim1;
        rep.note = "commutator has codimension 1 and dim > 2";
        return rep;
    }
    if (codim == 1 && s.dim() == 2) {
        // the algebra is aff(R): produce the witness Jx = y on an adapted basis
        const Vector x = comm.basis().row(0);
        std::size_t free_coord = 0;
        while (comm.contains(unit_vector(2, free_coord))) ++free_coord;
        const Vector y0 = unit_vector(2, free_coord);
        const Vector bx = bracket(s, x, y0);
        const auto mu = comm.coords(bx);
        if (!mu || (*mu)[0] == 0) throw error("codim1: degenerate 2-dimensional algebra");
        const Vector y = vec_scale(Rational(1) / (*mu)[0], y0);
        Matrix p(2, 2);
        p.set_col(0, x);
        p.set_col(1, y);
        const Matrix rot = {{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}};
        ComplexStructure witness{p * rot * *inverse(p)};
        if (!is_abelian(s, witness)) throw error("codim1: witness failed verification");
        rep.verdict = Verdict::admits;
        rep.reason = ObstructionReason::none;
        rep.witness = std::move(witness);
        rep.note = "dim 2 with codim-1 commutator is aff(R)";
        return rep;
    }
    rep.note = "commutator codimension is " + std::to_string(codim) + "; test is silent";
    return rep;
}

/// The maps j_z of a metric two-step nilpotent algebra: v is the
/// gram-orthogonal complement of the center and each j_z solves
/// <j_z v, w> = <z, [v,w]> exactly. Every j_z is gram-skew-symmetric.
struct JzFamily {
    Subspace v;
    Subspace z;
    std::vector<LinearMap> maps; // in v-basis coordinates, one per center basis vector
    Matrix gram;
};

inline bool is_positive_definite(const Matrix& g)
{
    if (!g.is_square()) return false;
    if (g != g.transpose()) return false;
    for (std::size_t k = 1; k <= g.rows(); ++k) {
        Matrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor(i, j) = g(i, j);
        if (determinant(minor) <= 0) return false;
    }
    return true;
}

inline JzFamily jz_family(const LieAlgebra& n_alg, const Matrix& gram)
{
    const std::size_t n = n_alg.dim();
    if (nilpotency_class(n_alg) != std::optional<std::size_t>(2))
        throw error("jz_family: algebra is not two-step nilpotent");
    if (gram.rows() != n || gram.cols() != n || !is_positive_definite(gram))
        throw error("jz_family: gram matrix is not positive definite");

    JzFamily fam;
    fam.gram = gram;
    fam.z = center(n_alg);
    fam.v = kernel(Matrix(fam.z.basis() * gram)); // gram-orthogonal complement of z
    if (fam.v.dim() + fam.z.dim() != n || span_intersect(fam.v, fam.z).dim() != 0)
        throw error("jz_family: orthogonal decomposition failed");

    const std::size_t p = fam.v.dim();
    const Matrix vcols = fam.v.basis().transpose();
    const Matrix gram_v = vcols.transpose() * gram * vcols;
    const Matrix gram_v_inv = *inverse(gram_v); // positive definite, hence invertible

    for (std::size_t r = 0; r < fam.z.dim(); ++r) {
        const Vector gz = gram.apply(fam.z.basis().row(r));
        Matrix c(p, p);
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t b = 0; b < p; ++b) {
                const Vector br = bracket(n_alg, fam.v.basis().row(a), fam.v.basis().row(b));
                Rational acc(0);
                for (std::size_t t = 0; t < n; ++t) acc += gz[t] * br[t];
                c(a, b) = acc;
            }
        const Matrix jz = gram_v_inv * c.transpose();
        // defining identity and gram-skew-symmetry, re-verified
        if (gram_v * jz != c.transpose()) throw error("jz_family: defining identity failed");
        const Matrix gj = gram_v * jz;
        if (gj != -gj.transpose()) throw error("jz_family: j_z is not gram-skew");
        fam.maps.push_back(jz);
    }
    return fam;
}

/// Commutant criterion on a metric two-step nilpotent algebra whose
/// commutator satisfies 2 dim [n,n] = p(p-1) with p = dim n - dim z >= 3:
/// the j_z then span all gram-skew matrices, and if only scalars commute
/// with all of them no abelian J can exist. Inconclusive when the dimension
/// hypothesis fails or the computed evidence does not materialize.
inline ObstructionReport two_step_commutant_obstruction(const LieAlgebra& n_alg, const Matrix& gram,
                                                        const std::string& id = "")
{
    ObstructionReport rep;
    rep.algebra_id = id;
    rep.dim = n_alg.dim();
    const JzFamily fam = jz_family(n_alg, gram);
    const std::size_t p = fam.v.dim();
    const std::size_t comm_dim = commutator_subalgebra(n_alg).dim();
    if (2 * comm_dim != p * (p - 1) || p < 3) {
        rep.note = "dimension hypothesis 2 dim[n,n] = p(p-1), p >= 3 does not hold";
        return rep;
    }

    std::vector<Vector> vecs;
    for (const LinearMap& m : fam.maps) vecs.push_back(m.vec());
    const Subspace jspan = Subspace::from_vectors(p * p, vecs);
    rep.jspan_dim = jspan.dim();

    std::vector<Matrix> span_basis;
    for (std::size_t r = 0; r < jspan.dim(); ++r)
        span_basis.push_back(Matrix::from_vec(p, p, jspan.basis().row(r)));
    const Subspace comm = commutant(span_basis, p);
    rep.commutant_dim = comm.dim();

    const bool surjective = jspan.dim() == p * (p - 1) / 2;
    const bool scalar_commutant = comm.dim() == 1 && comm.contains(Matrix::identity(p).vec());
    if (surjective && scalar_commutant) {
        rep.verdict = Verdict::ruled_out;
        rep.reason = ObstructionReason::commutant;
        rep.note = "j_z span all skew matrices and commute only with scalars";
    } else {
        rep.note = "expected obstruction evidence did not materialize"; // would contradict the theory
    }
    return rep;
}

/// Commutant criterion on the free two-step algebra of the given rank.
/// Requires rank >= 3 (rank 2 is h_1 territory, which does admit abelian
/// structures).
inline ObstructionReport free_two_step_obstruction(std::size_t rank)
{
    if (rank < 3) throw error("free_two_step_obstruction requires rank >= 3");
    const CatalogEntry entry = free_two_step(rank);
    return two_step_commutant_obstruction(entry.algebra, Matrix::identity(entry.algebra.dim()),
                                          entry.id);
}

namespace detail {
/// Enumerates J with J e_i = +-e_{sigma(i)} for perfect matchings sigma,
/// in a fixed order; returns true when the visitor stops the walk.
inline bool enumerate_pairings(std::vector<int>& partner, std::vector<int>& sign, std::size_t n,
                               const std::function<bool()>& visit)
{
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i)
        if (partner[i] < 0) {
            first = i;
            break;
        }
    if (first == n) return visit();
    for (std::size_t j = first + 1; j < n; ++j) {
        if (partner[j] >= 0) continue;
        partner[first] = static_cast<int>(j);
        partner[j] = static_cast<int>(first);
        for (int s : {1, -1}) {
            sign[first] = s;
            if (enumerate_pairings(partner, sign, n, visit)) return true;
        }
        partner[first] = partner[j] = -1;
    }
    return false;
}
} // namespace detail

/// Bounded structured search for an abelian J. Candidates are signed
/// pairings of the standard basis, then signed pairings of a center-adapted
/// basis (block-diagonal over z and a complement: for an abelian J the
/// center is necessarily J-stable, and the off-diagonal coupling solves a
/// homogeneous linear system whose canonical solution is zero). Incomplete
/// by design: the outcome is admits + verified witness or search-exhausted;
/// the only negative verdict is for odd dimension, where no almost complex
/// structure exists at all.
inline ObstructionReport search_abelian_J(const LieAlgebra& s, std::size_t budget,
                                          const std::string& id = "")
{
    ObstructionReport rep;
    rep.algebra_id = id;
    rep.dim = s.dim();
    const std::size_t n = s.dim();
    if (n % 2 != 0) {
        rep.verdict = Verdict::ruled_out;
        rep.reason = ObstructionReason::odd_dim;
        rep.note = "odd dimension admits no almost complex structure";
        return rep;
    }

    std::size_t tested = 0;
    std::optional<ComplexStructure> found;

    auto try_candidate = [&](const LinearMap& j) {
        if (tested >= budget) return true;
        ++tested;
        ComplexStructure cand{j};
        if (is_abelian(s, cand)) {
            found = std::move(cand);
            return true;
        }
        return false;
    };

    {
        std::vector<int> partner(n, -1), sign(n, 1);
        detail::enumerate_pairings(partner, sign, n, [&]() {
            LinearMap j(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                if (partner[i] < 0) continue;
                const auto p = static_cast<std::size_t>(partner[i]);
                if (p > i) {
                    j(p, i) = sign[i];
                    j(i, p) = -sign[i];
                }
            }
            return try_candidate(j);
        });
    }

    if (!found && tested < budget) {
        // adapted stage: block-diagonal over center + canonical complement
        const Subspace z = center(s);
        if (z.dim() % 2 == 0 && z.dim() > 0 && z.dim() < n) {
            Matrix p(n, n);
            for (std::size_t r = 0; r < z.dim(); ++r) p.set_col(r, z.basis().row(r));
            const auto comp = z.complement_coords();
            for (std::size_t k = 0; k < comp.size(); ++k)
                p.set_col(z.dim() + k, unit_vector(n, comp[k]));
            const Matrix pinv = *inverse(p);

            std::vector<int> pz(z.dim(), -1), sz(z.dim(), 1);
            detail::enumerate_pairings(pz, sz, z.dim(), [&]() {
                std::vector<int> pc(comp.size(), -1), sc(comp.size(), 1);
                return detail::enumerate_pairings(pc, sc, comp.size(), [&]() {
                    LinearMap j(n, n);
                    auto fill = [&](const std::vector<int>& partner, const std::vector<int>& sign,
                                    std::size_t off) {
                        for (std::size_t i = 0; i < partner.size(); ++i) {
                            if (partner[i] < 0) continue;
                            const auto q = static_cast<std::size_t>(partner[i]);
                            if (q > i) {
                                j(off + q, off + i) = sign[i];
                                j(off + i, off + q) = -sign[i];
                            }
                        }
                    };
                    fill(pz, sz, 0);
                    fill(pc, sc, z.dim());
                    return try_candidate(p * j * pinv);
                });
            });
        }
    }

    rep.candidates_tested = tested;
    if (found) {
        if (!is_abelian(s, *found)) throw error("search: witness failed re-verification");
        rep.verdict = Verdict::admits;
        rep.witness = std::move(found);
        rep.note = "structured search found a verified witness";
    } else {
        rep.reason = ObstructionReason::search_exhausted;
        rep.note = tested >= budget ? "candidate budget exhausted" : "candidate space exhausted";
    }
    return rep;
}

} // namespace acs

#endif

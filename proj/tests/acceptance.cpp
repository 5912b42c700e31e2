// Acceptance suite: one line per criterion, exact arithmetic throughout, so
// every comparison is equality (zero tolerance). Exits nonzero if any
// criterion fails.

#include <acs/affine.hpp>
#include <acs/catalog.hpp>
#include <acs/complex_structure.hpp>
#include <acs/decomposition.hpp>
#include <acs/io.hpp>
#include <acs/lie_algebra.hpp>
#include <acs/obstructions.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "test_support.hpp"

using namespace acs;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what)
{
    if (!cond) throw Failure(what);
}

struct CorpusItem {
    std::string id;
    LieAlgebra algebra;
    ComplexStructure structure;
};

// every (g, J) pair the laws quantify over: catalog structures plus the
// deliberately non-abelian integrable examples
std::vector<CorpusItem> structured_corpus()
{
    std::vector<CorpusItem> items;
    for (const CatalogEntry& e : all_entries())
        for (std::size_t s = 0; s < e.structures.size(); ++s)
            items.push_back({e.id + (s ? "/K" : "/J"), e.algebra, e.structures[s]});
    const AssociativeAlgebra ut = upper_triangular2_algebra();
    items.push_back({"aff(ut2)/J", aff(ut), standard_aff_J(ut)});
    LinearMap rot(2, 2);
    rot(1, 0) = 1;
    rot(0, 1) = -1;
    const GlWithStructure l = gl_with_structure(2, rot, Side::left);
    items.push_back({"gl2/L_I", l.algebra, l.structure});
    const GlWithStructure r = gl_with_structure(2, rot, Side::right);
    items.push_back({"gl2/R_I", r.algebra, r.structure});
    return items;
}

void criterion_catalog_soundness()
{
    const auto t0 = Clock::now();
    for (const std::string& id : {"S0", "S1", "S2", "S8", "S9", "S10", "S11"}) {
        const CatalogEntry e = catalog_entry(id);
        require(validate(e.algebra).ok(), id + " failed validation");
        require(!e.structures.empty(), id + " has no structure");
        require(is_abelian(e.algebra, e.structures[0]), id + " catalog J is not abelian");
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    require(ms.count() < 1000, "seven-entry check took " + std::to_string(ms.count()) + " ms");
}

void criterion_equivalence()
{
    auto check_equivalence = [](const std::string& id, const LieAlgebra& g,
                                const ComplexStructure& j) {
        const bool a = is_abelian(g, j);
        const auto sub = subalgebras_abelian(g, j);
        const bool b = sub.first && sub.second;
        const bool c = adjoint_holomorphy(g, j);
        const bool d = coadjoint_holomorphy(g, j);
        require(a == b && a == c && a == d, "characterizations disagree on " + id);
    };
    const std::vector<CorpusItem> corpus = structured_corpus();
    for (const CorpusItem& item : corpus) check_equivalence(item.id, item.algebra, item.structure);

    testing::Rng rng(271828);
    std::size_t conjugates = 0, cursor = 0;
    while (conjugates < 50) {
        const CorpusItem& item = corpus[cursor++ % corpus.size()];
        if (item.algebra.dim() > 12 || item.algebra.dim() == 0) continue;
        const Matrix p = testing::random_unimodular(rng, item.algebra.dim());
        const LieAlgebra g2 = change_basis(item.algebra, p);
        const ComplexStructure j2{p * item.structure.j * *inverse(p)};
        check_equivalence(item.id + "#conj", g2, j2);
        ++conjugates;
    }
}

void criterion_aff_law()
{
    std::vector<AssociativeAlgebra> commutative{reals_algebra(), complexes_algebra().base,
                                                diag2_algebra(), jordan2_algebra(),
                                                split2_algebra()};
    for (std::size_t n = 1; n <= 4; ++n) commutative.push_back(trivial_algebra(n));
    for (std::size_t k = 1; k <= 5; ++k) commutative.push_back(toeplitz_algebra(k).base);
    for (const AssociativeAlgebra& a : commutative) {
        const LieAlgebra g = aff(a); // throws if Jacobi fails
        require(validate(g).ok(), "aff(A) failed validation");
        require(is_abelian(g, standard_aff_J(a)), "standard J not abelian on aff(A)");
    }
    std::vector<ComplexAlgebraStructure> complex_algebras{complexes_algebra()};
    for (std::size_t k = 1; k <= 5; ++k) complex_algebras.push_back(toeplitz_algebra(k));
    for (const ComplexAlgebraStructure& c : complex_algebras) {
        const LieAlgebra g = aff(c.base);
        const ComplexStructure j = standard_aff_J(c.base);
        for (const KSign sign : {KSign::sec2, KSign::sec3})
            require(is_abelian_hypercomplex(g, j, standard_aff_K(c, sign)),
                    "hypercomplex pair failed for K sign " +
                        std::string(sign == KSign::sec2 ? "sec2" : "sec3"));
    }
}

void criterion_toeplitz_nilpotency()
{
    for (std::size_t k = 1; k <= 5; ++k) {
        const auto cls = nilpotency_class(aff(toeplitz_algebra(k).base));
        require(cls.has_value(), "aff(toeplitz) not nilpotent");
        require(*cls == k, "aff(toeplitz(" + std::to_string(k) + ")) has class " +
                               std::to_string(*cls));
    }
}

void criterion_connection()
{
    std::vector<AssociativeAlgebra> algebras{reals_algebra(),   complexes_algebra().base,
                                             diag2_algebra(),   jordan2_algebra(),
                                             split2_algebra(),  trivial_algebra(3),
                                             toeplitz_algebra(2).base,
                                             upper_triangular2_algebra()};
    for (const AssociativeAlgebra& a : algebras) {
        const ConnectionReport rep = connection_checks(a);
        require(rep.torsion_free && rep.flat && rep.j_parallel, "connection identity failed");
    }
}

void criterion_affine_certificates()
{
    {
        const CatalogEntry e = heisenberg_example(1);
        const Subspace u =
            Subspace::from_vectors(4, {unit_vector(4, 1), unit_vector(4, 2)}); // span{z, x1}
        const AffineCertificate cert = affine_quotient(e.algebra, e.structures[0], u);
        require(cert.A.m == trivial_algebra(1).m, "R x h_1 did not reconstruct trivial R");
        require(cert.kernel_f == center(e.algebra), "kernel(f) != center on R x h_1");
    }
    {
        const CatalogEntry e = four_dim("S11");
        const Subspace u =
            Subspace::from_vectors(4, {unit_vector(4, 2), unit_vector(4, 3)}); // b-part
        const AffineCertificate cert = affine_quotient(e.algebra, e.structures[0], u);
        require(cert.A.m == complexes_algebra().base.m, "aff(C) did not reconstruct standard C");
        require(cert.kernel_f == center(e.algebra), "kernel(f) != center on aff(C)");
    }
}

void criterion_flag_decomposition()
{
    std::vector<std::pair<std::string, std::string>> first_runs;
    for (const CatalogEntry& e : all_entries()) {
        if (e.structures.empty()) continue;
        require(is_abelian(e.algebra, e.structures[0]), e.id + " lost its abelian structure");
        const FlagDecomposition flag = flag_decomposition(e.algebra, e.structures[0]);
        require(!flag.steps.empty() || e.algebra.dim() == 0, e.id + " produced an empty flag");
        require(flag.steps.back().ideal.dim() == e.algebra.dim(), e.id + " flag incomplete");
        first_runs.emplace_back(e.id, dump_canonical(flag_to_json(flag)));
    }
    // the two-block family instances are part of the corpus; re-run all
    // decompositions and demand byte-identical output
    std::size_t idx = 0;
    for (const CatalogEntry& e : all_entries()) {
        if (e.structures.empty()) continue;
        const std::string again =
            dump_canonical(flag_to_json(flag_decomposition(e.algebra, e.structures[0])));
        require(again == first_runs[idx].second, e.id + " flag is nondeterministic");
        ++idx;
    }
    for (const std::string& id : {"family-1-1", "family-2-1", "family-1-2"}) {
        bool found = false;
        for (const auto& [eid, text] : first_runs) found = found || eid == id;
        require(found, id + " missing from the decomposition corpus");
    }
}

void criterion_solvability_law()
{
    std::size_t abelian_seen = 0;
    for (const CorpusItem& item : structured_corpus())
        if (is_abelian(item.algebra, item.structure)) {
            ++abelian_seen;
            require(is_solvable(item.algebra), item.id + " abelian but not solvable");
        }
    require(abelian_seen > 0, "no abelian structures in the corpus");

    testing::Rng rng(314159);
    const std::vector<CorpusItem> corpus = structured_corpus();
    std::size_t conjugates = 0, cursor = 0;
    while (conjugates < 100) {
        const CorpusItem& item = corpus[cursor++ % corpus.size()];
        if (item.algebra.dim() > 12 || item.algebra.dim() == 0) continue;
        if (!is_abelian(item.algebra, item.structure)) continue;
        const Matrix p = testing::random_unimodular(rng, item.algebra.dim());
        const LieAlgebra g2 = change_basis(item.algebra, p);
        const ComplexStructure j2{p * item.structure.j * *inverse(p)};
        require(is_abelian(g2, j2), "conjugation destroyed abelian-ness on " + item.id);
        require(is_solvable(g2), "abelian conjugate of " + item.id + " not solvable");
        ++conjugates;
    }
}

void criterion_obstructions()
{
    const std::vector<std::pair<std::string, std::size_t>> derexts{
        {"derext-R2", 3}, {"derext-h1", 4}, {"derext-h2", 6}};
    for (const auto& [id, dim] : derexts) {
        const CatalogEntry e = catalog_entry(id);
        require(e.algebra.dim() == dim, id + " has unexpected dimension");
        const ObstructionReport rep = codim1_obstruction(e.algebra, id);
        require(rep.verdict == Verdict::ruled_out && rep.reason == ObstructionReason::codim1,
                id + " was not ruled out");
    }

    const ObstructionReport r3 = free_two_step_obstruction(3);
    require(r3.verdict == Verdict::ruled_out && r3.commutant_dim == 1 && r3.jspan_dim == 3,
            "free rank-3 obstruction evidence mismatch");
    const ObstructionReport r4 = free_two_step_obstruction(4);
    require(r4.verdict == Verdict::ruled_out && r4.commutant_dim == 1 && r4.jspan_dim == 6,
            "free rank-4 obstruction evidence mismatch");

    for (const std::string& id : {"S8", "RxH1"}) {
        const CatalogEntry e = catalog_entry(id);
        const ObstructionReport rep = search_abelian_J(e.algebra, 10000, id);
        require(rep.verdict == Verdict::admits, "search missed the witness on " + id);
        require(rep.candidates_tested && *rep.candidates_tested <= 10000,
                "search exceeded its budget on " + id);
        require(is_abelian(e.algebra, *rep.witness), "witness failed verification on " + id);
    }
}

void criterion_round_trip()
{
    for (const CatalogEntry& e : all_entries()) {
        const std::string text = dump_canonical(lie_algebra_to_json(e.algebra));
        const std::string again =
            dump_canonical(lie_algebra_to_json(lie_algebra_from_json(parse_json_text(text)).algebra));
        require(text == again, e.id + " algebra round trip not byte-identical");
        for (const ComplexStructure& s : e.structures) {
            const std::string st = dump_canonical(structure_to_json(s));
            require(dump_canonical(structure_to_json(structure_from_json(parse_json_text(st)))) == st,
                    e.id + " structure round trip not byte-identical");
        }
        if (e.paired_algebra) {
            const std::string at =
                dump_canonical(associative_to_json(*e.paired_algebra, e.paired_i_map));
            const AssociativeAlgebraFile af = associative_from_json(parse_json_text(at));
            require(dump_canonical(associative_to_json(af.algebra, af.i_map)) == at,
                    e.id + " paired algebra round trip not byte-identical");
        }
    }
}

} // namespace

int main()
{
    const auto suite_start = Clock::now();
    const std::vector<std::pair<std::string, std::function<void()>>> criteria{
        {"1 catalog soundness: S0,S1,S2,S8,S9,S10,S11 validate and are abelian in < 1 s",
         criterion_catalog_soundness},
        {"2 equivalence of the four abelian characterizations (corpus + 50 conjugates)",
         criterion_equivalence},
        {"3 aff(A) law: Jacobi + abelian J + hypercomplex pairs under both K signs",
         criterion_aff_law},
        {"4 k-step nilpotency of aff(toeplitz(k)) for k = 1..5", criterion_toeplitz_nilpotency},
        {"5 connection torsion-free / flat / J-parallel for every bundled A",
         criterion_connection},
        {"6 affine certificates reproduce the paired algebras exactly",
         criterion_affine_certificates},
        {"7 flag decomposition with verified certificates, deterministic across runs",
         criterion_flag_decomposition},
        {"8 abelian implies solvable (corpus + 100 conjugates)", criterion_solvability_law},
        {"9 obstructions: codim-1 rule-outs, free two-step ranks 3 and 4, search witnesses",
         criterion_obstructions},
        {"10 emit/parse/emit byte-identity for the whole catalog", criterion_round_trip},
    };

    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto t0 = Clock::now();
        try {
            run();
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
            std::cout << "PASS  criterion " << name << "  [" << ms.count() << " ms]\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL  criterion " << name << "  -- " << e.what() << "\n";
        }
    }

    const auto total =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - suite_start);
    std::cout << "acceptance total: " << total.count() << " ms\n";
    if (total.count() >= 60000) {
        std::cout << "FAIL  criterion 10 runtime bound: suite exceeded 60 s\n";
        ++failures;
    }
    return failures == 0 ? 0 : 1;
}

// Command-line frontend: batch verification of abelian complex structures,
// aff(A) construction, the example catalog, flag decomposition and the
// obstruction tests. Exit codes are a stable contract: 0 all requested
// verdicts hold, 1 mathematical failure, 2 malformed input.

#include <acs/affine.hpp>
#include <acs/catalog.hpp>
#include <acs/complex_structure.hpp>
#include <acs/decomposition.hpp>
#include <acs/io.hpp>
#include <acs/lie_algebra.hpp>
#include <acs/obstructions.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace acs;

namespace {

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

std::string out_path(const std::string& dir, const std::string& name)
{
    return (fs::path(dir) / name).string();
}

void emit_file(const std::string& path, const json& j)
{
    write_text_file(path, dump_canonical(j));
    std::cout << "wrote " << path << "\n";
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string series_dims(const SeriesReport& rep)
{
    std::string s;
    for (std::size_t i = 0; i < rep.terms.size(); ++i) {
        if (i) s += " > ";
        s += std::to_string(rep.terms[i].dim());
    }
    return s;
}

int run_check(const std::string& algebra_path, const std::optional<std::string>& j_path,
              const std::optional<std::string>& k_path, bool json_mode)
{
    const LieAlgebraFile file = lie_algebra_from_json(load_json_file(algebra_path));
    const LieAlgebra& g = file.algebra;
    const ValidationReport val = validate(g);

    json out;
    out["algebra"] = stem_of(algebra_path);
    out["dim"] = g.dim();
    out["valid"] = val.ok();
    if (!val.ok()) {
        out["skew_violations"] = val.skew.size();
        out["jacobi_violations"] = val.jacobi.size();
        if (json_mode) {
            std::cout << dump_canonical(out);
        } else {
            std::cout << "validation: FAILED (" << val.skew.size() << " skew, "
                      << val.jacobi.size() << " Jacobi violations)\n";
            for (const auto& v : val.skew)
                std::cout << "  skew violation at (" << g.basis_names[v.i] << ", "
                          << g.basis_names[v.j] << ")\n";
            for (const auto& v : val.jacobi)
                std::cout << "  Jacobi violation at (" << g.basis_names[v.i] << ", "
                          << g.basis_names[v.j] << ", " << g.basis_names[v.k] << ")\n";
        }
        return 1;
    }

    const SeriesReport derived = series(g, SeriesKind::derived);
    const SeriesReport lower = series(g, SeriesKind::lower_central);
    const auto nclass = nilpotency_class(g);
    out["solvable"] = is_solvable(g);
    out["nilpotent"] = nclass.has_value();
    if (nclass) out["nilpotency_class"] = *nclass;
    out["dim_center"] = center(g).dim();
    out["dim_commutator"] = commutator_subalgebra(g).dim();
    {
        json dims = json::array();
        for (const auto& t : derived.terms) dims.push_back(t.dim());
        out["derived_series_dims"] = dims;
        json dims2 = json::array();
        for (const auto& t : lower.terms) dims2.push_back(t.dim());
        out["lower_central_series_dims"] = dims2;
    }

    bool all_requested = true;
    if (j_path) {
        const ComplexStructure J = structure_from_json(load_json_file(*j_path));
        if (J.dim() != g.dim()) throw parse_error("structure dimension does not match algebra");
        const bool integ = is_integrable(g, J);
        const bool abel = is_abelian(g, J);
        const bool bilin = is_complex_bilinear(g, J);
        const auto sub = subalgebras_abelian(g, J);
        const bool adj = adjoint_holomorphy(g, J);
        const bool coadj = coadjoint_holomorphy(g, J);
        if (abel != (sub.first && sub.second) || abel != adj || abel != coadj)
            throw error("internal inconsistency: the four characterizations disagree");
        out["integrable"] = integ;
        out["abelian"] = abel;
        out["complex_bilinear"] = bilin;
        out["g10_abelian"] = sub.first;
        out["g01_abelian"] = sub.second;
        out["adjoint_holomorphic"] = adj;
        out["coadjoint_holomorphic"] = coadj;
        all_requested = all_requested && abel;

        if (k_path) {
            const ComplexStructure K = structure_from_json(load_json_file(*k_path));
            if (K.dim() != g.dim()) throw parse_error("structure dimension does not match algebra");
            const bool anti = anticommute(J, K);
            const bool hyper = anti && is_integrable(g, K);
            const bool abhyper = anti && abel && is_abelian(g, K);
            out["anticommute"] = anti;
            out["hypercomplex"] = hyper;
            out["abelian_hypercomplex"] = abhyper;
            all_requested = all_requested && abhyper;
        }
    }

    if (json_mode) {
        std::cout << dump_canonical(out);
    } else {
        std::cout << "algebra " << out["algebra"].get<std::string>() << ": dim " << g.dim()
                  << ", validation ok\n";
        std::cout << "  solvable: " << yesno(out["solvable"].get<bool>());
        if (nclass) std::cout << ", nilpotent of class " << *nclass;
        else std::cout << ", not nilpotent";
        std::cout << "\n  derived series dims: " << series_dims(derived)
                  << "\n  lower central series dims: " << series_dims(lower)
                  << "\n  center dim: " << out["dim_center"].get<std::size_t>()
                  << ", commutator dim: " << out["dim_commutator"].get<std::size_t>() << "\n";
        if (j_path) {
            std::cout << "structure " << stem_of(*j_path) << ":\n"
                      << "  integrable: " << yesno(out["integrable"].get<bool>())
                      << "\n  abelian: " << yesno(out["abelian"].get<bool>())
                      << "\n  complex-bilinear: " << yesno(out["complex_bilinear"].get<bool>())
                      << "\n  g^{1,0} abelian: " << yesno(out["g10_abelian"].get<bool>())
                      << ", g^{0,1} abelian: " << yesno(out["g01_abelian"].get<bool>())
                      << "\n  adjoint holomorphic: " << yesno(out["adjoint_holomorphic"].get<bool>())
                      << "\n  coadjoint holomorphic: "
                      << yesno(out["coadjoint_holomorphic"].get<bool>()) << "\n";
            if (k_path)
                std::cout << "pair (J, K): anticommute " << yesno(out["anticommute"].get<bool>())
                          << ", hypercomplex " << yesno(out["hypercomplex"].get<bool>())
                          << ", abelian hypercomplex "
                          << yesno(out["abelian_hypercomplex"].get<bool>()) << "\n";
        }
    }
    return all_requested ? 0 : 1;
}

int run_aff(const std::string& a_path, const std::string& out_dir, KSign ksign, bool json_mode)
{
    const AssociativeAlgebraFile file = associative_from_json(load_json_file(a_path));
    const AlgebraCheck chk = check_algebra(file.algebra);
    if (!chk.associative) throw error("input algebra is not associative; aff(A) refused");

    const LieAlgebra g = aff(file.algebra);
    const ComplexStructure J = standard_aff_J(file.algebra);
    std::optional<ComplexStructure> K;
    if (file.i_map) K = standard_aff_K(ComplexAlgebraStructure{file.algebra, *file.i_map}, ksign);

    if (json_mode) {
        json bundle;
        bundle["algebra"] = lie_algebra_to_json(g);
        bundle["J"] = structure_to_json(J);
        if (K) bundle["K"] = structure_to_json(*K);
        bundle["commutative"] = chk.commutative;
        std::cout << dump_canonical(bundle);
        return 0;
    }
    const std::string stem = stem_of(a_path);
    emit_file(out_path(out_dir, stem + "_aff.json"), lie_algebra_to_json(g));
    emit_file(out_path(out_dir, stem + "_aff_J.json"), structure_to_json(J));
    if (K) emit_file(out_path(out_dir, stem + "_aff_K.json"), structure_to_json(*K));
    std::cout << "aff(A): dim " << g.dim() << ", A " << (chk.commutative ? "commutative" : "noncommutative")
              << (K ? ", hypercomplex pair emitted" : "") << "\n";
    return 0;
}

int run_catalog_emit(const std::string& id, const std::string& out_dir, bool json_mode)
{
    const CatalogEntry entry = catalog_entry(id);
    json bundle;
    bundle["algebra"] = lie_algebra_to_json(entry.algebra);
    if (!entry.structures.empty()) bundle["J"] = structure_to_json(entry.structures[0]);
    if (entry.structures.size() > 1) bundle["K"] = structure_to_json(entry.structures[1]);
    if (entry.paired_algebra)
        bundle["A"] = associative_to_json(*entry.paired_algebra, entry.paired_i_map);
    if (json_mode) {
        std::cout << dump_canonical(bundle);
        return 0;
    }
    emit_file(out_path(out_dir, id + "_algebra.json"), bundle["algebra"]);
    if (bundle.contains("J")) emit_file(out_path(out_dir, id + "_J.json"), bundle["J"]);
    if (bundle.contains("K")) emit_file(out_path(out_dir, id + "_K.json"), bundle["K"]);
    if (bundle.contains("A")) emit_file(out_path(out_dir, id + "_A.json"), bundle["A"]);
    return 0;
}

int run_decompose(const std::string& algebra_path, const std::string& j_path,
                  const std::string& out_dir, bool json_mode)
{
    const LieAlgebraFile file = lie_algebra_from_json(load_json_file(algebra_path));
    if (!validate(file.algebra).ok()) throw error("algebra fails validation");
    const ComplexStructure J = structure_from_json(load_json_file(j_path));
    if (J.dim() != file.algebra.dim()) throw parse_error("structure dimension does not match algebra");

    const FlagDecomposition flag = flag_decomposition(file.algebra, J);
    const json report = flag_to_json(flag);
    if (json_mode) {
        std::cout << dump_canonical(report);
        return 0;
    }
    std::cout << "flag decomposition of " << stem_of(algebra_path) << ": " << flag.steps.size()
              << " step(s), all certificates verified\n";
    for (std::size_t i = 0; i < flag.steps.size(); ++i) {
        const FlagStep& s = flag.steps[i];
        std::cout << "  step " << (i + 1) << ": ideal dim " << s.ideal.dim() << ", remaining quotient dim "
                  << s.quotient_dim << ", A_" << (i + 1) << " dim " << s.certificate.A.dim();
        if (s.certificate.A.dim() > 0) {
            std::cout << " with products";
            bool any = false;
            for (std::size_t a = 0; a < s.certificate.A.dim(); ++a)
                for (std::size_t b = 0; b < s.certificate.A.dim(); ++b) {
                    if (vec_is_zero(s.certificate.A.m[a][b])) continue;
                    std::cout << (any ? ", " : " ") << "A" << (a + 1) << "*A" << (b + 1) << "={";
                    bool first = true;
                    for (std::size_t k = 0; k < s.certificate.A.dim(); ++k)
                        if (s.certificate.A.m[a][b][k] != 0) {
                            if (!first) std::cout << ",";
                            std::cout << s.certificate.A.basis_names[k] << ":"
                                      << rational_string(s.certificate.A.m[a][b][k]);
                            first = false;
                        }
                    std::cout << "}";
                    any = true;
                }
            if (!any) std::cout << " all zero";
        }
        std::cout << "\n";
    }
    emit_file(out_path(out_dir, stem_of(algebra_path) + "_flag.json"), report);
    return 0;
}

int run_obstruct(const std::optional<std::string>& algebra_path, std::optional<std::size_t> free_rank,
                 const std::optional<std::string>& gram_path, std::size_t budget, bool json_mode,
                 const std::optional<std::string>& out_dir)
{
    ObstructionReport rep;
    if (free_rank) {
        rep = free_two_step_obstruction(*free_rank);
    } else if (algebra_path) {
        const LieAlgebraFile file = lie_algebra_from_json(load_json_file(*algebra_path));
        if (!validate(file.algebra).ok()) throw error("algebra fails validation");
        const LieAlgebra& g = file.algebra;
        const std::string id = stem_of(*algebra_path);

        Matrix gram = Matrix::identity(g.dim());
        if (gram_path) gram = matrix_from_json(load_json_file(*gram_path));
        else if (file.gram) gram = *file.gram;

        if (g.dim() % 2 != 0) {
            rep = search_abelian_J(g, 0, id); // reports the odd-dimension rule-out
        } else {
            rep = codim1_obstruction(g, id);
            if (rep.verdict == Verdict::inconclusive &&
                nilpotency_class(g) == std::optional<std::size_t>(2)) {
                const ObstructionReport two = two_step_commutant_obstruction(g, gram, id);
                if (two.verdict == Verdict::ruled_out) rep = two;
                else if (two.jspan_dim) {
                    rep.jspan_dim = two.jspan_dim;
                    rep.commutant_dim = two.commutant_dim;
                }
            }
            if (rep.verdict == Verdict::inconclusive && budget > 0) {
                ObstructionReport srep = search_abelian_J(g, budget, id);
                srep.codim_commutator = rep.codim_commutator;
                rep = std::move(srep);
            }
        }
    } else {
        throw parse_error("obstruct needs an algebra file or --free-two-step");
    }

    const json report = obstruction_to_json(rep);
    if (json_mode) {
        std::cout << dump_canonical(report);
    } else {
        std::cout << "obstruction report for " << rep.algebra_id << ": " << verdict_name(rep.verdict);
        if (rep.reason != ObstructionReason::none) std::cout << " (" << reason_name(rep.reason) << ")";
        std::cout << "\n  " << rep.note << "\n";
        if (rep.codim_commutator)
            std::cout << "  commutator codimension: " << *rep.codim_commutator << "\n";
        if (rep.jspan_dim) std::cout << "  j_z span dim: " << *rep.jspan_dim << "\n";
        if (rep.commutant_dim) std::cout << "  commutant dim: " << *rep.commutant_dim << "\n";
        if (rep.candidates_tested) std::cout << "  candidates tested: " << *rep.candidates_tested << "\n";
        if (rep.witness) std::cout << "  witness J verified abelian\n";
    }
    if (out_dir) emit_file(out_path(*out_dir, rep.algebra_id + "_obstruction.json"), report);
    return 0;
}

int run_search(const std::string& algebra_path, std::size_t budget, bool json_mode)
{
    const LieAlgebraFile file = lie_algebra_from_json(load_json_file(algebra_path));
    if (!validate(file.algebra).ok()) throw error("algebra fails validation");
    const ObstructionReport rep = search_abelian_J(file.algebra, budget, stem_of(algebra_path));
    if (json_mode) {
        std::cout << dump_canonical(obstruction_to_json(rep));
    } else {
        std::cout << "search on " << rep.algebra_id << ": " << verdict_name(rep.verdict) << "\n  "
                  << rep.note << "\n";
        if (rep.candidates_tested) std::cout << "  candidates tested: " << *rep.candidates_tested << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact-arithmetic tools for abelian complex structures on Lie algebras"};
    app.require_subcommand(1);
    bool json_mode = false;
    auto add_json_flag = [&json_mode](CLI::App* cmd) {
        cmd->add_flag("--json", json_mode, "emit machine-readable JSON instead of text");
    };

    // check
    std::string check_algebra;
    std::optional<std::string> check_j, check_k;
    auto* check = app.add_subcommand("check", "validate an algebra and test a complex structure");
    check->add_option("algebra", check_algebra, "Lie algebra JSON file")->required();
    check->add_option("structure", check_j, "complex structure JSON file");
    check->add_option("second", check_k, "second structure for hypercomplex checks");

    // aff
    std::string aff_a, aff_out = ".";
    std::string aff_ksign = "sec2";
    auto* affc = app.add_subcommand("aff", "build aff(A) with its standard structures");
    affc->add_option("algebra", aff_a, "associative algebra JSON file")->required();
    affc->add_option("--out", aff_out, "output directory");
    affc->add_option("--k-sign", aff_ksign, "K convention: sec2 = (-ia, ib), sec3 = (ia, -ib)")
        ->check(CLI::IsMember({"sec2", "sec3"}));

    // catalog
    auto* cat = app.add_subcommand("catalog", "list or emit the bundled examples");
    auto* cat_list = cat->add_subcommand("list", "print catalog ids");
    std::string cat_id, cat_out = ".";
    auto* cat_emit = cat->add_subcommand("emit", "write an entry as JSON files");
    cat_emit->add_option("id", cat_id, "catalog id")->required();
    cat_emit->add_option("--out", cat_out, "output directory");

    // decompose
    std::string dec_algebra, dec_j, dec_out = ".";
    auto* dec = app.add_subcommand("decompose", "flag of J-stable ideals with certificates");
    dec->add_option("algebra", dec_algebra, "Lie algebra JSON file")->required();
    dec->add_option("structure", dec_j, "abelian complex structure JSON file")->required();
    dec->add_option("--out", dec_out, "output directory");

    // obstruct
    std::optional<std::string> obs_algebra, obs_gram, obs_out;
    std::optional<std::size_t> obs_free;
    std::size_t obs_budget = 0;
    auto* obs = app.add_subcommand("obstruct", "non-existence tests for abelian structures");
    obs->add_option("algebra", obs_algebra, "Lie algebra JSON file");
    obs->add_option("--free-two-step", obs_free, "run on the free two-step algebra of this rank");
    obs->add_option("--gram", obs_gram, "positive-definite gram matrix JSON file");
    obs->add_option("--search-budget", obs_budget, "candidate budget for the witness search");
    obs->add_option("--out", obs_out, "also write the report to this directory");

    // search
    std::string search_algebra;
    std::size_t search_budget = 10000;
    auto* sea = app.add_subcommand("search", "bounded structured search for an abelian J");
    sea->add_option("algebra", search_algebra, "Lie algebra JSON file")->required();
    sea->add_option("--search-budget", search_budget, "candidate budget");

    for (CLI::App* cmd : {check, affc, cat_list, cat_emit, dec, obs, sea}) add_json_flag(cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(check_algebra, check_j, check_k, json_mode);
        if (affc->parsed())
            return run_aff(aff_a, aff_out, aff_ksign == "sec2" ? KSign::sec2 : KSign::sec3, json_mode);
        if (cat->parsed()) {
            if (cat_list->parsed()) {
                for (const std::string& id : catalog_ids()) std::cout << id << "\n";
                return 0;
            }
            if (cat_emit->parsed()) return run_catalog_emit(cat_id, cat_out, json_mode);
            std::cerr << "catalog needs 'list' or 'emit'\n";
            return 2;
        }
        if (dec->parsed()) return run_decompose(dec_algebra, dec_j, dec_out, json_mode);
        if (obs->parsed())
            return run_obstruct(obs_algebra, obs_free, obs_gram, obs_budget, json_mode, obs_out);
        if (sea->parsed()) return run_search(search_algebra, search_budget, json_mode);
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

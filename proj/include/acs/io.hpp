#ifndef ACS_IO_HPP
#define ACS_IO_HPP

#include <acs/affine.hpp>
#include <acs/complex_structure.hpp>
#include <acs/decomposition.hpp>
#include <acs/lie_algebra.hpp>
#include <acs/obstructions.hpp>

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace acs {

/// Malformed input (bad JSON, unresolved names, shape mismatches). Distinct
/// from acs::error so the CLI can map it to its own exit code.
struct parse_error : error {
    using error::error;
};

using json = nlohmann::json;

inline const char* schema_version() { return "1"; }

// ---------------------------------------------------------------------------
// matrices and vectors as nested arrays of canonical rational strings

inline json matrix_to_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const json& j)
{
    if (!j.is_array() || j.empty()) throw parse_error("matrix must be a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array()) throw parse_error("matrix rows must be arrays");
    const std::size_t cols = j[0].size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw parse_error("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[i][c].is_string()) throw parse_error("matrix entries must be rational strings");
            try {
                m(i, c) = parse_rational(j[i][c].get<std::string>());
            } catch (const error& e) {
                throw parse_error(e.what());
            }
        }
    }
    return m;
}

namespace detail {
inline std::size_t name_index(const std::vector<std::string>& names, const std::string& n)
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return i;
    throw parse_error("unknown basis name '" + n + "'");
}

inline std::vector<std::string> basis_from_json(const json& j)
{
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw parse_error("missing or invalid 'dim'");
    const std::size_t dim = j["dim"].get<std::size_t>();
    if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].size() != dim)
        throw parse_error("'basis' must list exactly dim names");
    std::vector<std::string> names;
    for (const json& n : j["basis"]) {
        if (!n.is_string()) throw parse_error("basis names must be strings");
        names.push_back(n.get<std::string>());
    }
    for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = a + 1; b < names.size(); ++b)
            if (names[a] == names[b]) throw parse_error("duplicate basis name '" + names[a] + "'");
    return names;
}

inline Vector value_map_to_vector(const json& value, const std::vector<std::string>& names)
{
    if (!value.is_object()) throw parse_error("bracket value must be an object");
    Vector v(names.size(), Rational(0));
    for (const auto& [key, entry] : value.items()) {
        if (!entry.is_string()) throw parse_error("coordinates must be rational strings");
        try {
            v[name_index(names, key)] = parse_rational(entry.get<std::string>());
        } catch (const error& e) {
            throw parse_error(e.what());
        }
    }
    return v;
}

inline json vector_to_value_map(const Vector& v, const std::vector<std::string>& names)
{
    json obj = json::object();
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) obj[names[k]] = rational_string(v[k]);
    return obj;
}

inline void check_kind(const json& j, const std::string& kind)
{
    if (!j.is_object()) throw parse_error("expected a JSON object");
    if (!j.contains("kind") || j["kind"] != kind)
        throw parse_error("expected file of kind '" + kind + "'");
    if (!j.contains("schema_version") || j["schema_version"] != schema_version())
        throw parse_error("unsupported schema_version");
}
} // namespace detail

// ---------------------------------------------------------------------------
// Lie algebra files: only i < j nonzero brackets are stored, mirroring the
// way bracket tables are usually written down; the skew part is reconstructed on load.

struct LieAlgebraFile {
    LieAlgebra algebra;
    std::optional<Matrix> gram;
    std::optional<Matrix> i_map;
};

inline json lie_algebra_to_json(const LieAlgebra& g, const std::optional<Matrix>& gram = {},
                                const std::optional<Matrix>& i_map = {})
{
    json j;
    j["schema_version"] = schema_version();
    j["kind"] = "lie_algebra";
    j["dim"] = g.dim();
    j["basis"] = g.basis_names;
    json brackets = json::array();
    for (std::size_t a = 0; a < g.dim(); ++a)
        for (std::size_t b = a + 1; b < g.dim(); ++b) {
            if (vec_is_zero(g.table[a][b])) continue;
            json entry;
            entry["x"] = g.basis_names[a];
            entry["y"] = g.basis_names[b];
            entry["value"] = detail::vector_to_value_map(g.table[a][b], g.basis_names);
            brackets.push_back(std::move(entry));
        }
    j["brackets"] = std::move(brackets);
    if (gram) j["gram"] = matrix_to_json(*gram);
    if (i_map) j["i_map"] = matrix_to_json(*i_map);
    return j;
}

inline LieAlgebraFile lie_algebra_from_json(const json& j)
{
    detail::check_kind(j, "lie_algebra");
    const std::vector<std::string> names = detail::basis_from_json(j);
    const std::size_t dim = names.size();
    if (!j.contains("brackets") || !j["brackets"].is_array())
        throw parse_error("missing 'brackets' array");

    std::vector<std::tuple<std::size_t, std::size_t, Vector>> entries;
    std::vector<std::vector<bool>> seen(dim, std::vector<bool>(dim, false));
    for (const json& e : j["brackets"]) {
        if (!e.is_object() || !e.contains("x") || !e.contains("y") || !e.contains("value"))
            throw parse_error("bracket entries need 'x', 'y' and 'value'");
        const std::size_t a = detail::name_index(names, e["x"].get<std::string>());
        const std::size_t b = detail::name_index(names, e["y"].get<std::string>());
        if (a >= b) throw parse_error("bracket entries must have x before y in basis order");
        if (seen[a][b]) throw parse_error("duplicate bracket entry");
        seen[a][b] = true;
        entries.emplace_back(a, b, detail::value_map_to_vector(e["value"], names));
    }
    LieAlgebraFile out;
    out.algebra = LieAlgebra::from_brackets(names, entries);
    if (j.contains("gram")) out.gram = matrix_from_json(j["gram"]);
    if (j.contains("i_map")) out.i_map = matrix_from_json(j["i_map"]);
    if (out.gram && (out.gram->rows() != dim || out.gram->cols() != dim))
        throw parse_error("gram matrix has wrong shape");
    if (out.i_map && (out.i_map->rows() != dim || out.i_map->cols() != dim))
        throw parse_error("i_map has wrong shape");
    return out;
}

// ---------------------------------------------------------------------------
// associative algebra files: the full multiplication table, no symmetry
// assumption, so noncommutative input is representable

struct AssociativeAlgebraFile {
    AssociativeAlgebra algebra;
    std::optional<Matrix> i_map;
};

inline json associative_to_json(const AssociativeAlgebra& a, const std::optional<Matrix>& i_map = {})
{
    json j;
    j["schema_version"] = schema_version();
    j["kind"] = "associative_algebra";
    j["dim"] = a.dim();
    j["basis"] = a.basis_names;
    json products = json::array();
    for (std::size_t x = 0; x < a.dim(); ++x)
        for (std::size_t y = 0; y < a.dim(); ++y) {
            if (vec_is_zero(a.m[x][y])) continue;
            json entry;
            entry["x"] = a.basis_names[x];
            entry["y"] = a.basis_names[y];
            entry["value"] = detail::vector_to_value_map(a.m[x][y], a.basis_names);
            products.push_back(std::move(entry));
        }
    j["products"] = std::move(products);
    if (i_map) j["i_map"] = matrix_to_json(*i_map);
    return j;
}

inline AssociativeAlgebraFile associative_from_json(const json& j)
{
    detail::check_kind(j, "associative_algebra");
    const std::vector<std::string> names = detail::basis_from_json(j);
    const std::size_t dim = names.size();
    if (!j.contains("products") || !j["products"].is_array())
        throw parse_error("missing 'products' array");
    AssociativeAlgebraFile out;
    out.algebra = AssociativeAlgebra::zero_algebra(dim);
    out.algebra.basis_names = names;
    std::vector<std::vector<bool>> seen(dim, std::vector<bool>(dim, false));
    for (const json& e : j["products"]) {
        if (!e.is_object() || !e.contains("x") || !e.contains("y") || !e.contains("value"))
            throw parse_error("product entries need 'x', 'y' and 'value'");
        const std::size_t a = detail::name_index(names, e["x"].get<std::string>());
        const std::size_t b = detail::name_index(names, e["y"].get<std::string>());
        if (seen[a][b]) throw parse_error("duplicate product entry");
        seen[a][b] = true;
        out.algebra.m[a][b] = detail::value_map_to_vector(e["value"], names);
    }
    if (j.contains("i_map")) {
        out.i_map = matrix_from_json(j["i_map"]);
        if (out.i_map->rows() != dim || out.i_map->cols() != dim)
            throw parse_error("i_map has wrong shape");
    }
    return out;
}

// ---------------------------------------------------------------------------
// complex structure files: column j is the image of basis vector j

inline json structure_to_json(const ComplexStructure& s)
{
    json j;
    j["schema_version"] = schema_version();
    j["kind"] = "complex_structure";
    j["dim"] = s.dim();
    j["matrix"] = matrix_to_json(s.j);
    return j;
}

inline ComplexStructure structure_from_json(const json& j)
{
    detail::check_kind(j, "complex_structure");
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw parse_error("missing or invalid 'dim'");
    if (!j.contains("matrix")) throw parse_error("missing 'matrix'");
    const Matrix m = matrix_from_json(j["matrix"]);
    const std::size_t dim = j["dim"].get<std::size_t>();
    if (m.rows() != dim || m.cols() != dim) throw parse_error("structure matrix has wrong shape");
    ComplexStructure s{m};
    if (!s.squares_to_minus_identity()) throw error("structure file violates J^2 = -I");
    return s;
}

// ---------------------------------------------------------------------------
// reports

inline json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis()); }

inline json certificate_to_json(const AffineCertificate& cert)
{
    json j;
    j["u"] = subspace_to_json(cert.u);
    j["A"] = associative_to_json(cert.A);
    j["f"] = matrix_to_json(cert.f);
    j["kernel"] = subspace_to_json(cert.kernel_f);
    return j;
}

inline json flag_to_json(const FlagDecomposition& flag)
{
    json j;
    j["schema_version"] = schema_version();
    j["kind"] = "flag_decomposition";
    json steps = json::array();
    for (const FlagStep& s : flag.steps) {
        json step;
        step["ideal"] = subspace_to_json(s.ideal);
        step["quotient_dim"] = s.quotient_dim;
        step["certificate"] = certificate_to_json(s.certificate);
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    j["verified"] = true; // flag_decomposition throws on any failed check
    return j;
}

inline json obstruction_to_json(const ObstructionReport& rep)
{
    json j;
    j["schema_version"] = schema_version();
    j["kind"] = "obstruction_report";
    j["algebra_id"] = rep.algebra_id;
    j["verdict"] = verdict_name(rep.verdict);
    j["reason"] = reason_name(rep.reason);
    j["note"] = rep.note;
    if (rep.dim) j["dim"] = *rep.dim;
    if (rep.codim_commutator) j["codim_commutator"] = *rep.codim_commutator;
    if (rep.commutant_dim) j["commutant_dim"] = *rep.commutant_dim;
    if (rep.jspan_dim) j["jspan_dim"] = *rep.jspan_dim;
    if (rep.candidates_tested) j["candidates_tested"] = *rep.candidates_tested;
    if (rep.witness) j["witness"] = matrix_to_json(rep.witness->j);
    return j;
}

// ---------------------------------------------------------------------------
// files

/// Canonical serialization: two-space indent, sorted keys (nlohmann objects
/// are ordered maps), LF newlines, single trailing newline. Emit-parse-emit
/// is byte identical.
inline std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

inline json parse_json_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write '" + path + "'");
    out << text;
}

inline json load_json_file(const std::string& path) { return parse_json_text(read_text_file(path)); }

} // namespace acs

#endif

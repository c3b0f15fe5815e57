#ifndef NSYMM_IO_HPP
#define NSYMM_IO_HPP

#include <cstring>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsymm/hsops.hpp"
#include "nsymm/linear_combination.hpp"
#include "nsymm/report.hpp"

namespace nsymm::io {

using nlohmann::json;

/// Malformed or ill-shaped input. `where` is "file:line:col" for syntax
/// errors and "file: /json/pointer" for shape errors.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void shape_error(const std::string& where, const std::string& what)
{
    bool bare = !where.empty() && where.back() == ' ';
    throw FormatError(bare ? where + what : where + ": " + what);
}

inline const json& member(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object()) shape_error(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) shape_error(where, std::string("missing member \"") + key + "\"");
    return *it;
}

inline Rational rational_from_string(const json& j, const std::string& where)
{
    if (!j.is_string()) shape_error(where, "expected a rational string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        shape_error(where, e.what());
    }
}

}  // namespace detail

// Coefficients: {"num": "<int>", "den": "<positive int>"}.

inline json coeff_to_json(const Rational& r)
{
    return json{{"num", r.numerator_string()}, {"den", r.denominator_string()}};
}

inline Rational coeff_from_json(const json& j, const std::string& where)
{
    const json& num = detail::member(j, "num", where);
    const json& den = detail::member(j, "den", where);
    if (!num.is_string() || !den.is_string()) detail::shape_error(where, "num/den must be decimal strings");
    try {
        Rational r = Rational::parse(num.get<std::string>() + "/" + den.get<std::string>());
        if (den.get<std::string>().front() == '-') throw std::invalid_argument("negative denominator");
        return r;
    } catch (const std::exception& e) {
        detail::shape_error(where, e.what());
    }
}

inline json word_to_json(const Composition& w) { return json(w.vector()); }

inline Composition word_from_json(const json& j, const std::string& where)
{
    if (!j.is_array()) detail::shape_error(where, "word must be an array of positive integers");
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 1 || x.get<long long>() > 1'000'000) {
            detail::shape_error(where, "word entries must be positive integers");
        }
        parts.push_back(x.get<int>());
    }
    return Composition(std::move(parts));
}

// Polynomials: {"basis": "Z" | "Pprime" | "U" | "M", "terms": [{"word": [...], "coeff": {...}}, ...]}
// with terms in term order.

template <class Basis>
json to_json(const Poly<Basis>& p)
{
    json terms = json::array();
    for (const auto& [w, c] : p) terms.push_back(json{{"word", word_to_json(w)}, {"coeff", coeff_to_json(c)}});
    return json{{"basis", Basis::name}, {"terms", std::move(terms)}};
}

template <class Basis>
Poly<Basis> poly_from_json(const json& j, const std::string& where = "")
{
    const json& basis = detail::member(j, "basis", where);
    if (!basis.is_string() || basis.get<std::string>() != Basis::name) {
        detail::shape_error(where + "/basis", std::string("expected basis \"") + Basis::name + "\"");
    }
    const json& terms = detail::member(j, "terms", where);
    if (!terms.is_array()) detail::shape_error(where + "/terms", "expected an array");
    Poly<Basis> p;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        std::string at = where + "/terms/" + std::to_string(k);
        p.add_term(word_from_json(detail::member(terms[k], "word", at), at + "/word"),
                   coeff_from_json(detail::member(terms[k], "coeff", at), at + "/coeff"));
    }
    return p;
}

// Tensor squares: {"basis": "Z", "terms": [{"left_word", "right_word", "coeff"}]}.

template <class Basis>
json to_json(const Tensor<Basis, 2>& t)
{
    json terms = json::array();
    for (const auto& [key, c] : t) {
        terms.push_back(json{{"left_word", word_to_json(key[0])},
                             {"right_word", word_to_json(key[1])},
                             {"coeff", coeff_to_json(c)}});
    }
    return json{{"basis", Basis::name}, {"terms", std::move(terms)}};
}

template <class Basis>
Tensor<Basis, 2> tensor_from_json(const json& j, const std::string& where = "")
{
    const json& basis = detail::member(j, "basis", where);
    if (!basis.is_string() || basis.get<std::string>() != Basis::name) {
        detail::shape_error(where + "/basis", std::string("expected basis \"") + Basis::name + "\"");
    }
    const json& terms = detail::member(j, "terms", where);
    if (!terms.is_array()) detail::shape_error(where + "/terms", "expected an array");
    Tensor<Basis, 2> t;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        std::string at = where + "/terms/" + std::to_string(k);
        t.add_term({word_from_json(detail::member(terms[k], "left_word", at), at + "/left_word"),
                    word_from_json(detail::member(terms[k], "right_word", at), at + "/right_word")},
                   coeff_from_json(detail::member(terms[k], "coeff", at), at + "/coeff"));
    }
    return t;
}

// Verification reports.

inline json to_json(const VerificationReport& r)
{
    json records = json::array();
    for (const auto& rec : r.records) {
        json j{{"degree", rec.degree}, {"law", rec.law}, {"pass", rec.pass}};
        if (rec.witness) j["witness"] = *rec.witness;
        records.push_back(std::move(j));
    }
    json timing = json::array();
    for (const auto& [degree, ms] : r.degree_millis) timing.push_back(json{{"degree", degree}, {"elapsed_ms", ms}});
    json out{{"suite", r.suite}, {"pass", r.passed()}, {"records", std::move(records)}, {"timing", std::move(timing)}};
    if (r.pairs_checked) out["pairs_checked"] = r.pairs_checked;
    return out;
}

inline std::string to_text(const VerificationReport& r)
{
    std::ostringstream os;
    for (const auto& rec : r.records) {
        os << (rec.pass ? "PASS" : "FAIL") << "  degree " << rec.degree << "  " << rec.law;
        if (rec.witness) os << "  witness: " << *rec.witness;
        os << '\n';
    }
    if (r.pairs_checked) os << "pairs checked: " << r.pairs_checked << '\n';
    double total = 0;
    for (const auto& [degree, ms] : r.degree_millis) total += ms;
    os << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.records.size() << " checks, " << total
       << " ms)\n";
    return os.str();
}

// Test algebras and families.
//
// Algebra: {"labels": [...], "unit": ["1", "0", ...],
//           "structure": [{"i": 0, "j": 1, "coords": ["0", "1", ...]}, ...],
//           "grading": {"degrees": [0, 1, ...], "max_degree": 6}}   (grading optional)
// Family file: {"kind": "hs-family" | "derivations",
//               "algebra": <algebra object> | "<path relative to this file>",
//               "maps": [<matrix>, ...]}
// A matrix is a list of rows of rational strings; column j is the image of e_j.

inline json to_json(const TestAlgebra& a)
{
    json unit = json::array();
    for (const auto& x : a.unit()) unit.push_back(x.to_string());
    json structure = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const auto& sparse = a.product_of_basis(i, j);
            if (sparse.empty()) continue;
            std::vector<std::string> coords(a.dim(), "0");
            for (const auto& [k, x] : sparse) coords[k] = x.to_string();
            structure.push_back(json{{"i", i}, {"j", j}, {"coords", coords}});
        }
    }
    json out{{"labels", a.labels()}, {"unit", std::move(unit)}, {"structure", std::move(structure)}};
    if (a.grading()) out["grading"] = json{{"degrees", a.grading()->degrees}, {"max_degree", a.grading()->max_degree}};
    return out;
}

inline Vector vector_from_json(const json& j, std::size_t dim, const std::string& where)
{
    if (!j.is_array() || j.size() != dim) {
        detail::shape_error(where, "expected an array of " + std::to_string(dim) + " rationals");
    }
    Vector v;
    for (std::size_t k = 0; k < dim; ++k) v.push_back(detail::rational_from_string(j[k], where + "/" + std::to_string(k)));
    return v;
}

inline std::shared_ptr<const TestAlgebra> algebra_from_json(const json& j, const std::string& where)
{
    const json& labels = detail::member(j, "labels", where);
    if (!labels.is_array() || labels.empty()) detail::shape_error(where + "/labels", "expected a nonempty array");
    std::vector<std::string> names;
    for (const auto& l : labels) {
        if (!l.is_string()) detail::shape_error(where + "/labels", "labels must be strings");
        names.push_back(l.get<std::string>());
    }
    const std::size_t dim = names.size();
    Vector unit = vector_from_json(detail::member(j, "unit", where), dim, where + "/unit");
    const json& structure = detail::member(j, "structure", where);
    if (!structure.is_array()) detail::shape_error(where + "/structure", "expected an array");
    TestAlgebra::StructureConstants products;
    for (std::size_t k = 0; k < structure.size(); ++k) {
        std::string at = where + "/structure/" + std::to_string(k);
        const json& i = detail::member(structure[k], "i", at);
        const json& jj = detail::member(structure[k], "j", at);
        if (!i.is_number_unsigned() || !jj.is_number_unsigned() || i.get<std::size_t>() >= dim ||
            jj.get<std::size_t>() >= dim) {
            detail::shape_error(at, "i and j must be basis indices below " + std::to_string(dim));
        }
        products[{i.get<std::size_t>(), jj.get<std::size_t>()}] =
            vector_from_json(detail::member(structure[k], "coords", at), dim, at + "/coords");
    }
    std::optional<Grading> grading;
    if (j.contains("grading")) {
        const std::string at = where + "/grading";
        const json& g = j["grading"];
        const json& degrees = detail::member(g, "degrees", at);
        const json& cap = detail::member(g, "max_degree", at);
        if (!degrees.is_array() || degrees.size() != dim) {
            detail::shape_error(at + "/degrees", "expected an array of " + std::to_string(dim) + " integers");
        }
        if (!cap.is_number_integer()) detail::shape_error(at + "/max_degree", "expected an integer");
        grading.emplace();
        grading->max_degree = cap.get<int>();
        for (const auto& d : degrees) {
            if (!d.is_number_integer()) detail::shape_error(at + "/degrees", "degrees must be integers");
            grading->degrees.push_back(d.get<int>());
        }
    }
    try {
        return std::make_shared<const TestAlgebra>(std::move(names), std::move(unit), products, std::move(grading));
    } catch (const std::invalid_argument& e) {
        detail::shape_error(where, e.what());
    }
}

inline json to_json(const LinMap& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline LinMap linmap_from_json(const json& j, std::size_t dim, const std::string& where)
{
    if (!j.is_array() || j.size() != dim) {
        detail::shape_error(where, "expected " + std::to_string(dim) + " rows");
    }
    LinMap m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        Vector row = vector_from_json(j[i], dim, where + "/" + std::to_string(i));
        for (std::size_t c = 0; c < dim; ++c) m(i, c) = row[c];
    }
    return m;
}

enum class FamilyKind { hs_family, derivations };

inline const char* to_string(FamilyKind k) { return k == FamilyKind::hs_family ? "hs-family" : "derivations"; }

/// Contents of a family file: an algebra and a list of maps, read either as
/// (d_1, d_2, ...) or as a list of derivations.
struct FamilyFile {
    FamilyKind kind = FamilyKind::hs_family;
    std::shared_ptr<const TestAlgebra> algebra;
    std::vector<LinMap> maps;

    [[nodiscard]] HSFamily family() const { return HSFamily{algebra, maps}; }
};

inline json to_json(const FamilyFile& f)
{
    json maps = json::array();
    for (const auto& m : f.maps) maps.push_back(to_json(m));
    return json{{"kind", to_string(f.kind)}, {"algebra", to_json(*f.algebra)}, {"maps", std::move(maps)}};
}

/// Parses text as JSON; syntax errors become FormatError("name:line:col: ...").
inline json parse_json_text(const std::string& text, const std::string& name)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
        throw FormatError(name + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
    }
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json load_json_file(const std::string& path) { return parse_json_text(read_file(path), path); }

inline std::string parent_directory(const std::string& path)
{
    auto slash = path.find_last_of('/');
    return slash == std::string::npos ? std::string() : path.substr(0, slash + 1);
}

inline FamilyFile family_from_json(const json& j, const std::string& name, const std::string& base_dir = "")
{
    FamilyFile f;
    const json& kind = detail::member(j, "kind", name + ": ");
    if (kind == "hs-family") {
        f.kind = FamilyKind::hs_family;
    } else if (kind == "derivations") {
        f.kind = FamilyKind::derivations;
    } else {
        detail::shape_error(name + ": /kind", "expected \"hs-family\" or \"derivations\"");
    }
    const json& algebra = detail::member(j, "algebra", name + ": ");
    if (algebra.is_string()) {
        std::string path = algebra.get<std::string>();
        if (!path.empty() && path.front() != '/') path = base_dir + path;
        f.algebra = algebra_from_json(load_json_file(path), path + ": ");
    } else {
        f.algebra = algebra_from_json(algebra, name + ": /algebra");
    }
    const json& maps = detail::member(j, "maps", name + ": ");
    if (!maps.is_array()) detail::shape_error(name + ": /maps", "expected an array");
    for (std::size_t k = 0; k < maps.size(); ++k) {
        f.maps.push_back(linmap_from_json(maps[k], f.algebra->dim(), name + ": /maps/" + std::to_string(k)));
    }
    return f;
}

inline FamilyFile load_family_file(const std::string& path)
{
    return family_from_json(load_json_file(path), path, parent_directory(path));
}

}  // namespace nsymm::io

#endif  // NSYMM_IO_HPP

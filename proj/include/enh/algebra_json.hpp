#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "enh/graded_algebra.hpp"

namespace enh {

using nlohmann::json;

namespace detail {

inline rational coeff_from_json(const json& j) {
    if (j.is_number_integer()) return rational(j.get<long long>());
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    throw schema_error("coefficient must be an integer or an exact string like \"2/3\"");
}

inline lincomb lincomb_from_json(const json& terms, const graded_basis& basis) {
    if (!terms.is_array()) throw schema_error("result must be an array of terms");
    lincomb out;
    for (const auto& t : terms) {
        if (!t.contains("basis") || !t.contains("coeff"))
            throw schema_error("term needs \"basis\" and \"coeff\"");
        lincomb_add_term(out, basis.index_of(t.at("basis").get<std::string>()),
                         coeff_from_json(t.at("coeff")));
    }
    return out;
}

inline json lincomb_to_json(const lincomb& c, const graded_basis& basis) {
    json out = json::array();
    for (const auto& [i, coeff] : c)
        out.push_back({{"basis", basis.names.at(i)}, {"coeff", scalar_to_string(coeff)}});
    return out;
}

inline graded_basis basis_from_json(const json& j) {
    if (!j.contains("basis") || !j.at("basis").is_array() || j.at("basis").empty())
        throw schema_error("document needs a nonempty \"basis\" array");
    graded_basis basis;
    for (const auto& b : j.at("basis")) {
        if (!b.contains("name") || !b.contains("degree"))
            throw schema_error("basis entry needs \"name\" and \"degree\"");
        basis.names.push_back(b.at("name").get<std::string>());
        basis.degrees.push_back(b.at("degree").get<int>());
    }
    return basis;
}

}  // namespace detail

// Algebra document: absent product pairs mean zero; when only one of
// (a,b)/(b,a) is present the other is filled in by Koszul symmetry.
inline algebra_presentation algebra_from_json(const json& j) {
    if (!j.is_object()) throw schema_error("algebra document must be a JSON object");
    algebra_presentation a;
    a.basis = detail::basis_from_json(j);
    if (j.contains("name")) a.name = j.at("name").get<std::string>();
    const int n = a.basis.size();
    a.product.assign(n, std::vector<lincomb>(n));
    a.differential.assign(n, {});

    std::vector<std::vector<char>> given(n, std::vector<char>(n, 0));
    if (j.contains("products")) {
        for (const auto& p : j.at("products")) {
            if (!p.contains("left") || !p.contains("right") || !p.contains("result"))
                throw schema_error("product entry needs \"left\", \"right\", \"result\"");
            int l = a.basis.index_of(p.at("left").get<std::string>());
            int r = a.basis.index_of(p.at("right").get<std::string>());
            a.product[l][r] = detail::lincomb_from_json(p.at("result"), a.basis);
            given[l][r] = 1;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (given[i][k] && !given[k][i]) {
                lincomb sym = a.product[i][k];
                if ((a.basis.degree(i) & 1) && (a.basis.degree(k) & 1))
                    for (auto& [idx, c] : sym) c = -c;
                a.product[k][i] = std::move(sym);
                given[k][i] = 1;
            }

    if (j.contains("differential")) {
        for (const auto& d : j.at("differential")) {
            if (!d.contains("on") || !d.contains("result"))
                throw schema_error("differential entry needs \"on\" and \"result\"");
            int i = a.basis.index_of(d.at("on").get<std::string>());
            a.differential[i] = detail::lincomb_from_json(d.at("result"), a.basis);
        }
    }
    return a;
}

inline bimodule_presentation bimodule_from_json(const json& j, const algebra_presentation& a) {
    if (!j.is_object()) throw schema_error("bimodule document must be a JSON object");
    bimodule_presentation m;
    m.basis = detail::basis_from_json(j);
    if (j.contains("name")) m.name = j.at("name").get<std::string>();
    m.left_action.assign(a.dim(), std::vector<lincomb>(m.basis.size()));
    m.differential.assign(m.basis.size(), {});
    if (j.contains("action")) {
        for (const auto& act : j.at("action")) {
            if (!act.contains("algebra") || !act.contains("module") || !act.contains("result"))
                throw schema_error("action entry needs \"algebra\", \"module\", \"result\"");
            int i = a.basis.index_of(act.at("algebra").get<std::string>());
            int k = m.basis.index_of(act.at("module").get<std::string>());
            m.left_action[i][k] = detail::lincomb_from_json(act.at("result"), m.basis);
        }
    }
    if (j.contains("differential")) {
        for (const auto& d : j.at("differential")) {
            int k = m.basis.index_of(d.at("on").get<std::string>());
            m.differential[k] = detail::lincomb_from_json(d.at("result"), m.basis);
        }
    }
    return m;
}

inline json algebra_to_json(const algebra_presentation& a) {
    json j;
    j["name"] = a.name;
    j["basis"] = json::array();
    for (int i = 0; i < a.dim(); ++i)
        j["basis"].push_back({{"name", a.basis.names[i]}, {"degree", a.basis.degrees[i]}});
    j["products"] = json::array();
    for (int i = 0; i < a.dim(); ++i)
        for (int k = 0; k < a.dim(); ++k)
            if (!a.product_of(i, k).empty())
                j["products"].push_back({{"left", a.basis.names[i]},
                                         {"right", a.basis.names[k]},
                                         {"result", detail::lincomb_to_json(a.product_of(i, k),
                                                                            a.basis)}});
    if (a.has_differential()) {
        j["differential"] = json::array();
        for (int i = 0; i < a.dim(); ++i)
            if (!a.d_of(i).empty())
                j["differential"].push_back(
                    {{"on", a.basis.names[i]},
                     {"result", detail::lincomb_to_json(a.d_of(i), a.basis)}});
    }
    return j;
}

inline json bimodule_to_json(const bimodule_presentation& m, const algebra_presentation& a) {
    json j;
    j["name"] = m.name;
    j["basis"] = json::array();
    for (int i = 0; i < m.dim(); ++i)
        j["basis"].push_back({{"name", m.basis.names[i]}, {"degree", m.basis.degrees[i]}});
    j["action"] = json::array();
    for (int i = 0; i < a.dim(); ++i)
        for (int k = 0; k < m.dim(); ++k)
            if (!m.act_of(i, k).empty())
                j["action"].push_back({{"algebra", a.basis.names[i]},
                                       {"module", m.basis.names[k]},
                                       {"result", detail::lincomb_to_json(m.act_of(i, k),
                                                                          m.basis)}});
    if (m.has_differential()) {
        j["differential"] = json::array();
        for (int k = 0; k < m.dim(); ++k)
            if (!m.d_of(k).empty())
                j["differential"].push_back(
                    {{"on", m.basis.names[k]},
                     {"result", detail::lincomb_to_json(m.d_of(k), m.basis)}});
    }
    return j;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw schema_error("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

inline algebra_presentation load_and_validate_algebra(const std::string& path,
                                                      const ring_spec& ring) {
    auto a = algebra_from_json(load_json_file(path));
    validate_algebra(a, ring);
    return a;
}

inline bimodule_presentation load_and_validate_bimodule(const std::string& path,
                                                        const algebra_presentation& a,
                                                        const ring_spec& ring) {
    auto m = bimodule_from_json(load_json_file(path), a);
    validate_bimodule(m, a, ring);
    return m;
}

}  // namespace enh

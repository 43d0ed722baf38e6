#pragma once

#include <json.hpp>
#include <string>

#include "goncharov.hpp"
#include "linalg.hpp"
#include "lincomb.hpp"
#include "words.hpp"

namespace mes {

using Json = nlohmann::json;

inline Json word_json(const ZWord& w) { return Json(w.k); }

// {"terms": [{"coeff": "p/q", "word": [k1,...]}, ...]} in canonical word order
inline Json lin_json(const ZLin& x) {
    Json terms = Json::array();
    for (auto& [w, c] : x.terms()) terms.push_back(Json{{"coeff", rat_str(c)}, {"word", w.k}});
    return Json{{"terms", terms}};
}

inline ZLin lin_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("expected an object with a \"terms\" array");
    ZLin out;
    for (auto& t : j["terms"]) {
        if (!t.contains("coeff") || !t.contains("word")) throw std::invalid_argument("term needs \"coeff\" and \"word\"");
        ZWord w{t["word"].get<std::vector<int>>()};
        out.add_term(w, parse_rat(t["coeff"].get<std::string>()));
    }
    return out;
}

inline Json tensor_json(const Tensor& x) {
    Json terms = Json::array();
    for (auto& [p, c] : x.terms())
        terms.push_back(Json{{"coeff", rat_str(c)}, {"left", p.first.k}, {"right", p.second.k}});
    return Json{{"terms", terms}};
}

inline Json relation_space_json(const RelationSpace& s, bool with_basis = true) {
    Json j{{"weight", s.weight}, {"space", space_name(s.space)}, {"rank", s.rank()}};
    if (with_basis) {
        Json b = Json::array();
        for (auto& row : s.basis) b.push_back(lin_json(row));
        j["basis"] = b;
    }
    return j;
}

inline Json fourier_json(const FourierExpansion& fe) {
    Json terms = Json::array();
    for (auto& [g, z] : fe.terms) terms.push_back(Json{{"symbol", g.k}, {"coeff", lin_json(z)}});
    return Json{{"index", fe.index.k}, {"terms", terms}};
}

// Sparse matrix rows (LinCombs over a fixed column index) as CSV lines
// "row,col,num,den", 0-based, header included, canonical order.
inline std::string rows_csv(const std::vector<ZLin>& rows, const ColumnIndex& ci) {
    std::string out = "row,col,num,den\n";
    for (size_t i = 0; i < rows.size(); ++i)
        for (auto& [w, c] : rows[i].terms()) {
            out += std::to_string(i);
            out += ',';
            out += std::to_string(ci.index_of(w));
            out += ',';
            out += c.get_num().get_str();
            out += ',';
            out += c.get_den().get_str();
            out += '\n';
        }
    return out;
}

}  // namespace mes

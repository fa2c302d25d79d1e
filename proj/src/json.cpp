#include "isobaric/json.hpp"

namespace isobaric {

using nlohmann::json;

json to_json(const IsobaricPoly& p) {
    json terms = json::array();
    for (const auto& [alpha, c] : p.terms()) terms.push_back({{"alpha", alpha.multiplicities()}, {"coeff", to_string(c)}});
    return {{"n", p.degree()}, {"k", p.k()}, {"terms", std::move(terms)}};
}

IsobaricPoly poly_from_json(const json& j) {
    try {
        IsobaricPoly p(j.at("k").get<int>(), j.at("n").get<int>());
        for (const auto& term : j.at("terms"))
            p.add_term(ExponentVector(term.at("alpha").get<std::vector<int>>()),
                       parse_rational(term.at("coeff").get<std::string>()));
        return p;
    } catch (const json::exception& e) {
        throw Error(std::string("malformed polynomial JSON: ") + e.what());
    }
}

json to_json(const HessenbergMatrix& m) {
    json rows = json::array();
    for (int i = 1; i <= m.size(); ++i) {
        json row = json::array();
        for (int j = 1; j <= m.size(); ++j) {
            const Cell c = m.cell(i, j);
            row.push_back({{"coeff", to_string(c.coeff)}, {"t", c.var == 0 ? json(nullptr) : json(c.var)}});
        }
        rows.push_back(std::move(row));
    }
    return {{"n", m.size()}, {"super", m.super()}, {"cells", std::move(rows)}};
}

HessenbergMatrix hessenberg_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        HessenbergMatrix m(n, j.at("super").get<int>());
        const auto& cells = j.at("cells");
        if (cells.size() != static_cast<std::size_t>(n)) throw Error("Hessenberg JSON: expected " + std::to_string(n) + " rows");
        for (int i = 1; i <= n; ++i) {
            const auto& row = cells.at(static_cast<std::size_t>(i - 1));
            if (row.size() != static_cast<std::size_t>(n)) throw Error("Hessenberg JSON: ragged row");
            for (int jj = 1; jj <= n; ++jj) {
                const auto& cj = row.at(static_cast<std::size_t>(jj - 1));
                Cell c{parse_rational(cj.at("coeff").get<std::string>()), cj.at("t").is_null() ? 0 : cj.at("t").get<int>()};
                if (jj <= i)
                    m.set(i, jj, c);
                else if (!(c == m.cell(i, jj)))
                    throw Error("Hessenberg JSON: cell above the diagonal does not match the Hessenberg shape");
            }
        }
        return m;
    } catch (const json::exception& e) {
        throw Error(std::string("malformed Hessenberg JSON: ") + e.what());
    }
}

json to_json(const CompanionWindow& w) {
    json rows = json::array();
    for (const auto& row : w.rows()) {
        json r = json::array();
        for (const auto& v : row) r.push_back(to_string(v));
        rows.push_back(std::move(r));
    }
    return {{"k", w.k()}, {"rows", {w.first_row(), w.last_row()}}, {"cells", std::move(rows)}};
}

json to_json(const SymbolicWindow& w) {
    json rows = json::array();
    for (const auto& row : w.rows()) {
        json r = json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        rows.push_back(std::move(r));
    }
    return {{"k", w.k()}, {"rows", {w.first_row(), w.last_row()}}, {"cells", std::move(rows)}};
}

} // namespace isobaric

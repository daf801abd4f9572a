#include "moh/json_io.hpp"

#include "json.hpp"

namespace moh {

namespace {

using Json = nlohmann::ordered_json;

Json polynomial_to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        terms.push_back(
            {{"x", m.x}, {"y", m.y}, {"z", m.z}, {"coeff", rational_to_text(c)}});
    }
    return terms;
}

Polynomial polynomial_from_json(const Json& terms) {
    if (!terms.is_array()) throw ParseError("polynomial terms must be an array");
    Polynomial p;
    for (const auto& t : terms) {
        Monomial m{t.at("x").get<std::int64_t>(), t.at("y").get<std::int64_t>(),
                   t.at("z").get<std::int64_t>()};
        p.add_term(m, rational_from_text(t.at("coeff").get<std::string>()));
    }
    return p;
}

Json named_polynomials(const std::vector<Polynomial>& ps, const char* prefix) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        arr.push_back({{"name", prefix + std::to_string(i + 1)}, {"terms", polynomial_to_json(ps[i])}});
    }
    return arr;
}

std::vector<Polynomial> polynomials_from_json(const Json& arr) {
    if (!arr.is_array()) throw ParseError("expected an array of polynomials");
    std::vector<Polynomial> out;
    for (const auto& entry : arr) out.push_back(polynomial_from_json(entry.at("terms")));
    return out;
}

}  // namespace

bool operator==(const GeneratorDocument& a, const GeneratorDocument& b) {
    return a.n == b.n && a.lambda == b.lambda && a.generators == b.generators &&
           a.sigma_parts == b.sigma_parts && a.tails == b.tails && a.tables.c == b.tables.c &&
           a.tables.a == b.tables.a && a.tables.d == b.tables.d;
}

GeneratorDocument to_document(const GeneratorSet& G) {
    GeneratorDocument doc;
    doc.n = G.params.n;
    doc.lambda = G.params.lambda;
    doc.generators = G.canonical;
    doc.sigma_parts = G.sigma_parts;
    doc.tails = G.tails;
    doc.tables = G.tables;
    return doc;
}

std::string emit_json(const GeneratorDocument& doc) {
    Json j;
    j["n"] = doc.n;
    j["lambda"] = doc.lambda;
    j["generators"] = named_polynomials(doc.generators, "f");
    j["sigma_parts"] = named_polynomials(doc.sigma_parts, "f");
    j["tails"] = named_polynomials(doc.tails, "f");
    Json c = Json::array();
    for (const auto& [key, value] : doc.tables.c)
        c.push_back({{"i", key.first}, {"j", key.second}, {"value", rational_to_text(value)}});
    Json a = Json::array();
    for (const auto& [chain, values] : doc.tables.a)
        a.push_back({{"chain", chain},
                     {"values", Json::array({rational_to_text(values[0]),
                                             rational_to_text(values[1]),
                                             rational_to_text(values[2])})}});
    Json d = Json::array();
    for (const auto& [key, value] : doc.tables.d)
        d.push_back({{"i", key.first}, {"s", key.second}, {"value", rational_to_text(value)}});
    j["tables"] = {{"c", c}, {"a", a}, {"d", d}};
    return j.dump(2);
}

GeneratorDocument parse_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        GeneratorDocument doc;
        doc.n = j.at("n").get<std::int64_t>();
        doc.lambda = j.at("lambda").get<std::int64_t>();
        doc.generators = polynomials_from_json(j.at("generators"));
        doc.sigma_parts = polynomials_from_json(j.at("sigma_parts"));
        doc.tails = polynomials_from_json(j.at("tails"));
        for (const auto& entry : j.at("tables").at("c"))
            doc.tables.c[{entry.at("i").get<int>(), entry.at("j").get<int>()}] =
                rational_from_text(entry.at("value").get<std::string>());
        for (const auto& entry : j.at("tables").at("a")) {
            const auto& values = entry.at("values");
            if (!values.is_array() || values.size() != 3)
                throw ParseError("chain coefficient entries need exactly three values");
            doc.tables.a[entry.at("chain").get<int>()] = {
                rational_from_text(values[0].get<std::string>()),
                rational_from_text(values[1].get<std::string>()),
                rational_from_text(values[2].get<std::string>())};
        }
        for (const auto& entry : j.at("tables").at("d"))
            doc.tables.d[{entry.at("i").get<int>(), entry.at("s").get<int>()}] =
                rational_from_text(entry.at("value").get<std::string>());
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed generator document: ") + e.what());
    }
}

}  // namespace moh

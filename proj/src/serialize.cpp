#include "coxperron/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "coxperron/errors.hpp"

namespace coxperron {

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw PreconditionError("polynomial JSON must be an array of coefficient strings");
    std::vector<Rational> coeffs;
    for (const auto& c : j) {
        if (c.is_string()) {
            coeffs.push_back(parse_rational(c.get<std::string>()));
        } else if (c.is_number_integer()) {
            coeffs.emplace_back(integer_from_json(c));
        } else {
            throw PreconditionError("polynomial coefficient must be a string such as \"-3/4\"");
        }
    }
    return Poly(std::move(coeffs));
}

Json matrix_to_json(const CoxeterMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m.entries()) {
        Json r = Json::array();
        for (int v : row) {
            if (v == kInfinity) {
                r.push_back("inf");
            } else {
                r.push_back(v);
            }
        }
        rows.push_back(std::move(r));
    }
    Json out;
    out["rank"] = m.rank();
    out["m"] = std::move(rows);
    out["labels"] = m.labels();
    return out;
}

CoxeterMatrix matrix_from_json(const Json& j) {
    if (!j.is_object()) throw PreconditionError("Coxeter matrix JSON must be an object");
    if (!j.contains("rank") || !j["rank"].is_number_integer()) {
        throw PreconditionError("Coxeter matrix JSON needs an integer \"rank\"");
    }
    if (!j.contains("m") || !j["m"].is_array()) throw PreconditionError("Coxeter matrix JSON needs an array \"m\"");
    const auto rank = j["rank"].get<long long>();
    if (rank < 1) throw PreconditionError("Coxeter matrix rank must be positive");
    const Json& rows = j["m"];
    if (static_cast<long long>(rows.size()) != rank) throw PreconditionError("\"m\" must have \"rank\" rows");

    std::vector<std::vector<int>> entries;
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<long long>(row.size()) != rank) {
            throw PreconditionError("every row of \"m\" must have \"rank\" entries");
        }
        std::vector<int> r;
        for (const auto& v : row) {
            if (v.is_string() && v.get<std::string>() == "inf") {
                r.push_back(kInfinity);
            } else if (v.is_number_integer()) {
                const auto x = v.get<long long>();
                if (x < 1 || x > std::numeric_limits<int>::max()) {
                    throw PreconditionError("Coxeter matrix entries must be positive integers or \"inf\"");
                }
                r.push_back(static_cast<int>(x));
            } else {
                throw PreconditionError("Coxeter matrix entries must be integers or the string \"inf\"");
            }
        }
        entries.push_back(std::move(r));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw PreconditionError("\"labels\" must be an array of strings");
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) throw PreconditionError("\"labels\" must be an array of strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return CoxeterMatrix(std::move(entries), std::move(labels));
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw PreconditionError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

Json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
        return Integer(std::to_string(j.get<long long>()));
    }
    if (j.is_string()) {
        Rational q = parse_rational(j.get<std::string>());
        if (!is_integer(q)) throw PreconditionError("expected an integer, got '" + j.get<std::string>() + "'");
        return q.get_num();
    }
    throw PreconditionError("expected an integer or integer string");
}

}  // namespace coxperron

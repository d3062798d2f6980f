#include "schubert/json_io.hpp"

#include "schubert/errors.hpp"
#include "schubert/rational.hpp"

namespace schubert {

namespace {

std::string exponents_key(const std::vector<int>& e) {
    std::string key;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) key += ',';
        key += std::to_string(e[i]);
    }
    return key;
}

std::vector<int> exponents_from_key(const std::string& key, int expected) {
    std::vector<int> e;
    std::size_t pos = 0;
    while (pos <= key.size()) {
        std::size_t comma = key.find(',', pos);
        std::string piece = key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            e.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw input_error("malformed exponent key '" + key + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(e.size()) != expected) throw input_error("exponent key length mismatch in '" + key + "'");
    return e;
}

}  // namespace

nlohmann::json rational_to_json(const mpq_class& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

mpq_class rational_from_json(const nlohmann::json& j) {
    try {
        if (j.is_number_integer()) return to_mpq(j.get<long long>());
        if (j.is_string()) {
            mpq_class q(j.get<std::string>());
            q.canonicalize();
            return q;
        }
    } catch (const std::exception&) {
        throw input_error("malformed rational " + j.dump());
    }
    throw input_error("rational must be an integer or a 'p/q' string, got " + j.dump());
}

nlohmann::json to_json(const SchurCombination& c) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [la, coeff] : c.terms()) j[la.to_string()] = coeff;
    return j;
}

SchurCombination schur_combination_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw input_error("SchurCombination JSON must be an object");
    SchurCombination out;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number_integer()) throw input_error("SchurCombination coefficients must be integers");
        out.add_term(Partition::parse(key), value.get<long long>());
    }
    return out;
}

nlohmann::json to_json(const CohomologyClass& c) {
    nlohmann::json j;
    j["shape"] = {{"m", c.shape.m}, {"n", c.shape.n}};
    j["scale"] = c.degree_scale;
    j["terms"] = to_json(c.terms);
    if (c.nonfitting_input) j["warning"] = "nonfitting input class";
    return j;
}

nlohmann::json to_json(const EPolynomial& p) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [mono, coeff] : p.terms()) j[exponents_key(mono)] = coeff;
    return j;
}

nlohmann::json to_json(const RationalMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix rational_matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw input_error("matrix JSON must be a nonempty array of arrays");
    int rows = static_cast<int>(j.size());
    if (!j[0].is_array() || j[0].empty()) throw input_error("matrix JSON must be a nonempty array of arrays");
    int cols = static_cast<int>(j[0].size());
    RationalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!j[static_cast<std::size_t>(r)].is_array() ||
            static_cast<int>(j[static_cast<std::size_t>(r)].size()) != cols)
            throw input_error("matrix JSON rows must all have the same length");
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = rational_from_json(j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
    return m;
}

nlohmann::json to_json(const Laurent& x) {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [e, c] : x.terms()) terms[exponents_key(e)] = c;
    return {{"rank", x.vars()}, {"terms", terms}};
}

Laurent laurent_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("terms"))
        throw input_error("Laurent JSON must carry 'rank' and 'terms'");
    int rank = j.at("rank").get<int>();
    if (rank < 1) throw input_error("Laurent rank must be positive");
    Laurent x(rank);
    for (const auto& [key, value] : j.at("terms").items()) {
        if (!value.is_number_integer()) throw input_error("Laurent coefficients must be integers");
        x.add_term(exponents_from_key(key, rank), value.get<long long>());
    }
    return x;
}

nlohmann::json to_json(const GradedPolynomial& p) {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [e, c] : p.terms()) terms[exponents_key(e)] = rational_to_json(c);
    return {{"rank", p.vars()}, {"terms", terms}};
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"case", f.case_id}, {"expected", f.expected}, {"actual", f.actual}});
    return {{"suite", r.suite},        {"cases", r.cases},         {"failures", failures},
            {"wall_time_s", r.wall_seconds}, {"seed", r.seed},     {"engine", r.engine}};
}

}  // namespace schubert

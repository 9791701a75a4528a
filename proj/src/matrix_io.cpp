#include "loewner/matrix_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace loewner {

using nlohmann::json;

ComplexMatrix matrix_from_json(const json &j, const std::string &context) {
    auto fail = [&context](const std::string &msg) -> ComplexMatrix {
        throw std::invalid_argument(context + ": " + msg);
    };
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        return fail("expected object with \"dim\" and \"entries\"");
    if (!j["dim"].is_number_integer())
        return fail("\"dim\" must be an integer");
    const int dim = j["dim"].get<int>();
    if (dim <= 0)
        return fail("\"dim\" must be positive");
    const auto &entries = j["entries"];
    if (!entries.is_array() || entries.size() != static_cast<size_t>(dim) * dim)
        return fail("\"entries\" must hold exactly dim*dim [re, im] pairs");
    std::vector<Complex> data;
    data.reserve(entries.size());
    for (const auto &e : entries) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            return fail("each entry must be a [re, im] pair of numbers");
        data.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    ComplexMatrix m(dim, std::move(data));
    if (!m.all_finite())
        return fail("matrix entries must be finite");
    return m;
}

json matrix_to_json(const ComplexMatrix &m) {
    json entries = json::array();
    for (const Complex &z : m.entries())
        entries.push_back({z.real(), z.imag()});
    return json{{"dim", m.dim()}, {"entries", std::move(entries)}};
}

ComplexMatrix read_matrix(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument(path + ": cannot open for reading");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(path + ": invalid JSON (" + e.what() + ")");
    }
    return matrix_from_json(j, path);
}

void write_matrix(const std::string &path, const ComplexMatrix &m) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument(path + ": cannot open for writing");
    out << matrix_to_json(m).dump(2) << '\n';
}

} // namespace loewner

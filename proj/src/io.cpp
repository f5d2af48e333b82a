#include "centangle/io.hpp"

#include <fstream>
#include <stdexcept>

#include "centangle/bits.hpp"

namespace centangle {

namespace {

Complex complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("expected a [re, im] pair");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a rational string");
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

LoadedState state_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw std::invalid_argument("state file: missing integer field 'n'");
    }
    const int n = j["n"].get<int>();
    LoadedState s;
    if (j.contains("amps")) {
        const auto& arr = j["amps"];
        if (!arr.is_array()) throw std::invalid_argument("state file: 'amps' must be an array");
        std::vector<Complex> amps;
        amps.reserve(arr.size());
        for (const auto& a : arr) amps.push_back(complex_from_json(a));
        s.pure = PureState(n, std::move(amps));
    } else if (j.contains("mat")) {
        const auto& rows = j["mat"];
        if (!rows.is_array()) throw std::invalid_argument("state file: 'mat' must be an array");
        const auto dim = static_cast<Eigen::Index>(rows.size());
        Eigen::MatrixXcd m(dim, dim);
        for (Eigen::Index r = 0; r < dim; ++r) {
            const auto& row = rows[static_cast<std::size_t>(r)];
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
                throw std::invalid_argument("state file: 'mat' must be square");
            }
            for (Eigen::Index c = 0; c < dim; ++c) {
                m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
            }
        }
        s.density = DensityMatrix(n, std::move(m));
    } else {
        throw std::invalid_argument("state file: need either 'amps' or 'mat'");
    }
    return s;
}

LoadedState load_state_file(const std::string& path) {
    return state_from_json(load_json_file(path));
}

nlohmann::json pure_state_to_json(const PureState& psi) {
    nlohmann::json amps = nlohmann::json::array();
    for (const Complex& a : psi.amps) amps.push_back({a.real(), a.imag()});
    return {{"n", psi.n}, {"amps", amps}};
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw std::invalid_argument("graph file: missing integer field 'n'");
    }
    if (!j.contains("edges") || !j["edges"].is_array()) {
        throw std::invalid_argument("graph file: missing array field 'edges'");
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw std::invalid_argument("graph file: each edge must be a [a, b] pair");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(j["n"].get<int>(), std::move(edges));
}

Graph load_graph_file(const std::string& path) {
    return graph_from_json(load_json_file(path));
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    return {{"n", g.n}, {"edges", edges}};
}

Enumerators load_enumerators_file(const std::string& path) {
    const nlohmann::json j = load_json_file(path);
    if (!j.contains("n") || !j.contains("k") || !j.contains("A") || !j["A"].is_array()) {
        throw std::invalid_argument("enumerator file: need fields 'n', 'k' and array 'A'");
    }
    std::vector<Rational> A;
    for (const auto& a : j["A"]) A.push_back(rational_from_json(a));
    return make_enumerators(j["n"].get<int>(), j["k"].get<int>(), std::move(A));
}

void save_samples(const std::string& path, std::span<const std::uint32_t> samples, int n) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (const std::uint32_t z : samples) out << bitstring(z, n) << '\n';
}

}  // namespace centangle

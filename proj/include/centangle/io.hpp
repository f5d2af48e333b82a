#pragma once

#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "centangle/lp.hpp"
#include "centangle/stabilizer.hpp"
#include "centangle/state.hpp"

namespace centangle {

inline constexpr int kSchemaVersion = 1;

// Exactly one of the two members is set, depending on whether the file
// carries "amps" (pure) or "mat" (density) alongside "n".
struct LoadedState {
    std::optional<PureState> pure;
    std::optional<DensityMatrix> density;

    int n() const { return pure ? pure->n : density->n; }
};

LoadedState load_state_file(const std::string& path);
LoadedState state_from_json(const nlohmann::json& j);

nlohmann::json pure_state_to_json(const PureState& psi);

Graph load_graph_file(const std::string& path);
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

// {"n":, "k":, "A": [...]} with integer or "p/q" string entries.
Enumerators load_enumerators_file(const std::string& path);

// One line per shot, qubit 0 leftmost.
void save_samples(const std::string& path, std::span<const std::uint32_t> samples, int n);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace centangle

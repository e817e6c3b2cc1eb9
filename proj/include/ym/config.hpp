#pragma once

#include <memory>
#include <optional>
#include <string>

#include "ym/graph.hpp"
#include "ym/levy.hpp"
#include "ym/loops.hpp"

namespace ym {

// Inputs shared by the CLI subcommands, assembled from an optional JSON
// config file plus command-line overrides.
struct RunConfig {
  std::shared_ptr<FiniteGroup> group;
  std::optional<JumpMeasure> levy;
  std::optional<CircleLevy> circle;
  std::optional<EmbeddedGraph> graph;
  int grid_w = 0, grid_h = 0;  // set when the graph is a builtin grid
  std::vector<double> areas;
  std::vector<EdgeWord> loops;
  uint64_t seed = 7;
  unsigned threads = 0;  // 0 = hardware concurrency
  uint64_t samples = 1000000;
};

// "S3", "Z4", "symmetric:5", "cyclic:12".
std::shared_ptr<FiniteGroup> parse_group(const std::string& spec);

// "2x1" -> (2, 1); throws on anything else.
std::pair<int, int> parse_grid(const std::string& spec);

// Comma list of positive reals.
std::vector<double> parse_areas(const std::string& list);

// Comma list of loop names: L(i,j) grid lassos and L(s,t-strip) strip lassos.
std::vector<EdgeWord> parse_loops(const EmbeddedGraph& g, int w, int h,
                                  const std::string& list);

// Loads the JSON config file; missing sections stay unset.
RunConfig load_config(const std::string& path);

// Lévy descriptor from a JSON snippet: {"jumps": {label: rate}} on the given
// group, or {"circle": {"sigma2": x, "drift": d}}.
void parse_levy_json(RunConfig& cfg, const std::string& json_text);

}  // namespace ym

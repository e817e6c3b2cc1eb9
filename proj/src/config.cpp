#include "ym/config.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ym {

using nlohmann::json;

std::shared_ptr<FiniteGroup> parse_group(const std::string& spec) {
  auto make = [](FiniteGroup g) { return std::make_shared<FiniteGroup>(std::move(g)); };
  if (spec.size() >= 2 && (spec[0] == 'S' || spec[0] == 's'))
    return make(FiniteGroup::symmetric(std::stoi(spec.substr(1))));
  if (spec.size() >= 2 && (spec[0] == 'Z' || spec[0] == 'z'))
    return make(FiniteGroup::cyclic(std::stoi(spec.substr(1))));
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    auto kind = spec.substr(0, colon);
    int n = std::stoi(spec.substr(colon + 1));
    if (kind == "symmetric") return make(FiniteGroup::symmetric(n));
    if (kind == "cyclic") return make(FiniteGroup::cyclic(n));
  }
  throw std::invalid_argument("unknown group spec: " + spec);
}

std::pair<int, int> parse_grid(const std::string& spec) {
  auto x = spec.find('x');
  if (x == std::string::npos) throw std::invalid_argument("grid spec must look like WxH");
  return {std::stoi(spec.substr(0, x)), std::stoi(spec.substr(x + 1))};
}

std::vector<double> parse_areas(const std::string& list) {
  std::vector<double> areas;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double a = std::stod(item);
    if (a <= 0) throw std::invalid_argument("areas must be positive");
    areas.push_back(a);
  }
  return areas;
}

namespace {

EdgeWord parse_loop_name(const EmbeddedGraph& g, int w, int h, const std::string& name) {
  if (name.size() < 6 || name.substr(0, 2) != "L(" || name.back() != ')')
    throw std::invalid_argument("loop name must look like L(i,j) or L(s,t-strip): " + name);
  auto body = name.substr(2, name.size() - 3);
  auto comma = body.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("bad loop literal: " + name);
  int first = std::stoi(body.substr(0, comma));
  auto rest = body.substr(comma + 1);
  bool strip = rest.size() > 6 && rest.substr(rest.size() - 6) == "-strip";
  if (strip) rest = rest.substr(0, rest.size() - 6);
  int second = std::stoi(rest);
  if (w <= 0 || h <= 0)
    throw std::invalid_argument("named grid lassos need a builtin grid graph");
  return strip ? strip_lasso(g, w, h, first, second) : grid_lasso(g, w, h, first, second);
}

}  // namespace

std::vector<EdgeWord> parse_loops(const EmbeddedGraph& g, int w, int h,
                                  const std::string& list) {
  std::vector<EdgeWord> loops;
  // Split on commas that are not inside parentheses.
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    if (!cur.empty()) {
      loops.push_back(parse_loop_name(g, w, h, cur));
      cur.clear();
    }
  };
  for (char c : list) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
  }
  flush();
  if (loops.empty()) throw std::invalid_argument("empty loop list");
  return loops;
}

void parse_levy_json(RunConfig& cfg, const std::string& json_text) {
  json j = json::parse(json_text);
  if (j.contains("circle")) {
    CircleLevy c;
    c.variance_rate = j["circle"].value("sigma2", 1.0);
    c.drift = j["circle"].value("drift", 0.0);
    if (c.variance_rate <= 0) throw std::invalid_argument("circle sigma2 must be positive");
    cfg.circle = c;
    return;
  }
  if (!j.contains("jumps")) throw std::invalid_argument("levy descriptor needs jumps or circle");
  if (!cfg.group) throw std::invalid_argument("jump rates need a group");
  std::vector<double> rates(cfg.group->order(), 0.0);
  for (auto& [label, rate] : j["jumps"].items())
    rates[cfg.group->element_by_label(label)] = rate.get<double>();
  cfg.levy = JumpMeasure::from_rates(*cfg.group, rates);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  json j = json::parse(buf.str());

  RunConfig cfg;
  if (j.contains("seed")) cfg.seed = j["seed"].get<uint64_t>();
  if (j.contains("threads")) cfg.threads = j["threads"].get<unsigned>();
  if (j.contains("samples")) cfg.samples = j["samples"].get<uint64_t>();

  if (j.contains("group")) {
    const auto& gj = j["group"];
    std::string kind = gj.at("kind").get<std::string>();
    if (kind == "symmetric")
      cfg.group = std::make_shared<FiniteGroup>(FiniteGroup::symmetric(gj.at("n").get<int>()));
    else if (kind == "cyclic")
      cfg.group = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(gj.at("n").get<int>()));
    else if (kind == "table") {
      auto table = gj.at("mul").get<std::vector<std::vector<int>>>();
      std::vector<std::string> labels;
      if (gj.contains("labels")) labels = gj["labels"].get<std::vector<std::string>>();
      cfg.group = std::make_shared<FiniteGroup>(FiniteGroup::from_table(table, labels));
    } else {
      throw std::invalid_argument("unknown group kind: " + kind);
    }
  }

  if (j.contains("levy")) parse_levy_json(cfg, j["levy"].dump());

  if (j.contains("graph")) {
    const auto& gj = j["graph"];
    if (gj.contains("grid")) {
      auto [w, h] = parse_grid(gj["grid"].get<std::string>());
      cfg.grid_w = w;
      cfg.grid_h = h;
      cfg.graph = EmbeddedGraph::grid(w, h);
      cfg.areas = geometric_areas(*cfg.graph);
    } else if (gj.contains("file")) {
      std::ifstream gin(gj["file"].get<std::string>());
      if (!gin) throw std::invalid_argument("cannot open graph file");
      std::stringstream gbuf;
      gbuf << gin.rdbuf();
      std::vector<double> areas;
      cfg.graph = graph_from_json(gbuf.str(), &areas);
      cfg.areas = areas;
    }
  }

  if (j.contains("areas") && j["areas"].is_array())
    cfg.areas = j["areas"].get<std::vector<double>>();

  if (j.contains("loops") && cfg.graph) {
    for (const auto& item : j["loops"]) {
      if (item.is_string()) {
        cfg.loops.push_back(
            parse_loop_name(*cfg.graph, cfg.grid_w, cfg.grid_h, item.get<std::string>()));
      } else {
        auto edges = item.get<std::vector<int>>();
        int base = cfg.graph->tail(half_edge_of_signed(edges.at(0)));
        cfg.loops.push_back(make_word(*cfg.graph, base, std::move(edges)));
      }
    }
  }
  return cfg;
}

}  // namespace ym

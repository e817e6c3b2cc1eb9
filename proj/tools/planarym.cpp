// Command-line front end: builds holonomy fields over finite groups and the
// circle group on embedded planar graphs, tabulates exact loop laws two ways,
// estimates Wilson loops and runs the verification suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "ym/config.hpp"
#include "ym/suite.hpp"
#include "ym/winding.hpp"
#include "ym/yangmills.hpp"

using namespace ym;

namespace {

struct CommonOpts {
  std::string config_path;
  std::string grid;
  std::string group;
  std::string areas;
  std::string loops;
  std::string jumps;
  std::string circle;
  std::string out;
  uint64_t seed = 7;
  unsigned threads = 0;
  uint64_t samples = 1000000;
  bool seed_set = false, threads_set = false, samples_set = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "JSON config file");
  cmd->add_option("--grid", o.grid, "builtin grid graph WxH");
  cmd->add_option("--group", o.group, "group spec, e.g. S3 or Z4");
  cmd->add_option("--areas", o.areas, "comma list of face areas");
  cmd->add_option("--loops", o.loops, "comma list of loops, e.g. L(0,0),L(0,2-strip)");
  cmd->add_option("--jumps", o.jumps, "jump rates label=rate;... (default: rate 1 off identity)");
  cmd->add_option("--circle", o.circle, "circle-group Brownian motion sigma2[,drift]");
  cmd->add_option("--out", o.out, "output file (default stdout)");
  cmd->add_option("--seed", o.seed, "master seed")->each([&](const std::string&) {
    o.seed_set = true;
  });
  cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)")
      ->each([&](const std::string&) { o.threads_set = true; });
  cmd->add_option("--samples", o.samples, "Monte Carlo sample count")
      ->each([&](const std::string&) { o.samples_set = true; });
}

RunConfig resolve(const CommonOpts& o) {
  RunConfig cfg;
  if (!o.config_path.empty()) cfg = load_config(o.config_path);
  if (!o.group.empty()) cfg.group = parse_group(o.group);
  if (!o.grid.empty()) {
    auto [w, h] = parse_grid(o.grid);
    cfg.grid_w = w;
    cfg.grid_h = h;
    cfg.graph = EmbeddedGraph::grid(w, h);
    cfg.areas = geometric_areas(*cfg.graph);
    cfg.loops.clear();
  }
  if (!o.areas.empty()) cfg.areas = parse_areas(o.areas);
  if (!o.loops.empty()) {
    if (!cfg.graph) throw std::invalid_argument("--loops needs a graph");
    cfg.loops = parse_loops(*cfg.graph, cfg.grid_w, cfg.grid_h, o.loops);
  }
  if (!o.jumps.empty()) {
    if (!cfg.group) throw std::invalid_argument("--jumps needs a group");
    std::vector<double> rates(cfg.group->order(), 0.0);
    std::stringstream ss(o.jumps);
    std::string item;
    while (std::getline(ss, item, ';')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--jumps needs label=rate pairs");
      rates[cfg.group->element_by_label(item.substr(0, eq))] = std::stod(item.substr(eq + 1));
    }
    cfg.levy = JumpMeasure::from_rates(*cfg.group, rates);
  }
  if (!o.circle.empty()) {
    CircleLevy c;
    auto comma = o.circle.find(',');
    c.variance_rate = std::stod(o.circle.substr(0, comma));
    if (comma != std::string::npos) c.drift = std::stod(o.circle.substr(comma + 1));
    if (c.variance_rate <= 0) throw std::invalid_argument("circle sigma2 must be positive");
    cfg.circle = c;
  }
  if (!cfg.levy && !cfg.circle && cfg.group) {
    // Default jump measure: rate 1 on every non-identity element.
    std::vector<double> rates(cfg.group->order(), 1.0);
    rates[cfg.group->identity()] = 0.0;
    cfg.levy = JumpMeasure::from_rates(*cfg.group, rates);
  }
  if (o.seed_set || cfg.seed == 0) cfg.seed = o.seed;
  if (o.threads_set) cfg.threads = o.threads;
  if (o.samples_set) cfg.samples = o.samples;
  if (cfg.threads == 0) cfg.threads = std::max(1u, std::thread::hardware_concurrency());
  return cfg;
}

void write_out(const CommonOpts& o, const std::string& text) {
  if (o.out.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    std::ofstream f(o.out);
    if (!f) throw std::invalid_argument("cannot open output file: " + o.out);
    f << text;
  }
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const JumpMeasure& need_levy(const RunConfig& cfg) {
  if (!cfg.levy)
    throw std::invalid_argument("this command needs a finite-group levy descriptor");
  return *cfg.levy;
}

const EmbeddedGraph& need_graph(const RunConfig& cfg) {
  if (!cfg.graph) throw std::invalid_argument("this command needs a graph (--grid or config)");
  return *cfg.graph;
}

std::string law_csv(const LoopLaw& law) {
  std::string out = "tuple,probability\n";
  for (const auto& [key, p] : law.table) {
    std::string label;
    for (size_t i = 0; i < key.size(); ++i) {
      if (i) label += '|';
      label += law.group->label(key[i]);
    }
    out += "\"" + label + "\"," + fmt17(p) + "\n";
  }
  return out;
}

int cmd_faces(const CommonOpts& o, const std::string& emit) {
  auto cfg = resolve(o);
  const auto& g = need_graph(cfg);
  std::string out;
  out += "vertices " + std::to_string(g.vertex_count()) + "\n";
  out += "edges " + std::to_string(g.edge_count()) + "\n";
  out += "bounded_faces " + std::to_string(g.bounded_face_count()) + "\n";
  for (int f = 0; f < g.bounded_face_count(); ++f) {
    out += "face " + std::to_string(f) + " key " + canonical_face_key(g, f) + " area " +
           fmt17(cfg.areas.empty() ? g.face(f).signed_area : cfg.areas[f]) + "\n";
  }
  out += "unbounded face key " + canonical_face_key(g, g.unbounded_face()) + "\n";
  write_out(o, out);
  if (!emit.empty()) {
    std::ofstream f(emit);
    if (!f) throw std::invalid_argument("cannot open graph output file");
    f << graph_to_json(g, cfg.areas.empty() ? nullptr : &cfg.areas);
  }
  return 0;
}

int cmd_sample(const CommonOpts& o) {
  auto cfg = resolve(o);
  const auto& g = need_graph(cfg);
  auto t = spanning_tree(g, 0);
  Rng rng = Rng(cfg.seed).stream(0);
  nlohmann::json j;
  if (cfg.circle) {
    auto field = sample_field(g, t, cfg.areas, *cfg.circle, rng);
    for (int e = 0; e < g.edge_count(); ++e) j[std::to_string(e)] = field.angle[e];
  } else {
    auto field = sample_field(g, t, cfg.areas, need_levy(cfg), rng);
    for (int e = 0; e < g.edge_count(); ++e)
      j[std::to_string(e)] = cfg.group->label(field.value[e]);
  }
  write_out(o, j.dump(2) + "\n");
  return 0;
}

int cmd_law(const CommonOpts& o, bool lasso_route) {
  auto cfg = resolve(o);
  const auto& g = need_graph(cfg);
  const auto& m = need_levy(cfg);
  if (cfg.loops.empty()) throw std::invalid_argument("no loops given");
  LawOptions opt{true, 1e7, cfg.threads};
  LoopLaw law;
  if (lasso_route) {
    auto t = spanning_tree(g, 0);
    law = exact_lasso_law(g, t, cfg.areas, m, cfg.loops, opt);
  } else {
    law = exact_density_law(g, cfg.areas, m, cfg.loops, opt);
  }
  write_out(o, law_csv(law));
  return 0;
}

int cmd_wilson(const CommonOpts& o, const std::string& observable) {
  auto cfg = resolve(o);
  const auto& g = need_graph(cfg);
  if (cfg.loops.empty()) throw std::invalid_argument("no loops given");
  auto t = spanning_tree(g, 0);
  WilsonEstimate est;
  if (cfg.circle) {
    if (observable != "cos")
      throw std::invalid_argument("circle group supports the cos observable");
    est = wilson_estimate(
        g, t, cfg.areas, *cfg.circle, cfg.loops,
        [](const std::vector<double>& x) { return std::cos(x[0]); }, cfg.samples, cfg.seed,
        cfg.threads);
  } else {
    const auto& m = need_levy(cfg);
    if (observable != "indicator-id")
      throw std::invalid_argument("finite groups support the indicator-id observable");
    int id = cfg.group->identity();
    est = wilson_estimate(
        g, t, cfg.areas, m, cfg.loops,
        [id](const std::vector<int>& x) { return x[0] == id ? 1.0 : 0.0; }, cfg.samples,
        cfg.seed, cfg.threads);
  }
  write_out(o, "mean " + fmt17(est.mean) + "\nstderr " + fmt17(est.stderr_) + "\nsamples " +
                   std::to_string(est.n_samples) + "\n");
  return 0;
}

int cmd_braid(const CommonOpts& o, const std::string& word, int strands,
              const std::string& tuple) {
  auto cfg = resolve(o);
  std::vector<int> letters;
  if (!word.empty()) {
    std::stringstream ss(word);
    std::string item;
    while (std::getline(ss, item, ',')) letters.push_back(std::stoi(item));
  }
  auto b = BraidWord::make(strands, letters);
  std::string out;
  auto perm = permutation_of(b);
  out += "permutation";
  for (int p : perm) out += " " + std::to_string(p + 1);
  out += "\n";
  auto imgs = braid_generator_images(b);
  for (int i = 0; i < strands; ++i) {
    out += "e" + std::to_string(i + 1) + " ->";
    for (int s : imgs[i])
      out += " " + std::string(s > 0 ? "e" : "E") + std::to_string(std::abs(s));
    out += "\n";
  }
  if (!tuple.empty()) {
    if (!cfg.group) throw std::invalid_argument("--act-tuple needs a group");
    std::vector<int> x;
    std::stringstream ss(tuple);
    std::string item;
    while (std::getline(ss, item, ';')) x.push_back(cfg.group->element_by_label(item));
    auto y = act_on_tuple(b, *cfg.group, x);
    out += "tuple ->";
    for (int v : y) out += " " + cfg.group->label(v);
    out += "\n";
  }
  write_out(o, out);
  return 0;
}

int cmd_winding(const CommonOpts& o, const std::string& loop_file, const std::string& point) {
  auto cfg = resolve(o);
  if (!loop_file.empty()) {
    std::ifstream f(loop_file);
    if (!f) throw std::invalid_argument("cannot open loop file");
    nlohmann::json j;
    f >> j;
    PolylineLoop l;
    for (const auto& p : j) l.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    auto comma = point.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--point needs x,y");
    Point x{std::stod(point.substr(0, comma)), std::stod(point.substr(comma + 1))};
    write_out(o, std::to_string(winding_number(l, x)) + "\n");
    return 0;
  }
  const auto& g = need_graph(cfg);
  if (cfg.loops.empty()) throw std::invalid_argument("no loops given");
  std::string out;
  for (size_t k = 0; k < cfg.loops.size(); ++k)
    out += "loop " + std::to_string(k) + " integrated_index " +
           fmt17(integrated_index(g, cfg.areas, cfg.loops[k])) + "\n";
  write_out(o, out);
  return 0;
}

int cmd_mixing(const CommonOpts& o, double time, int n_max, double tol) {
  auto cfg = resolve(o);
  const auto& m = need_levy(cfg);
  auto p = semigroup_density(m, time);
  auto mix = itokawada_mixing(p, n_max, tol);
  std::string out;
  for (size_t i = 0; i < mix.tv_trace.size(); ++i)
    out += "n " + std::to_string(i + 1) + " tv " + fmt17(mix.tv_trace[i]) + "\n";
  out += mix.n_mixed ? "mixed_at " + std::to_string(*mix.n_mixed) + "\n"
                     : std::string("mixed_at none\n");
  write_out(o, out);
  return 0;
}

int cmd_verify(const CommonOpts& o) {
  auto cfg = resolve(o);
  SuiteConfig sc{cfg.seed, cfg.threads, false};
  auto reports = run_all(sc);
  std::fputs(report_text(reports).c_str(), stdout);
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw std::invalid_argument("cannot open report file");
    f << report_json(reports, cfg.seed);
  }
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar Yang-Mills holonomy fields on embedded graphs"};
  app.require_subcommand(1);

  CommonOpts faces_o, sample_o, lasso_o, dens_o, wilson_o, braid_o, winding_o, mixing_o,
      verify_o;
  std::string faces_emit, wilson_obs = "indicator-id", braid_word, braid_tuple;
  std::string winding_loop_file, winding_point;
  int braid_strands = 2, mixing_nmax = 64;
  double mixing_time = 1.0, mixing_tol = 0.01;
  bool verify_all = false;

  auto* c_faces = app.add_subcommand("faces", "trace and list the faces of a graph");
  add_common(c_faces, faces_o);
  c_faces->add_option("--emit", faces_emit, "write the graph as JSON");

  auto* c_sample = app.add_subcommand("sample", "sample one holonomy field");
  add_common(c_sample, sample_o);

  auto* c_lasso = app.add_subcommand("law-lasso", "exact loop law via the lasso paradigm");
  add_common(c_lasso, lasso_o);

  auto* c_dens = app.add_subcommand("law-density", "exact loop law via the edge density");
  add_common(c_dens, dens_o);

  auto* c_wilson = app.add_subcommand("wilson", "Monte Carlo Wilson loop estimate");
  add_common(c_wilson, wilson_o);
  c_wilson->add_option("--observable", wilson_obs, "indicator-id or cos");

  auto* c_braid = app.add_subcommand("braid", "braid word utilities");
  add_common(c_braid, braid_o);
  c_braid->add_option("--word", braid_word, "comma list of signed generator indices");
  c_braid->add_option("--strands", braid_strands, "strand count")->required();
  c_braid->add_option("--act-tuple", braid_tuple, "semicolon list of element labels");

  auto* c_wind = app.add_subcommand("winding", "winding numbers and integrated index");
  add_common(c_wind, winding_o);
  c_wind->add_option("--loop-file", winding_loop_file, "JSON point list [[x,y],...]");
  c_wind->add_option("--point", winding_point, "probe point x,y");

  auto* c_mix = app.add_subcommand("mixing", "convolution mixing toward Haar");
  add_common(c_mix, mixing_o);
  c_mix->add_option("--time", mixing_time, "semigroup time for the base density");
  c_mix->add_option("--nmax", mixing_nmax, "maximum convolution power");
  c_mix->add_option("--tol", mixing_tol, "TV tolerance");

  auto* c_verify = app.add_subcommand("verify", "run the verification suite");
  add_common(c_verify, verify_o);
  c_verify->add_flag("--all", verify_all, "run every suite entry (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_faces->parsed()) return cmd_faces(faces_o, faces_emit);
    if (c_sample->parsed()) return cmd_sample(sample_o);
    if (c_lasso->parsed()) return cmd_law(lasso_o, true);
    if (c_dens->parsed()) return cmd_law(dens_o, false);
    if (c_wilson->parsed()) return cmd_wilson(wilson_o, wilson_obs);
    if (c_braid->parsed()) return cmd_braid(braid_o, braid_word, braid_strands, braid_tuple);
    if (c_wind->parsed()) return cmd_winding(winding_o, winding_loop_file, winding_point);
    if (c_mix->parsed()) return cmd_mixing(mixing_o, mixing_time, mixing_nmax, mixing_tol);
    if (c_verify->parsed()) return cmd_verify(verify_o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

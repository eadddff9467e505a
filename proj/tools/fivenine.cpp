// fivenine: batch front end for the flag-complex checkers.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "fivenine/fivenine.hpp"

namespace {

using namespace fivenine;

constexpr int kUsageExit = 3;
constexpr int kInputExit = 4;
constexpr int kErrorExit = 5;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Complex JSON, edge list, or diagram JSON (read as its disc).
FlagComplex read_complex(const std::string& path) {
  auto text = read_input(path);
  if (sniff_format(text) == InputFormat::json) {
    auto j = detail::parse_json(text);
    if (j.is_object() && j.contains("disc")) return disc_complex(diagram_from_json(j).disc);
    return complex_from_json(j);
  }
  return complex_from_edge_list(text);
}

std::vector<unsigned long> parse_list(const std::string& text, const std::string& what) {
  std::vector<unsigned long> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || item[0] == '-') {
      fail(ErrorKind::usage, "bad " + what + " entry '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

unsigned long parse_suffix(const std::string& text, const std::string& prefix) {
  auto values = parse_list(text.substr(prefix.size()), prefix);
  if (values.size() != 1) fail(ErrorKind::usage, "expected one number after '" + prefix + "'");
  return values[0];
}

void emit(const Json& j, const std::string& format) {
  if (format == "human") {
    std::cout << render_human(j);
  } else if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    fail(ErrorKind::usage, "format '" + format + "' is not available for this command");
  }
}

struct Options {
  std::string input = "-";
  std::string format = "json";
  std::string condition = "five-nine";
  std::string triviality;
  std::string loop;
  std::size_t max_area = 0;
  std::uint64_t max_nodes = 0;
  unsigned without_interior = 0;
  std::string vertex_or_edge;
  std::size_t max_len = 12;
  bool exact = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  std::string family;
  std::string radii;
  unsigned degree = 7;
  unsigned radius = 2;
  std::string name = "octahedron";
  std::size_t n = 10;
  double p = 0.3;
  std::size_t base_cycle = 9;
  std::string base;
  std::size_t boundary = 4;
  std::string degrees;
};

int run_check(const Options& o) {
  auto X = read_complex(o.input);
  ConditionReport report;
  const auto& c = o.condition;
  if (c == "flag") {
    report = flagness_check(X);
  } else if (c == "five-nine") {
    report = check_five_nine(X);
  } else if (c.rfind("k-large:", 0) == 0) {
    report = check_k_large_local(X, unsigned(parse_suffix(c, "k-large:")));
  } else if (c.rfind("m-location:", 0) == 0) {
    const auto m = parse_suffix(c, "m-location:");
    if (o.triviality.empty() || o.triviality == "all") {
      report = check_m_location(X, m, TrivialityOracle::all());
    } else if (o.triviality.rfind("bounded:", 0) == 0) {
      report = check_m_location_with_filling(
          X, m, TrivialityOracle::bounded(parse_suffix(o.triviality, "bounded:")));
    } else {
      fail(ErrorKind::usage, "unknown triviality '" + o.triviality + "'");
    }
  } else {
    fail(ErrorKind::usage, "unknown condition '" + c + "'");
  }
  emit(to_json(report), o.format);
  return exit_code(report.verdict);
}

int run_link(const Options& o) {
  auto X = read_complex(o.input);
  std::vector<Vertex> sigma;
  for (auto v : parse_list(o.vertex_or_edge, "simplex")) sigma.push_back(Vertex(v));
  auto link = compute_link(X, sigma);
  Json j;
  j["center"] = link.center;
  j["vertices"] = link.view.members;
  Json edges = Json::array();
  for (auto [a, b] : link.view.complex.edges()) edges.push_back({link.view.members[a], link.view.members[b]});
  j["edges"] = std::move(edges);
  j["largeness"] = largeness_of_complex(link).to_string();
  emit(j, o.format);
  return 0;
}

int run_cycles(const Options& o) {
  auto X = read_complex(o.input);
  Json j;
  j["max_len"] = o.max_len;
  Json cycles = Json::array();
  for (const auto& loop : enumerate_full_cycles(X, o.max_len)) cycles.push_back(loop.vertices);
  j["cycles"] = std::move(cycles);
  emit(j, o.format);
  return 0;
}

int run_fill(const Options& o) {
  auto X = read_complex(o.input);
  if (o.loop.empty()) fail(ErrorKind::usage, "fill needs --loop");
  std::vector<Vertex> vs;
  for (auto v : parse_list(o.loop, "loop")) vs.push_back(Vertex(v));
  auto loop = make_loop(X, vs);
  Json j;
  int code = 0;
  std::optional<DiagramMap> diagram;
  if (o.without_interior) {
    diagram = fill_without_interior(X, loop, o.without_interior);
    j = to_json(*diagram);
  } else {
    FillingOptions opts;
    opts.max_area = o.max_area;
    opts.max_nodes = o.max_nodes;
    auto result = find_minimal_filling(X, loop, opts);
    diagram = result.diagram;
    j = to_json(result);
    if (result.status != FillingStatus::found) code = 2;
  }
  if (o.format == "dot") {
    if (!diagram) fail(ErrorKind::usage, "no diagram to render");
    std::cout << to_dot(*diagram);
  } else {
    emit(j, o.format);
  }
  return code;
}

int run_delta(const Options& o) {
  DeltaMethod method = DeltaMethod::exact();
  if (o.samples) {
    if (o.exact) fail(ErrorKind::usage, "--exact and --sample are exclusive");
    method = DeltaMethod::sampled(o.samples, o.seed);
  }
  if (!o.family.empty()) {
    if (o.radii.empty()) fail(ErrorKind::usage, "a profile needs --radii");
    std::function<FlagComplex(unsigned)> family;
    if (o.family.rfind("tiling:", 0) == 0) {
      const unsigned d = unsigned(parse_suffix(o.family, "tiling:"));
      family = [d](unsigned r) { return gen_tiling_patch(d, r); };
    } else if (o.family == "path") {
      family = [](unsigned r) { return path_graph(r + 1); };
    } else if (o.family == "cycle") {
      family = [](unsigned r) { return cycle_graph(r); };
    } else {
      fail(ErrorKind::usage, "unknown family '" + o.family + "'");
    }
    std::vector<unsigned> radii;
    for (auto r : parse_list(o.radii, "radius")) radii.push_back(unsigned(r));
    auto rows = delta_growth_profile(family, radii, o.samples ? o.samples : 200000, o.seed);
    if (o.format == "csv") {
      std::cout << profile_csv(rows);
    } else {
      Json arr = Json::array();
      for (const auto& row : rows) {
        Json r = to_json(row.delta);
        arr.push_back({{"radius", row.radius}, {"vertices", row.vertex_count}, {"delta", r["delta"]},
                       {"witness", r["witness"]}, {"method", r["method"]}});
      }
      emit(Json{{"profile", arr}}, o.format);
    }
    return 0;
  }
  auto X = read_complex(o.input);
  emit(to_json(four_point_delta(X, method)), o.format);
  return 0;
}

int run_gen(const std::string& kind, const Options& o) {
  if (kind == "disc") {
    std::vector<unsigned> degrees;
    if (!o.degrees.empty()) {
      for (auto d : parse_list(o.degrees, "degree")) degrees.push_back(unsigned(d));
    }
    auto M = identity_diagram(gen_polygon_disc(o.boundary, degrees));
    if (o.format == "dot") {
      std::cout << to_dot(M);
    } else {
      emit(to_json(M), o.format);
    }
    return 0;
  }
  FlagComplex X;
  if (kind == "tiling") {
    X = gen_tiling_patch(o.degree, o.radius);
  } else if (kind == "platonic") {
    if (o.name == "octahedron") {
      X = gen_platonic(Platonic::octahedron);
    } else if (o.name == "icosahedron") {
      X = gen_platonic(Platonic::icosahedron);
    } else {
      fail(ErrorKind::usage, "unknown platonic solid '" + o.name + "'");
    }
  } else if (kind == "random") {
    X = gen_random_flag(o.n, o.p, o.seed);
  } else if (kind == "cone") {
    X = gen_cone(o.base.empty() ? cycle_graph(o.base_cycle) : read_complex(o.base));
  } else if (kind == "simplex") {
    X = simplex(o.n);
  } else {
    fail(ErrorKind::usage, "unknown generator '" + kind + "'");
  }
  emit(to_json(X), o.format);
  return 0;
}

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage:
      return kUsageExit;
    case ErrorKind::parse:
      return kInputExit;
    default:
      return kErrorExit;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks curvature conditions on flag complexes, fills loops and measures delta."};
  app.require_subcommand(1);
  Options o;
  std::string gen_kind;

  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Complex file (JSON or edge list); '-' reads stdin");
  };

  auto* check = app.add_subcommand("check", "Run a condition check and print its report");
  add_input(check);
  check->add_option("--condition", o.condition, "flag | k-large:<k> | five-nine | m-location:<m>");
  check->add_option("--triviality", o.triviality, "all | bounded:<area>");
  add_format(check, {"json", "human"});

  auto* link = app.add_subcommand("link", "Print the link of a vertex or edge");
  add_input(link);
  link->add_option("--simplex", o.vertex_or_edge, "v or u,v")->required();
  add_format(link, {"json", "human"});

  auto* cycles = app.add_subcommand("cycles", "List full (induced) cycles");
  add_input(cycles);
  cycles->add_option("--max-len", o.max_len, "Longest cycle to list")->check(CLI::Range(3, 64));
  add_format(cycles, {"json", "human"});

  auto* fill = app.add_subcommand("fill", "Minimal filling diagram of a loop");
  add_input(fill);
  fill->add_option("--loop", o.loop, "v1,v2,...")->required();
  fill->add_option("--max-area", o.max_area, "Area budget (default 2|loop|)");
  fill->add_option("--max-nodes", o.max_nodes, "Search node cap per area level");
  fill->add_option("--without-interior", o.without_interior, "Diagonal filling for a k-large complex, given k");
  add_format(fill, {"json", "dot", "human"});

  auto* delta = app.add_subcommand("delta", "Four-point delta of the 1-skeleton");
  add_input(delta);
  auto* exact = delta->add_flag("--exact", o.exact, "Exact quadruple scan (default)");
  auto* sample = delta->add_option("--sample", o.samples, "Sample this many quadruples");
  exact->excludes(sample);
  delta->add_option("--seed", o.seed, "Sampling seed");
  delta->add_option("--family", o.family, "Profile a family instead: tiling:<d> | path | cycle");
  delta->add_option("--radii", o.radii, "Comma-separated radii for --family");
  add_format(delta, {"json", "csv", "human"});

  auto* gen = app.add_subcommand("gen", "Generate a complex or disc");
  gen->add_option("kind", gen_kind, "tiling | platonic | random | cone | disc | simplex")->required();
  gen->add_option("--degree", o.degree, "Tiling degree");
  gen->add_option("--radius", o.radius, "Tiling radius");
  gen->add_option("--name", o.name, "octahedron | icosahedron");
  gen->add_option("--n", o.n, "Vertex count (random, simplex)");
  gen->add_option("--p", o.p, "Edge probability (random)");
  gen->add_option("--seed", o.seed, "Seed (random)");
  gen->add_option("--base-cycle", o.base_cycle, "Cone over the k-cycle");
  gen->add_option("--base", o.base, "Cone over the complex in this file");
  gen->add_option("--boundary", o.boundary, "Disc boundary length");
  gen->add_option("--degrees", o.degrees, "Disc interior degrees, comma-separated");
  add_format(gen, {"json", "dot", "human"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  try {
    if (*check) return run_check(o);
    if (*link) return run_link(o);
    if (*cycles) return run_cycles(o);
    if (*fill) return run_fill(o);
    if (*delta) return run_delta(o);
    return run_gen(gen_kind, o);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kErrorExit;
  }
}

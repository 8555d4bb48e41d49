#include "c1cox/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "c1cox/catalog.hpp"
#include "c1cox/data_format.hpp"
#include "c1cox/error.hpp"
#include "c1cox/fan.hpp"
#include "c1cox/json_util.hpp"
#include "c1cox/surface.hpp"
#include "c1cox/trinomial.hpp"

namespace c1cox {

namespace {

const std::set<std::string> kCommands{"validate", "grading",  "relations", "factorial",
                                      "tropical", "ambient",  "resolve",   "duval"};

std::string type_name(const C1Data& d) { return d.type == DataType::Type1 ? "1" : "2"; }

Json report_header(const std::string& command) {
  Json out;
  out["schema"] = 1;
  out["command"] = command;
  return out;
}

std::string finish(const Json& j) { return j.dump(2) + "\n"; }

FanOptions fan_options(const JobSpec& job) {
  FanOptions opts;
  opts.comprises = job.strict_comprises ? ComprisesMode::RelativeInterior : ComprisesMode::Containment;
  if (job.face_cap) {
    opts.face_cap = *job.face_cap;
  } else if (const char* env = std::getenv("C1COX_FACE_CAP")) {
    try {
      opts.face_cap = std::stoul(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, std::string("C1COX_FACE_CAP='") + env + "' is not a count");
    }
  }
  return opts;
}

Json group_json(const FgAbelianGroup& g) {
  Json out;
  out["group"] = g.to_string();
  out["free_rank"] = g.free_rank;
  Json torsion = Json::array();
  for (const Integer& d : g.invariant_factors) torsion.push_back(json_integer(d));
  out["torsion"] = std::move(torsion);
  return out;
}

std::size_t degree_rank(const IntMatrix& p) { return cokernel(p.transpose()).target().free_rank; }

std::set<IntVector> column_set(const IntMatrix& m) {
  const auto cols = m.column_list();
  return {cols.begin(), cols.end()};
}

// ---- commands ----

std::string cmd_validate(const DataFile& file, OutputFormat fmt) {
  const C1Data data = validate(file.data);
  const FgAbelianGroup k0 = grading(data, GradingLevel::K0).target();
  std::optional<FgAbelianGroup> k;
  if (data.d) k = grading(data, GradingLevel::K).target();
  if (fmt == OutputFormat::Json) {
    Json out = report_header("validate");
    out["valid"] = true;
    out["type"] = data.type == DataType::Type1 ? 1 : 2;
    out["r"] = data.r();
    Json sizes = Json::array();
    for (const auto& b : data.blocks) sizes.push_back(b.size());
    out["n"] = std::move(sizes);
    out["m"] = data.m;
    out["s"] = data.s();
    out["dimension"] = dimension(data);
    out["K0"] = group_json(k0);
    if (k) out["K"] = group_json(*k);
    return finish(out);
  }
  std::string line = "Type " + type_name(data) + ", r=" + std::to_string(data.r()) + ", dim " +
                     std::to_string(dimension(data)) + ", K0 ≅ " + k0.to_string();
  if (k) line += ", K ≅ " + k->to_string();
  return line + "\n";
}

std::string cmd_grading(const DataFile& file, OutputFormat fmt) {
  const C1Data data = validate(file.data);
  const VariableNames names = variable_names(data);
  std::vector<std::pair<std::string, GradingMap>> levels;
  levels.emplace_back("K0", grading(data, GradingLevel::K0));
  if (data.d) levels.emplace_back("K", grading(data, GradingLevel::K));
  if (fmt == OutputFormat::Json) {
    Json out = report_header("grading");
    for (const auto& [label, map] : levels) {
      Json level = group_json(map.target());
      Json degrees;
      for (std::size_t j = 0; j < data.num_columns(); ++j)
        degrees[names[j]] = json_vector(map.degree_of_column(j));
      level["degrees"] = std::move(degrees);
      out[label] = std::move(level);
    }
    return finish(out);
  }
  std::ostringstream os;
  for (const auto& [label, map] : levels) {
    os << label << " ≅ " << map.target().to_string() << "\n";
    for (std::size_t j = 0; j < data.num_columns(); ++j)
      os << "  deg " << names[j] << " = " << to_string(map.degree_of_column(j)) << "\n";
  }
  return os.str();
}

std::string cmd_relations(const DataFile& file, OutputFormat fmt) {
  const C1Data data = validate(file.data);
  const VariableNames names = variable_names(data);
  const GradingMap k0 = grading(data, GradingLevel::K0);
  const auto relations = build_relations(data);
  if (fmt == OutputFormat::Json) {
    Json out = report_header("relations");
    Json list = Json::array();
    for (const auto& rel : relations) {
      Json item;
      item["index"] = rel.index;
      item["relation"] = rel.poly.to_string(names);
      if (const auto deg = homogeneous_degree(rel.poly, k0)) item["K0_degree"] = json_vector(*deg);
      list.push_back(std::move(item));
    }
    out["relations"] = std::move(list);
    return finish(out);
  }
  std::ostringstream os;
  for (const auto& rel : relations) {
    os << "g" << rel.index << " = " << rel.poly.to_string(names);
    if (const auto deg = homogeneous_degree(rel.poly, k0)) os << "    deg " << to_string(*deg);
    os << "\n";
  }
  return os.str();
}

std::string cmd_factorial(const DataFile& file, OutputFormat fmt) {
  const C1Data data = validate(file.data);
  const FactorialityCertificate cert = is_factorial(data);
  if (fmt == OutputFormat::Json) {
    Json out = report_header("factorial");
    out["factorial"] = cert.verdict;
    Json gcds = Json::array();
    for (const Integer& g : cert.per_block_gcds) gcds.push_back(json_integer(g));
    out["block_gcds"] = std::move(gcds);
    out["K0_torsion_free"] = cert.torsion_free;
    out["reason"] = cert.reason;
    return finish(out);
  }
  std::ostringstream os;
  os << "factorial: " << (cert.verdict ? "yes" : "no") << "\n";
  os << "block gcds:";
  for (const Integer& g : cert.per_block_gcds) os << " " << g.get_str();
  os << "\nK0 torsion-free: " << (cert.torsion_free ? "yes" : "no") << "\n";
  if (!cert.reason.empty()) os << cert.reason << "\n";
  return os.str();
}

std::string fan_report(const std::string& command, const Fan& fan, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    Json out = report_header(command);
    out["fan"] = json_fan(fan);
    return finish(out);
  }
  return fan.to_text();
}

Json self_intersection_json(const Resolution& res, const std::map<std::size_t, Integer>& labels) {
  Json out = Json::array();
  for (const auto& [column, value] : labels) {
    Json item;
    item["column"] = column + 1;
    item["ray"] = json_vector(res.resolved_p.column(column));
    item["self_intersection"] = json_integer(value);
    out.push_back(std::move(item));
  }
  return out;
}

std::string cmd_resolve(const DataFile& file, const JobSpec& job) {
  const C1Data data = validate(file.data);
  const FanOptions opts = fan_options(job);
  std::optional<SurfaceKind> kind;
  Resolution res;
  if (file.phi) {
    res = resolve(data, file_bunch(file, degree_rank(build_p(data))), opts);
  } else {
    kind = classify_case(data);
    res = resolve(data, opts);
  }
  const auto labels = exceptional_self_intersections(res);
  const ResolutionGraph graph = resolution_graph(res);
  if (job.dot) return graph.to_dot();
  if (job.format == OutputFormat::Json) {
    Json out = report_header("resolve");
    if (kind) out["case"] = to_string(*kind);
    out["resolved_P"] = json_matrix(res.resolved_p);
    out["relation"] = resolved_relation_string(res);
    Json exc = Json::array();
    for (std::size_t j : res.exceptional) exc.push_back(j + 1);
    out["exceptional_columns"] = std::move(exc);
    out["self_intersections"] = self_intersection_json(res, labels);
    out["ade_type"] = graph.ade_type;
    out["fan"] = json_fan(res.fan);
    out["bunch"] = json_bunch(res.bunch);
    return finish(out);
  }
  std::ostringstream os;
  if (kind) os << "case: " << to_string(*kind) << "\n";
  os << "resolved P: " << res.resolved_p.to_string() << "\n";
  os << "relation: " << resolved_relation_string(res) << "\n";
  os << "exceptional curves:\n";
  for (const auto& [column, value] : labels)
    os << "  column " << column + 1 << " " << to_string(res.resolved_p.column(column))
       << " self-intersection " << value.get_str() << "\n";
  os << "resolution graph: " << graph.ade_type << "\n";
  return os.str();
}

std::string cmd_duval(const JobSpec& job) {
  const FanOptions opts = fan_options(job);
  if (job.c) {
    const C1Data data = e6_family(*job.c);
    const Resolution res = resolve(data, opts);
    const auto labels = exceptional_self_intersections(res);
    bool all_minus_two = true;
    for (const auto& [column, value] : labels) all_minus_two = all_minus_two && value == -2;
    if (job.format == OutputFormat::Json) {
      Json out = report_header("duval");
      out["family"] = "E6";
      out["c"] = *job.c;
      out["P"] = json_matrix(build_p(data));
      out["resolved_P"] = json_matrix(res.resolved_p);
      out["self_intersections"] = self_intersection_json(res, labels);
      out["all_minus_two"] = all_minus_two;
      return finish(out);
    }
    std::ostringstream os;
    os << "E6 family, c = " << *job.c << "\n";
    os << "P: " << build_p(data).to_string() << "\n";
    os << "resolved P: " << res.resolved_p.to_string() << "\n";
    os << "self-intersections:";
    for (const auto& [column, value] : labels) os << " " << value.get_str();
    os << "\nall -2: " << (all_minus_two ? "yes" : "no") << "\n";
    return os.str();
  }

  const CatalogEntry entry = duval_catalog(parse_duval_type(job.duval_type), job.q);
  const Resolution res = resolve(catalog_data(entry), opts);
  const bool reproduced = column_set(res.resolved_p) == column_set(entry.P_tilde) &&
                          resolved_relation_string(res) == entry.g_tilde;
  if (job.format == OutputFormat::Json) {
    Json out = report_header("duval");
    out["type"] = entry.name;
    Json a = Json::array();
    for (const auto& row : entry.A) {
      Json r = Json::array();
      for (const Rational& x : row) r.push_back(json_rational(x));
      a.push_back(std::move(r));
    }
    out["A"] = std::move(a);
    out["P"] = json_matrix(entry.P);
    out["equation"] = entry.equation;
    out["g"] = entry.g;
    out["P_tilde"] = json_matrix(entry.P_tilde);
    out["g_tilde"] = entry.g_tilde;
    out["reproduced_by_resolution"] = reproduced;
    return finish(out);
  }
  std::ostringstream os;
  os << entry.name << "\n";
  os << "A: [[0, -1, 1], [1, -1, 0]]\n";
  os << "P: " << entry.P.to_string() << "\n";
  os << "equation: " << entry.equation << "\n";
  os << "g: " << entry.g << "\n";
  os << "P~: " << entry.P_tilde.to_string() << "\n";
  os << "g~: " << entry.g_tilde << "\n";
  os << "reproduced by resolution: " << (reproduced ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace

RunResult run(const JobSpec& job) {
  RunResult result;
  try {
    if (!kCommands.count(job.command))
      throw Error(ErrorKind::ParseError, "unknown command '" + job.command + "'");
    if (job.command == "duval") {
      result.output = cmd_duval(job);
      return result;
    }
    if (job.input_path.empty())
      throw Error(ErrorKind::ParseError, "command '" + job.command + "' needs an input file");
    const DataFile file = read_data_file(job.input_path);
    const OutputFormat fmt = job.format;
    if (job.command == "validate") {
      result.output = cmd_validate(file, fmt);
    } else if (job.command == "grading") {
      result.output = cmd_grading(file, fmt);
    } else if (job.command == "relations") {
      result.output = cmd_relations(file, fmt);
    } else if (job.command == "factorial") {
      result.output = cmd_factorial(file, fmt);
    } else if (job.command == "tropical") {
      result.output = fan_report("tropical", tropical_fan(validate(file.data)), fmt);
    } else if (job.command == "ambient") {
      const C1Data data = validate(file.data);
      const Bunch phi = file_bunch(file, degree_rank(build_p(data)));
      result.output = fan_report("ambient", ambient_fan(data, phi, fan_options(job)), fmt);
    } else {
      result.output = cmd_resolve(file, job);
    }
  } catch (const Error& e) {
    result.exit_code = e.kind() == ErrorKind::ParseError ? 2 : 1;
    result.diagnostic = std::string("error: ") + e.what();
    result.output.clear();
  }
  return result;
}

int cli_main(int argc, char** argv) {
  CLI::App app{"c1cox: trinomial Cox rings and K*-surface resolutions"};
  JobSpec job;
  std::string format = "text";
  std::size_t cap = 0;
  long c = 0;
  app.add_option("command", job.command, "validate | grading | relations | factorial | tropical | "
                                         "ambient | resolve | duval")
      ->required();
  app.add_option("input", job.input_path, "data file (.toml or .json)");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--strict-comprises", job.strict_comprises,
               "relative-interior reading of the bunch test");
  app.add_option("--type", job.duval_type, "du Val type: D, E6, E7, E8");
  app.add_option("--q", job.q, "index q of D_q");
  auto* c_opt = app.add_option("--c", c, "parameter of the E6 family");
  auto* cap_opt = app.add_option("--face-cap", cap, "admissible-face enumeration cap");
  app.add_flag("--dot", job.dot, "resolve: print the resolution graph as DOT");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  job.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  if (*c_opt) job.c = c;
  if (*cap_opt) job.face_cap = cap;
  const RunResult result = run(job);
  std::cout << result.output;
  if (!result.diagnostic.empty()) std::cerr << result.diagnostic << "\n";
  return result.exit_code;
}

}  // namespace c1cox

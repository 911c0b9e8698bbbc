// omega5 — command-line front end: pair classes, trace tables, coefficient
// screening, zero-power censuses, region sampling, and the acceptance gate.
//
// Exit codes: 0 success (or "not ruled out"), 1 a check failed, 2 bad usage.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "omega5/selfcheck.hpp"

using nlohmann::json;
using namespace omega5;

namespace {

constexpr const char* kSchemaVersion = "1";

CycleType parse_cycle_type(const std::string& s) {
  CycleType ct;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find('+', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed cycle type: '" + s + "'");
    ct.push_back(std::stoi(tok));
    if (ct.back() < 1) throw std::invalid_argument("malformed cycle type: '" + s + "'");
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return ct;
}

std::string type_string(const CycleType& ct) {
  std::string out;
  for (size_t i = 0; i < ct.size(); ++i) out += (i ? "+" : "") + std::to_string(ct[i]);
  return out;
}

std::vector<double> parse_reals(const std::string& s) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(',', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (tok.empty() || end != tok.c_str() + tok.size())
      throw std::invalid_argument("malformed real number: '" + tok + "'");
    out.push_back(v);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw std::invalid_argument("expected true/false/1/0, got '" + v + "'");
}

// key = value lines; '#' starts a comment; keys match the SamplerConfig
// fields; values present in the file override command-line flags
void apply_config_file(const std::string& path, SamplerConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = trim(line.substr(0, line.find('#')));
    if (stripped.empty()) continue;
    size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    try {
      if (key == "grid_step")
        cfg.grid_step = std::stod(value);
      else if (key == "random_samples")
        cfg.random_samples = std::stoi(value);
      else if (key == "support_size")
        cfg.support_size = std::stoi(value);
      else if (key == "seed")
        cfg.seed = std::stoull(value);
      else if (key == "output_path")
        cfg.output_path = value;
      else if (key == "plot")
        cfg.plot = parse_bool(value);
      else if (key == "include_pairs")
        cfg.include_pairs = parse_bool(value);
      else
        throw std::invalid_argument("unknown key '" + key + "'");
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

std::string config_file_form(const SamplerConfig& cfg) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", cfg.grid_step);
  std::string out;
  out += "grid_step = " + std::string(buf) + "\n";
  out += "random_samples = " + std::to_string(cfg.random_samples) + "\n";
  out += "support_size = " + std::to_string(cfg.support_size) + "\n";
  out += "seed = " + std::to_string(cfg.seed) + "\n";
  out += "output_path = " + cfg.output_path + "\n";
  out += std::string("plot = ") + (cfg.plot ? "true" : "false") + "\n";
  out += std::string("include_pairs = ") + (cfg.include_pairs ? "true" : "false") + "\n";
  return out;
}

std::string with_extension(const std::string& path, const std::string& ext) {
  return std::filesystem::path(path).replace_extension(ext).string();
}

void write_file(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
}

int cmd_enumerate_classes(const std::string& s1, const std::string& s2, bool pretty) {
  CycleType ct1 = parse_cycle_type(s1), ct2 = parse_cycle_type(s2);
  int n1 = 0, n2 = 0;
  for (int p : ct1) n1 += p;
  for (int p : ct2) n2 += p;
  if (n1 != n2) throw std::invalid_argument("cycle types must sum to the same degree");
  auto classes = enumerate_pair_classes(ct1, ct2, n1);
  auto formula = class_count_formula(ct1, ct2, n1);

  if (pretty) {
    std::printf("classes of (%s) x (%s) pairs at degree %d: %zu%s\n", s1.c_str(), s2.c_str(), n1,
                classes.size(),
                formula ? (" (formula: " + std::to_string(*formula) + ")").c_str() : "");
    std::printf("%3s  %-24s %-24s %6s %6s\n", "#", "first", "second", "orbit", "trace");
    for (size_t i = 0; i < classes.size(); ++i)
      std::printf("%3zu  %-24s %-24s %6d %6d\n", i + 1, to_cycles(classes[i].pi).c_str(),
                  to_cycles(classes[i].representative).c_str(), classes[i].orbit_size,
                  classes[i].product_trace);
    return 0;
  }

  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["degree"] = n1;
  doc["first_type"] = type_string(ct1);
  doc["second_type"] = type_string(ct2);
  doc["class_count"] = classes.size();
  if (formula)
    doc["formula_count"] = *formula;
  else
    doc["formula_count"] = nullptr;
  doc["classes"] = json::array();
  for (const PairClass& cls : classes)
    doc["classes"].push_back({{"first", to_cycles(cls.pi)},
                              {"second", to_cycles(cls.representative)},
                              {"orbit_size", cls.orbit_size},
                              {"product_trace", cls.product_trace}});
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_trace_table(bool pretty) {
  const std::vector<std::pair<CycleType, CycleType>> combos = {
      {{5}, {5}}, {{5}, {3, 2}}, {{3, 2}, {3, 2}}};
  json rows = json::array();
  for (const auto& [ct1, ct2] : combos) {
    std::set<int> traces = trace_product_set(ct1, ct2);
    std::string display;
    for (int t : traces) display += (display.empty() ? "" : ", ") + std::to_string(t);
    rows.push_back({{"first_type", type_string(ct1)},
                    {"second_type", type_string(ct2)},
                    {"traces", traces},
                    {"display", display}});
  }
  if (pretty) {
    std::printf("%-8s %-8s %s\n", "first", "second", "product traces");
    for (const auto& row : rows)
      std::printf("%-8s %-8s %s\n", row["first_type"].get<std::string>().c_str(),
                  row["second_type"].get<std::string>().c_str(),
                  row["display"].get<std::string>().c_str());
    return 0;
  }
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["rows"] = rows;
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_check_polynomial(const std::string& coeff_string, bool pretty) {
  std::vector<double> v = parse_reals(coeff_string);
  if (v.size() != 3 && v.size() != 4)
    throw std::invalid_argument("--coeffs needs k2,k3,k4 or k2,k3,k4,k5");
  CharPolyCoeffs c;
  c.k1 = 0;
  c.k2 = v[0];
  c.k3 = v[1];
  c.k4 = v[2];
  bool inferred = v.size() == 3;
  c.k5 = inferred ? -(1 + c.k2 + c.k3 + c.k4) : v[3];
  NecessityReport rep = check_necessary(c);

  if (pretty) {
    std::printf("k = (%g, %g, %g, %g, %g)%s\n", c.k1, c.k2, c.k3, c.k4, c.k5,
                inferred ? "  [k5 from the row-sum identity]" : "");
    std::printf("verdict: %s\n", rep.passes ? "not ruled out" : "rejected");
    const char* names[3] = {"i", "ii", "iii"};
    for (int b = 0; b < 3; ++b)
      std::printf("branch (%s): %s%s%s\n", names[b], rep.branch[b].holds ? "holds" : "fails",
                  rep.branch[b].sub_case.empty() ? "" : " via ", rep.branch[b].sub_case.c_str());
    if (rep.c_star) std::printf("c_* = %.12g\n", *rep.c_star);
    for (const auto& note : rep.notes) std::printf("note: %s\n", note.c_str());
    return rep.passes ? 0 : 1;
  }

  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["coefficients"] = {{"k1", c.k1}, {"k2", c.k2}, {"k3", c.k3}, {"k4", c.k4}, {"k5", c.k5}};
  doc["k5_inferred"] = inferred;
  doc["passes"] = rep.passes;
  doc["condition_a"] = rep.condition_a;
  doc["condition_b"] = rep.condition_b;
  doc["condition_d"] = rep.condition_d;
  doc["branches"] = json::array();
  const char* names[3] = {"i", "ii", "iii"};
  for (int b = 0; b < 3; ++b)
    doc["branches"].push_back(
        {{"name", names[b]}, {"holds", rep.branch[b].holds}, {"sub_case", rep.branch[b].sub_case}});
  if (rep.c_star)
    doc["c_star"] = *rep.c_star;
  else
    doc["c_star"] = nullptr;
  doc["notes"] = rep.notes;
  std::cout << doc.dump(2) << "\n";
  return rep.passes ? 0 : 1;
}

int cmd_powers(int k, bool pretty) {
  ZeroPowerCensus census = census_zero_power(k);
  if (pretty) {
    std::printf("maximal supports with vanishing trace of the %d-th power: %zu\n", k,
                census.maximal.size());
    for (auto [size, count] : census.size_histogram)
      std::printf("  size %d: %d supports\n", size, count);
    std::string types;
    for (const CycleType& ct : census.member_types) types += " (" + type_string(ct) + ")";
    std::printf("member cycle types:%s\n", types.c_str());
    std::printf("largest supports all related by relabeling: %s\n",
                census.largest_all_conjugate ? "yes" : "no");
    return 0;
  }
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["k"] = k;
  doc["maximal_count"] = census.maximal.size();
  doc["size_histogram"] = json::object();
  for (auto [size, count] : census.size_histogram)
    doc["size_histogram"][std::to_string(size)] = count;
  doc["member_types"] = json::array();
  for (const CycleType& ct : census.member_types) doc["member_types"].push_back(type_string(ct));
  doc["largest_all_conjugate"] = census.largest_all_conjugate;
  doc["maximal_supports"] = json::array();
  for (const ZeroPowerSupport& s : census.maximal) {
    json sup = json::array();
    for (const Perm& p : s.support) sup.push_back(to_cycles(p));
    doc["maximal_supports"].push_back(sup);
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_sample_region(SamplerConfig cfg, const std::string& config_path,
                      const std::string& write_config_path, bool pretty) {
  if (!config_path.empty()) apply_config_file(config_path, cfg);
  validate_config(cfg);

  if (!write_config_path.empty()) {
    write_file(write_config_path, config_file_form(cfg));
    if (pretty) std::printf("wrote %s\n", write_config_path.c_str());
    return 0;
  }

  const char* outdir = std::getenv("OMEGA5_OUTPUT_DIR");
  if (outdir && *outdir && !cfg.output_path.empty() &&
      std::filesystem::path(cfg.output_path).is_relative())
    cfg.output_path = (std::filesystem::path(outdir) / cfg.output_path).string();

  auto points = sample_region(cfg);
  std::string csv = region_csv(points);

  if (cfg.output_path.empty()) {
    if (cfg.plot) throw std::invalid_argument("--plot needs an output path");
    std::cout << csv;
    return 0;
  }

  EnvelopeComparison env = compare_envelopes(points, 72);
  json mirror;
  mirror["schema_version"] = kSchemaVersion;
  mirror["config"] = {{"grid_step", cfg.grid_step},       {"random_samples", cfg.random_samples},
                      {"support_size", cfg.support_size}, {"seed", cfg.seed},
                      {"plot", cfg.plot},                 {"include_pairs", cfg.include_pairs}};
  mirror["points"] = json::array();
  for (const RegionPoint& p : points)
    mirror["points"].push_back(
        {{"re", p.re}, {"im", p.im}, {"source", p.source}, {"parameter", p.parameter}});
  mirror["envelope"] = {
      {"bins", env.bins}, {"pair_max", env.pair_max}, {"random_max", env.random_max}};

  std::string json_path = with_extension(cfg.output_path, ".json");
  write_file(cfg.output_path, csv);
  write_file(json_path, mirror.dump(2) + "\n");
  std::string svg_path;
  if (cfg.plot) {
    svg_path = with_extension(cfg.output_path, ".svg");
    write_file(svg_path, region_svg(points));
  }

  int bins_with_both = 0;
  double max_gap = 0;  // how far the random cloud reaches beyond the pair curves, per bin
  for (int b = 0; b < env.bins; ++b)
    if (env.pair_max[b] >= 0 && env.random_max[b] >= 0) {
      ++bins_with_both;
      max_gap = std::max(max_gap, env.random_max[b] - env.pair_max[b]);
    }

  if (pretty) {
    std::printf("%zu points -> %s (json: %s%s%s)\n", points.size(), cfg.output_path.c_str(),
                json_path.c_str(), svg_path.empty() ? "" : ", svg: ",
                svg_path.empty() ? "" : svg_path.c_str());
    std::printf("envelope: %d/%d bins populated by both clouds; random exceeds pair curves by at "
                "most %.6g\n",
                bins_with_both, env.bins, max_gap);
    return 0;
  }
  json summary;
  summary["schema_version"] = kSchemaVersion;
  summary["point_count"] = points.size();
  summary["csv"] = cfg.output_path;
  summary["json"] = json_path;
  if (svg_path.empty())
    summary["svg"] = nullptr;
  else
    summary["svg"] = svg_path;
  summary["envelope_bins_with_both"] = bins_with_both;
  summary["max_random_excess"] = max_gap;
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int cmd_verify(bool pretty) {
  auto results = run_acceptance_checks();
  int failures = 0;
  for (const auto& r : results)
    if (!r.pass) ++failures;
  if (pretty) {
    for (const auto& r : results)
      std::printf("[%2d/13] %s — %s: %s\n", r.index, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                  r.detail.c_str());
    std::printf("%d of 13 criteria failed\n", failures);
    return failures;
  }
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["failures"] = failures;
  doc["results"] = json::array();
  for (const auto& r : results)
    doc["results"].push_back(
        {{"index", r.index}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  std::cout << doc.dump(2) << "\n";
  return failures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trace-zero doubly stochastic 5x5 matrices: permutation-pair classes, "
               "zero-trace power supports, characteristic-coefficient screening, and "
               "eigenvalue-region sampling.  JSON output (schema version 1) unless --pretty."};
  app.require_subcommand(1);

  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable tables instead of JSON");

  auto* enumerate = app.add_subcommand(
      "enumerate-classes", "classes of permutation pairs under simultaneous relabeling");
  std::string ct1_str, ct2_str;
  enumerate->add_option("first", ct1_str, "cycle type of the first permutation, e.g. 5 or 3+2")
      ->required();
  enumerate->add_option("second", ct2_str, "cycle type of the second permutation")->required();

  auto* trace_table = app.add_subcommand(
      "trace-table", "product traces attained by each degree-5 derangement type combination");
  (void)trace_table;

  auto* check = app.add_subcommand(
      "check-polynomial",
      "screen characteristic coefficients against the necessary conditions; exit 0 when not "
      "ruled out, 1 when rejected");
  std::string coeff_string;
  check->add_option("--coeffs", coeff_string, "k2,k3,k4 or k2,k3,k4,k5 (k5 defaults so the "
                                              "coefficients sum to -1)")
      ->required();

  auto* powers = app.add_subcommand(
      "powers", "maximal supports whose mixtures have trace-zero k-th power");
  int k = 2;
  powers->add_option("k", k, "power to test, 2..5")->required()->check(CLI::Range(2, 5));

  auto* sample = app.add_subcommand(
      "sample-region", "sample the eigenvalue region: pair curves, random mixtures, hull "
                       "vertices; CSV plus JSON mirror, SVG with --plot.  A config file "
                       "(key = value lines) overrides flags; relative output paths resolve "
                       "under $OMEGA5_OUTPUT_DIR when set");
  SamplerConfig cfg;
  std::string config_path, write_config_path;
  bool no_pairs = false;
  sample->add_option("--grid-step", cfg.grid_step, "pair-curve parameter spacing, in (0, 0.1]")
      ->capture_default_str();
  sample->add_option("--random-samples", cfg.random_samples, "number of random mixtures")
      ->capture_default_str();
  sample->add_option("--support-size", cfg.support_size, "support size of random mixtures, 1..44")
      ->capture_default_str();
  sample->add_option("--seed", cfg.seed, "random generator seed")->capture_default_str();
  sample->add_option("--output", cfg.output_path, "CSV destination; stdout when omitted");
  sample->add_flag("--plot", cfg.plot, "also write an SVG next to the CSV");
  sample->add_flag("--no-pairs", no_pairs, "skip the representative pair curves");
  sample->add_option("--config", config_path, "key = value config file overriding flags");
  sample->add_option("--write-config", write_config_path,
                     "write the effective config to this path and exit");

  auto* verify = app.add_subcommand(
      "verify", "run the full acceptance suite; exit code = number of failed criteria");

  // global flags like --pretty may appear after the subcommand name
  for (auto* sub : {enumerate, trace_table, check, powers, sample, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(enumerate)) return cmd_enumerate_classes(ct1_str, ct2_str, pretty);
    if (app.got_subcommand(trace_table)) return cmd_trace_table(pretty);
    if (app.got_subcommand(check)) return cmd_check_polynomial(coeff_string, pretty);
    if (app.got_subcommand(powers)) return cmd_powers(k, pretty);
    if (app.got_subcommand(sample)) {
      cfg.include_pairs = !no_pairs;
      return cmd_sample_region(cfg, config_path, write_config_path, pretty);
    }
    if (app.got_subcommand(verify)) return cmd_verify(pretty);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

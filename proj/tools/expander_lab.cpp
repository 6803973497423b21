// expander_lab: one binary, one subcommand per experiment.
//
// Exit codes: 0 ok, 1 internal error, 2 configuration error, 3 budget
// exceeded, 4 certification failure, 5 solver non-convergence.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "expander/baseline.hpp"
#include "expander/bsgs.hpp"
#include "expander/characters.hpp"
#include "expander/construction.hpp"
#include "expander/eigensolver.hpp"
#include "expander/error.hpp"
#include "expander/expansion.hpp"
#include "expander/graph.hpp"
#include "expander/json_io.hpp"
#include "expander/kazhdan.hpp"
#include "expander/walks.hpp"

namespace fs = std::filesystem;
using namespace expander;

namespace {

constexpr const char* tool_version = "0.1.0";

struct ConfigError : Error {
  using Error::Error;
};

Json default_config()
{
  return Json{
      // local group H = SL_m(F_p) and the cube
      {"p", 2},
      {"m", 3},
      {"modulus", Json::array()},
      {"enumeration", "nonzero-vectors"},
      {"style", "elementary"},
      {"K", 0}, // 0: derived from the local group; otherwise must agree
      {"d", 2},
      {"family", "F_N"},
      {"family_file", ""},
      {"n", 0}, // padding target for F_n / F_tilde_n; 0 means N
      {"overlap", 0},
      {"odd_element", "transposition"},
      {"c_samples", 12},
      {"drop_until_intransitive", false},
      // graphs and solvers
      {"graph", "schreier-points"},
      {"r", 1},
      {"solver", "automatic"},
      {"tol", 1e-10},
      {"max_iterations", 20000},
      {"krylov_dim", 120},
      {"dense_cutoff", 4000},
      {"probes", 20},
      {"power", 8},
      // budgets
      {"max_vertices", 1u << 21},
      {"max_cayley_order", 1u << 17},
      {"point_budget", 1u << 20},
      // seeds and workers
      {"seed", 0},
      {"threads", 1},
      // Kazhdan numerics on a small group given by cycle strings
      {"generators", Json::array()},
      {"degree", 0},
      {"kazhdan_restarts", 16},
      // characters
      {"chars_n", 8},
      {"roichman_q", 0.9},
      {"roichman_c", 0.0}, // 0: scan with the fitted value
      {"support_floor", -1}, // -1: n / 2
      {"lambda1_cap", -1},   // -1: n - ceil(n^(1/4))
      // walks; transitivity is probed at desk scale, t <= 12 and r = 2
      {"walk_length", 0}, // 0: ceil(8 n ln n)
      {"samples", 10000},
      {"steps", 200},
      {"tv_threshold", 0.01},
      {"start", 0},
      {"transitivity_r", 2},
      {"transitivity_t", Json::array({1, 2, 4, 8, 12})},
      {"pairs", 1000},
      // random Cayley baseline
      {"baseline_group", "cyclic:1000"},
      {"baseline_set_size", 2},
      {"baseline_trials", 20},
      {"baseline_all_elements", false},
  };
}

bool same_kind(const Json& want, const Json& got)
{
  if (want.is_number_float())
    return got.is_number();
  if (want.is_number_integer() || want.is_number_unsigned())
    return got.is_number();
  if (want.is_array())
    return got.is_array();
  return want.type() == got.type();
}

Json load_config(const std::string& path)
{
  Json cfg = default_config();
  if (path.empty())
    return cfg;
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot read config file '" + path + "'");
  Json user;
  try {
    in >> user;
  } catch (const Json::exception& e) {
    throw ConfigError("config file is not valid JSON: " + std::string(e.what()));
  }
  if (!user.is_object())
    throw ConfigError("config must be a flat JSON object");
  for (auto it = user.begin(); it != user.end(); ++it) {
    if (!cfg.contains(it.key()))
      throw ConfigError("unknown config key '" + it.key() + "'");
    if (!same_kind(cfg[it.key()], it.value()))
      throw ConfigError("config key '" + it.key() + "' has the wrong type");
    if (it.value().is_number_float() && !cfg[it.key()].is_number_float())
      throw ConfigError("config key '" + it.key() + "' must be an integer");
    cfg[it.key()] = it.value();
  }
  return cfg;
}

template <class T>
T get(const Json& cfg, const char* key)
{
  try {
    return cfg.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ConfigError(std::string("config key '") + key + "' has an unusable value");
  }
}

std::uint32_t get_u32(const Json& cfg, const char* key)
{
  const auto v = get<std::int64_t>(cfg, key);
  if (v < 0 || v > 0xffffffffLL)
    throw ConfigError(std::string("config key '") + key + "' is out of range");
  return static_cast<std::uint32_t>(v);
}

class Lab {
public:
  Lab(Json cfg, std::optional<fs::path> out, std::string format)
      : cfg_(std::move(cfg)), out_(std::move(out)), format_(std::move(format))
  {
    if (out_)
      fs::create_directories(*out_);
  }

  int run(const std::string& command)
  {
    const auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    if (command == "construct")
      code = construct();
    else if (command == "certify")
      code = certify();
    else if (command == "spectrum")
      code = spectrum();
    else if (command == "expansion")
      code = expansion();
    else if (command == "kazhdan")
      code = kazhdan();
    else if (command == "chars")
      code = chars();
    else if (command == "walk")
      code = walk();
    else if (command == "baseline")
      code = baseline();
    else if (command == "report")
      code = report();
    else
      throw ConfigError("unknown subcommand '" + command + "'");
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // Wall-clock lives outside the artifacts so they stay byte-stable.
    if (out_) {
      std::ofstream log(*out_ / "run.log", std::ios::app);
      log << command << " tool_version=" << tool_version << " seed=" << seed()
          << " exit=" << code << " wall_seconds=" << secs << "\n";
    }
    std::cerr << "[expander_lab] " << command << " finished in " << secs << " s\n";
    return code;
  }

private:
  Json cfg_;
  std::optional<fs::path> out_;
  std::string format_;
  std::optional<Construction> construction_;

  std::uint64_t seed() const { return get<std::uint64_t>(cfg_, "seed"); }

  void require_format(std::initializer_list<const char*> allowed, const std::string& command) const
  {
    for (const char* f : allowed)
      if (format_ == f)
        return;
    throw ConfigError("format '" + format_ + "' is not supported by '" + command + "'");
  }

  Json envelope(const std::string& command, Json result) const
  {
    return Json{{"schema_version", schema_version},
                {"tool", "expander_lab"},
                {"tool_version", tool_version},
                {"command", command},
                {"seed", seed()},
                {"config", cfg_},
                {"result", std::move(result)}};
  }

  void emit(const std::string& name, const std::string& content) const
  {
    if (out_) {
      std::ofstream f(*out_ / name, std::ios::binary);
      f << content;
      if (!f)
        throw Error("cannot write " + (*out_ / name).string());
      std::cerr << "[expander_lab] wrote " << (*out_ / name).string() << "\n";
    } else {
      std::cout << content;
    }
  }

  void emit_json(const std::string& command, Json result) const
  {
    emit(command + ".json", envelope(command, std::move(result)).dump(2) + "\n");
  }

  LocalGroupSpec local_spec() const
  {
    LocalGroupSpec s;
    s.p = get_u32(cfg_, "p");
    s.m = get_u32(cfg_, "m");
    s.modulus = get<std::vector<std::uint32_t>>(cfg_, "modulus");
    const auto kind = get<std::string>(cfg_, "enumeration");
    if (kind == "nonzero-vectors")
      s.kind = EnumerationKind::nonzero_vectors;
    else if (kind == "projective-plane")
      s.kind = EnumerationKind::projective_plane;
    else
      throw ConfigError("enumeration must be nonzero-vectors or projective-plane");
    try {
      s.style = parse_generator_style(get<std::string>(cfg_, "style"));
    } catch (const InvalidArgument& e) {
      throw ConfigError(e.what());
    }
    return s;
  }

  const Construction& construction()
  {
    if (!construction_) {
      PowerOptions po;
      po.seed = seed();
      construction_ = construct_family(local_spec(), get_u32(cfg_, "d"), po,
                                       get<std::uint64_t>(cfg_, "point_budget"));
      const auto K = get_u32(cfg_, "K");
      if (K != 0 && K != construction_->cube.side())
        throw ConfigError("config K = " + std::to_string(K) + " but the local group acts on " +
                          std::to_string(construction_->cube.side()) + " points");
    }
    return *construction_;
  }

  GeneratingFamily family()
  {
    GeneratingFamily f;
    const auto file = get<std::string>(cfg_, "family_file");
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in)
        throw ConfigError("cannot read family file '" + file + "'");
      Json j;
      try {
        in >> j;
      } catch (const Json::exception& e) {
        throw ConfigError("family file is not valid JSON: " + std::string(e.what()));
      }
      if (j.contains("result") && j["result"].contains("family"))
        j = j["result"]["family"];
      f = family_from_json(j);
    } else {
      const auto kind = parse_family_kind(get<std::string>(cfg_, "family"));
      const Construction& c = construction();
      switch (kind) {
      case FamilyKind::F_N: f = c.family; break;
      case FamilyKind::F_n:
      case FamilyKind::F_tilde_n: {
        std::uint32_t n = get_u32(cfg_, "n");
        if (n == 0)
          n = c.family.degree;
        f = pad_to_all_n(n, c.family, get_u32(cfg_, "overlap"));
        if (kind == FamilyKind::F_tilde_n) {
          const auto odd = get<std::string>(cfg_, "odd_element");
          if (odd != "transposition" && odd != "involution")
            throw ConfigError("odd_element must be transposition or involution");
          f = sym_variant(f, odd == "transposition" ? OddElement::transposition : OddElement::involution);
        }
        break;
      }
      case FamilyKind::C: f = enumerate_C_sample(c.cube, c.local, get_u32(cfg_, "c_samples"), seed()); break;
      case FamilyKind::Gamma_bar: {
        f.kind = FamilyKind::Gamma_bar;
        f.degree = c.cube.size();
        f.params = c.family.params;
        for (std::uint32_t axis = 0; axis < c.cube.dim(); ++axis)
          for (std::uint32_t copy = 0; copy < c.cube.copies(); ++copy) {
            std::vector<std::uint32_t> e(c.cube.copies(), 0);
            e[copy] = 1;
            f.elements.push_back(abelian_family(c.cube, c.local, axis, e));
            f.labels.push_back({axis, "cycle", copy, std::nullopt});
          }
        break;
      }
      case FamilyKind::custom: throw ConfigError("family 'custom' needs family_file");
      }
    }
    if (get<bool>(cfg_, "drop_until_intransitive")) {
      while (!f.elements.empty() && is_transitive(f.elements)) {
        f.elements.pop_back();
        if (!f.labels.empty())
          f.labels.pop_back();
      }
      if (f.elements.empty())
        throw ConfigError("family became empty while dropping generators");
    }
    return f;
  }

  GraphBudget budget() const
  {
    GraphBudget b;
    b.max_vertices = get<std::uint64_t>(cfg_, "max_vertices");
    b.max_cayley_order = get<std::uint64_t>(cfg_, "max_cayley_order");
    return b;
  }

  SolverOptions solver() const
  {
    SolverOptions s;
    s.method = parse_solver_method(get<std::string>(cfg_, "solver"));
    s.tol = get<double>(cfg_, "tol");
    s.max_iterations = get_u32(cfg_, "max_iterations");
    s.krylov_dim = get_u32(cfg_, "krylov_dim");
    s.dense_cutoff = get_u32(cfg_, "dense_cutoff");
    s.seed = seed();
    return s;
  }

  ActionGraph graph(const GeneratingFamily& f) const
  {
    return build_action_graph(f.elements, parse_graph_kind(get<std::string>(cfg_, "graph")),
                              get_u32(cfg_, "r"), budget());
  }

  static std::string order_formula(const FamilyCertificate& c, std::uint32_t degree)
  {
    if (c.order == factorial(degree) / 2 && degree >= 2)
      return std::to_string(degree) + "!/2";
    if (c.order == factorial(degree))
      return std::to_string(degree) + "!";
    return to_decimal(c.order);
  }

  Json certificate_json(const GeneratingFamily& f, bool& ok) const
  {
    const FamilyCertificate c = certify_family(f, seed());
    ok = c.ok;
    Json j = to_json(c);
    j["degree"] = f.degree;
    j["family_size"] = f.elements.size();
    j["order_formula"] = order_formula(c, f.degree);
    Json bsgs{{"schema_version", schema_version},
              {"type", "bsgs"},
              {"degree", f.degree},
              {"base", c.base},
              {"order", to_decimal(c.order)}};
    Json strong = Json::array();
    for (const auto& s : c.strong_generators)
      strong.push_back(to_cycle_string(s));
    bsgs["strong_generators"] = std::move(strong);
    j["bsgs"] = std::move(bsgs);
    return j;
  }

  int construct()
  {
    require_format({"json"}, "construct");
    const GeneratingFamily f = family();
    Json r;
    r["family"] = to_json(f);
    if (get<std::string>(cfg_, "family_file").empty()) {
      const Construction& c = construction();
      r["power_set"] = {{"copies", c.power.copies},
                        {"size", c.power.elements.size()},
                        {"hall_certified", c.power.hall_certified},
                        {"bsgs_order", c.power.bsgs_order ? Json(to_decimal(*c.power.bsgs_order))
                                                          : Json(nullptr)}};
      r["local_group"] = {{"K", c.local.degree()}, {"order", to_decimal(c.local.order)}};
    }
    emit_json("construct", std::move(r));
    return 0;
  }

  int certify()
  {
    require_format({"json"}, "certify");
    bool ok = false;
    Json r = certificate_json(family(), ok);
    emit_json("certify", std::move(r));
    if (!ok)
      throw CertificationFailure("family does not generate the expected group");
    return 0;
  }

  int spectrum()
  {
    require_format({"json", "csv", "dot", "mm"}, "spectrum");
    const GeneratingFamily f = family();
    const ActionGraph g = graph(f);
    if (format_ == "dot") {
      emit("graph.dot", to_dot(g));
      return 0;
    }
    if (format_ == "mm") {
      emit("graph.mtx", to_matrix_market(g));
      return 0;
    }
    const SpectralReport s = second_eigenvalue(g, solver());
    if (format_ == "csv") {
      std::ostringstream os;
      os.precision(17);
      os << "k,lambda\n";
      for (std::size_t k = 0; k < s.top.size(); ++k)
        os << k + 1 << "," << s.top[k] << "\n";
      emit("spectrum.csv", os.str());
      return 0;
    }
    Json r;
    r["graph"] = {{"kind", to_string(g.kind())}, {"vertices", g.vertices()}, {"degree", g.degree()},
                  {"connected", g.is_connected()}};
    r["spectrum"] = to_json(s);
    const auto probes = get_u32(cfg_, "probes");
    if (probes > 0) {
      const ProbeReport p = delta_power_probe(g, get_u32(cfg_, "power"), probes, seed());
      r["probe"] = to_json(p);
      r["probe_bound"] = std::pow(s.lambda_star + s.tol, p.power);
    }
    emit_json("spectrum", std::move(r));
    return 0;
  }

  int expansion()
  {
    require_format({"json"}, "expansion");
    const ActionGraph g = graph(family());
    const SpectralReport s = second_eigenvalue(g, solver());
    Json r;
    r["graph"] = {{"kind", to_string(g.kind())}, {"vertices", g.vertices()}, {"degree", g.degree()}};
    r["cheeger"] = to_json(cheeger_interval(s, g.degree()));
    if (g.vertices() <= brute_force_vertex_cap)
      r["exact"] = to_json(brute_force_expansion(g));
    r["lambda2"] = s.lambda2;
    emit_json("expansion", std::move(r));
    return 0;
  }

  int kazhdan()
  {
    require_format({"json"}, "kazhdan");
    std::vector<Permutation> gens;
    const auto texts = get<std::vector<std::string>>(cfg_, "generators");
    if (!texts.empty()) {
      const auto degree = get_u32(cfg_, "degree");
      if (degree == 0)
        throw ConfigError("kazhdan with explicit generators needs 'degree'");
      for (const auto& t : texts)
        gens.push_back(parse_permutation(t, degree));
    } else {
      gens = family().elements;
    }
    KazhdanOptions o;
    o.seed = seed();
    o.restarts = get_u32(cfg_, "kazhdan_restarts");
    const KazhdanReport k = kazhdan_numeric(gens, o);
    Json r = to_json(k);
    const ActionGraph cay = build_action_graph(gens, GraphKind::cayley, 1, budget());
    if (cay.vertices() <= brute_force_vertex_cap && cay.vertices() >= 2)
      r["cayley_expansion"] = to_json(brute_force_expansion(cay));
    emit_json("kazhdan", std::move(r));
    return 0;
  }

  int chars()
  {
    require_format({"json", "csv"}, "chars");
    const auto n = get_u32(cfg_, "chars_n");
    if (format_ == "csv") {
      emit("chars.csv", character_table_csv(character_table(n)));
      return 0;
    }
    emit_json("chars", scan_json(n));
    return 0;
  }

  Json scan_json(std::uint32_t n) const
  {
    const auto floor_cfg = get<std::int64_t>(cfg_, "support_floor");
    const auto cap_cfg = get<std::int64_t>(cfg_, "lambda1_cap");
    const std::uint32_t floor = floor_cfg < 0 ? n / 2 : static_cast<std::uint32_t>(floor_cfg);
    std::optional<std::uint32_t> cap;
    if (cap_cfg >= 0)
      cap = static_cast<std::uint32_t>(cap_cfg);
    const RoichmanReport rr =
        roichman_bound_scan(n, get<double>(cfg_, "roichman_c"), get<double>(cfg_, "roichman_q"), cap, floor);
    Json j = to_json(rr);
    const CharacterTable t = character_table(n);
    j["table"] = {{"irreps", t.irreps.size()},
                  {"rows_orthogonal", rows_orthogonal(t)},
                  {"columns_orthogonal", columns_orthogonal(t)}};
    return j;
  }

  Json walks_json(const GeneratingFamily& f)
  {
    const MixingReport m = point_mixing_exact(f.elements, get_u32(cfg_, "steps"), get_u32(cfg_, "start"),
                                              get<double>(cfg_, "tv_threshold"), solver());
    std::uint64_t len = get<std::uint64_t>(cfg_, "walk_length");
    if (len == 0)
      len = default_word_length(f.degree);
    const CycleStatistics cs = cycle_statistics(f.elements, len, get_u32(cfg_, "samples"), seed());
    Json j;
    j["mixing"] = to_json(m);
    j["cycles"] = to_json(cs);
    if (f.params.K > 0 && f.params.d > 0) {
      const Construction& c = construction();
      j["transitivity"] =
          to_json(transitivity_probe(c.cube, c.local, get_u32(cfg_, "transitivity_r"),
                                     get<std::vector<std::uint32_t>>(cfg_, "transitivity_t"),
                                     get_u32(cfg_, "pairs"), seed()));
    }
    return j;
  }

  int walk()
  {
    require_format({"json", "csv"}, "walk");
    const GeneratingFamily f = family();
    if (format_ == "csv") {
      const MixingReport m = point_mixing_exact(f.elements, get_u32(cfg_, "steps"), get_u32(cfg_, "start"),
                                                get<double>(cfg_, "tv_threshold"), solver());
      std::ostringstream os;
      os.precision(17);
      os << "t,tv,prediction\n";
      for (std::size_t t = 0; t < m.tv.size(); ++t)
        os << t << "," << m.tv[t] << "," << m.prediction[t] << "\n";
      emit("walk.csv", os.str());
      return 0;
    }
    emit_json("walk", walks_json(f));
    return 0;
  }

  BaselineReport baseline_report() const
  {
    BaselineOptions o;
    o.set_size = get_u32(cfg_, "baseline_set_size");
    o.trials = get_u32(cfg_, "baseline_trials");
    o.all_elements = get<bool>(cfg_, "baseline_all_elements");
    o.seed = seed();
    o.solver = solver();
    o.budget = budget();
    return random_cayley_baseline(get<std::string>(cfg_, "baseline_group"), o);
  }

  int baseline()
  {
    require_format({"json", "csv"}, "baseline");
    const BaselineReport b = baseline_report();
    if (format_ == "csv") {
      std::ostringstream os;
      os.precision(17);
      os << "trial,lambda2,gap\n";
      for (std::size_t t = 0; t < b.gaps.size(); ++t)
        os << t << "," << b.lambda2[t] << "," << b.gaps[t] << "\n";
      emit("baseline.csv", os.str());
      return 0;
    }
    emit_json("baseline", to_json(b));
    return 0;
  }

  int report()
  {
    require_format({"json", "csv"}, "report");
    const GeneratingFamily f = family();
    bool ok = false;
    Json r;
    r["certificate"] = certificate_json(f, ok);
    r["certificate"].erase("bsgs");
    const ActionGraph g = graph(f);
    const SpectralReport s = second_eigenvalue(g, solver());
    r["spectrum"] = to_json(s);
    r["cheeger"] = to_json(cheeger_interval(s, g.degree()));
    r["characters"] = scan_json(std::min<std::uint32_t>(get_u32(cfg_, "chars_n"), 14));
    r["walks"] = walks_json(f);
    const BaselineReport b = baseline_report();
    r["baseline"] = to_json(b);
    r["contrast"] = {{"construction_gap", s.gap},
                     {"baseline_median_gap", b.median_gap},
                     {"ratio", b.median_gap > 0 ? Json(s.gap / b.median_gap) : Json(nullptr)}};

    std::ostringstream os;
    os.precision(17);
    os << "key,value\n";
    os << "degree," << f.degree << "\n";
    os << "family_size," << f.elements.size() << "\n";
    os << "order," << r["certificate"]["order_formula"].get<std::string>() << "\n";
    os << "certified," << (ok ? "true" : "false") << "\n";
    os << "lambda2," << s.lambda2 << "\n";
    os << "lambda_star," << s.lambda_star << "\n";
    os << "gap," << s.gap << "\n";
    os << "baseline_median_gap," << b.median_gap << "\n";
    const auto& m = r["walks"]["mixing"];
    os << "tv_first_below," << (m["first_below"].is_null() ? std::string("none") : m["first_below"].dump())
       << "\n";
    os << "fixed_point_mean," << r["walks"]["cycles"]["fixed_mean"].get<double>() << "\n";
    emit("report.csv", os.str());
    emit_json("report", std::move(r));
    if (!ok)
      throw CertificationFailure("family does not generate the expected group");
    return 0;
  }
};

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Explicit expanding generating sets for alternating and symmetric groups"};
  app.require_subcommand(1, 1);
  std::string config_path, out_dir, format = "json";
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  app.add_option("--config", config_path, "flat JSON config file");
  app.add_option("--out", out_dir, "output directory (stdout when omitted)");
  app.add_option("--seed", seed, "base seed (overrides the config)");
  app.add_option("--threads", threads, "worker cap (overrides the config)");
  app.add_option("--format", format, "artifact format")->check(CLI::IsMember({"json", "csv", "dot", "mm"}));
  app.fallthrough();
  for (const char* name : {"construct", "certify", "spectrum", "expansion", "kazhdan", "chars", "walk",
                           "baseline", "report"})
    app.add_subcommand(name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Json cfg = load_config(config_path);
    if (seed)
      cfg["seed"] = *seed;
    if (threads)
      cfg["threads"] = *threads;
    set_thread_count(get_u32(cfg, "threads"));
    std::optional<fs::path> out;
    if (!out_dir.empty())
      out = fs::path(out_dir);
    Lab lab(std::move(cfg), out, format);
    return lab.run(app.get_subcommands().front()->get_name());
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const CertificationFailure& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return 4;
  } catch (const ConvergenceFailure& e) {
    std::cerr << "solver did not converge: " << e.what() << " (residual " << e.residual() << ")\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

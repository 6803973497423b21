#include "expander/json_io.hpp"

#include "expander/error.hpp"

namespace expander {

namespace {

Json with_schema(Json j)
{
  j["schema_version"] = schema_version;
  return j;
}

Json cycle_list(const std::vector<Permutation>& ps)
{
  Json a = Json::array();
  for (const auto& p : ps)
    a.push_back(to_cycle_string(p));
  return a;
}

template <class T>
T get_or(const Json& j, const char* key, T fallback)
{
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

} // namespace

Json to_json(const GeneratingFamily& f)
{
  Json j;
  j["type"] = "generating_family";
  j["kind"] = to_string(f.kind);
  j["degree"] = f.degree;
  Json p;
  p["K"] = f.params.K;
  p["d"] = f.params.d;
  p["p"] = f.params.p;
  p["m"] = f.params.m;
  p["modulus"] = f.params.modulus;
  p["enumeration"] = f.params.enumeration;
  p["style"] = f.params.style;
  p["seed"] = f.params.seed;
  p["base_degree"] = f.params.base_degree;
  p["windows"] = f.params.windows;
  j["params"] = p;
  Json elems = Json::array();
  for (std::size_t i = 0; i < f.elements.size(); ++i) {
    Json e;
    e["cycles"] = to_cycle_string(f.elements[i]);
    if (i < f.labels.size()) {
      const auto& l = f.labels[i];
      e["source"] = l.source;
      if (l.axis)
        e["axis"] = *l.axis;
      if (l.copy)
        e["copy"] = *l.copy;
      if (l.window)
        e["window"] = *l.window;
    }
    elems.push_back(std::move(e));
  }
  j["elements"] = std::move(elems);
  return with_schema(std::move(j));
}

GeneratingFamily family_from_json(const Json& j)
{
  try {
    if (j.at("schema_version").get<int>() != schema_version)
      throw InvalidArgument("unsupported family schema_version");
    GeneratingFamily f;
    f.kind = parse_family_kind(j.at("kind").get<std::string>());
    f.degree = j.at("degree").get<std::uint32_t>();
    const Json& p = j.at("params");
    f.params.K = get_or<std::uint32_t>(p, "K", 0);
    f.params.d = get_or<std::uint32_t>(p, "d", 0);
    f.params.p = get_or<std::uint32_t>(p, "p", 0);
    f.params.m = get_or<std::uint32_t>(p, "m", 0);
    f.params.modulus = get_or<std::vector<std::uint32_t>>(p, "modulus", {});
    f.params.enumeration = get_or<std::string>(p, "enumeration", "");
    f.params.style = get_or<std::string>(p, "style", "");
    f.params.seed = get_or<std::uint64_t>(p, "seed", 0);
    f.params.base_degree = get_or<std::uint32_t>(p, "base_degree", 0);
    f.params.windows = get_or<std::vector<std::uint32_t>>(p, "windows", {});
    for (const auto& e : j.at("elements")) {
      f.elements.push_back(parse_cycles(e.at("cycles").get<std::string>(), f.degree));
      ElementLabel l;
      l.source = get_or<std::string>(e, "source", "");
      if (e.contains("axis"))
        l.axis = e["axis"].get<std::uint32_t>();
      if (e.contains("copy"))
        l.copy = e["copy"].get<std::uint64_t>();
      if (e.contains("window"))
        l.window = e["window"].get<std::uint32_t>();
      f.labels.push_back(std::move(l));
    }
    return f;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed family document: ") + e.what());
  }
}

Json to_json(const Bsgs& b)
{
  Json j;
  j["type"] = "bsgs";
  j["degree"] = b.degree();
  j["base"] = b.base();
  j["strong_generators"] = cycle_list(b.strong_generators());
  j["order"] = to_decimal(b.order());
  return with_schema(std::move(j));
}

Bsgs bsgs_from_json(const Json& j)
{
  try {
    if (j.at("schema_version").get<int>() != schema_version)
      throw InvalidArgument("unsupported bsgs schema_version");
    const auto degree = j.at("degree").get<std::uint32_t>();
    std::vector<Permutation> gens;
    for (const auto& s : j.at("strong_generators"))
      gens.push_back(parse_cycles(s.get<std::string>(), degree));
    Bsgs b = Bsgs::from_base_and_generators(degree, j.at("base").get<std::vector<Point>>(), gens);
    if (j.contains("order") && to_decimal(b.order()) != j["order"].get<std::string>())
      throw CertificationFailure("stored order does not match the rebuilt chain");
    return b;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed bsgs document: ") + e.what());
  }
}

Json to_json(const FamilyCertificate& c)
{
  Json j;
  j["type"] = "certificate";
  j["transitive"] = c.transitive;
  j["all_even"] = c.all_even;
  j["order"] = to_decimal(c.order);
  j["expected"] = to_decimal(c.expected);
  j["ok"] = c.ok;
  j["base"] = c.base;
  j["strong_generator_count"] = c.strong_generators.size();
  return with_schema(std::move(j));
}

Json to_json(const PowerGenSet& s)
{
  Json j;
  j["type"] = "power_generating_set";
  j["copies"] = s.copies;
  j["size"] = s.elements.size();
  j["twists"] = s.twists;
  j["hall_certified"] = s.hall_certified;
  if (s.bsgs_order)
    j["bsgs_order"] = to_decimal(*s.bsgs_order);
  Json elems = Json::array();
  for (const auto& e : s.elements) {
    Json x;
    x["source"] = e.source;
    if (e.copy)
      x["copy"] = *e.copy;
    x["components"] = cycle_list(e.components);
    elems.push_back(std::move(x));
  }
  j["elements"] = std::move(elems);
  return with_schema(std::move(j));
}

Json to_json(const SpectralReport& r)
{
  Json j;
  j["type"] = "spectral_report";
  j["method"] = to_string(r.method);
  j["vertices"] = r.vertices;
  j["top"] = r.top;
  j["lambda1"] = r.lambda1;
  j["lambda2"] = r.lambda2;
  j["lambda_min"] = r.lambda_min;
  j["lambda_star"] = r.lambda_star;
  j["gap"] = r.gap;
  j["residual2"] = r.residual2;
  j["residual_min"] = r.residual_min;
  j["tol"] = r.tol;
  j["iterations"] = r.iterations;
  j["seed"] = r.seed;
  j["converged"] = r.converged;
  return with_schema(std::move(j));
}

Json to_json(const ProbeReport& r)
{
  Json j;
  j["type"] = "delta_power_probe";
  j["power"] = r.power;
  j["seed"] = r.seed;
  j["probes"] = r.probes.size();
  j["max_ratio"] = r.max_ratio;
  j["max_telescoping_excess"] = r.max_telescoping_excess;
  Json ratios = Json::array();
  for (const auto& p : r.probes)
    ratios.push_back(p.ratios);
  j["ratios"] = std::move(ratios);
  return with_schema(std::move(j));
}

Json to_json(const ExpansionReport& r)
{
  Json j;
  j["type"] = "expansion_report";
  j["exact"] = r.exact;
  if (r.exact) {
    j["epsilon"] = r.epsilon;
    j["boundary"] = r.boundary;
    j["size"] = r.size;
    j["witness"] = r.witness;
  }
  if (r.has_interval) {
    j["lower"] = r.lower;
    j["upper"] = r.upper;
  }
  return with_schema(std::move(j));
}

Json to_json(const KazhdanReport& r)
{
  Json j;
  j["type"] = "kazhdan_report";
  j["order"] = r.order;
  j["generators"] = r.generators;
  j["kazhdan"] = r.kazhdan;
  j["epsilon0_lower"] = r.kazhdan > 0.0 ? kazhdan_to_expansion(std::min(r.kazhdan, 2.0)) : 0.0;
  j["weights"] = r.weights;
  j["per_irrep_min"] = r.per_irrep_min;
  j["argmin_label"] = r.argmin_label;
  j["seed"] = r.seed;
  j["converged"] = r.converged;
  Json irreps = Json::array();
  for (const auto& e : r.irreps) {
    Json x;
    x["label"] = e.label;
    x["dim"] = e.dim;
    x["frobenius"] = e.frobenius;
    x["multiplicity"] = e.multiplicity;
    x["pure"] = e.pure;
    x["mixed"] = e.mixed;
    x["converged"] = e.converged;
    irreps.push_back(std::move(x));
  }
  j["irreps"] = std::move(irreps);
  return with_schema(std::move(j));
}

Json to_json(const BaselineReport& r)
{
  Json j;
  j["type"] = "baseline_report";
  j["descriptor"] = r.descriptor;
  j["group_order"] = r.group_order;
  j["graph"] = to_string(r.kind);
  j["vertices"] = r.vertices;
  j["set_size"] = r.set_size;
  j["seed"] = r.seed;
  j["lambda2"] = r.lambda2;
  j["gaps"] = r.gaps;
  j["converged"] = r.converged;
  j["median_gap"] = r.median_gap;
  j["min_gap"] = r.min_gap;
  j["max_gap"] = r.max_gap;
  j["mean_gap"] = r.mean_gap;
  return with_schema(std::move(j));
}

Json to_json(const RoichmanReport& r)
{
  Json j;
  j["type"] = "character_bound_scan";
  j["n"] = r.n;
  j["c"] = r.c;
  j["q"] = r.q;
  j["lambda1_cap"] = r.lambda1_cap;
  j["support_floor"] = r.support_floor;
  j["pairs_checked"] = r.pairs_checked;
  j["pairs_constraining"] = r.pairs_constraining;
  j["passes"] = r.passes;
  j["fitted_c"] = r.fitted_c ? Json(*r.fitted_c) : Json(nullptr);
  j["fitted_c_note"] = "artifact-fitted, not a constant from the literature";
  if (r.fitted_c) {
    j["binding_lambda"] = partition_string(r.binding_lambda);
    j["binding_class"] = partition_string(r.binding_type);
  }
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back({{"lambda", partition_string(x.lambda)},
                 {"class", partition_string(x.type)},
                 {"abs_normalized", x.abs_normalized},
                 {"bound", x.bound}});
  j["violations"] = std::move(v);
  return with_schema(std::move(j));
}

Json to_json(const MixingReport& r)
{
  Json j;
  j["type"] = "mixing_report";
  j["points"] = r.points;
  j["start"] = r.start;
  j["tv"] = r.tv;
  j["prediction"] = r.prediction;
  j["lambda2"] = r.lambda2;
  j["lambda_star"] = r.lambda_star;
  j["threshold"] = r.threshold;
  j["first_below"] = r.first_below ? Json(*r.first_below) : Json(nullptr);
  j["monotone"] = r.monotone;
  j["within_spectral"] = r.within_spectral;
  return with_schema(std::move(j));
}

Json to_json(const CycleStatistics& s)
{
  Json j;
  j["type"] = "cycle_statistics";
  j["degree"] = s.degree;
  j["length"] = s.length;
  j["samples"] = s.samples;
  j["seed"] = s.seed;
  j["fixed_mean"] = s.fixed_mean;
  j["fixed_variance"] = s.fixed_variance;
  j["fixed_stderr"] = s.fixed_stderr;
  j["cycles_mean"] = s.cycles_mean;
  j["cycles_stderr"] = s.cycles_stderr;
  j["reference_fixed_mean"] = s.reference_fixed_mean;
  j["reference_cycles_mean"] = s.reference_cycles_mean;
  return with_schema(std::move(j));
}

Json to_json(const TransitivityProbe& p)
{
  Json j;
  j["type"] = "transitivity_probe";
  j["r"] = p.r;
  j["t"] = p.t;
  j["kappa"] = p.kappa;
  j["pairs"] = p.pairs;
  j["seed"] = p.seed;
  j["verified"] = p.verified;
  return with_schema(std::move(j));
}

} // namespace expander

#include "gdet/report.hpp"

#include "gdet/parse.hpp"

namespace gdet {

namespace {

std::string str(const Int& v) { return v.get_str(); }

template <typename T>
std::string str(T v) {
  return std::to_string(v);
}

Json coeff_array(const CyclicPoly& p) {
  Json a = Json::array();
  for (const Int& c : p.coeffs()) a.push_back(str(c));
  return a;
}

}  // namespace

Json report_header(const std::string& kind) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

Json to_json(const GroupSpec& g) {
  Json j;
  j["family"] = to_string(g.family);
  j["n"] = str(g.n);
  j["name"] = g.name();
  j["order"] = str(g.order());
  return j;
}

Json to_json(const RingElement& a) {
  Json j;
  j["f"] = coeff_array(a.f());
  if (a.group().has_reflection()) j["g"] = coeff_array(a.g());
  j["text"] = format_element(a);
  return j;
}

Json to_json(const Witness& w) {
  Json j;
  j["group"] = to_json(w.element.group());
  j["element"] = to_json(w.element);
  j["claimed"] = str(w.claimed);
  j["anchor"] = w.anchor;
  Json params = Json::object();
  for (const auto& [k, v] : w.params) params[k] = str(v);
  j["params"] = params;
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["code"] = v.code;
  j["message"] = v.message;
  if (v.decomposition) {
    j["decomposition"] = {{"k", str(v.decomposition->k)},
                          {"ell", str(v.decomposition->ell)},
                          {"m", str(v.decomposition->m)}};
  }
  return j;
}

Json det_report(const RingElement& a, const Int& value, const std::optional<Int>& oracle) {
  Json j = report_header("det");
  j["value"] = str(value);
  j["group"] = to_json(a.group());
  j["element"] = to_json(a);
  if (oracle) j["check"] = {{"oracle", str(*oracle)}, {"agree", *oracle == value}};
  return j;
}

Json factor_report(const RingElement& a, const FactoredDeterminant& fd) {
  Json j = report_header("factor");
  j["total"] = str(fd.total);
  Json parts = Json::object();
  for (const auto& [d, v] : fd.parts) parts[str(d)] = str(v);
  j["parts"] = parts;
  j["group"] = to_json(a.group());
  j["element"] = to_json(a);
  return j;
}

Json witness_report(const Witness& w, bool verified) {
  Json j = report_header("witness");
  const Json body = to_json(w);
  for (const auto& [k, v] : body.items()) j[k] = v;
  j["verified"] = verified;
  return j;
}

Json classify_report(const Json& subject, const Int& value, const Verdict& v) {
  Json j = report_header("classify");
  for (const auto& [k, x] : subject.items()) j[k] = x;
  j["value"] = str(value);
  const Json verdict = to_json(v);
  for (const auto& [k, x] : verdict.items()) j[k] = x;
  return j;
}

Json lambda_report(const LambdaReport& r, const Witness* witness) {
  Json j = report_header("lambda");
  j["value"] = str(r.value);
  j["exact"] = r.exact;
  j["group"] = to_json(r.group);
  j["p0"] = str(r.p0);
  j["note"] = r.note;
  Json cert = Json::array();
  for (const auto& s : r.certificate) {
    cert.push_back({{"value", str(s.value)}, {"code", s.code}, {"message", s.message}});
  }
  j["certificate"] = cert;
  if (witness) j["witness"] = to_json(*witness);
  return j;
}

Json search_report(const SearchReport& r) {
  const SearchSpec& s = r.spec;
  Json j = report_header("search");
  j["group"] = to_json(s.group);
  j["mode"] = to_string(s.mode);
  j["coeff_min"] = str(r.coeff_min);
  j["coeff_max"] = str(s.coeff_bound);
  j["value_cap"] = s.value_cap ? Json(str(*s.value_cap)) : Json(nullptr);
  j["max_elements"] = s.max_elements ? Json(str(*s.max_elements)) : Json(nullptr);
  if (s.random_samples) {
    j["random_samples"] = str(*s.random_samples);
    j["seed"] = str(s.seed);
  }
  j["pruning"] = s.prune;
  j["exhausted"] = r.exhausted;
  j["elements_visited"] = str(r.elements_visited);
  j["elements_pruned"] = str(r.elements_pruned);
  j["found"] = r.found;
  if (r.found) {
    j["best_value"] = str(r.best_value);
    j["best_element"] = to_json(*r.best_element);
  }
  Json spec = Json::array();
  for (const auto& e : r.spectrum) {
    spec.push_back({{"value", str(e.value)}, {"multiplicity", str(e.multiplicity)}, {"example", to_json(e.example)}});
  }
  j["spectrum"] = spec;
  return j;
}

std::string spectrum_csv(const SearchReport& r) {
  std::string out = "value,multiplicity,example_f,example_g\n";
  for (const auto& e : r.spectrum) {
    out += str(e.value) + "," + str(e.multiplicity) + "," + format_poly(e.example.f()) + ",";
    if (e.example.group().has_reflection()) out += format_poly(e.example.g());
    out += "\n";
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gdet

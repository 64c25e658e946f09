#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "trigstrata/group_action.hpp"
#include "trigstrata/normal_forms.hpp"
#include "trigstrata/presentations.hpp"
#include "trigstrata/rational.hpp"
#include "trigstrata/trigonal_form.hpp"

namespace trigstrata {

using json = nlohmann::json;

inline json rats_to_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(rat_to_string(r));
  return a;
}

inline std::vector<Rat> rats_from_json(const json& a) {
  if (!a.is_array()) throw input_error("expected array of rationals");
  std::vector<Rat> v;
  v.reserve(a.size());
  for (const auto& e : a) {
    if (!e.is_string()) throw input_error("rationals must be strings");
    v.push_back(rat_from_string(e.get<std::string>()));
  }
  return v;
}

inline json form_to_json(const TrigonalForm& f) {
  return json{{"k", f.k},
              {"s", rat_to_string(f.s)},
              {"r", rats_to_json(f.r)},
              {"p", rats_to_json(f.p)},
              {"q", rats_to_json(f.q)}};
}

inline TrigonalForm form_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("s") || !j.contains("r") ||
      !j.contains("p") || !j.contains("q"))
    throw input_error("form JSON needs keys k, s, r, p, q");
  if (!j["k"].is_number_integer()) throw input_error("k must be an integer");
  if (!j["s"].is_string()) throw input_error("s must be a rational string");
  return make_form(j["k"].get<int>(), rat_from_string(j["s"].get<std::string>()),
                   rats_from_json(j["r"]), rats_from_json(j["p"]), rats_from_json(j["q"]));
}

inline json gelement_to_json(const GElement& g) {
  return json{{"a", rat_to_string(g.a)},
              {"a0", rat_to_string(g.a0)},
              {"b", rat_to_string(g.b)},
              {"bcoef", rats_to_json(g.bcoef)}};
}

inline GElement gelement_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("a0") || !j.contains("b") ||
      !j.contains("bcoef"))
    throw input_error("group element JSON needs keys a, a0, b, bcoef");
  for (const char* key : {"a", "a0", "b"})
    if (!j[key].is_string()) throw input_error("group element entries must be rational strings");
  std::vector<Rat> bc = rats_from_json(j["bcoef"]);
  const int k = static_cast<int>(bc.size()) - 2;
  return make_gelement(k, rat_from_string(j["a"].get<std::string>()),
                       rat_from_string(j["a0"].get<std::string>()),
                       rat_from_string(j["b"].get<std::string>()), std::move(bc));
}

inline json log_to_json(const TransformLog& log) {
  json a = json::array();
  for (const auto& st : log.steps)
    a.push_back(json{{"tag", step_tag_name(st.tag)}, {"params", rats_to_json(st.params)}});
  return a;
}

inline TransformLog log_from_json(const json& j) {
  if (!j.is_array()) throw input_error("transform log must be an array");
  TransformLog log;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("tag") || !e.contains("params"))
      throw input_error("transform step needs keys tag, params");
    log.steps.push_back({step_tag_from_name(e["tag"].get<std::string>()),
                         rats_from_json(e["params"])});
  }
  return log;
}

inline json word_to_json(const Word& w) {
  json a = json::array();
  for (int l : w.letters) a.push_back(l);
  return a;
}

inline json presentation_to_json(const Presentation& p) {
  json rels = json::array();
  for (const auto& [l, r] : p.relations) rels.push_back(json::array({word_to_json(l), word_to_json(r)}));
  return json{{"generators", p.n_generators},
              {"family", p.family_name()},
              {"conjectural", p.conjectural},
              {"relations", rels}};
}

inline json l0_to_json(const L0Profile& prof) {
  std::vector<Rat> coeffs(4, Rat(0));
  for (int i = 0; i <= prof.restriction.degree(); ++i) coeffs[static_cast<size_t>(i)] = prof.restriction.coeff(i);
  return json{{"restriction", rats_to_json(coeffs)},
              {"distinct_points", prof.distinct_points},
              {"multiplicities", prof.multiplicities}};
}

inline std::string stratum_kind_name(StratumKind kind) {
  switch (kind) {
    case StratumKind::OnePoint: return "one_point";
    case StratumKind::TwoPoint: return "two_point";
    case StratumKind::ThreePoint: return "three_point";
  }
  return "?";
}

inline json stratum_to_json(const Stratum& s) {
  return json{{"kind", stratum_kind_name(s.kind)}, {"signature", s.signature()}};
}

inline json classification_to_json(const TrigonalForm& f) {
  const Stratum s = classify(f);
  return json{{"regular", true},
              {"stratum", stratum_to_json(s)},
              {"genus", s.genus()},
              {"spin", s.spin() == SpinParity::Even ? "even" : "odd"},
              {"l0", l0_to_json(l0_profile(f))}};
}

}  // namespace trigstrata

// Command-line front end: classification and normalization of trigonal
// curve equations on Hirzebruch surfaces, orbit tests, group actions, and
// the associated finitely presented groups.  All I/O is JSON on stdout with
// sorted keys and canonical rational strings.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "trigstrata/json_io.hpp"

namespace ts = trigstrata;
using ts::json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ts::input_error("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ts::input_error(std::string("malformed JSON: ") + e.what());
  }
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int emit_error(const std::string& kind, const std::string& message, int code) {
  emit(json{{"error", json{{"kind", kind}, {"message", message}}}});
  return code;
}

int run_classify(const std::string& input) {
  const ts::TrigonalForm f = ts::form_from_json(load_json(input));
  if (!ts::is_regular(f)) {
    emit(json{{"regular", false},
              {"error", json{{"kind", "domain"}, {"message", "not in discriminant complement"}}}});
    return 2;
  }
  emit(ts::classification_to_json(f));
  return 0;
}

int run_normalize(const std::string& input) {
  const ts::TrigonalForm f = ts::form_from_json(load_json(input));
  const ts::NormalizeResult res = ts::normalize(f);
  ts::SliceTag slice = ts::SliceTag::V3;
  if (ts::in_slice(ts::SliceTag::V1, res.form)) slice = ts::SliceTag::V1;
  else if (ts::in_slice(ts::SliceTag::V2, res.form)) slice = ts::SliceTag::V2;
  emit(json{{"slice", ts::slice_name(slice)},
            {"form", ts::form_to_json(res.form)},
            {"log", ts::log_to_json(res.log)}});
  return 0;
}

int run_orbit_equal(const std::string& first, const std::string& second) {
  const ts::TrigonalForm f1 = ts::form_from_json(load_json(first));
  const ts::TrigonalForm f2 = ts::form_from_json(load_json(second));
  emit(json{{"equal", ts::orbit_equal(f1, f2)}});
  return 0;
}

int run_act(const std::string& element, const std::string& input) {
  const ts::GElement g = ts::gelement_from_json(load_json(element));
  const ts::TrigonalForm f = ts::form_from_json(load_json(input));
  emit(ts::form_to_json(ts::act(g, f)));
  return 0;
}

int run_presentation(const std::string& family, int n, int k, bool with_ab, bool with_cw) {
  ts::Presentation pres;
  int cw_k = 0;
  if (family == "piK") {
    if (n < 2) throw ts::input_error("--n is required (>= 2) for family piK");
    pres = ts::build_piK(n);
    cw_k = (n - 2) % 3 == 0 ? (n - 2) / 3 : 0;
  } else if (family == "conjecture-4k2k") {
    if (k < 1) throw ts::input_error("--k is required (>= 1) for family conjecture-4k2k");
    pres = ts::build_conjecture_4k2k(k);
    cw_k = k;
  } else {
    throw ts::input_error("unknown family: " + family);
  }
  json out = ts::presentation_to_json(pres);
  if (with_ab) {
    const ts::Abelianization ab = ts::abelianization(pres);
    json tor = json::array();
    for (const auto& t : ab.torsion) tor.push_back(ts::int_to_string(t));
    out["abelianization"] = json{{"free_rank", ab.free_rank}, {"torsion", tor}};
  }
  if (with_cw) {
    if (cw_k < 1) throw ts::domain_error("central word needs n = 3k+2 with k >= 1");
    const ts::Word w = ts::central_word(cw_k);
    out["central_word"] =
        json{{"length", w.letters.size()}, {"word", ts::word_to_json(w)}};
  }
  emit(out);
  return 0;
}

int run_embed_base(int k, const std::string& p, const std::string& q) {
  const ts::Rat rp = ts::rat_from_string(p), rq = ts::rat_from_string(q);
  json out = ts::form_to_json(ts::section_embedding(k, rp, rq));
  emit(out);
  return 0;
}

int run_dims(int k) {
  const ts::Dims d = ts::dims(k);
  emit(json::array({d.stratum_dim, d.maroni_locus_dim, d.divisor_dim}));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trigonal strata toolkit"};
  app.require_subcommand(1);

  std::string input, second, element, family = "piK", p_str = "0", q_str = "0";
  int n = 0, k = 0;
  bool with_ab = false, with_cw = false;

  auto* classify = app.add_subcommand("classify", "stratum data of a form");
  classify->add_option("--input", input, "TrigonalForm JSON file")->required();

  auto* normalize = app.add_subcommand("normalize", "normal form and transform log");
  normalize->add_option("--input", input, "TrigonalForm JSON file")->required();

  auto* orbit = app.add_subcommand("orbit-equal", "decide orbit equality of two forms");
  orbit->add_option("--first", input, "TrigonalForm JSON file")->required();
  orbit->add_option("--second", second, "TrigonalForm JSON file")->required();

  auto* act_cmd = app.add_subcommand("act", "apply a group element to a form");
  act_cmd->add_option("--element", element, "GElement JSON file")->required();
  act_cmd->add_option("--input", input, "TrigonalForm JSON file")->required();

  auto* pres = app.add_subcommand("presentation", "emit finitely presented group data");
  pres->add_option("--family", family, "piK or conjecture-4k2k");
  pres->add_option("--n", n, "parameter n for family piK");
  pres->add_option("--k", k, "parameter k for family conjecture-4k2k");
  pres->add_flag("--abelianization", with_ab, "include abelianization invariants");
  pres->add_flag("--central-word", with_cw, "include the central word");

  auto* embed = app.add_subcommand("embed-base", "section of the three-point family");
  embed->add_option("--k", k, "Maroni parameter k")->required();
  embed->add_option("--p", p_str, "coefficient p")->required();
  embed->add_option("--q", q_str, "coefficient q")->required();

  auto* dims_cmd = app.add_subcommand("dims", "dimension data for genus 3k+1");
  dims_cmd->add_option("--k", k, "Maroni parameter k")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (app.exit(e) == 0) return 0;
    return emit_error("usage", e.what(), 1);
  }

  try {
    if (classify->parsed()) return run_classify(input);
    if (normalize->parsed()) return run_normalize(input);
    if (orbit->parsed()) return run_orbit_equal(input, second);
    if (act_cmd->parsed()) return run_act(element, input);
    if (pres->parsed()) return run_presentation(family, n, k, with_ab, with_cw);
    if (embed->parsed()) return run_embed_base(k, p_str, q_str);
    if (dims_cmd->parsed()) return run_dims(k);
  } catch (const ts::input_error& e) {
    return emit_error("input", e.what(), 1);
  } catch (const ts::domain_error& e) {
    return emit_error("domain", e.what(), 2);
  } catch (const ts::internal_error& e) {
    return emit_error("internal", e.what(), 3);
  } catch (const std::exception& e) {
    return emit_error("error", e.what(), 1);
  }
  return 0;
}

#include "rht/cli.hpp"

#include "rht/cdga.hpp"
#include "rht/cohomology.hpp"
#include "rht/lie.hpp"
#include "rht/massey.hpp"
#include "rht/presets.hpp"
#include "rht/quadratic.hpp"
#include "rht/sullivan.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rht::cli {
namespace {

using nlohmann::json;

// Raised by handlers; carries the process exit code.
struct CliError {
  int code;
  std::string message;
};

// ---------------------------------------------------------------- input

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{2, "cannot open file: " + path};
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw CliError{2, "malformed JSON in " + path + ": " + e.what()};
  }
}

Presentation load_cdga_target(const std::string& target) {
  if (auto p = parse_preset_id(target)) return *p;
  json j = read_json_file(target);
  try {
    return Presentation::from_json(j);
  } catch (const std::invalid_argument& e) {
    throw CliError{2, std::string("invalid presentation: ") + e.what()};
  }
}

LiePresentation load_lie_target(const std::string& target) {
  if (auto p = parse_lie_preset(target)) return *p;
  json j = read_json_file(target);
  try {
    return LiePresentation::from_json(j);
  } catch (const std::invalid_argument& e) {
    throw CliError{2, std::string("invalid presentation: ") + e.what()};
  }
}

// RHT_MAX_DEGREE overrides the materialization cap; -1 keeps the default.
int env_cap() {
  const char* s = std::getenv("RHT_MAX_DEGREE");
  if (s == nullptr) return -1;
  const std::string str(s);
  try {
    std::size_t pos = 0;
    const int v = std::stoi(str, &pos);
    if (pos != str.size() || v < 0) throw std::invalid_argument(str);
    return v;
  } catch (...) {
    throw CliError{2, "RHT_MAX_DEGREE must be a non-negative integer, got: " +
                          str};
  }
}

FiniteCdga build_target(const std::string& target) {
  const Presentation p = load_cdga_target(target);
  try {
    return FiniteCdga::build(p, env_cap());
  } catch (const std::invalid_argument& e) {
    throw CliError{2, std::string("invalid algebra: ") + e.what()};
  }
}

// ------------------------------------------------------------- rendering

// Linear combination over named basis elements, e.g. "[u1^gc] - 2*[g^gc]".
std::string named_combo(const std::vector<std::string>& names, const VecQ& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size() && i < names.size(); ++i) {
    if (v[i] == 0) continue;
    Scalar c = v[i];
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (c != 1) out += scalar_to_string(c) + "*";
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

// cohomology classes are printed bracketed: representative u1^gc becomes
// the class label [u1^gc]
std::string class_label(const Cohomology& h, int q, std::size_t i) {
  return "[" + h.label(q, i) + "]";
}

std::vector<std::string> degree_labels(const Cohomology& h, int q) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < h.dim(q); ++i)
    names.push_back(class_label(h, q, i));
  return names;
}

json generators_json(const Presentation& p) {
  json arr = json::array();
  const auto& diff = p.differential();
  for (std::size_t i = 0; i < p.gens().size(); ++i) {
    const auto& g = p.gens()[i];
    json e;
    e["name"] = g.name;
    e["degree"] = g.degree;
    if (g.weight != 0) e["weight"] = g.weight;
    e["d"] = diff[i].str(p.gens());
    arr.push_back(e);
  }
  return arr;
}

json lie_generators_json(const LiePresentation& p) {
  json arr = json::array();
  for (const auto& g : p.gens()) {
    json e;
    e["name"] = g.name;
    e["weight"] = g.weight;
    arr.push_back(e);
  }
  return arr;
}

json histogram_json(const std::map<int, std::size_t>& hist) {
  json j = json::object();
  for (const auto& [w, n] : hist) j[std::to_string(w)] = n;
  return j;
}

// text output is a line-oriented projection of the JSON report
void render_text(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured()) {
        os << pad << k << ":\n";
        render_text(os, v, indent + 2);
      } else {
        os << pad << k << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        os << pad << "-\n";
        render_text(os, v, indent + 2);
      } else {
        os << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

void emit(std::ostream& out, const json& j, const std::string& format) {
  if (format == "text")
    render_text(out, j, 0);
  else
    out << j.dump(2) << "\n";
}

// ----------------------------------------------------------- verb logic

json model_report(const FiniteCdga& alg) {
  const auto& pres = alg.pres();
  json j;
  j["label"] = pres.label;
  j["cap"] = alg.cap();
  j["weighted"] = alg.weighted();
  j["vanishes_above_cap"] = alg.vanishes_above_cap();
  j["generators"] = generators_json(pres);
  j["relation_count"] = pres.relations().size();
  json dims = json::array();
  std::size_t total = 0;
  long long euler = 0;
  for (int q = 0; q <= alg.cap(); ++q) {
    const std::size_t d = alg.dim(q);
    dims.push_back(d);
    total += d;
    euler += (q % 2 == 0) ? static_cast<long long>(d)
                          : -static_cast<long long>(d);
  }
  j["dimensions"] = dims;
  j["total_dimension"] = total;
  j["euler_characteristic"] = euler;
  return j;
}

json degree_report(const Cohomology& h, int q, const PurityReport* purity) {
  json j;
  j["degree"] = q;
  j["dimension"] = h.dim(q);
  json cls = json::array();
  for (std::size_t i = 0; i < h.dim(q); ++i) {
    json c;
    c["label"] = class_label(h, q, i);
    if (h.weighted()) c["weight"] = h.weight(q, i);
    cls.push_back(c);
  }
  j["classes"] = cls;
  if (h.weighted()) {
    j["weights"] = histogram_json(h.weight_histogram(q));
    if (purity != nullptr) j["pure"] = purity->pure;
  }
  return j;
}

json cohomology_report(const Cohomology& h, std::optional<int> degree) {
  const auto& alg = h.algebra();
  std::vector<PurityReport> purity;
  if (h.weighted()) purity = purity_report(h);
  auto purity_for = [&](int q) -> const PurityReport* {
    for (const auto& r : purity)
      if (r.degree == q) return &r;
    return nullptr;
  };
  if (degree) {
    if (*degree < 0 || *degree > alg.cap())
      throw CliError{2, "degree out of range: " + std::to_string(*degree)};
    json j = degree_report(h, *degree, purity_for(*degree));
    j["label"] = alg.pres().label;
    return j;
  }
  json degs = json::object();
  for (int q = 0; q <= alg.cap(); ++q)
    degs[std::to_string(q)] = degree_report(h, q, purity_for(q));
  json j;
  j["label"] = alg.pres().label;
  j["degrees"] = degs;
  return j;
}

std::vector<std::size_t> resolve_classes(const Cohomology& h,
                                         const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (const char ch : spec) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);

  std::vector<std::size_t> tuple;
  for (auto& raw : parts) {
    const auto b = raw.find_first_not_of(" \t");
    const auto e = raw.find_last_not_of(" \t");
    const std::string s =
        b == std::string::npos ? std::string() : raw.substr(b, e - b + 1);
    if (s.empty()) throw CliError{2, "empty class name in --classes"};
    std::vector<std::size_t> matches;
    for (std::size_t i = 0; i < h.dim(1); ++i) {
      const std::string lab = h.label(1, i);
      if (s == lab || s == "[" + lab + "]") matches.push_back(i);
    }
    if (matches.empty())
      throw CliError{2, "unknown degree-1 class: " + s};
    if (matches.size() > 1)
      throw CliError{2, "ambiguous degree-1 class: " + s};
    tuple.push_back(matches.front());
  }
  if (tuple.size() < 3)
    throw CliError{2, "--classes needs at least three comma-separated names"};
  return tuple;
}

json massey_report(const Cohomology& h, const MasseyOutcome& o) {
  json j;
  json cls = json::array();
  for (const auto& l : o.labels) cls.push_back("[" + l + "]");
  j["classes"] = cls;
  j["length"] = o.length;
  j["status"] = to_string(o.status);
  j["verdict"] = to_string(o.verdict);
  j["decided_by"] = o.decided_by;
  j["parameter_count"] = o.param_count;
  if (o.status == MasseyStatus::defined) {
    j["constant_part"] = named_combo(degree_labels(h, 2), o.constant_part);
    json val = json::array();
    for (const auto& p : o.value) val.push_back(p.str(massey_param_name));
    j["value"] = val;
  }
  if (!o.residual_constraints.empty()) {
    json rc = json::array();
    for (const auto& p : o.residual_constraints)
      rc.push_back(p.str(massey_param_name));
    j["residual_constraints"] = rc;
  }
  if (!o.notes.empty()) j["notes"] = o.notes;
  return j;
}

json tower_report(const Cohomology& h, int stages) {
  const SullivanTower t(h, stages);
  json j;
  j["label"] = h.algebra().pres().label;
  j["stages_built"] = t.stages();
  j["stabilized"] = t.stabilized();
  j["v_sequence"] = t.v_sequence();
  const auto& tgens = h.algebra().pres().gens();
  json details = json::array();
  for (std::size_t s = 1; s <= t.stages(); ++s) {
    const auto& st = t.stage(s);
    json sj;
    sj["stage"] = s;
    sj["added"] = t.added(s);
    json ds = json::object();
    json im = json::object();
    for (const auto& name : t.added(s)) {
      const auto& pres = st.pres();
      ds[name] = pres.differential()[pres.index_of(name)].str(pres.gens());
      im[name] = t.image(name).str(tgens);
    }
    sj["differentials"] = ds;
    sj["images"] = im;
    details.push_back(sj);
  }
  j["stages"] = details;
  return j;
}

json malcev_report(const Cohomology& h, int stages) {
  const SullivanTower t(h, stages);
  const GradedLie gl = dual_lie(t);
  json j;
  j["label"] = h.algebra().pres().label;
  j["layers"] = gl.layer_dims;
  j["dimension"] = gl.dim();
  json gens = json::array();
  for (std::size_t i = 0; i < gl.dim(); ++i) {
    json e;
    e["name"] = gl.names[i];
    e["layer"] = gl.layer_of[i];
    if (gl.weights[i] != 0) e["weight"] = gl.weights[i];
    gens.push_back(e);
  }
  j["generators"] = gens;
  json br = json::object();
  for (const auto& [pr, v] : gl.bracket) {
    if (std::all_of(v.begin(), v.end(),
                    [](const Scalar& c) { return c == 0; }))
      continue;
    br["[" + gl.names[pr.first] + "," + gl.names[pr.second] + "]"] =
        named_combo(gl.names, v);
  }
  j["brackets"] = br;
  j["jacobi"] = gl.jacobi_holds();
  return j;
}

// Dual generator names for the algebra presets: symplectic-pair models get
// the X/Y (and Z/W) naming used by their published presentations.
std::vector<std::string> dual_names_for(const std::string& target,
                                        std::size_t n) {
  auto starts = [&](const char* p) { return target.rfind(p, 0) == 0; };
  if (starts("mr:") || target == "kt") {
    const int k = (static_cast<int>(n) - 2) / 2;
    if (k >= 1 && static_cast<std::size_t>(2 * k + 2) == n)
      return extended_dual_names(k);
  } else if (starts("curve:")) {
    const int gn = static_cast<int>(n) / 2;
    if (gn >= 1 && static_cast<std::size_t>(2 * gn) == n)
      return symplectic_dual_names(gn);
  }
  return {};
}

json koszul_report(const std::string& target, const FiniteCdga& alg) {
  QuadraticData q;
  try {
    q = quadratic_data(alg);
  } catch (const std::invalid_argument& e) {
    throw CliError{2, std::string("no quadratic data: ") + e.what()};
  }
  json j;
  j["label"] = q.label;
  j["generator_count"] = q.names.size();
  j["relation_count"] = q.relations.size();
  j["differential_part"] = !q.phi.empty();

  const LiePresentation dual =
      quadratic_dual(q, dual_names_for(target, q.names.size()));
  json dj;
  dj["label"] = dual.label;
  dj["generators"] = lie_generators_json(dual);
  dj["relations"] = normalized_relation_strings(dual);
  j["dual"] = dj;

  const ConfluenceReport rep = confluence_check(q);
  json cj;
  cj["confluent"] = rep.confluent;
  cj["rules"] = rep.rules.size();
  cj["criticals"] = rep.criticals.size();
  std::size_t interesting = 0;
  json divergent = json::array();
  for (const auto& c : rep.criticals) {
    if (c.interesting) ++interesting;
    if (!c.confluent) {
      json w;
      json word = json::array();
      for (const std::size_t i : c.word) word.push_back(q.names.at(i));
      w["word"] = word;
      w["left"] = c.left_normal_form;
      w["right"] = c.right_normal_form;
      divergent.push_back(w);
    }
  }
  cj["interesting"] = interesting;
  if (!divergent.empty()) cj["divergent"] = divergent;
  j["confluence"] = cj;

  // a relation with a bare linear term defines that generator; eliminate
  // it to expose the reduced presentation
  std::optional<std::string> defined;
  for (const auto& rel : dual.relations()) {
    for (const auto& t : rel) {
      if (t.expr.length() == 1) {
        defined = t.expr.gen_name();
        break;
      }
    }
    if (defined) break;
  }
  if (defined) {
    const LiePresentation red = eliminate_generator(dual, *defined);
    json ej;
    ej["generator"] = *defined;
    ej["generators"] = lie_generators_json(red);
    ej["relations"] = normalized_relation_strings(red);
    j["eliminated"] = ej;
  }
  return j;
}

json lcs_report(const LiePresentation& p, int length) {
  if (length < 1) throw CliError{2, "--length must be at least 1"};
  const auto len = static_cast<std::size_t>(length);
  const GradedLie gl = lcs_quotient(p, len);
  json j;
  j["label"] = p.label;
  j["generators"] = lie_generators_json(p);
  j["relation_count"] = p.relations().size();
  j["layer_dimensions"] = lcs_layer_dims(p, len);
  j["total_dimension"] = gl.dim();
  json layers = json::array();
  std::size_t idx = 0;
  for (std::size_t l = 0; l < gl.layer_dims.size(); ++l) {
    json lj;
    lj["length"] = l + 1;
    lj["dimension"] = gl.layer_dims[l];
    json basis = json::array();
    for (std::size_t i = 0; i < gl.layer_dims[l]; ++i)
      basis.push_back(gl.names.at(idx + i));
    lj["basis"] = basis;
    layers.push_back(lj);
    idx += gl.layer_dims[l];
  }
  j["layers"] = layers;
  return j;
}

json certify_report(const Cohomology& h, int length) {
  const WeightCertificate cert = weight_certificate(h, length);
  json j;
  j["label"] = h.algebra().pres().label;
  j["length"] = cert.len;
  j["applicable"] = cert.applicable;
  j["reason"] = cert.reason;
  if (h.weighted()) {
    j["min_h1_weight"] = cert.min_h1_weight;
    j["max_h2_weight"] = cert.max_h2_weight;
  }
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact rational-homotopy computations for finitely presented "
               "differential graded algebras"};
  app.require_subcommand(1);

  std::string target;
  std::string classes;
  std::string format = "json";
  int degree = -1;
  int length = 4;
  int stages = 2;
  bool strict = false;

  auto add_common = [&](CLI::App* sub, const char* target_help) {
    sub->add_option("target", target, target_help)->required();
    sub->add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };
  const char* cdga_help =
      "preset id (mr:k, curve:g, b1one, kt, filiform) or JSON file path";
  const char* lie_help =
      "preset id (lie-main:k) or JSON file path of a Lie presentation";

  CLI::App* c_model =
      app.add_subcommand("model", "build a presentation and report its shape");
  add_common(c_model, cdga_help);

  CLI::App* c_cohom = app.add_subcommand(
      "cohomology", "cohomology classes, weights, and purity per degree");
  add_common(c_cohom, cdga_help);
  c_cohom->add_option("--degree", degree, "restrict the report to one degree");

  CLI::App* c_massey = app.add_subcommand(
      "massey", "Massey product family for a tuple of degree-1 classes");
  add_common(c_massey, cdga_help);
  c_massey
      ->add_option("--classes", classes,
                   "comma-separated class labels, e.g. u1,u1,v1")
      ->required();
  c_massey->add_flag("--strict", strict,
                     "exit 1 when the product is undefined or undecided");

  CLI::App* c_minimal = app.add_subcommand(
      "minimal-model", "stagewise 1-minimal tower with generator images");
  add_common(c_minimal, cdga_help);
  c_minimal->add_option("--stages", stages, "stage cap (default 2)");

  CLI::App* c_malcev = app.add_subcommand(
      "malcev", "nilpotent Lie algebra dual to the 1-minimal tower");
  add_common(c_malcev, cdga_help);
  c_malcev->add_option("--stages", stages, "stage cap (default 2)");

  CLI::App* c_koszul = app.add_subcommand(
      "koszul",
      "quadratic data, dual Lie presentation, and rewriting confluence");
  add_common(c_koszul, cdga_help);

  CLI::App* c_lcs = app.add_subcommand(
      "lcs", "lower-central-series layers of a Lie presentation");
  add_common(c_lcs, lie_help);
  c_lcs->add_option("--length", length, "deepest bracket length (default 4)");

  CLI::App* c_certify = app.add_subcommand(
      "certify", "weight certificate for vanishing of long products");
  add_common(c_certify, cdga_help);
  c_certify->add_option("--length", length, "product length (default 4)");
  c_certify->add_flag("--strict", strict,
                      "exit 1 when no certificate applies");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    json report;
    int code = 0;
    if (c_model->parsed()) {
      report = model_report(build_target(target));
    } else if (c_cohom->parsed()) {
      const FiniteCdga alg = build_target(target);
      const Cohomology h(alg);
      std::optional<int> deg;
      if (c_cohom->count("--degree") > 0) deg = degree;
      report = cohomology_report(h, deg);
    } else if (c_massey->parsed()) {
      const FiniteCdga alg = build_target(target);
      const Cohomology h(alg);
      const MasseyOutcome o =
          massey_product_classes(h, resolve_classes(h, classes));
      report = massey_report(h, o);
      if (strict && (o.status != MasseyStatus::defined ||
                     o.verdict == MasseyVerdict::undecided))
        code = 1;
    } else if (c_minimal->parsed()) {
      if (stages < 1) throw CliError{2, "--stages must be at least 1"};
      const FiniteCdga alg = build_target(target);
      report = tower_report(Cohomology(alg), stages);
    } else if (c_malcev->parsed()) {
      if (stages < 1) throw CliError{2, "--stages must be at least 1"};
      const FiniteCdga alg = build_target(target);
      report = malcev_report(Cohomology(alg), stages);
    } else if (c_koszul->parsed()) {
      report = koszul_report(target, build_target(target));
    } else if (c_lcs->parsed()) {
      report = lcs_report(load_lie_target(target), length);
    } else if (c_certify->parsed()) {
      if (length < 1) throw CliError{2, "--length must be at least 1"};
      const FiniteCdga alg = build_target(target);
      const Cohomology h(alg);
      report = certify_report(h, length);
      if (strict && !report["applicable"].get<bool>()) code = 1;
    }
    emit(out, report, format);
    return code;
  } catch (const CliError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace rht::cli

// hopfkit: construct Hopf algebras and modules, and check their properties.
//
// Algebras and modules travel between subcommands as JSON files.

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "hopfkit/catalog.hpp"
#include "hopfkit/cohomology.hpp"
#include "hopfkit/json_io.hpp"
#include "hopfkit/projectivity.hpp"
#include "hopfkit/suites.hpp"

using namespace hopfkit;

namespace {

struct Globals {
  std::string field;
  std::uint64_t seed = 0;
  std::size_t max_degree = 2;
  std::string out;
  bool json = false;
};

// Result of a subcommand: a JSON document plus its human-readable form.
struct Output {
  Json doc;
  std::string text;
  bool data = false;  // an algebra or module document rather than a report
  int status = 0;
};

FieldSpec field_or(const Globals& g, const char* fallback) { return FieldSpec::parse(g.field.empty() ? fallback : g.field); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  return out;
}

std::vector<std::size_t> parse_indices(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& t : split(s, ',')) out.push_back(std::stoul(t));
  return out;
}

Vector parse_vector(FieldSpec f, const std::string& s) {
  Vector v;
  for (const auto& t : split(s, ',')) v.push_back(Scalar::from_rational(f, Rational::parse(t)));
  return v;
}

std::string join(const std::vector<std::size_t>& v, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string vector_text(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

// Algebras loaded from files, shared between modules over the same algebra.
class Loader {
 public:
  AlgebraPtr algebra(const Json& j, const std::string& where) {
    const Json* r = nullptr;
    if (j.contains("recipe")) r = &j["recipe"];
    if (r != nullptr) {
      Json key = *r;
      key.erase("verify");
      auto it = cache_.find(key.dump());
      if (it != cache_.end()) return it->second;
      auto a = algebra_from_json(j, where);
      cache_.emplace(key.dump(), a);
      return a;
    }
    if (j.contains("file")) return algebra(read_json_file(j["file"]), j["file"]);
    return algebra_from_json(j, where);
  }

  AlgebraPtr algebra_file(const std::string& path) {
    auto j = read_json_file(path);
    if (j.value("format", "") == "hopfkit-module") throw FormatError(path + ": expected an algebra, found a module");
    return algebra(j, path);
  }

  AlgModule module_file(const std::string& path) {
    auto j = read_json_file(path);
    if (j.value("format", "") != "hopfkit-module") throw FormatError(path + ": expected a module document");
    if (!j.contains("algebra")) throw FormatError(path + ": missing key 'algebra'");
    return module_from_json(j, algebra(j["algebra"], path + "#/algebra"), path + "#");
  }

 private:
  std::map<std::string, AlgebraPtr> cache_;
};

Output algebra_output(const AlgebraPtr& a) {
  Output o;
  o.doc = algebra_to_json(*a);
  o.data = true;
  o.text = (a->name().empty() ? std::string("algebra") : a->name()) + ": dim " + std::to_string(a->dim()) + " over " +
           a->field().to_string();
  return o;
}

Output module_output(const AlgModule& m) {
  Output o;
  o.doc = module_to_json(m);
  o.data = true;
  o.text = (m.name.empty() ? std::string("module") : m.name) + ": dim " + std::to_string(m.dim()) + " over a " +
           std::to_string(m.algebra->dim()) + "-dim algebra";
  return o;
}

std::size_t group_label(const BasisAlgebra& k, const std::string& label) {
  return coproduct_info(k).g->index_of(label);
}

// ---- construct ------------------------------------------------------------------

struct ConstructArgs {
  std::string type, group, cocycle, preset, recipe, left, right, base, action, sigma, tau;
  std::string kind = "regular", algebra, relations, into, at;
  std::uint32_t n = 2, m = 2;
  bool no_verify = false;
};

Output construct_module(const Globals& g, const ConstructArgs& c, Loader& loader) {
  AlgModule m;
  if (c.kind == "shift-u") {
    auto s = shift_smash(c.m, field_or(g, "Q"), BuildOptions{!c.no_verify});
    m = shift_module_u(s);
    if (!c.at.empty()) m = place_in_component(m, s.k, s.g->index_of(c.at));
    return module_output(m);
  }
  if (c.kind == "klein-u") {
    auto d = klein_crossed_data(field_or(g, "F3"));
    AlgebraPtr k = c.algebra.empty() ? crossed_coproduct(d.sigma, d.tau) : loader.algebra_file(c.algebra);
    m = klein_module_u(d, k);
    if (!c.at.empty()) m = place_in_component(m, k, group_label(*k, c.at));
    return module_output(m);
  }
  if (c.algebra.empty()) throw Error("construct --type module --kind " + c.kind + " needs --algebra FILE");
  auto a = loader.algebra_file(c.algebra);
  if (c.kind == "regular") m = regular_module(a);
  else if (c.kind == "trivial") m = trivial_module(a);
  else if (c.kind == "quotient") {
    std::vector<SparseVec> gens;
    for (const auto& r : split(c.relations, ',')) gens.push_back(parse_element(*a, r));
    m = quotient_by_left_ideal(a, gens);
  } else
    throw Error("unknown module kind '" + c.kind + "' (known: regular, trivial, quotient, shift-u, klein-u)");
  if (!c.at.empty()) {
    if (c.into.empty()) throw Error("--at needs --into FILE naming the coproduct");
    auto k = loader.algebra_file(c.into);
    m = place_in_component(m, k, group_label(*k, c.at));
  }
  return module_output(m);
}

Json recipe_of_file(Loader& loader, const std::string& path) {
  auto a = loader.algebra_file(path);
  if (a->recipe().empty()) throw Error(path + ": algebra carries no construction recipe");
  return Json::parse(a->recipe());
}

Output construct(const Globals& g, const ConstructArgs& c, Loader& loader) {
  if (c.type == "module") return construct_module(g, c, loader);
  Json r;
  if (!c.recipe.empty()) {
    r = read_json_file(c.recipe);
  } else {
    if (c.type.empty()) throw Error("construct needs --type or --recipe");
    r["type"] = c.type;
    const bool klein = c.type == "crossed" && (c.preset == "klein" || (c.preset.empty() && c.action.empty()));
    r["field"] = field_or(g, klein ? "F3" : "Q").to_string();
    if (c.type == "taft" || c.type == "truncated" || c.type == "qea") r["n"] = c.n;
    if (c.type == "qea") r["m"] = c.m;
    if (c.type == "group-algebra" || c.type == "dual-group" || c.type == "twisted") {
      if (c.group.empty()) throw Error("--type " + c.type + " needs --group");
      r["group"] = group_to_json(*parse_group_spec(c.group));
      if (!c.cocycle.empty()) r["cocycle"] = read_json_file(c.cocycle);
    }
    if (c.type == "tensor") {
      if (c.left.empty() || c.right.empty()) throw Error("--type tensor needs --left and --right");
      r.erase("field");
      r["left"] = recipe_of_file(loader, c.left);
      r["right"] = recipe_of_file(loader, c.right);
    }
    if (c.type == "smash") {
      if (c.base.empty()) {
        r["preset"] = c.preset.empty() ? "shift" : c.preset;
        r["m"] = c.m;
      } else {
        r["base"] = recipe_of_file(loader, c.base);
        r["group"] = group_to_json(*parse_group_spec(c.group));
        r["action"] = read_json_file(c.action);
      }
    }
    if (c.type == "crossed") {
      if (klein) {
        r["preset"] = "klein";
      } else {
        r["action"] = read_json_file(c.action);
        if (!c.sigma.empty()) r["sigma"] = read_json_file(c.sigma);
        if (!c.tau.empty()) r["tau"] = read_json_file(c.tau);
      }
    }
  }
  if (c.no_verify) r["verify"] = false;
  return algebra_output(build_from_recipe(r));
}

// ---- inspect --------------------------------------------------------------------

std::string structure_kind(const BasisAlgebra& a) {
  return std::visit(
      [](const auto& i) -> std::string {
        using T = std::decay_t<decltype(i)>;
        if constexpr (std::is_same_v<T, GroupAlgebraInfo>) return i.alpha.is_trivial() ? "group algebra" : "twisted group algebra";
        else if constexpr (std::is_same_v<T, DualGroupInfo>) return "dual group algebra";
        else if constexpr (std::is_same_v<T, QeaInfo>) return "quantum elementary abelian group";
        else if constexpr (std::is_same_v<T, TruncatedPolyInfo>) return "truncated polynomial algebra";
        else if constexpr (std::is_same_v<T, CoproductInfo>) return i.kind == CoproductInfo::Kind::Smash ? "smash coproduct" : "crossed coproduct";
        else return "algebra";
      },
      a.info());
}

void describe_algebra(const BasisAlgebra& a, bool axioms, Json& doc, std::ostringstream& text) {
  const std::size_t zdim = center(a).cols();
  doc["dim"] = a.dim();
  doc["field"] = a.field().to_string();
  doc["structure"] = structure_kind(a);
  doc["hopf"] = a.hopf().has_value();
  doc["center_dim"] = zdim;
  text << "algebra " << (a.name().empty() ? "(unnamed)" : a.name()) << "\n";
  text << "  structure: " << structure_kind(a) << (a.hopf() ? ", Hopf" : "") << "\n";
  text << "  field:     " << a.field().to_string() << "\n";
  text << "  dim:       " << a.dim() << "\n";
  if (const auto* c = std::get_if<CoproductInfo>(&a.info())) {
    Json blocks = Json::array();
    text << "  blocks:    " << c->blocks.size() << " x " << c->blocks.front()->dim() << " (";
    for (std::size_t x = 0; x < c->blocks.size(); ++x) {
      blocks.push_back({{"x", c->g->label(x)}, {"dim", c->blocks[x]->dim()}});
      text << (x ? ", " : "") << c->g->label(x) << ": " << c->blocks[x]->dim();
    }
    text << ")\n";
    doc["blocks"] = blocks;
  }
  text << "  center:    " << zdim << "\n";
  if (axioms) {
    std::string verdict = "pass";
    try {
      require_axioms(a);
    } catch (const Error& e) {
      verdict = e.what();
    }
    doc["axioms"] = verdict;
    text << "  axioms:    " << verdict << "\n";
  }
}

Output inspect(const std::string& path, bool axioms, Loader& loader) {
  Output o;
  std::ostringstream text;
  const Json j = read_json_file(path);
  const std::string format = j.value("format", "");
  if (format == "hopfkit-module") {
    auto m = loader.module_file(path);
    o.doc["kind"] = "module";
    o.doc["dim"] = m.dim();
    text << "module " << (m.name.empty() ? "(unnamed)" : m.name) << "\n  dim:       " << m.dim() << "\n";
    if (std::holds_alternative<CoproductInfo>(m.algebra->info())) {
      const auto dims = component_dims(m);
      const auto& g = *coproduct_info(*m.algebra).g;
      Json comps = Json::object();
      text << "  components:";
      for (std::size_t x = 0; x < dims.size(); ++x) {
        comps[g.label(x)] = dims[x];
        text << " " << g.label(x) << ": " << dims[x] << (x + 1 < dims.size() ? "," : "");
      }
      text << "\n";
      o.doc["components"] = comps;
    }
    const auto r = check_module_axioms(m);
    o.doc["module_axioms"] = r.ok ? "pass" : r.witness;
    text << "  axioms:    " << (r.ok ? "pass" : r.witness) << "\n";
    Json alg;
    std::ostringstream atext;
    describe_algebra(*m.algebra, axioms, alg, atext);
    o.doc["algebra"] = alg;
    text << "over " << atext.str();
  } else {
    auto a = loader.algebra_file(path);
    o.doc["kind"] = "algebra";
    describe_algebra(*a, axioms, o.doc, text);
  }
  o.text = text.str();
  return o;
}

// ---- check-cocycle --------------------------------------------------------------

Output check_cocycle_cmd(const Globals& g, const std::string& cocycle, const std::string& group,
                         const std::string& action, const std::string& sigma, const std::string& tau, bool klein) {
  Output o;
  std::ostringstream text;
  if (!cocycle.empty()) {
    Json j = read_json_file(cocycle);
    GroupPtr l;
    FieldSpec f = field_or(g, "Q");
    Json values = j;
    if (j.contains("cocycle")) {
      values = j["cocycle"];
      if (j.contains("group")) l = group_from_json(j["group"], cocycle + "#/group");
      if (j.contains("field") && g.field.empty()) f = FieldSpec::parse(j["field"].get<std::string>());
    }
    if (!group.empty()) l = parse_group_spec(group);
    if (!l) throw Error("check-cocycle --cocycle needs --group or a {group, cocycle} document");
    const auto alpha = cocycle_from_json(values, l, f, cocycle + "#");
    const auto r = check_cocycle(alpha);
    o.doc["cocycle"] = r.ok ? "pass" : r.witness;
    text << "cocycle identity: " << (r.ok ? "pass" : r.witness) << "\n";
    if (r.ok) {
      const auto cb = is_coboundary(alpha);
      o.doc["coboundary"] = cb.coboundary && !cb.needs_extension;
      o.doc["needs_extension"] = cb.needs_extension;
      if (!cb.reason.empty()) o.doc["reason"] = cb.reason;
      const char* verdict = !cb.coboundary ? "no" : cb.needs_extension ? "no, only over an extension" : "yes";
      text << "coboundary:       " << verdict << (cb.reason.empty() ? "" : " (" + cb.reason + ")") << "\n";
    }
    o.status = r.ok ? 0 : 1;
    o.text = text.str();
    return o;
  }
  std::optional<SigmaCocycle> s;
  std::optional<TauCocycle> t;
  if (klein || action.empty()) {
    auto d = klein_crossed_data(field_or(g, "F3"));
    s = d.sigma;
    t = d.tau;
  } else {
    const FieldSpec f = field_or(g, "Q");
    auto act = action_from_json(read_json_file(action), action + "#");
    s = sigma.empty() ? SigmaCocycle::trivial(act, f) : sigma_from_json(read_json_file(sigma), act, f, sigma + "#");
    t = tau.empty() ? TauCocycle::trivial(act, f) : tau_from_json(read_json_file(tau), act, f, tau + "#");
  }
  const Report rs = check_sigma(*s), rt = check_tau(*t);
  const Report rc = rs && rt ? validate_compatibility(*s, *t) : Report::fail("skipped");
  auto line = [&](const char* what, const Report& r) {
    o.doc[what] = r.ok ? "pass" : r.witness;
    text << what << ": " << (r.ok ? "pass" : r.witness) << "\n";
  };
  line("sigma", rs);
  line("tau", rt);
  line("compatibility", rc);
  o.status = rs && rt && rc ? 0 : 1;
  o.text = text.str();
  return o;
}

// ---- projectivity and varieties -------------------------------------------------

Output projective_cmd(const AlgModule& m, const std::string& strategy, bool no_cross_check) {
  ProjectivityOptions opts;
  opts.strategy = parse_strategy(strategy);
  opts.cross_check = !no_cross_check;
  const auto v = is_projective(m, opts);
  Output o;
  o.doc = {{"projective", v.projective}, {"strategy", to_string(v.strategy)}, {"witness", v.witness}};
  o.text = std::string(v.projective ? "projective" : "not projective") + " [" + to_string(v.strategy) + "] " + v.witness + "\n";
  return o;
}

std::uint32_t qea_rank(const BasisAlgebra& a) {
  if (const auto* q = std::get_if<QeaInfo>(&a.info())) return q->m;
  throw Error("rank-variety needs a module over a quantum elementary abelian group");
}

Output rank_variety_cmd(const AlgModule& m, const std::vector<std::string>& lambdas, bool enumerate) {
  std::vector<Vector> ls;
  for (const auto& s : lambdas) ls.push_back(parse_vector(m.field(), s));
  if (ls.empty()) ls = default_lambdas(m.field(), qea_rank(*m.algebra), enumerate);
  const auto r = rank_variety_membership(m, ls);
  Output o;
  std::ostringstream text;
  o.doc["points"] = Json::array();
  for (const auto& p : r.points) {
    Json lambda = Json::array();
    for (const auto& c : p.lambda) lambda.push_back(scalar_to_json(c));
    o.doc["points"].push_back({{"lambda", lambda}, {"in_variety", p.in_variety}, {"witness", p.witness}});
    text << vector_text(p.lambda) << ": " << (p.in_variety ? "in variety" : "not in variety") << "  " << p.witness << "\n";
  }
  if (!r.notes.empty()) {
    o.doc["notes"] = r.notes;
    text << r.notes << "\n";
  }
  o.text = text.str();
  return o;
}

// ---- cohomology -----------------------------------------------------------------

CocycleSlice load_cocycle(const Globals& g, const std::string& group, const std::string& cocycle, const char* fallback) {
  const FieldSpec f = field_or(g, fallback);
  if (group.empty()) throw Error("cohomology needs --group");
  auto l = parse_group_spec(group);
  if (cocycle.empty()) return CocycleSlice::trivial(l, f);
  Json j = read_json_file(cocycle);
  if (j.contains("cocycle")) j = j["cocycle"];
  return cocycle_from_json(j, l, f, cocycle + "#");
}

Output cohomology_cmd(const Globals& g, const std::string& side, const std::string& group, const std::string& cocycle,
                      const std::string& module, Loader& loader) {
  Output o;
  std::ostringstream text;
  const std::size_t n = g.max_degree;
  auto dims_line = [&](const std::string& what, const std::vector<std::size_t>& dims) {
    o.doc[what] = dims;
    text << what << ": " << join(dims) << "\n";
  };
  if (!module.empty()) {
    dims_line("group", group_cohomology_dims(loader.module_file(module), n).dims);
  } else if (side == "iso-ad") {
    const auto r = verify_iso_ad(load_cocycle(g, group, cocycle, "Q"), n);
    dims_line("hochschild", r.hochschild);
    dims_line("adjoint", r.group);
    o.doc["agree"] = r.report.ok;
    text << (r.report.ok ? "agree" : "disagree: " + r.report.witness) << "\n";
    o.status = r.report.ok ? 0 : 1;
  } else if (side == "hochschild") {
    dims_line("hochschild", hochschild_dims(twisted_group_algebra(load_cocycle(g, group, cocycle, "Q")), n).dims);
  } else if (side == "adjoint") {
    dims_line("adjoint", group_cohomology_dims(adjoint_module(load_cocycle(g, group, cocycle, "Q")).module, n).dims);
  } else if (side == "trivial") {
    const auto alpha = load_cocycle(g, group, "", "Q");
    dims_line("trivial", group_cohomology_dims(trivial_module(group_algebra(alpha.group(), alpha.field())), n).dims);
  } else if (side == "embedding") {
    const auto r = verify_h_embedding(load_cocycle(g, group, cocycle, "Q"), n);
    dims_line("summand", r.summand);
    dims_line("trivial", r.trivial);
    o.doc["agree"] = r.report.ok;
    text << (r.report.ok ? "agree" : "disagree: " + r.report.witness) << "\n";
    o.status = r.report.ok ? 0 : 1;
  } else {
    throw Error("unknown --side '" + side + "' (known: iso-ad, hochschild, adjoint, trivial, embedding)");
  }
  o.text = text.str();
  return o;
}

// ---- suite ----------------------------------------------------------------------

Json suite_json(const SuiteReport& r) {
  Json a = Json::array();
  for (const auto& x : r.assertions)
    a.push_back({{"id", x.id}, {"anchor", x.anchor}, {"passed", x.passed}, {"witness", x.witness}});
  return {{"suite", r.name}, {"seed", r.seed}, {"passed", r.passed()}, {"seconds", r.seconds}, {"assertions", a}};
}

Output suite_cmd(const Globals& g, const std::string& name) {
  Output o;
  if (name == "list") {
    o.doc = suite_names();
    for (const auto& s : suite_names()) o.text += s + "\n";
    return o;
  }
  std::vector<std::string> names = name == "all" ? suite_names() : std::vector<std::string>{name};
  Json reports = Json::array();
  for (const auto& s : names) {
    const auto r = run_suite(s, g.seed);
    reports.push_back(suite_json(r));
    o.text += r.to_text();
    if (!r.passed()) o.status = 1;
  }
  o.doc = names.size() == 1 ? reports[0] : reports;
  return o;
}

int emit(const Globals& g, const Output& o) {
  if (!g.out.empty()) {
    write_json_file(g.out, o.doc);
    std::cout << o.text << (o.text.empty() || o.text.back() == '\n' ? "" : "\n");
  } else if (o.data || g.json) {
    std::cout << o.doc.dump(1) << "\n";
  } else {
    std::cout << o.text;
  }
  return o.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional Hopf algebras, their modules, projectivity and cohomology, in exact arithmetic."};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "Q, F<p> or Q(zeta<n>); the default depends on the subcommand");
  app.add_option("--seed", g.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--max-degree", g.max_degree, "Highest cohomological degree")->capture_default_str();
  app.add_option("--out", g.out, "Write the JSON result to this file");
  app.add_flag("--json", g.json, "Print JSON instead of text");

  Loader loader;
  std::function<Output()> run;

  ConstructArgs c;
  auto* construct_cmd = app.add_subcommand("construct", "Build an algebra or module and write it as JSON");
  construct_cmd->add_option("--type", c.type,
                            "group-algebra, dual-group, twisted, taft, qea, truncated, tensor, smash, crossed or module");
  construct_cmd->add_option("--n", c.n, "Taft order, or t^n = 0")->capture_default_str();
  construct_cmd->add_option("--m", c.m, "Tensor factors (qea), or copies of T_2 (smash)")->capture_default_str();
  construct_cmd->add_option("--group", c.group, "cyclic:2,2, symmetric:3, dihedral:4 or a group file");
  construct_cmd->add_option("--cocycle", c.cocycle, "Cocycle file for twisted group algebras");
  construct_cmd->add_option("--preset", c.preset, "shift (smash) or klein (crossed)");
  construct_cmd->add_option("--recipe", c.recipe, "Recipe file, overriding the other algebra flags");
  construct_cmd->add_option("--left", c.left, "Left tensor factor (algebra file)");
  construct_cmd->add_option("--right", c.right, "Right tensor factor (algebra file)");
  construct_cmd->add_option("--base", c.base, "Smash: base algebra file");
  construct_cmd->add_option("--action", c.action, "Smash: matrices per group element; crossed: action file");
  construct_cmd->add_option("--sigma", c.sigma, "Crossed: sigma file");
  construct_cmd->add_option("--tau", c.tau, "Crossed: tau file");
  construct_cmd->add_option("--kind", c.kind, "Module: regular, trivial, quotient, shift-u or klein-u")->capture_default_str();
  construct_cmd->add_option("--algebra", c.algebra, "Module: algebra file");
  construct_cmd->add_option("--relations", c.relations, "Module: comma-separated generators of the left ideal");
  construct_cmd->add_option("--into", c.into, "Module: coproduct to place the module in");
  construct_cmd->add_option("--at", c.at, "Module: group label of the component");
  construct_cmd->add_flag("--no-verify", c.no_verify, "Skip the Hopf axiom checks");
  construct_cmd->callback([&] { run = [&] { return construct(g, c, loader); }; });

  std::string path, path2;
  bool axioms = false;
  auto* inspect_cmd = app.add_subcommand("inspect", "Print dimensions, component dims and center dim");
  inspect_cmd->add_option("file", path)->required();
  inspect_cmd->add_flag("--axioms", axioms, "Also check the Hopf axioms");
  inspect_cmd->callback([&] { run = [&] { return inspect(path, axioms, loader); }; });

  std::string cocycle, group, action, sigma, tau;
  bool klein = false;
  auto* cc = app.add_subcommand("check-cocycle", "Check a 2-cocycle, or sigma/tau data and their compatibility");
  cc->add_option("--cocycle", cocycle, "Cocycle file");
  cc->add_option("--group", group, "Group of the cocycle");
  cc->add_option("--action", action, "Action file for sigma/tau");
  cc->add_option("--sigma", sigma, "Sigma file");
  cc->add_option("--tau", tau, "Tau file");
  cc->add_flag("--klein", klein, "Use the Klein crossed data");
  cc->callback([&] { run = [&] { return check_cocycle_cmd(g, cocycle, group, action, sigma, tau, klein); }; });

  bool twisted = false;
  auto* tensor_cmd = app.add_subcommand("tensor", "M (x) N");
  tensor_cmd->add_option("m", path)->required();
  tensor_cmd->add_option("n", path2)->required();
  tensor_cmd->add_flag("--twisted", twisted, "Modules over twisted group algebras: l acts as l (x) l");
  tensor_cmd->callback([&] {
    run = [&] {
      auto m = loader.module_file(path), n = loader.module_file(path2);
      return module_output(twisted ? twisted_tensor(m, n) : tensor_module(m, n));
    };
  });

  auto* dual_cmd = app.add_subcommand("dual", "M*");
  dual_cmd->add_option("m", path)->required();
  dual_cmd->add_flag("--twisted", twisted, "Module over a twisted group algebra");
  dual_cmd->callback([&] {
    run = [&] {
      auto m = loader.module_file(path);
      return module_output(twisted ? twisted_dual(m) : dual_module(m));
    };
  });

  std::string coproduct, label;
  auto* conj_cmd = app.add_subcommand("conjugate", "yU for a module U over a block of a coproduct");
  conj_cmd->add_option("u", path)->required();
  conj_cmd->add_option("--coproduct", coproduct, "The coproduct algebra file")->required();
  conj_cmd->add_option("--y", label, "Group label y")->required();
  conj_cmd->callback([&] {
    run = [&] {
      auto k = loader.algebra_file(coproduct);
      return module_output(conjugate_module(loader.module_file(path), k, group_label(*k, label)));
    };
  });

  auto* comp_cmd = app.add_subcommand("component", "M_x as a module over the block K p_x");
  comp_cmd->add_option("m", path)->required();
  comp_cmd->add_option("--x", label, "Group label x")->required();
  comp_cmd->callback([&] {
    run = [&] {
      auto m = loader.module_file(path);
      return module_output(component(m, group_label(*m.algebra, label)));
    };
  });

  std::string subgroup, target;
  auto* induce_cmd = app.add_subcommand("induce", "Induce from a coordinate subgroup of a twisted group algebra");
  induce_cmd->add_option("m", path)->required();
  induce_cmd->add_option("--algebra", target, "Twisted group algebra of the whole group")->required();
  induce_cmd->add_option("--subgroup", subgroup, "Comma-separated generator coordinates")->required();
  induce_cmd->callback([&] {
    run = [&] {
      auto a = loader.algebra_file(target);
      const auto* info = std::get_if<GroupAlgebraInfo>(&a->info());
      if (info == nullptr) throw Error("induce: --algebra is not a (twisted) group algebra");
      const auto f = subgroup_embedding(a, coordinate_subgroup(*info->group, parse_indices(subgroup)));
      auto m = loader.module_file(path);
      m.algebra = f.source;
      return module_output(induce(f, m));
    };
  });

  std::string lambda;
  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict to a coordinate subgroup or to k<tau(lambda)>");
  restrict_cmd->add_option("m", path)->required();
  restrict_cmd->add_option("--subgroup", subgroup, "Comma-separated generator coordinates");
  restrict_cmd->add_option("--lambda", lambda, "Comma-separated direction for a quantum elementary abelian group");
  restrict_cmd->callback([&] {
    run = [&] {
      auto m = loader.module_file(path);
      if (!lambda.empty()) return module_output(restrict_module(m, qea_tau_element(m.algebra, parse_vector(m.field(), lambda)).embedding));
      if (subgroup.empty()) throw Error("restrict needs --subgroup or --lambda");
      const auto* info = std::get_if<GroupAlgebraInfo>(&m.algebra->info());
      if (info == nullptr) throw Error("restrict --subgroup needs a module over a (twisted) group algebra");
      return module_output(restrict_module(m, subgroup_embedding(m.algebra, coordinate_subgroup(*info->group, parse_indices(subgroup)))));
    };
  });

  std::size_t trials = 20;
  auto* iso_cmd = app.add_subcommand("isiso", "Decide M ~ N, with a certificate when isomorphic");
  iso_cmd->add_option("m", path)->required();
  iso_cmd->add_option("n", path2)->required();
  iso_cmd->add_option("--trials", trials, "Random combinations of the Hom basis to try")->capture_default_str();
  iso_cmd->callback([&] {
    run = [&] {
      const auto v = is_isomorphic(loader.module_file(path), loader.module_file(path2), trials, g.seed);
      Output o;
      o.doc = {{"verdict", to_string(v.kind)}, {"reason", v.reason}};
      if (v.certificate) o.doc["certificate"] = matrix_to_json(*v.certificate);
      o.text = to_string(v.kind) + (v.reason.empty() ? "" : ": " + v.reason) + "\n";
      return o;
    };
  });

  std::string strategy = "auto";
  bool no_cross_check = false;
  auto* proj_cmd = app.add_subcommand("projective", "Is the module projective?");
  proj_cmd->add_option("m", path)->required();
  proj_cmd->add_option("--strategy", strategy, "auto, split, local or jordan")->capture_default_str();
  proj_cmd->add_flag("--no-cross-check", no_cross_check, "Skip the split-test cross check");
  proj_cmd->callback([&] { run = [&] { return projective_cmd(loader.module_file(path), strategy, no_cross_check); }; });

  std::vector<std::string> lambdas;
  bool enumerate = false;
  auto* rv_cmd = app.add_subcommand("rank-variety", "Probe rank-variety membership along directions lambda");
  rv_cmd->add_option("m", path)->required();
  rv_cmd->add_option("--lambda", lambdas, "Direction, e.g. 1,0 (repeatable)");
  rv_cmd->add_flag("--enumerate", enumerate, "All directions over a small prime field");
  rv_cmd->callback([&] { run = [&] { return rank_variety_cmd(loader.module_file(path), lambdas, enumerate); }; });

  std::string side = "iso-ad", module;
  auto* coh_cmd = app.add_subcommand("cohomology", "Hochschild and group cohomology dimensions");
  coh_cmd->add_option("--group", group, "The group L");
  coh_cmd->add_option("--cocycle", cocycle, "Cocycle on L (default trivial)");
  coh_cmd->add_option("--side", side, "iso-ad, hochschild, adjoint, trivial or embedding")->capture_default_str();
  coh_cmd->add_option("--module", module, "Group cohomology of this module over a group algebra");
  coh_cmd->callback([&] { run = [&] { return cohomology_cmd(g, side, group, cocycle, module, loader); }; });

  std::string suite = "list";
  auto* suite_cmd_ = app.add_subcommand("suite", "Run a named check suite (or 'all', or 'list')");
  suite_cmd_->add_option("name", suite)->capture_default_str();
  suite_cmd_->callback([&] { run = [&] { return suite_cmd(g, suite); }; });

  CLI11_PARSE(app, argc, argv);
  try {
    return emit(g, run());
  } catch (const FormatError& e) {
    std::cerr << "hopfkit: malformed input: " << e.what() << "\n";
  } catch (const CompatibilityError& e) {
    std::cerr << "hopfkit: incompatible cocycles: " << e.what() << "\n";
  } catch (const ResourceGuard& e) {
    std::cerr << "hopfkit: too large: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "hopfkit: " << e.what() << "\n";
  }
  return 2;
}

#include "hopfkit/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hopfkit/catalog.hpp"

namespace hopfkit {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw FormatError((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& need(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing key '" + key + "'");
  return *it;
}

template <class T>
T get_as(const Json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    fail(where, e.what());
  }
}

FieldSpec field_of(const Json& j, const std::string& where) {
  try {
    return FieldSpec::parse(get_as<std::string>(need(j, "field", where), where + "/field"));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    fail(where + "/field", e.what());
  }
}

Json sparse_to_json(const SparseVec& v) {
  Json out = Json::array();
  for (const auto& [k, c] : v.terms) out.push_back({k, scalar_to_json(c)});
  return out;
}

SparseVec sparse_from_json(const Json& j, FieldSpec f, std::size_t dim, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of [index, scalar] pairs");
  SparseVec v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != 2) fail(w, "expected [index, scalar]");
    const auto k = get_as<std::size_t>(j[i][0], w + "/0");
    if (k >= dim) fail(w + "/0", "index out of range");
    v.terms.emplace_back(k, scalar_from_json(j[i][1], f, w + "/1"));
  }
  v.normalize();
  return v;
}

std::size_t label_index(const FiniteGroup& g, const Json& j, const std::string& where) {
  const auto s = get_as<std::string>(j, where);
  try {
    return g.index_of(s);
  } catch (const Error&) {
    fail(where, "unknown group element '" + s + "'");
  }
}

std::size_t label_index(const FiniteGroup& g, const std::string& s, const std::string& where) {
  try {
    return g.index_of(s);
  } catch (const Error&) {
    fail(where, "unknown group element '" + s + "'");
  }
}

// Recipe implied by the structure info, when the info alone determines the algebra.
std::optional<Json> derived_recipe(const BasisAlgebra& a) {
  const std::string field = a.field().to_string();
  if (const auto* g = std::get_if<GroupAlgebraInfo>(&a.info())) {
    if (g->alpha.is_trivial()) return Json{{"type", "group-algebra"}, {"field", field}, {"group", group_to_json(*g->group)}};
    return Json{{"type", "twisted"}, {"field", field}, {"group", group_to_json(*g->group)}, {"cocycle", cocycle_to_json(g->alpha)}};
  }
  if (const auto* d = std::get_if<DualGroupInfo>(&a.info()))
    return Json{{"type", "dual-group"}, {"field", field}, {"group", group_to_json(*d->group)}};
  if (const auto* t = std::get_if<TruncatedPolyInfo>(&a.info()))
    return Json{{"type", "truncated"}, {"field", field}, {"n", t->n}};
  if (const auto* q = std::get_if<QeaInfo>(&a.info())) {
    if (q->m == 1) return Json{{"type", "taft"}, {"field", field}, {"n", q->n}};
    return Json{{"type", "qea"}, {"field", field}, {"n", q->n}, {"m", q->m}};
  }
  return std::nullopt;
}

std::optional<Json> recipe_of(const BasisAlgebra& a) {
  if (!a.recipe().empty()) return Json::parse(a.recipe());
  auto r = derived_recipe(a);
  if (!r) return std::nullopt;
  // only trust it if it reproduces the algebra
  try {
    Json lazy = *r;
    lazy["verify"] = false;
    auto b = build_from_recipe(lazy);
    if (!same_algebra(a, *b) || b->labels() != a.labels()) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  return r;
}

}  // namespace

// ---- scalars and matrices --------------------------------------------------------

Json scalar_to_json(const Scalar& s) {
  switch (s.field().kind()) {
    case FieldSpec::Kind::Prime:
      return s.residue();
    case FieldSpec::Kind::Rationals:
      return s.rational().to_string();
    case FieldSpec::Kind::Cyclotomic: {
      Json coeffs = Json::array();
      for (const auto& c : s.coefficients()) coeffs.push_back(c.to_string());
      return Json{{"zeta_n", s.field().parameter()}, {"coeffs", coeffs}};
    }
  }
  return nullptr;
}

Scalar scalar_from_json(const Json& j, FieldSpec f, const std::string& where) {
  try {
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<std::int64_t>());
    if (j.is_string()) return Scalar::from_rational(f, Rational::parse(j.get<std::string>()));
    if (j.is_object() && f.kind() == FieldSpec::Kind::Cyclotomic) {
      const auto n = get_as<std::uint32_t>(need(j, "zeta_n", where), where + "/zeta_n");
      if (n != f.parameter()) fail(where + "/zeta_n", "does not match field " + f.to_string());
      std::vector<Rational> coeffs;
      const auto& c = need(j, "coeffs", where);
      for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& e = c[i];
        coeffs.push_back(e.is_string() ? Rational::parse(e.get<std::string>()) : Rational(get_as<std::int64_t>(e, where)));
      }
      return Scalar::from_power_basis(f, coeffs);
    }
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "not a scalar of " + f.to_string());
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, FieldSpec f, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string w = where + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols) fail(w, "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], f, w + "/" + std::to_string(c));
  }
  return m;
}

// ---- groups and actions ---------------------------------------------------------

Json group_to_json(const FiniteGroup& g) {
  Json j{{"order", g.order()}, {"labels", g.labels()}, {"table", g.table()}};
  if (!g.factor_orders().empty()) {
    j["cyclic"] = g.factor_orders();
    std::vector<std::string> names;
    for (auto gen : g.generators()) names.push_back(g.label(gen));
    j["names"] = names;
  }
  return j;
}

GroupPtr group_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected a group object");
  GroupPtr g;
  try {
    if (j.contains("cyclic")) {
      auto orders = get_as<std::vector<std::uint32_t>>(j["cyclic"], where + "/cyclic");
      std::vector<std::string> names;
      if (j.contains("names")) names = get_as<std::vector<std::string>>(j["names"], where + "/names");
      g = cyclic_product(orders, names);
    } else if (j.contains("symmetric")) {
      g = std::make_shared<const FiniteGroup>(make_symmetric_group(get_as<std::size_t>(j["symmetric"], where + "/symmetric")));
    } else if (j.contains("dihedral")) {
      g = std::make_shared<const FiniteGroup>(make_dihedral_group(get_as<std::size_t>(j["dihedral"], where + "/dihedral")));
    } else {
      auto labels = get_as<std::vector<std::string>>(need(j, "labels", where), where + "/labels");
      auto table = get_as<std::vector<std::vector<std::size_t>>>(need(j, "table", where), where + "/table");
      return std::make_shared<const FiniteGroup>(std::move(labels), std::move(table));
    }
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
  if (j.contains("table") && get_as<std::vector<std::vector<std::size_t>>>(j["table"], where + "/table") != g->table())
    fail(where + "/table", "does not match the named group");
  return g;
}

GroupPtr parse_group_spec(const std::string& spec) {
  auto numbers = [&](const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    return out;
  };
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
    if (kind == "cyclic") return cyclic_product(numbers(rest));
    if (kind == "symmetric") return std::make_shared<const FiniteGroup>(make_symmetric_group(std::stoul(rest)));
    if (kind == "dihedral") return std::make_shared<const FiniteGroup>(make_dihedral_group(std::stoul(rest)));
  }
  return group_from_json(read_json_file(spec), spec);
}

Json action_to_json(const GroupAction& a) {
  const auto& g = *a.acting();
  const auto& l = *a.target();
  Json perms = Json::object();
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<std::string> img;
    for (std::size_t y = 0; y < l.order(); ++y) img.push_back(l.label(a.act(x, y)));
    perms[g.label(x)] = img;
  }
  return Json{{"g", group_to_json(g)}, {"l", group_to_json(l)}, {"perms", perms}};
}

GroupAction action_from_json(const Json& j, const std::string& where) {
  auto g = group_from_json(need(j, "g", where), where + "/g");
  auto l = group_from_json(need(j, "l", where), where + "/l");
  std::vector<std::vector<std::size_t>> perms(g->order());
  for (std::size_t x = 0; x < g->order(); ++x) {
    perms[x].resize(l->order());
    for (std::size_t y = 0; y < l->order(); ++y) perms[x][y] = y;
  }
  if (j.contains("perms")) {
    for (const auto& [key, img] : j["perms"].items()) {
      const std::string w = where + "/perms/" + key;
      const std::size_t x = label_index(*g, key, w);
      if (!img.is_array() || img.size() != l->order()) fail(w, "expected one image per element of L");
      for (std::size_t y = 0; y < l->order(); ++y) perms[x][y] = label_index(*l, img[y], w + "/" + std::to_string(y));
    }
  }
  try {
    return GroupAction(g, l, perms);
  } catch (const Error& e) {
    fail(where + "/perms", e.what());
  }
}

// ---- cocycles -------------------------------------------------------------------

Json cocycle_to_json(const CocycleSlice& c) {
  const auto& l = *c.group();
  Json out = Json::object();
  for (std::size_t a = 0; a < l.order(); ++a)
    for (std::size_t b = 0; b < l.order(); ++b)
      if (!c(a, b).is_one()) out[l.label(a)][l.label(b)] = scalar_to_json(c(a, b));
  return out;
}

CocycleSlice cocycle_from_json(const Json& j, GroupPtr l, FieldSpec f, const std::string& where) {
  if (!j.is_object()) fail(where, "expected {l: {m: scalar}}");
  const std::size_t n = l->order();
  std::vector<Scalar> vals(n * n, Scalar::one(f));
  for (const auto& [ka, row] : j.items()) {
    const std::size_t a = label_index(*l, ka, where + "/" + ka);
    if (!row.is_object()) fail(where + "/" + ka, "expected {m: scalar}");
    for (const auto& [kb, v] : row.items()) {
      const std::string w = where + "/" + ka + "/" + kb;
      vals[a * n + label_index(*l, kb, w)] = scalar_from_json(v, f, w);
    }
  }
  return CocycleSlice(std::move(l), f, std::move(vals));
}

Json sigma_to_json(const SigmaCocycle& s) {
  const auto& g = *s.action.acting();
  Json out = Json::object();
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!s.slices[x].is_trivial()) out[g.label(x)] = cocycle_to_json(s.slices[x]);
  return out;
}

SigmaCocycle sigma_from_json(const Json& j, const GroupAction& a, FieldSpec f, const std::string& where) {
  SigmaCocycle s = SigmaCocycle::trivial(a, f);
  if (!j.is_object()) fail(where, "expected {x: cocycle}");
  for (const auto& [kx, c] : j.items())
    s.slices[label_index(*a.acting(), kx, where + "/" + kx)] = cocycle_from_json(c, a.target(), f, where + "/" + kx);
  return s;
}

Json tau_to_json(const TauCocycle& t) {
  const auto& g = *t.action.acting();
  const auto& l = *t.action.target();
  Json out = Json::object();
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      for (std::size_t a = 0; a < l.order(); ++a)
        if (!t(x, y, a).is_one()) out[g.label(x)][g.label(y)][l.label(a)] = scalar_to_json(t(x, y, a));
  return out;
}

TauCocycle tau_from_json(const Json& j, const GroupAction& a, FieldSpec f, const std::string& where) {
  TauCocycle t = TauCocycle::trivial(a, f);
  if (!j.is_object()) fail(where, "expected {x: {y: {l: scalar}}}");
  const auto& g = *a.acting();
  for (const auto& [kx, jy] : j.items()) {
    const std::size_t x = label_index(g, kx, where + "/" + kx);
    for (const auto& [ky, jl] : jy.items()) {
      const std::size_t y = label_index(g, ky, where + "/" + kx + "/" + ky);
      for (const auto& [kl, v] : jl.items()) {
        const std::string w = where + "/" + kx + "/" + ky + "/" + kl;
        t.at(x, y, label_index(*a.target(), kl, w)) = scalar_from_json(v, f, w);
      }
    }
  }
  return t;
}

// ---- algebras ------------------------------------------------------------------

AlgebraPtr build_from_recipe(const Json& r, const std::string& where) {
  const auto type = get_as<std::string>(need(r, "type", where), where + "/type");
  BuildOptions opts;
  if (r.contains("verify")) opts.verify = get_as<bool>(r["verify"], where + "/verify");
  auto uint_key = [&](const char* key) { return get_as<std::uint32_t>(need(r, key, where), where + "/" + key); };
  AlgebraPtr a;
  try {
    if (type == "tensor") {
      a = tensor_algebra(build_from_recipe(need(r, "left", where), where + "/left"),
                         build_from_recipe(need(r, "right", where), where + "/right"), opts);
    } else if (type == "smash" && r.contains("preset")) {
      const auto preset = get_as<std::string>(r["preset"], where + "/preset");
      if (preset != "shift") fail(where + "/preset", "unknown smash preset '" + preset + "' (known: shift)");
      a = shift_smash(uint_key("m"), field_of(r, where), opts).k;
    } else if (type == "smash") {
      auto base = build_from_recipe(need(r, "base", where), where + "/base");
      auto g = group_from_json(need(r, "group", where), where + "/group");
      const auto& mats = need(r, "action", where);
      if (!mats.is_array() || mats.size() != g->order()) fail(where + "/action", "expected one matrix per group element");
      std::vector<Matrix> act;
      for (std::size_t i = 0; i < mats.size(); ++i)
        act.push_back(matrix_from_json(mats[i], base->field(), where + "/action/" + std::to_string(i)));
      a = smash_coproduct(base, g, std::move(act), opts);
    } else if (type == "crossed" && r.contains("preset")) {
      const auto preset = get_as<std::string>(r["preset"], where + "/preset");
      if (preset != "klein") fail(where + "/preset", "unknown crossed preset '" + preset + "' (known: klein)");
      auto d = klein_crossed_data(field_of(r, where));
      a = crossed_coproduct(d.sigma, d.tau, opts);
    } else if (type == "crossed") {
      const FieldSpec f = field_of(r, where);
      auto act = action_from_json(need(r, "action", where), where + "/action");
      auto sigma = r.contains("sigma") ? sigma_from_json(r["sigma"], act, f, where + "/sigma") : SigmaCocycle::trivial(act, f);
      auto tau = r.contains("tau") ? tau_from_json(r["tau"], act, f, where + "/tau") : TauCocycle::trivial(act, f);
      a = crossed_coproduct(sigma, tau, opts);
    } else {
      const FieldSpec f = field_of(r, where);
      if (type == "group-algebra") a = group_algebra(group_from_json(need(r, "group", where), where + "/group"), f, opts);
      else if (type == "dual-group") a = dual_group_algebra(group_from_json(need(r, "group", where), where + "/group"), f, opts);
      else if (type == "twisted") {
        auto g = group_from_json(need(r, "group", where), where + "/group");
        auto c = r.contains("cocycle") ? cocycle_from_json(r["cocycle"], g, f, where + "/cocycle") : CocycleSlice::trivial(g, f);
        a = twisted_group_algebra(c);
      } else if (type == "taft") a = taft_algebra(uint_key("n"), f, opts);
      else if (type == "qea") a = quantum_elem_abelian(uint_key("n"), uint_key("m"), f, opts);
      else if (type == "truncated") a = truncated_polynomial_algebra(uint_key("n"), f);
      else fail(where + "/type", "unknown algebra type '" + type + "'");
    }
  } catch (const FormatError&) {
    throw;
  } catch (const CompatibilityError&) {
    throw;
  } catch (const AxiomFailure&) {
    throw;
  } catch (const InvalidCocycle&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
  Json stored = r;
  stored.erase("verify");
  a->set_recipe(stored.dump());
  return a;
}

Json algebra_to_json(const BasisAlgebra& a) {
  const std::size_t n = a.dim();
  Json mult = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : a.product(i, j).terms) mult.push_back({i, j, k, scalar_to_json(c)});
  Json gens = Json::array();
  for (const auto& g : a.generators()) gens.push_back(sparse_to_json(g));
  Json out{{"format", "hopfkit-algebra"}, {"name", a.name()},      {"field", a.field().to_string()},
           {"dim", n},                    {"labels", a.labels()},  {"mult", mult},
           {"unit", sparse_to_json(a.unit())}, {"generators", gens}};
  if (a.hopf()) {
    const auto& h = *a.hopf();
    Json comul = Json::array(), antipode = Json::array(), counit = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [idx, c] : h.comul[i].terms) comul.push_back({i, idx / n, idx % n, scalar_to_json(c)});
      for (const auto& [k, c] : h.antipode[i].terms) antipode.push_back({i, k, scalar_to_json(c)});
      counit.push_back(scalar_to_json(h.counit[i]));
    }
    out["hopf"] = Json{{"comul", comul}, {"counit", counit}, {"antipode", antipode}};
  }
  if (auto r = recipe_of(a)) out["recipe"] = *r;
  return out;
}

AlgebraPtr algebra_from_json(const Json& j, const std::string& where) {
  if (j.contains("recipe")) {
    auto a = build_from_recipe(j["recipe"], where + "/recipe");
    if (j.contains("mult")) {
      auto raw = j;
      raw.erase("recipe");
      auto b = algebra_from_json(raw, where);
      if (!same_algebra(*a, *b)) fail(where + "/mult", "structure constants do not match the recipe");
    }
    return a;
  }
  const FieldSpec f = field_of(j, where);
  const auto n = get_as<std::size_t>(need(j, "dim", where), where + "/dim");
  auto labels = get_as<std::vector<std::string>>(need(j, "labels", where), where + "/labels");
  if (labels.size() != n) fail(where + "/labels", "expected " + std::to_string(n) + " labels");
  std::vector<SparseVec> products(n * n);
  const auto& mult = need(j, "mult", where);
  for (std::size_t t = 0; t < mult.size(); ++t) {
    const std::string w = where + "/mult/" + std::to_string(t);
    if (!mult[t].is_array() || mult[t].size() != 4) fail(w, "expected [i, j, k, scalar]");
    const auto i = get_as<std::size_t>(mult[t][0], w), jj = get_as<std::size_t>(mult[t][1], w),
               k = get_as<std::size_t>(mult[t][2], w);
    if (i >= n || jj >= n || k >= n) fail(w, "index out of range");
    products[i * n + jj].terms.emplace_back(k, scalar_from_json(mult[t][3], f, w + "/3"));
  }
  SparseVec unit = sparse_from_json(need(j, "unit", where), f, n, where + "/unit");
  std::vector<SparseVec> gens;
  if (j.contains("generators"))
    for (std::size_t i = 0; i < j["generators"].size(); ++i)
      gens.push_back(sparse_from_json(j["generators"][i], f, n, where + "/generators/" + std::to_string(i)));
  auto a = std::make_shared<BasisAlgebra>(f, std::move(labels), std::move(products), std::move(unit), std::move(gens));
  if (j.contains("name")) a->set_name(get_as<std::string>(j["name"], where + "/name"));
  if (j.contains("hopf")) {
    const auto& h = j["hopf"];
    const std::string w = where + "/hopf";
    HopfData d;
    d.comul.resize(n);
    d.antipode.resize(n);
    for (const auto& e : need(h, "comul", w)) {
      if (!e.is_array() || e.size() != 4) fail(w + "/comul", "expected [i, j, k, scalar]");
      const auto i = get_as<std::size_t>(e[0], w), a1 = get_as<std::size_t>(e[1], w), a2 = get_as<std::size_t>(e[2], w);
      if (i >= n || a1 >= n || a2 >= n) fail(w + "/comul", "index out of range");
      d.comul[i].terms.emplace_back(a1 * n + a2, scalar_from_json(e[3], f, w + "/comul"));
    }
    for (const auto& e : need(h, "antipode", w)) {
      if (!e.is_array() || e.size() != 3) fail(w + "/antipode", "expected [i, k, scalar]");
      const auto i = get_as<std::size_t>(e[0], w), k = get_as<std::size_t>(e[1], w);
      if (i >= n || k >= n) fail(w + "/antipode", "index out of range");
      d.antipode[i].terms.emplace_back(k, scalar_from_json(e[2], f, w + "/antipode"));
    }
    const auto& cu = need(h, "counit", w);
    if (!cu.is_array() || cu.size() != n) fail(w + "/counit", "expected one scalar per basis element");
    for (std::size_t i = 0; i < n; ++i) d.counit.push_back(scalar_from_json(cu[i], f, w + "/counit/" + std::to_string(i)));
    for (auto& v : d.comul) v.normalize();
    for (auto& v : d.antipode) v.normalize();
    a->set_hopf(std::move(d));
  }
  return a;
}

// ---- modules -------------------------------------------------------------------

Json module_to_json(const AlgModule& m) {
  Json alg;
  if (auto r = recipe_of(*m.algebra)) alg = Json{{"recipe", *r}};
  else alg = algebra_to_json(*m.algebra);
  Json action = Json::array();
  for (const auto& a : m.action) action.push_back(matrix_to_json(a));
  return Json{{"format", "hopfkit-module"}, {"name", m.name}, {"dim", m.dim()}, {"algebra", alg}, {"action", action}};
}

AlgModule module_from_json(const Json& j, const std::string& where) {
  const auto& aj = need(j, "algebra", where);
  AlgebraPtr a = aj.contains("file") ? algebra_from_json(read_json_file(aj["file"].get<std::string>()), aj["file"])
                                     : algebra_from_json(aj, where + "/algebra");
  return module_from_json(j, std::move(a), where);
}

AlgModule module_from_json(const Json& j, AlgebraPtr a, const std::string& where) {
  const auto dim = get_as<std::size_t>(need(j, "dim", where), where + "/dim");
  const auto& act = need(j, "action", where);
  if (!act.is_array() || act.size() != a->dim()) fail(where + "/action", "expected one matrix per basis element");
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < act.size(); ++i) {
    const std::string w = where + "/action/" + std::to_string(i);
    Matrix m = dim == 0 ? Matrix(a->field(), 0, 0) : matrix_from_json(act[i], a->field(), w);
    if (m.rows() != dim || m.cols() != dim) fail(w, "expected a " + std::to_string(dim) + " x " + std::to_string(dim) + " matrix");
    mats.push_back(std::move(m));
  }
  std::string name = j.contains("name") ? get_as<std::string>(j["name"], where + "/name") : std::string();
  try {
    return make_module(std::move(a), std::move(mats), name);
  } catch (const AxiomFailure& e) {
    fail(where + "/action", e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(1) << "\n";
}

SparseVec parse_element(const BasisAlgebra& a, const std::string& text) {
  const FieldSpec f = a.field();
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw FormatError("empty element");
  SparseVec out;
  std::size_t pos = 0;
  while (pos < t.size()) {
    bool negative = false;
    if (t[pos] == '+' || t[pos] == '-') negative = t[pos++] == '-';
    std::size_t end = pos;
    while (end < t.size() && t[end] != '+' && t[end] != '-') ++end;
    std::string term = t.substr(pos, end - pos);
    if (term.empty()) throw FormatError("element '" + text + "': empty term at offset " + std::to_string(pos));
    Scalar coeff = Scalar::one(f);
    SparseVec basis = a.unit();
    const auto star = term.find('*');
    std::string label = term;
    if (star != std::string::npos) {
      coeff = Scalar::from_rational(f, Rational::parse(term.substr(0, star)));
      label = term.substr(star + 1);
    }
    bool found = false;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.label(i) == label) {
        basis = SparseVec::single(i, Scalar::one(f));
        found = true;
      }
    if (!found) {
      try {
        coeff *= Scalar::from_rational(f, Rational::parse(label));
      } catch (const Error&) {
        throw FormatError("element '" + text + "': unknown basis label '" + label + "'");
      }
    }
    if (negative) coeff = -coeff;
    out = sum(out, scaled(basis, coeff));
    pos = end;
  }
  return out;
}

}  // namespace hopfkit

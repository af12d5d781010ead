#include "hopfkit/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hopfkit {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error("group must be nonempty");
  if (table.size() != n) throw Error("group table has wrong number of rows");
  table_.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw Error("group table row " + std::to_string(a) + " has wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) throw Error("group table entry out of range");
      table_.push_back(table[a][b]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!label_index_.emplace(labels_[i], i).second) throw Error("duplicate group label '" + labels_[i] + "'");
  }
  // identity
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error("group table has no identity");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    if (inverse_[a] == n) throw Error("element '" + labels_[a] + "' has no inverse");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error("group table is not associative at (" + labels_[a] + "," + labels_[b] + "," + labels_[c] + ")");
  // greedy generating set
  std::set<std::size_t> span{identity_};
  auto close = [&](std::set<std::size_t> s) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::size_t> cur(s.begin(), s.end());
      for (auto x : cur)
        for (auto y : cur)
          if (s.insert(mul(x, y)).second) grew = true;
    }
    return s;
  };
  for (std::size_t a = 0; a < n && span.size() < n; ++a) {
    if (span.count(a)) continue;
    generators_.push_back(a);
    span.insert(a);
    span = close(span);
  }
}

std::size_t FiniteGroup::power(std::size_t a, std::int64_t k) const {
  if (k < 0) return power(inv(a), -k);
  std::size_t r = identity_;
  for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1, x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (std::size_t a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::size_t FiniteGroup::index_of(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) throw Error("unknown group element '" + label + "'");
  return it->second;
}

std::vector<std::vector<std::size_t>> FiniteGroup::table() const {
  std::vector<std::vector<std::size_t>> t(order(), std::vector<std::size_t>(order()));
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < order(); ++b) t[a][b] = mul(a, b);
  return t;
}

std::vector<std::uint32_t> FiniteGroup::coordinates(std::size_t element) const {
  if (factor_orders_.empty()) throw Error("group is not a product of cyclic groups");
  std::vector<std::uint32_t> c(factor_orders_.size());
  for (std::size_t i = factor_orders_.size(); i-- > 0;) {
    c[i] = static_cast<std::uint32_t>(element % factor_orders_[i]);
    element /= factor_orders_[i];
  }
  return c;
}

std::size_t FiniteGroup::from_coordinates(const std::vector<std::uint32_t>& coords) const {
  if (coords.size() != factor_orders_.size()) throw Error("coordinate vector has wrong length");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) idx = idx * factor_orders_[i] + coords[i] % factor_orders_[i];
  return idx;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || (a && b && *a == *b); }

FiniteGroup make_product_of_cyclics(const std::vector<std::uint32_t>& orders, const std::vector<std::string>& names) {
  if (orders.empty()) throw Error("make_product_of_cyclics requires at least one factor");
  for (auto o : orders)
    if (o == 0) throw Error("cyclic factor order must be positive");
  std::vector<std::string> gen_names = names;
  if (gen_names.empty())
    for (std::size_t i = 0; i < orders.size(); ++i) gen_names.push_back(std::string(1, static_cast<char>('a' + i)));
  if (gen_names.size() != orders.size()) throw Error("generator name count does not match factor count");
  std::size_t n = 1;
  for (auto o : orders) n *= o;
  auto coords_of = [&](std::size_t e) {
    std::vector<std::uint32_t> c(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      c[i] = static_cast<std::uint32_t>(e % orders[i]);
      e /= orders[i];
    }
    return c;
  };
  std::vector<std::string> labels(n);
  for (std::size_t e = 0; e < n; ++e) {
    auto c = coords_of(e);
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      s += gen_names[i];
      if (c[i] > 1) s += "^" + std::to_string(c[i]);
    }
    labels[e] = s.empty() ? "1" : s;
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    auto ca = coords_of(a);
    for (std::size_t b = 0; b < n; ++b) {
      auto cb = coords_of(b);
      std::size_t idx = 0;
      for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + (ca[i] + cb[i]) % orders[i];
      table[a][b] = idx;
    }
  }
  FiniteGroup g(std::move(labels), std::move(table));
  g.factor_orders_ = orders;
  g.generators_.clear();
  std::size_t stride = 1;
  std::vector<std::size_t> unit(orders.size());
  for (std::size_t i = orders.size(); i-- > 0;) {
    unit[i] = stride;
    stride *= orders[i];
  }
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] > 1) g.generators_.push_back(unit[i]);
  return g;
}

FiniteGroup make_symmetric_group(std::size_t n) {
  if (n == 0 || n > 5) throw Error("make_symmetric_group supports 1 <= n <= 5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::vector<std::string> labels;
  for (const auto& q : perms) {
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) s += std::to_string(q[i] + 1);
    labels.push_back(s + "]");
  }
  std::vector<std::vector<std::size_t>> table(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];  // a after b
      table[a][b] = index.at(c);
    }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup make_dihedral_group(std::size_t n) {
  if (n < 1) throw Error("dihedral group needs n >= 1");
  const std::size_t order = 2 * n;
  std::vector<std::string> labels(order);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::string s;
      if (i) s += i == 1 ? "r" : "r^" + std::to_string(i);
      if (j) s += "s";
      labels[j * n + i] = s.empty() ? "1" : s;
    }
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
      // r^i1 s^j1 r^i2 s^j2 = r^(i1 +- i2) s^(j1+j2)
      const std::size_t i = j1 ? (i1 + n - i2) % n : (i1 + i2) % n;
      table[a][b] = ((j1 + j2) % 2) * n + i;
    }
  return FiniteGroup(std::move(labels), std::move(table));
}

namespace {

std::vector<std::size_t> closure(const FiniteGroup& g, std::vector<std::size_t> gens) {
  std::set<std::size_t> s{g.identity()};
  std::vector<std::size_t> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto x : frontier)
      for (auto y : gens) {
        auto z = g.mul(x, y);
        if (s.insert(z).second) next.push_back(z);
      }
    frontier = std::move(next);
  }
  return {s.begin(), s.end()};
}

Subgroup make_subgroup(const FiniteGroup& parent, std::vector<std::size_t> elements) {
  std::sort(elements.begin(), elements.end());
  // identity first
  auto it = std::find(elements.begin(), elements.end(), parent.identity());
  std::rotate(elements.begin(), it, it + 1);
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < elements.size(); ++i) local[elements[i]] = i;
  std::vector<std::string> labels;
  for (auto e : elements) labels.push_back(parent.label(e));
  std::vector<std::vector<std::size_t>> table(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b) {
      auto itp = local.find(parent.mul(elements[a], elements[b]));
      if (itp == local.end()) throw Error("subset is not closed under multiplication");
      table[a][b] = itp->second;
    }
  return {std::make_shared<const FiniteGroup>(std::move(labels), std::move(table)), std::move(elements)};
}

}  // namespace

Subgroup subgroup_generated(const FiniteGroup& parent, const std::vector<std::size_t>& elements) {
  return make_subgroup(parent, closure(parent, elements));
}

Subgroup coordinate_subgroup(const FiniteGroup& parent, const std::vector<std::size_t>& coords) {
  const auto& orders = parent.factor_orders();
  if (orders.empty()) throw Error("coordinate_subgroup requires a product of cyclic groups");
  std::vector<std::uint32_t> sub_orders;
  std::vector<std::string> names;
  for (auto c : coords) {
    if (c >= orders.size()) throw Error("coordinate out of range");
    sub_orders.push_back(orders[c]);
  }
  // generator names from the parent's unit-vector labels
  for (auto c : coords) {
    std::vector<std::uint32_t> unit(orders.size(), 0);
    unit[c] = 1;
    names.push_back(parent.label(parent.from_coordinates(unit)));
  }
  auto sub = std::make_shared<FiniteGroup>(make_product_of_cyclics(sub_orders, names));
  std::vector<std::size_t> embedding(sub->order());
  for (std::size_t e = 0; e < sub->order(); ++e) {
    auto sc = sub->coordinates(e);
    std::vector<std::uint32_t> pc(orders.size(), 0);
    for (std::size_t i = 0; i < coords.size(); ++i) pc[coords[i]] = sc[i];
    embedding[e] = parent.from_coordinates(pc);
  }
  return {std::move(sub), std::move(embedding)};
}

Subgroup sylow_subgroup(const FiniteGroup& parent, std::uint32_t p) {
  std::size_t target = 1, n = parent.order();
  while (n % p == 0) {
    target *= p;
    n /= p;
  }
  std::vector<std::size_t> current{parent.identity()};
  while (current.size() < target) {
    std::set<std::size_t> cur(current.begin(), current.end());
    bool extended = false;
    for (std::size_t g = 0; g < parent.order() && !extended; ++g) {
      if (cur.count(g)) continue;
      if (!cur.count(parent.power(g, p))) continue;
      bool normalizes = true;
      for (auto h : current)
        if (!cur.count(parent.mul(parent.mul(g, h), parent.inv(g)))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      std::vector<std::size_t> gens = current;
      gens.push_back(g);
      current = closure(parent, gens);
      extended = true;
    }
    if (!extended) throw Error("failed to extend p-subgroup (internal error)");
  }
  return make_subgroup(parent, current);
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    std::set<std::size_t> cls;
    for (std::size_t x = 0; x < g.order(); ++x) cls.insert(g.mul(g.mul(x, a), g.inv(x)));
    for (auto c : cls) seen[c] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

GroupAction::GroupAction(GroupPtr acting, GroupPtr target, std::vector<std::vector<std::size_t>> perms)
    : acting_(std::move(acting)), target_(std::move(target)), perms_(std::move(perms)) {
  const auto& g = *acting_;
  const auto& l = *target_;
  if (perms_.size() != g.order()) throw Error("action needs one permutation per acting element");
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto& p = perms_[x];
    if (p.size() != l.order()) throw Error("action permutation has wrong length");
    std::vector<bool> hit(l.order(), false);
    for (auto v : p) {
      if (v >= l.order() || hit[v]) throw Error("action of '" + g.label(x) + "' is not a permutation");
      hit[v] = true;
    }
    for (std::size_t a = 0; a < l.order(); ++a)
      for (std::size_t b = 0; b < l.order(); ++b)
        if (p[l.mul(a, b)] != l.mul(p[a], p[b]))
          throw Error("action of '" + g.label(x) + "' is not an automorphism at (" + l.label(a) + "," +
                      l.label(b) + ")");
  }
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      for (std::size_t a = 0; a < l.order(); ++a)
        if (perms_[g.mul(x, y)][a] != perms_[x][perms_[y][a]])
          throw Error("action is not a homomorphism at (" + g.label(x) + "," + g.label(y) + ")");
}

GroupAction GroupAction::trivial(GroupPtr acting, GroupPtr target) {
  std::vector<std::size_t> id(target->order());
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<std::size_t>> perms(acting->order(), id);
  return GroupAction(std::move(acting), std::move(target), std::move(perms));
}

GroupAction GroupAction::from_generators(GroupPtr acting, GroupPtr target,
                                         const std::map<std::size_t, std::vector<std::size_t>>& generator_perms) {
  const auto& g = *acting;
  const std::size_t n = target->order();
  std::vector<std::vector<std::size_t>> perms(g.order());
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  perms[g.identity()] = id;
  std::vector<std::size_t> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto x : frontier)
      for (const auto& [s, ps] : generator_perms) {
        if (ps.size() != n) throw Error("generator permutation has wrong length");
        const std::size_t xs = g.mul(x, s);
        std::vector<std::size_t> comp(n);
        for (std::size_t a = 0; a < n; ++a) comp[a] = perms[x][ps[a]];
        if (perms[xs].empty()) {
          perms[xs] = std::move(comp);
          next.push_back(xs);
        } else if (perms[xs] != comp) {
          throw Error("generator images do not define a homomorphism");
        }
      }
    frontier = std::move(next);
  }
  for (const auto& p : perms)
    if (p.empty()) throw Error("listed generators do not generate the acting group");
  return GroupAction(std::move(acting), std::move(target), std::move(perms));
}

std::vector<std::size_t> coordinate_permutation(const FiniteGroup& l, const std::vector<std::size_t>& perm) {
  const auto& orders = l.factor_orders();
  if (orders.empty() || perm.size() != orders.size()) throw Error("coordinate_permutation needs a product of cyclics");
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] >= orders.size() || orders[perm[i]] != orders[i])
      throw Error("coordinate permutation must preserve factor orders");
  std::vector<std::size_t> out(l.order());
  for (std::size_t e = 0; e < l.order(); ++e) {
    auto c = l.coordinates(e);
    std::vector<std::uint32_t> d(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) d[perm[i]] = c[i];
    out[e] = l.from_coordinates(d);
  }
  return out;
}

}  // namespace hopfkit

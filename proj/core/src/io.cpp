#include "taucat/io.hpp"

#include <sstream>
#include <string>

#include "taucat/error.hpp"

namespace taucat::io {

namespace {

template <typename Fn>
auto guard(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    fail(std::string("malformed ") + what + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const json& j) {
  if (!j.is_number_integer()) fail("expected an integer, got " + j.dump());
  return j.get<int>();
}

std::vector<int> int_list(const json& j) {
  if (!j.is_array()) fail("expected an array, got " + j.dump());
  std::vector<int> out;
  for (const auto& v : j) out.push_back(as_int(v));
  return out;
}

std::vector<Scalar> scalars(const json& j, const PrimeField& f) {
  if (!j.is_array()) fail("expected an array of scalars, got " + j.dump());
  std::vector<Scalar> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail("expected an integer scalar, got " + v.dump());
    out.push_back(f.reduce(v.get<std::int64_t>()));
  }
  return out;
}

template <int N>
std::string key_of(const std::array<int, N>& args) {
  std::string s;
  for (int i = 0; i < N; ++i) s += (i ? "," : "") + std::to_string(args[i]);
  return s;
}

template <int N>
std::array<int, N> parse_key(const std::string& key, const FiniteGroup& H) {
  std::array<int, N> args{};
  std::stringstream ss(key);
  std::string part;
  int i = 0;
  while (N > 0 && std::getline(ss, part, ',')) {
    if (i >= N) fail("cochain key \"" + key + "\" has too many arguments");
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      fail("cochain key \"" + key + "\" is not a list of integers");
    }
    if (used != part.size() || !H.contains(v)) fail("cochain key \"" + key + "\" is out of range");
    args[i++] = v;
  }
  if (i != N) fail("cochain key \"" + key + "\" has the wrong arity");
  return args;
}

template <int N>
void for_each_args(int order, std::array<int, N>& args, int pos, const auto& fn) {
  if (pos == N) {
    fn(args);
    return;
  }
  for (int a = 0; a < order; ++a) {
    args[pos] = a;
    for_each_args<N>(order, args, pos + 1, fn);
  }
}

}  // namespace

json to_json(const FiniteGroup& g) { return {{"order", g.order()}, {"table", g.table()}}; }

FiniteGroup group_from_json(const json& j) {
  return guard("group", [&] {
    if (j.is_object() && j.contains("cyclic")) {
      const int n = as_int(j.at("cyclic"));
      if (n < 1) fail("cyclic order must be positive");
      return FiniteGroup::cyclic(n);
    }
    const int n = as_int(field(j, "order"));
    const json& t = field(j, "table");
    if (!t.is_array()) fail("group table must be an array");
    std::vector<std::vector<int>> table;
    for (const auto& row : t) table.push_back(int_list(row));
    if (static_cast<int>(table.size()) != n) fail("group table does not have \"order\" rows");
    return FiniteGroup::from_table(table);
  });
}

json to_json(const GroupHom& h) {
  return {{"source", to_json(h.source())}, {"target", to_json(h.target())}, {"map", h.map()}};
}

GroupHom hom_from_json(const json& j) {
  return guard("hom", [&] {
    return GroupHom(group_from_json(field(j, "source")), group_from_json(field(j, "target")),
                    int_list(field(j, "map")));
  });
}

template <int N>
json to_json(const Cochain<N>& c) {
  json values = json::object();
  std::array<int, N> args{};
  for_each_args<N>(c.group().order(), args, 0, [&](const std::array<int, N>& a) {
    const UnitFunction f = c.at(a);
    for (Scalar v : f)
      if (v != 1) {
        values[key_of<N>(a)] = f;
        break;
      }
  });
  return {{"subgroup", c.space().subgroup().elements()}, {"values", values}};
}

template <int N>
Cochain<N> cochain_from_json(const json& j, const FiniteGroup& H, const PrimeField& f) {
  return guard("cochain", [&] {
    const std::vector<int> elems = int_list(field(j, "subgroup"));
    for (int e : elems)
      if (!H.contains(e)) fail("subgroup element out of range");
    const CosetSpace space(Subgroup::generated(H, elems));
    if (space.subgroup().order() != static_cast<int>(elems.size()))
      fail("\"subgroup\" is not closed under the group law");
    Cochain<N> c(space, f);
    const json& values = j.contains("values") ? j.at("values") : json::object();
    if (!values.is_object()) fail("\"values\" must be an object");
    for (const auto& [key, v] : values.items()) {
      const UnitFunction u = scalars(v, f);
      if (static_cast<int>(u.size()) != space.size()) fail("cochain value \"" + key + "\" has the wrong length");
      c.set(parse_key<N>(key, H), u);
    }
    return c;
  });
}

template json to_json<0>(const Cochain<0>&);
template json to_json<1>(const Cochain<1>&);
template json to_json<2>(const Cochain<2>&);
template Cochain<0> cochain_from_json<0>(const json&, const FiniteGroup&, const PrimeField&);
template Cochain<1> cochain_from_json<1>(const json&, const FiniteGroup&, const PrimeField&);
template Cochain<2> cochain_from_json<2>(const json&, const FiniteGroup&, const PrimeField&);

json to_json(const GradedCategory& c) {
  json objects = json::array(), homs = json::array(), compose = json::array(), ids = json::array();
  for (int x = 0; x < c.object_count(); ++x) objects.push_back({{"deg", c.degree(x)}});
  for (int x = 0; x < c.object_count(); ++x)
    for (const auto& [y, h] : c.out_homs(x)) homs.push_back({{"src", x}, {"dst", y}, {"h", h}, {"rank", c.rank(x, y, h)}});
  for (const auto& [key, t] : c.compositions()) {
    const auto& [s, m, d, h, h2] = key;
    const int r1 = c.rank(s, m, h), r2 = c.rank(m, d, h2), r3 = c.rank(s, d, c.H().mul(h2, h));
    json tensor = json::array();
    for (int i = 0; i < r1; ++i) {
      json inner = json::array();
      for (int jj = 0; jj < r2; ++jj) {
        json row = json::array();
        for (int k = 0; k < r3; ++k) row.push_back(t[(static_cast<size_t>(k) * r2 + jj) * r1 + i]);
        inner.push_back(row);
      }
      tensor.push_back(inner);
    }
    compose.push_back({{"src", s}, {"mid", m}, {"dst", d}, {"h", h}, {"h2", h2}, {"tensor", tensor}});
  }
  for (int x = 0; x < c.object_count(); ++x) ids.push_back(c.identity_coords(x));
  return {{"tau", to_json(c.tau())}, {"p", c.field().p()}, {"objects", objects},
          {"homs", homs},           {"compose", compose},  {"identities", ids}};
}

GradedCategory category_from_json(const json& j) {
  return guard("category", [&] {
    const GroupHom tau = hom_from_json(field(j, "tau"));
    const PrimeField f(as_int(field(j, "p")));
    GradedCategory c(tau, f);
    const FiniteGroup& H = tau.source();
    for (const auto& o : field(j, "objects")) {
      const int d = as_int(field(o, "deg"));
      if (!tau.target().contains(d)) fail("object degree out of range");
      c.add_object(d);
    }
    const int n = c.object_count();
    auto object = [&](const json& o, const char* key) {
      const int x = as_int(field(o, key));
      if (x < 0 || x >= n) fail(std::string("\"") + key + "\" is not an object");
      return x;
    };
    auto element = [&](const json& o, const char* key) {
      const int h = as_int(field(o, key));
      if (!H.contains(h)) fail(std::string("\"") + key + "\" is not an element of H");
      return h;
    };
    for (const auto& hm : field(j, "homs")) {
      const int r = as_int(field(hm, "rank"));
      if (r < 0) fail("negative rank");
      c.set_rank(object(hm, "src"), object(hm, "dst"), element(hm, "h"), r);
    }
    for (const auto& cm : field(j, "compose")) {
      const int s = object(cm, "src"), m = object(cm, "mid"), d = object(cm, "dst");
      const int h = element(cm, "h"), h2 = element(cm, "h2");
      const int r1 = c.rank(s, m, h), r2 = c.rank(m, d, h2), r3 = c.rank(s, d, H.mul(h2, h));
      const json& t = field(cm, "tensor");
      std::vector<Scalar> flat(static_cast<size_t>(r1) * r2 * r3, 0);
      if (!t.is_array() || static_cast<int>(t.size()) != r1) fail("tensor does not match rank(src, mid, h)");
      for (int i = 0; i < r1; ++i) {
        if (!t[i].is_array() || static_cast<int>(t[i].size()) != r2) fail("tensor does not match rank(mid, dst, h2)");
        for (int jj = 0; jj < r2; ++jj) {
          const std::vector<Scalar> row = scalars(t[i][jj], f);
          if (static_cast<int>(row.size()) != r3) fail("tensor does not match rank(src, dst, h2 h)");
          for (int k = 0; k < r3; ++k) flat[(static_cast<size_t>(k) * r2 + jj) * r1 + i] = row[k];
        }
      }
      c.set_composition(s, m, d, h, h2, std::move(flat));
    }
    const json& ids = field(j, "identities");
    if (!ids.is_array() || static_cast<int>(ids.size()) != n) fail("one identity per object is required");
    for (int x = 0; x < n; ++x) c.set_identity(x, scalars(ids[x], f));
    return c;
  });
}

json to_json(const MtauSpec& s) {
  return {{"tau", to_json(s.tau)},
          {"p", s.field.p()},
          {"L", s.L.elements()},
          {"psi", to_json(s.psi)},
          {"g", s.g}};
}

MtauSpec spec_from_json(const json& j) {
  return guard("spec", [&] {
    const GroupHom tau = hom_from_json(field(j, "tau"));
    const PrimeField f(as_int(field(j, "p")));
    const std::vector<int> L = int_list(field(j, "L"));
    for (int e : L)
      if (!tau.source().contains(e)) fail("\"L\" element out of range");
    const Subgroup sub = Subgroup::generated(tau.source(), L);
    Cochain2 psi(CosetSpace(sub), f);
    if (j.contains("psi") && !(j.at("psi").is_string() && j.at("psi") == "trivial")) {
      psi = cochain_from_json<2>(j.at("psi"), tau.source(), f);
      if (!(psi.space().subgroup() == sub)) fail("\"psi\" lives on a different subgroup than \"L\"");
    }
    return MtauSpec::make(tau, f, sub, psi, as_int(field(j, "g")));
  });
}

json to_json(const EquivalenceDatum& d) { return {{"t", d.t}, {"gamma", to_json(d.gamma)}}; }

EquivalenceDatum datum_from_json(const json& j, const MtauSpec& spec) {
  return guard("datum", [&] {
    const int t = as_int(field(j, "t"));
    if (!spec.tau.source().contains(t)) fail("\"t\" out of range");
    Cochain1 gamma = cochain_from_json<1>(field(j, "gamma"), spec.tau.source(), spec.field);
    if (!(gamma.space() == spec.space())) fail("\"gamma\" lives on a different subgroup than the source spec");
    return EquivalenceDatum{t, std::move(gamma)};
  });
}

json to_json(const Morphism& m) {
  return {{"src", m.src}, {"dst", m.dst}, {"h", m.degree}, {"coords", m.coords}};
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Verdict& v) {
  json list = json::array();
  for (const auto& x : v.violations) list.push_back({{"kind", x.kind}, {"where", x.where}, {"detail", x.detail}});
  return {{"ok", v.ok()}, {"violations", list}};
}

json to_json(const ModuleCat& m) {
  json j = to_json(*m.base);
  json action = json::array();
  for (const FunctorData& a : m.action) {
    json homs = json::array();
    for (const auto& [key, mat] : a.hom_maps)
      homs.push_back({{"src", key[0]}, {"dst", key[1]}, {"h", key[2]}, {"matrix", to_json(mat)}});
    action.push_back({{"objects", a.object_map}, {"homs", homs}});
  }
  json eps = json::array();
  for (const Morphism& e : m.epsilon) eps.push_back(e.coords);
  json mu = json::array();
  for (int a = 0; a < m.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < m.order(); ++b) {
      json cell = json::array();
      for (int x = 0; x < m.objects(); ++x) cell.push_back(m.mu_at(a, b, x).coords);
      row.push_back(cell);
    }
    mu.push_back(row);
  }
  j["action"] = action;
  j["epsilon"] = eps;
  j["mu"] = mu;
  return j;
}

ModuleCat modcat_from_json(const json& j) {
  return guard("module category", [&] {
    ModuleCat m;
    m.base = std::make_shared<const GradedCategory>(category_from_json(j));
    const GradedCategory& c = *m.base;
    const PrimeField& f = c.field();
    const int n = c.object_count();
    const int order = c.H().order();
    const int e = c.H().identity();
    for (int x = 0; x < n; ++x)
      for (const auto& [y, h] : c.out_homs(x))
        if (h != e) fail("module category bases carry only degree-1 homs");

    const json& action = field(j, "action");
    if (!action.is_array() || static_cast<int>(action.size()) != order) fail("one \"action\" entry per element of H");
    for (const auto& a : action) {
      FunctorData fd{m.base, m.base, int_list(field(a, "objects")), {}};
      if (static_cast<int>(fd.object_map.size()) != n) fail("action object map has the wrong length");
      for (int y : fd.object_map)
        if (y < 0 || y >= n) fail("action object map out of range");
      for (const auto& hm : field(a, "homs")) {
        const int s = as_int(field(hm, "src")), d = as_int(field(hm, "dst")), h = as_int(field(hm, "h"));
        if (s < 0 || s >= n || d < 0 || d >= n || h != e) fail("action hom key out of range");
        const json& rows = field(hm, "matrix");
        const int r = c.rank(fd.object_map[s], fd.object_map[d], e), k = c.rank(s, d, e);
        if (!rows.is_array() || static_cast<int>(rows.size()) != r) fail("action matrix has the wrong row count");
        Matrix mat(r, k);
        for (int i = 0; i < r; ++i) {
          const std::vector<Scalar> row = scalars(rows[i], f);
          if (static_cast<int>(row.size()) != k) fail("action matrix has the wrong column count");
          for (int col = 0; col < k; ++col) mat(i, col) = row[col];
        }
        fd.hom_maps[{s, d, h}] = std::move(mat);
      }
      m.action.push_back(std::move(fd));
    }
    auto component = [&](const json& coords, int src, int dst) {
      Morphism out{src, dst, e, scalars(coords, f)};
      if (static_cast<int>(out.coords.size()) != c.rank(src, dst, e)) fail("component has the wrong length");
      return out;
    };
    const json& eps = field(j, "epsilon");
    if (!eps.is_array() || static_cast<int>(eps.size()) != n) fail("one \"epsilon\" component per object");
    for (int x = 0; x < n; ++x) m.epsilon.push_back(component(eps[x], x, m.act(e, x)));
    const json& mu = field(j, "mu");
    if (!mu.is_array() || static_cast<int>(mu.size()) != order) fail("\"mu\" must be |H| x |H| x objects");
    for (int a = 0; a < order; ++a) {
      if (!mu[a].is_array() || static_cast<int>(mu[a].size()) != order) fail("\"mu\" must be |H| x |H| x objects");
      for (int b = 0; b < order; ++b) {
        if (!mu[a][b].is_array() || static_cast<int>(mu[a][b].size()) != n)
          fail("\"mu\" must be |H| x |H| x objects");
        for (int x = 0; x < n; ++x)
          m.mu.push_back(component(mu[a][b][x], m.act(a, m.act(b, x)), m.act(c.H().mul(a, b), x)));
      }
    }
    return m;
  });
}

}  // namespace taucat::io

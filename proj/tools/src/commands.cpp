#include "commands.hpp"

#include <memory>
#include <sstream>

#include "report.hpp"
#include "taucat/error.hpp"
#include "taucat/io.hpp"
#include "taucat/modcat.hpp"
#include "taucat/structure.hpp"
#include "taucat/yoneda.hpp"

namespace taucat::cli {

namespace {

CategoryPtr ptr(GradedCategory c) { return std::make_shared<const GradedCategory>(std::move(c)); }

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      fail("\"" + s + "\" is not a comma-separated list of integers");
    }
    if (used != part.size()) fail("\"" + s + "\" is not a comma-separated list of integers");
    out.push_back(v);
  }
  return out;
}

// The artifact goes to -o when given, otherwise into the report.
void emit(Report& r, const Options& o, const std::string& key, const json& artifact) {
  if (o.out.empty()) {
    r.set(key, artifact);
    return;
  }
  const std::string bytes = artifact.dump(1) + "\n";
  write_file(o.out, bytes);
  r.set("output", {{"path", o.out}, {"sha256", sha256_hex(bytes)}});
}

Outcome finish(Report& r, bool ok) { return {r.to_json(ok), ok ? 0 : 1}; }

json hom_dims(const GradedCategory& c) {
  json rows = json::array();
  for (int x = 0; x < c.object_count(); ++x) {
    json row = json::array();
    for (int y = 0; y < c.object_count(); ++y) {
      int total = 0;
      for (int h = 0; h < c.H().order(); ++h) total += c.rank(x, y, h);
      row.push_back(total);
    }
    rows.push_back(row);
  }
  return rows;
}

SearchOptions search(const Options& o) {
  SearchOptions s;
  s.seed = o.seed;
  return s;
}

json summand_json(const SimpleOrbit& orbit, const std::vector<int>& members) {
  return {{"representative", orbit.representative},
          {"objects", orbit.objects},
          {"members", members},
          {"spec", io::to_json(orbit.spec)}};
}

}  // namespace

Outcome verify(const Options& o, const std::string& file) {
  Report r("verify", o.p, o.seed, o.timing);
  const GradedCategory c = io::category_from_json(r.load(file));
  r.set_p(c.field().p());
  const Verdict v = r.phase("verify_axioms", [&] { return verify_axioms(c); });
  r.set("objects", c.object_count());
  r.set("hom_dims", hom_dims(c));
  r.set("axioms", io::to_json(v));
  return finish(r, v.ok());
}

Outcome build_mtau(const Options& o, const std::string& tau_file, const std::string& L, const std::string& psi,
                   int g) {
  Report r("build-mtau", o.p, o.seed, o.timing);
  const GroupHom tau = io::hom_from_json(r.load(tau_file));
  const PrimeField f(o.p);
  const std::vector<int> gens = parse_list(L);
  for (int x : gens)
    if (!tau.source().contains(x)) fail("--L element out of range");
  const Subgroup sub = Subgroup::generated(tau.source(), gens);
  Cochain2 c(CosetSpace(sub), f);
  if (psi != "trivial") {
    c = io::cochain_from_json<2>(r.load(psi), tau.source(), f);
    if (!(c.space().subgroup() == sub)) fail("--psi lives on a different subgroup than --L");
  }
  const MtauSpec spec = MtauSpec::make(tau, f, sub, c, g);
  const GradedCategory cat = r.phase("build", [&] { return build_skeleton(spec); });
  const Verdict v = r.phase("verify_axioms", [&] { return verify_axioms(cat); });
  r.set("spec", io::to_json(spec));
  r.set("objects", cat.object_count());
  r.set("axioms", io::to_json(v));
  emit(r, o, "category", io::to_json(cat));
  return finish(r, v.ok());
}

Outcome build_groupoid(const Options& o, const std::string& tau_file) {
  Report r("build-groupoid", o.p, o.seed, o.timing);
  const GroupHom tau = io::hom_from_json(r.load(tau_file));
  const GradedCategory cat = r.phase("build", [&] { return build_group_groupoid(tau, PrimeField(o.p)); });
  const Verdict v = r.phase("verify_axioms", [&] { return verify_axioms(cat); });
  r.set("objects", cat.object_count());
  r.set("axioms", io::to_json(v));
  emit(r, o, "category", io::to_json(cat));
  return finish(r, v.ok());
}

Outcome decompose(const Options& o, const std::string& file) {
  Report r("decompose", o.p, o.seed, o.timing);
  const GradedCategory c = io::category_from_json(r.load(file));
  r.set_p(c.field().p());
  const Verdict axioms = verify_axioms(c);
  r.set("axioms", io::to_json(axioms));
  if (!axioms.ok()) {
    r.set("semisimple", false);
    return finish(r, false);
  }
  const DecompositionReport d = r.phase("decompose", [&] { return taucat::decompose(c, search(o)); });
  json summands = json::array();
  for (size_t i = 0; i < d.orbits.size(); ++i) summands.push_back(summand_json(d.orbits[i], d.members[i]));
  r.set("semisimple", d.semisimple);
  r.set("summands", summands);
  if (d.obstruction)
    r.set("obstruction", {{"kind", d.obstruction->kind},
                          {"where", d.obstruction->where},
                          {"detail", d.obstruction->detail}});
  return finish(r, d.semisimple);
}

Outcome classify_equiv(const Options& o, const std::string& a_file, const std::string& b_file) {
  Report r("classify-equiv", o.p, o.seed, o.timing);
  const MtauSpec a = io::spec_from_json(r.load(a_file));
  const MtauSpec b = io::spec_from_json(r.load(b_file));
  r.set_p(a.field.p());
  if (!(a.field == b.field) || !(a.tau.source() == b.tau.source()) || !(a.tau.target() == b.tau.target()) ||
      a.tau.map() != b.tau.map())
    fail("specs do not share tau and p");
  const auto list = r.phase("classify", [&] { return classify_equivalences(a, b); });
  json data = json::array();
  for (const auto& d : list) data.push_back(io::to_json(d));
  r.set("equivalences", data);
  r.set("count", list.size());
  return finish(r, !list.empty());
}

Outcome classify_nat(const Options& o, const std::string& a_file, const std::string& b_file,
                     const std::string& da_file, const std::string& db_file) {
  Report r("classify-nat", o.p, o.seed, o.timing);
  const MtauSpec a = io::spec_from_json(r.load(a_file));
  const MtauSpec b = io::spec_from_json(r.load(b_file));
  r.set_p(a.field.p());
  const EquivalenceDatum f = io::datum_from_json(r.load(da_file), a);
  const EquivalenceDatum g = io::datum_from_json(r.load(db_file), a);
  if (!is_valid_datum(a, b, f)) fail("--datumA is not an equivalence datum from A to B");
  if (!is_valid_datum(a, b, g)) fail("--datumB is not an equivalence datum from A to B");
  const auto isos = r.phase("classify", [&] { return classify_nat_isos(a, b, f, g); });
  json list = json::array();
  for (const auto& n : isos) list.push_back(io::to_json(n.eta));
  r.set("nat_isos", list);
  r.set("count", isos.size());
  return finish(r, !isos.empty());
}

Outcome yoneda_check(const Options& o, const std::string& file) {
  Report r("yoneda-check", o.p, o.seed, o.timing);
  const CategoryPtr c = ptr(io::category_from_json(r.load(file)));
  r.set_p(c->field().p());
  const Verdict axioms = verify_axioms(*c);
  r.set("axioms", io::to_json(axioms));
  if (!axioms.ok()) return finish(r, false);
  const int n = c->object_count(), order = c->H().order(), e = c->H().identity();
  json table = json::array(), mismatches = json::array();
  bool ok = true;
  r.phase("audit", [&] {
    for (int x = 0; x < n; ++x) {
      json row = json::array();
      for (int y = 0; y < n; ++y) {
        int dim = -1;
        for (int a = 0; a < order; ++a) {
          const YonedaProblem prob(c, x, a, {{y, a}});
          const int d = static_cast<int>(prob.nat_space().size());
          bool inverse = prob.fiber_dim() == d;
          for (const auto& eta : prob.nat_space()) inverse = inverse && prob.phi_inv(prob.phi(eta)) == eta;
          for (int k = 0; k < prob.fiber_dim(); ++k) {
            std::vector<Scalar> v(prob.fiber_dim(), 0);
            v[k] = 1;
            const GradedNatTrans eta = prob.phi_inv(v);
            inverse = inverse && prob.verify(eta).ok() && prob.phi(eta) == v;
          }
          if (d != c->rank(y, x, e) || !inverse) {
            ok = false;
            mismatches.push_back({{"x", x}, {"a", a}, {"y", y}, {"nat_dim", d}, {"hom_rank", c->rank(y, x, e)},
                                  {"phi_inverse", inverse}});
          }
          if (a == 0) dim = d;
        }
        row.push_back(dim);
      }
      table.push_back(row);
    }
  });
  r.set("nat_dims", table);
  r.set("mismatches", mismatches);
  return finish(r, ok);
}

Outcome roundtrip(const Options& o, const std::string& file) {
  Report r("roundtrip", o.p, o.seed, o.timing);
  const CategoryPtr c = ptr(io::category_from_json(r.load(file)));
  r.set_p(c->field().p());
  const Verdict axioms = verify_axioms(*c);
  r.set("axioms", io::to_json(axioms));
  if (!axioms.ok()) return finish(r, false);
  const auto shifts = r.phase("find_shifts", [&] { return find_shifts(*c, search(o)); });
  r.set("has_shifts", shifts.has_value());
  if (!shifts) return finish(r, false);
  const EtaRoundTrip eta = r.phase("eta", [&] { return roundtrip_eta(c, *shifts); });
  const NuRoundTrip nu = r.phase("nu", [&] { return roundtrip_nu(eta.restricted); });
  const Verdict tau_module = check_tau_module(eta.restricted);
  r.set("tau_module", io::to_json(tau_module));
  r.set("eta", io::to_json(eta.verdict));
  r.set("nu", io::to_json(nu.verdict));
  return finish(r, tau_module.ok() && eta.verdict.ok() && nu.verdict.ok());
}

Outcome bullet(const Options& o, const std::string& file) {
  Report r("bullet", o.p, o.seed, o.timing);
  const ModuleCat m = io::modcat_from_json(r.load(file));
  r.set_p(m.base->field().p());
  const Verdict module = r.phase("verify_module", [&] { return verify_module(m); });
  const Verdict tau_module = check_tau_module(m);
  r.set("module", io::to_json(module));
  r.set("tau_module", io::to_json(tau_module));
  if (!module.ok() || !tau_module.ok()) return finish(r, false);
  const GradedCategory b = r.phase("bullet", [&] { return taucat::bullet(m); });
  const Verdict axioms = verify_axioms(b);
  r.set("axioms", io::to_json(axioms));
  emit(r, o, "category", io::to_json(b));
  return finish(r, axioms.ok());
}

}  // namespace taucat::cli

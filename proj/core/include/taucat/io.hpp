#pragma once

// JSON documents for groups, homs, cochains, categories, M_tau specs,
// equivalence data and module categories. Readers throw Error on malformed
// input.

#include <nlohmann/json.hpp>

#include "taucat/modcat.hpp"
#include "taucat/mtau.hpp"
#include "taucat/structure.hpp"

namespace taucat::io {

using nlohmann::json;

// {"order": n, "table": [[...]]} or {"cyclic": n}.
json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

// {"source": group, "target": group, "map": [...]}.
json to_json(const GroupHom& h);
GroupHom hom_from_json(const json& j);

// {"subgroup": [...], "values": {"a,b": [units per coset]}}; keys are the
// comma-joined arguments ("" for a 0-cochain), omitted keys are 1.
template <int N>
json to_json(const Cochain<N>& c);
template <int N>
Cochain<N> cochain_from_json(const json& j, const FiniteGroup& H, const PrimeField& f);

// {"tau", "p", "objects": [{"deg"}], "homs": [{"src","dst","h","rank"}],
//  "compose": [{"src","mid","dst","h","h2","tensor"}], "identities"}.
// tensor[i][j][k] is the coefficient of basis k in (outer j) o (inner i).
json to_json(const GradedCategory& c);
GradedCategory category_from_json(const json& j);

// {"tau", "p", "L": [...], "psi": cochain, "g"}.
json to_json(const MtauSpec& s);
MtauSpec spec_from_json(const json& j);

// {"t": t, "gamma": cochain}.
json to_json(const EquivalenceDatum& d);
EquivalenceDatum datum_from_json(const json& j, const MtauSpec& spec);

json to_json(const Morphism& m);
json to_json(const Matrix& m);
json to_json(const Verdict& v);

// The base category plus "action": [{"objects": [...], "homs": [{"src",
// "dst","h","matrix"}]} per h], "epsilon": [coords per X] and
// "mu": [[[coords per X] per b] per a].
json to_json(const ModuleCat& m);
ModuleCat modcat_from_json(const json& j);

}  // namespace taucat::io

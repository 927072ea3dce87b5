#pragma once
// Report objects and their JSON / plain-text serializations. JSON output is
// line-delimited with stable key order.

#include <string>
#include <vector>

#include "json.hpp"

#include "census/bounds.hpp"
#include "census/cyclic.hpp"
#include "census/decompose.hpp"
#include "census/group.hpp"
#include "census/structure.hpp"

namespace census {

using json = nlohmann::ordered_json;

struct InvariantReport {
  std::string group;
  i64 order = 0;
  i64 c = 0;
  i64 lambda = 0;
  i64 center_order = 0;
  bool solvable = false;
  int derived_length = -1;  // -1 when unsolvable
  std::vector<std::pair<i64, i64>> maximal_cyclic_orders;  // (order, multiplicity), ascending
};

inline InvariantReport make_invariant_report(const Group& g) {
  InvariantReport r;
  r.group = g.name;
  r.order = (i64)g.n;
  CyclicLattice lat = cyclic_lattice(g);
  r.c = lat.c();
  r.lambda = lat.lambda();
  r.center_order = (i64)center(g).count();
  DerivedSeries ds = derived_series(g);
  r.solvable = ds.solvable;
  r.derived_length = ds.derived_length;
  std::vector<std::pair<i64, i64>> occ;
  for (size_t i = 0; i < lat.subs.size(); ++i) {
    if (!lat.maximal[i]) continue;
    if (!occ.empty() && occ.back().first == lat.sub_order[i])
      ++occ.back().second;
    else
      occ.emplace_back(lat.sub_order[i], 1);  // lattice is sorted by order
  }
  r.maximal_cyclic_orders = std::move(occ);
  return r;
}

inline json to_json(const InvariantReport& r) {
  json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["c"] = r.c;
  j["lambda"] = r.lambda;
  j["center_order"] = r.center_order;
  j["solvable"] = r.solvable;
  if (r.solvable)
    j["derived_length"] = r.derived_length;
  else
    j["derived_length"] = nullptr;
  json mc = json::array();
  for (auto [o, m] : r.maximal_cyclic_orders) mc.push_back(json::array({o, m}));
  j["maximal_cyclic_orders"] = mc;
  return j;
}

inline std::string to_text(const InvariantReport& r) {
  std::string out;
  out += "group: " + r.group + "\n";
  out += "order: " + std::to_string(r.order) + "\n";
  out += "c: " + std::to_string(r.c) + "\n";
  out += "lambda: " + std::to_string(r.lambda) + "\n";
  out += "center order: " + std::to_string(r.center_order) + "\n";
  out += "derived length: " + (r.solvable ? std::to_string(r.derived_length) : std::string("unsolvable")) + "\n";
  out += "maximal cyclic orders:";
  for (auto [o, m] : r.maximal_cyclic_orders)
    out += " " + std::to_string(o) + "(x" + std::to_string(m) + ")";
  out += "\n";
  return out;
}

inline json to_json(const BoundReport& r) {
  json j;
  j["group"] = r.group;
  j["bound"] = r.bound;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["holds"] = r.holds;
  j["detail"] = r.detail;
  if (r.witness.empty())
    j["witness"] = nullptr;
  else
    j["witness"] = r.witness;
  return j;
}

inline std::string to_text(const BoundReport& r) {
  std::string out = r.holds ? "ok   " : "FAIL ";
  out += r.bound + "  " + r.group + "  lhs=" + r.lhs + " rhs=" + r.rhs;
  if (!r.detail.empty()) out += "  (" + r.detail + ")";
  return out;
}

inline json decomposition_to_json(const Decomposition& d, i64 core_c, i64 core_lambda) {
  json j;
  j["group"] = d.original;
  json parts = json::array();
  for (auto [p, k] : d.cyclic_part) parts.push_back(json::array({p, k}));
  j["cyclic_part"] = parts;
  j["core_order"] = (i64)d.core.n;
  j["core_c"] = core_c;
  j["core_lambda"] = core_lambda;
  return j;
}

inline std::string decomposition_to_text(const Decomposition& d, i64 core_c, i64 core_lambda) {
  std::string out;
  out += "group: " + d.original + "\n";
  out += "cyclic part:";
  if (d.cyclic_part.empty()) out += " (trivial)";
  for (auto [p, k] : d.cyclic_part) out += " " + std::to_string(p) + "^" + std::to_string(k);
  out += " (order " + std::to_string(d.cyclic_order) + ")\n";
  out += "core order: " + std::to_string((i64)d.core.n) + "\n";
  out += "core c: " + std::to_string(core_c) + "\n";
  out += "core lambda: " + std::to_string(core_lambda) + "\n";
  return out;
}

}  // namespace census

#pragma once

// JSON serialization for condition reports, hole classes, witnesses, and
// construction traces. Field order is stable (ordered_json) so reports are
// reproducible byte-for-byte.

#include <json.hpp>

#include "holecomp/competition.hpp"
#include "holecomp/conditions.hpp"

namespace holecomp {

using ordered_json = nlohmann::ordered_json;

inline uint64_t fnv1a_digest(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex_digest(const std::string& s) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a_digest(s)));
  return buf;
}

inline ordered_json to_json(const ConditionReport& r) {
  ordered_json j;
  j["h"] = r.hole_count;
  j["e0"] = r.e0;
  j["e1"] = r.e1;
  j["lc"] = r.lc;
  j["k"] = r.k;
  j["v2"] = r.v2;
  ordered_json viol = ordered_json::object();
  auto pair_json = [](const HolePairWitness& w) {
    ordered_json v;
    v["holes"] = {w.first.to_string(), w.second.to_string()};
    v["shared_edges"] = w.shared_edges;
    v["shared_vertices"] = w.shared_vertices;
    return v;
  };
  if (r.e0_violation) viol["e0"] = pair_json(*r.e0_violation);
  if (r.e1_violation) viol["e1"] = pair_json(*r.e1_violation);
  if (r.lc_violation) viol["lc"] = pair_json(*r.lc_violation);
  if (r.v2_violation) viol["v2"] = pair_json(*r.v2_violation);
  if (r.k_violation) {
    ordered_json v;
    v["hole"] = r.k_violation->hole.to_string();
    ordered_json covers = ordered_json::array();
    for (const auto& [e, cyc] : r.k_violation->edge_covers) {
      ordered_json c;
      c["edge"] = {e.first, e.second};
      c["cycle"] = cyc.to_string();
      covers.push_back(c);
    }
    v["edge_covers"] = covers;
    viol["k"] = v;
  }
  j["violations"] = viol;
  return j;
}

inline ordered_json to_json(const GadgetWitness& w) {
  ordered_json j;
  j["kind"] = w.kind == GadgetKind::K2m ? "k2m" : "ktbox";
  j["parameter"] = w.parameter;
  ordered_json groups = ordered_json::array();
  for (const auto& gr : w.groups) groups.push_back({gr[0], gr[1]});
  j["groups"] = groups;
  return j;
}

inline ordered_json to_json(const HoleClass& hc) {
  ordered_json j;
  j["hole"] = hc.hole.to_string();
  j["class"] = hc.tag == HoleTag::A ? "A" : hc.tag == HoleTag::B ? "B" : "C";
  if (hc.gadget) j["gadget"] = to_json(*hc.gadget);
  return j;
}

inline ordered_json to_json(const TraceStep& s) {
  ordered_json j;
  j["depth"] = s.depth;
  j["case"] = s.case_label;
  j["surgery"] = s.action;
  j["vertices"] = s.vertices;
  j["parameter"] = s.parameter;
  j["holes_before"] = s.holes_before;
  j["holes_after"] = s.holes_after;
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

inline std::string trace_to_json_lines(const std::vector<TraceStep>& trace) {
  std::string out;
  for (const auto& s : trace) {
    out += to_json(s).dump();
    out += '\n';
  }
  return out;
}

inline ordered_json witness_to_json(const Digraph& d, int added_count) {
  ordered_json j;
  j["n"] = d.vertex_count() - added_count;
  j["k"] = added_count;
  ordered_json arcs = ordered_json::array();
  for (const auto& [u, v] : d.arcs()) arcs.push_back({u, v});
  j["arcs"] = arcs;
  return j;
}

}  // namespace holecomp

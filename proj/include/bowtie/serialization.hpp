#pragma once

// JSON input/output for every document the tools exchange. Parsing failures
// throw format errors; semantic validation happens in the constructors the
// loaders call into.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "crossed_action.hpp"
#include "dual_category.hpp"
#include "equivariantization.hpp"
#include "fusion_ring.hpp"
#include "group.hpp"
#include "matched_pair.hpp"
#include "report.hpp"

namespace bowtie {

using Json = nlohmann::json;

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::format, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::format, "malformed document " + path + ": " + e.what());
  }
}

// ---- groups ----------------------------------------------------------------

/// Accepts {"table": [[...]]} (0-based indices) or
/// {"permutations": [[...], ...]} (1-based images), names optional.
inline FiniteGroup group_from_json(const Json& j) {
  try {
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    if (j.contains("table")) {
      auto table = j.at("table").get<std::vector<std::vector<int>>>();
      return group_from_table(table, std::move(names));
    }
    if (j.contains("permutations")) {
      auto perms = j.at("permutations").get<std::vector<std::vector<int>>>();
      FiniteGroup g = group_from_permutations(perms);
      if (!names.empty()) {
        if (static_cast<int>(names.size()) != g.n)
          throw Error(Errc::format, "names list length does not match group order");
        g.names = std::move(names);
      }
      return g;
    }
  } catch (const Json::exception& e) {
    throw Error(Errc::format, std::string("group document: ") + e.what());
  }
  throw Error(Errc::format, "group document needs a \"table\" or \"permutations\" key");
}

inline Json group_to_json(const FiniteGroup& g) {
  std::vector<std::vector<int>> table(g.n, std::vector<int>(g.n));
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) table[a][b] = g.mul(a, b);
  return Json{{"table", table}, {"names", g.names}};
}

// ---- matched pairs ----------------------------------------------------------

inline MatchedPair matched_pair_from_json(const Json& j) {
  try {
    MatchedPair mp;
    mp.g = group_from_json(j.at("G"));
    mp.gamma = group_from_json(j.at("Gamma"));
    const auto lact = j.at("lact").get<std::vector<std::vector<int>>>();
    const auto ract = j.at("ract").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(lact.size()) != mp.gamma.n ||
        static_cast<int>(ract.size()) != mp.gamma.n)
      throw Error(Errc::format, "action tables need one row per element of Gamma");
    for (int k = 0; k < mp.gamma.n; ++k) {
      if (static_cast<int>(lact[k].size()) != mp.g.n ||
          static_cast<int>(ract[k].size()) != mp.g.n)
        throw Error(Errc::format, "action table rows need one entry per element of G");
      for (int x = 0; x < mp.g.n; ++x) {
        mp.lact.push_back(lact[k][x]);
        mp.ract.push_back(ract[k][x]);
      }
    }
    return mp;
  } catch (const Json::exception& e) {
    throw Error(Errc::format, std::string("matched-pair document: ") + e.what());
  }
}

inline Json matched_pair_to_json(const MatchedPair& mp) {
  std::vector<std::vector<int>> lact(mp.gamma.n, std::vector<int>(mp.g.n));
  std::vector<std::vector<int>> ract(mp.gamma.n, std::vector<int>(mp.g.n));
  for (int k = 0; k < mp.gamma.n; ++k)
    for (int x = 0; x < mp.g.n; ++x) {
      lact[k][x] = mp.left(k, x);
      ract[k][x] = mp.right(k, x);
    }
  return Json{{"G", group_to_json(mp.g)},
              {"Gamma", group_to_json(mp.gamma)},
              {"lact", lact},
              {"ract", ract}};
}

// ---- fusion rings -----------------------------------------------------------

/// {"rank": r, "unit": u, "dual": [...], "N": [[a,b,c,mult], ...]}; omitted
/// triples are zero.
inline FusionRing fusion_ring_from_json(const Json& j) {
  try {
    const int rank = j.at("rank").get<int>();
    FusionRing r = FusionRing::zero(rank);
    r.unit = j.at("unit").get<int>();
    if (r.unit < 0 || r.unit >= rank) throw Error(Errc::format, "unit index out of range");
    r.dual = j.at("dual").get<std::vector<int>>();
    if (static_cast<int>(r.dual.size()) != rank)
      throw Error(Errc::format, "dual involution has wrong length");
    for (int v : r.dual)
      if (v < 0 || v >= rank) throw Error(Errc::format, "dual index out of range");
    for (const auto& entry : j.at("N")) {
      const auto quad = entry.get<std::vector<long long>>();
      if (quad.size() != 4) throw Error(Errc::format, "N entries are [a,b,c,multiplicity]");
      const long long a = quad[0], b = quad[1], c = quad[2], m = quad[3];
      if (a < 0 || a >= rank || b < 0 || b >= rank || c < 0 || c >= rank || m < 0)
        throw Error(Errc::format, "structure-constant entry out of range");
      r.n(static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)) = static_cast<int>(m);
    }
    if (j.contains("names")) {
      r.names = j.at("names").get<std::vector<std::string>>();
      if (static_cast<int>(r.names.size()) != rank)
        throw Error(Errc::format, "names list length does not match rank");
    }
    return r;
  } catch (const Json::exception& e) {
    throw Error(Errc::format, std::string("fusion-ring document: ") + e.what());
  }
}

inline Json fusion_ring_to_json(const FusionRing& r) {
  Json triples = Json::array();
  for (int a = 0; a < r.rank; ++a)
    for (int b = 0; b < r.rank; ++b)
      for (int c = 0; c < r.rank; ++c)
        if (r.n(a, b, c) != 0) triples.push_back({a, b, c, r.n(a, b, c)});
  return Json{{"rank", r.rank},
              {"unit", r.unit},
              {"dual", r.dual},
              {"N", triples},
              {"names", r.names}};
}

// ---- gradings and crossed actions -------------------------------------------

inline Grading grading_from_json(const Json& j) {
  try {
    Grading gr;
    gr.group = group_from_json(j.at("group"));
    gr.deg = j.at("deg").get<std::vector<int>>();
    return gr;
  } catch (const Json::exception& e) {
    throw Error(Errc::format, std::string("grading document: ") + e.what());
  }
}

inline Json grading_to_json(const Grading& gr) {
  return Json{{"group", group_to_json(gr.group)}, {"deg", gr.deg}};
}

inline CrossedActionData crossed_action_from_json(const Json& j) {
  try {
    CrossedActionData d;
    d.ring = fusion_ring_from_json(j.at("ring"));
    d.mp = matched_pair_from_json(j.at("matched_pair"));
    d.grading = grading_from_json(j.at("grading"));
    const auto act = j.at("act").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(act.size()) != d.ring.rank)
      throw Error(Errc::format, "act needs one row per label");
    for (const auto& row : act) {
      if (static_cast<int>(row.size()) != d.mp.g.n)
        throw Error(Errc::format, "act rows need one entry per element of G");
      for (int v : row) d.act.push_back(v);
    }
    return d;
  } catch (const Json::exception& e) {
    throw Error(Errc::format, std::string("crossed-action document: ") + e.what());
  }
}

inline Json crossed_action_to_json(const CrossedActionData& d) {
  std::vector<std::vector<int>> act(d.ring.rank, std::vector<int>(d.mp.g.n));
  for (int a = 0; a < d.ring.rank; ++a)
    for (int g = 0; g < d.mp.g.n; ++g) act[a][g] = d.acted(a, g);
  return Json{{"ring", fusion_ring_to_json(d.ring)},
              {"matched_pair", matched_pair_to_json(d.mp)},
              {"grading", grading_to_json(d.grading)},
              {"act", act}};
}

// ---- results ----------------------------------------------------------------

inline Json report_to_json(const Report& rep) {
  Json items = Json::array();
  for (const auto& v : rep.items) items.push_back({{"rule", v.rule}, {"witness", v.witness}});
  return items;
}

inline Json simples_to_json(const std::vector<EquivariantSimple>& simples) {
  Json out = Json::array();
  for (const auto& s : simples)
    out.push_back({{"orbit", s.orbit}, {"dim", s.dim}, {"fp", s.fp}});
  return out;
}

inline Json simples_to_json(const std::vector<BimoduleSimple>& simples) {
  Json out = Json::array();
  for (const auto& s : simples)
    out.push_back({{"coset_rep", s.coset_rep}, {"dim", s.object.dim()}, {"fp", s.fp}});
  return out;
}

}  // namespace bowtie

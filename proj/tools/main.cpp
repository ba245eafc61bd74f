// Command-line surface: load documents, run constructions and verifications,
// execute the extension-vs-dual comparison, emit human or JSON reports.
//
// Exit codes: 0 pass, 1 violation (or no isomorphism), 2 input error,
// 3 undecided (search budget exhausted).

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <bowtie/duality_check.hpp>
#include <bowtie/serialization.hpp>

namespace {

using namespace bowtie;

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  double tol = 1e-6;  // FP-dimension comparison tolerance
  int threads = 1;
  unsigned long long budget = 10'000'000;
};

class Emitter {
public:
  Emitter(std::string command, const Options& opt)
      : command_(std::move(command)), json_(opt.json), start_(std::chrono::steady_clock::now()) {}

  void payload(const std::string& key, const Json& value) { payload_[key] = value; }

  int finish(const std::string& status, const Report& findings, int exit_code) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    if (json_) {
      Json out{{"command", command_},
               {"status", status},
               {"findings", report_to_json(findings)},
               {"ms", ms}};
      for (auto& [k, v] : payload_.items()) out[k] = v;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << command_ << ": " << status << " (" << ms << " ms)\n";
      for (const auto& v : findings.items)
        std::cout << "  violation: " << v.rule << " at " << v.witness << "\n";
      for (auto& [k, v] : payload_.items()) std::cout << "  " << k << ": " << v.dump() << "\n";
    }
    return exit_code;
  }

  int pass() { return finish("pass", {}, 0); }
  int violation(const Report& findings) { return finish("violation", findings, 1); }
  int input_error(const std::string& message) {
    Report rep;
    rep.add("input", message);
    return finish("input-error", rep, 2);
  }
  int undecided(const Report& findings) { return finish("undecided", findings, 3); }

private:
  std::string command_;
  bool json_ = false;
  Json payload_ = Json::object();
  std::chrono::steady_clock::time_point start_;
};

std::string detect_kind(const Json& j) {
  if (j.contains("act")) return "crossed-action";
  if (j.contains("lact")) return "matched-pair";
  if (j.contains("N")) return "fusion-ring";
  if (j.contains("table") || j.contains("permutations")) return "group";
  return "";
}

int cmd_verify(const std::string& path, std::string kind, const Options& opt) {
  Emitter emit("verify", opt);
  Json doc;
  try {
    doc = load_json_file(path);
  } catch (const Error& e) {
    return emit.input_error(e.what());
  }
  if (kind == "auto") kind = detect_kind(doc);
  if (kind.empty()) return emit.input_error("cannot detect the document kind");
  emit.payload("kind", kind);
  try {
    if (kind == "group") {
      try {
        group_from_json(doc);
      } catch (const Error& e) {
        if (e.code() == Errc::format) throw;
        Report rep;
        rep.add(errc_name(e.code()), e.what());
        return emit.violation(rep);
      }
      return emit.pass();
    }
    if (kind == "matched-pair") {
      const MatchedPair mp = matched_pair_from_json(doc);
      const Report rep = verify_matched_pair(mp);
      return rep.ok() ? emit.pass() : emit.violation(rep);
    }
    if (kind == "fusion-ring") {
      const FusionRing r = fusion_ring_from_json(doc);
      const Report rep = validate_fusion_ring(r, opt.threads);
      return rep.ok() ? emit.pass() : emit.violation(rep);
    }
    if (kind == "crossed-action") {
      const CrossedActionData d = crossed_action_from_json(doc);
      const Report rep = verify_crossed_action(d);
      return rep.ok() ? emit.pass() : emit.violation(rep);
    }
  } catch (const Error& e) {
    if (e.code() == Errc::format) return emit.input_error(e.what());
    Report rep;
    rep.add(errc_name(e.code()), e.what());
    return emit.violation(rep);
  }
  return emit.input_error("unknown kind " + kind);
}

int cmd_factorize(const std::string& path, int max_generators, const Options& opt) {
  Emitter emit("factorize", opt);
  try {
    const FiniteGroup g = group_from_json(load_json_file(path));
    Json list = Json::array();
    for (const auto& [a, b] : exact_factorizations(g, max_generators))
      list.push_back({{"g", a.elements}, {"gamma", b.elements}});
    emit.payload("factorizations", list);
    return emit.pass();
  } catch (const Error& e) {
    return emit.input_error(e.what());
  }
}

int cmd_derive(const std::string& path, const std::vector<int>& left,
               const std::vector<int>& right, const Options& opt) {
  Emitter emit("derive", opt);
  try {
    const FiniteGroup sigma = group_from_json(load_json_file(path));
    const Subgroup gs = subgroup_generated(sigma, left);
    const Subgroup ks = subgroup_generated(sigma, right);
    try {
      const MatchedPair mp = derive_matched_pair(sigma, gs, ks);
      emit.payload("matched_pair", matched_pair_to_json(mp));
      return emit.pass();
    } catch (const Error& e) {
      if (e.code() != Errc::factorization) throw;
      Report rep;
      rep.add(errc_name(e.code()), e.what());
      return emit.violation(rep);
    }
  } catch (const Error& e) {
    return emit.input_error(e.what());
  }
}

int cmd_zappa(const std::string& path, const Options& opt) {
  Emitter emit("zappa", opt);
  try {
    const MatchedPair mp = matched_pair_from_json(load_json_file(path));
    const Report rep = verify_matched_pair(mp);
    if (!rep.ok()) return emit.violation(rep);
    emit.payload("group", group_to_json(zappa_szep(mp)));
    return emit.pass();
  } catch (const Error& e) {
    return emit.input_error(e.what());
  }
}

CrossedActionData crossed_action_from_file(const Json& doc) {
  const std::string kind = detect_kind(doc);
  if (kind == "crossed-action") return crossed_action_from_json(doc);
  if (kind == "matched-pair") return pointed_crossed_action(matched_pair_from_json(doc));
  throw Error(Errc::format, "expected a crossed-action or matched-pair document");
}

int cmd_bicross(const std::string& path, const Options& opt) {
  Emitter emit("bicross", opt);
  try {
    const CrossedActionData d = crossed_action_from_file(load_json_file(path));
    const BicrossedRing b = bicrossed_ring(d, opt.threads);
    emit.payload("ring", fusion_ring_to_json(b.ring));
    const Report rep =
        verify_exact_factorization(b.ring, b.pointed_side(), b.c_side(), opt.tol);
    return rep.ok() ? emit.pass() : emit.violation(rep);
  } catch (const Error& e) {
    if (e.code() == Errc::axiom) {
      Report rep;
      rep.add(errc_name(e.code()), e.what());
      return emit.violation(rep);
    }
    return emit.input_error(e.what());
  }
}

int cmd_equivariantize(const std::string& path, const Options& opt) {
  Emitter emit("equivariantize", opt);
  try {
    const CrossedActionData d = crossed_action_from_file(load_json_file(path));
    const Equivariantization k = equivariantize_pointed(d, opt.seed);
    emit.payload("ring", fusion_ring_to_json(k.ring));
    emit.payload("simples", simples_to_json(k.simples));
    const Report rep = extension_checks(k, d, opt.seed);
    return rep.ok() ? emit.pass() : emit.violation(rep);
  } catch (const Error& e) {
    if (e.code() == Errc::axiom) {
      Report rep;
      rep.add(errc_name(e.code()), e.what());
      return emit.violation(rep);
    }
    return emit.input_error(e.what());
  }
}

int cmd_dual_gt(const std::string& path, const std::vector<int>& subgroup_gens,
                const Options& opt) {
  Emitter emit("dual-gt", opt);
  try {
    const FiniteGroup sigma = group_from_json(load_json_file(path));
    const Subgroup h = subgroup_generated(sigma, subgroup_gens);
    const DualModel dual = dual_ring_group_theoretical(sigma, h, opt.seed);
    emit.payload("ring", fusion_ring_to_json(dual.ring));
    emit.payload("simples", simples_to_json(dual.simples));
    return emit.pass();
  } catch (const Error& e) {
    return emit.input_error(e.what());
  }
}

int cmd_compare(const std::string& path1, const std::string& path2, const Options& opt) {
  Emitter emit("compare", opt);
  try {
    const FusionRing r1 = fusion_ring_from_json(load_json_file(path1));
    const FusionRing r2 = fusion_ring_from_json(load_json_file(path2));
    const IsoSearch res = find_based_iso(r1, r2, opt.budget);
    emit.payload("nodes", res.nodes);
    if (res.status == IsoSearch::Status::found) {
      emit.payload("bijection", res.iso->map);
      return emit.pass();
    }
    Report rep;
    if (res.status == IsoSearch::Status::timeout) {
      rep.add("timeout", "search budget exhausted; existence undecided");
      return emit.undecided(rep);
    }
    rep.add("no-isomorphism", "the rings are not isomorphic as based rings");
    return emit.violation(rep);
  } catch (const Error& e) {
    return emit.input_error(e.what());
  }
}

int cmd_theorem1(const std::string& path, const Options& opt) {
  Emitter emit("theorem1", opt);
  try {
    const MatchedPair mp = matched_pair_from_json(load_json_file(path));
    {
      const Report rep = verify_matched_pair(mp);
      if (!rep.ok()) return emit.input_error("invalid matched pair: " + rep.items.front().rule);
    }
    const DualityCheck check =
        check_extension_duality(mp, opt.seed, opt.budget, opt.threads, opt.tol);
    emit.payload("extension_rank", check.extension.ring.rank);
    emit.payload("dual_rank", check.dual.ring.rank);
    emit.payload("product_group_order", check.product_group.n);
    emit.payload("extension_simples", simples_to_json(check.extension.simples));
    emit.payload("dual_simples", simples_to_json(check.dual.simples));
    Report rep;
    rep.merge(check.extension_report);
    rep.merge(check.factorization_report);
    if (check.undecided()) {
      rep.add("timeout", "isomorphism search budget exhausted; undecided");
      return emit.undecided(rep);
    }
    if (check.iso.status == IsoSearch::Status::found)
      emit.payload("bijection", check.iso.iso->map);
    else
      rep.add("no-isomorphism", "extension and dual rings are not isomorphic");
    return check.ok() ? emit.pass() : emit.violation(rep);
  } catch (const Error& e) {
    return emit.input_error(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusion-ring constructions: matched pairs, bicrossed products, "
               "crossed extensions and their duals"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "emit a JSON report on stdout");
  app.add_option("--seed", opt.seed, "pseudo-random seed for the splitting routines");
  app.add_option("--tol", opt.tol, "FP-dimension comparison tolerance")->default_val(1e-6);
  app.add_option("--threads", opt.threads, "threads for the associativity scan")->default_val(1);
  app.add_option("--budget", opt.budget, "node budget for isomorphism search")
      ->default_val(10'000'000);

  std::string path, path2, kind = "auto";
  std::vector<int> left, right, subgroup_gens;
  int max_generators = 2;

  auto* verify = app.add_subcommand("verify", "validate a document against its axioms")->fallthrough();
  verify->add_option("file", path)->required();
  verify->add_option("--kind", kind)
      ->check(CLI::IsMember({"auto", "group", "matched-pair", "fusion-ring", "crossed-action"}));

  auto* factorize = app.add_subcommand("factorize", "list exact factorizations of a group")->fallthrough();
  factorize->add_option("file", path)->required();
  factorize->add_option("--max-generators", max_generators)->check(CLI::Range(1, 3));

  auto* derive = app.add_subcommand("derive", "derive the matched pair of a factorization")->fallthrough();
  derive->add_option("file", path)->required();
  derive->add_option("--left", left, "generator indices of the left factor")
      ->required()
      ->delimiter(',');
  derive->add_option("--right", right, "generator indices of the right factor")
      ->required()
      ->delimiter(',');

  auto* zappa = app.add_subcommand("zappa", "build the Zappa-Szep product group")->fallthrough();
  zappa->add_option("file", path)->required();

  auto* bicross = app.add_subcommand(
      "bicross", "build the bicrossed product ring of a crossed action (or of the pointed "
                 "action of a matched pair)")->fallthrough();
  bicross->add_option("file", path)->required();

  auto* equivariantize = app.add_subcommand(
      "equivariantize", "equivariantize a pointed crossed action and check the extension shape")->fallthrough();
  equivariantize->add_option("file", path)->required();

  auto* dual_gt = app.add_subcommand("dual-gt", "dual-model ring of (group, subgroup)")->fallthrough();
  dual_gt->add_option("file", path)->required();
  dual_gt->add_option("--subgroup", subgroup_gens, "generator indices of the subgroup")
      ->delimiter(',');

  auto* compare = app.add_subcommand("compare", "search for a based-ring isomorphism")->fallthrough();
  compare->add_option("first", path)->required();
  compare->add_option("second", path2)->required();

  auto* theorem1 = app.add_subcommand(
      "theorem1", "compare the crossed-extension ring with the dual of the bicrossed product")->fallthrough();
  theorem1->add_option("file", path)->required();

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) return cmd_verify(path, kind, opt);
  if (factorize->parsed()) return cmd_factorize(path, max_generators, opt);
  if (derive->parsed()) return cmd_derive(path, left, right, opt);
  if (zappa->parsed()) return cmd_zappa(path, opt);
  if (bicross->parsed()) return cmd_bicross(path, opt);
  if (equivariantize->parsed()) return cmd_equivariantize(path, opt);
  if (dual_gt->parsed()) return cmd_dual_gt(path, subgroup_gens, opt);
  if (compare->parsed()) return cmd_compare(path, path2, opt);
  if (theorem1->parsed()) return cmd_theorem1(path, opt);
  return 2;
}

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "holestab/audit.hpp"
#include "holestab/boolean_recognizer.hpp"
#include "holestab/codes.hpp"
#include "holestab/gallery.hpp"
#include "holestab/hole_stabilizer.hpp"
#include "holestab/report.hpp"

namespace holestab {

struct CommandOptions {
  Point hole = 0;
  std::size_t coordinate = 0;
  bool sweep = false;  // code: repeat for every coordinate and compare
  std::uint64_t seed = 0;
  std::size_t puzzle_cap = kDefaultPuzzleCap;
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  AuditOptions audit;
  CodeCaps code_caps;
};

/// `gallery:<id>[:<param>]` or a path to a design file.
inline Hypergraph load_design(const std::string& source) {
  static constexpr std::string_view prefix = "gallery:";
  if (source.starts_with(prefix)) return gallery_design(source.substr(prefix.size()));
  std::ifstream in(source);
  if (!in) throw Error("cannot open '" + source + "'");
  return read_design(in);
}

inline std::vector<Permutation> load_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_generators(in);
}

namespace detail {

inline Json optional_json(const std::optional<std::size_t>& x) { return x ? Json(*x) : Json(nullptr); }

inline Json design_json(const Hypergraph& h) {
  return {{"points", h.n()},
          {"lines", h.lines().size()},
          {"simple", h.simple()},
          {"pliable", h.pliable()},
          {"supersimple", h.supersimple()},
          {"three_design", h.three_design()},
          {"lambda", optional_json(h.lambda())},
          {"replication", optional_json(h.replication())},
          {"collinearity_connected", collinearity_connected(h)}};
}

inline std::string action_name(const GroupProfile& p) {
  if (p.order == 1) return "trivial";
  if (!p.transitive) return "intransitive";
  return p.primitive ? "primitive" : "transitive";
}

inline Json profile_json(const GroupProfile& p) {
  Json mu;
  switch (p.minimal_degree.kind) {
    case MinimalDegree::Kind::exact: mu = {{"exact", p.minimal_degree.value}}; break;
    case MinimalDegree::Kind::bounds:
      mu = {{"lower", p.minimal_degree.value}, {"upper", p.minimal_degree.upper}};
      break;
    case MinimalDegree::Kind::trivial_group: mu = nullptr; break;
  }
  return {{"domain_size", p.domain_size},
          {"order", order_json(p.order)},
          {"action", action_name(p)},
          {"transitive", p.transitive},
          {"primitive", p.primitive},
          {"minimal_block_systems", p.block_systems},
          {"max_transitivity", p.max_transitivity},
          {"even_generators", p.even_generators},
          {"odd_generators", p.odd_generators},
          {"minimal_degree", mu},
          {"is_symmetric", p.alt_sym.is_symmetric},
          {"is_alternating", p.alt_sym.is_alternating},
          {"label", p.label.empty() ? Json(nullptr) : Json(p.label + " (evidence)")}};
}

inline Json weights_json(const WeightDistribution& w) {
  Json out = Json::object();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) out[std::to_string(i)] = order_json(w[i]);
  return out;
}

inline Json code_json(const CodeReport& r) {
  Json j = {{"n", r.n},
            {"k", r.k},
            {"d", optional_json(r.d)},
            {"rho", r.rho},
            {"t", r.t},
            {"weights", weights_json(r.weights)},
            {"dual_weights", weights_json(r.dual_weights)},
            {"all_even_weights", r.flags.all_even_weights},
            {"uniformly_packed_wide", r.flags.uniformly_packed_wide},
            {"cr_sufficient_condition", r.flags.cr_sufficient_condition},
            {"completely_regular", to_string(r.complete_regularity.verdict)}};
  if (r.complete_regularity.witness)
    j["completely_regular_witness"] = {r.complete_regularity.witness->first, r.complete_regularity.witness->second};
  return j;
}

inline Json row_json(const CodeTableRow& r) {
  return {r.n, r.lambda, r.k, r.rho, r.t, r.rho_star, r.t_star, r.rho_s, r.t_s};
}

/// The regular action x -> x XOR v of a binary vector space on its 2^k points.
inline std::vector<Permutation> translations(std::size_t n) {
  std::vector<Permutation> out;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = Point(x ^ v);
    out.push_back(Permutation::from_images(std::move(images)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct StabilizerFacts {
  GroupProfile profile;
  HoleStabilizer stabilizer;
};

inline StabilizerFacts stabilizer_facts(const MoveTable& moves, Point hole, std::size_t enumeration_cap) {
  HoleStabilizer st = hole_stabilizer(moves, hole);
  const auto domain = st.domain();
  GroupProfile p = profile(st.group, domain, enumeration_cap);
  return {std::move(p), std::move(st)};
}

}  // namespace detail

inline RunReport cmd_check(const std::string& source) {
  return run_command("check", {source}, 0, [&](RunReport& r) { r.results = detail::design_json(load_design(source)); });
}

inline RunReport cmd_stabilizer(const std::string& source, const CommandOptions& opt = {}) {
  return run_command("stabilizer", {source}, opt.seed, [&](RunReport& r) {
    const MoveTable moves(load_design(source));
    const Hypergraph& h = moves.hypergraph();
    auto facts = detail::stabilizer_facts(moves, opt.hole, opt.enumeration_cap);
    r.results["hole"] = opt.hole;
    r.results["design"] = detail::design_json(h);
    r.results["group"] = detail::profile_json(facts.profile);
    Json gens = Json::array();
    for (std::size_t i = 0; i < facts.stabilizer.generator_words.size(); ++i)
      gens.push_back({{"walk", facts.stabilizer.generator_words[i]},
                      {"cycles", to_cycle_string(facts.stabilizer.group.generators()[i])}});
    r.results["generators"] = gens;
    if (auto lambda = h.lambda(); lambda && h.supersimple()) {
      // Generator parity and support follow from the line count through a pair.
      const bool odd = *lambda % 2 == 0;
      std::size_t wrong_parity = 0, max_support = 0;
      for (const auto& g : facts.stabilizer.group.generators()) {
        wrong_parity += (parity(g) == Parity::odd) != odd;
        max_support = std::max(max_support, support_size(g));
      }
      r.check("every generator has parity " + std::string(odd ? "odd" : "even") + " for lambda " +
                  std::to_string(*lambda),
              0, wrong_parity);
      r.check("generator supports are at most 6*lambda+2", true, max_support <= 6 * *lambda + 2);
      if (h.n() > 4 * *lambda + 1) r.check("transitive when n > 4*lambda+1", true, facts.profile.transitive);
    }
  });
}

inline RunReport cmd_puzzle_set(const std::string& source, const CommandOptions& opt = {}) {
  return run_command("puzzle-set", {source}, opt.seed, [&](RunReport& r) {
    const MoveTable moves(load_design(source));
    const HoleStabilizer st = hole_stabilizer(moves, opt.hole);
    const PuzzleSet ps = puzzle_set(moves, st, opt.puzzle_cap);
    const Order per_coset = st.group.order();
    r.results["hole"] = opt.hole;
    r.results["stabilizer_order"] = order_json(per_coset);
    r.results["size"] = ps.elements.size();
    r.results["truncated"] = ps.truncated;
    r.results["is_group"] = ps.is_group ? Json(*ps.is_group) : Json(nullptr);
    r.results["generated_order"] = order_json(ps.generated_order);
    r.results["exceeds_n_cosets"] = Order(ps.elements.size()) > per_coset * moves.n();
    if (ps.is_group && *ps.is_group) {
      std::vector<Permutation> elements = ps.elements;
      PermGroup g(moves.n(), std::move(elements));
      const auto all = complement_domain(moves.n(), {});
      r.results["primitive"] = is_primitive(g, all);
    }
    const Strictness s = puzzle_strictness(moves, st);
    r.results["strictness"] = {{"testable", s.testable},
                               {"qualifying_pairs", s.qualifying_pairs},
                               {"move_outside_stabilizer", s.non_member},
                               {"witness", s.witness ? Json{s.witness->first, s.witness->second} : Json(nullptr)}};
  });
}

inline RunReport cmd_transport(const std::string& source, Point x, Point y, const CommandOptions& opt = {}) {
  return run_command("transport", {source, std::to_string(x), std::to_string(y)}, opt.seed, [&](RunReport& r) {
    const MoveTable moves(load_design(source));
    const MoveSequence f = transport(moves, x, y);
    const HoleStabilizer at_x = hole_stabilizer(moves, x), at_y = hole_stabilizer(moves, y);
    bool inside = true;
    for (const auto& g : at_x.group.generators()) inside = inside && at_y.group.contains(conjugate(g, f.evaluation));
    r.results["walk"] = f.points;
    r.results["evaluation"] = to_cycle_string(f.evaluation);
    r.results["order_at_start"] = order_json(at_x.group.order());
    r.results["order_at_end"] = order_json(at_y.group.order());
    r.check("the walk evaluation maps the start hole to the end hole", y, f.evaluation[x]);
    r.check("conjugating the start stabilizer by the walk gives the end stabilizer", true,
            inside && at_x.group.order() == at_y.group.order());
  });
}

inline RunReport cmd_audit(const std::string& source, const CommandOptions& opt = {}) {
  return run_command("audit", {source}, opt.seed, [&](RunReport& r) {
    const MoveTable moves(load_design(source));
    AuditOptions ao = opt.audit;
    ao.seed = opt.seed;
    for (const AuditReport& a : {partial_group_audit(moves, ao), objectivity_audit(moves, ao)}) {
      Json j = {{"letters", a.letters},
                {"words_total", a.words_total},
                {"words_checked", a.words_checked},
                {"sampled", a.sampled},
                {"violations", a.violation_count}};
      if (a.kind == "objectivity") j["unpointed_chain_matches"] = a.unpointed_chain_matches;
      r.results[a.kind] = j;
      for (const auto& v : a.violations) r.violations.push_back({a.kind + "/" + v.rule, v.witness});
    }
    r.results["max_word_len"] = ao.max_word_len;
    r.results["letter_points"] = ao.letter_points;
  });
}

inline RunReport cmd_boolean(const std::string& source, const CommandOptions& opt = {}) {
  return run_command("boolean", {source}, opt.seed, [&](RunReport& r) {
    const MoveTable moves(load_design(source));
    const BooleanRecognition rec = boolean_recognizer(moves.hypergraph(), opt.hole);
    const TheoremBVerdict v = theorem_b_check(moves);
    r.results["hole"] = opt.hole;
    r.results["boolean"] = rec.accepted;
    r.results["dimension"] = rec.accepted ? Json(rec.k) : Json(nullptr);
    r.results["rejection"] = rec.accepted ? Json(nullptr) : Json(rec.reason);
    r.results["all_stabilizers_trivial"] = v.all_trivial;
    r.check("all hole stabilizers are trivial exactly when the design is Boolean", v.all_trivial, v.boolean);
  });
}

inline RunReport cmd_code(const std::string& source, const CommandOptions& opt = {}) {
  return run_command("code", {source}, opt.seed, [&](RunReport& r) {
    const Hypergraph h = load_design(source);
    const DesignCodes dc = design_codes(h, opt.coordinate, opt.code_caps);
    const CodeTableRow row = table_row(dc);
    r.results["columns"] = {"n", "lambda", "k", "rho", "t", "rho*", "t*", "rho_s", "t_s"};
    r.results["row"] = detail::row_json(row);
    r.results["coordinate"] = opt.coordinate;
    r.results["C"] = detail::code_json(dc.code);
    r.results["C*"] = detail::code_json(dc.punctured);
    r.results["C_s"] = detail::code_json(dc.shortened);
    r.check("every codeword has even weight", true, dc.code.flags.all_even_weights);
    if (dc.lambda)
      if (auto published = published_code_row(h.n(), *dc.lambda)) {
        r.check("parameters match the published row for n=" + std::to_string(h.n()) + ", lambda=" +
                    std::to_string(*dc.lambda),
                detail::row_json(*published), detail::row_json(row));
        r.check("C has minimum distance 4", 4, detail::optional_json(dc.code.d));
        r.check("C* has minimum distance 3", 3, detail::optional_json(dc.punctured.d));
        r.check("C_s has minimum distance 4", 4, detail::optional_json(dc.shortened.d));
      }
    if (opt.sweep) {
      Json rows = Json::array();
      bool same = true;
      for (std::size_t i = 0; i < h.n(); ++i) {
        const CodeTableRow other = table_row(design_codes(h, i, opt.code_caps));
        rows.push_back(detail::row_json(other));
        same = same && other == row;
      }
      r.results["sweep"] = rows;
      r.check("puncturing and shortening give the same parameters at every coordinate", true, same);
    }
  });
}

inline RunReport cmd_gallery_list() {
  return run_command("gallery", {}, 0, [&](RunReport& r) {
    Json entries = Json::array();
    for (const auto& e : gallery_entries())
      entries.push_back({{"id", "gallery:" + e.id}, {"name", e.name}, {"provenance", e.provenance}});
    r.results["designs"] = entries;
  });
}

inline RunReport cmd_orbit_design(const std::string& generators_path, Line base_block, const CommandOptions& opt = {}) {
  std::string block;
  for (Point p : base_block) block += (block.empty() ? "" : ",") + std::to_string(p);
  return run_command("orbit-design", {generators_path, block}, opt.seed, [&](RunReport& r) {
    const auto gens = load_generators(generators_path);
    if (gens.empty()) throw Error("no generators in '" + generators_path + "'");
    const OrbitDesign od = orbit_design(gens, gens.front().degree(), base_block);
    r.results["design"] = detail::design_json(od.design);
    r.results["not_a_2_design"] = od.not_a_2_design;
    std::ostringstream text;
    write_design(text, od.design);
    r.results["text"] = text.str();
  });
}

namespace detail {

inline void reproduce_table1(RunReport& r, const CommandOptions& opt) {
  struct Row {
    std::string id;
    std::size_t n, lambda;
    std::uint64_t order;
    std::string action;
  };
  const Row rows[] = {{"boolean:3", 8, 3, 1, "trivial"},
                      {"10-4-2", 10, 2, 72, "primitive"},
                      {"p3", 13, 1, 95040, "primitive"},
                      {"boolean:4", 16, 7, 1, "trivial"},
                      {"boolean:5", 32, 15, 1, "trivial"}};
  for (const Row& row : rows) {
    const MoveTable moves(gallery_design(row.id));
    const std::string tag = "n=" + std::to_string(row.n) + " (" + row.id + "): ";
    r.check(tag + "lambda", row.lambda, optional_json(moves.hypergraph().lambda()));
    auto facts = stabilizer_facts(moves, 0, opt.enumeration_cap);
    r.check(tag + "hole stabilizer order", row.order, order_json(facts.profile.order));
    r.check(tag + "hole stabilizer action", row.action, action_name(facts.profile));
    if (row.order == 1) {
      const PuzzleSet ps = puzzle_set(moves, facts.stabilizer, opt.puzzle_cap);
      r.check(tag + "puzzle set is the translation group", true, ps.elements == translations(row.n));
    } else if (row.id == "10-4-2") {
      const PuzzleSet ps = puzzle_set(moves, facts.stabilizer, opt.puzzle_cap);
      r.check(tag + "puzzle set size", 720, ps.elements.size());
      r.check(tag + "puzzle set is a group", true, ps.is_group.value_or(false));
    } else {
      // A move fixing the hole but outside its stabilizer makes the puzzle set
      // strictly larger than n cosets of the stabilizer.
      r.check(tag + "puzzle set exceeds n cosets of the stabilizer", true,
              puzzle_strictness(moves, facts.stabilizer).non_member);
    }
  }
}

inline void reproduce_table2_row1(RunReport& r, const CommandOptions& opt) {
  const DesignCodes dc = design_codes(gallery_design("10-4-2"), opt.coordinate, opt.code_caps);
  r.check("(n, lambda, k, rho, t, rho*, t*, rho_s, t_s)", row_json(kPublishedCodeRows[0]), row_json(table_row(dc)));
  r.check("C is a [10,5,4] code", Json{10, 5, 4}, Json{dc.code.n, dc.code.k, optional_json(dc.code.d)});
  r.check("C* is a [9,5,3] code", Json{9, 5, 3}, Json{dc.punctured.n, dc.punctured.k, optional_json(dc.punctured.d)});
  r.check("C_s is a [9,4,4] code", Json{9, 4, 4},
          Json{dc.shortened.n, dc.shortened.k, optional_json(dc.shortened.d)});
  r.check("C is completely regular", "yes", to_string(dc.code.complete_regularity.verdict));
  r.check("C is uniformly packed in the wide sense", true, dc.code.flags.uniformly_packed_wide);
  r.check("C* is uniformly packed in the wide sense", true, dc.punctured.flags.uniformly_packed_wide);
  r.check("C has even weights and d = 2t - 2", true, dc.code.flags.cr_sufficient_condition);
}

inline void reproduce_theorem_c(RunReport& r, const CommandOptions& opt) {
  struct Row {
    std::string id;
    Order order;
    std::string shape;
  };
  const Row rows[] = {{"7-4-2", 720, "symmetric"},
                      {"p3", 95040, "M12"},
                      {"16-4-1", factorial(15) / 2, "alternating"},
                      {"10-4-2", 72, "S3 wr S2"}};
  for (const Row& row : rows) {
    const MoveTable moves(gallery_design(row.id));
    auto facts = stabilizer_facts(moves, 0, opt.enumeration_cap);
    const GroupProfile& p = facts.profile;
    r.check(row.id + ": hole stabilizer order", order_json(row.order), order_json(p.order));
    if (row.shape == "symmetric") r.check(row.id + ": symmetric on the other points", true, p.alt_sym.is_symmetric);
    if (row.shape == "alternating") r.check(row.id + ": alternating on the other points", true, p.alt_sym.is_alternating);
    if (row.shape == "M12") {
      r.check(row.id + ": 5-transitive", 5, p.max_transitivity);
      r.check(row.id + ": minimal degree", 8, p.minimal_degree.kind == MinimalDegree::Kind::exact
                                                  ? Json(p.minimal_degree.value)
                                                  : Json(nullptr));
    }
    if (row.shape == "S3 wr S2") r.check(row.id + ": primitive", true, p.primitive);
  }
}

inline void reproduce_theorem_b(RunReport& r) {
  const std::string ids[] = {"boolean:2", "boolean:3", "boolean:4", "boolean:5", "complete:3", "complete:4",
                             "complete:5", "7-4-2",     "10-4-2",    "p3",        "13-4-1-cyclic", "16-4-1"};
  for (const auto& id : ids) {
    const MoveTable moves(gallery_design(id));
    const TheoremBVerdict v = theorem_b_check(moves);
    const bool expect_boolean = id.starts_with("boolean:");
    r.check(id + ": recognized as Boolean", expect_boolean, v.boolean);
    r.check(id + ": all hole stabilizers trivial", expect_boolean, v.all_trivial);
  }
}

}  // namespace detail

inline const std::vector<std::string>& reproducible_tables() {
  static const std::vector<std::string> names{"table1-subset", "table2-row1", "theorem-c-smalls", "theorem-b"};
  return names;
}

inline RunReport cmd_reproduce(const std::string& table, const CommandOptions& opt = {}) {
  return run_command("reproduce", {table}, opt.seed, [&](RunReport& r) {
    if (table == "table1-subset") detail::reproduce_table1(r, opt);
    else if (table == "table2-row1") detail::reproduce_table2_row1(r, opt);
    else if (table == "theorem-c-smalls") detail::reproduce_theorem_c(r, opt);
    else if (table == "theorem-b") detail::reproduce_theorem_b(r);
    else throw Error("unknown table '" + table + "'");
  });
}

}  // namespace holestab

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "berge/constructions.hpp"
#include "berge/detection.hpp"
#include "berge/extremal.hpp"
#include "berge/hypergraph.hpp"
#include "berge/io.hpp"
#include "berge/sdr.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const char* yesno(bool b) { return b ? "true" : "false"; }

std::string label_text(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void print_witness_text(const berge::Hypergraph& h,
                        const berge::BergeWitness& w) {
  std::cout << "core:";
  for (int v : w.core) std::cout << ' ' << v;
  std::cout << '\n';
  const auto pairs = berge::core_pairs(w.core);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    std::cout << "pair " << pairs[p].first << ' ' << pairs[p].second << " ->";
    for (int v : h.edges()[w.edge_for_pair[p]]) std::cout << ' ' << v;
    std::cout << '\n';
  }
}

void print_edges_text(const char* tag,
                      const std::vector<berge::VertexSet>& edges) {
  for (const auto& e : edges) {
    std::cout << tag << ':';
    for (int v : e) std::cout << ' ' << v;
    std::cout << '\n';
  }
}

json edges_json(const std::vector<berge::VertexSet>& edges) {
  json arr = json::array();
  for (const auto& e : edges) arr.push_back(e.members());
  return arr;
}

void print_hypergraph(const berge::Hypergraph& h, const std::string& format) {
  if (format == "json")
    std::cout << berge::hypergraph_json(h).dump() << '\n';
  else
    std::cout << berge::to_text(h);
}

int run_gen(const std::string& kind, int N, int k, int r, int n,
            bool with_parts, const std::string& format) {
  if (with_parts && !(kind == "turan" && format == "json"))
    throw std::invalid_argument("--with-parts requires gen turan --format json");
  if (kind == "turan") {
    if (N < 0 || k < 1)
      throw std::invalid_argument(
          "gen turan needs nonnegative --N and positive --k");
    const berge::TuranConstruction built = berge::build_turan_partite(N, k, r);
    if (format == "json") {
      ordered_json j = berge::hypergraph_json(built.hypergraph);
      if (with_parts) j["parts"] = berge::partite_json(built.partition)["parts"];
      std::cout << j.dump() << '\n';
    } else {
      std::cout << berge::to_text(built.hypergraph);
    }
    return 0;
  }
  if (kind == "complete") {
    if (N < 0) throw std::invalid_argument("gen complete needs nonnegative --N");
    print_hypergraph(berge::build_complete(N, r), format);
    return 0;
  }
  if (kind == "expansion") {
    if (n < 2) throw std::invalid_argument("gen expansion needs --n >= 2");
    print_hypergraph(berge::build_expansion(n, r), format);
    return 0;
  }
  throw std::invalid_argument("unknown construction '" + kind + "'");
}

int run_count(int N, int k, int r, const std::string& format) {
  const std::uint64_t value = berge::turan_count(N, k, r);
  if (format == "json")
    std::cout << ordered_json{{"count", value}}.dump() << '\n';
  else
    std::cout << value << '\n';
  return 0;
}

int run_check_free(const std::string& file, int order,
                   const std::string& format) {
  const berge::Hypergraph h = berge::read_hypergraph_file(file);
  const auto witness = berge::contains_berge_clique(h, order);
  if (format == "json") {
    ordered_json j;
    j["free"] = !witness.has_value();
    if (witness) j["witness"] = berge::witness_json(h, *witness);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (witness ? "not free" : "free") << '\n';
    if (witness) print_witness_text(h, *witness);
  }
  return witness ? 1 : 0;
}

int run_sdr(const std::string& file, const std::string& format) {
  const berge::LabeledSetFamily labeled =
      berge::set_family_from_json(json::parse(slurp(file)));
  const auto outcome = berge::find_sdr(labeled.family);

  if (const auto* sdr = std::get_if<berge::Sdr>(&outcome)) {
    if (format == "json") {
      json reps = json::array();
      for (int id : *sdr) reps.push_back(labeled.labels[id]);
      std::cout << ordered_json{{"sdr", reps}}.dump() << '\n';
    } else {
      std::cout << "sdr:";
      for (int id : *sdr) std::cout << ' ' << label_text(labeled.labels[id]);
      std::cout << '\n';
    }
    return 0;
  }

  const auto& violator = std::get<berge::HallViolator>(outcome);
  if (format == "json") {
    ordered_json j;
    j["sdr"] = nullptr;
    j["violator"] = berge::violator_json(violator);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "no sdr\nindices:";
    for (int i : violator.indices) std::cout << ' ' << i;
    std::cout << "\nunion_size: " << violator.union_size << '\n';
  }
  return 1;
}

int run_verify_lemma(int m, const std::string& format) {
  const berge::LemmaReport report = berge::verify_sdr_lemma(m);
  if (format == "json") {
    ordered_json j;
    j["m"] = report.m;
    j["bound"] = report.bound;
    j["families_enumerated"] = report.families_enumerated;
    j["linked_families"] = report.linked_families;
    j["linked_without_sdr"] = report.linked_without_sdr;
    j["max_union_without_sdr"] = report.max_union_without_sdr;
    j["bound_violations"] = report.bound_violations;
    j["equality_families"] = report.equality_families;
    j["equality_normal_forms"] = report.equality_normal_forms;
    j["characterization_holds"] = report.characterization_holds;
    j["unlinked_without_sdr_over_bound"] =
        report.unlinked_without_sdr_over_bound;
    j["verified"] = report.verified();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "m: " << report.m << '\n'
              << "bound: " << report.bound << '\n'
              << "families_enumerated: " << report.families_enumerated << '\n'
              << "linked_families: " << report.linked_families << '\n'
              << "linked_without_sdr: " << report.linked_without_sdr << '\n'
              << "max_union_without_sdr: " << report.max_union_without_sdr
              << '\n'
              << "bound_violations: " << report.bound_violations << '\n'
              << "equality_families: " << report.equality_families << '\n'
              << "equality_normal_forms: " << report.equality_normal_forms
              << '\n'
              << "characterization_holds: "
              << yesno(report.characterization_holds) << '\n'
              << "unlinked_without_sdr_over_bound: "
              << report.unlinked_without_sdr_over_bound << '\n'
              << "verified: " << yesno(report.verified()) << '\n';
  }
  return report.verified() ? 0 : 1;
}

int run_saturate(const std::string& file, int order, int jobs,
                 const std::string& format) {
  const berge::Hypergraph h = berge::read_hypergraph_file(file);
  const berge::SaturationReport report =
      berge::saturation_check(h, order, jobs);
  if (format == "json") {
    ordered_json j;
    j["free"] = report.free;
    j["saturated"] = report.saturated;
    j["creating"] = edges_json(report.creating);
    j["non_creating"] = edges_json(report.non_creating);
    j["witness"] = report.witness
                       ? json(berge::witness_json(h, *report.witness))
                       : json(nullptr);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "free: " << yesno(report.free) << '\n'
              << "saturated: " << yesno(report.saturated) << '\n'
              << "creating: " << report.creating.size() << '\n'
              << "non_creating: " << report.non_creating.size() << '\n';
    print_edges_text("safe", report.non_creating);
    if (report.witness) print_witness_text(h, *report.witness);
  }
  return report.free && report.saturated ? 0 : 1;
}

int run_recognize(const std::string& file, const std::string& format) {
  const berge::Hypergraph h = berge::read_hypergraph_file(file);
  const auto partition = berge::recognize_complete_partite(h);
  if (format == "json") {
    if (partition)
      std::cout << berge::partite_json(*partition).dump() << '\n';
    else
      std::cout << ordered_json{{"parts", nullptr}}.dump() << '\n';
  } else {
    if (partition) {
      for (const auto& part : partition->parts) {
        std::cout << "part:";
        for (int v : part) std::cout << ' ' << v;
        std::cout << '\n';
      }
    } else {
      std::cout << "not complete multipartite\n";
    }
  }
  return partition ? 0 : 1;
}

int run_search(int N, int order, int r, std::uint64_t budget_nodes,
               double budget_secs, bool fold, const std::string& format) {
  const berge::SearchBudget budget{budget_nodes, budget_secs};
  const auto on_incumbent = [&](int edges, std::uint64_t nodes) {
    if (format == "json") {
      ordered_json j;
      j["event"] = "incumbent";
      j["max_edges"] = edges;
      j["nodes"] = nodes;
      std::cout << j.dump() << std::endl;
    } else {
      std::cout << "incumbent: max_edges=" << edges << " nodes=" << nodes
                << std::endl;
    }
  };
  const berge::SearchResult result =
      berge::brute_force_ex(N, order, r, budget, fold, 3, on_incumbent);
  if (format == "json") {
    ordered_json j;
    j["event"] = "result";
    j["max_edges"] = result.max_edges;
    j["extremal_count"] = result.extremal_count;
    j["nodes"] = result.nodes_visited;
    j["folded"] = result.folded;
    ordered_json samples = ordered_json::array();
    for (const auto& sample : result.samples)
      samples.push_back(berge::hypergraph_json(sample));
    j["samples"] = std::move(samples);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "max_edges: " << result.max_edges << '\n'
              << "extremal_count: " << result.extremal_count << '\n'
              << "nodes: " << result.nodes_visited << '\n'
              << "folded: " << yesno(result.folded) << '\n';
    for (const auto& sample : result.samples) {
      std::cout << "sample:\n" << berge::to_text(sample);
    }
  }
  return 0;
}

int run_verify(int order, int max_vertex_count, int jobs, bool beyond_regime,
               const std::string& format) {
  const auto on_instance = [&](const berge::DeskInstance& inst) {
    if (format == "json") {
      ordered_json j;
      j["n"] = order;
      j["N"] = inst.vertex_count;
      j["edges"] = inst.built_edges;
      j["free"] = inst.free;
      j["saturated"] = inst.saturated;
      j["partite"] = inst.partite_recognized;
      std::cout << j.dump() << std::endl;
    } else {
      std::cout << "N=" << inst.vertex_count << " edges=" << inst.built_edges
                << " free=" << yesno(inst.free)
                << " saturated=" << yesno(inst.saturated)
                << " partite=" << yesno(inst.partite_recognized) << std::endl;
    }
  };
  const berge::DeskReport report = berge::verify_theorem_desk(
      order, max_vertex_count, jobs, beyond_regime, on_instance);
  if (format == "json") {
    ordered_json j;
    j["all_pass"] = report.all_pass;
    j["scope"] = report.scope_note;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "all_pass: " << yesno(report.all_pass) << '\n'
              << "scope: " << report.scope_note << '\n';
  }
  return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turán counts, partite constructions, and Berge-clique "
               "detection for uniform hypergraphs"};
  app.require_subcommand(1);

  const auto add_format = [](CLI::App* cmd, std::string& fmt) {
    cmd->add_option("--format", fmt, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "emit a named construction");
  std::string gen_kind;
  int gen_N = -1, gen_k = -1, gen_r = 3, gen_n = -1;
  bool gen_with_parts = false;
  std::string gen_format = "text";
  gen->add_option("kind", gen_kind, "turan | complete | expansion")
      ->required();
  gen->add_option("--N", gen_N, "vertex count");
  gen->add_option("--k", gen_k, "number of parts (turan)");
  gen->add_option("--r", gen_r, "uniformity")->capture_default_str();
  gen->add_option("--n", gen_n, "core order (expansion)");
  gen->add_flag("--with-parts", gen_with_parts,
                "also emit the partition (json only)");
  add_format(gen, gen_format);

  auto* count = app.add_subcommand("count", "balanced partite edge count");
  int count_N = 0, count_k = 0, count_r = 3;
  std::string count_format = "text";
  count->add_option("--N", count_N, "vertex count")->required();
  count->add_option("--k", count_k, "number of parts")->required();
  count->add_option("--r", count_r, "uniformity")->capture_default_str();
  add_format(count, count_format);

  auto* check = app.add_subcommand("check-free",
                                   "test a file for Berge-clique freeness");
  std::string check_file;
  int check_order = 0;
  std::string check_format = "text";
  check->add_option("--file", check_file, "hypergraph file (text or json)")
      ->required();
  check->add_option("--clique-n", check_order, "Berge clique order")
      ->required();
  add_format(check, check_format);

  auto* sdr = app.add_subcommand("sdr",
                                 "distinct representatives of a set family");
  std::string sdr_file;
  std::string sdr_format = "text";
  sdr->add_option("--file", sdr_file, "set family json")->required();
  add_format(sdr, sdr_format);

  auto* lemma = app.add_subcommand("verify-lemma",
                                   "exhaustive representative-bound check");
  int lemma_m = 5;
  std::string lemma_format = "text";
  lemma->add_option("--m", lemma_m, "family size")->capture_default_str();
  add_format(lemma, lemma_format);

  auto* saturate = app.add_subcommand("saturate",
                                      "test every absent edge for traps");
  std::string sat_file;
  int sat_order = 0, sat_jobs = 1;
  std::string sat_format = "text";
  saturate->add_option("--file", sat_file, "hypergraph file")->required();
  saturate->add_option("--clique-n", sat_order, "Berge clique order")
      ->required();
  saturate->add_option("--jobs", sat_jobs, "worker threads")
      ->envname("BERGE_JOBS")
      ->capture_default_str();
  add_format(saturate, sat_format);

  auto* recognize = app.add_subcommand(
      "recognize", "recover a complete multipartite partition");
  std::string rec_file;
  std::string rec_format = "text";
  recognize->add_option("--file", rec_file, "hypergraph file")->required();
  add_format(recognize, rec_format);

  auto* search = app.add_subcommand("search",
                                    "exhaustive extremal edge-count search");
  int search_N = 0, search_order = 0, search_r = 3;
  std::uint64_t search_nodes = 0;
  double search_secs = 0.0;
  bool search_fold = false;
  std::string search_format = "text";
  search->add_option("--N", search_N, "vertex count")->required();
  search->add_option("--clique-n", search_order, "Berge clique order")
      ->required();
  search->add_option("--r", search_r, "uniformity")->capture_default_str();
  search->add_option("--budget-nodes", search_nodes,
                     "node cap (0 = unlimited)");
  search->add_option("--budget-secs", search_secs,
                     "wall-clock cap (0 = unlimited)");
  search->add_flag("--fold", search_fold,
                   "count extremal graphs up to vertex relabelling");
  add_format(search, search_format);

  auto* verify = app.add_subcommand("verify", "desk verification suite");
  int verify_order = 13, verify_max = 16, verify_jobs = 1;
  bool verify_beyond = false;
  std::string verify_format = "text";
  verify->add_option("--clique-n", verify_order, "Berge clique order")
      ->capture_default_str();
  verify->add_option("--max-N", verify_max, "largest vertex count")
      ->capture_default_str();
  verify->add_option("--jobs", verify_jobs, "worker threads")
      ->envname("BERGE_JOBS")
      ->capture_default_str();
  verify->add_flag("--beyond-regime", verify_beyond,
                   "allow vertex counts past 2*clique-n - 2 (exploratory)");
  add_format(verify, verify_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed())
      return run_gen(gen_kind, gen_N, gen_k, gen_r, gen_n, gen_with_parts,
                     gen_format);
    if (count->parsed()) return run_count(count_N, count_k, count_r,
                                          count_format);
    if (check->parsed())
      return run_check_free(check_file, check_order, check_format);
    if (sdr->parsed()) return run_sdr(sdr_file, sdr_format);
    if (lemma->parsed()) return run_verify_lemma(lemma_m, lemma_format);
    if (saturate->parsed())
      return run_saturate(sat_file, sat_order, sat_jobs, sat_format);
    if (recognize->parsed()) return run_recognize(rec_file, rec_format);
    if (search->parsed())
      return run_search(search_N, search_order, search_r, search_nodes,
                        search_secs, search_fold, search_format);
    if (verify->parsed())
      return run_verify(verify_order, verify_max, verify_jobs, verify_beyond,
                        verify_format);
  } catch (const berge::BudgetExceededError& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

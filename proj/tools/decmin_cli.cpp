// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "decmin/decomp.hpp"
#include "decmin/instance.hpp"
#include "decmin/partitions.hpp"
#include "decmin/relaxation.hpp"
#include "decmin/setfn.hpp"
#include "decmin/verify.hpp"

namespace {

using decmin::IntVec;
using decmin::Mask;
using decmin::Rat;
using decmin::RatVec;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitVerifyFail = 3;

ordered_json mask_json(Mask X, const decmin::GroundSet& g) {
  ordered_json a = ordered_json::array();
  for (int s : decmin::mask_elements(X)) a.push_back(g.name(s));
  return a;
}

ordered_json rat_vec_json(const RatVec& v) {
  ordered_json a = ordered_json::array();
  for (const Rat& r : v) a.push_back(decmin::rat_str(r));
  return a;
}

ordered_json chain_json(const decmin::ValuedChain& c, const decmin::GroundSet& g) {
  ordered_json j;
  ordered_json chain = ordered_json::array();
  ordered_json blocks = ordered_json::array();
  for (int i = 0; i < c.size(); ++i) {
    chain.push_back(mask_json(c.chain[i], g));
    blocks.push_back(mask_json(c.block(i), g));
  }
  j["values"] = rat_vec_json(c.values);
  j["chain"] = std::move(chain);
  j["blocks"] = std::move(blocks);
  return j;
}

ordered_json node_json(const decmin::DecompNode& node, const decmin::GroundSet& g) {
  auto names = [&](const std::vector<int>& v) {
    ordered_json a = ordered_json::array();
    for (int s : v) a.push_back(g.name(s));
    return a;
  };
  ordered_json j;
  j["elements"] = names(node.elements);
  j["floor_avg"] = node.floor_avg;
  if (!node.x.empty()) j["x"] = node.x;
  if (!node.y_or_z.empty()) j["y_or_z"] = node.y_or_z;
  j["s_plus"] = names(node.s_plus);
  j["s_minus"] = names(node.s_minus);
  if (!node.s_zero.empty()) j["s_zero"] = names(node.s_zero);
  ordered_json kids = ordered_json::array();
  for (const auto& c : node.children) kids.push_back(node_json(c, g));
  j["children"] = std::move(kids);
  return j;
}

decmin::Instance load(const std::string& path) {
  std::string warning;
  decmin::Instance inst = decmin::parse_instance(path, &warning);
  if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
  return inst;
}

int cmd_decmin(const std::string& path, const std::string& alg, bool trace) {
  decmin::Instance inst = load(path);
  decmin::SupermodularOracle p = inst.oracle();
  ordered_json out;
  out["algorithm"] = alg;
  decmin::DecompTrace tr;
  IntVec m;
  if (alg == "groenevelt") {
    m = decmin::groenevelt_decmin(p, trace ? &tr : nullptr);
  } else if (alg == "fujishige") {
    m = decmin::fujishige_decmin(p, trace ? &tr : nullptr);
  } else if (alg == "relax") {
    m = decmin::continuous_relaxation_decmin(p, decmin::min_norm_point(p));
  } else {  // brute
    auto e = decmin::enumerate_members(p);
    auto best = decmin::brute_decmin_set(e);
    if (best.empty()) throw decmin::ValidationError("empty M-convex set");
    m = best.front();
    ordered_json all = ordered_json::array();
    for (const IntVec& d : best) all.push_back(d);
    out["decmin_set"] = std::move(all);
  }
  out["decmin"] = m;
  out["square_sum"] = decmin::square_sum(m);
  if (trace && (alg == "groenevelt" || alg == "fujishige")) {
    out["trace"] = node_json(tr.root, p.ground());
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_partition(const std::string& path, const std::string& which) {
  decmin::Instance inst = load(path);
  decmin::SupermodularOracle p = inst.oracle();
  decmin::ValuedChain c = which == "principal"
                              ? decmin::principal_partition(p)
                              : decmin::canonical_partition_iterative(p);
  ordered_json out = chain_json(c, p.ground());
  out["which"] = which;
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_minnorm(const std::string& path) {
  decmin::Instance inst = load(path);
  decmin::SupermodularOracle p = inst.oracle();
  ordered_json out;
  out["min_norm_point"] = rat_vec_json(decmin::min_norm_point(p));
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_mincost(const std::string& path, const std::string& cost_arg) {
  decmin::Instance inst = load(path);
  decmin::SupermodularOracle p = inst.oracle();
  RatVec c;
  if (!cost_arg.empty()) {
    std::stringstream ss(cost_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) c.push_back(decmin::rat_parse(tok));
  } else if (inst.cost) {
    c = *inst.cost;
  } else {
    std::cerr << "error: no cost given (--cost or instance \"cost\" field)\n";
    return kExitUsage;
  }
  IntVec m = decmin::min_cost_decmin(p, c);
  Rat total = 0;
  for (int s = 0; s < p.n(); ++s) total += c[s] * m[s];
  ordered_json out;
  out["decmin"] = m;
  out["cost"] = decmin::rat_str(total);
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_structure(const std::string& path) {
  decmin::Instance inst = load(path);
  decmin::SupermodularOracle p = inst.oracle();
  decmin::DecMinStructure st = decmin::decmin_structure(p);
  ordered_json out;
  out["base"] = st.base;
  out["canonical"] = chain_json(st.canonical, p.ground());
  if (p.n() <= 16) {
    ordered_json bases = ordered_json::array();
    const Mask all = p.full();
    // Bases = maximal independent sets; ranks agree, so collect the
    // independent sets of maximum cardinality.
    int rank = 0;
    std::vector<Mask> indep;
    for (Mask I = 0; I <= all; ++I) {
      if (st.independent(I)) {
        indep.push_back(I);
        rank = std::max(rank, decmin::popcount(I));
      }
    }
    for (Mask I : indep)
      if (decmin::popcount(I) == rank) bases.push_back(mask_json(I, p.ground()));
    out["basis_family"] = std::move(bases);
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& path, std::uint32_t seed, int count) {
  bool all_ok = true;
  ordered_json out;
  ordered_json runs = ordered_json::array();
  auto run_one = [&](const decmin::SupermodularOracle& p, const std::string& label) {
    decmin::BatteryOptions opts;
    opts.with_duality = p.n() <= 4;
    decmin::BatteryReport rep = decmin::run_theorem_battery(p, opts);
    ordered_json r;
    r["instance"] = label;
    ordered_json items = ordered_json::array();
    for (const auto& it : rep.items) {
      ordered_json e;
      e["check"] = it.name;
      e["pass"] = it.pass;
      if (!it.detail.empty()) e["detail"] = it.detail;
      items.push_back(std::move(e));
      std::cout << (it.pass ? "PASS " : "FAIL ") << label << ": " << it.name
                << (it.detail.empty() ? "" : " [" + it.detail + "]") << "\n";
    }
    r["items"] = std::move(items);
    r["all_pass"] = rep.all_pass();
    runs.push_back(std::move(r));
    if (!rep.all_pass()) all_ok = false;
  };
  if (!path.empty()) {
    decmin::Instance inst = load(path);
    run_one(inst.oracle(), path);
  }
  std::mt19937 rng(seed);
  for (int i = 0; i < count; ++i) {
    run_one(decmin::gen_random_instance(5, 6, rng),
            "generated#" + std::to_string(i));
  }
  out["runs"] = std::move(runs);
  out["all_pass"] = all_ok;
  std::cout << out.dump(2) << "\n";
  return all_ok ? kExitOk : kExitVerifyFail;
}

int cmd_gen(const std::string& kind, int n, int edges, long long range,
            std::uint32_t seed, const std::string& out_path) {
  std::mt19937 rng(seed);
  decmin::SupermodularOracle p = [&] {
    if (kind == "graph") return decmin::gen_graph_instance(n, edges, rng);
    if (kind == "modular") {
      auto base = decmin::gen_graph_instance(n, edges, rng);
      return decmin::gen_modular_shift(base, range, rng);
    }
    return decmin::gen_table_instance(n, range, rng);
  }();
  decmin::Instance inst = decmin::instance_from_oracle(p);
  if (out_path.empty() || out_path == "-") {
    std::cout << decmin::serialize_instance(inst);
  } else {
    decmin::write_instance(inst, out_path);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decreasing minimization on M-convex sets"};
  app.require_subcommand(1);

  std::string path, alg = "fujishige", which = "canonical", cost_arg, gen_kind;
  std::string out_path;
  bool trace = false;
  std::uint32_t seed = 1;
  int count = 0, gen_n = 4, gen_edges = 6;
  long long gen_range = 4;

  auto* c_decmin = app.add_subcommand("decmin", "Compute a dec-min element");
  c_decmin->add_option("instance", path)->required();
  c_decmin->add_option("--alg", alg)
      ->check(CLI::IsMember({"groenevelt", "fujishige", "relax", "brute"}));
  c_decmin->add_flag("--trace", trace, "dump the decomposition tree");

  auto* c_part = app.add_subcommand("partition", "Canonical or principal partition");
  c_part->add_option("instance", path)->required();
  c_part->add_option("--which", which)
      ->check(CLI::IsMember({"canonical", "principal"}));

  auto* c_minnorm = app.add_subcommand("minnorm", "Fractional min-norm dec-min point");
  c_minnorm->add_option("instance", path)->required();

  auto* c_mincost = app.add_subcommand("mincost", "Cheapest dec-min element");
  c_mincost->add_option("instance", path)->required();
  c_mincost->add_option("--cost", cost_arg, "comma-separated rationals");

  auto* c_struct = app.add_subcommand("structure", "Matroidal dec-min structure");
  c_struct->add_option("instance", path)->required();

  auto* c_verify = app.add_subcommand("verify", "Run the theorem battery");
  c_verify->add_option("instance", path);
  c_verify->add_option("--seed", seed);
  c_verify->add_option("--count", count, "extra generated instances");

  auto* c_gen = app.add_subcommand("gen", "Generate an instance file");
  c_gen->add_option("kind", gen_kind)
      ->required()
      ->check(CLI::IsMember({"graph", "modular", "table"}));
  c_gen->add_option("-n", gen_n);
  c_gen->add_option("--edges", gen_edges);
  c_gen->add_option("--range", gen_range);
  c_gen->add_option("--seed", seed);
  c_gen->add_option("-o,--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_decmin->parsed()) return cmd_decmin(path, alg, trace);
    if (c_part->parsed()) return cmd_partition(path, which);
    if (c_minnorm->parsed()) return cmd_minnorm(path);
    if (c_mincost->parsed()) return cmd_mincost(path, cost_arg);
    if (c_struct->parsed()) return cmd_structure(path);
    if (c_verify->parsed()) {
      if (path.empty() && count == 0) count = 5;
      return cmd_verify(path, seed, count);
    }
    if (c_gen->parsed()) return cmd_gen(gen_kind, gen_n, gen_edges, gen_range,
                                        seed, out_path);
  } catch (const decmin::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

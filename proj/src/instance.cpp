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

#include "decmin/instance.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace decmin {

namespace {

using ordered_json = nlohmann::ordered_json;

ExtInt parse_ext(const ordered_json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "-inf") return ExtInt::neg_inf();
    throw ValidationError("table entry string must be \"-inf\", got \"" +
                          j.get<std::string>() + "\"");
  }
  if (!j.is_number_integer()) {
    throw ValidationError("table entry must be an integer or \"-inf\"");
  }
  return ExtInt(j.get<long long>());
}

ordered_json ext_json(const ExtInt& v) {
  if (v.is_neg_inf()) return "-inf";
  return v.value();
}

InstanceSpec parse_spec(const ordered_json& j, int n) {
  InstanceSpec spec;
  std::string type = j.at("type").get<std::string>();
  if (type == "table") {
    spec.kind = InstanceSpec::Kind::kTable;
    const auto& t = j.at("table");
    if (!t.is_array() || t.size() != (std::size_t(1) << n)) {
      throw ValidationError("table must have exactly 2^n entries");
    }
    for (const auto& e : t) spec.table.push_back(parse_ext(e));
  } else if (type == "graph") {
    spec.kind = InstanceSpec::Kind::kGraph;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw ValidationError("each edge must be a pair of element indices");
      }
      int a = e[0].get<int>(), b = e[1].get<int>();
      if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
        throw ValidationError("edge endpoints must be distinct indices in [0,n)");
      }
      spec.edges.emplace_back(a, b);
    }
  } else if (type == "modular") {
    spec.kind = InstanceSpec::Kind::kModular;
    spec.base = std::make_shared<InstanceSpec>(parse_spec(j.at("base"), n));
    const auto& w = j.at("shift");
    if (!w.is_array() || static_cast<int>(w.size()) != n) {
      throw ValidationError("shift must have n entries");
    }
    for (const auto& v : w) spec.shift.push_back(v.get<long long>());
  } else {
    throw ValidationError("unknown spec type \"" + type + "\"");
  }
  return spec;
}

ordered_json spec_json(const InstanceSpec& spec) {
  ordered_json j;
  switch (spec.kind) {
    case InstanceSpec::Kind::kTable: {
      j["type"] = "table";
      ordered_json t = ordered_json::array();
      for (const ExtInt& v : spec.table) t.push_back(ext_json(v));
      j["table"] = std::move(t);
      break;
    }
    case InstanceSpec::Kind::kGraph: {
      j["type"] = "graph";
      ordered_json e = ordered_json::array();
      for (auto [a, b] : spec.edges) e.push_back(ordered_json::array({a, b}));
      j["edges"] = std::move(e);
      break;
    }
    case InstanceSpec::Kind::kModular: {
      j["type"] = "modular";
      j["base"] = spec_json(*spec.base);
      j["shift"] = spec.shift;
      break;
    }
  }
  return j;
}

ExtInt eval_spec(const InstanceSpec& spec, Mask X) {
  switch (spec.kind) {
    case InstanceSpec::Kind::kTable:
      return spec.table[X];
    case InstanceSpec::Kind::kGraph: {
      long long cnt = 0;
      for (auto [a, b] : spec.edges)
        if ((X >> a & 1) && (X >> b & 1)) ++cnt;
      return ExtInt(cnt);
    }
    case InstanceSpec::Kind::kModular:
      return eval_spec(*spec.base, X) + ExtInt(vec_sum(spec.shift, X));
  }
  throw std::logic_error("unreachable spec kind");
}

void validate(const Instance& inst, std::string* warning) {
  const int n = inst.n;
  if (n < 1 || n > kMaxGroundSet) {
    throw ValidationError("n out of range [1," + std::to_string(kMaxGroundSet) + "]");
  }
  if (!inst.names.empty() && static_cast<int>(inst.names.size()) != n) {
    throw ValidationError("names must be empty or have n entries");
  }
  auto eval = [&](Mask X) { return eval_spec(inst.spec, X); };
  if (eval(0) != ExtInt(0)) throw ValidationError("p(empty) must be 0");
  if (!eval(full_mask(n)).is_finite()) {
    throw ValidationError("p(S) must be finite");
  }
  auto super_ok = [&](Mask X, Mask Y) {
    ExtInt pu = eval(X | Y), pi = eval(X & Y);
    if (pu.is_neg_inf() || pi.is_neg_inf()) return true;
    ExtInt px = eval(X), py = eval(Y);
    if (px.is_neg_inf() || py.is_neg_inf()) return true;
    return pu.value() + pi.value() >= px.value() + py.value();
  };
  auto fail = [&](Mask X, Mask Y) {
    throw ValidationError("supermodularity violated at X=" + mask_str(X, n) +
                          ", Y=" + mask_str(Y, n));
  };
  if (n <= 12) {
    const Mask all = full_mask(n);
    for (Mask X = 0; X <= all; ++X) {
      for (Mask Y = X + 1; Y <= all; ++Y) {
        if ((X & ~Y) == 0 || (Y & ~X) == 0) continue;  // nested pairs trivial
        if (!super_ok(X, Y)) fail(X, Y);
      }
    }
  } else {
    std::mt19937 rng(12345);
    const Mask all = full_mask(n);
    for (int trial = 0; trial < 20000; ++trial) {
      Mask X = rng() & all, Y = rng() & all;
      if (!super_ok(X, Y)) fail(X, Y);
    }
    if (warning) {
      *warning = "n > 12: supermodularity checked on a random sample only";
    }
  }
  if (inst.cost && static_cast<int>(inst.cost->size()) != n) {
    throw ValidationError("cost must have n entries");
  }
}

Instance parse_json(const ordered_json& j, std::string* warning) {
  Instance inst;
  inst.n = j.at("n").get<int>();
  if (j.contains("names")) {
    for (const auto& s : j.at("names"))
      inst.names.push_back(s.get<std::string>());
  }
  inst.spec = parse_spec(j.at("spec"), inst.n);
  if (j.contains("cost")) {
    RatVec c;
    for (const auto& v : j.at("cost")) {
      if (v.is_string()) {
        c.push_back(rat_parse(v.get<std::string>()));
      } else {
        c.push_back(Rat(v.get<long long>()));
      }
    }
    inst.cost = std::move(c);
  }
  validate(inst, warning);
  return inst;
}

}  // namespace

SupermodularOracle Instance::oracle() const {
  GroundSet g{n, names};
  InstanceSpec s = spec;  // captured by value; table/edges are shared-free copies
  return SupermodularOracle(g, [s](Mask X) { return eval_spec(s, X); });
}

Instance parse_instance_text(const std::string& json_text, std::string* warning) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_json(j, warning);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("missing or mistyped field: ") + e.what());
  }
}

Instance parse_instance(const std::string& path, std::string* warning) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str(), warning);
}

std::string serialize_instance(const Instance& inst) {
  ordered_json j;
  j["n"] = inst.n;
  if (!inst.names.empty()) j["names"] = inst.names;
  j["spec"] = spec_json(inst.spec);
  if (inst.cost) {
    ordered_json c = ordered_json::array();
    for (const Rat& v : *inst.cost) c.push_back(rat_str(v));
    j["cost"] = std::move(c);
  }
  return j.dump(2) + "\n";
}

void write_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << serialize_instance(inst);
}

Instance instance_from_oracle(const SupermodularOracle& p) {
  if (p.n() > 12) {
    throw std::invalid_argument("instance_from_oracle: n <= 12 tables only");
  }
  Instance inst;
  inst.n = p.n();
  inst.names = p.ground().names;
  inst.spec.kind = InstanceSpec::Kind::kTable;
  for (Mask X = 0; X <= p.full(); ++X) inst.spec.table.push_back(p.eval(X));
  return inst;
}

}  // namespace decmin

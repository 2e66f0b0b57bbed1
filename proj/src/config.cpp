#include "cfmtc/config.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "cfmtc/errors.hpp"
#include "cfmtc/rng.hpp"

namespace cfmtc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const std::string& key) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end == t.c_str() || *end != '\0') {
    throw ConfigError("config key " + key + ": cannot parse number from '" + t + "'");
  }
  return v;
}

std::uint64_t parse_unsigned(const std::string& text, const std::string& key) {
  const std::string t = trim(text);
  char* end = nullptr;
  const unsigned long long v = std::strtoull(t.c_str(), &end, 10);
  if (end == t.c_str() || *end != '\0') {
    throw ConfigError("config key " + key + ": cannot parse integer from '" + t + "'");
  }
  return v;
}

std::vector<double> parse_number_list(const std::string& text, const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item, key));
  if (out.empty()) throw ConfigError("config key " + key + ": empty list");
  return out;
}

FieldSpec parse_field(const std::string& text, const std::string& key) {
  const std::string t = trim(text);
  FieldSpec spec;
  auto args_of = [&](const std::string& prefix) {
    if (t.back() != ')') {
      throw ConfigError("config key " + key + ": missing ')' in '" + t + "'");
    }
    return t.substr(prefix.size(), t.size() - prefix.size() - 1);
  };
  if (t.rfind("uniform(", 0) == 0) {
    const std::vector<double> args = parse_number_list(args_of("uniform("), key);
    if (args.size() != 2 || !(args[0] <= args[1])) {
      throw ConfigError("config key " + key + ": uniform(lo,hi) needs lo <= hi");
    }
    spec.kind = FieldSpec::Kind::uniform;
    spec.lo = args[0];
    spec.hi = args[1];
    return spec;
  }
  if (t.rfind("choice(", 0) == 0) {
    spec.kind = FieldSpec::Kind::choice;
    spec.values = parse_number_list(args_of("choice("), key);
    return spec;
  }
  if (t.find(',') != std::string::npos) {
    spec.kind = FieldSpec::Kind::list;
    spec.values = parse_number_list(t, key);
    return spec;
  }
  spec.kind = FieldSpec::Kind::scalar;
  spec.scalar = parse_number(t, key);
  return spec;
}

// Field identifiers baked into the materialization RNG keys.
enum FieldId : std::uint64_t {
  kFieldQ = 1,
  kFieldL = 2,
  kFieldCycles = 3,
  kFieldMu = 4,
  kFieldW = 5,
  kFieldFFan = 6,
  kFieldFCpu = 7,
  kFieldPCn = 8,
};

std::vector<double> resolve(const FieldSpec& spec, std::size_t k_count,
                            std::uint64_t seed, std::uint64_t field_id,
                            const std::string& key) {
  std::vector<double> out(k_count);
  switch (spec.kind) {
    case FieldSpec::Kind::scalar:
      std::fill(out.begin(), out.end(), spec.scalar);
      break;
    case FieldSpec::Kind::list:
      if (spec.values.size() != k_count) {
        throw ConfigError("config key " + key + ": list length " +
                          std::to_string(spec.values.size()) + " != K = " +
                          std::to_string(k_count));
      }
      out = spec.values;
      break;
    case FieldSpec::Kind::uniform:
      for (std::size_t k = 0; k < k_count; ++k) {
        Rng rng(derive_key({seed, kTagMaterialize, field_id, k}));
        out[k] = rng.uniform(spec.lo, spec.hi);
      }
      break;
    case FieldSpec::Kind::choice:
      for (std::size_t k = 0; k < k_count; ++k) {
        Rng rng(derive_key({seed, kTagMaterialize, field_id, k}));
        out[k] = spec.values[rng.below(spec.values.size())];
      }
      break;
  }
  return out;
}

using KeyValues = std::map<std::string, std::string>;

KeyValues parse_ini(const std::string& text) {
  KeyValues kv;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto pos = line.find('#'); pos != std::string::npos) {
      line.erase(pos);
    }
    line = trim(line);
    if (line.empty() || line.front() == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("config line " + std::to_string(lineno) + ": bad section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = section + "." + trim(line.substr(0, eq));
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

std::string take(KeyValues& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw ConfigError("config key missing: " + key);
  std::string v = it->second;
  kv.erase(it);
  return v;
}

std::optional<std::string> take_optional(KeyValues& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) return std::nullopt;
  std::string v = it->second;
  kv.erase(it);
  return v;
}

}  // namespace

std::string to_string(PolicyPair p) {
  return std::string(to_string(p.bw)) + "+" + to_string(p.task);
}

PolicyPair policy_pair_from_string(const std::string& text) {
  const auto plus = text.find('+');
  if (plus == std::string::npos) {
    throw ConfigError("policy pair must look like 'oba+oto', got '" + text + "'");
  }
  return {bandwidth_policy_from_string(trim(text.substr(0, plus))),
          task_policy_from_string(trim(text.substr(plus + 1)))};
}

RunConfig parse_config_text(const std::string& text) {
  KeyValues kv = parse_ini(text);
  RunConfig c;

  c.K = parse_unsigned(take(kv, "system.K"), "system.K");
  c.M = parse_unsigned(take(kv, "system.M"), "system.M");
  c.B_hz = parse_number(take(kv, "system.B_hz"), "system.B_hz");
  c.p_b_w = parse_number(take(kv, "system.p_b_w"), "system.p_b_w");
  c.q_w = parse_field(take(kv, "system.q_w"), "system.q_w");
  c.rho = parse_number(take(kv, "system.rho"), "system.rho");
  c.tau_d = parse_number(take(kv, "system.tau_d"), "system.tau_d");
  c.sigma2 = parse_number(take(kv, "system.sigma2"), "system.sigma2");
  c.sigma2_first_w =
      parse_number(take(kv, "system.sigma2_first_w"), "system.sigma2_first_w");

  c.l_bits = parse_field(take(kv, "tasks.l_bits"), "tasks.l_bits");
  c.cycles_per_bit = parse_field(take(kv, "tasks.cycles_per_bit"), "tasks.cycles_per_bit");
  c.mu = parse_field(take(kv, "tasks.mu"), "tasks.mu");
  if (auto w = take_optional(kv, "tasks.w")) {
    c.w = parse_field(*w, "tasks.w");
  } else {
    c.w = FieldSpec{FieldSpec::Kind::scalar, 1.0, {}, 0.0, 0.0};
  }

  c.f_fan_hz = parse_field(take(kv, "compute.f_fan_hz"), "compute.f_fan_hz");
  c.f_cpu_hz = parse_field(take(kv, "compute.f_cpu_hz"), "compute.f_cpu_hz");
  c.f_cpu_max_hz = parse_number(take(kv, "compute.f_cpu_max_hz"), "compute.f_cpu_max_hz");
  c.p_cn_j_per_cycle =
      parse_field(take(kv, "compute.p_cn_j_per_cycle"), "compute.p_cn_j_per_cycle");

  c.pathloss.exponent = parse_number(take(kv, "pathloss.exponent"), "pathloss.exponent");
  c.pathloss.extent_m = parse_number(take(kv, "pathloss.extent_m"), "pathloss.extent_m");
  if (auto v = take_optional(kv, "pathloss.exponent_hop2")) {
    c.pathloss.exponent_hop2 = parse_number(*v, "pathloss.exponent_hop2");
  }
  if (auto v = take_optional(kv, "pathloss.d_ref_m")) {
    c.pathloss.d_ref_m = parse_number(*v, "pathloss.d_ref_m");
  }

  c.trials = parse_unsigned(take(kv, "experiment.trials"), "experiment.trials");
  c.seed = parse_unsigned(take(kv, "experiment.seed"), "experiment.seed");
  if (auto v = take_optional(kv, "experiment.policies")) {
    std::stringstream ss(*v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      c.policies.push_back(policy_pair_from_string(trim(item)));
    }
  }
  if (c.policies.empty()) c.policies.push_back({});
  if (auto v = take_optional(kv, "experiment.cond_threshold")) {
    c.cond_threshold = parse_number(*v, "experiment.cond_threshold");
  }
  if (auto v = take_optional(kv, "experiment.resample_cap")) {
    c.resample_cap = static_cast<int>(parse_unsigned(*v, "experiment.resample_cap"));
  }

  if (!kv.empty()) {
    throw ConfigError("unknown config key: " + kv.begin()->first);
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

Scenario materialize(const RunConfig& c, const ScenarioOverrides& overrides) {
  Scenario s;
  s.K = overrides.K.value_or(c.K);
  s.M = overrides.M.value_or(c.M);
  s.B_hz = c.B_hz;
  s.p_b_w = c.p_b_w;
  s.rho = c.rho;
  s.tau_d = c.tau_d;
  s.sigma2 = c.sigma2;
  s.sigma2_first_w = c.sigma2_first_w;
  s.pathloss = c.pathloss;
  s.seed = c.seed;
  s.cond_threshold = c.cond_threshold;
  s.resample_cap = c.resample_cap;

  s.q_w = resolve(c.q_w, s.K, c.seed, kFieldQ, "system.q_w");
  s.w = resolve(c.w, s.K, c.seed, kFieldW, "tasks.w");

  std::vector<double> l = resolve(c.l_bits, s.K, c.seed, kFieldL, "tasks.l_bits");
  std::vector<double> cyc =
      resolve(c.cycles_per_bit, s.K, c.seed, kFieldCycles, "tasks.cycles_per_bit");
  std::vector<double> mu = resolve(c.mu, s.K, c.seed, kFieldMu, "tasks.mu");
  s.tasks.resize(s.K);
  for (std::size_t k = 0; k < s.K; ++k) {
    s.tasks[k].l_bits = overrides.l_bits.value_or(l[k]);
    s.tasks[k].cycles_per_bit = cyc[k];
    s.tasks[k].mu = overrides.mu.value_or(mu[k]);
    s.tasks[k].label = "task" + std::to_string(k);
  }

  s.compute.f_fan_hz = resolve(c.f_fan_hz, s.K, c.seed, kFieldFFan, "compute.f_fan_hz");
  s.compute.f_cpu_hz = resolve(c.f_cpu_hz, s.K, c.seed, kFieldFCpu, "compute.f_cpu_hz");
  s.compute.f_cpu_max_hz = c.f_cpu_max_hz;
  s.compute.p_cn_j_per_cycle =
      resolve(c.p_cn_j_per_cycle, s.K, c.seed, kFieldPCn, "compute.p_cn_j_per_cycle");

  validate(s);
  return s;
}

const std::string& default_config_text() {
  static const std::string text = R"(# Default desk-scale scenario.
# Units: bits, Hz, W, J, s, cycles.  Second-hop powers q and rho feed the
# normalized uplink SINR; q is also charged in watts for transmission energy.

[system]
K = 8
M = 64
B_hz = 1.0e7
p_b_w = 15.0
q_w = 2.0
rho = 1.0
tau_d = 0.1
sigma2 = 1.0
sigma2_first_w = 1.0e-8

[tasks]
l_bits = 4.0e6
cycles_per_bit = uniform(500,1500)
mu = 0.0
w = 1.0

[compute]
f_fan_hz = choice(2.0e8,3.0e8,4.0e8,5.0e8,6.0e8,7.0e8,8.0e8)
f_cpu_hz = 5.0e9
f_cpu_max_hz = 8.0e9
p_cn_j_per_cycle = uniform(0.0,2.0e-10)

[pathloss]
exponent = 3.5
exponent_hop2 = 0.0
d_ref_m = 1.0
extent_m = 300.0

[experiment]
trials = 1000
seed = 20240901
policies = oba+oto,tdma+oto,rba+oto,noma+oto,oba+ro,oba+sot
cond_threshold = 1.0e8
resample_cap = 16
)";
  return text;
}

}  // namespace cfmtc

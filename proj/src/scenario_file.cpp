#include "v2x/scenario_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace v2x {

namespace {

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};

struct Document {
  std::string name;
  std::map<std::string, Entry> main;
  std::map<std::string, Entry> overrides;
};

[[noreturn]] void fail_at(const std::string& name, int line, const std::string& message) {
  std::ostringstream out;
  out << name << ":" << line << ": " << message;
  throw std::runtime_error(out.str());
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Document tokenize(const std::string& text, const std::string& name) {
  Document doc;
  doc.name = name;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool in_overrides = false;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    std::size_t hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s == "[overrides]") {
        in_overrides = true;
        continue;
      }
      fail_at(name, line, "unknown section '" + s + "' (only [overrides] is valid)");
    }
    std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      fail_at(name, line, "expected 'key = value', got '" + s + "'");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key.empty() || value.empty())
      fail_at(name, line, "expected 'key = value', got '" + s + "'");
    auto& section = in_overrides ? doc.overrides : doc.main;
    if (section.count(key)) fail_at(name, line, "duplicate key '" + key + "'");
    section[key] = Entry{value, line, false};
  }
  return doc;
}

double parse_number(const Document& doc, const std::string& key, const Entry& e) {
  try {
    std::size_t pos = 0;
    double v = std::stod(e.value, &pos);
    if (pos != e.value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    fail_at(doc.name, e.line, "key '" + key + "': not a number: '" + e.value + "'");
  }
}

std::vector<double> parse_list(const Document& doc, const std::string& key,
                               const Entry& e) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(e.value);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty())
      fail_at(doc.name, e.line, "key '" + key + "': empty list element");
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      fail_at(doc.name, e.line, "key '" + key + "': not a number: '" + item + "'");
    }
  }
  if (out.empty()) fail_at(doc.name, e.line, "key '" + key + "': empty list");
  return out;
}

class Reader {
 public:
  Reader(Document& doc, std::map<std::string, Entry>& section)
      : doc_(doc), section_(section) {}

  bool has(const std::string& key) const { return section_.count(key) > 0; }

  double number(const std::string& key) {
    auto it = section_.find(key);
    if (it == section_.end())
      throw std::runtime_error(doc_.name + ": missing required key '" + key + "'");
    it->second.used = true;
    return parse_number(doc_, key, it->second);
  }

  double number_or(const std::string& key, double fallback) {
    return has(key) ? number(key) : fallback;
  }

  std::vector<double> list(const std::string& key) {
    auto it = section_.find(key);
    if (it == section_.end())
      throw std::runtime_error(doc_.name + ": missing required key '" + key + "'");
    it->second.used = true;
    return parse_list(doc_, key, it->second);
  }

  // Exactly one of the alternatives must be present; returns (key, value).
  std::pair<std::string, double> one_of(std::initializer_list<std::string> keys) {
    std::string found;
    for (const auto& k : keys) {
      if (!has(k)) continue;
      if (!found.empty())
        throw std::runtime_error(doc_.name + ": keys '" + found + "' and '" + k +
                                 "' are mutually exclusive");
      found = k;
    }
    if (found.empty()) {
      std::string all;
      for (const auto& k : keys) all += (all.empty() ? "" : " | ") + k;
      throw std::runtime_error(doc_.name + ": one of {" + all + "} is required");
    }
    return {found, number(found)};
  }

  void reject_unused() const {
    for (const auto& [key, entry] : section_)
      if (!entry.used)
        fail_at(doc_.name, entry.line, "unknown key '" + key + "'");
  }

 private:
  Document& doc_;
  std::map<std::string, Entry>& section_;
};

const char* kSweepable[] = {"arrival_rate_pps", "latency_bound_s",
                            "sinr_threshold_db", "p0"};

}  // namespace

ScenarioFile parse_scenario_text(const std::string& text, const std::string& name) {
  Document doc = tokenize(text, name);
  Reader main(doc, doc.main);

  ScenarioFile out;
  ScenarioConfig& c = out.config;

  c.num_cues = static_cast<int>(main.number("num_cues"));
  c.num_dues = static_cast<int>(main.number("num_dues"));
  c.slot_length = main.number("slot_length_s");
  c.slots_per_block = static_cast<std::int64_t>(main.number("slots_per_block"));

  c.pathloss_constant = main.number("pathloss_constant");
  c.decay_exponent = main.number("decay_exponent");
  c.shadow_std_db = main.number("shadow_std_db");
  c.shadow_std_cue_bs_db = main.number_or("shadow_std_cue_bs_db", -1.0);
  c.shadow_std_due_direct_db = main.number_or("shadow_std_due_direct_db", -1.0);
  c.shadow_std_due_bs_db = main.number_or("shadow_std_due_bs_db", -1.0);
  c.shadow_std_cue_due_db = main.number_or("shadow_std_cue_due_db", -1.0);

  {
    auto [key, v] = main.one_of({"noise_power_dbm", "noise_power_w"});
    c.noise_power = key == "noise_power_dbm" ? dbm_to_watts(v) : v;
  }
  {
    auto [key, v] = main.one_of({"sinr_threshold_db", "sinr_threshold"});
    c.sinr_threshold = key == "sinr_threshold_db" ? db_to_linear(v) : v;
  }
  c.latency_bound = main.number("latency_bound_s");
  c.bandwidth_hz = main.number_or("bandwidth_hz", 1e6);
  {
    auto [key, v] = main.one_of({"capacity_floor_bps", "capacity_floor_bpshz"});
    c.capacity_floor = key == "capacity_floor_bps" ? v / c.bandwidth_hz : v;
  }
  {
    auto [key, v] = main.one_of({"max_power_cue_dbm", "max_power_cue_w"});
    c.max_power_cue = key == "max_power_cue_dbm" ? dbm_to_watts(v) : v;
  }
  {
    auto [key, v] = main.one_of({"max_power_due_dbm", "max_power_due_w"});
    c.max_power_due = key == "max_power_due_dbm" ? dbm_to_watts(v) : v;
  }

  if (main.has("arrival_rates_pps")) {
    if (main.has("arrival_rate_pps"))
      throw std::runtime_error(doc.name +
                               ": arrival_rate_pps and arrival_rates_pps are "
                               "mutually exclusive");
    c.arrival_rates = main.list("arrival_rates_pps");
  } else {
    double rate = main.number("arrival_rate_pps");
    c.arrival_rates.assign(std::max(c.num_dues, 0), rate);
  }

  c.cell_radius = main.number("cell_radius_m");
  c.road_offset = main.number("road_offset_m");
  c.lane_count = static_cast<int>(main.number("lane_count"));
  c.lane_width = main.number("lane_width_m");
  c.vehicle_speed = main.number("vehicle_speed_mps");
  c.vehicle_density = main.number_or("vehicle_density_per_m", 0.0);
  c.due_gap = main.number("due_gap_m");
  c.rng_seed = static_cast<std::uint64_t>(main.number_or("rng_seed", 1.0));

  main.reject_unused();

  if (!doc.overrides.empty()) {
    Reader over(doc, doc.overrides);
    SweepSpec sweep;
    for (const char* key : kSweepable) {
      if (!over.has(key)) continue;
      if (!sweep.parameter.empty())
        throw std::runtime_error(doc.name + ": [overrides] may sweep only one of '" +
                                 sweep.parameter + "' and '" + key + "'");
      sweep.parameter = key;
      sweep.grid = over.list(key);
    }
    if (sweep.parameter.empty())
      throw std::runtime_error(doc.name +
                               ": [overrides] must sweep one of arrival_rate_pps, "
                               "latency_bound_s, sinr_threshold_db, p0");
    sweep.replications = static_cast<int>(over.number_or("replications", 20.0));
    if (sweep.replications < 1)
      throw std::runtime_error(doc.name + ": replications must be >= 1");
    over.reject_unused();
    // Every grid point must yield a valid scenario.
    c.validate();
    for (double v : sweep.grid) {
      if (sweep.parameter == "p0") {
        if (!(v > 0.0 && v < 1.0))
          throw std::runtime_error(doc.name + ": p0 grid values must lie in (0, 1)");
      } else {
        apply_sweep_value(c, sweep.parameter, v).validate();
      }
    }
    out.sweep = sweep;
  }

  c.validate();
  return out;
}

ScenarioFile load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open scenario file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str(), path);
}

ScenarioConfig apply_sweep_value(const ScenarioConfig& config,
                                 const std::string& parameter, double value) {
  ScenarioConfig out = config;
  if (parameter == "arrival_rate_pps") {
    std::fill(out.arrival_rates.begin(), out.arrival_rates.end(), value);
  } else if (parameter == "latency_bound_s") {
    out.latency_bound = value;
  } else if (parameter == "sinr_threshold_db") {
    out.sinr_threshold = db_to_linear(value);
  } else if (parameter == "p0") {
    // Allocator-mode knob, not a config field; the scenario is unchanged.
  } else {
    throw std::invalid_argument("unknown sweep parameter '" + parameter + "'");
  }
  return out;
}

}  // namespace v2x

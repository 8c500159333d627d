#include "nonlinlab/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace nonlinlab {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Config Config::defaults() {
  Config c;
  auto& s = c.sections_;

  s["hull-check"] = {
      {"arc_samples", "100"},
      {"family_size", "64"},
      {"tol", "1e-9"},
  };
  s["monge"] = {
      {"quad_n", "33"},        // grid for the exact-quadratic corpus
      {"exp_n", "17,33,65"},   // refinement ladder for the manufactured case
      {"disk_n", "129"},
      {"tol", "1e-8"},
      {"hull_tol_factor", "4"},
  };
  s["radial"] = {
      {"drift_steps", "100000"},
      {"order_steps", "1000,2000,4000"},
      {"scan_samples", "401"},
      {"scan_steps", "2000"},
      {"scan_range", "20"},
      {"lambdas", "1,10,50,100"},
      {"pohozaev_n", "129,257"},
  };
  s["annulus"] = {
      {"a", "1.0"},
      {"b", "2.0"},
      {"lambda1_n", "256"},
      {"sweep_nr", "48"},
      {"sweep_ntheta", "96"},
      {"sweep_steps", "20"},
      {"lambda_lo_factor", "3.0"},
      {"lambda_hi_factor", "20.0"},
      {"newton_tol", "1e-8"},
      {"newton_max_iter", "40"},
      {"run_control", "true"},
      {"control_lambda", "20.0"},
      // the versioned seed corpus: "no find" verdicts are relative to it
      {"seed_bump_amplitudes", "1,3.141592653589793,6.283185307179586,12.566370614359172"},
      {"seed_angular_modes", "1,2,3,4,5,6"},
      {"seed_angular_amplitude", "3.141592653589793"},
      {"seed_random_amplitudes", "1,3.141592653589793,6.283185307179586,12.566370614359172"},
  };
  s["gamma"] = {
      {"x0_list", "1,3,10"},
      {"mu_list", "1.01,1.1,2"},
      {"lambda_list", "0.5,1,2,2.9,3.0"},
      {"scan_samples", "4001"},
      {"x_range", "50"},
  };
  s["minimax"] = {
      {"corpus_size", "100"},
      {"grid_step", "1e-4"},
      {"galerkin_dim", "8"},
      {"quad_n", "64"},
  };
  s["connectivity"] = {
      {"spacing", "0.0078125"},  // 1/128
      {"y_halfwidth", "10"},
      {"eps_hyperbola", "0.12"},
      {"eps_default", "0.05"},
  };
  return c;
}

Config Config::parse(const std::string& text, const std::string& origin) {
  Config defs = defaults();
  Config out = defs;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ConfigError(lineno, t, origin + ": unterminated section header");
      section = trim(t.substr(1, t.size() - 2));
      if (!defs.sections_.count(section))
        throw ConfigError(lineno, section, origin + ": unknown section [" + section + "]");
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(lineno, t, origin + ": expected 'key = value'");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (section.empty())
      throw ConfigError(lineno, key, origin + ": key outside any [section]");
    if (!defs.sections_.at(section).count(key))
      throw ConfigError(lineno, key,
                        origin + ": unknown key '" + key + "' in section [" + section + "]");
    if (value.empty()) throw ConfigError(lineno, key, origin + ": empty value");
    out.sections_[section][key] = value;
  }
  return out;
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, path.string(), "cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

std::string Config::raw(const std::string& section, const std::string& key) const {
  auto sit = sections_.find(section);
  if (sit == sections_.end()) throw ConfigError(0, section, "no such section [" + section + "]");
  auto kit = sit->second.find(key);
  if (kit == sit->second.end())
    throw ConfigError(0, key, "no such key '" + key + "' in [" + section + "]");
  return kit->second;
}

double Config::get_double(const std::string& section, const std::string& key) const {
  const std::string v = raw(section, key);
  try {
    size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError(0, key, "[" + section + "] " + key + ": expected number, got '" + v + "'");
  }
}

int Config::get_int(const std::string& section, const std::string& key) const {
  const std::string v = raw(section, key);
  try {
    size_t pos = 0;
    const int n = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw ConfigError(0, key, "[" + section + "] " + key + ": expected integer, got '" + v + "'");
  }
}

bool Config::get_bool(const std::string& section, const std::string& key) const {
  std::string v = raw(section, key);
  std::transform(v.begin(), v.end(), v.begin(), ::tolower);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(0, key, "[" + section + "] " + key + ": expected boolean, got '" + v + "'");
}

std::string Config::get_string(const std::string& section, const std::string& key) const {
  return raw(section, key);
}

std::vector<double> Config::get_list(const std::string& section, const std::string& key) const {
  const std::string v = raw(section, key);
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(0, key, "[" + section + "] " + key + ": bad list entry '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError(0, key, "[" + section + "] " + key + ": empty list");
  return out;
}

void Config::set(const std::string& section, const std::string& key, const std::string& value) {
  sections_[section][key] = value;
}

bool Config::has(const std::string& section, const std::string& key) const {
  auto sit = sections_.find(section);
  return sit != sections_.end() && sit->second.count(key) > 0;
}

std::string Config::print() const {
  std::ostringstream out;
  for (const auto& [name, entries] : sections_) {
    out << '[' << name << "]\n";
    for (const auto& [key, value] : entries) out << key << " = " << value << '\n';
    out << '\n';
  }
  return out.str();
}

}  // namespace nonlinlab

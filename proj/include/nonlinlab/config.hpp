#ifndef NONLINLAB_CONFIG_HPP
#define NONLINLAB_CONFIG_HPP

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nonlinlab {

/// Flat sectioned key-value configuration:
///   # comment
///   [section]
///   key = value
/// Unknown sections or keys and malformed lines are reported with their
/// line number.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, std::string field, const std::string& message)
      : std::runtime_error(message), line_number(line), field(std::move(field)) {}
  int line_number;
  std::string field;
};

class Config {
 public:
  /// Built-in defaults for every experiment section.
  static Config defaults();
  /// Defaults overlaid with the file's entries; validates keys and types.
  static Config load(const std::filesystem::path& path);
  static Config parse(const std::string& text, const std::string& origin = "<string>");

  double get_double(const std::string& section, const std::string& key) const;
  int get_int(const std::string& section, const std::string& key) const;
  bool get_bool(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key) const;
  std::vector<double> get_list(const std::string& section, const std::string& key) const;

  void set(const std::string& section, const std::string& key, const std::string& value);
  bool has(const std::string& section, const std::string& key) const;

  /// Render in the same format that load() accepts.
  std::string print() const;

  const std::map<std::string, std::map<std::string, std::string>>& sections() const {
    return sections_;
  }

 private:
  std::string raw(const std::string& section, const std::string& key) const;
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

}  // namespace nonlinlab

#endif

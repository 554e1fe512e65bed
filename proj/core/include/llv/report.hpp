#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace llv {

/// One verification result; `ref` is a short mathematical description of
/// the fact being checked and is emitted under the JSON key "paper_ref".
struct Check {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
  std::string ref;
};

/// Ordered, deterministic verification report.  Serialization order is the
/// insertion order, so identical inputs produce byte-identical output.
class Report {
 public:
  using InfoValue = std::variant<long long, std::string, std::vector<std::size_t>>;

  explicit Report(std::string title) : title_(std::move(title)) {}

  void add_check(std::string name, bool passed, std::string expected, std::string actual,
                 std::string ref);
  void add_info(std::string key, long long value);
  void add_info(std::string key, std::string value);
  void add_info(std::string key, std::vector<std::size_t> values);

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::pair<std::string, InfoValue>>& info() const { return info_; }
  bool all_passed() const;

  std::string to_json() const;
  std::string to_text() const;

 private:
  std::string title_;
  std::vector<std::pair<std::string, InfoValue>> info_;
  std::vector<Check> checks_;
};

}  // namespace llv

#include "llv/report.hpp"

#include <sstream>

#include "json.hpp"

namespace llv {

void Report::add_check(std::string name, bool passed, std::string expected, std::string actual,
                       std::string ref) {
  checks_.push_back(
      {std::move(name), passed, std::move(expected), std::move(actual), std::move(ref)});
}

void Report::add_info(std::string key, long long value) {
  info_.emplace_back(std::move(key), InfoValue(value));
}

void Report::add_info(std::string key, std::string value) {
  info_.emplace_back(std::move(key), InfoValue(std::move(value)));
}

void Report::add_info(std::string key, std::vector<std::size_t> values) {
  info_.emplace_back(std::move(key), InfoValue(std::move(values)));
}

bool Report::all_passed() const {
  for (const Check& c : checks_)
    if (!c.passed) return false;
  return true;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["report"] = title_;
  for (const auto& [key, value] : info_) {
    if (const auto* n = std::get_if<long long>(&value))
      j[key] = *n;
    else if (const auto* s = std::get_if<std::string>(&value))
      j[key] = *s;
    else
      j[key] = std::get<std::vector<std::size_t>>(value);
  }
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const Check& c : checks_) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["passed"] = c.passed;
    entry["expected"] = c.expected;
    entry["actual"] = c.actual;
    entry["paper_ref"] = c.ref;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "== " << title_ << " ==\n";
  for (const auto& [key, value] : info_) {
    out << key << ": ";
    if (const auto* n = std::get_if<long long>(&value)) {
      out << *n;
    } else if (const auto* s = std::get_if<std::string>(&value)) {
      out << *s;
    } else {
      const auto& dims = std::get<std::vector<std::size_t>>(value);
      out << "[";
      for (std::size_t i = 0; i < dims.size(); ++i) out << (i ? ", " : "") << dims[i];
      out << "]";
    }
    out << "\n";
  }
  std::size_t failed = 0;
  for (const Check& c : checks_) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " (expected " << c.expected
        << ", actual " << c.actual << ")\n";
    if (!c.passed) ++failed;
  }
  if (failed == 0)
    out << checks_.size() << "/" << checks_.size() << " checks passed\n";
  else
    out << failed << "/" << checks_.size() << " checks FAILED\n";
  return out.str();
}

}  // namespace llv

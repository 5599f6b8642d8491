#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace gtoda {

/// Family index (k, i): k is the eps level, i the u-exponent.
using FamilyIndex = std::pair<int, int>;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  std::optional<std::pair<FamilyIndex, FamilyIndex>> pair;
};

/// Outcome of one verification suite. Serialized with sorted keys.
struct Report {
  std::string suite;
  int n = 0;
  std::string mode;
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string detail = {});
  void add_pair(FamilyIndex a, FamilyIndex b, bool pass, std::string detail = {});
  void merge(const Report& other);

  bool pass() const;
  std::size_t failures() const;
  nlohmann::json to_json() const;
};

}  // namespace gtoda

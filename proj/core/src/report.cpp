#include "gtoda/report.hpp"

#include <algorithm>

namespace gtoda {

namespace {

std::string index_name(FamilyIndex a) { return std::to_string(a.first) + "," + std::to_string(a.second); }

}  // namespace

void Report::add(std::string name, bool pass, std::string detail) {
  checks.push_back(CheckResult{std::move(name), pass, std::move(detail), std::nullopt});
}

void Report::add_pair(FamilyIndex a, FamilyIndex b, bool pass, std::string detail) {
  checks.push_back(
      CheckResult{"(" + index_name(a) + ")x(" + index_name(b) + ")", pass, std::move(detail), std::make_pair(a, b)});
}

void Report::merge(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["suite"] = suite;
  out["n"] = n;
  out["mode"] = mode;
  out["status"] = pass() ? "pass" : "fail";
  out["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.pair) {
      j["pair"] = {{c.pair->first.first, c.pair->first.second}, {c.pair->second.first, c.pair->second.second}};
    }
    out["checks"].push_back(std::move(j));
  }
  return out;
}

}  // namespace gtoda

#include "jetline/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>

namespace jetline {

CheckRecord make_check(std::string id, std::string inputs, bool pass, std::string lhs, std::string rhs) {
  CheckRecord c{std::move(id), std::move(inputs), pass, {}, {}};
  if (!pass) {
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
  }
  return c;
}

std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.pass; }));
}

void VerificationReport::normalize() {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
}

nlohmann::ordered_json VerificationReport::to_json(bool include_timestamp) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["params"] = params;
  if (include_timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["timestamp"] = buf;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json rec;
    rec["id"] = c.id;
    rec["inputs_digest"] = digest(c.inputs);
    rec["pass"] = c.pass;
    arr.push_back(std::move(rec));
    if (!c.pass) {
      witnesses.push_back({{"id", c.id}, {"inputs", c.inputs}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    }
  }
  j["checks"] = std::move(arr);
  j["witnesses"] = std::move(witnesses);
  j["notes"] = notes;
  const std::size_t failed = failures();
  j["summary"] = {{"total", checks.size()}, {"passed", checks.size() - failed}, {"failed", failed}};
  return j;
}

}  // namespace jetline

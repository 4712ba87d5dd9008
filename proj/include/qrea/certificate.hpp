#pragma once

#include <string>

#include "json.hpp"

namespace qrea {

enum class Status { Pass, Fail, Inconclusive };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "fail";
}

/// Outcome of one check instance. Serializes without timing so that repeated
/// runs produce byte-identical output.
struct Certificate {
  std::string check;
  int N = 0;
  nlohmann::json instance = nlohmann::json::object();
  Status status = Status::Pass;
  nlohmann::json witness;

  bool passed() const { return status == Status::Pass; }

  nlohmann::json to_json() const {
    nlohmann::json j{{"check", check}, {"N", N}, {"instance", instance}, {"status", status_name(status)}};
    if (!witness.is_null()) j["witness"] = witness;
    return j;
  }
};

}  // namespace qrea

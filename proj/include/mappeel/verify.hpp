#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mappeel/integer.hpp"

namespace mappeel {

struct Failure {
  int n = 0;
  std::optional<int> p;  // empty for univariate identities
  Integer lhs;
  Integer rhs;
};

struct VerificationReport {
  std::string identity;
  int order = 0;
  bool passed = false;
  std::optional<Failure> first_failure;
};

// Names accepted by verify_identity, in report order.
const std::vector<std::string>& identity_names();

// Checks one identity coefficient by coefficient up to x^N. Unknown name -> UsageError.
VerificationReport verify_identity(const std::string& name, int N);
// Every identity, in identity_names() order. Runs on up to worker_count() threads.
std::vector<VerificationReport> verify_all(int N);

nlohmann::json to_json(const VerificationReport& r);
// One line per identity: "name order pass" or "name order FAIL n=.. p=.. lhs=.. rhs=..".
std::string to_text(const VerificationReport& r);

}  // namespace mappeel

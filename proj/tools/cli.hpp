#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hurwitz/partition.hpp"

namespace hurwitz::cli {

struct Budget {
  int max_n = 8;
  int max_k = 14;
  int max_N = 7;
  int max_table_weight = 8;
  std::uint64_t enumeration_limit = 50'000'000;

  nlohmann::ordered_json to_json() const;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised before dispatch when an argument exceeds a budget cap.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::string cap, long long value, long long limit);
  const std::string& cap() const noexcept { return cap_; }
  long long value() const noexcept { return value_; }
  long long limit() const noexcept { return limit_; }

 private:
  std::string cap_;
  long long value_;
  long long limit_;
};

/// Reads the JSON budget file; missing keys keep their defaults.
Budget load_budget_file(const std::string& path);
/// Applies "key=value,key=value" overrides (the HURWITZ_BUDGET format).
void apply_overrides(Budget& budget, std::string_view spec);

/// "3,1,1" -> (3,1,1); parts are sorted descending. Throws UsageError naming
/// the offending token for anything but positive integers.
Partition parse_partition(std::string_view text);

/// Runs one command; args start at the group name ("hw", "wop", "verify").
/// Returns 0 on success, 1 on a failed verification, 2 on usage or budget errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Entry point shared by the executables; `group` is prepended when non-empty.
int main_with_group(const std::string& group, int argc, char** argv);

}  // namespace hurwitz::cli

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jordanet::verify {

struct CheckResult {
  int number = 0;
  std::string group;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = 0;
  // Group names ("jordan", "chow", ...) or check numbers; empty = all.
  std::vector<std::string> subset;
};

struct CheckInfo {
  int number;
  std::string group;
  std::string title;
};

const std::vector<CheckInfo>& checks();
std::vector<CheckResult> run(const Options& options);

}  // namespace jordanet::verify

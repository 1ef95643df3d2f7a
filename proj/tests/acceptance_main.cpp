// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
//
// Usage: jordanet_acceptance [--seed N] [--known-failures 7,9]
// Exit status is 0 when the set of failing criteria equals the known set.

#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "verify/suite.hpp"

namespace {

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(std::stoi(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  jordanet::verify::Options options;
  std::set<int> known;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--seed" && k + 1 < argc) {
      options.seed = std::strtoull(argv[++k], nullptr, 10);
    } else if (arg == "--known-failures" && k + 1 < argc) {
      known = parse_list(argv[++k]);
    } else {
      std::cerr << "unknown argument " << arg << "\n";
      return 2;
    }
  }

  std::set<int> failed;
  for (const auto& r : jordanet::verify::run(options)) {
    std::cout << "criterion " << r.number << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.title << "\n";
    if (!r.detail.empty()) std::cout << "    " << r.detail << "\n";
    if (!r.passed) failed.insert(r.number);
  }

  for (int n : known) {
    if (!failed.count(n)) std::cout << "criterion " << n << " is listed as a known failure but passed\n";
  }
  std::cout << failed.size() << " of " << jordanet::verify::checks().size() << " criteria failed";
  if (!known.empty()) std::cout << " (known failures: " << known.size() << ")";
  std::cout << "\n";
  return failed == known ? 0 : 1;
}

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace p3c {

struct ValidateOptions {
  std::string suite;       // path, cycle, leafy, tree, cograph, permutation, hull, order
  int max_n = 0;           // 0 picks the suite default
  std::uint64_t seed = 1;
  int samples = 0;         // 0 picks the suite default
  int threads = 0;         // 0 = hardware concurrency
  std::filesystem::path fixture_dir = ".";
};

struct ValidateReport {
  std::string suite;
  std::uint64_t total = 0;
  std::uint64_t passed = 0;
  std::vector<std::string> failures;       // one line per failing instance, by index
  std::vector<std::string> fixture_files;  // serialized counterexamples
  std::string summary() const;             // "<passed>/<total> ok" or "... FAILED"
};

std::vector<std::string> validation_suites();
ValidateReport run_validation(const ValidateOptions& options);

}  // namespace p3c

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "diamond/enumeration.hpp"

namespace diamond {

struct BijectionReport {
  std::string kind;  // "sp" or "sl"
  int n = 0;
  Shape lambda;
  std::uint64_t ss_count = 0;
  BigInt weyl;
  std::map<Shape, std::uint64_t> qs_counts;     // enumerated, per column sub-multiset
  std::map<Shape, std::uint64_t> image_counts;  // where the reduction lands
  std::uint64_t qs_total = 0;
  std::uint64_t passes = 0;
  std::uint64_t monotonicity_violations = 0;  // rows above s becoming pushable
  std::uint64_t traps = 0;                    // TrapError raised by a pass or the expansion
  std::vector<std::string> failures;
  bool pass = false;
};

struct VerifyOptions {
  int jobs = 1;
  bool check_semistandard = false;
  std::size_t max_failures = 20;
};

BijectionReport verify_bijection(int n, const Shape& lambda, const VerifyOptions& opt = {});
BijectionReport verify_bijection_sl(int n, const Shape& lambda, const VerifyOptions& opt = {});

struct DimensionRow {
  Shape lambda;
  std::uint64_t ss_count = 0;
  BigInt weyl;
  std::uint64_t qs_total = 0;
  bool pass = false;
};

// Every shape with at most `cells` boxes.
std::vector<DimensionRow> verify_dims(int n, int cells);

}  // namespace diamond

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ncorder/boson.hpp"

namespace ncorder {

enum class VerifySuite { Oracles, Formulas, Bijections, Inequality };

std::string verify_suite_name(VerifySuite suite);
VerifySuite parse_verify_suite(const std::string& name);

struct VerifyOptions {
  /// Word length (oracles, inequality) or family size n (formulas, bijections);
  /// 0 picks the suite default.
  std::size_t max_n = 0;
  std::uint64_t seed = 7;
  /// Random words drawn by the sampling suites; 0 picks the suite default.
  std::size_t samples = 0;
};

struct VerifyReport {
  std::string suite;
  std::size_t max_n = 0;
  std::uint64_t seed = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  /// Counts one check and records `what` if it failed.
  void expect(bool ok, const std::string& what);
};

/// oracles: all-contraction filter, noncrossing generator and edge-count DP
/// agree, and N_1 agrees with commutator rewriting (exhaustive up to length
/// 10, seeded samples beyond).
/// formulas: closed forms against noncrossing enumeration, Stirling numbers,
/// Narayana numbers, series solutions and equation residuals.
/// bijections: exhaustive round trips, images and statistics of all four maps.
/// inequality: 0 <= C(0) <= C(1) on seeded random words.
VerifyReport run_verify(VerifySuite suite, const VerifyOptions& options = {});

/// Uniform length in [0, max_len], each letter a or a† with probability 1/2.
Word random_word(std::mt19937_64& rng, std::size_t max_len);

}  // namespace ncorder

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ktdist/ktree.hpp"
#include "ktdist/matrix.hpp"
#include "ktdist/smith.hpp"
#include "ktdist/worker_pool.hpp"

namespace ktdist {

// Computed invariants of one isomorphism class.
struct ClassOutcome {
  std::vector<std::size_t> trace;
  std::string graph6;
  Snf snf;
  BigInt det;
  bool snf_ok = true;
  bool det_ok = true;
};

struct OrderReport {
  int n = 0;
  std::size_t classes = 0;
  std::size_t snf_passed = 0;
  std::size_t det_passed = 0;
  std::vector<BigInt> predicted_factors;
  BigInt predicted_det;
  std::vector<ClassOutcome> mismatches;
};

// Predictions are compared only when d == k (`compared`); otherwise every
// order is reported with its class count and nothing can fail.
struct VerificationReport {
  int k = 1;
  int d = 1;
  int nmin = 2;
  int nmax = 2;
  bool compared = true;
  std::vector<OrderReport> orders;

  bool passed() const;
};

// Checks snf(D^d) and det(D^d) against predicted_snf / predicted_det for
// every class with k+1 <= n <= nmax (n = k+1 is the single base tree).
// Throws std::invalid_argument unless k >= 1, 1 <= d <= k and nmax >= k+2.
VerificationReport verify_theorem(int k, int nmax, int d, const WorkerPool* pool = nullptr);

// Per class and order: the attachment recursion reproduces the BFS matrix,
// the arrow reduction reaches arrow_matrix(k, n) with unchanged invariant
// factors, a seeded random relabeling leaves the invariant factors
// unchanged, and all classes of one order share one Smith form.
struct EquivalenceOrder {
  int n = 0;
  std::size_t classes = 0;
  std::size_t recursion_ok = 0;
  std::size_t arrow_ok = 0;
  std::size_t relabel_ok = 0;
  std::size_t distinct_snfs = 0;
  std::vector<std::vector<std::size_t>> failing_traces;
};

struct EquivalenceReport {
  int k = 1;
  int nmax = 2;
  std::uint64_t seed = 0;
  std::vector<EquivalenceOrder> orders;

  bool passed() const;
};

// Throws std::invalid_argument unless k >= 1 and nmax >= k+2.
EquivalenceReport verify_equivalence(int k, int nmax, std::uint64_t seed, const WorkerPool* pool = nullptr);

// Classes of one order grouped by their (Smith form, determinant) pair.
struct SurveyGroup {
  Snf snf;
  BigInt det;
  std::size_t count = 0;
  std::vector<std::size_t> example_trace;
  std::string example_graph6;
  IntMatrix example_matrix;
};

struct SurveyOrder {
  int n = 0;
  std::size_t classes = 0;
  std::vector<SurveyGroup> groups;  // in order of first appearance

  bool constant() const { return groups.size() <= 1; }
};

struct SurveyReport {
  int k = 1;
  int d = 1;
  int nmax = 1;
  std::vector<SurveyOrder> orders;

  // Smallest order whose classes disagree, if any.
  std::optional<int> first_nonconstant_order() const;
};

// Orders k+1..nmax. Throws std::invalid_argument unless 1 <= d <= k and
// nmax >= k+1.
SurveyReport survey_snf(int k, int d, int nmax, const WorkerPool* pool = nullptr);

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const EquivalenceReport& r);
nlohmann::json to_json(const SurveyReport& r);

std::string to_text(const VerificationReport& r);
std::string to_text(const EquivalenceReport& r);
// Non-constant orders list every group with its example matrix.
std::string to_text(const SurveyReport& r);

}  // namespace ktdist

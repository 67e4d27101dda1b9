#ifndef BOOLSEMI_REPORT_HPP
#define BOOLSEMI_REPORT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "boolsemi/algebra.hpp"
#include "json.hpp"

namespace boolsemi {

enum class Verdict { holds, fails };

/// Outcome of one exhaustive (or sampled) law check.
///
/// A failing report always carries a witness: carrier ids in the order the
/// law quantifies them, plus their display names. `note` says which clause
/// failed when a report covers several, or that a scan was sampled.
struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::holds;
  std::vector<ElementId> witness;
  std::vector<std::string> witness_names;
  std::uint64_t checked = 0;
  std::string note;

  bool holds() const noexcept { return verdict == Verdict::holds; }
};

using Json = nlohmann::ordered_json;

/// {"property", "verdict", "witness", "checked"} plus "note" when set.
Json to_json(const PropertyReport& report);
Json to_json(const std::vector<PropertyReport>& reports);

/// Names of a set of carrier ids, in the given order.
std::vector<std::string> element_names(const Algebra& algebra, const std::vector<ElementId>& ids);

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// When a tuple scan is exhaustive and when it falls back to sampling.
struct ScanPolicy {
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 26;
  std::uint64_t samples = std::uint64_t{1} << 20;
  std::uint64_t seed = kDefaultSeed;
};

/// Policy for 4-tuple scans: exhaustive up to carrier size 16.
inline ScanPolicy quad_policy(std::uint64_t seed = kDefaultSeed) {
  return ScanPolicy{std::uint64_t{16} * 16 * 16 * 16, std::uint64_t{1} << 18, seed};
}

template <std::size_t K>
struct ScanResult {
  std::uint64_t checked = 0;
  std::uint64_t total = 0;
  bool sampled = false;
  std::optional<std::array<ElementId, K>> witness;
};

/// Runs `ok` over every K-tuple of [0, n) in lexicographic order, stopping
/// at the first failure (so the witness is the least one), or over a
/// seeded pseudo-random sample when n^K exceeds the policy limit.
template <std::size_t K, class Fn>
ScanResult<K> scan_tuples(std::size_t n, const ScanPolicy& policy, Fn&& ok) {
  ScanResult<K> result;
  long double total = 1;
  for (std::size_t i = 0; i < K; ++i) total *= static_cast<long double>(n);
  std::array<ElementId, K> t{};
  if (n == 0) return result;
  if (total <= static_cast<long double>(policy.exhaustive_limit)) {
    result.total = static_cast<std::uint64_t>(total);
    for (;;) {
      ++result.checked;
      if (!ok(t)) {
        result.witness = t;
        return result;
      }
      std::size_t pos = K;
      while (pos > 0) {
        --pos;
        if (++t[pos] < n) break;
        t[pos] = 0;
        if (pos == 0) return result;
      }
    }
  }
  result.sampled = true;
  result.total = total > 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(total);
  std::mt19937_64 rng(policy.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::uint64_t s = 0; s < policy.samples; ++s) {
    for (auto& v : t) v = static_cast<ElementId>(pick(rng));
    ++result.checked;
    if (!ok(t)) {
      result.witness = t;
      return result;
    }
  }
  return result;
}

/// Folds a scan result into a report, naming witness elements in `algebra`.
template <std::size_t K>
PropertyReport make_report(std::string property, const Algebra& algebra,
                           const ScanResult<K>& scan, const ScanPolicy& policy) {
  PropertyReport r;
  r.property = std::move(property);
  r.checked = scan.checked;
  if (scan.witness) {
    r.verdict = Verdict::fails;
    r.witness.assign(scan.witness->begin(), scan.witness->end());
    r.witness_names = element_names(algebra, r.witness);
  }
  if (scan.sampled) {
    r.note = "sampled " + std::to_string(scan.checked) + " of " + std::to_string(scan.total) +
             " tuples (seed " + std::to_string(policy.seed) + ")";
  }
  return r;
}

}  // namespace boolsemi

#endif  // BOOLSEMI_REPORT_HPP

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "delkit/bitstring.hpp"
#include "delkit/budget.hpp"
#include "delkit/exact.hpp"

namespace delkit {

/// Histogram weight -> number of supersequences of that weight.
using WeightHistogram = std::map<std::uint64_t, std::uint64_t>;

/// Weight distribution of Υ_{n,x}. `by_cluster` is filled only by
/// enumeration and is keyed by the cluster index c.
struct WeightDistribution {
  std::size_t n = 0;
  BitString x;
  WeightHistogram counts;
  std::map<std::size_t, WeightHistogram> by_cluster;

  /// Σ_w counts[w], i.e. |Υ_{n,x}|.
  [[nodiscard]] ExactCount support_size() const;
  /// Σ_w w·counts[w], i.e. μ_{n,m}.
  [[nodiscard]] ExactCount total_weight() const;
  [[nodiscard]] std::uint64_t max_weight() const;
};

/// "1:6 2:3 3:4"
[[nodiscard]] std::string to_string(const WeightHistogram& h);

struct EntropyReport {
  double shannon = 0.0;
  std::map<double, double> renyi;
  double min_entropy = 0.0;
};

/// μ_{n,m} = C(n, m) 2^{n-m}, the total number of masks over Υ_{n,x}.
[[nodiscard]] ExactCount mu(std::size_t n, std::size_t m);

/// Exact distribution by scanning {0,1}^n.
[[nodiscard]] WeightDistribution weight_distribution(std::size_t n, const BitString& x,
                                                     const EnumerationBudget& budget = {});

/// P(Y = y | X = x) = ω_x(y) / μ_{n,m}. Throws InvalidArgument if |y| != n
/// or |x| > n.
[[nodiscard]] ExactRational posterior(const BitString& y, const BitString& x, std::size_t n);

// Entropies are in bits. Probabilities are w / Σ w·count, summed over weight
// classes in ascending order of w.

[[nodiscard]] double shannon_entropy(const WeightDistribution& d);

/// Throws InvalidArgument unless alpha > 0 and alpha != 1.
[[nodiscard]] double renyi_entropy(const WeightDistribution& d, double alpha);

/// -log2 max_i p_i.
[[nodiscard]] double min_entropy(const WeightDistribution& d);

[[nodiscard]] EntropyReport entropy_report(const WeightDistribution& d,
                                           std::span<const double> alphas);

/// Merges the first two runs by flipping the first one:
/// (a; k1, k2, ..., kl) -> (!a; k1 + k2, k3, ..., kl). Constant strings are
/// fixed points.
[[nodiscard]] BitString g_transform(const BitString& x);

/// x, g(x), g(g(x)), ... up to and including the first fixed point.
[[nodiscard]] std::vector<BitString> g_chain(const BitString& x);

/// Weight multiset for one insertion (n = |x| + 1): one string of weight
/// k_i + 1 per run and m - l + 2 strings of weight 1.
[[nodiscard]] WeightDistribution predicted_weights_single(const BitString& x);

/// Block-splitting slot counts k~_i of a composition: k_i at either end,
/// k_i - 1 for interior runs, k_1 + 1 for a single run. Σ k~_i = m - l + 2.
[[nodiscard]] std::vector<std::size_t> split_slots(std::span<const std::size_t> runs);

/// Weight multiset for two insertions (n = |x| + 2), assembled from the
/// 2/0, 0/2 and 1/1 insertion classes. In the 1/1 class the boundary strings
/// (.., k_t, 1, 1, k_{t+1}, ..) of a chain of length-1 runs collapse into one.
[[nodiscard]] WeightDistribution predicted_weights_double(const BitString& x);

/// Entropy change (times μ) caused by merging runs k1, k2 under one deletion:
/// (k1+1) log 1/(k1+1) + (k2+1) log 1/(k2+1) - (k1+k2+1) log 1/(k1+k2+1).
/// Throws InvalidArgument for k1 == 0 or k2 == 0.
[[nodiscard]] double delta_single(std::uint64_t k1, std::uint64_t k2);

struct GStepReport {
  BitString x;
  BitString gx;
  std::size_t deletions = 0;
  double entropy_x = 0.0;   // from the predicted multiset
  double entropy_gx = 0.0;  // from the predicted multiset
  double difference = 0.0;
  std::optional<double> enumerated_difference;  // when |x| + deletions fits the budget
  bool ok = false;
};

/// Absolute tolerance for entropy comparisons; a strict decrease must exceed it.
inline constexpr double kEntropyTolerance = 1e-9;

/// H_{m+d}(x) - H_{m+d}(g(x)) for d in {1, 2}. `ok` requires a difference
/// above kEntropyTolerance (within tolerance of 0 for constant x), on both
/// routes when the enumerated one is available.
[[nodiscard]] GStepReport verify_g_decreases(const BitString& x, std::size_t deletions,
                                             const EnumerationBudget& budget = {});

struct IdentityCheck {
  std::string name;
  std::vector<std::size_t> composition;
  ExactCount lhs;
  ExactCount rhs;
  bool ok = false;
};

/// Double-insertion string count
/// l(l+1)/2 + Σ_{i<j} k~_i k~_j + Σ C(k~_i + 1, 2) + 1 + l(m - l + 2)
/// against C(m+2, m) + C(m+2, m+1) + C(m+2, m+2).
/// Throws InvalidArgument for an empty composition or a zero part.
[[nodiscard]] IdentityCheck sanity_identity_counts_double(std::span<const std::size_t> composition);

/// Total weight of the predicted double-insertion multiset against
/// 4 C(m+2, 2).
[[nodiscard]] IdentityCheck sanity_identity_weights_double(
    std::span<const std::size_t> composition);

/// Visits every composition of m (ordered positive parts summing to m) in
/// lexicographic order. m = 0 yields nothing.
void for_each_composition(std::size_t m,
                          const std::function<void(std::span<const std::size_t>)>& visit);

/// The string with run lengths `composition` starting with `leading`.
[[nodiscard]] BitString from_composition(std::span<const std::size_t> composition, Bit leading = 1);

}  // namespace delkit

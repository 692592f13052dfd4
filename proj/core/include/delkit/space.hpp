#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "delkit/bitstring.hpp"
#include "delkit/budget.hpp"
#include "delkit/exact.hpp"
#include "delkit/mask.hpp"

namespace delkit {

/// |Υ_{n,x}| = Σ_{r=m}^{n} C(n, r); independent of the form of x.
[[nodiscard]] ExactCount upsilon_size(std::size_t n, std::size_t m);

/// A compatible supersequence together with its weight ω_x(y).
struct Supersequence {
  BitString y;
  std::uint64_t weight = 0;

  friend bool operator==(const Supersequence&, const Supersequence&) = default;
};

using SupersequenceVisitor = std::function<void(const BitString& y, std::uint64_t weight)>;

/// Visits every y ∈ Υ_{n,x} in lexicographic order.
void for_each_supersequence(std::size_t n, const BitString& x, const SupersequenceVisitor& visit,
                            const EnumerationBudget& budget = {});

[[nodiscard]] std::vector<Supersequence> enumerate_supersequences(
    std::size_t n, const BitString& x, const EnumerationBudget& budget = {});

// Hamming-weight clusters Υ^c_{n,x}: supersequences with c more 1's than x.
// All three routes take (n, m, h = h(x), c) or the string itself and throw
// InvalidArgument unless 0 <= h <= m <= n and c <= n - m.

/// Double sum over the last position of a maximal initial and the number of
/// surplus 1's inside it.
[[nodiscard]] ExactCount cluster_size_closed(std::size_t n, std::size_t m, std::size_t h,
                                             std::size_t c);

/// Σ_{p=h}^{h+z} C(p-1, h-1) C(n-p, c), z = n - m - c; C(n, c) when h = 0.
[[nodiscard]] ExactCount cluster_size_simple(std::size_t n, std::size_t m, std::size_t h,
                                             std::size_t c);

/// First-bit recurrence on x, memoized on (suffix of x, n, c). Returns 0 for
/// c > n - |x| instead of throwing, matching the recurrence's own base case.
[[nodiscard]] ExactCount cluster_size_recursive(std::size_t n, const BitString& x, std::size_t c);

/// Greedy leftmost embedding of x in y (the lexicographically first mask),
/// or nullopt when x is not a subsequence of y.
[[nodiscard]] std::optional<Mask> initial_mask(const BitString& y, const BitString& x);

/// True iff the initial mask exists, is nonempty and ends at the last
/// position of y.
[[nodiscard]] bool is_maximal_initial(const BitString& y, const BitString& x);

/// |M_{n,x}| = C(n-1, m-1). Requires 1 <= m <= n.
[[nodiscard]] ExactCount maximal_initials_total(std::size_t n, std::size_t m);

/// |M^c_{n,x}| = multichoose(h, n-m-c) * multichoose(m-h, c).
/// Requires 1 <= m <= n, h <= m, c <= n - m.
[[nodiscard]] ExactCount maximal_initials_cluster(std::size_t n, std::size_t m, std::size_t h,
                                                  std::size_t c);

/// Insertion slots of x that keep a single embedding: rho0 counts slots in
/// runs of 0 (where a 1 may go), rho1 slots in runs of 1.
struct RunSlots {
  std::size_t rho0 = 0;
  std::size_t rho1 = 0;

  friend bool operator==(const RunSlots&, const RunSlots&) = default;
};

/// Each run contributes len+1 if it spans x, len if it touches exactly one
/// end of x, len-1 otherwise. Requires |x| >= 1.
[[nodiscard]] RunSlots run_slots(const BitString& x);

/// |S_{n,x}| = C(n - m + rho1 + rho0 - 1, n - m); 2^n for empty x.
/// Requires |x| <= n.
[[nodiscard]] ExactCount singleton_count(std::size_t n, const BitString& x);

/// The same count split by the number c of inserted 1's:
/// Σ_c multichoose(rho1, n-m-c) * multichoose(rho0, c).
[[nodiscard]] ExactCount singleton_count_by_cluster(std::size_t n, const BitString& x);

/// All y with ω_x(y) = 1, lexicographic.
[[nodiscard]] std::vector<BitString> enumerate_singletons(std::size_t n, const BitString& x,
                                                          const EnumerationBudget& budget = {});

}  // namespace delkit

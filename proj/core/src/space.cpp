#include "delkit/space.hpp"

#include <bit>
#include <functional>
#include <string>

#include "delkit/error.hpp"
#include "delkit/rle.hpp"
#include "scan.hpp"

namespace delkit {

namespace {

using i64 = std::int64_t;

i64 s(std::size_t v) { return static_cast<i64>(v); }

void require_cluster_range(std::size_t n, std::size_t m, std::size_t h, std::size_t c) {
  if (m > n || h > m || c > n - m) {
    throw InvalidArgument("cluster arguments out of range: need 0 <= h <= m <= n and c <= n - m (n=" +
                          std::to_string(n) + ", m=" + std::to_string(m) + ", h=" +
                          std::to_string(h) + ", c=" + std::to_string(c) + ")");
  }
}

}  // namespace

ExactCount upsilon_size(std::size_t n, std::size_t m) {
  if (m > n) throw InvalidArgument("upsilon_size requires m <= n");
  ExactCount total = 0;
  for (std::size_t r = m; r <= n; ++r) total += binomial(s(n), s(r));
  return total;
}

void for_each_supersequence(std::size_t n, const BitString& x, const SupersequenceVisitor& visit,
                            const EnumerationBudget& budget) {
  detail::scan_supersequences(n, x, budget, [&](std::uint64_t code, std::uint64_t weight) {
    visit(BitString::from_code(code, n), weight);
  });
}

std::vector<Supersequence> enumerate_supersequences(std::size_t n, const BitString& x,
                                                    const EnumerationBudget& budget) {
  std::vector<Supersequence> out;
  detail::scan_supersequences(n, x, budget, [&](std::uint64_t code, std::uint64_t weight) {
    out.push_back({BitString::from_code(code, n), weight});
  });
  return out;
}

ExactCount cluster_size_closed(std::size_t n, std::size_t m, std::size_t h, std::size_t c) {
  require_cluster_range(n, m, h, c);
  if (m == 0) return binomial(s(n), s(c));
  ExactCount total = 0;
  // last = position of the last bit of the maximal initial, g = surplus 1's
  // before it; the remaining c - g surplus 1's sit among the n - last tail bits.
  for (std::size_t last = m; last <= n; ++last) {
    const std::size_t tail = n - last;
    const std::size_t lo = c > tail ? c - tail : 0;
    const std::size_t hi = std::min(c, last - m);
    for (std::size_t g = lo; g <= hi; ++g) {
      total += multichoose(s(h), s(last - m - g)) * multichoose(s(m - h), s(g)) *
               binomial(s(tail), s(c - g));
    }
  }
  return total;
}

ExactCount cluster_size_simple(std::size_t n, std::size_t m, std::size_t h, std::size_t c) {
  require_cluster_range(n, m, h, c);
  if (h == 0) return binomial(s(n), s(c));
  const std::size_t added_zeros = n - m - c;
  ExactCount total = 0;
  // p = position of the h-th 1 of y.
  for (std::size_t p = h; p <= h + added_zeros; ++p) {
    total += binomial(s(p) - 1, s(h) - 1) * binomial(s(n - p), s(c));
  }
  return total;
}

ExactCount cluster_size_recursive(std::size_t n, const BitString& x, std::size_t c) {
  const std::size_t m = x.size();
  if (m > n || c > n - m) return 0;
  // memo[j][len][extra]: cluster size for suffix x[j..), length len, extra 1's.
  std::vector<std::vector<std::vector<std::optional<ExactCount>>>> memo(
      m + 1, std::vector<std::vector<std::optional<ExactCount>>>(
                 n + 1, std::vector<std::optional<ExactCount>>(c + 1)));
  std::function<ExactCount(std::size_t, std::size_t, i64)> size = [&](std::size_t j,
                                                                      std::size_t len,
                                                                      i64 extra) -> ExactCount {
    if (extra < 0) return 0;
    if (j == m) return binomial(s(len), extra);
    if (extra + s(m - j) > s(len)) return 0;
    auto& slot = memo[j][len][static_cast<std::size_t>(extra)];
    if (slot) return *slot;
    // y starts with x[j]: consume it. Otherwise y's first bit is surplus.
    ExactCount total = size(j + 1, len - 1, extra);
    total += x[j] == 0 ? size(j, len - 1, extra - 1) : size(j, len - 1, extra);
    slot = total;
    return total;
  };
  return size(0, n, s(c));
}

std::optional<Mask> initial_mask(const BitString& y, const BitString& x) {
  std::vector<std::size_t> picked;
  picked.reserve(x.size());
  for (std::size_t i = 0; i < y.size() && picked.size() < x.size(); ++i) {
    if (y[i] == x[picked.size()]) picked.push_back(i);
  }
  if (picked.size() < x.size()) return std::nullopt;
  return Mask(std::move(picked));
}

bool is_maximal_initial(const BitString& y, const BitString& x) {
  const auto mask = initial_mask(y, x);
  return mask && !mask->empty() && mask->back() + 1 == y.size();
}

ExactCount maximal_initials_total(std::size_t n, std::size_t m) {
  if (m < 1 || m > n) throw InvalidArgument("maximal_initials_total requires 1 <= m <= n");
  return binomial(s(n) - 1, s(m) - 1);
}

ExactCount maximal_initials_cluster(std::size_t n, std::size_t m, std::size_t h, std::size_t c) {
  require_cluster_range(n, m, h, c);
  if (m < 1) throw InvalidArgument("maximal_initials_cluster requires m >= 1");
  // Surplus 0's go into the gaps in front of the h 1's of x, surplus 1's in
  // front of its m - h 0's.
  return multichoose(s(h), s(n - m - c)) * multichoose(s(m - h), s(c));
}

RunSlots run_slots(const BitString& x) {
  if (x.empty()) throw InvalidArgument("run_slots requires a nonempty string");
  const Rle r = rle_encode(x);
  RunSlots slots;
  const std::size_t last = r.blocks.size() - 1;
  for (std::size_t i = 0; i <= last; ++i) {
    const std::size_t len = r.blocks[i];
    const int ends = (i == 0 ? 1 : 0) + (i == last ? 1 : 0);
    const std::size_t f = len + static_cast<std::size_t>(ends) - 1;
    (r.symbol(i) == 0 ? slots.rho0 : slots.rho1) += f;
  }
  return slots;
}

ExactCount singleton_count(std::size_t n, const BitString& x) {
  const std::size_t m = x.size();
  if (m > n) throw InvalidArgument("singleton_count requires |x| <= n");
  if (m == 0) return pow2(static_cast<std::uint32_t>(n));
  const RunSlots slots = run_slots(x);
  return binomial(s(n - m + slots.rho1 + slots.rho0) - 1, s(n - m));
}

ExactCount singleton_count_by_cluster(std::size_t n, const BitString& x) {
  const std::size_t m = x.size();
  if (m > n) throw InvalidArgument("singleton_count_by_cluster requires |x| <= n");
  if (m == 0) return pow2(static_cast<std::uint32_t>(n));
  const RunSlots slots = run_slots(x);
  ExactCount total = 0;
  // c inserted 1's split runs of 0; the n - m - c inserted 0's split runs of 1.
  for (std::size_t c = 0; c <= n - m; ++c) {
    total += multichoose(s(slots.rho1), s(n - m - c)) * multichoose(s(slots.rho0), s(c));
  }
  return total;
}

std::vector<BitString> enumerate_singletons(std::size_t n, const BitString& x,
                                            const EnumerationBudget& budget) {
  std::vector<BitString> out;
  detail::scan_supersequences(n, x, budget, [&](std::uint64_t code, std::uint64_t weight) {
    if (weight == 1) out.push_back(BitString::from_code(code, n));
  });
  return out;
}

}  // namespace delkit

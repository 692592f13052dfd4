#include "delkit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "delkit/error.hpp"

namespace delkit::oracle {

namespace {

std::vector<Bit> bits_of(std::uint64_t code, std::size_t n) {
  std::vector<Bit> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<Bit>((code >> (n - 1 - i)) & 1U);
  return y;
}

// C(n, k) saturating at UINT64_MAX; only used for the subset guard.
std::uint64_t subsets_saturating(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  long double v = 1;
  for (std::size_t i = 1; i <= k; ++i) v = v * static_cast<long double>(n - k + i) / i;
  return v >= 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(std::llround(v));
}

// Leftmost embedding: earliest matching position for each symbol of x.
std::optional<std::vector<std::size_t>> leftmost(std::span<const Bit> y, std::span<const Bit> x) {
  std::vector<std::size_t> picked;
  std::size_t pos = 0;
  for (Bit b : x) {
    while (pos < y.size() && y[pos] != b) ++pos;
    if (pos == y.size()) return std::nullopt;
    picked.push_back(pos++);
  }
  return picked;
}

// Number of ways to place x[j..] at positions >= i, by summing over the
// position chosen for x[j].
class PlacementCounter {
 public:
  PlacementCounter(std::span<const Bit> y, std::span<const Bit> x)
      : y_(y), x_(x), memo_((y.size() + 1) * (x.size() + 1)) {}

  std::uint64_t count() { return place(0, 0); }

 private:
  std::uint64_t place(std::size_t i, std::size_t j) {
    if (j == x_.size()) return 1;
    auto& slot = memo_[i * (x_.size() + 1) + j];
    if (slot) return *slot;
    std::uint64_t total = 0;
    for (std::size_t p = i; p + (x_.size() - j) <= y_.size(); ++p) {
      if (y_[p] == x_[j]) total += place(p + 1, j + 1);
    }
    slot = total;
    return total;
  }

  std::span<const Bit> y_;
  std::span<const Bit> x_;
  std::vector<std::optional<std::uint64_t>> memo_;
};

void collect_masks(std::span<const Bit> y, std::span<const Bit> x, std::size_t from,
                   std::vector<std::size_t>& picked, std::vector<Mask>& out) {
  const std::size_t j = picked.size();
  if (j == x.size()) {
    out.emplace_back(picked);
    return;
  }
  for (std::size_t p = from; p < y.size(); ++p) {
    if (y[p] != x[j]) continue;
    picked.push_back(p);
    collect_masks(y, x, p + 1, picked, out);
    picked.pop_back();
  }
}

void check_n(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit || n > 62) {
    throw BudgetExceeded(std::string(what) + ": n = " + std::to_string(n) +
                         " exceeds the oracle budget of " + std::to_string(limit));
  }
}

// Calls visit(code, y, weight) for every y in {0,1}^n containing x.
template <typename Visit>
void scan(std::size_t n, const BitString& x, Visit&& visit) {
  const std::vector<Bit> xs(x.begin(), x.end());
  if (xs.size() > n) return;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    const std::vector<Bit> y = bits_of(code, n);
    if (!leftmost(y, xs)) continue;
    visit(y, PlacementCounter(y, xs).count());
  }
}

std::size_t ones(std::span<const Bit> v) {
  std::size_t c = 0;
  for (Bit b : v) c += b;
  return c;
}

}  // namespace

ExactCount oracle_count(const BitString& y, const BitString& x, const OracleBudget& budget) {
  const std::size_t n = y.size();
  const std::size_t m = x.size();
  if (m > n) return 0;
  const std::uint64_t subsets = subsets_saturating(n, m);
  if (subsets > budget.max_subsets) {
    throw BudgetExceeded("oracle_count: C(" + std::to_string(n) + ", " + std::to_string(m) +
                         ") exceeds max_subsets");
  }
  // Walk every m-subset of [n] in lexicographic order.
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  ExactCount total = 0;
  while (true) {
    bool match = true;
    for (std::size_t i = 0; i < m && match; ++i) match = y[idx[i]] == x[i];
    if (match) ++total;
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t k = i; k < m; ++k) idx[k] = idx[k - 1] + 1;
  }
  return total;
}

std::vector<Mask> oracle_masks(const BitString& y, const BitString& x) {
  std::vector<Mask> out;
  std::vector<std::size_t> picked;
  collect_masks(y.bits(), x.bits(), 0, picked, out);
  return out;
}

OracleSpace oracle_space(std::size_t n, const BitString& x, Listing listing,
                         const OracleBudget& budget) {
  check_n(n, budget.max_n, "oracle_space");
  if (listing != Listing::none) check_n(n, budget.max_listing_n, "oracle_space listing");
  OracleSpace space;
  space.distribution.n = n;
  space.distribution.x = x;
  const std::size_t h = ones(x.bits());
  scan(n, x, [&](const std::vector<Bit>& y, std::uint64_t weight) {
    const std::size_t cluster = ones(y) - h;
    ++space.distribution.counts[weight];
    ++space.distribution.by_cluster[cluster][weight];
    if (listing == Listing::none) return;
    OracleEntry e;
    e.y = BitString(y);
    e.weight = weight;
    e.cluster = cluster;
    e.initial = Mask(*leftmost(y, x.bits()));
    if (listing == Listing::with_masks) e.masks = oracle_masks(e.y, x);
    space.entries.push_back(std::move(e));
  });
  return space;
}

EntropyReport oracle_entropy(std::size_t n, const BitString& x, std::span<const double> alphas,
                             const OracleBudget& budget) {
  check_n(n, budget.max_n, "oracle_entropy");
  std::vector<std::uint64_t> weights;
  scan(n, x, [&](const std::vector<Bit>&, std::uint64_t weight) { weights.push_back(weight); });
  if (weights.empty()) throw InvalidArgument("oracle_entropy: no supersequences (|x| > n)");

  long double total = 0;
  std::uint64_t heaviest = 0;
  for (std::uint64_t w : weights) {
    total += static_cast<long double>(w);
    heaviest = std::max(heaviest, w);
  }
  EntropyReport r;
  for (std::uint64_t w : weights) {
    const double p = static_cast<double>(w / total);
    r.shannon -= p * std::log2(p);
  }
  for (double a : alphas) {
    if (!(a > 0.0) || a == 1.0) throw InvalidArgument("Renyi order must be positive and != 1");
    double sum = 0.0;
    for (std::uint64_t w : weights) sum += std::pow(static_cast<double>(w / total), a);
    r.renyi[a] = std::log2(sum) / (1.0 - a);
  }
  r.min_entropy = -std::log2(static_cast<double>(heaviest / total));
  return r;
}

}  // namespace delkit::oracle

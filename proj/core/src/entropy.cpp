#include "delkit/entropy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

#include "delkit/embed.hpp"
#include "delkit/error.hpp"
#include "delkit/rle.hpp"
#include "scan.hpp"

namespace delkit {

namespace {

using i64 = std::int64_t;

i64 s(std::size_t v) { return static_cast<i64>(v); }

std::uint64_t pairs(std::uint64_t k) { return k * (k - 1) / 2; }  // C(k, 2)

double total_weight_as_double(const WeightDistribution& d) {
  if (d.counts.empty()) throw InvalidArgument("entropy of an empty distribution");
  return d.total_weight().convert_to<double>();
}

}  // namespace

ExactCount WeightDistribution::support_size() const {
  ExactCount total = 0;
  for (const auto& [w, count] : counts) total += count;
  return total;
}

ExactCount WeightDistribution::total_weight() const {
  ExactCount total = 0;
  for (const auto& [w, count] : counts) total += ExactCount(w) * count;
  return total;
}

std::uint64_t WeightDistribution::max_weight() const {
  return counts.empty() ? 0 : counts.rbegin()->first;
}

std::string to_string(const WeightHistogram& h) {
  std::string out;
  for (const auto& [w, count] : h) {
    if (!out.empty()) out += ' ';
    out += std::to_string(w) + ':' + std::to_string(count);
  }
  return out;
}

ExactCount mu(std::size_t n, std::size_t m) {
  if (m > n) throw InvalidArgument("mu requires m <= n");
  return binomial(s(n), s(m)) * pow2(static_cast<std::uint32_t>(n - m));
}

WeightDistribution weight_distribution(std::size_t n, const BitString& x,
                                       const EnumerationBudget& budget) {
  if (x.size() > n) throw InvalidArgument("weight_distribution requires |x| <= n");
  WeightDistribution d;
  d.n = n;
  d.x = x;
  const std::size_t h = hamming_weight(x);
  detail::scan_supersequences(n, x, budget, [&](std::uint64_t code, std::uint64_t weight) {
    const auto cluster = static_cast<std::size_t>(std::popcount(code)) - h;
    ++d.counts[weight];
    ++d.by_cluster[cluster][weight];
  });
  return d;
}

ExactRational posterior(const BitString& y, const BitString& x, std::size_t n) {
  if (y.size() != n) throw InvalidArgument("posterior requires |y| = n");
  if (x.size() > n) throw InvalidArgument("posterior requires |x| <= n");
  return ExactRational(count_embeddings_dp(y, x), mu(n, x.size()));
}

double shannon_entropy(const WeightDistribution& d) {
  const double total = total_weight_as_double(d);
  double h = 0.0;
  for (const auto& [w, count] : d.counts) {
    const double p = static_cast<double>(w) / total;
    h -= static_cast<double>(count) * p * std::log2(p);
  }
  return h;
}

double renyi_entropy(const WeightDistribution& d, double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha)) {
    throw InvalidArgument("Renyi order must be positive, finite and different from 1");
  }
  const double total = total_weight_as_double(d);
  double sum = 0.0;
  for (const auto& [w, count] : d.counts) {
    sum += static_cast<double>(count) * std::pow(static_cast<double>(w) / total, alpha);
  }
  return std::log2(sum) / (1.0 - alpha);
}

double min_entropy(const WeightDistribution& d) {
  const double total = total_weight_as_double(d);
  return -std::log2(static_cast<double>(d.max_weight()) / total);
}

EntropyReport entropy_report(const WeightDistribution& d, std::span<const double> alphas) {
  EntropyReport r;
  r.shannon = shannon_entropy(d);
  for (double a : alphas) r.renyi[a] = renyi_entropy(d, a);
  r.min_entropy = min_entropy(d);
  return r;
}

BitString g_transform(const BitString& x) {
  const Rle r = rle_encode(x);
  if (r.blocks.size() <= 1) return x;
  Rle merged;
  merged.leading = static_cast<Bit>(r.leading ^ 1U);
  merged.blocks.push_back(r.blocks[0] + r.blocks[1]);
  merged.blocks.insert(merged.blocks.end(), r.blocks.begin() + 2, r.blocks.end());
  return rle_decode(merged);
}

std::vector<BitString> g_chain(const BitString& x) {
  std::vector<BitString> chain{x};
  while (!is_constant(chain.back())) chain.push_back(g_transform(chain.back()));
  return chain;
}

WeightDistribution predicted_weights_single(const BitString& x) {
  const Rle r = rle_encode(x);
  WeightDistribution d;
  d.n = x.size() + 1;
  d.x = x;
  for (std::size_t k : r.blocks) ++d.counts[k + 1];  // block-lengthening
  d.counts[1] += x.size() - r.blocks.size() + 2;      // block-splitting
  return d;
}

std::vector<std::size_t> split_slots(std::span<const std::size_t> runs) {
  std::vector<std::size_t> slots(runs.begin(), runs.end());
  if (slots.size() == 1) {
    slots[0] += 1;
  } else {
    for (std::size_t i = 1; i + 1 < slots.size(); ++i) slots[i] -= 1;
  }
  return slots;
}

WeightDistribution predicted_weights_double(const BitString& x) {
  WeightDistribution d;
  d.n = x.size() + 2;
  d.x = x;
  if (x.empty()) {
    d.counts[1] = 4;
    return d;
  }
  const std::vector<std::size_t> k = rle_encode(x).blocks;
  const std::size_t runs = k.size();
  const std::size_t m = x.size();
  const std::vector<std::size_t> kt = split_slots(k);

  // 2/0: both insertions lengthen runs.
  for (std::size_t i = 0; i < runs; ++i) {
    ++d.counts[pairs(k[i] + 2)];
    for (std::size_t j = i + 1; j < runs; ++j) ++d.counts[(k[i] + 1) * (k[j] + 1)];
  }

  // 0/2: both insertions split runs (or extend x at either end).
  std::uint64_t singles = 0;
  for (std::size_t i = 0; i < runs; ++i) {
    singles += pairs(kt[i] + 1);
    for (std::size_t j = i + 1; j < runs; ++j) singles += kt[i] * kt[j];
  }
  if (singles > 0) d.counts[1] += singles;

  // 1/1: lengthen run i, split elsewhere. Run 0 keeps one extra plain
  // string. The special strings (.., k_t, 1, 1, k_{t+1}, ..) at boundaries t
  // and t+1 coincide when k_{t+1} = 1, so each maximal chain of such
  // boundaries t = i..j yields one string of weight k_i + .. + k_{j+1} + 1
  // (k_{l+1} = 0) and j - i strings of weight 2.
  for (std::size_t i = 0; i < runs; ++i) {
    d.counts[k[i] + 1] += i == 0 ? m - runs + 2 : m - runs + 1;
  }
  for (std::size_t i = 0; i < runs;) {
    std::size_t j = i;
    while (j + 1 < runs && k[j + 1] == 1) ++j;
    std::uint64_t weight = 1;
    for (std::size_t t = i; t <= j + 1 && t < runs; ++t) weight += k[t];
    ++d.counts[weight];
    if (j > i) d.counts[2] += j - i;
    i = j + 1;
  }
  return d;
}

double delta_single(std::uint64_t k1, std::uint64_t k2) {
  if (k1 == 0 || k2 == 0) throw InvalidArgument("delta_single requires k1, k2 >= 1");
  if (k1 > k2) std::swap(k1, k2);  // same rounding for (k1, k2) and (k2, k1)
  const auto plogp = [](double v) { return v * std::log2(v); };
  const double a = static_cast<double>(k1) + 1.0;
  const double b = static_cast<double>(k2) + 1.0;
  const double merged = static_cast<double>(k1 + k2) + 1.0;
  return plogp(merged) - plogp(a) - plogp(b);
}

GStepReport verify_g_decreases(const BitString& x, std::size_t deletions,
                               const EnumerationBudget& budget) {
  if (deletions != 1 && deletions != 2) {
    throw InvalidArgument("verify_g_decreases supports 1 or 2 deletions");
  }
  if (x.empty()) throw InvalidArgument("verify_g_decreases requires |x| >= 1");
  const auto predict = deletions == 1 ? predicted_weights_single : predicted_weights_double;

  GStepReport r;
  r.x = x;
  r.gx = g_transform(x);
  r.deletions = deletions;
  r.entropy_x = shannon_entropy(predict(r.x));
  r.entropy_gx = shannon_entropy(predict(r.gx));
  r.difference = r.entropy_x - r.entropy_gx;

  const std::size_t n = x.size() + deletions;
  if (n <= budget.max_n && n <= kMaxScanLength) {
    r.enumerated_difference = shannon_entropy(weight_distribution(n, r.x, budget)) -
                              shannon_entropy(weight_distribution(n, r.gx, budget));
  }
  const auto acceptable = [&](double diff) {
    return is_constant(x) ? std::abs(diff) <= kEntropyTolerance : diff > kEntropyTolerance;
  };
  r.ok = acceptable(r.difference) && (!r.enumerated_difference || acceptable(*r.enumerated_difference));
  return r;
}

namespace {

std::pair<std::size_t, std::size_t> validate_composition(std::span<const std::size_t> k) {
  if (k.empty()) throw InvalidArgument("composition must have at least one part");
  std::size_t m = 0;
  for (std::size_t part : k) {
    if (part == 0) throw InvalidArgument("composition parts must be positive");
    m += part;
  }
  return {m, k.size()};
}

}  // namespace

IdentityCheck sanity_identity_counts_double(std::span<const std::size_t> composition) {
  const auto [m, runs] = validate_composition(composition);
  const std::vector<std::size_t> kt = split_slots(composition);
  ExactCount splits = 0;
  for (std::size_t i = 0; i < runs; ++i) {
    splits += binomial(s(kt[i]) + 1, 2);
    for (std::size_t j = i + 1; j < runs; ++j) splits += ExactCount(kt[i]) * kt[j];
  }
  IdentityCheck r;
  r.name = "identityB";
  r.composition.assign(composition.begin(), composition.end());
  r.lhs = ExactCount(runs * (runs + 1) / 2) + splits + 1 + ExactCount(runs) * (m - runs + 2);
  r.rhs = binomial(s(m) + 2, s(m)) + binomial(s(m) + 2, s(m) + 1) + 1;
  r.ok = r.lhs == r.rhs;
  return r;
}

IdentityCheck sanity_identity_weights_double(std::span<const std::size_t> composition) {
  const auto [m, runs] = validate_composition(composition);
  const auto& k = composition;
  const std::vector<std::size_t> kt = split_slots(composition);
  ExactCount total = 0;
  for (std::size_t i = 0; i < runs; ++i) {
    total += binomial(s(k[i]) + 2, 2);
    for (std::size_t j = i + 1; j < runs; ++j) total += ExactCount(k[i] + 1) * (k[j] + 1);
    total += binomial(s(kt[i]) + 1, 2);
    for (std::size_t j = i + 1; j < runs; ++j) total += ExactCount(kt[i]) * kt[j];
    const std::size_t next = i + 1 < runs ? k[i + 1] : 0;
    const std::size_t plain = i == 0 ? m - runs + 2 : m - runs + 1;
    total += ExactCount(plain) * (k[i] + 1) + (k[i] + next + 1);
  }
  IdentityCheck r;
  r.name = "identityC";
  r.composition.assign(composition.begin(), composition.end());
  r.lhs = total;
  r.rhs = 4 * binomial(s(m) + 2, 2);
  r.ok = r.lhs == r.rhs;
  return r;
}

void for_each_composition(std::size_t m,
                          const std::function<void(std::span<const std::size_t>)>& visit) {
  if (m == 0) return;
  std::vector<std::size_t> parts;
  std::function<void(std::size_t)> extend = [&](std::size_t left) {
    if (left == 0) {
      visit(parts);
      return;
    }
    for (std::size_t part = 1; part <= left; ++part) {
      parts.push_back(part);
      extend(left - part);
      parts.pop_back();
    }
  };
  extend(m);
}

BitString from_composition(std::span<const std::size_t> composition, Bit leading) {
  Rle r;
  r.leading = leading;
  r.blocks.assign(composition.begin(), composition.end());
  return rle_decode(r);
}

}  // namespace delkit

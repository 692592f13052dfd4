#include "delkit/embed.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "delkit/error.hpp"
#include "delkit/rle.hpp"

namespace delkit {

namespace {

template <typename Int>
Int embedding_dp(const BitString& y, const BitString& x) {
  const std::size_t m = x.size();
  if (m > y.size()) return Int{0};
  // ways[j] = embeddings of x[0..j) into the prefix of y read so far.
  std::vector<Int> ways(m + 1, Int{0});
  ways[0] = 1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const std::size_t hi = std::min(m, i + 1);
    for (std::size_t j = hi; j >= 1; --j) {
      if (y[i] == x[j - 1]) ways[j] += ways[j - 1];
    }
  }
  return ways[m];
}

}  // namespace

ExactCount count_embeddings_dp(const BitString& y, const BitString& x) {
  if (y.size() <= kMaxScanLength) return ExactCount(embedding_dp<std::uint64_t>(y, x));
  return embedding_dp<ExactCount>(y, x);
}

std::uint64_t embedding_weight(const BitString& y, const BitString& x) {
  if (y.size() > kMaxScanLength) {
    throw OverflowError("embedding_weight: |y| exceeds the 64-bit exact range");
  }
  return embedding_dp<std::uint64_t>(y, x);
}

std::vector<Mask> enumerate_masks(const BitString& y, const BitString& x,
                                  const EnumerationBudget& budget) {
  require_scan_budget(y.size(), budget);
  const std::uint64_t total = embedding_weight(y, x);
  if (total > budget.max_items) {
    throw BudgetExceeded("enumerate_masks: " + std::to_string(total) +
                         " masks exceed the listing budget");
  }
  const std::size_t n = y.size();
  const std::size_t m = x.size();
  std::vector<Mask> out;
  if (m > n) return out;
  out.reserve(static_cast<std::size_t>(total));

  // viable[i][j]: x[j..) embeds into y[i..).
  std::vector<std::vector<char>> viable(n + 1, std::vector<char>(m + 1, 0));
  for (std::size_t i = n + 1; i-- > 0;) {
    viable[i][m] = 1;
    if (i == n) continue;
    for (std::size_t j = m; j-- > 0;) {
      viable[i][j] = viable[i + 1][j] || (y[i] == x[j] && viable[i + 1][j + 1]);
    }
  }

  std::vector<std::size_t> chosen;
  chosen.reserve(m);
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t j) {
    if (j == m) {
      out.emplace_back(chosen);
      return;
    }
    for (std::size_t p = from; p + (m - j) <= n; ++p) {
      if (y[p] == x[j] && viable[p + 1][j + 1]) {
        chosen.push_back(p);
        extend(p + 1, j + 1);
        chosen.pop_back();
      }
    }
  };
  if (viable[0][0]) extend(0, 0);
  return out;
}

std::string BlockMap::str() const {
  std::string out;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(i + 1) + "->" + std::to_string(image[i] + 1);
  }
  return out;
}

ExactCount sigma_count(std::size_t x_blocks, std::size_t y_blocks) {
  if (x_blocks == 0) return 1;
  if (y_blocks < x_blocks) return 0;
  const std::size_t usable = (y_blocks - x_blocks) % 2 == 0 ? y_blocks : y_blocks - 1;
  const std::size_t gaps = (usable - x_blocks) / 2;
  return binomial(static_cast<std::int64_t>(x_blocks + gaps), static_cast<std::int64_t>(gaps));
}

ExactCount sigma_count_recursive(std::size_t x_blocks, std::size_t y_blocks) {
  std::vector<std::vector<std::optional<ExactCount>>> memo(
      x_blocks + 1, std::vector<std::optional<ExactCount>>(y_blocks + 1));
  std::function<ExactCount(std::size_t, std::size_t)> sigma = [&](std::size_t a,
                                                                  std::size_t b) -> ExactCount {
    if (a == 0) return 1;
    if (b < a) return 0;
    auto& slot = memo[a][b];
    if (slot) return *slot;
    ExactCount total = 0;
    // f(1) = 1 + 2i leaves b - 1 - 2i blocks for the remaining a - 1.
    for (std::size_t first = 1; first <= b; first += 2) total += sigma(a - 1, b - first);
    slot = total;
    return total;
  };
  return sigma(x_blocks, y_blocks);
}

std::vector<BlockMap> enumerate_block_maps(std::size_t x_blocks, std::size_t y_blocks) {
  std::vector<BlockMap> out;
  if (x_blocks == 0) {
    out.push_back({});
    return out;
  }
  if (y_blocks < x_blocks) return out;
  std::vector<std::size_t> image;
  image.reserve(x_blocks);
  std::function<void(std::size_t)> place = [&](std::size_t from) {
    const std::size_t i = image.size();
    if (i == x_blocks) {
      out.push_back(BlockMap{image});
      return;
    }
    const std::size_t remaining = x_blocks - i - 1;
    for (std::size_t b = from; b + remaining < y_blocks; b += 2) {
      image.push_back(b);
      place(b + 1);
      image.pop_back();
    }
  };
  place(0);
  return out;
}

namespace {

// Run lengths of y aligned with x: y's first run is dropped when the two
// strings start with different symbols. Returns the trimmed runs and the
// number of positions dropped.
std::pair<std::vector<std::size_t>, std::size_t> aligned_runs(const Rle& ry, const Rle& rx) {
  std::vector<std::size_t> runs = ry.blocks;
  std::size_t dropped = 0;
  if (!runs.empty() && !rx.blocks.empty() && ry.leading != rx.leading) {
    dropped = runs.front();
    runs.erase(runs.begin());
  }
  return {std::move(runs), dropped};
}

}  // namespace

std::vector<BlockMapTerm> block_map_terms(const BitString& y, const BitString& x) {
  const Rle rx = rle_encode(x);
  const Rle ry = rle_encode(y);
  std::vector<BlockMapTerm> terms;
  if (rx.blocks.empty()) return terms;
  const auto [yruns, dropped] = aligned_runs(ry, rx);
  (void)dropped;

  for (BlockMap& f : enumerate_block_maps(rx.blocks.size(), yruns.size())) {
    ExactCount product = 1;
    std::size_t start = 0;  // first y block after f(i - 1)
    for (std::size_t i = 0; i < f.image.size() && product != 0; ++i) {
      // Same-symbol y blocks start, start + 2, ..., f(i) can feed block i of x.
      std::size_t pool = 0;
      for (std::size_t b = start; b <= f.image[i]; b += 2) pool += yruns[b];
      const std::size_t without_last = pool - yruns[f.image[i]];
      const auto need = static_cast<std::int64_t>(rx.blocks[i]);
      product *= binomial(static_cast<std::int64_t>(pool), need) -
                 binomial(static_cast<std::int64_t>(without_last), need);
      start = f.image[i] + 1;
    }
    terms.push_back(BlockMapTerm{std::move(f), std::move(product)});
  }
  return terms;
}

ExactCount count_embeddings_runs(const BitString& y, const BitString& x) {
  if (x.empty()) return 1;
  ExactCount total = 0;
  for (const BlockMapTerm& t : block_map_terms(y, x)) total += t.count;
  return total;
}

BlockMap induced_block_map(const BitString& y, const BitString& x, const Mask& mask) {
  if (mask.size() != x.size() || (!mask.empty() && mask.back() >= y.size()) || mask.apply(y) != x) {
    throw InvalidArgument("induced_block_map: mask does not project y onto x");
  }
  const Rle rx = rle_encode(x);
  const Rle ry = rle_encode(y);
  const auto [yruns, dropped] = aligned_runs(ry, rx);

  // block_of[p] = trimmed y block containing trimmed position p.
  std::vector<std::size_t> block_of;
  for (std::size_t b = 0; b < yruns.size(); ++b) block_of.insert(block_of.end(), yruns[b], b);

  BlockMap f;
  std::size_t last = 0;
  for (std::size_t k : rx.blocks) {
    last += k;
    f.image.push_back(block_of[mask[last - 1] - dropped]);
  }
  return f;
}

}  // namespace delkit

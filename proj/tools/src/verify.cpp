#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "delkit/delkit.hpp"

namespace delkit::cli {

namespace {

struct Rows {
  std::string suite;
  Table& table;
  bool ok = true;

  void add(std::string name, Cell lhs, Cell rhs, bool pass) {
    table.rows.push_back({suite, std::move(name), std::move(lhs), std::move(rhs), pass});
    ok = ok && pass;
  }
};

void for_each_x(std::size_t min_m, std::size_t max_m,
                const std::function<void(const BitString&)>& visit) {
  for (std::size_t m = min_m; m <= max_m; ++m) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
      visit(BitString::from_code(code, m));
    }
  }
}

std::string label(const BitString& x, std::size_t n) {
  return "x=" + (x.empty() ? std::string("eps") : x.str()) + " n=" + std::to_string(n);
}

std::string join(std::span<const std::size_t> parts) {
  std::string s;
  for (std::size_t p : parts) s += (s.empty() ? "" : "+") + std::to_string(p);
  return s;
}

// n = m .. m + 2, kept inside the scan budget.
std::size_t top_n(std::size_t m, const EnumerationBudget& budget) {
  return std::min(m + 2, budget.max_n);
}

void clusters(Rows& r, std::size_t max_m, const EnumerationBudget& budget) {
  for_each_x(0, max_m, [&](const BitString& x) {
    const std::size_t m = x.size();
    const std::size_t h = hamming_weight(x);
    for (std::size_t n = m; n <= top_n(m, budget); ++n) {
      const auto d = weight_distribution(n, x, budget);
      for (std::size_t c = 0; c <= n - m; ++c) {
        ExactCount enumerated = 0;
        if (auto it = d.by_cluster.find(c); it != d.by_cluster.end()) {
          for (const auto& [w, count] : it->second) enumerated += count;
        }
        const ExactCount closed = cluster_size_closed(n, m, h, c);
        const bool pass = closed == enumerated && cluster_size_simple(n, m, h, c) == closed &&
                          cluster_size_recursive(n, x, c) == closed;
        r.add(label(x, n) + " c=" + std::to_string(c), closed, enumerated, pass);
      }
    }
  });
}

void initials(Rows& r, std::size_t max_m, const EnumerationBudget& budget) {
  for_each_x(1, max_m, [&](const BitString& x) {
    const std::size_t m = x.size();
    const std::size_t h = hamming_weight(x);
    for (std::size_t n = m; n <= top_n(m, budget); ++n) {
      std::map<std::size_t, ExactCount> per_cluster;
      ExactCount total = 0;
      for_each_supersequence(n, x, [&](const BitString& y, std::uint64_t) {
        if (!is_maximal_initial(y, x)) return;
        ++total;
        ++per_cluster[hamming_weight(y) - h];
      }, budget);
      bool pass = total == maximal_initials_total(n, m);
      for (std::size_t c = 0; c <= n - m; ++c) {
        pass = pass && per_cluster[c] == maximal_initials_cluster(n, m, h, c);
      }
      r.add(label(x, n), maximal_initials_total(n, m), total, pass);
    }
  });
}

void singletons(Rows& r, std::size_t max_m, const EnumerationBudget& budget) {
  for_each_x(0, max_m, [&](const BitString& x) {
    for (std::size_t n = x.size(); n <= top_n(x.size(), budget); ++n) {
      const auto d = weight_distribution(n, x, budget);
      const ExactCount enumerated = d.counts.contains(1) ? ExactCount(d.counts.at(1)) : 0;
      const ExactCount closed = singleton_count(n, x);
      r.add(label(x, n), closed, enumerated, closed == enumerated);
    }
  });
}

void predicted_vs_enumerated(Rows& r, std::size_t max_m, const EnumerationBudget& budget, std::size_t deletions) {
  for_each_x(0, max_m, [&](const BitString& x) {
    const std::size_t n = x.size() + deletions;
    if (n > budget.max_n) return;
    const auto predicted = deletions == 1 ? predicted_weights_single(x) : predicted_weights_double(x);
    const auto enumerated = weight_distribution(n, x, budget);
    r.add(label(x, n), to_string(predicted.counts), to_string(enumerated.counts),
          predicted.counts == enumerated.counts);
  });
}

void identity(Rows& r, std::size_t max_m, bool weights) {
  for (std::size_t m = 1; m <= max_m; ++m) {
    for_each_composition(m, [&](std::span<const std::size_t> k) {
      const IdentityCheck c =
          weights ? sanity_identity_weights_double(k) : sanity_identity_counts_double(k);
      r.add("k=" + join(k), c.lhs, c.rhs, c.ok);
    });
  }
}

void entropy_min(Rows& r, std::size_t max_m, const EnumerationBudget& budget) {
  for (std::size_t m = 1; m <= max_m; ++m) {
    for (std::size_t deletions : {1U, 2U}) {
      const std::size_t n = m + deletions;
      if (n > budget.max_n) continue;
      std::vector<std::pair<double, std::string>> h;
      for_each_x(m, m, [&](const BitString& x) {
        h.emplace_back(shannon_entropy(weight_distribution(n, x, budget)), x.str());
      });
      const double lowest = std::min_element(h.begin(), h.end())->first;
      std::string argmin;
      for (const auto& [value, x] : h) {
        if (value <= lowest + kEntropyTolerance) argmin += (argmin.empty() ? "" : " ") + x;
      }
      const std::string expected =
          BitString::constant(m, 0).str() + " " + BitString::constant(m, 1).str();
      r.add("m=" + std::to_string(m) + " n=" + std::to_string(n), argmin, expected,
            argmin == expected);
    }
  }
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"clusters",  "initials",  "singletons",
                                              "lemma1",    "lemma4",    "identityB",
                                              "identityC", "entropy-min"};
  return names;
}

bool run_suite(const std::string& suite, std::size_t max_m, const EnumerationBudget& budget,
               Table& out) {
  Rows r{suite, out};
  if (suite == "clusters") {
    clusters(r, max_m, budget);
  } else if (suite == "initials") {
    initials(r, max_m, budget);
  } else if (suite == "singletons") {
    singletons(r, max_m, budget);
  } else if (suite == "lemma1") {
    predicted_vs_enumerated(r, max_m, budget, 1);
  } else if (suite == "lemma4") {
    predicted_vs_enumerated(r, max_m, budget, 2);
  } else if (suite == "identityB") {
    identity(r, max_m, false);
  } else if (suite == "identityC") {
    identity(r, max_m, true);
  } else if (suite == "entropy-min") {
    entropy_min(r, max_m, budget);
  } else {
    throw InvalidArgument("unknown suite: " + suite);
  }
  return r.ok;
}

}  // namespace delkit::cli

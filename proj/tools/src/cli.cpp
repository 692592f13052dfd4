#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "delkit/delkit.hpp"
#include "delkit/oracle.hpp"
#include "table.hpp"
#include "verify.hpp"

namespace delkit::cli {

namespace {

struct Options {
  std::string format = "csv";
  std::string out_path;
  std::optional<std::size_t> max_n;
};

EnumerationBudget resolve_budget(const Options& opts) {
  EnumerationBudget budget;
  if (const char* env = std::getenv("DELKIT_BUDGET"); env != nullptr && *env != '\0') {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != std::string(env).size() || value == 0) {
      throw InvalidArgument(std::string("DELKIT_BUDGET must be a positive integer, got '") +
                            env + "'");
    }
    budget.max_n = value;
  }
  if (opts.max_n) budget.max_n = *opts.max_n;
  return budget;
}

Format parse_format(const std::string& f) { return f == "json" ? Format::json : Format::csv; }

std::string alpha_label(double a) {
  std::ostringstream s;
  s << a;
  return "renyi_" + s.str();
}

// count ----------------------------------------------------------------------

struct CountArgs {
  std::string y;
  std::string x;
  std::string method = "dp";
  bool masks = false;
};

void cmd_count(const CountArgs& a, const Options& opts, const EnumerationBudget& budget,
               std::ostream& out) {
  const BitString y = BitString::parse(a.y);
  const BitString x = BitString::parse(a.x);
  ExactCount omega;
  if (a.method == "runs") {
    omega = count_embeddings_runs(y, x);
  } else if (a.method == "oracle") {
    omega = oracle::oracle_count(y, x);
  } else {
    omega = count_embeddings_dp(y, x);
  }
  std::vector<Mask> masks;
  if (a.masks) masks = enumerate_masks(y, x, budget);

  if (parse_format(opts.format) == Format::json) {
    nlohmann::ordered_json doc;
    doc["schema"] = "delkit.count";
    doc["version"] = 1;
    doc["y"] = a.y;
    doc["x"] = a.x;
    doc["method"] = a.method;
    if (omega <= std::numeric_limits<std::uint64_t>::max()) {
      doc["omega"] = omega.convert_to<std::uint64_t>();
    } else {
      doc["omega"] = to_string(omega);
    }
    if (a.masks) {
      auto list = nlohmann::ordered_json::array();
      for (const Mask& mask : masks) list.push_back(mask.str());
      doc["masks"] = std::move(list);
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << to_string(omega) << '\n';
  for (const Mask& mask : masks) out << mask.str() << '\n';
}

// distribution -----------------------------------------------------------------

Table cmd_distribution(const std::string& xs, std::size_t n, bool by_cluster,
                       const EnumerationBudget& budget) {
  const BitString x = BitString::parse(xs);
  const WeightDistribution d = weight_distribution(n, x, budget);
  const ExactCount total = mu(n, x.size());
  const ExactCount upsilon = upsilon_size(n, x.size());
  Table t;
  t.schema = "delkit.distribution";
  t.columns = {"x", "n", "mu", "upsilon"};
  if (by_cluster) t.columns.push_back("cluster");
  t.columns.insert(t.columns.end(), {"weight", "count"});
  const Cell xc = xs;
  const Cell nc = ExactCount(n);
  if (by_cluster) {
    for (const auto& [c, hist] : d.by_cluster) {
      for (const auto& [w, count] : hist) {
        t.rows.push_back({xc, nc, total, upsilon, ExactCount(c), ExactCount(w), ExactCount(count)});
      }
    }
  } else {
    for (const auto& [w, count] : d.counts) {
      t.rows.push_back({xc, nc, total, upsilon, ExactCount(w), ExactCount(count)});
    }
  }
  return t;
}

// sweep ------------------------------------------------------------------------

Table cmd_sweep(std::size_t m, std::size_t n, std::vector<double> alphas, std::size_t threads,
                const EnumerationBudget& budget) {
  if (m > n) throw InvalidArgument("sweep requires m <= n");
  for (double a : alphas) {
    if (!(a > 0.0) || a == 1.0) throw InvalidArgument("--alpha values must be > 0 and != 1");
  }
  require_scan_budget(n, budget);
  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<EntropyReport> reports(count);
  const auto work = [&](std::uint64_t first) {
    for (std::uint64_t code = first; code < count; code += threads) {
      const auto d = weight_distribution(n, BitString::from_code(code, m), budget);
      reports[code] = entropy_report(d, alphas);
    }
  };
  threads = std::max<std::size_t>(1, std::min<std::uint64_t>(threads, count));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(work, i);
  work(0);
  for (auto& th : pool) th.join();

  Table t;
  t.schema = "delkit.sweep";
  t.columns = {"x", "n", "shannon"};
  for (double a : alphas) t.columns.push_back(alpha_label(a));
  t.columns.push_back("min_entropy");
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<Cell> row{BitString::from_code(code, m).str(), ExactCount(n), reports[code].shannon};
    for (double a : alphas) row.emplace_back(reports[code].renyi.at(a));
    row.emplace_back(reports[code].min_entropy);
    t.rows.push_back(std::move(row));
  }
  return t;
}

// gchain -----------------------------------------------------------------------

Table cmd_gchain(const std::string& xs, std::size_t deletions, const EnumerationBudget& budget) {
  const BitString x = BitString::parse(xs);
  const std::size_t n = x.size() + deletions;
  Table t;
  t.schema = "delkit.gchain";
  t.columns = {"step", "x", "H"};
  std::size_t step = 0;
  for (const BitString& s : g_chain(x)) {
    const double h = shannon_entropy(weight_distribution(n, s, budget));
    t.rows.push_back({ExactCount(step++), s.str(), h});
  }
  return t;
}

// verify -----------------------------------------------------------------------

bool cmd_verify(const std::string& suite, std::size_t max_m, const EnumerationBudget& budget,
                Table& t) {
  t.schema = "delkit.verify";
  t.columns = {"suite", "case", "lhs", "rhs", "ok"};
  if (suite != "all") return run_suite(suite, max_m, budget, t);
  bool ok = true;
  for (const std::string& s : verify_suites()) ok = run_suite(s, max_m, budget, t) && ok;
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deletion-channel combinatorics on binary strings", "delkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", opts.out_path, "Write output to this file instead of stdout");
  app.add_option("--max-n", opts.max_n, "Largest n for exhaustive scans (overrides DELKIT_BUDGET)")
      ->check(CLI::Range(1, static_cast<int>(kMaxScanLength)));

  CountArgs count;
  auto* c = app.add_subcommand("count", "Number of embeddings of x in y");
  c->add_option("--y", count.y, "Supersequence")->required();
  c->add_option("--x", count.x, "Subsequence")->required();
  c->add_option("--method", count.method, "Counting route")
      ->check(CLI::IsMember({"dp", "runs", "oracle"}))
      ->capture_default_str();
  c->add_flag("--masks", count.masks, "Also list every mask (1-based)");

  std::string dx;
  std::size_t dn = 0;
  bool by_cluster = false;
  auto* d = app.add_subcommand("distribution", "Weight histogram of all supersequences");
  d->add_option("--x", dx, "Subsequence")->required();
  d->add_option("--n", dn, "Supersequence length")->required();
  d->add_flag("--by-cluster", by_cluster, "Split by the number of inserted 1's");

  std::size_t sm = 0;
  std::size_t sn = 0;
  std::vector<double> alphas{2.0};
  std::size_t threads = 1;
  bool no_m_limit = false;
  auto* s = app.add_subcommand("sweep", "Entropies for every x of length m");
  s->add_option("--m", sm, "Length of x")->required();
  s->add_option("--n", sn, "Supersequence length")->required();
  s->add_option("--alpha", alphas, "Renyi orders")->delimiter(',')->capture_default_str();
  s->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  s->add_flag("--no-m-limit", no_m_limit, "Allow m > 12");

  std::string gx;
  std::size_t deletions = 1;
  auto* g = app.add_subcommand("gchain", "Entropy along x, g(x), g(g(x)), ...");
  g->add_option("--x", gx, "Starting string")->required();
  g->add_option("--deletions", deletions, "1 or 2")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();

  std::string suite = "all";
  std::size_t max_m = 8;
  auto* v = app.add_subcommand("verify", "Check closed forms against enumeration");
  std::vector<std::string> suites = verify_suites();
  suites.push_back("all");
  v->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suites))->capture_default_str();
  v->add_option("--max-m", max_m, "Largest |x| (or composition sum)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    const EnumerationBudget budget = resolve_budget(opts);
    std::ostringstream buffer;
    const Format format = parse_format(opts.format);
    int code = kExitOk;
    if (c->parsed()) {
      cmd_count(count, opts, budget, buffer);
    } else if (d->parsed()) {
      write_table(buffer, cmd_distribution(dx, dn, by_cluster, budget), format);
    } else if (s->parsed()) {
      if (sm > 12 && !no_m_limit) throw InvalidArgument("--m above 12 needs --no-m-limit");
      write_table(buffer, cmd_sweep(sm, sn, alphas, threads, budget), format);
    } else if (g->parsed()) {
      write_table(buffer, cmd_gchain(gx, deletions, budget), format);
    } else if (v->parsed()) {
      Table t;
      if (!cmd_verify(suite, max_m, budget, t)) code = kExitVerifyFailed;
      write_table(buffer, t, format);
    }
    if (opts.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(opts.out_path, std::ios::binary);
      if (!(file << buffer.str())) {
        err << "delkit: cannot write " << opts.out_path << '\n';
        return kExitUsage;
      }
    }
    return code;
  } catch (const Error& e) {
    err << "delkit: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace delkit::cli

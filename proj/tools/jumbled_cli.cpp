// Command-line front end: build, query, pnf, verify, experiment, bench.
//
// Exit status: 0 success, 1 verification failure, 2 usage/format/I-O error.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "jumbled/batch.hpp"
#include "jumbled/corner.hpp"
#include "jumbled/errors.hpp"
#include "jumbled/generate.hpp"
#include "jumbled/oracle.hpp"
#include "jumbled/persist.hpp"
#include "jumbled/pnf.hpp"
#include "jumbled/rle.hpp"

namespace {

using namespace jumbled;
using Clock = std::chrono::steady_clock;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

enum class Format { human, tsv, jsonl };

struct UsageError : Error {
  using Error::Error;
};

struct Config {
  Alphabet alphabet = Alphabet::ab;
  std::string input;  // empty: not given
  std::string index_path;
  Format format = Format::human;
  std::uint64_t seed = 1;
  std::optional<std::size_t> count;
  std::size_t length = 1024;
  std::optional<double> run_geometric;
  int threads = 1;
  std::size_t max_oracle_n = oracle::kDefaultMaxLength;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string read_text(const Config& cfg) {
  return normalize_text(read_all(cfg.input.empty() ? "-" : cfg.input),
                        cfg.alphabet);
}

// Inverse of normalize_text for output.
std::string in_alphabet(std::string s, Alphabet alphabet) {
  if (alphabet == Alphabet::zero_one) {
    for (char& c : s) c = c == 'a' ? '0' : '1';
  }
  return s;
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Ordered key/value report rendered in the selected format.
class Report {
 public:
  template <class T>
  Report& add(const std::string& key, const T& value) {
    std::ostringstream text;
    text << value;
    entries_.push_back({key, text.str()});
    object_[key] = value;
    return *this;
  }

  void print(Format format, std::ostream& out) const {
    switch (format) {
      case Format::human:
        for (const auto& [k, v] : entries_) out << k << ": " << v << '\n';
        break;
      case Format::tsv:
        for (const auto& [k, v] : entries_) out << k << '\t' << v << '\n';
        break;
      case Format::jsonl:
        out << object_.dump() << '\n';
        break;
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  json object_ = json::object();
};

std::string make_text(const Config& cfg, Rng& rng, std::size_t length) {
  return cfg.run_geometric ? geometric_run_text(length, *cfg.run_geometric, rng)
                           : random_text(length, rng);
}

// --- build -----------------------------------------------------------------

int cmd_build(const Config& cfg) {
  if (cfg.index_path.empty()) throw UsageError("build needs --index PATH");
  const std::string text = read_text(cfg);
  const auto start = Clock::now();
  const RunLengthEncoding rle = encode(text);
  const CornerIndex index = build_index(rle);
  const double elapsed = ms_since(start);
  save_index(index, cfg.index_path);

  Report()
      .add("n", index.n())
      .add("rho", rho(rle))
      .add("l_min", index.l_min().size())
      .add("l_max", index.l_max().size())
      .add("peak_min", index.stats().min.peak)
      .add("peak_max", index.stats().max.peak)
      .add("build_ms", elapsed)
      .add("index", cfg.index_path)
      .print(cfg.format, std::cout);
  return kExitOk;
}

// --- query -----------------------------------------------------------------

// Exactly two whitespace-separated non-negative integers.
std::optional<ParikhVector> parse_query(const std::string& line) {
  std::istringstream tokens(line);
  std::vector<std::string> parts{std::istream_iterator<std::string>(tokens), {}};
  if (parts.size() != 2) return std::nullopt;
  Count values[2];
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string& t = parts[i];
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), values[i]);
    if (ec != std::errc() || ptr != t.data() + t.size()) return std::nullopt;
  }
  return ParikhVector{values[0], values[1]};
}

int cmd_query(const Config& cfg) {
  if (cfg.index_path.empty()) throw UsageError("query needs --index PATH");
  const CornerIndex index = load_index(cfg.index_path);

  std::ifstream file;
  std::istream* in = &std::cin;
  if (!cfg.input.empty() && cfg.input != "-") {
    file.open(cfg.input);
    if (!file) throw IoError("cannot open " + cfg.input);
    in = &file;
  }

  std::size_t failures = 0;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(*in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto q = parse_query(line);
    if (!q) {
      ++failures;
      std::cerr << "line " << line_no << ": malformed query '" << line << "'\n";
      switch (cfg.format) {
        case Format::human: std::cout << "error\n"; break;
        case Format::tsv: std::cout << "error\n"; break;
        case Format::jsonl:
          std::cout << json{{"line", line_no}, {"error", "malformed query"}}.dump() << '\n';
          break;
      }
      continue;
    }
    const bool occurs = query(index, *q);
    switch (cfg.format) {
      case Format::human: std::cout << (occurs ? "occurs" : "not-occurs") << '\n'; break;
      case Format::tsv:
        std::cout << q->x << '\t' << q->y << '\t' << (occurs ? "occurs" : "not-occurs") << '\n';
        break;
      case Format::jsonl:
        std::cout << json{{"x", q->x}, {"y", q->y}, {"occurs", occurs}}.dump() << '\n';
        break;
    }
  }
  return failures == 0 ? kExitOk : kExitUsage;
}

// --- pnf -------------------------------------------------------------------

int cmd_pnf(const Config& cfg) {
  if (!cfg.index_path.empty() && !cfg.input.empty()) {
    throw UsageError("pnf takes either --index or --input, not both");
  }
  const CornerIndex index =
      cfg.index_path.empty() ? build_index(read_text(cfg)) : load_index(cfg.index_path);
  PnfPair pnfs = pnf_from_index(index);
  pnfs.pnf_a = in_alphabet(std::move(pnfs.pnf_a), cfg.alphabet);
  pnfs.pnf_b = in_alphabet(std::move(pnfs.pnf_b), cfg.alphabet);
  if (cfg.format == Format::jsonl) {
    std::cout << json{{"pnf_a", pnfs.pnf_a}, {"pnf_b", pnfs.pnf_b}}.dump() << '\n';
  } else {
    std::cout << pnfs.pnf_a << '\n' << pnfs.pnf_b << '\n';
  }
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct CheckTally {
  const char* name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;
};

void verify_one(const std::string& s, std::size_t max_n, std::vector<CheckTally>& tallies) {
  if (s.size() > max_n) {
    throw OracleLimitError("input length " + std::to_string(s.size()) +
                           " exceeds --max-oracle-n " + std::to_string(max_n));
  }
  const CornerIndex index = build_index(s);
  const bool results[] = {
      grid_mismatches(index, oracle::parikh_set_bruteforce(s, max_n)) == 0,
      oracle::verify_interval_lemma(s, max_n),
      oracle::lemma1_witness_check(s, max_n),
      verify_pnf_relations(index, pnf_from_index(index)),
  };
  for (std::size_t i = 0; i < tallies.size(); ++i) {
    if (results[i]) {
      ++tallies[i].passed;
    } else {
      if (tallies[i].failed++ == 0) tallies[i].first_failure = s;
    }
  }
}

int cmd_verify(const Config& cfg) {
  std::vector<CheckTally> tallies{{"oracle-equivalence"},
                                  {"interval-lemma"},
                                  {"run-witnesses"},
                                  {"pnf-relations"}};
  if (cfg.count) {
    if (!cfg.input.empty()) throw UsageError("verify takes either --input or --count");
    Rng rng(cfg.seed);
    for (std::size_t i = 0; i < *cfg.count; ++i) {
      verify_one(make_text(cfg, rng, rng() % (cfg.length + 1)), cfg.max_oracle_n, tallies);
    }
  } else {
    verify_one(read_text(cfg), cfg.max_oracle_n, tallies);
  }

  bool ok = true;
  for (const auto& t : tallies) {
    ok = ok && t.failed == 0;
    const char* verdict = t.failed == 0 ? "PASS" : "FAIL";
    switch (cfg.format) {
      case Format::human:
        std::cout << verdict << ' ' << t.name << " (" << t.passed << '/'
                  << t.passed + t.failed << ")";
        if (t.failed) std::cout << " first failing input: " << t.first_failure;
        std::cout << '\n';
        break;
      case Format::tsv:
        std::cout << t.name << '\t' << verdict << '\t' << t.passed << '\t' << t.failed << '\n';
        break;
      case Format::jsonl:
        std::cout << json{{"check", t.name}, {"pass", t.failed == 0},
                          {"passed", t.passed}, {"failed", t.failed}}.dump()
                  << '\n';
        break;
    }
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

// --- experiment ------------------------------------------------------------

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
}

int cmd_experiment(const Config& cfg) {
  std::vector<std::string> texts;
  if (!cfg.input.empty()) {
    texts.push_back(read_text(cfg));
  } else {
    Rng rng(cfg.seed);
    const std::size_t count = cfg.count.value_or(100);
    for (std::size_t i = 0; i < count; ++i) texts.push_back(make_text(cfg, rng, cfg.length));
  }

  static const char* kColumns[] = {"n", "rho", "l_min", "l_max", "peak_min", "peak_max"};
  if (cfg.format != Format::jsonl) {
    for (std::size_t c = 0; c < 6; ++c) std::cout << (c ? "\t" : "") << kColumns[c];
    std::cout << '\n';
  }

  std::vector<double> lmin_ratio, lmax_ratio, peak_min_ratio, peak_max_ratio;
  for (const auto& s : texts) {
    const RunLengthEncoding rle = encode(s);
    const CornerIndex index = build_index(rle);
    const std::size_t r = rho(rle);
    const std::size_t row[] = {s.size(), r, index.l_min().size(), index.l_max().size(),
                               index.stats().min.peak, index.stats().max.peak};
    if (cfg.format == Format::jsonl) {
      json obj;
      for (std::size_t c = 0; c < 6; ++c) obj[kColumns[c]] = row[c];
      std::cout << obj.dump() << '\n';
    } else {
      for (std::size_t c = 0; c < 6; ++c) std::cout << (c ? "\t" : "") << row[c];
      std::cout << '\n';
    }
    if (r > 0) {
      lmin_ratio.push_back(static_cast<double>(row[2]) / r);
      lmax_ratio.push_back(static_cast<double>(row[3]) / r);
    }
    peak_min_ratio.push_back(static_cast<double>(row[4]) / row[2]);
    peak_max_ratio.push_back(static_cast<double>(row[5]) / row[3]);
  }

  if (!texts.empty()) {
    if (cfg.format == Format::jsonl) {
      std::cout << json{{"summary", "median"},
                        {"l_min_over_rho", median(lmin_ratio)},
                        {"l_max_over_rho", median(lmax_ratio)},
                        {"peak_min_over_l_min", median(peak_min_ratio)},
                        {"peak_max_over_l_max", median(peak_max_ratio)}}
                       .dump()
                << '\n';
    } else {
      std::cout << "# median\tl_min/rho=" << median(lmin_ratio)
                << "\tl_max/rho=" << median(lmax_ratio)
                << "\tpeak_min/l_min=" << median(peak_min_ratio)
                << "\tpeak_max/l_max=" << median(peak_max_ratio) << '\n';
    }
  }
  return kExitOk;
}

// --- bench -----------------------------------------------------------------

double percentile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  const auto rank = static_cast<std::size_t>(p * static_cast<double>(sorted.size() - 1) + 0.5);
  return sorted[rank];
}

int cmd_bench(const Config& cfg) {
  if (cfg.index_path.empty()) throw UsageError("bench needs --index PATH");
  if (cfg.threads < 1) throw UsageError("--threads must be at least 1");
  const CornerIndex index = load_index(cfg.index_path);
  const std::size_t count = cfg.count.value_or(1'000'000);

  Rng rng(cfg.seed);
  std::vector<ParikhVector> queries(count);
  std::uniform_int_distribution<Count> xs(0, index.total_a());
  std::uniform_int_distribution<Count> ys(0, index.total_b());
  for (auto& q : queries) q = {xs(rng), ys(rng)};

  std::vector<double> latency_ns(count);
  std::vector<std::uint8_t> verdicts(count);
  const auto n = static_cast<std::int64_t>(count);
  const auto start = Clock::now();
#pragma omp parallel for schedule(static) num_threads(cfg.threads)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto t0 = Clock::now();
    verdicts[i] = query(index, queries[i]);
    latency_ns[i] = std::chrono::duration<double, std::nano>(Clock::now() - t0).count();
  }
  const double wall_s = std::chrono::duration<double>(Clock::now() - start).count();

  const auto occurs = static_cast<std::size_t>(std::count(verdicts.begin(), verdicts.end(), 1));
  std::sort(latency_ns.begin(), latency_ns.end());
  double mean = 0.0;
  for (double v : latency_ns) mean += v;
  if (count) mean /= static_cast<double>(count);

  Report report;
  report.add("queries", count)
      .add("threads", cfg.threads)
      .add("l_min", index.l_min().size())
      .add("l_max", index.l_max().size())
      .add("occurs", occurs)
      .add("not_occurs", count - occurs)
      .add("mean_ns", mean)
      .add("p50_ns", percentile(latency_ns, 0.50))
      .add("p90_ns", percentile(latency_ns, 0.90))
      .add("p99_ns", percentile(latency_ns, 0.99))
      .add("max_ns", latency_ns.empty() ? 0.0 : latency_ns.back())
      .add("throughput_qps", wall_s > 0 && count ? static_cast<double>(count) / wall_s : 0.0);

  int status = kExitOk;
  if (!cfg.input.empty()) {
    // Re-check a 1% sample of verdicts against the sliding-window oracle.
    const std::string text = read_text(cfg);
    if (text.size() != index.n()) throw UsageError("--input text does not match the index length");
    std::size_t sampled = 0, mismatched = 0;
    for (std::size_t i = 0; i < count; i += 100) {
      ++sampled;
      mismatched += static_cast<bool>(verdicts[i]) != oracle::sliding_window_query(text, queries[i]);
    }
    report.add("oracle_sample", sampled).add("oracle_mismatches", mismatched);
    if (mismatched) status = kExitVerifyFailed;
  }
  report.print(cfg.format, std::cout);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corner index for binary jumbled pattern matching"};
  app.require_subcommand(1);
  Config cfg;

  const std::map<std::string, Alphabet> alphabets{{"ab", Alphabet::ab}, {"01", Alphabet::zero_one}};
  const std::map<std::string, Format> formats{
      {"human", Format::human}, {"tsv", Format::tsv}, {"jsonl", Format::jsonl}};
  app.add_option("--alphabet", cfg.alphabet, "Letter mapping of text input")
      ->transform(CLI::CheckedTransformer(alphabets));
  app.add_option("--input", cfg.input, "Text (or query) file; '-' for stdin");
  app.add_option("--index", cfg.index_path, "Index file path");
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats));
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--count", cfg.count, "Number of strings or queries");
  app.add_option("--length", cfg.length, "Generated string length")->check(CLI::PositiveNumber);
  app.add_option("--run-geometric", cfg.run_geometric,
                 "Generate geometric run lengths with parameter P instead of fair coins")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--threads", cfg.threads, "Query threads for bench");
  app.add_option("--max-oracle-n", cfg.max_oracle_n, "Length bound for brute-force checks");

  int (*handler)(const Config&) = nullptr;
  auto add = [&](const char* name, const char* help, int (*fn)(const Config&)) {
    app.add_subcommand(name, help)->fallthrough()->callback([&handler, fn] { handler = fn; });
  };
  add("build", "Build and persist an index from text", cmd_build);
  add("query", "Answer 'x y' queries against an index", cmd_query);
  add("pnf", "Print both prefix normal forms", cmd_pnf);
  add("verify", "Cross-check the index against brute-force oracles", cmd_verify);
  add("experiment", "Report index size against rho on random strings", cmd_experiment);
  add("bench", "Measure query latency and throughput", cmd_bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return handler(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

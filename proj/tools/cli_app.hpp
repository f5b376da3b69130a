#pragma once

// Command-line front end.  run() takes the arguments without the program name
// so tests can drive it in-process.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "graykit/graykit.hpp"

namespace graykit::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kUnsupported = 3 };

constexpr std::size_t kMutationBound = 64;

namespace detail {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Buffered newline-delimited writer.
class LineWriter {
 public:
  explicit LineWriter(std::ostream& out) : out_(out) { buf_.reserve(1 << 16); }
  ~LineWriter() { flush(); }
  void line(std::string_view s) {
    buf_.append(s);
    buf_.push_back('\n');
    if (buf_.size() >= (1 << 16)) flush();
  }
  void line(int v) { line(std::to_string(v)); }
  void flush() {
    out_.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
    buf_.clear();
  }

 private:
  std::ostream& out_;
  std::string buf_;
};

inline int threads_from_env() {
  const char* raw = std::getenv("GRAYKIT_THREADS");
  if (!raw || !*raw) return 1;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) throw UsageError("GRAYKIT_THREADS must be a positive integer");
  return static_cast<int>(v);
}

inline void require_range(const char* what, int v, int lo, int hi) {
  if (v < lo || v > hi)
    throw UsageError(std::string(what) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

inline void require_middle_params(int n, int ell, int max_n) {
  if (n % 2 == 0) throw UsageError("n must be odd");
  require_range("n", n, 3, max_n);
  require_range("l", ell, 1, (n + 1) / 2);
}

inline void print_sequence(LineWriter& w, const std::vector<Bitstring>& seq, const std::string& format) {
  if (format == "bits") {
    for (const auto& x : seq) w.line(x.str());
  } else {
    for (std::size_t k = 0; k < seq.size(); ++k) w.line(flipped_position(seq[k], seq[(k + 1) % seq.size()]));
  }
}

inline std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

struct Params {
  int n = -1;
  int ell = -1;
  std::string vertex;
  bool stats = false;
  std::string format;
  std::string algorithm = "loopless";
  std::string source = "chains";
  std::string mode;
  std::optional<long long> limit;
};

inline int cmd_scd(const Params& p, std::ostream& out) {
  LineWriter w(out);
  if (!p.vertex.empty()) {
    Bitstring x;
    try {
      x = Bitstring::from_string(p.vertex);
    } catch (const std::exception&) {
      throw UsageError("vertex must be a 0/1 string");
    }
    require_range("vertex length", x.size(), 1, 24);
    if (p.n != -1 && p.n != x.size()) throw UsageError("vertex length differs from n");
    w.line(chain_of(x).str());
    return kOk;
  }
  if (p.n == -1) throw UsageError("scd needs --n or --vertex");
  require_range("n", p.n, 1, 24);
  for (const auto& c : enumerate_chains(p.n)) w.line(c.str());
  return kOk;
}

inline int cmd_factor(const Params& p, std::ostream& out, std::ostream& err) {
  require_middle_params(p.n, p.ell, 17);
  if (p.ell == 1) {
    err << "error: l = 1 is unsupported (prior work)\n";
    return kUnsupported;
  }
  const CycleFactor factor = build_factor(p.n, p.ell);
  LineWriter w(out);
  if (p.stats) {
    const FactorStats s = factor_stats(factor);
    std::map<int, std::size_t> by_range;
    for (const auto& c : factor.cycles()) ++by_range[c.range];
    std::string ranges;
    for (const auto& [r, k] : by_range) ranges += (ranges.empty() ? "" : ",") + std::to_string(r) + ":" + std::to_string(k);
    const auto top = s.short_by_range.find(2 * p.ell - 2);
    w.line("n\tl\ttotal\tshort_top\tlong\tranges");
    w.line(std::to_string(p.n) + "\t" + std::to_string(p.ell) + "\t" + std::to_string(s.total) + "\t" +
           std::to_string(top == s.short_by_range.end() ? 0 : top->second) + "\t" + std::to_string(s.long_count) + "\t" +
           ranges);
    return kOk;
  }
  bool first = true;
  for (const auto& c : factor.cycles()) {
    if (!first) w.line("");
    first = false;
    for (const auto& x : c.vertices) w.line(x.str());
  }
  return kOk;
}

inline int cmd_hamilton(const Params& p, std::ostream& out, std::ostream& err) {
  require_middle_params(p.n, p.ell, 15);
  if (p.ell == 1) {
    err << "error: l = 1 is unsupported (prior work)\n";
    return kUnsupported;
  }
  const HamiltonBuild b = build_hamilton(p.n, p.ell);
  const HamiltonReport report = verify_hamilton(b.cycle, p.n, p.ell);
  if (!report.ok) {
    err << "error: self-verification failed: " << report.message << "\n";
    return kVerifyFailed;
  }
  LineWriter w(out);
  if (p.format == "stats") {
    w.line("n\tl\tvertices\tfactor_cycles\tshort\tlong\tflip4\tflip6");
    w.line(std::to_string(p.n) + "\t" + std::to_string(p.ell) + "\t" + std::to_string(b.cycle.size()) + "\t" +
           std::to_string(b.factor_cycles) + "\t" + std::to_string(b.short_cycles) + "\t" +
           std::to_string(b.long_cycles) + "\t" + std::to_string(b.flip4) + "\t" + std::to_string(b.flip6));
    return kOk;
  }
  print_sequence(w, b.cycle, p.format);
  return kOk;
}

inline int cmd_chain_gray(const Params& p, std::ostream& out) {
  if (p.algorithm == "recursive")
    require_range("n", p.n, 2, 24);
  else
    require_range("n", p.n, 2, 30);
  if (p.limit && *p.limit < 0) throw UsageError("limit must be non-negative");
  const long long limit = p.limit.value_or(-1);
  LineWriter w(out);
  long long emitted = 0;
  if (p.algorithm == "recursive") {
    for (const auto& c : lambda_recursive(p.n)) {
      if (emitted++ == limit) break;
      w.line(c.str());
    }
    return kOk;
  }
  ChainGenerator gen(p.n);
  while (emitted != limit) {
    const auto c = gen.next();
    if (!c) break;
    w.line(*c);
    ++emitted;
  }
  return kOk;
}

inline int cmd_cube_gray(const Params& p, std::ostream& out, std::ostream& err) {
  require_range("n", p.n, 2, 20);
  const std::vector<Bitstring> seq = p.source == "brgc" ? brgc(p.n) : expand_to_hamilton(p.n);
  const CheckReport report = verify_cube_cycle(seq, p.n);
  if (!report.ok) {
    err << "error: self-verification failed: " << report.message << "\n";
    return kVerifyFailed;
  }
  LineWriter w(out);
  print_sequence(w, seq, p.format);
  return kOk;
}

inline int cmd_verify(const Params& p, std::ostream& out, std::ostream& err, std::istream& in) {
  const auto lines = read_lines(in);
  auto failed = [&](const std::string& msg) {
    err << "FAIL: " << msg << "\n";
    return kVerifyFailed;
  };
  if (p.mode == "hamilton") {
    if (p.ell != -1) {
      require_middle_params(p.n, p.ell, 23);
    } else {
      require_range("n", p.n, 1, 24);
    }
    std::vector<Bitstring> seq;
    seq.reserve(lines.size());
    for (std::size_t k = 0; k < lines.size(); ++k) {
      try {
        seq.push_back(Bitstring::from_string(lines[k]));
      } catch (const std::exception&) {
        return failed("line " + std::to_string(k + 1) + ": not a bitstring: " + lines[k]);
      }
    }
    const auto r = p.ell != -1 ? verify_hamilton(seq, p.n, p.ell) : [&] {
      const auto c = verify_cube_cycle(seq, p.n);
      return HamiltonReport{c.ok, c.message};
    }();
    if (!r.ok) return failed(r.message);
  } else {
    require_range("n", p.n, p.mode == "gray3" ? 2 : 1, 24);
    std::vector<Chain> chains;
    chains.reserve(lines.size());
    for (std::size_t k = 0; k < lines.size(); ++k) {
      try {
        chains.push_back(Chain::from_string(lines[k]));
      } catch (const std::exception& e) {
        return failed("line " + std::to_string(k + 1) + ": " + e.what());
      }
    }
    const CheckReport r = p.mode == "gray3" ? verify_gray3(chains, p.n) : verify_scd_partition(chains, p.n);
    if (!r.ok) return failed(r.message);
  }
  out << "OK " << lines.size() << "\n";
  return kOk;
}

inline int cmd_bench(const Params& p, std::ostream& out, std::ostream& err, int threads) {
  require_range("n", p.n, 1, 30);
  const auto start = std::chrono::steady_clock::now();
  ChainGenerator gen(p.n);
  std::size_t visits = 0;
  std::size_t max_cost = 0;
  std::size_t total_cost = 0;
  while (gen.next()) {
    ++visits;
    max_cost = std::max(max_cost, gen.last_cost());
    total_cost += gen.last_cost();
  }
  max_cost = std::max(max_cost, gen.last_cost());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream row;
  row.setf(std::ios::fixed);
  row.precision(6);
  row << p.n << '\t' << visits << '\t' << max_cost << '\t' << static_cast<double>(total_cost) / static_cast<double>(visits)
      << '\t' << seconds << '\t' << (seconds > 0 ? static_cast<double>(visits) / seconds : 0.0) << '\t' << threads;
  LineWriter w(out);
  w.line("n\tvisits\tmax_mutations\tmean_mutations\tseconds\tvisits_per_second\tthreads");
  w.line(row.str());
  w.flush();
  if (max_cost > kMutationBound) {
    err << "error: " << max_cost << " mutations in one step exceeds the bound " << kMutationBound << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  using detail::Params;
  Params p;
  CLI::App app{"Gray codes through the middle levels and the Greene-Kleitman chains of the hypercube", "graykit"};
  app.require_subcommand(1);

  auto* scd = app.add_subcommand("scd", "Greene-Kleitman chains of Q_n, or the chain of one vertex");
  scd->add_option("--n", p.n, "dimension");
  scd->add_option("--vertex", p.vertex, "0/1 string");

  auto* factor = app.add_subcommand("factor", "cycle factor of the middle 2l levels");
  factor->add_option("--n", p.n, "odd dimension")->required();
  factor->add_option("--l", p.ell, "number of level pairs")->required();
  factor->add_flag("--stats", p.stats, "print cycle counts instead of cycles");

  auto* ham = app.add_subcommand("hamilton", "Hamilton cycle through the middle 2l levels");
  ham->add_option("--n", p.n, "odd dimension")->required();
  ham->add_option("--l", p.ell, "number of level pairs")->required();
  ham->add_option("--format", p.format, "bits | transitions | stats")
      ->check(CLI::IsMember({"bits", "transitions", "stats"}))
      ->default_val("bits");

  auto* cg = app.add_subcommand("chain-gray", "cyclic 3-Gray ordering of the Greene-Kleitman chains");
  cg->add_option("--n", p.n, "dimension")->required();
  cg->add_option("--algorithm", p.algorithm, "loopless | recursive")
      ->check(CLI::IsMember({"loopless", "recursive"}))
      ->default_val("loopless");
  cg->add_option("--limit", p.limit, "stop after this many chains");
  cg->add_option("--format", p.format, "chains")->check(CLI::IsMember({"chains"}))->default_val("chains");

  auto* cube = app.add_subcommand("cube-gray", "Hamilton cycle of Q_n");
  cube->add_option("--n", p.n, "dimension")->required();
  cube->add_option("--source", p.source, "chains | brgc")->check(CLI::IsMember({"chains", "brgc"}))->default_val("chains");
  cube->add_option("--format", p.format, "bits | transitions")
      ->check(CLI::IsMember({"bits", "transitions"}))
      ->default_val("bits");

  auto* ver = app.add_subcommand("verify", "check a listing read from stdin");
  ver->add_option("--mode", p.mode, "hamilton | gray3 | scd-partition")
      ->check(CLI::IsMember({"hamilton", "gray3", "scd-partition"}))
      ->required();
  ver->add_option("--n", p.n, "dimension")->required();
  ver->add_option("--l", p.ell, "middle levels (hamilton mode); omit for the full cube");

  auto* bench = app.add_subcommand("bench", "mutation counts and throughput of the loopless generator");
  bench->add_option("--n", p.n, "dimension")->required();

  std::vector<std::string> argv_store{"graykit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const int threads = detail::threads_from_env();
    if (scd->parsed()) return detail::cmd_scd(p, out);
    if (factor->parsed()) return detail::cmd_factor(p, out, err);
    if (ham->parsed()) return detail::cmd_hamilton(p, out, err);
    if (cg->parsed()) return detail::cmd_chain_gray(p, out);
    if (cube->parsed()) return detail::cmd_cube_gray(p, out, err);
    if (ver->parsed()) return detail::cmd_verify(p, out, err, in);
    if (bench->parsed()) return detail::cmd_bench(p, out, err, threads);
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace graykit::cli

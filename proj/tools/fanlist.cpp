// fanlist: pivot Gray code listing, ranking, and unranking of the spanning
// trees of the fan graph F_n.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fan/fan.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kVerifyFailed = 1;
constexpr int kGreedyWarnN = 14;

enum class Engine { Recursive, Greedy };
enum class Format { Trees, Moves, Both };

// Buffered stdout; one fwrite per 64 KiB.
class LineWriter {
 public:
  ~LineWriter() { flush(); }
  void line(const std::string& s) {
    buf_ += s;
    buf_ += '\n';
    if (buf_.size() >= (1u << 16)) flush();
  }
  void flush() {
    std::fwrite(buf_.data(), 1, buf_.size(), stdout);
    std::fflush(stdout);
    buf_.clear();
  }

 private:
  std::string buf_;
};

struct Options {
  int n = 0;
  Engine engine = Engine::Recursive;
  bool reverse = false;
  Format format = Format::Trees;
  std::optional<std::size_t> limit;
  std::string tree;
  std::string rank;
};

void check_n(int n) { fan::require_n(n); }

int cmd_gen(const Options& o) {
  check_n(o.n);
  if (o.engine == Engine::Greedy && o.n > kGreedyWarnN)
    std::cerr << "warning: greedy engine keeps every visited tree in memory; n=" << o.n << " needs O(t_n * n) space\n";
  LineWriter out;
  std::size_t count = 0;
  auto sink = [&](const fan::SpanningTree& t, std::optional<fan::EdgeMove> m) {
    ++count;
    if (m && o.format != Format::Trees) out.line(m->to_string());
    if (o.format != Format::Moves) out.line(fan::serialize_tree(t));
    return !o.limit || count < *o.limit;
  };
  if (o.limit && *o.limit == 0) return 0;
  if (o.engine == Engine::Recursive) {
    fan::generate(o.n, sink, o.reverse);
  } else {
    const auto start = o.reverse ? fan::last_tree(o.n) : fan::path_tree(o.n);
    fan::greedy_stream(start, [&](const fan::SpanningTree& t, std::optional<fan::EdgeMove> m) { sink(t, m); }, o.limit);
  }
  return 0;
}

int cmd_rank(const Options& o) {
  check_n(o.n);
  const auto t = fan::parse_tree(o.n, o.tree);
  std::cout << fan::rank(o.n, t) << '\n';
  return 0;
}

fan::BigInt parse_rank(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw fan::Error(fan::ErrorCode::RankOutOfRange, "rank '" + s + "' is not a non-negative integer");
  return fan::BigInt(s);
}

int cmd_unrank(const Options& o) {
  check_n(o.n);
  std::cout << fan::serialize_tree(fan::unrank(o.n, parse_rank(o.rank))) << '\n';
  return 0;
}

int cmd_count(const Options& o) {
  check_n(o.n);
  std::cout << fan::tree_count(o.n) << '\n';
  return 0;
}

std::vector<fan::SpanningTree> listing_for(const Options& o) {
  if (o.engine == Engine::Greedy) return fan::greedy_listing(o.reverse ? fan::last_tree(o.n) : fan::path_tree(o.n));
  return o.reverse ? fan::rev_list(o.n) : fan::list(o.n);
}

int cmd_verify(const Options& o) {
  check_n(o.n);
  if (o.n > fan::oracle::kMaxOracleN)
    throw fan::Error(fan::ErrorCode::OracleRangeExceeded,
                     "verify supports n <= " + std::to_string(fan::oracle::kMaxOracleN));
  const auto rep = fan::oracle::verify_listing(o.n, listing_for(o));
  auto b = [](bool x) { return x ? "true" : "false"; };
  std::cout << "n=" << rep.n << " trees=" << rep.tree_total << " distinct=" << b(rep.distinct)
            << " exhaustive=" << b(rep.exhaustive) << " pivot_ok=" << b(rep.pivot_ok) << '\n';
  if (rep.first_violation)
    std::cout << "first_violation index=" << rep.first_violation->index << " " << rep.first_violation->description << '\n';
  return rep.ok() ? 0 : kVerifyFailed;
}

int cmd_bench(const Options& o) {
  check_n(o.n);
  if (o.engine == Engine::Greedy && o.n > kGreedyWarnN)
    std::cerr << "warning: greedy engine keeps every visited tree in memory; n=" << o.n << " needs O(t_n * n) space\n";
  std::uint64_t trees = 0;
  const auto t0 = std::chrono::steady_clock::now();
  auto sink = [&](const fan::SpanningTree&, std::optional<fan::EdgeMove>) { ++trees; };
  if (o.engine == Engine::Recursive)
    fan::generate(o.n, sink, o.reverse);
  else
    fan::greedy_stream(o.reverse ? fan::last_tree(o.n) : fan::path_tree(o.n), sink);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "trees=" << trees << " seconds=" << secs << " trees_per_second=" << (secs > 0 ? trees / secs : 0.0) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning trees of the fan graph F_n as a pivot Gray code"};
  app.require_subcommand(1);
  Options o;

  const std::map<std::string, Engine> engines{{"recursive", Engine::Recursive}, {"greedy", Engine::Greedy}};
  const std::map<std::string, Format> formats{{"trees", Format::Trees}, {"moves", Format::Moves}, {"both", Format::Both}};

  auto* gen = app.add_subcommand("gen", "stream LIST(n), one line per tree or move");
  gen->add_option("n", o.n, "number of vertices including the hub")->required();
  gen->add_option("--engine", o.engine, "recursive or greedy")->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
  gen->add_flag("--reverse", o.reverse, "list in reverse order, starting at the last tree");
  gen->add_option("--format", o.format, "trees, moves, or both")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  gen->add_option("--limit", o.limit, "stop after this many trees");

  auto* rank = app.add_subcommand("rank", "1-based position of a tree in LIST(n)");
  rank->add_option("n", o.n)->required();
  rank->add_option("--tree", o.tree, "edges as lo,hi;lo,hi;... with the hub written inf")->required();

  auto* unrank = app.add_subcommand("unrank", "tree at a 1-based position of LIST(n)");
  unrank->add_option("n", o.n)->required();
  unrank->add_option("r", o.rank, "rank in [1, t_n]")->required();

  auto* count = app.add_subcommand("count", "number of spanning trees t_n");
  count->add_option("n", o.n)->required();

  auto* verify = app.add_subcommand("verify", "check a listing against brute-force enumeration (n <= 14)");
  verify->add_option("n", o.n)->required();
  verify->add_option("--engine", o.engine)->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
  verify->add_flag("--reverse", o.reverse);

  auto* bench = app.add_subcommand("bench", "time generation into a null sink");
  bench->add_option("n", o.n)->required();
  bench->add_option("--engine", o.engine)->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
  bench->add_flag("--reverse", o.reverse);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*rank) return cmd_rank(o);
    if (*unrank) return cmd_unrank(o);
    if (*count) return cmd_count(o);
    if (*verify) return cmd_verify(o);
    if (*bench) return cmd_bench(o);
  } catch (const fan::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

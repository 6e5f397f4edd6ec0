#include <algorithm>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

struct Run {
  std::string out;
  int status = -1;
};

Run fanlist(const std::string& args) {
  Run r;
  const std::string cmd = std::string(FANLIST_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string last_line(const std::string& s) {
  const auto end = s.find_last_not_of('\n');
  const auto start = s.rfind('\n', end);
  return s.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST(Cli, GenFormats) {
  EXPECT_EQ(fanlist("gen 2").out, "2,inf\n");
  EXPECT_EQ(lines(fanlist("gen 3 --format trees").out), 3u);
  EXPECT_EQ(lines(fanlist("gen 5 --format moves").out), 20u);
  EXPECT_EQ(lines(fanlist("gen 5 --format both").out), 41u);
  EXPECT_EQ(lines(fanlist("gen 8 --limit 10").out), 10u);
}

TEST(Cli, EnginesAgree) {
  for (int n = 2; n <= 10; ++n) {
    const auto n_s = std::to_string(n);
    for (const std::string dir : {"", " --reverse"}) {
      const auto rec = fanlist("gen " + n_s + dir + " --format both");
      const auto gre = fanlist("gen " + n_s + dir + " --format both --engine greedy");
      EXPECT_EQ(rec.status, 0);
      EXPECT_EQ(rec.out, gre.out) << n << dir;
    }
  }
}

TEST(Cli, LastTreeHasTopRank) {
  for (int n = 2; n <= 12; ++n) {
    const auto n_s = std::to_string(n);
    const auto count = last_line(fanlist("count " + n_s).out);
    EXPECT_EQ(last_line(fanlist("gen " + n_s).out), last_line(fanlist("unrank " + n_s + " " + count).out)) << n;
  }
}

TEST(Cli, RankUnrankCount) {
  EXPECT_EQ(fanlist("rank 7 --tree \"2,3;3,4;4,5;5,inf;6,7;6,inf\"").out, "24\n");
  EXPECT_EQ(fanlist("unrank 7 24").out, "2,3;3,4;4,5;5,inf;6,7;6,inf\n");
  EXPECT_EQ(fanlist("count 6").out, "55\n");
  EXPECT_EQ(fanlist("count 20").out, "39088169\n");
}

TEST(Cli, Verify) {
  const auto r = fanlist("verify 8");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "n=8 trees=377 distinct=true exhaustive=true pivot_ok=true\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(fanlist("").status, 2);
  EXPECT_EQ(fanlist("gen").status, 2);
  EXPECT_EQ(fanlist("gen 1").status, 2);
  EXPECT_EQ(fanlist("gen 5 --format nope").status, 2);
  EXPECT_EQ(fanlist("unrank 6 0").status, 2);
  EXPECT_EQ(fanlist("unrank 6 56").status, 2);
  EXPECT_EQ(fanlist("rank 5 --tree \"2,3;3,4\"").status, 2);
  EXPECT_EQ(fanlist("rank 5 --tree \"2,4;3,4;4,5;5,inf\"").status, 2);
  EXPECT_EQ(fanlist("verify 15").status, 2);
}

}  // namespace

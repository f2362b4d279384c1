#include <doctest.h>

#include <random>

#include "lefkappa/dataset.hpp"
#include "lefkappa/enumerate.hpp"
#include "lefkappa/error.hpp"
#include "lefkappa/report.hpp"

using namespace lefkappa;

namespace {

std::int64_t count_vanishing(const FibrationData& d) {
  std::int64_t n = d.nonseparating;
  for (auto s : d.separating) n += s;
  return n;
}

// Counts (a, s_1..s_m) with a + sum <= n by direct recursion.
std::uint64_t brute_count(std::size_t slots, std::int64_t budget) {
  if (slots == 0) return 1;
  std::uint64_t total = 0;
  for (std::int64_t v = 0; v <= budget; ++v) total += brute_count(slots - 1, budget - v);
  return total;
}

}  // namespace

TEST_CASE("genus 2, n <= 3") {
  auto report = enumerate_hyperelliptic(2, 2, 3);
  CHECK(report.ok());
  CHECK(report.visited == 10);
  std::vector<EnumeratedRecord> positive;
  std::size_t empty = 0;
  for (const auto& r : report.records) {
    if (count_vanishing(r.data) == 0)
      ++empty;
    else
      positive.push_back(r);
  }
  CHECK(empty == 1);
  CHECK(report.admissible_count == 1 + empty);
  REQUIRE(positive.size() == 1);
  CHECK(positive[0].data.nonseparating == 1);
  CHECK(positive[0].data.separating == std::vector<std::int64_t>{2});
  CHECK(positive[0].sigma == -1);
  CHECK(positive[0].k_squared == 3);
  CHECK(positive[0].verdict.dim == KodairaDim::two());
}

TEST_CASE("genus 2, n <= 2 has only the empty datum") {
  auto report = enumerate_hyperelliptic(2, 2, 2);
  CHECK(report.ok());
  REQUIRE(report.records.size() == 1);
  CHECK(count_vanishing(report.records[0].data) == 0);
}

TEST_CASE("genus 3, n = 0") {
  auto report = enumerate_hyperelliptic(3, 3, 0);
  CHECK(report.ok());
  CHECK(report.visited == 1);
  REQUIRE(report.records.size() == 1);
  CHECK(report.records[0].data.separating == std::vector<std::int64_t>{0});
  CHECK(report.records[0].sigma == 0);
}

TEST_CASE("records are in lexicographic (g, a, s) order") {
  auto report = enumerate_hyperelliptic(2, 6, 10, {kDefaultCandidateLimit, 3});
  CHECK(report.ok());
  for (std::size_t i = 1; i < report.records.size(); ++i) {
    const auto& p = report.records[i - 1].data;
    const auto& q = report.records[i].data;
    const auto key = [](const FibrationData& d) {
      std::vector<std::int64_t> k{d.g, d.nonseparating};
      k.insert(k.end(), d.separating.begin(), d.separating.end());
      return k;
    };
    CHECK(key(p) < key(q));
  }
}

TEST_CASE("candidate count matches direct counting") {
  for (std::int64_t g = 0; g <= 9; ++g)
    for (std::int64_t n = 0; n <= 8; ++n) {
      CAPTURE(g);
      CAPTURE(n);
      CHECK(candidate_count(g, n) == brute_count(static_cast<std::size_t>(1 + g / 2), n));
    }
  CHECK(candidate_count(EnumerationParams{2, 4, 3}) ==
        candidate_count(2, 3) + candidate_count(3, 3) + candidate_count(4, 3));
  CHECK(enumerate_hyperelliptic(2, 5, 6).visited == candidate_count(EnumerationParams{2, 5, 6}));
}

TEST_CASE("worker count does not change the report") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 8; ++trial) {
    const std::int64_t g_min = 2 + static_cast<std::int64_t>(rng() % 3);
    const std::int64_t g_max = g_min + static_cast<std::int64_t>(rng() % 3);
    const std::int64_t n_max = static_cast<std::int64_t>(rng() % 9);
    const auto one = enumerate_hyperelliptic(g_min, g_max, n_max, {kDefaultCandidateLimit, 1});
    const auto many = enumerate_hyperelliptic(g_min, g_max, n_max,
                                              {kDefaultCandidateLimit, 1 + unsigned(rng() % 7)});
    CHECK(one == many);
    CHECK(emit_report(one, OutputFormat::Json) == emit_report(many, OutputFormat::Json));
  }
}

TEST_CASE("resource guard and argument checks") {
  try {
    enumerate_hyperelliptic(2, 7, 15, {100, 1});
    FAIL("expected ResourceLimit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ResourceLimit);
    CHECK(std::string(e.what()).find(std::to_string(candidate_count(EnumerationParams{2, 7, 15}))) !=
          std::string::npos);
  }
  CHECK_THROWS_AS(enumerate_hyperelliptic(1, 3, 2), Error);
  CHECK_THROWS_AS(enumerate_hyperelliptic(4, 3, 2), Error);
  CHECK_THROWS_AS(enumerate_hyperelliptic(2, 3, -1), Error);
}

TEST_CASE("same id, same Kodaira dimension") {
  auto parsed = parse_dataset(
      "fibration id=X g=2 h=1 a=5\n"
      "pencil id=X k=3 A=1 B=14 chi=5 sigma=-1\n");
  REQUIRE(parsed.ok());
  auto report = verify_dataset(parsed.records, ConventionMode::EulerConsistent);
  CHECK(report.ok());
  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[0].kappa == KodairaDim::two());
  CHECK(report.rows[1].kappa == KodairaDim::two());
}

TEST_CASE("different Kodaira dimensions under one id are reported") {
  auto parsed = parse_dataset("triple id=Y g=1 h=1 n=0\ntriple id=Y g=1 h=1 n=4\n");
  REQUIRE(parsed.ok());
  auto report = verify_dataset(parsed.records, ConventionMode::EulerConsistent);
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0].find("cross-presentation mismatch") != std::string::npos);
  CHECK(report.rows.size() == 2);
}

TEST_CASE("empty dataset") {
  auto report = verify_dataset({}, ConventionMode::EulerConsistent);
  CHECK(report.ok());
  CHECK(report.rows.empty());
  CHECK(report.records.empty());
}

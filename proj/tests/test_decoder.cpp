#include <algorithm>
#include <random>
#include <set>

#include "cdpic/decoder.hpp"
#include "cdpic/schemes.hpp"
#include "doctest.h"
#include "golden_tables.hpp"

using namespace cdpic;

namespace {

std::vector<Transmission> random_schedule(std::mt19937& rng, const ProblemInstance& p,
                                          int count) {
  std::vector<Transmission> txs;
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<int> client_pick(0, p.c - 1);
    const int client = client_pick(rng);
    const auto window = side_info(p, client);
    std::uniform_int_distribution<unsigned> subset_pick(1, (1u << p.k) - 1);
    const unsigned subset = subset_pick(rng);
    std::vector<int> payload;
    for (int t = 0; t < p.k; ++t)
      if (subset & (1u << t)) payload.push_back(window[t]);
    txs.push_back(make_transmission(client, std::move(payload)));
  }
  return txs;
}

}  // namespace

TEST_CASE("one-unknown decode rule") {
  const std::vector<int> knowledge = {2, 3, 4, 5, 6, 7, 8};
  CHECK(decode_symbol(knowledge, std::vector<int>{1, 7}) == 1);
  const std::vector<int> all_known = {1, 2, 3, 4, 5, 6, 7};
  CHECK(!decode_symbol(all_known, std::vector<int>{1, 7}).has_value());
  const std::vector<int> far = {8, 9, 10, 11, 12, 13, 14};
  CHECK(!decode_symbol(far, std::vector<int>{1, 7}).has_value());
  CHECK(decode_symbol(std::vector<int>{}, std::vector<int>{1}) == 1);
}

TEST_CASE("one-unknown rule exhaustively for small message counts") {
  for (int m = 2; m <= 8; ++m) {
    for (unsigned know = 0; know < (1u << m); ++know) {
      std::vector<int> knowledge;
      for (int v = 0; v < m; ++v)
        if (know & (1u << v)) knowledge.push_back(v);
      for (unsigned pay = 1; pay < (1u << m); ++pay) {
        std::vector<int> payload;
        int unknowns = 0, unknown = -1;
        for (int v = 0; v < m; ++v)
          if (pay & (1u << v)) {
            payload.push_back(v);
            if (!(know & (1u << v))) {
              ++unknowns;
              unknown = v;
            }
          }
        auto decoded = decode_symbol(knowledge, payload);
        if (unknowns == 1) {
          REQUIRE(decoded.has_value());
          REQUIRE(*decoded == unknown);
        } else {
          REQUIRE(!decoded.has_value());
        }
      }
    }
  }
}

TEST_CASE("static decode of the uncoded fixture") {
  auto p = make_instance(12, 12, 3, 3);
  std::vector<Transmission> txs = {
      make_transmission(0, {1}), make_transmission(3, {4}),
      make_transmission(6, {7}), make_transmission(9, {10})};
  auto report = run_schedule(p, txs, DecodeMode::Static);
  CHECK(report.satisfied);
  CHECK(report.cells == golden::example1_cells);
  for (const auto& decoded : report.per_client_decoded) CHECK(decoded.size() == 3);
  CHECK(report.total_served() == 36);  // = C * S here
  CHECK(report.served_counts == std::vector<int>{9, 9, 9, 9});
}

TEST_CASE("static decode of the multi-XOR fixture") {
  auto p = make_instance(10, 10, 7, 3);
  auto sched = construct(p);
  auto report = run_schedule(p, sched.transmissions, DecodeMode::Static);
  CHECK(report.satisfied);
  CHECK(report.cells == golden::example6_cells);
  for (const auto& decoded : report.per_client_decoded) CHECK(decoded.size() == 3);
}

TEST_CASE("pair fixtures decode to their expected cells") {
  auto one = make_instance(16, 16, 7, 1);
  auto report1 =
      run_schedule(one, construct(one).transmissions, DecodeMode::Static);
  CHECK(report1.cells == golden::example3_cells);
  CHECK(report1.satisfied);

  auto two = make_instance(16, 16, 7, 2);
  auto report2 =
      run_schedule(two, construct(two).transmissions, DecodeMode::Static);
  CHECK(report2.cells == golden::example4_cells);
  CHECK(report2.satisfied);
  CHECK(report2.min_decoded() == 2);
}

TEST_CASE("empty schedule satisfies zero demand") {
  auto p = make_instance(10, 10, 6, 0);
  auto report = run_schedule(p, std::vector<Transmission>{}, DecodeMode::Static);
  CHECK(report.satisfied);
  CHECK(report.n_used == 0);
  for (const auto& decoded : report.per_client_decoded) CHECK(decoded.empty());
}

TEST_CASE("constraint violation carries the offending index") {
  auto p = make_instance(12, 12, 3, 3);
  std::vector<Transmission> txs = {make_transmission(0, {1}),
                                   make_transmission(3, {9})};
  try {
    run_schedule(p, txs, DecodeMode::Static);
    FAIL("expected a constraint violation");
  } catch (const ConstraintViolation& e) {
    CHECK(e.transmission_index == 1);
  }
}

TEST_CASE("progressive decoding replays what static cannot chain") {
  auto p = make_instance(4, 4, 2, 2);
  std::vector<Transmission> txs = {make_transmission(0, {1, 2}),
                                   make_transmission(3, {0, 1}),
                                   make_transmission(2, {0, 3})};
  auto fixed = run_schedule(p, txs, DecodeMode::Static);
  auto grown = run_schedule(p, txs, DecodeMode::Progressive);
  CHECK(!fixed.satisfied);
  CHECK(grown.satisfied);
}

TEST_CASE("random schedules: mode monotonicity and counting identities") {
  std::mt19937 rng(20240811);
  for (int round = 0; round < 300; ++round) {
    std::uniform_int_distribution<int> m_pick(4, 12);
    const int m = m_pick(rng);
    std::uniform_int_distribution<int> k_pick(1, m - 1);
    const int k = k_pick(rng);
    auto p = make_instance(m, m, k, std::min(1, m - k));
    std::uniform_int_distribution<int> n_pick(1, 6);
    auto txs = random_schedule(rng, p, n_pick(rng));

    auto fixed = run_schedule(p, txs, DecodeMode::Static);
    auto grown = run_schedule(p, txs, DecodeMode::Progressive);
    long long fixed_total = 0;
    for (int client = 0; client < m; ++client) {
      const auto& a = fixed.per_client_decoded[client];
      const auto& b = grown.per_client_decoded[client];
      CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
      fixed_total += static_cast<long long>(a.size());
      // decoded messages never overlap side information
      for (int msg : a) CHECK(!holds_message(p, client, msg));
      // a transmitter never decodes from its own broadcast
      for (size_t i = 0; i < txs.size(); ++i)
        if (txs[i].transmitter == client)
          CHECK(fixed.cells[client][i] == DecodingReport::kNoDecode);
    }
    CHECK(fixed.total_served() == fixed_total);
  }
}

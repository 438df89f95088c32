#include <set>

#include "cdpic/core.hpp"
#include "doctest.h"

using namespace cdpic;

TEST_CASE("instance bounds") {
  CHECK_THROWS_AS(make_instance(1, 4, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_instance(4, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_instance(4, 4, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_instance(4, 4, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_instance(4, 4, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_instance(4, 4, 1, -1), std::invalid_argument);
  CHECK_NOTHROW(make_instance(4, 4, 1, 3));
}

TEST_CASE("side info windows") {
  auto p = make_instance(12, 12, 3, 3);
  CHECK(side_info(p, 0) == std::vector<int>{1, 2, 3});
  CHECK(side_info(p, 9) == std::vector<int>{10, 11, 0});

  auto q = make_instance(16, 16, 7, 1);
  CHECK(side_info(q, 15) == std::vector<int>{0, 1, 2, 3, 4, 5, 6});

  auto plain = make_instance(12, 12, 3, 3, Convention::PlainWindow);
  CHECK(side_info(plain, 0) == std::vector<int>{0, 1, 2});
  CHECK(side_info(plain, 11) == std::vector<int>{11, 0, 1});

  CHECK_THROWS_AS(side_info(p, 12), std::invalid_argument);
  CHECK_THROWS_AS(side_info(p, -1), std::invalid_argument);
}

TEST_CASE("window geometry over a sweep") {
  for (int m = 4; m <= 16; ++m)
    for (int k = 1; k < m; ++k) {
      auto p = make_instance(m, m, k, 0);
      std::vector<int> holder_count(m, 0);
      for (int client = 0; client < m; ++client) {
        auto window = side_info(p, client);
        CHECK(std::set<int>(window.begin(), window.end()).size() == size_t(k));
        for (int msg : window) {
          CHECK(holds_message(p, client, msg));
          ++holder_count[msg];
        }
        // adjacent windows overlap in exactly k-1 messages
        auto next = side_info(p, (client + 1) % m);
        std::set<int> mine(window.begin(), window.end());
        int shared = 0;
        for (int msg : next) shared += static_cast<int>(mine.count(msg));
        CHECK(shared == k - 1);
      }
      // each message sits in exactly k windows
      for (int msg = 0; msg < m; ++msg) CHECK(holder_count[msg] == k);
    }
}

TEST_CASE("holders") {
  auto p = make_instance(12, 8, 3, 2);
  CHECK(smallest_holder(p, {5}) == 2);
  CHECK(smallest_holder(p, {1}) == 0);
  CHECK(smallest_holder(p, {11}) == -1);  // held only by clients 8..10
  CHECK(holds_payload(p, 4, {5, 7}));
  CHECK(!holds_payload(p, 4, {5, 8}));
}

TEST_CASE("regime classification on known instances") {
  CHECK(classify_regime(make_instance(12, 12, 3, 3)) == RegimeInfo{Regime::Uncoded, 0});
  CHECK(classify_regime(make_instance(12, 12, 4, 4)) ==
        RegimeInfo{Regime::UncodedExtra, 2});
  CHECK(classify_regime(make_instance(10, 10, 7, 3)) == RegimeInfo{Regime::MultiXor, 0});
  CHECK(classify_regime(make_instance(11, 11, 6, 5)) ==
        RegimeInfo{Regime::PairedHalf, 0});
  // the uncoded S+1 condition also holds here, but the K band is coded
  CHECK(classify_regime(make_instance(16, 16, 7, 1)) == RegimeInfo{Regime::PairedMid, 0});
  CHECK(classify_regime(make_instance(16, 16, 7, 2)) == RegimeInfo{Regime::PairedMid, 0});
  CHECK(classify_regime(make_instance(10, 10, 5, 1)) ==
        RegimeInfo{Regime::PairedHalf, 0});
  CHECK(classify_regime(make_instance(6, 6, 3, 1)) == RegimeInfo{Regime::PairedHalf, 0});
  CHECK(classify_regime(make_instance(12, 12, 8, 1)) == RegimeInfo{Regime::MultiXor, 0});
  // small-instance overlap resolves toward uncoded below the threshold
  CHECK(classify_regime(make_instance(4, 4, 2, 2)) == RegimeInfo{Regime::UncodedExtra, 2});
  CHECK(classify_regime(make_instance(7, 7, 3, 1)) == RegimeInfo{Regime::Uncoded, 0});

  CHECK_THROWS_AS(classify_regime(make_instance(10, 20, 6, 3)), std::invalid_argument);
}

TEST_CASE("classification is total and self-consistent") {
  for (int m = 4; m <= 16; ++m)
    for (int k = 1; k < m; ++k)
      for (int s = 1; s <= m - k; ++s) {
        auto p = make_instance(m, m, k, s);
        RegimeInfo info = classify_regime(p);
        REQUIRE(info.kind != Regime::Unclassified);
        const int half = m / 2;
        switch (info.kind) {
          case Regime::Uncoded:
            CHECK(k <= m / (s + 1));
            break;
          case Regime::UncodedExtra: {
            const int n = info.extra;
            REQUIRE(n >= 2);
            CHECK(static_cast<long long>(n - 1) * m / (s + n - 1) < k);
            CHECK(k <= static_cast<long long>(n) * m / (s + n));
            // smallest such n
            for (int smaller = 2; smaller < n; ++smaller)
              CHECK(!(static_cast<long long>(smaller - 1) * m / (s + smaller - 1) < k &&
                      k <= static_cast<long long>(smaller) * m / (s + smaller)));
            break;
          }
          case Regime::PairedMid:
            CHECK((m + 2) / 3 < k);
            CHECK(k < half);
            break;
          case Regime::PairedHalf:
            CHECK(k >= half);
            CHECK(k <= half + 1);
            break;
          case Regime::MultiXor:
            CHECK(k > half + 1);
            break;
          case Regime::Unclassified:
            break;
        }
      }
}

TEST_CASE("uncoded-optimality threshold forms") {
  CHECK(uncoded_optimal_thresholds(make_instance(12, 12, 4, 2)).agree);
  auto forms = uncoded_optimal_thresholds(make_instance(12, 8, 4, 2));
  CHECK(!forms.client_form);  // 12 > 10
  CHECK(forms.message_form);  // 4 <= 4
  CHECK(!forms.agree);
}

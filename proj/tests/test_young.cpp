#include "doctest.h"
#include "dominotab/young.hpp"
#include "oracles.hpp"

using namespace dominotab;

namespace {

YoungTableau young(std::vector<int> outer, std::vector<int> inner,
                   std::vector<std::vector<int>> rows) {
  return YoungTableau(SkewShape(Partition(outer), Partition(inner)), rows);
}

// all tableaux on skew shapes with |nu| <= n_cells and entries < n
std::vector<YoungTableau> census(int n_cells, int n, int max_size) {
  std::vector<YoungTableau> out;
  for (auto& s : oracle::skew_shapes_up_to(n_cells)) {
    if (s.size() > max_size) continue;
    for (auto& t : enumerate_sst(s, n)) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_SUITE("young") {
  TEST_CASE("yamanouchi words") {
    CHECK(is_yamanouchi_word({}));
    CHECK(is_yamanouchi_word({1, 0}));
    CHECK(!is_yamanouchi_word({0, 1}));
    CHECK(is_yamanouchi_word({2, 1, 0, 1, 0, 0}));
    CHECK(!is_yamanouchi_word({2, 0}));
  }

  TEST_CASE("yamanouchi words against a suffix-count oracle") {
    // every word of length <= 6 over {0,1,2}
    for (int len = 0; len <= 6; ++len) {
      int total = 1;
      for (int k = 0; k < len; ++k) total *= 3;
      for (int code = 0; code < total; ++code) {
        Word w;
        for (int k = 0, c = code; k < len; ++k, c /= 3) w.push_back(c % 3);
        bool ok = true;
        for (int start = 0; start < len && ok; ++start) {
          int cnt[3] = {0, 0, 0};
          for (int k = start; k < len; ++k) ++cnt[w[k]];
          ok = cnt[0] >= cnt[1] && cnt[1] >= cnt[2];
        }
        CHECK(is_yamanouchi_word(w) == ok);
      }
    }
  }

  TEST_CASE("canonical tableaux") {
    CHECK(canonical({}).rows.empty());
    CHECK(canonical({2, 1}).rows == std::vector<std::vector<int>>{{0, 0}, {1}});
    CHECK(canonical({3, 3, 1}).rows == std::vector<std::vector<int>>{{0, 0, 0}, {1, 1, 1}, {2}});
  }

  TEST_CASE("enumerate_sst counts") {
    CHECK(enumerate_sst(SkewShape({1}), 2).size() == 2);
    CHECK(enumerate_sst(SkewShape({2, 1}), 3).size() == 8);
    CHECK(enumerate_sst(SkewShape({1, 1}), 1).empty());
    for (auto& s : oracle::skew_shapes_up_to(6)) {
      int brute = 0;
      oracle::fill_sst(s, 3, [&](const auto&) { ++brute; });
      auto all = enumerate_sst(s, 3);
      CHECK(int(all.size()) == brute);
      std::set<YoungTableau> distinct(all.begin(), all.end());
      CHECK(distinct.size() == all.size());
      for (auto& t : all) CHECK(is_semistandard(t));
    }
  }

  TEST_CASE("dominance_young examples") {
    CHECK(dominant(dominance_young(canonical({2, 1}), SkewShape({2, 1}))));
    auto r = dominance_young(young({2}, {}, {{0, 1}}), SkewShape({1, 1}));
    REQUIRE(!dominant(r));
    CHECK(std::get<DominanceFailure>(r).kind == DominanceFailure::Kind::order_violation);
    auto w = dominance_young(young({2}, {}, {{0, 1}}), SkewShape({2}));
    CHECK(std::get<DominanceFailure>(w).kind == DominanceFailure::Kind::weight_mismatch);
  }

  TEST_CASE("0-dominance of straight tableaux is the lattice property") {
    for (auto& t : census(8, 4, 8)) {
      if (!t.shape.straight()) continue;
      bool lattice = is_yamanouchi_word(column_word(t));
      Weight w = t.weight();
      if (!std::is_sorted(w.rbegin(), w.rend())) {
        CHECK(!lattice);
        continue;
      }
      SkewShape target{Partition(w), {}};
      CHECK(dominant(dominance_young(t, target)) == lattice);
    }
  }

  TEST_CASE("all reading orders agree on the lattice property") {
    // row reading right-to-left top-to-bottom as a prefix test
    for (auto& t : census(7, 3, 7)) {
      std::vector<Square> sq = t.shape.squares();
      std::sort(sq.begin(), sq.end(), [](Square a, Square b) {
        return a.row != b.row ? a.row < b.row : a.col > b.col;
      });
      Word w;
      for (Square s : sq) w.push_back(t.at(s));
      std::reverse(w.begin(), w.end());
      CHECK(is_yamanouchi_word(w) == is_yamanouchi_word(column_word(t)));
    }
  }

  TEST_CASE("rectify examples and confluence") {
    auto straight = young({3, 1}, {}, {{0, 0, 1}, {2}});
    CHECK(rectify(straight) == straight);
    // U of the worked switching example, entries from 1
    auto u = young({4, 3, 1, 1}, {2}, {{2, 3}, {1, 1, 3}, {2}, {4}});
    auto r = rectify(u);
    CHECK(r.rows == std::vector<std::vector<int>>{{1, 1, 2, 3}, {2, 3}, {4}});
    for (auto& t : census(9, 3, 6)) {
      auto a = rectify(t, SlideOrder::bottom_corner_first);
      auto b = rectify(t, SlideOrder::top_corner_first);
      CHECK(a == b);
      CHECK(is_semistandard(a));
      CHECK(a.weight() == t.weight());
    }
  }

  TEST_CASE("jeu de taquin preserves dominance") {
    std::vector<SkewShape> targets;
    for (auto& s : oracle::skew_shapes_up_to(5)) targets.push_back(s);
    for (auto& t : census(7, 3, 4)) {
      auto r = rectify(t);
      for (auto& target : targets) {
        if (target.size() != t.size()) continue;
        CHECK(dominant(dominance_young(t, target)) == dominant(dominance_young(r, target)));
      }
    }
  }

  TEST_CASE("coplactic_young examples") {
    auto one = young({1}, {}, {{1}});
    auto e = coplactic_young(Coplactic::e, 0, one);
    REQUIRE(e);
    CHECK(e->rows[0][0] == 0);
    for (auto& lam : oracle::partitions_up_to(6))
      for (int i = 0; i < 6; ++i) CHECK(!coplactic_young(Coplactic::e, i, canonical(lam)));
  }

  TEST_CASE("coplactic_young matches the signature rule on column words") {
    for (auto& t : census(8, 4, 6)) {
      Word w = column_word(t);
      for (int i = 0; i < 3; ++i) {
        for (auto kind : {Coplactic::e, Coplactic::f}) {
          auto res = coplactic_young(kind, i, t);
          auto idx = kind == Coplactic::e ? oracle::signature_e(w, i) : oracle::signature_f(w, i);
          REQUIRE(res.has_value() == idx.has_value());
          if (!res) continue;
          Word expect = w;
          expect[*idx] += kind == Coplactic::e ? -1 : 1;
          CHECK(column_word(*res) == expect);
          CHECK(is_semistandard(*res));
          CHECK(res->shape == t.shape);
          auto back = coplactic_young(kind == Coplactic::e ? Coplactic::f : Coplactic::e, i, *res);
          REQUIRE(back);
          CHECK(*back == t);
        }
      }
    }
  }

  TEST_CASE("coplactic operations commute with rectification") {
    for (auto& t : census(9, 3, 6)) {
      auto r = rectify(t);
      for (int i = 0; i < 2; ++i)
        for (auto kind : {Coplactic::e, Coplactic::f}) {
          auto a = coplactic_young(kind, i, t);
          auto b = coplactic_young(kind, i, r);
          REQUIRE(a.has_value() == b.has_value());
          if (a) CHECK(rectify(*a) == *b);
        }
    }
  }

  TEST_CASE("straight tableau is Yamanouchi iff no e_i applies") {
    for (auto& t : census(7, 4, 7)) {
      if (!t.shape.straight()) continue;
      bool any = false;
      for (int i = 0; i < 4; ++i) any = any || coplactic_young(Coplactic::e, i, t).has_value();
      CHECK(any == !is_yamanouchi_word(column_word(t)));
    }
  }

  TEST_CASE("is_lr") {
    auto c1 = canonical({1});
    CHECK(is_lr(c1, c1));
    CHECK(!is_lr(c1, young({1}, {}, {{1}})));
    // count against the textbook rule
    auto parts = oracle::partitions_up_to(3);
    for (auto& a : parts)
      for (auto& b : parts)
        for (auto& nu : oracle::partitions(a.size() + b.size())) {
          int count = 0;
          for (auto& t0 : enumerate_sst(SkewShape(a), int(nu.length())))
            for (auto& t1 : enumerate_sst(SkewShape(b), int(nu.length())))
            {
                Weight w(nu.length(), 0);
                auto w0 = t0.weight(), w1 = t1.weight();
                for (std::size_t k = 0; k < w0.size(); ++k) w[k] += w0[k];
                for (std::size_t k = 0; k < w1.size(); ++k) w[k] += w1[k];
                if (w == nu.parts() && is_lr(t0, t1)) ++count;
              }
          CHECK(count == oracle::lr(a, b, nu));
        }
  }

  TEST_CASE("standardise round trip") {
    for (auto& t : census(7, 3, 6)) {
      auto chain = standardise(t);
      CHECK(is_square_chain(chain));
      CHECK(destandardise(chain, standard_entries(t)) == t);
    }
  }
}

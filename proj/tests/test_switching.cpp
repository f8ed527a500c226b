#include <map>
#include <set>

#include "doctest.h"
#include "dominotab/coplactic.hpp"
#include "dominotab/switching.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dominotab;

namespace {

std::vector<DominoTableau> census(int n_cells, int n) {
  std::vector<DominoTableau> out;
  for (auto& s : oracle::skew_shapes_up_to(n_cells))
    for (auto& t : enumerate_ssdt(s, n)) out.push_back(t);
  return out;
}

// all (S, T) with S: kappa -> lambda and T: lambda -> nu, |nu| <= n
template <class F>
void standard_pairs(int n, F&& f) {
  for (auto& nu : oracle::partitions_up_to(n))
    for (auto& lambda : oracle::partitions_up_to(int(nu.size())))
      if (nu.contains(lambda))
        for (auto& kappa : oracle::partitions_up_to(int(lambda.size())))
          if (lambda.contains(kappa))
            for (auto& s : oracle::square_chains(kappa, lambda))
              for (auto& t : oracle::square_chains(lambda, nu)) f(s, t);
}

std::map<Square, int> cells(const Concatenation& c) {
  std::map<Square, int> m;
  for (auto& y : c)
    for (Square s : y.shape.squares()) m[s] = y.at(s);
  return m;
}

std::map<Square, int> cells(const YoungTableau& y) { return cells(Concatenation{y}); }

// subtableau of the dominoes with entries in [lo, hi)
DominoTableau layer(const DominoTableau& d, int lo, int hi) {
  Partition inner = d.shape.inner;
  for (const auto& p : d.dominoes)
    if (p.entry < lo) inner = *with_squares(inner, {p.d.first(), p.d.second()});
  Partition outer = inner;
  std::vector<PlacedDomino> ds;
  for (const auto& p : d.dominoes)
    if (p.entry >= lo && p.entry < hi) {
      outer = *with_squares(outer, {p.d.first(), p.d.second()});
      ds.push_back(p);
    }
  return DominoTableau(SkewShape(outer, inner), ds);
}

}  // namespace

TEST_SUITE("switching") {
  TEST_CASE("switch_standard trivial cases") {
    StandardChain s{Partition{}, Partition{1}, Partition{2}};
    StandardChain t_empty{Partition{2}};
    auto [t2, s2] = switch_standard(s, t_empty);
    CHECK(t2 == StandardChain{Partition{}});
    CHECK(s2 == s);
    // two far apart squares pass through each other
    StandardChain a{Partition{1}, Partition{2}}, b{Partition{2}, Partition{2, 1}};
    auto [b2, a2] = switch_standard(a, b);
    CHECK(b2 == StandardChain{Partition{1}, Partition{1, 1}});
    CHECK(a2 == StandardChain{Partition{1, 1}, Partition{2, 1}});
    CHECK_THROWS_AS(switch_standard(a, a), std::invalid_argument);
  }

  TEST_CASE("switching is an involution on standard pairs up to size 6") {
    int pairs = 0;
    standard_pairs(6, [&](const StandardChain& s, const StandardChain& t) {
      auto [t2, s2] = switch_standard(s, t);
      CHECK(t2.front() == s.front());
      CHECK(s2.back() == t.back());
      auto [s3, t3] = switch_standard(t2, s2);
      CHECK(s3 == s);
      CHECK(t3 == t);
      ++pairs;
    });
    CHECK(pairs > 1000);
  }

  TEST_CASE("switch_pair preserves jeu de taquin classes") {
    for (auto& nu : oracle::partitions_up_to(5))
      for (auto& lambda : oracle::partitions_up_to(int(nu.size())))
        if (nu.contains(lambda))
          for (auto& kappa : oracle::partitions_up_to(int(lambda.size()))) {
            if (!lambda.contains(kappa)) continue;
            for (auto& u : enumerate_sst(SkewShape(lambda, kappa), 3))
              for (auto& v : enumerate_sst(SkewShape(nu, lambda), 3)) {
                auto [v2, u2] = switch_pair(u, v);
                CHECK(is_semistandard(v2));
                CHECK(is_semistandard(u2));
                CHECK(rectify(v2) == rectify(v));
                CHECK(rectify(u2) == rectify(u));
                auto [u3, v3] = switch_pair(v2, u2);
                CHECK(u3 == u);
                CHECK(v3 == v);
              }
          }
  }

  TEST_CASE("pi0 of a single domino") {
    StandardChain d{Partition{}, Partition{1, 1}};
    SwitchingFamily fam;
    auto [s, t] = pi0(d, &fam);
    CHECK(s == StandardChain{Partition{}, Partition{1}});
    CHECK(t == StandardChain{Partition{1}, Partition{1, 1}});
    CHECK(fam.grid[0][1] == fam.grid[1][0]);
    CHECK(pi0_inv(s, t) == d);
    CHECK_THROWS_AS(pi0_inv(StandardChain{Partition{}, Partition{1}}, StandardChain{Partition{1}, Partition{2, 1}}),
                    std::exception);
  }

  TEST_CASE("pi0 is a bijection onto self-switching pairs") {
    for (auto& sigma : oracle::skew_shapes_up_to(8)) {
      if (sigma.size() % 2 || sigma.size() > 8) continue;
      auto dominoes = enumerate_standard_domino(sigma);
      std::set<std::pair<StandardChain, StandardChain>> images;
      for (auto& d : dominoes) {
        auto st = pi0(d);
        CHECK(is_self_switching(st.first, st.second));
        CHECK(st.first.front() == sigma.inner);
        CHECK(st.second.back() == sigma.outer);
        CHECK(pi0_inv(st.first, st.second) == d);
        images.insert(st);
      }
      CHECK(images.size() == dominoes.size());
      // count self-switching pairs of the shape directly
      int self = 0;
      std::size_t half = sigma.size() / 2;
      for (auto& lambda : oracle::partitions(int(sigma.inner.size() + half))) {
        if (!sigma.outer.contains(lambda) || !lambda.contains(sigma.inner)) continue;
        for (auto& s : oracle::square_chains(sigma.inner, lambda))
          for (auto& t : oracle::square_chains(lambda, sigma.outer)) self += is_self_switching(s, t);
      }
      CHECK_MESSAGE(self == int(dominoes.size()), to_string(sigma));
    }
  }

  TEST_CASE("pi1 of the switching example") {
    auto d = fixture::pioneex();
    auto [u, v] = pi1(d);
    CHECK(u == fixture::pioneex_u());
    CHECK(v == fixture::pioneex_v());
    auto [bu, rv] = pi1_shuffle(d);
    CHECK(bu == u);
    CHECK(rv == v);
    CHECK(pi(d).rows == std::vector<std::vector<int>>{{0, 0, 1, 2}, {1, 2}, {3}});
    CHECK(rectify(v) == pi(d));
    CHECK(pi1_inv(u, v) == d);
  }

  TEST_CASE("pi1 is self-switching, invertible, and agrees with the shuffle") {
    for (auto& d : census(8, 3)) {
      auto [u, v] = pi1(d);
      auto [v2, u2] = switch_pair(u, v);
      CHECK(v2 == u);
      CHECK(u2 == v);
      CHECK(is_self_switching(u, v));
      CHECK(u.weight() == v.weight());
      CHECK(trimmed(u.weight()) == trimmed(d.weight()));
      CHECK(u.shape.inner == d.shape.inner);
      CHECK(v.shape.outer == d.shape.outer);
      auto sh = pi1_shuffle(d);
      CHECK_MESSAGE(sh.first == u, to_string(d));
      CHECK(sh.second == v);
      CHECK(pi1_inv(u, v) == d);
    }
  }

  TEST_CASE("pi agrees with cl_split and sends Yamanouchi tableaux to canonical ones") {
    for (auto& d : census(8, 3)) {
      auto p = pi(d);
      CHECK(p == rectify(pi1(d).second));
      CHECK(p == cl_split(d).second);
      if (is_yamanouchi_dom(d)) CHECK(p == canonical(Partition(trimmed(d.weight()))));
    }
  }

  TEST_CASE("coplactic operations on self-switching pairs") {
    for (auto& d : census(8, 3)) {
      auto [u, v] = pi1(d);
      for (int i = 0; i < 3; ++i)
        for (auto kind : {Coplactic::e, Coplactic::f}) {
          auto cu = coplactic_young(kind, i, u), cv = coplactic_young(kind, i, v);
          REQUIRE(cu.has_value() == cv.has_value());
          if (cu) CHECK(is_self_switching(*cu, *cv));
        }
    }
  }

  TEST_CASE("pi2 with one part is pi1") {
    auto d = fixture::pioneex();
    auto [a, b] = pi2({d});
    auto [u, v] = pi1(d);
    REQUIRE(a.size() == 1);
    CHECK(a[0] == u);
    CHECK(b[0] == v);
  }

  TEST_CASE("pi2 of the entry layers corresponds to pi1") {
    for (auto& d : census(8, 4)) {
      auto [u, v] = pi1(d);
      for (int i = 0; i < 3; ++i) {
        std::vector<DominoTableau> parts{layer(d, 0, i), layer(d, i, i + 2), layer(d, i + 2, 99)};
        auto [a, b] = pi2(parts);
        CHECK(cells(a) == cells(u));
        CHECK(cells(b) == cells(v));
        // Lemma: a coplactic operation on the middle layer acts on the middle components
        for (auto kind : {Coplactic::e, Coplactic::f}) {
          auto c1 = coplactic_dom(kind, i, parts[1]);
          if (!c1) continue;
          auto [a2, b2] = pi2({parts[0], *c1, parts[2]});
          auto ca = coplactic_young(kind, i, a[1]), cb = coplactic_young(kind, i, b[1]);
          REQUIRE(ca);
          REQUIRE(cb);
          CHECK(a2[0] == a[0]);
          CHECK(a2[1] == *ca);
          CHECK(a2[2] == a[2]);
          CHECK(b2[0] == b[0]);
          CHECK(b2[1] == *cb);
          CHECK(b2[2] == b[2]);
        }
      }
    }
  }

  TEST_CASE("specialisation commutes with pi0 and dominance transports") {
    for (auto& d : census(8, 3)) {
      auto [u, v] = pi1(d);
      for (auto& target : oracle::skew_shapes_up_to(4)) {
        if (target.size() != d.size()) continue;
        auto rd = augment_dom(d, target);
        auto ru = dominance_young(u, target), rv = dominance_young(v, target);
        CHECK(dominant(rd) == dominant(ru));
        CHECK(dominant(rd) == dominant(rv));
        if (!dominant(rd)) continue;
        auto ad = std::get<Augmentation>(rd);
        auto au = std::get<Augmentation>(ru), av = std::get<Augmentation>(rv);
        for_each_valid_order(target, [&](const ValidOrder& o) {
          auto st = pi0(specialise(d, ad, o));
          CHECK(st.first == specialise(u, au, o));
          CHECK(st.second == specialise(v, av, o));
        });
      }
    }
  }
}

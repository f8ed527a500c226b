// One line per acceptance criterion: the worked examples checked exactly, then
// the exhaustive census behind each statement. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "dominotab/chains.hpp"
#include "dominotab/coplactic.hpp"
#include "dominotab/switching.hpp"
#include "dominotab/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dominotab;
using fixture::ribbons;

namespace {

// Collects failures of one criterion.
struct Result {
  std::vector<std::string> problems;
  long long cases = 0;
  void check(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void census(const std::string& id) {
    auto r = verify(id);
    cases += r.cases;
    check(r.passed, id + ": " + r.counterexample);
    check(r.cases > 0, id + ": empty census");
  }
};

int failures = 0;

void criterion(int n, const char* title, const std::function<void(Result&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.problems.push_back(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = r.problems.empty();
  failures += !ok;
  std::printf("%s %2d  %-60s cases=%-8lld %.2fs\n", ok ? "PASS" : "FAIL", n, title, r.cases, s);
  for (auto& p : r.problems) std::printf("        %s\n", p.c_str());
  std::fflush(stdout);
}

DominoTableau with_shape_of(const DominoTableau& like, const std::string& text) {
  return DominoTableau(like.shape, ribbons(text));
}

}  // namespace

int main() {
  criterion(1, "pi of the switching example; pi = cl_split census", [](Result& r) {
    auto d = fixture::pioneex();
    YoungTableau expect(SkewShape({4, 2, 1}), {{0, 0, 1, 2}, {1, 2}, {3}});
    r.check(pi(d) == expect, "pi(D) = " + to_string(pi(d)));
    r.check(cl_split(d).second == expect, "cl_split(D).P = " + to_string(cl_split(d).second));
    r.census("pithm");
  });

  criterion(2, "Yamanouchi domino counts are LR coefficients", [](Result& r) {
    r.check(lr_coefficient({1}, {1, 1}, {2, 1}) == 1, "c^(2,1)_(1),(1,1) != 1");
    r.check(lr_coefficient({1}, {2}, {2, 1}) == 1, "c^(2,1)_(1),(2) != 1");
    r.check(lr_coefficient({1}, {1, 1}, {3}) == 0, "c^(3)_(1),(1,1) != 0");
    // against the textbook rule
    auto parts = oracle::partitions_up_to(4);
    for (auto& a : parts)
      for (auto& b : parts)
        for (auto& nu : oracle::partitions(a.size() + b.size())) {
          ++r.cases;
          long long c = lr_coefficient(a, b, nu, 1);
          r.check(c == oracle::lr(a, b, nu), "c^" + to_string(nu) + "_" + to_string(a) + "," + to_string(b));
          r.check(c == lr_coefficient(b, a, nu, -1), "asymmetric c^" + to_string(nu));
        }
    r.census("domprod");
    r.census("lrsym");
  });

  criterion(3, "pi1 is self-switching, keeps shape and weight", [](Result& r) {
    auto [u, v] = pi1(fixture::pioneex());
    r.check(u == fixture::pioneex_u() && v == fixture::pioneex_v(), "pi1 of the switching example");
    r.census("selfswitch");
  });

  criterion(4, "(c U, c V) = pi1(c D) for coplactic c", [](Result& r) {
    auto d = fixture::dagger();
    auto e0 = coplactic_dom(Coplactic::e, 0, d), e1 = coplactic_dom(Coplactic::e, 1, d);
    r.check(e0 && *e0 == fixture::dagger_e0(), "e_0 of the coplactic example");
    r.check(e1 && *e1 == fixture::dagger_e1(), "e_1 of the coplactic example");
    for (auto* x : {&e0, &e1}) {
      if (!*x) continue;
      int i = x == &e0 ? 0 : 1;
      auto [u, v] = pi1(d);
      auto cu = coplactic_young(Coplactic::e, i, u), cv = coplactic_young(Coplactic::e, i, v);
      r.check(cu && cv && pi1(**x) == std::pair{*cu, *cv}, "pi1(e_i D) on the coplactic example");
    }
    r.census("complacselfsw");
  });

  criterion(5, "Phi_c, Phi'_c: LR -> Yam2 bijections; the worked orbit", [](Result& r) {
    auto t0 = fixture::star_t0(), t1 = fixture::star_t1();
    r.check(is_lr(t0, t1), "the running star tableau is LR");
    for (auto& st : fixture::phi_orbit()) {
      auto d = phi(st.c, t0, t1, st.primed);
      std::string name = std::string(st.primed ? "Phi'_" : "Phi_") + std::to_string(st.c);
      r.check(d == with_shape_of(d, st.text), name + " differs from the display: " + to_string(d));
      r.check(is_yamanouchi_dom(d), name + " is not Yamanouchi");
    }
    r.census("blowcore");
  });

  criterion(6, "segregation thresholds; segregated Yamanouchi iff LR", [](Result& r) {
    auto t0 = fixture::star_t0(), t1 = fixture::star_t1();
    r.check(segregated_threshold(t0.shape, t1.shape) == 5, "n != 5");
    for (int c = -8; c <= 8; ++c) {
      r.check(is_segregated(c, t0.shape, t1.shape, false) == (c <= -2), "Sigma_" + std::to_string(c));
      r.check(is_segregated(c, t0.shape, t1.shape, true) == (c >= 3), "Sigma'_" + std::to_string(c));
    }
    r.check(is_yamanouchi_dom(cq2_tab(-2, t0, t1)) && is_yamanouchi_dom(cq2_tab(3, t1, t0)),
            "segregated tableaux of the example are not Yamanouchi");
    r.census("segr");
  });

  criterion(7, "eps2(lambda)|Yam2(lambda,mu)| = signed doubled count", [](Result& r) {
    SkewShape lam({6, 5, 3, 3, 3});
    Partition mu{4, 3, 2, 1};
    auto l = enumerate_ssdt_weight(lam, mu.parts(), true);
    auto m = enumerate_ssdt_weight(dublpart(SkewShape(mu)), lam.outer.parts(), true);
    r.check(l.size() == 1, "|Yam2(lambda, mu)| = " + std::to_string(l.size()));
    r.check(m.size() == 5, "|Yam2(dublpart mu, lambda)| = " + std::to_string(m.size()));
    r.check(phi2_bracket(lam, SkewShape(mu)) == 1, "bracket != +1");
    r.check(signed_doubled_count(lam.outer, mu) == 1, "signed count != +1");
    // the C class: tableaux with a Yamanouchi-preserving closed chain
    std::multiset<int> spins;
    int signed_sum = 0;
    for (auto& t : m) {
      bool movable = false;
      for (auto& c : chains(1, t).chains) movable = movable || is_yamanouchi_dom(move_chains(t, 1, {c}));
      if (!movable) continue;
      spins.insert(twospin(t) / 2);
      signed_sum += (twospin(t) / 2) % 2 ? -1 : 1;
    }
    r.check(spins == std::multiset<int>{4, 5, 5, 6}, "C-class spins");
    r.check(signed_sum == 0, "C class does not cancel");
    r.check(phi2_bracket(SkewShape({2}), SkewShape({1})) == 1, "<phi2(s_2), s_1> != 1");
    r.check(phi2_bracket(SkewShape({1, 1}), SkewShape({1})) == -1, "<phi2(s_11), s_1> != -1");
    r.census("dublpartid");
  });

  criterion(8, "yamyam is a bijection onto B with 2Spin(L) = |psi| - Spin(M)", [](Result& r) {
    SkewShape lam({6, 5, 3, 3, 3}), mu({4, 3, 2, 1});
    DominoTableau l(lam, ribbons(fixture::yamyam_l)), m(dublpart(mu), ribbons(fixture::yamyam_m));
    r.check(yamyam_fwd(l, mu) == m, "yamyam(L) != M");
    r.check(yamyam_bwd(m, lam) == l, "yamyam^-1(M) != L");
    r.check(twospin(l) == mu.size() - twospin(m) / 2, "spin ledger on the example");
    r.census("yamyam");
  });

  criterion(9, "Yamanouchi-preserving closed chains move freely (S stable)", [](Result& r) {
    SkewShape lam({6, 5, 3, 3, 3});
    Partition mu{4, 3, 2, 1};
    int with_s = 0;
    for (auto& t : enumerate_ssdt_weight(dublpart(SkewShape(mu)), lam.outer.parts(), true)) {
      std::vector<Chain> s;
      for (auto& c : chains(1, t).chains)
        if (c.kind == ChainKind::closed && is_yamanouchi_dom(move_chains(t, 1, {c}))) s.push_back(c);
      if (s.empty()) continue;
      ++with_s;
      r.check(s.size() == 2, "|S| != 2 in the example class");
    }
    r.check(with_s == 4, "example class does not have 4 members");
    r.census("closchind");
  });

  criterion(10, "chain moves keep dominance iff unblocked; open unblocked", [](Result& r) {
    SkewShape lam({6, 5, 3, 3, 3});
    DominoTableau m(dublpart(SkewShape({4, 3, 2, 1})), ribbons(fixture::yamyam_m));
    auto aug = std::get<Augmentation>(augment_dom(m, lam));
    r.check(blocked_pairs(m, aug, 1).size() == 10, "every block of M is a blocked pair");
    r.census("augmove");
  });

  criterion(11, "coplactic operations commute with open chains; pi kept", [](Result& r) {
    r.census("complacmoc");
  });

  criterion(12, "valid orders specialise; pi0(D<) = (U<, V<)", [](Result& r) {
    r.census("specialise");
  });

  criterion(13, "moving every chain equals the quotient formula s_reflect_tab", [](Result& r) {
    auto t0 = fixture::star_t0(), t1 = fixture::star_t1();
    auto d = cq2_tab(-1, t0, t1);
    r.check(s_reflect_tab(1, d) == cq2_tab(1, t1, t0), "s_1 on Sigma_-1");
    r.check(s_reflect_tab(0, d) == cq2_tab(2, t1, t0), "s_0 on Sigma_-1");
    r.census("closure");
  });

  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

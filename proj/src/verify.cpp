#include "dominotab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "dominotab/chains.hpp"
#include "dominotab/coplactic.hpp"
#include "dominotab/switching.hpp"

namespace dominotab {

RouteMismatch::RouteMismatch(const std::string& what, long long a, long long b)
    : std::runtime_error(what + ": " + std::to_string(a) + " vs " + std::to_string(b)), first(a), second(b) {}

namespace {

Weight row_lengths(const SkewShape& s) {
  Weight w;
  for (std::size_t r = 0; r < s.outer.length(); ++r) w.push_back(s.outer.row(r) - s.inner.row(r));
  return w;
}

Weight plus(Weight a, const Weight& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k] += b[k];
  return trimmed(a);
}

// nu - lambda' as a weight, or nullopt if some part goes negative
std::optional<Weight> minus(const Partition& nu, const Partition& b) {
  if (b.length() > nu.length()) return std::nullopt;
  Weight w = nu.parts();
  for (std::size_t k = 0; k < b.length(); ++k) {
    w[k] -= b.row(k);
    if (w[k] < 0) return std::nullopt;
  }
  return w;
}

std::pair<SkewShape, SkewShape> quotient_shapes(const SkewShape& chi) {
  TwoQuotient out = two_quotient(chi.outer), in = two_quotient(chi.inner);
  return {SkewShape(out.q0, in.q0), SkewShape(out.q1, in.q1)};
}

// ---- census driver ----

struct Tally {
  long long cases = 0;
  std::string counterexample;
  void fail(const std::string& what) {
    if (counterexample.empty()) counterexample = what;
  }
  bool expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
    return ok;
  }
};

// Runs f on every item on all cores. The report keeps the counterexample of
// the first failing item in input order, so it does not depend on scheduling.
template <class Item, class F>
CheckReport run_items(const std::string& id, const std::vector<Item>& items, F f) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Tally> tallies(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < items.size();) {
      try {
        f(items[k], tallies[k]);
      } catch (const std::exception& e) {
        tallies[k].fail(std::string("exception: ") + e.what());
      }
    }
  };
  unsigned n = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CheckReport rep;
  rep.id = id;
  for (auto& t : tallies) {
    rep.cases += t.cases;
    if (rep.passed && !t.counterexample.empty()) {
      rep.passed = false;
      rep.counterexample = t.counterexample;
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<SkewShape> shapes_with(int max_cells, int max_dominoes) {
  std::vector<SkewShape> out;
  for (auto& s : skew_shapes_up_to(max_cells))
    if (s.size() <= 2 * max_dominoes && tileable_core(s)) out.push_back(s);
  return out;
}

std::string show(const DominoTableau& d) { return to_string(d); }
std::string show(const YoungTableau& t) { return to_string(t); }

template <class... T>
std::string describe(const std::string& head, const T&... parts) {
  std::ostringstream os;
  os << head;
  ((os << "\n  " << parts), ...);
  return os.str();
}

// equal as fillings: same dominoes on the same set of squares
bool same_filling(const DominoTableau& a, const DominoTableau& b) {
  auto sa = a.shape.squares(), sb = b.shape.squares();
  return a.dominoes == b.dominoes &&
         std::set<Square>(sa.begin(), sa.end()) == std::set<Square>(sb.begin(), sb.end());
}

std::set<Square> support(const Chain& c) {
  std::set<Square> out;
  for (auto& p : c.dominoes) {
    out.insert(p.d.first());
    out.insert(p.d.second());
  }
  return out;
}

std::vector<std::pair<Partition, Partition>> straight_pairs(int max_size) {
  std::vector<std::pair<Partition, Partition>> out;
  auto all = partitions_up_to(max_size);
  for (auto& a : all)
    for (auto& b : all) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<YoungTableau, YoungTableau>> lr_pairs(const Partition& a, const Partition& b) {
  std::vector<std::pair<YoungTableau, YoungTableau>> out;
  int n = a.size() + b.size();
  for (auto& t0 : enumerate_sst(SkewShape(a), n))
    for (auto& t1 : enumerate_sst(SkewShape(b), n))
      if (is_lr(t0, t1)) out.emplace_back(t0, t1);
  return out;
}

// ---- the checks ----

CheckReport check_pithm(int size, int entries) {
  return run_items("pithm", shapes_with(size, size), [&](const SkewShape& s, Tally& t) {
    for (auto& d : enumerate_ssdt(s, entries)) {
      ++t.cases;
      auto p = pi(d);
      if (!t.expect(p == cl_split(d).second, describe("pi(D) != cl_split(D).P", show(d)))) return;
      Weight w = trimmed(d.weight());
      if (std::is_sorted(w.rbegin(), w.rend()))
        t.expect(is_yamanouchi_dom(d) == (p == canonical(Partition(w))),
                 describe("Yamanouchi iff pi(D) = Can(wt D) fails", show(d), show(p)));
    }
  });
}

CheckReport check_domprod(int size, int) {
  return run_items("domprod", straight_pairs(size), [&](const auto& ab, Tally& t) {
    auto& [a, b] = ab;
    for (auto& nu : partitions_of(a.size() + b.size()))
      for (int c = -2; c <= 2; ++c) {
        ++t.cases;
        try {
          lr_coefficient(a, b, nu, c);
        } catch (const RouteMismatch& e) {
          t.fail(describe(e.what(), "lambda = " + to_string(a), "lambda' = " + to_string(b),
                          "nu = " + to_string(nu), "c = " + std::to_string(c)));
        }
      }
  });
}

CheckReport check_lrsym(int size, int) {
  return run_items("lrsym", straight_pairs(size), [&](const auto& ab, Tally& t) {
    auto& [a, b] = ab;
    auto pairs = lr_pairs(a, b);
    std::set<std::pair<YoungTableau, YoungTableau>> image;
    for (auto& [t0, t1] : pairs) {
      ++t.cases;
      auto [u1, u0] = x_dom(t0, t1);
      if (!t.expect(u1.shape == t1.shape && u0.shape == t0.shape && is_lr(u1, u0) &&
                        plus(u1.weight(), u0.weight()) == plus(t0.weight(), t1.weight()),
                    describe("x_dom does not land in LR(lambda' * lambda, nu)", show(t0), show(t1))))
        return;
      t.expect(x_dom(u1, u0) == std::pair{t0, t1}, describe("x_dom is not an involution", show(t0), show(t1)));
      image.insert({u1, u0});
    }
    t.expect(image.size() == pairs.size() && image.size() == lr_pairs(b, a).size(),
             describe("x_dom is not a bijection", "lambda = " + to_string(a), "lambda' = " + to_string(b)));
  });
}

CheckReport check_selfswitch(int size, int entries) {
  return run_items("selfswitch", shapes_with(size, size), [&](const SkewShape& s, Tally& t) {
    for (auto& d : enumerate_ssdt(s, entries)) {
      ++t.cases;
      auto [u, v] = pi1(d);
      auto sw = switch_pair(u, v);
      t.expect(sw.first == u && sw.second == v && is_self_switching(u, v),
               describe("pi1(D) is not self-switching", show(d), show(u), show(v)));
      t.expect(u.shape.inner == d.shape.inner && v.shape.outer == d.shape.outer &&
                   trimmed(u.weight()) == trimmed(d.weight()) && trimmed(v.weight()) == trimmed(d.weight()),
               describe("pi1(D) changes shape or weight", show(d), show(u), show(v)));
    }
  });
}

CheckReport check_complacselfsw(int size, int entries) {
  return run_items("complacselfsw", shapes_with(size, size), [&](const SkewShape& s, Tally& t) {
    for (auto& d : enumerate_ssdt(s, entries)) {
      auto [u, v] = pi1(d);
      for (int i = 0; i < entries; ++i)
        for (auto kind : {Coplactic::e, Coplactic::f}) {
          ++t.cases;
          std::string op = std::string(kind == Coplactic::e ? "e_" : "f_") + std::to_string(i);
          auto cd = coplactic_dom(kind, i, d);
          auto cu = coplactic_young(kind, i, u), cv = coplactic_young(kind, i, v);
          if (!t.expect(cd.has_value() == cu.has_value() && cd.has_value() == cv.has_value(),
                        describe(op + " applies to D, U, V inconsistently", show(d))))
            continue;
          if (cd)
            t.expect(pi1(*cd) == std::pair{*cu, *cv}, describe("pi1(" + op + " D) != (" + op + " U, " + op + " V)", show(d)));
        }
    }
  });
}

CheckReport check_blowcore(int size, int) {
  return run_items("blowcore", straight_pairs(size), [&](const auto& ab, Tally& t) {
    auto& [a, b] = ab;
    auto pairs = lr_pairs(a, b);
    for (int c = -3; c <= 3; ++c)
      for (bool primed : {false, true}) {
        ++t.cases;
        SkewShape shape = primed ? cq2_skew(c, SkewShape(b), SkewShape(a)) : cq2_skew(c, SkewShape(a), SkewShape(b));
        auto yam = enumerate_ssdt(shape, a.size() + b.size(), true);
        std::set<DominoTableau> image;
        for (auto& [t0, t1] : pairs) image.insert(phi(c, t0, t1, primed));
        t.expect(image.size() == pairs.size(),
                 describe(std::string(primed ? "Phi'_" : "Phi_") + std::to_string(c) + " is not injective",
                          "lambda = " + to_string(a), "lambda' = " + to_string(b)));
        t.expect(image == std::set<DominoTableau>(yam.begin(), yam.end()),
                 describe(std::string(primed ? "Phi'_" : "Phi_") + std::to_string(c) + " image is not Yam2",
                          "lambda = " + to_string(a), "lambda' = " + to_string(b)));
      }
  });
}

CheckReport check_segr(int size, int entries) {
  return run_items("segr", straight_pairs(size), [&](const auto& ab, Tally& t) {
    auto& [a, b] = ab;
    SkewShape sa(a), sb(b);
    int n = segregated_threshold(sa, sb);
    int lo = -n / 2 - 2, hi = n / 2 + 2;
    // every c far enough out is segregated
    t.expect(is_segregated(lo, sa, sb, false) && is_segregated(hi, sa, sb, true),
             describe("no segregated c at the ends of the range", to_string(a), to_string(b)));
    for (auto& t0 : enumerate_sst(sa, entries))
      for (auto& t1 : enumerate_sst(sb, entries)) {
        bool lr = is_lr(t0, t1);
        for (int c = lo; c <= hi; ++c) {
          if (is_segregated(c, sa, sb, false)) {
            ++t.cases;
            t.expect(is_yamanouchi_dom(cq2_tab(c, t0, t1)) == lr,
                     describe("Sigma_" + std::to_string(c) + " Yamanouchi != LR", show(t0), show(t1)));
          }
          if (is_segregated(c, sa, sb, true)) {
            ++t.cases;
            t.expect(is_yamanouchi_dom(cq2_tab(c, t1, t0)) == lr,
                     describe("Sigma'_" + std::to_string(c) + " Yamanouchi != LR", show(t0), show(t1)));
          }
        }
      }
  });
}

std::vector<std::pair<Partition, Partition>> doubled_pairs(int max_mu) {
  std::vector<std::pair<Partition, Partition>> out;
  for (auto& mu : partitions_up_to(max_mu))
    for (auto& lambda : partitions_of(2 * mu.size())) out.emplace_back(lambda, mu);
  return out;
}

CheckReport check_dublpartid(int size, int) {
  return run_items("dublpartid", doubled_pairs(size), [&](const auto& lm, Tally& t) {
    auto& [lambda, mu] = lm;
    ++t.cases;
    try {
      long long a = phi2_bracket(SkewShape(lambda), SkewShape(mu));
      long long b = signed_doubled_count(lambda, mu);
      t.expect(a == b, describe("eps2 |Yam2| != signed count", "lambda = " + to_string(lambda),
                                "mu = " + to_string(mu), std::to_string(a) + " vs " + std::to_string(b)));
    } catch (const RouteMismatch& e) {
      t.fail(describe(e.what(), "lambda = " + to_string(lambda), "mu = " + to_string(mu)));
    }
  });
}

CheckReport check_yamyam(int size, int) {
  std::vector<std::pair<SkewShape, SkewShape>> items;
  auto chis = skew_shapes_up_to(2 * size);
  for (auto& psi : skew_shapes_up_to(size)) {
    if (psi.size() == 0) continue;
    for (auto& chi : chis)
      if (chi.size() == 2 * psi.size() && tileable_core(chi)) items.emplace_back(psi, chi);
  }
  return run_items("yamyam", items, [&](const auto& pc, Tally& t) {
    auto& [psi, chi] = pc;
    auto ctx = [&](const DominoTableau& d) { return describe(show(d), "psi = " + to_string(psi), "chi = " + to_string(chi)); };
    std::set<DominoTableau> image;
    long long count = 0;
    for (auto& l : enumerate_ssdt_weight(chi, row_lengths(psi))) {
      if (!dominant(augment_dom(l, psi))) continue;
      ++t.cases;
      ++count;
      auto m = yamyam_fwd(l, psi);
      if (!t.expect(is_ssdt(m) && dominant(augment_dom(m, chi)), "yamyam(L) is not chi-dominant: " + ctx(l))) return;
      int vl = 0, vm = 0;
      for (auto& p : l.dominoes) vl += p.d.vertical();
      for (auto& p : m.dominoes) vm += p.d.vertical();
      t.expect(2 * vl == int(m.size()) - vm, "2 Spin(L) != |psi| - Spin(M): " + ctx(l));
      t.expect(yamyam_bwd(m, chi) == l, "yamyam is not inverted: " + ctx(l));
      image.insert(m);
    }
    t.expect(long(image.size()) == count, describe("yamyam is not injective", to_string(psi), to_string(chi)));
    // B: chi-dominant M with no s_1 chain whose move keeps chi-dominance
    std::set<DominoTableau> b;
    for (auto& m : enumerate_ssdt_weight(dublpart(psi), row_lengths(chi))) {
      if (!dominant(augment_dom(m, chi))) continue;
      bool movable = false;
      for (auto& c : chains(1, m).chains)
        movable = movable || dominant(augment_dom(move_chains(m, 1, {c}), chi));
      if (!movable) b.insert(m);
    }
    t.expect(image == b, describe("yamyam image is not B", "psi = " + to_string(psi), "chi = " + to_string(chi)));
  });
}

CheckReport check_closchind(int size, int) {
  return run_items("closchind", doubled_pairs(size), [&](const auto& lm, Tally& t) {
    auto& [lambda, mu] = lm;
    for (auto& m : enumerate_ssdt_weight(dublpart(SkewShape(mu)), lambda.parts(), true))
      for (int r = 0; r < 2; ++r) {
        auto good = [&](const DominoTableau& d) {
          std::vector<Chain> s;
          for (auto& c : chains(r, d).chains)
            if (c.kind == ChainKind::closed && is_yamanouchi_dom(move_chains(d, r, {c}))) s.push_back(c);
          return s;
        };
        auto s = good(m);
        std::set<std::set<Square>> supports;
        for (auto& c : s) supports.insert(support(c));
        if (s.size() > 12) {
          t.fail(describe("S too large to enumerate", show(m)));
          return;
        }
        for (unsigned mask = 0; mask < (1u << s.size()); ++mask) {
          ++t.cases;
          std::vector<Chain> subset;
          for (std::size_t k = 0; k < s.size(); ++k)
            if (mask >> k & 1) subset.push_back(s[k]);
          auto moved = move_chains(m, r, subset);
          std::string ctx = describe("r = " + std::to_string(r) + ", subset mask " + std::to_string(mask), show(m));
          if (!t.expect(is_yamanouchi_dom(moved), "moving a subset of S loses Yamanouchi: " + ctx)) continue;
          t.expect((twospin(moved) / 2 - twospin(m) / 2 - std::popcount(mask)) % 2 == 0,
                   "Spin parity is not flipped once per chain: " + ctx);
          std::set<std::set<Square>> after;
          for (auto& c : good(moved)) after.insert(support(c));
          t.expect(after == supports, "S changes after moving a subset: " + ctx);
        }
      }
  });
}

std::map<Weight, std::vector<SkewShape>> targets_by_weight(int max_cells) {
  std::map<Weight, std::vector<SkewShape>> out;
  for (auto& s : skew_shapes_up_to(max_cells)) out[trimmed(row_lengths(s))].push_back(s);
  return out;
}

CheckReport check_augmove(int size, int entries) {
  auto targets = targets_by_weight(size);
  return run_items("augmove", shapes_with(size, size / 2), [&](const SkewShape& s, Tally& t) {
    for (auto& d : enumerate_ssdt(s, entries)) {
      auto it = targets.find(trimmed(d.weight()));
      if (it == targets.end()) continue;
      for (auto& target : it->second) {
        auto res = augment_dom(d, target);
        if (!dominant(res)) continue;
        const auto& aug = std::get<Augmentation>(res);
        for (int r = 0; r < 2; ++r)
          for (auto& c : chains(r, d).chains) {
            ++t.cases;
            bool keeps = dominant(augment_dom(move_chains(d, r, {c}), target));
            std::string ctx = describe("r = " + std::to_string(r) + ", target " + to_string(target), show(d));
            t.expect(keeps == is_unblocked(c, d, aug), "dominance after the move != unblocked: " + ctx);
            if (c.kind == ChainKind::open) t.expect(is_unblocked(c, d, aug), "open chain is blocked: " + ctx);
          }
      }
    }
  });
}

CheckReport check_complacmoc(int size, int entries) {
  std::vector<SkewShape> items;
  for (auto& s : shapes_with(size, size))
    if (*tileable_core(s) != 0) items.push_back(s);
  return run_items("complacmoc", items, [&](const SkewShape& s, Tally& t) {
    for (auto& d : enumerate_ssdt(s, entries))
      for (int r = 0; r < 2; ++r) {
        ++t.cases;
        std::string ctx = describe("r = " + std::to_string(r), show(d));
        t.expect(pi(moc(r, d)) == pi(d), "pi changes under moving the open chains: " + ctx);
        for (auto& c : chains(r, d).chains) {
          if (c.kind != ChainKind::open) continue;
          ++t.cases;
          auto moved = move_chains(d, r, {c});
          t.expect(pi(moved) == pi(d), "pi changes under moving an open chain: " + ctx);
          for (int i = 0; i < entries; ++i)
            for (auto kind : {Coplactic::e, Coplactic::f}) {
              auto a = coplactic_dom(kind, i, d);
              auto b = coplactic_dom(kind, i, moved);
              if (!t.expect(a.has_value() == b.has_value(), "applicability changes under the move: " + ctx)) continue;
              if (!a) continue;
              const Chain* match = nullptr;
              auto after = chains(r, *a);
              for (auto& c2 : after.chains)
                if (c2.kind == ChainKind::open && c2.removed == c.removed && c2.added == c.added) match = &c2;
              if (!t.expect(match != nullptr, "the open chain disappears after a coplactic move: " + ctx)) continue;
              t.expect(move_chains(*a, r, {*match}) == *b, "coplactic move does not commute with the chain: " + ctx);
            }
        }
      }
  });
}

CheckReport check_specialise(int size, int entries) {
  auto targets = targets_by_weight(size);
  return run_items("specialise", shapes_with(size, 4), [&](const SkewShape& s, Tally& t) {
    for (auto& d : enumerate_ssdt(s, entries)) {
      auto it = targets.find(trimmed(d.weight()));
      if (it == targets.end()) continue;
      auto [u, v] = pi1(d);
      for (auto& target : it->second) {
        auto rd = augment_dom(d, target);
        auto ru = dominance_young(u, target), rv = dominance_young(v, target);
        std::string ctx = describe("target " + to_string(target), show(d));
        if (!t.expect(dominant(rd) == dominant(ru) && dominant(rd) == dominant(rv),
                      "dominance of D, U, V disagree: " + ctx))
          continue;
        if (!dominant(rd)) continue;
        const auto& ad = std::get<Augmentation>(rd);
        const auto& au = std::get<Augmentation>(ru);
        const auto& av = std::get<Augmentation>(rv);
        for_each_valid_order(target, [&](const ValidOrder& o) {
          ++t.cases;
          auto chain = specialise(d, ad, o);
          if (!t.expect(is_domino_chain(chain), "specialisation is not a standard domino tableau: " + ctx)) return;
          auto st = pi0(chain);
          t.expect(st.first == specialise(u, au, o) && st.second == specialise(v, av, o),
                   "pi0(D_<) != (U_<, V_<): " + ctx);
        });
      }
    }
  });
}

CheckReport check_closure(int size, int entries) {
  return run_items("closure", shapes_with(size, size / 2), [&](const SkewShape& s, Tally& t) {
    for (auto& d : enumerate_ssdt(s, entries))
      for (int r = 0; r < 2; ++r) {
        ++t.cases;
        auto all = chains(r, d).chains;
        auto direct = s_reflect_tab(r, d);
        bool ok = all.empty() ? same_filling(direct, d) : move_chains(d, r, all) == direct;
        t.expect(ok, describe("moving every chain != s_reflect_tab, r = " + std::to_string(r), show(d)));
        // the quotient formula: cq2(s_r(gamma), T1, T0)
        auto [t0, t1] = cq2_tab_inv(core_index(d), d);
        t.expect(cq2_tab_inv(core_index(direct), direct) == std::pair{t1, t0},
                 describe("s_reflect_tab does not swap the quotient", show(d)));
      }
  });
}

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& lambda1, const Partition& nu, int c) {
  if (nu.size() != lambda.size() + lambda1.size()) return 0;
  // LR pairs T0 * T1: the suffix T1 must be Yamanouchi on its own, so T1 = Can(lambda').
  long long stars = 0;
  if (auto rest = minus(nu, lambda1)) {
    YoungTableau t1 = canonical(lambda1);
    for (auto& t0 : enumerate_sst_weight(SkewShape(lambda), *rest)) stars += is_lr(t0, t1);
  }
  long long dominoes =
      (long long)enumerate_ssdt_weight(cq2_skew(c, SkewShape(lambda), SkewShape(lambda1)), nu.parts(), true).size();
  if (stars != dominoes)
    throw RouteMismatch("c^" + to_string(nu) + "_{" + to_string(lambda) + "," + to_string(lambda1) +
                            "} at c = " + std::to_string(c),
                        stars, dominoes);
  return stars;
}

long long phi2_bracket(const SkewShape& chi, const SkewShape& psi) {
  auto eps = epsilon2(chi);
  if (!eps || chi.size() != 2 * psi.size()) return 0;
  Weight w = row_lengths(psi);
  long long d = 0;
  for (auto& t : enumerate_ssdt_weight(chi, w)) d += dominant(augment_dom(t, psi));

  // Classical route: psi-dominant star tableaux on the two quotient shapes.
  auto [q0, q1] = quotient_shapes(chi);
  int rows = int(w.size());
  std::map<Weight, std::vector<YoungTableau>> by_weight;
  for (auto& t1 : enumerate_sst(q1, rows)) by_weight[trimmed(t1.weight())].push_back(t1);
  long long stars = 0;
  for (auto& t0 : enumerate_sst(q0, rows)) {
    Weight w0 = t0.weight();
    w0.resize(std::max(w0.size(), w.size()), 0);
    Weight need(w.size());
    bool ok = true;
    for (std::size_t k = 0; k < w.size(); ++k) ok = ok && (need[k] = w[k] - w0[k]) >= 0;
    for (std::size_t k = w.size(); k < w0.size(); ++k) ok = ok && w0[k] == 0;
    if (!ok) continue;
    auto it = by_weight.find(trimmed(need));
    if (it == by_weight.end()) continue;
    for (auto& t1 : it->second) stars += dominant(dominance_star(t0, t1, psi));
  }
  if (stars != d)
    throw RouteMismatch("<phi2(s_" + to_string(chi) + "), s_" + to_string(psi) + ">", d, stars);
  return *eps * d;
}

long long signed_doubled_count(const Partition& lambda, const Partition& mu) {
  long long sum = 0;
  for (auto& m : enumerate_ssdt_weight(dublpart(SkewShape(mu)), lambda.parts(), true)) {
    int spin = twospin(m) / 2;
    sum += (mu.size() - spin) % 2 ? -1 : 1;
  }
  return sum;
}

const std::vector<CheckInfo>& checks() {
  static const std::vector<CheckInfo> registry = {
      {"pithm", "pi(D) = cl_split(D).P, and D Yamanouchi iff pi(D) = Can(wt D); shapes with |outer| <= size",
       8, 3, check_pithm},
      {"domprod", "|Yam2(cq2(gamma_c, lambda, lambda'), nu)| = c^nu_{lambda lambda'}, |lambda|, |lambda'| <= size, c in -2..2",
       4, 0, check_domprod},
      {"lrsym", "X_Dom is an involution LR(lambda*lambda', nu) -> LR(lambda'*lambda, nu), |lambda|, |lambda'| <= size",
       4, 0, check_lrsym},
      {"selfswitch", "pi1(D) is self-switching and keeps shape and weight; shapes with |outer| <= size", 8, 3,
       check_selfswitch},
      {"complacselfsw", "pi1(c D) = (c U, c V) for every e_i, f_i; shapes with |outer| <= size", 8, 3,
       check_complacselfsw},
      {"blowcore", "Phi_c, Phi'_c are bijections LR -> Yam2 for straight shapes of size <= size, c in -3..3", 3, 0,
       check_blowcore},
      {"segr", "segregated Sigma_c, Sigma'_c are Yamanouchi iff T0 * T1 is LR; straight shapes of size <= size", 3, 3,
       check_segr},
      {"dublpartid", "eps2(lambda)|Yam2(lambda, mu)| = sum over Yam2(dublpart mu, lambda) of (-1)^(|mu|-Spin), |mu| <= size",
       4, 0, check_dublpartid},
      {"yamyam", "yamyam is a spin-ledgered bijection onto B; |psi outer| <= size, |chi outer| <= 2 size", 4, 0,
       check_yamyam},
      {"closchind", "Yamanouchi-preserving closed chains can be moved in any subset, S stable; |mu| <= size", 4, 0,
       check_closchind},
      {"augmove", "a chain move keeps dominance iff unblocked, open chains unblocked; |outer| <= size, <= size/2 dominoes",
       10, 3, check_augmove},
      {"complacmoc", "coplactic operations commute with moving open chains and pi is kept; nonzero core, |outer| <= size",
       8, 3, check_complacmoc},
      {"specialise", "every valid order specialises to a standard domino tableau and pi0 commutes; <= 4 dominoes, |outer| <= size",
       8, 3, check_specialise},
      {"closure", "moving every chain equals s_reflect_tab, which swaps the quotient; |outer| <= size, <= size/2 dominoes",
       10, 3, check_closure},
  };
  return registry;
}

CheckReport verify(const std::string& id, const Bounds& bounds) {
  for (auto& c : checks())
    if (c.id == id) return c.run(bounds.size.value_or(c.default_size), bounds.entries.value_or(c.default_entries));
  throw std::invalid_argument("unknown check: " + id);
}

}  // namespace dominotab

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dominotab/dominoes.hpp"

namespace dominotab {

// Two independent counts that should agree but do not.
class RouteMismatch : public std::runtime_error {
 public:
  RouteMismatch(const std::string& what, long long first, long long second);
  long long first = 0;
  long long second = 0;
};

// c^nu_{lambda, lambda'} counted as LR star tableaux and as Yamanouchi domino
// tableaux of shape cq2(gamma_c, lambda, lambda') / gamma_c. Throws
// RouteMismatch if the two counts differ.
long long lr_coefficient(const Partition& lambda, const Partition& lambda1, const Partition& nu, int c = 0);

// <phi^2(s_chi), s_psi>: eps2(chi) times the number of psi-dominant domino
// tableaux of shape chi, checked against the psi-dominant star tableaux of
// the 2-quotient shapes. Zero when chi is not tileable or |chi| != 2|psi|.
long long phi2_bracket(const SkewShape& chi, const SkewShape& psi);

// Sum over M in Yam2(dublpart mu, lambda) of (-1)^(|mu| - Spin M).
long long signed_doubled_count(const Partition& lambda, const Partition& mu);

struct Bounds {
  std::optional<int> size;     // main census bound (cells, dominoes or |mu|, per check)
  std::optional<int> entries;  // entries < this
};

struct CheckReport {
  std::string id;
  bool passed = true;
  long long cases = 0;
  std::string counterexample;  // empty when passed
  double seconds = 0;
};

struct CheckInfo {
  std::string id;
  std::string summary;
  int default_size = 0;
  int default_entries = 0;
  std::function<CheckReport(int size, int entries)> run;
};

const std::vector<CheckInfo>& checks();
// Throws std::invalid_argument for an unknown id.
CheckReport verify(const std::string& id, const Bounds& bounds = {});

}  // namespace dominotab

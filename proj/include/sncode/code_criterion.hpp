#pragma once

#include "sncode/integer.hpp"
#include "sncode/perm.hpp"

#include <optional>
#include <vector>

namespace sncode {

/// Does the class of `ct` tile S_n against Y_k = S_k x S_{n-k}?
/// Construct through make(), which enforces n > 2k >= 2.
class CodeQuery {
public:
  static CodeQuery make(int n, int k, CycleType ct);

  int n() const { return n_; }
  int k() const { return k_; }
  const CycleType& cycle_type() const { return ct_; }
  /// The integer j with 2^j <= k < 2^{j+1}.
  int j() const;

private:
  CodeQuery(int n, int k, CycleType ct) : n_(n), k_(k), ct_(std::move(ct)) {}

  int n_;
  int k_;
  CycleType ct_;
};

struct CodeVerdict {
  bool is_code = false;
  std::optional<Int> r;
  int j = 0;
  /// Smallest m in 1..k with chi^{(n-m,m)}(x) != 0.
  std::optional<int> failing_m;
};

/// floor(log2(k)) for k >= 1.
int floor_log2(int k);

/// Cycle-type rule: for lengths l <= k, exactly one l-cycle when l is a power
/// of two and none otherwise. Longer cycles are unconstrained.
bool theorem_classify(const CodeQuery& q);

/// chi^{(n-m,m)}(x) = 0 for every m in 1..k.
bool char_criterion(const CodeQuery& q, const Limits& limits = {});

/// Smallest m in 1..k whose two-row character does not vanish, if any.
std::optional<int> first_nonvanishing_m(const CodeQuery& q, const Limits& limits = {});

/// |X| * k! * (n-k)! / n!. Throws CrossCheckFailure when the division is not exact.
Int compute_r(const CodeQuery& q);

/// chi^{(n-k,k)}(x) = 0 and the criterion for k-1. Needs k >= 2.
bool induction_step(const CodeQuery& q, const Limits& limits = {});

/// Character-based verdict with r and diagnostics. Throws CrossCheckFailure if
/// theorem_classify disagrees.
CodeVerdict classify(const CodeQuery& q, const Limits& limits = {});

struct CodeEntry {
  CycleType cycle_type;
  Int r;
};

/// Every class of S_n that tiles against Y_k, in reverse-lexicographic order
/// of cycle types. Every partition is also run through char_criterion and a
/// disagreement throws CrossCheckFailure.
std::vector<CodeEntry> search_codes(int n, int k, const Limits& limits = {});

/// chi^mu(x) = 0 for every constituent mu != (n) of the permutation module on
/// lam-tabloids. Proven equivalent to tiling only for two-row lam; for other
/// shapes this is an exploratory test.
bool young_criterion_general(const Partition& lam, const CycleType& ct);

} // namespace sncode

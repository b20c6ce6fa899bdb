#include "sncode/code_criterion.hpp"

#include "sncode/characters.hpp"
#include "sncode/error.hpp"

namespace sncode {

CodeQuery CodeQuery::make(int n, int k, CycleType ct) {
  if (k < 1)
    throw InvalidArgument("k must be at least 1");
  if (n == 2 * k)
    throw InvalidArgument("n = 2k is excluded: Y_k needs n > 2k (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
  if (n < 2 * k)
    throw InvalidArgument("n must exceed 2k (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
  if (ct.degree() != n)
    throw InvalidArgument("cycle type " + ct.to_string() + " is not a class of S_" +
                          std::to_string(n));
  return CodeQuery(n, k, std::move(ct));
}

int CodeQuery::j() const { return floor_log2(k_); }

int floor_log2(int k) {
  if (k < 1)
    throw InvalidArgument("floor_log2 needs k >= 1");
  int j = 0;
  while ((2 << j) <= k)
    ++j;
  return j;
}

bool theorem_classify(const CodeQuery& q) {
  const CycleType& ct = q.cycle_type();
  for (int l = 1; l <= q.k(); ++l) {
    bool power_of_two = (l & (l - 1)) == 0;
    if (ct.multiplicity(l) != (power_of_two ? 1 : 0))
      return false;
  }
  return true;
}

std::optional<int> first_nonvanishing_m(const CodeQuery& q, const Limits& limits) {
  for (int m = 1; m <= q.k(); ++m)
    if (two_row_char(q.cycle_type(), m, limits) != 0)
      return m;
  return std::nullopt;
}

bool char_criterion(const CodeQuery& q, const Limits& limits) {
  return !first_nonvanishing_m(q, limits).has_value();
}

Int compute_r(const CodeQuery& q) {
  Int products = checked_mul(class_size(q.cycle_type()),
                             checked_mul(factorial(q.k()), factorial(q.n() - q.k())));
  Int order = factorial(q.n());
  if (products % order != 0)
    throw CrossCheckFailure("|X|*|Y_k| = " + to_string(products) + " is not a multiple of " +
                            std::to_string(q.n()) + "!; " + q.cycle_type().to_string() +
                            " cannot tile against Y_" + std::to_string(q.k()));
  return products / order;
}

bool induction_step(const CodeQuery& q, const Limits& limits) {
  if (q.k() < 2)
    throw InvalidArgument("induction_step needs k >= 2");
  if (two_row_char(q.cycle_type(), q.k(), limits) != 0)
    return false;
  return char_criterion(CodeQuery::make(q.n(), q.k() - 1, q.cycle_type()), limits);
}

CodeVerdict classify(const CodeQuery& q, const Limits& limits) {
  CodeVerdict verdict;
  verdict.j = q.j();
  verdict.failing_m = first_nonvanishing_m(q, limits);
  verdict.is_code = !verdict.failing_m.has_value();
  if (verdict.is_code != theorem_classify(q))
    throw CrossCheckFailure("cycle-type rule and character criterion disagree on n=" +
                            std::to_string(q.n()) + " k=" + std::to_string(q.k()) + " type " +
                            q.cycle_type().to_string());
  if (verdict.is_code)
    verdict.r = compute_r(q);
  return verdict;
}

std::vector<CodeEntry> search_codes(int n, int k, const Limits& limits) {
  if (n > limits.max_arith_degree)
    throw LimitExceeded("degree " + std::to_string(n) + " exceeds the arithmetic cap " +
                        std::to_string(limits.max_arith_degree));
  std::vector<CodeEntry> out;
  for (const Partition& lengths : partitions_of(n)) {
    CodeQuery q = CodeQuery::make(n, k, CycleType::from_partition(lengths));
    CodeVerdict verdict = classify(q, limits);
    if (verdict.is_code)
      out.push_back({q.cycle_type(), *verdict.r});
  }
  return out;
}

bool young_criterion_general(const Partition& lam, const CycleType& ct) {
  if (lam.size() != ct.degree())
    throw InvalidArgument("shape and cycle type have different degrees");
  const Partition trivial({lam.size()});
  for (const auto& [mu, multiplicity] : decompose_young_module(lam).constituents) {
    if (mu == trivial)
      continue;
    if (mn_character(mu, ct) != 0)
      return false;
  }
  return true;
}

} // namespace sncode

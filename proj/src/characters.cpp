#include "sncode/characters.hpp"

#include "sncode/error.hpp"

#include <algorithm>

namespace sncode {

// SparseBivariatePoly

SparseBivariatePoly SparseBivariatePoly::constant(Int c) { return monomial(c, 0, 0); }

SparseBivariatePoly SparseBivariatePoly::monomial(Int c, int deg1, int deg2) {
  SparseBivariatePoly p;
  p.add_term({deg1, deg2}, c);
  return p;
}

Int SparseBivariatePoly::coefficient(int deg1, int deg2) const {
  auto it = terms_.find({deg1, deg2});
  return it == terms_.end() ? Int{0} : it->second;
}

int SparseBivariatePoly::homogeneous_degree() const {
  int degree = -1;
  for (const auto& [e, c] : terms_) {
    int d = e.first + e.second;
    if (degree >= 0 && d != degree)
      return -1;
    degree = d;
  }
  return degree;
}

void SparseBivariatePoly::add_term(Exponents e, Int c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0)
      terms_.erase(it);
  }
}

SparseBivariatePoly& SparseBivariatePoly::operator+=(const SparseBivariatePoly& rhs) {
  for (const auto& [e, c] : rhs.terms_)
    add_term(e, c);
  return *this;
}

SparseBivariatePoly operator*(const SparseBivariatePoly& a, const SparseBivariatePoly& b) {
  SparseBivariatePoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term({ea.first + eb.first, ea.second + eb.second}, checked_mul(ca, cb));
  return out;
}

// Frobenius two-row formula

namespace {

void check_arith_degree(int n, const Limits& limits) {
  if (n > limits.max_arith_degree)
    throw LimitExceeded("degree " + std::to_string(n) + " exceeds the arithmetic cap " +
                        std::to_string(limits.max_arith_degree));
}

void check_two_row(const CycleType& ct, int m) {
  if (m < 0 || 2 * m > ct.degree())
    throw InvalidArgument("(" + std::to_string(ct.degree() - m) + "," + std::to_string(m) +
                          ") is not a partition of " + std::to_string(ct.degree()));
}

// Keeps only monomials with x2-degree <= max_deg2.
SparseBivariatePoly truncate(const SparseBivariatePoly& p, int max_deg2) {
  SparseBivariatePoly out;
  for (const auto& [e, c] : p.terms())
    if (e.second <= max_deg2)
      out += SparseBivariatePoly::monomial(c, e.first, e.second);
  return out;
}

} // namespace

SparseBivariatePoly frobenius_poly(const CycleType& ct, const Limits& limits) {
  check_arith_degree(ct.degree(), limits);
  SparseBivariatePoly poly = SparseBivariatePoly::monomial(1, 1, 0);
  poly += SparseBivariatePoly::monomial(-1, 0, 1);
  for (int l = 1; l <= ct.degree(); ++l) {
    SparseBivariatePoly factor = SparseBivariatePoly::monomial(1, l, 0);
    factor += SparseBivariatePoly::monomial(1, 0, l);
    for (int i = 0; i < ct.multiplicity(l); ++i)
      poly = poly * factor;
  }
  return poly;
}

Int two_row_char(const CycleType& ct, int m, const Limits& limits) {
  check_two_row(ct, m);
  if (m == 0)
    return 1;
  const int n = ct.degree();
  return frobenius_poly(ct, limits).coefficient(n - m + 1, m);
}

Int two_row_char_pruned(const CycleType& ct, int m, const Limits& limits) {
  check_two_row(ct, m);
  check_arith_degree(ct.degree(), limits);
  if (m == 0)
    return 1;
  const int n = ct.degree();
  SparseBivariatePoly poly = SparseBivariatePoly::monomial(1, 1, 0);
  poly += SparseBivariatePoly::monomial(-1, 0, 1);
  for (int l = 1; l <= n; ++l) {
    if (ct.multiplicity(l) == 0)
      continue;
    SparseBivariatePoly factor = SparseBivariatePoly::monomial(1, l, 0);
    if (l <= m)
      factor += SparseBivariatePoly::monomial(1, 0, l);
    for (int i = 0; i < ct.multiplicity(l); ++i)
      poly = truncate(poly * factor, m);
  }
  return poly.coefficient(n - m + 1, m);
}

// Murnaghan-Nakayama

namespace {

// A partition as a beta-set: bead positions lam_i + (len - i) for a fixed
// number of beads. Removing an r-rim hook moves one bead from b to b - r onto
// an empty position; the sign is (-1)^(beads strictly between).
class MnEvaluator {
public:
  explicit MnEvaluator(std::vector<int> cycles) : cycles_(std::move(cycles)) {}

  Int evaluate(std::vector<int> beads, std::size_t next) {
    if (next == cycles_.size())
      return 1;
    auto key = std::make_pair(beads, next);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;

    const int r = cycles_[next];
    Int total = 0;
    // beads are strictly decreasing
    for (std::size_t i = 0; i < beads.size(); ++i) {
      int from = beads[i];
      int to = from - r;
      if (to < 0 || std::find(beads.begin(), beads.end(), to) != beads.end())
        continue;
      int between = 0;
      for (int b : beads)
        if (b > to && b < from)
          ++between;
      std::vector<int> moved = beads;
      moved[i] = to;
      std::sort(moved.rbegin(), moved.rend());
      Int sub = evaluate(std::move(moved), next + 1);
      total = (between % 2 == 0) ? checked_add(total, sub) : checked_sub(total, sub);
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

private:
  std::vector<int> cycles_;
  std::map<std::pair<std::vector<int>, std::size_t>, Int> memo_;
};

} // namespace

Int mn_character(const Partition& lam, const CycleType& ct) {
  if (lam.size() != ct.degree())
    throw InvalidArgument("shape " + lam.to_equation() + " does not match cycle type degree " +
                          std::to_string(ct.degree()));
  // Largest cycles first.
  std::vector<int> cycles = ct.to_partition().parts();
  const int len = lam.length();
  std::vector<int> beads;
  for (int i = 0; i < len; ++i)
    beads.push_back(lam.part(i) + (len - 1 - i));
  return MnEvaluator(std::move(cycles)).evaluate(std::move(beads), 0);
}

Int hook_length_dimension(const Partition& lam) {
  Int hooks = 1;
  for (int i = 0; i < lam.length(); ++i) {
    for (int j = 0; j < lam.part(i); ++j) {
      int arm = lam.part(i) - j - 1;
      int leg = 0;
      for (int below = i + 1; below < lam.length() && lam.part(below) > j; ++below)
        ++leg;
      hooks = checked_mul(hooks, arm + leg + 1);
    }
  }
  return factorial(lam.size()) / hooks;
}

// Kostka numbers

namespace {

class SsytCounter {
public:
  SsytCounter(const Partition& shape, const Partition& content)
      : shape_(shape), remaining_(content.parts()),
        grid_(static_cast<std::size_t>(shape.length())) {
    for (int i = 0; i < shape.length(); ++i)
      grid_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(shape.part(i)), 0);
  }

  Int count() { return fill(0, 0); }

private:
  // Fills cells in row-major order with values 1..len(content).
  Int fill(int row, int col) {
    if (row == shape_.length())
      return 1;
    if (col == shape_.part(row))
      return fill(row + 1, 0);
    int lo = 1;
    if (col > 0)
      lo = std::max(lo, cell(row, col - 1));
    if (row > 0)
      lo = std::max(lo, cell(row - 1, col) + 1);
    Int total = 0;
    for (int v = lo; v <= static_cast<int>(remaining_.size()); ++v) {
      int& left = remaining_[static_cast<std::size_t>(v - 1)];
      if (left == 0)
        continue;
      --left;
      grid_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
      total = checked_add(total, fill(row, col + 1));
      ++left;
    }
    return total;
  }

  int cell(int row, int col) const {
    return grid_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }

  const Partition& shape_;
  std::vector<int> remaining_;
  std::vector<std::vector<int>> grid_;
};

} // namespace

Int kostka(const Partition& mu, const Partition& lam) {
  if (mu.size() != lam.size())
    throw InvalidArgument("kostka needs partitions of the same size");
  return SsytCounter(mu, lam).count();
}

ModuleDecomposition decompose_young_module(const Partition& lam) {
  ModuleDecomposition out{lam, {}};
  for (const Partition& mu : partitions_of(lam.size())) {
    Int k = kostka(mu, lam);
    if (k > 0)
      out.constituents.emplace_back(mu, k);
  }
  return out;
}

Rational class_sum_eigenvalue(const CycleType& ct, const Partition& lam) {
  Int value = mn_character(lam, ct);
  Int dim = mn_character(lam, CycleType::identity(lam.size()));
  return Rational::make(checked_mul(class_size(ct), value), dim);
}

} // namespace sncode

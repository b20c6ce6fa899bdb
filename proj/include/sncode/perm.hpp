#pragma once

#include "sncode/integer.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sncode {

/// Enumeration caps shared by everything that materializes group elements.
struct Limits {
  /// Largest degree for which whole classes or subgroups are streamed.
  int max_enum_degree = 10;
  /// Largest degree accepted by the purely arithmetic routines.
  int max_arith_degree = 20;
  /// Largest |A|*|B| the product oracle will run.
  std::uint64_t max_products = 100'000'000;
};

/// Weakly decreasing positive parts. Also used as a sorted list of cycle
/// lengths.
class Partition {
public:
  Partition() = default;
  /// Throws InvalidArgument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  /// Accepts "3+2+1" or "6=3+2+1"; in the second form the total is checked.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// Part i (0-based), or 0 past the end.
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  /// "3+2+1"
  std::string to_string() const;
  /// "6=3+2+1"
  std::string to_equation() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

/// Dominance order: every prefix sum of lam is at least that of mu.
bool dominates(const Partition& lam, const Partition& mu);

/// Multiplicities (i_1, ..., i_n) of cycle lengths of a permutation of degree n.
class CycleType {
public:
  CycleType() = default;
  /// `multiplicities[l-1]` is the number of l-cycles; must satisfy sum l*i_l = degree.
  CycleType(int degree, std::vector<int> multiplicities);

  static CycleType from_partition(const Partition& lengths);
  /// Parses "3+2+1"; with `degree` > 0 the total is checked against it.
  static CycleType parse(std::string_view text, int degree = 0);

  static CycleType identity(int degree);

  int degree() const { return degree_; }
  /// Number of cycles of length `length`; zero outside 1..degree.
  int multiplicity(int length) const;
  int cycle_count() const;

  /// Cycle lengths sorted decreasingly.
  Partition to_partition() const;
  std::string to_string() const { return to_partition().to_string(); }

  friend bool operator==(const CycleType&, const CycleType&) = default;

private:
  int degree_ = 0;
  std::vector<int> mult_;
};

/// n! / prod_l (l^{i_l} i_l!)
Int class_size(const CycleType& ct);

/// Element of S_n stored as a 0-based image table. Degree is bounded by
/// kMaxDegree so that values stay small enough to materialize whole classes.
class Permutation {
public:
  static constexpr int kMaxDegree = 32;

  Permutation() = default;
  explicit Permutation(int degree);
  /// Throws InvalidArgument unless `images` is a bijection on 0..n-1.
  explicit Permutation(std::span<const int> images);
  Permutation(std::initializer_list<int> images);

  /// Parses 1-based cycle notation such as "(1 2 3)(4 5)" or "()".
  static Permutation parse(std::string_view text, int degree);

  int degree() const { return degree_; }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  std::vector<int> images() const;

  bool is_identity() const;
  Permutation inverse() const;

  /// 1-based cycle notation; fixed points omitted, "()" for the identity.
  std::string to_string() const;

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation& a, const Permutation& b);
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

private:
  std::array<std::uint8_t, kMaxDegree> images_{};
  std::uint8_t degree_ = 0;
};

/// (p*q)(i) = p(q(i)): the right factor acts first.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
CycleType cycle_type_of(const Permutation& p);

/// Lehmer-code rank in 0..n!-1; lexicographic order of image tables.
std::uint64_t rank(const Permutation& p);
Permutation unrank(int degree, std::uint64_t index);

/// Ordered set partition of {1..n} into consecutive intervals.
class YoungSubgroupSpec {
public:
  /// Blocks of the given sizes, laid out left to right: sizes {k, n-k} gives Y_k.
  explicit YoungSubgroupSpec(std::vector<int> block_sizes);

  /// S_k x S_{n-k}, with S_k acting on {1..k}.
  static YoungSubgroupSpec two_block(int n, int k);
  /// Consecutive blocks with the given shape's part sizes, largest first.
  static YoungSubgroupSpec of_shape(const Partition& shape);

  int degree() const { return degree_; }
  const std::vector<int>& block_sizes() const { return sizes_; }
  Partition shape() const;
  Int order() const;

private:
  std::vector<int> sizes_;
  int degree_ = 0;
};

/// Calls `visit` once for every element of the class, in canonical order:
/// cycles are built from the smallest unused point, trying lengths in
/// increasing order and the remaining points lexicographically.
void for_each_in_class(const CycleType& ct, const std::function<void(const Permutation&)>& visit,
                       const Limits& limits = {});
std::vector<Permutation> enumerate_class(const CycleType& ct, const Limits& limits = {});

/// Calls `visit` once for every element of the Young subgroup, in
/// lexicographic order of image tables.
void for_each_in_young_subgroup(const YoungSubgroupSpec& spec,
                                const std::function<void(const Permutation&)>& visit,
                                const Limits& limits = {});
std::vector<Permutation> enumerate_young_subgroup(const YoungSubgroupSpec& spec,
                                                  const Limits& limits = {});

} // namespace sncode

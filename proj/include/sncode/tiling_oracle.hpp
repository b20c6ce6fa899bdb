#pragma once

#include "sncode/perm.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace sncode {

/// For every g in S_n, the number of pairs (a, b) in A x B with a*b = g.
/// Indexed by Lehmer rank, so the table always covers all n! elements.
class ProductCounts {
public:
  ProductCounts(int degree, std::vector<std::uint64_t> counts);

  int degree() const { return degree_; }
  std::uint64_t count(const Permutation& g) const;
  std::uint64_t count_at(std::uint64_t rank_index) const { return counts_[rank_index]; }
  const std::vector<std::uint64_t>& by_rank() const { return counts_; }
  std::uint64_t total() const;

private:
  int degree_;
  std::vector<std::uint64_t> counts_;
};

struct Witness {
  Permutation element;
  std::uint64_t count = 0;
};

struct TilingReport {
  bool is_code = false;
  std::optional<std::uint64_t> r;
  /// Lowest-rank element attaining the smallest observed count; set only
  /// when the counts are not constant.
  std::optional<Witness> witness;
  /// observed count -> number of group elements with that count
  std::map<std::uint64_t, std::uint64_t> histogram;
};

/// Brute-force multiplication of every pair. Work is split over A across
/// `threads` workers (0 picks the hardware concurrency); the result does not
/// depend on the split.
ProductCounts product_counts(std::span<const Permutation> a, std::span<const Permutation> b,
                             const Limits& limits = {}, unsigned threads = 0);

TilingReport verify_tiling(std::span<const Permutation> a, std::span<const Permutation> b,
                           const Limits& limits = {});

/// Builds the report for already computed counts.
TilingReport summarize(const ProductCounts& counts);

/// Every vertex of Cay(S_n, A) has exactly one neighbour in B, i.e. S_n = A*B
/// with r = 1. A must be inverse-closed and must not contain the identity.
/// The report has is_code true only for r = 1.
TilingReport total_perfect_code_check(std::span<const Permutation> a,
                                      std::span<const Permutation> b, const Limits& limits = {});

/// The closed unit balls of Cay(S_n, A) around B partition S_n:
/// S_n = (A + {1}) * B with r = 1.
bool perfect_code_check(std::span<const Permutation> a, std::span<const Permutation> b,
                        const Limits& limits = {});

/// Throws InvalidArgument unless A is inverse-closed and identity-free.
void validate_connection_set(std::span<const Permutation> a);

} // namespace sncode

#include "sncode/tiling_oracle.hpp"

#include "sncode/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <thread>

namespace sncode {

ProductCounts::ProductCounts(int degree, std::vector<std::uint64_t> counts)
    : degree_(degree), counts_(std::move(counts)) {
  if (static_cast<Int>(counts_.size()) != factorial(degree))
    throw InvalidArgument("product count table must cover all of S_n");
}

std::uint64_t ProductCounts::count(const Permutation& g) const {
  if (g.degree() != degree_)
    throw InvalidArgument("element degree does not match the count table");
  return counts_[rank(g)];
}

std::uint64_t ProductCounts::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

namespace {

int common_degree(std::span<const Permutation> a, std::span<const Permutation> b) {
  if (a.empty() || b.empty())
    throw InvalidArgument("product sets must be nonempty");
  int n = a.front().degree();
  auto differs = [n](const Permutation& p) { return p.degree() != n; };
  if (std::any_of(a.begin(), a.end(), differs) || std::any_of(b.begin(), b.end(), differs))
    throw InvalidArgument("product sets mix permutation degrees");
  return n;
}

void accumulate_chunk(std::span<const Permutation> a, std::span<const Permutation> b,
                      std::vector<std::uint32_t>& counts) {
  for (const Permutation& x : a)
    for (const Permutation& y : b)
      ++counts[rank(compose(x, y))];
}

} // namespace

ProductCounts product_counts(std::span<const Permutation> a, std::span<const Permutation> b,
                             const Limits& limits, unsigned threads) {
  const int n = common_degree(a, b);
  if (n > limits.max_enum_degree)
    throw LimitExceeded("degree " + std::to_string(n) + " exceeds the enumeration cap " +
                        std::to_string(limits.max_enum_degree));
  const Int products = static_cast<Int>(a.size()) * static_cast<Int>(b.size());
  if (products > static_cast<Int>(limits.max_products))
    throw LimitExceeded("refusing " + to_string(products) + " products (budget " +
                        std::to_string(limits.max_products) + ")");

  if (products > static_cast<Int>(std::numeric_limits<std::uint32_t>::max()))
    throw LimitExceeded("product budgets above 2^32 - 1 are not supported");

  const auto group_order = static_cast<std::size_t>(factorial(n));
  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  // Small jobs are not worth a thread each.
  const std::size_t min_chunk_products = 1u << 16;
  std::size_t chunks = std::min<std::size_t>(
      {threads, a.size(),
       std::max<std::size_t>(1, static_cast<std::size_t>(products) / min_chunk_products)});
  chunks = std::max<std::size_t>(chunks, 1);

  // Per-chunk counters fit in 32 bits because the budget is below 2^32.
  std::vector<std::vector<std::uint32_t>> partial(chunks);
  std::vector<std::thread> workers;
  const std::size_t step = (a.size() + chunks - 1) / chunks;
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t begin = c * step;
    std::size_t end = std::min(a.size(), begin + step);
    partial[c].assign(group_order, 0);
    if (begin >= end)
      continue;
    auto slice = a.subspan(begin, end - begin);
    if (chunks == 1)
      accumulate_chunk(slice, b, partial[c]);
    else
      workers.emplace_back(accumulate_chunk, slice, b, std::ref(partial[c]));
  }
  for (auto& w : workers)
    w.join();

  std::vector<std::uint64_t> counts(group_order, 0);
  for (const auto& chunk : partial)
    for (std::size_t i = 0; i < group_order; ++i)
      counts[i] += chunk[i];
  return ProductCounts(n, std::move(counts));
}

TilingReport summarize(const ProductCounts& counts) {
  TilingReport report;
  const auto& table = counts.by_rank();
  for (std::uint64_t c : table)
    ++report.histogram[c];
  if (report.histogram.size() == 1 && report.histogram.begin()->first > 0) {
    report.is_code = true;
    report.r = report.histogram.begin()->first;
    return report;
  }
  const std::uint64_t lowest = report.histogram.begin()->first;
  auto it = std::find(table.begin(), table.end(), lowest);
  report.witness = Witness{unrank(counts.degree(), static_cast<std::uint64_t>(it - table.begin())),
                           lowest};
  return report;
}

TilingReport verify_tiling(std::span<const Permutation> a, std::span<const Permutation> b,
                           const Limits& limits) {
  return summarize(product_counts(a, b, limits));
}

void validate_connection_set(std::span<const Permutation> a) {
  std::set<Permutation> members(a.begin(), a.end());
  for (const Permutation& p : a) {
    if (p.is_identity())
      throw InvalidArgument("connection set contains the identity");
    if (!members.contains(p.inverse()))
      throw InvalidArgument("connection set is not inverse-closed: missing inverse of " +
                            p.to_string());
  }
}

TilingReport total_perfect_code_check(std::span<const Permutation> a,
                                      std::span<const Permutation> b, const Limits& limits) {
  validate_connection_set(a);
  ProductCounts counts = product_counts(a, b, limits);
  TilingReport report = summarize(counts);
  if (report.is_code && *report.r != 1) {
    // Constant but not 1: every vertex is a deviation, report the identity.
    report.is_code = false;
    report.witness = Witness{Permutation(counts.degree()), *report.r};
    report.r.reset();
  }
  return report;
}

bool perfect_code_check(std::span<const Permutation> a, std::span<const Permutation> b,
                        const Limits& limits) {
  validate_connection_set(a);
  std::vector<Permutation> closed(a.begin(), a.end());
  if (b.empty())
    throw InvalidArgument("code must be nonempty");
  closed.emplace_back(b.front().degree());
  TilingReport report = verify_tiling(closed, b, limits);
  return report.is_code && *report.r == 1;
}

} // namespace sncode

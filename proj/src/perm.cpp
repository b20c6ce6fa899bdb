#include "sncode/perm.hpp"

#include "sncode/error.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <numeric>
#include <sstream>

namespace sncode {

namespace {

int parse_positive(std::string_view token, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value <= 0)
    throw InvalidArgument("expected a positive integer in " + std::string(context) + ", got '" +
                          std::string(token) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

void check_enum_degree(int degree, const Limits& limits) {
  if (degree > limits.max_enum_degree)
    throw LimitExceeded("degree " + std::to_string(degree) + " exceeds the enumeration cap " +
                        std::to_string(limits.max_enum_degree));
}

void build_partitions(int remaining, int max_part, std::vector<int>& prefix,
                      std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    build_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidArgument("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  std::optional<int> total;
  if (auto eq = text.find('='); eq != std::string_view::npos) {
    total = parse_positive(trim(text.substr(0, eq)), "partition total");
    text = trim(text.substr(eq + 1));
  }
  std::vector<int> parts;
  while (true) {
    auto plus = text.find('+');
    parts.push_back(parse_positive(trim(text.substr(0, plus)), "partition"));
    if (plus == std::string_view::npos)
      break;
    text = text.substr(plus + 1);
  }
  Partition p(std::move(parts));
  if (total && *total != p.size())
    throw InvalidArgument("partition parts sum to " + std::to_string(p.size()) + ", not " +
                          std::to_string(*total));
  return p;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0)
      out += '+';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Partition::to_equation() const { return std::to_string(n_) + "=" + to_string(); }

std::vector<Partition> partitions_of(int n) {
  if (n < 1)
    throw InvalidArgument("partitions_of needs n >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  build_partitions(n, n, prefix, out);
  return out;
}

bool dominates(const Partition& lam, const Partition& mu) {
  if (lam.size() != mu.size())
    throw InvalidArgument("dominance compares partitions of different sizes");
  int lam_sum = 0;
  int mu_sum = 0;
  for (int i = 0; i < std::max(lam.length(), mu.length()); ++i) {
    lam_sum += lam.part(i);
    mu_sum += mu.part(i);
    if (lam_sum < mu_sum)
      return false;
  }
  return true;
}

// CycleType

CycleType::CycleType(int degree, std::vector<int> multiplicities)
    : degree_(degree), mult_(std::move(multiplicities)) {
  if (degree < 1)
    throw InvalidArgument("cycle type degree must be positive");
  if (static_cast<int>(mult_.size()) > degree)
    throw InvalidArgument("more multiplicities than the degree");
  mult_.resize(static_cast<std::size_t>(degree), 0);
  int total = 0;
  for (int l = 1; l <= degree; ++l) {
    int m = mult_[static_cast<std::size_t>(l - 1)];
    if (m < 0)
      throw InvalidArgument("negative cycle multiplicity");
    total += l * m;
  }
  if (total != degree)
    throw InvalidArgument("cycle lengths sum to " + std::to_string(total) + ", not " +
                          std::to_string(degree));
}

CycleType CycleType::from_partition(const Partition& lengths) {
  if (lengths.size() < 1)
    throw InvalidArgument("empty cycle type");
  std::vector<int> mult(static_cast<std::size_t>(lengths.size()), 0);
  for (int part : lengths.parts())
    ++mult[static_cast<std::size_t>(part - 1)];
  return CycleType(lengths.size(), std::move(mult));
}

CycleType CycleType::parse(std::string_view text, int degree) {
  // Cycle lengths may be given in any order.
  Partition raw;
  {
    std::vector<int> parts;
    std::string_view rest = trim(text);
    while (true) {
      auto plus = rest.find('+');
      parts.push_back(parse_positive(trim(rest.substr(0, plus)), "cycle type"));
      if (plus == std::string_view::npos)
        break;
      rest = rest.substr(plus + 1);
    }
    std::sort(parts.rbegin(), parts.rend());
    raw = Partition(std::move(parts));
  }
  if (degree > 0 && raw.size() != degree)
    throw InvalidArgument("cycle type '" + std::string(text) + "' has degree " +
                          std::to_string(raw.size()) + ", expected " + std::to_string(degree));
  return from_partition(raw);
}

CycleType CycleType::identity(int degree) { return CycleType(degree, {degree}); }

int CycleType::multiplicity(int length) const {
  if (length < 1 || length > degree_)
    return 0;
  return mult_[static_cast<std::size_t>(length - 1)];
}

int CycleType::cycle_count() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

Partition CycleType::to_partition() const {
  std::vector<int> parts;
  for (int l = degree_; l >= 1; --l)
    parts.insert(parts.end(), static_cast<std::size_t>(multiplicity(l)), l);
  return Partition(std::move(parts));
}

Int class_size(const CycleType& ct) {
  Int centralizer = 1;
  for (int l = 1; l <= ct.degree(); ++l) {
    int m = ct.multiplicity(l);
    for (int i = 0; i < m; ++i)
      centralizer = checked_mul(centralizer, l);
    centralizer = checked_mul(centralizer, factorial(m));
  }
  return factorial(ct.degree()) / centralizer;
}

// Permutation

Permutation::Permutation(int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw InvalidArgument("permutation degree must be in 1.." + std::to_string(kMaxDegree));
  degree_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < degree; ++i)
    images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Permutation::Permutation(std::span<const int> images) {
  int n = static_cast<int>(images.size());
  if (n < 1 || n > kMaxDegree)
    throw InvalidArgument("permutation degree must be in 1.." + std::to_string(kMaxDegree));
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < n; ++i) {
    int v = images[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw InvalidArgument("image table is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
    images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
  }
  degree_ = static_cast<std::uint8_t>(n);
}

Permutation::Permutation(std::initializer_list<int> images)
    : Permutation(std::span<const int>(images.begin(), images.size())) {}

Permutation Permutation::parse(std::string_view text, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  std::string_view rest = trim(text);
  if (rest.empty())
    throw InvalidArgument("empty cycle notation");
  while (!rest.empty()) {
    if (rest.front() != '(')
      throw InvalidArgument("cycle notation must start with '(': '" + std::string(text) + "'");
    auto close = rest.find(')');
    if (close == std::string_view::npos)
      throw InvalidArgument("unterminated cycle in '" + std::string(text) + "'");
    std::vector<int> cycle;
    std::istringstream in{std::string(rest.substr(1, close - 1))};
    std::string token;
    while (in >> token) {
      int point = parse_positive(token, "cycle notation");
      if (point > degree)
        throw InvalidArgument("point " + token + " exceeds degree " + std::to_string(degree));
      if (used[static_cast<std::size_t>(point - 1)])
        throw InvalidArgument("point " + token + " appears twice in '" + std::string(text) + "'");
      used[static_cast<std::size_t>(point - 1)] = true;
      cycle.push_back(point - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    rest = trim(rest.substr(close + 1));
  }
  return Permutation(std::span<const int>(images));
}

std::vector<int> Permutation::images() const {
  return std::vector<int>(images_.begin(), images_.begin() + degree_);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i)
    if (images_[static_cast<std::size_t>(i)] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation out = *this;
  for (int i = 0; i < degree_; ++i)
    out.images_[images_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  std::array<bool, kMaxDegree> seen{};
  for (int start = 0; start < degree_; ++start) {
    if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start)
      continue;
    out += '(';
    int point = start;
    bool first = true;
    do {
      if (!first)
        out += ' ';
      first = false;
      out += std::to_string(point + 1);
      seen[static_cast<std::size_t>(point)] = true;
      point = (*this)(point);
    } while (point != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

bool operator==(const Permutation& a, const Permutation& b) {
  return a.degree_ == b.degree_ &&
         std::equal(a.images_.begin(), a.images_.begin() + a.degree_, b.images_.begin());
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0)
    return c;
  return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.begin() + a.degree_,
                                                b.images_.begin(), b.images_.begin() + b.degree_);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InvalidArgument("cannot compose permutations of degrees " + std::to_string(p.degree()) +
                          " and " + std::to_string(q.degree()));
  Permutation out;
  out.degree_ = p.degree_;
  for (std::size_t i = 0; i < p.degree_; ++i)
    out.images_[i] = p.images_[q.images_[i]];
  return out;
}

Permutation inverse(const Permutation& p) { return p.inverse(); }

CycleType cycle_type_of(const Permutation& p) {
  std::vector<int> mult(static_cast<std::size_t>(p.degree()), 0);
  std::array<bool, Permutation::kMaxDegree> seen{};
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)])
      continue;
    int length = 0;
    for (int point = start; !seen[static_cast<std::size_t>(point)]; point = p(point)) {
      seen[static_cast<std::size_t>(point)] = true;
      ++length;
    }
    ++mult[static_cast<std::size_t>(length - 1)];
  }
  return CycleType(p.degree(), std::move(mult));
}

std::uint64_t rank(const Permutation& p) {
  if (p.degree() > 20)
    throw LimitExceeded("rank needs degree <= 20");
  std::uint64_t index = 0;
  for (int i = 0; i < p.degree(); ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j < p.degree(); ++j)
      if (p(j) < p(i))
        ++smaller_later;
    index = index * static_cast<std::uint64_t>(p.degree() - i) +
            static_cast<std::uint64_t>(smaller_later);
  }
  return index;
}

Permutation unrank(int degree, std::uint64_t index) {
  if (degree < 1 || degree > 20)
    throw LimitExceeded("unrank needs degree in 1..20");
  std::vector<int> digits(static_cast<std::size_t>(degree));
  for (int i = degree - 1; i >= 0; --i) {
    auto base = static_cast<std::uint64_t>(degree - i);
    digits[static_cast<std::size_t>(i)] = static_cast<int>(index % base);
    index /= base;
  }
  if (index != 0)
    throw InvalidArgument("rank out of range for the degree");
  std::vector<int> pool(static_cast<std::size_t>(degree));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> images;
  for (int d : digits) {
    images.push_back(pool[static_cast<std::size_t>(d)]);
    pool.erase(pool.begin() + d);
  }
  return Permutation(std::span<const int>(images));
}

// Young subgroups

YoungSubgroupSpec::YoungSubgroupSpec(std::vector<int> block_sizes) : sizes_(std::move(block_sizes)) {
  if (sizes_.empty())
    throw InvalidArgument("a Young subgroup needs at least one block");
  for (int s : sizes_) {
    if (s < 1)
      throw InvalidArgument("Young subgroup blocks must be nonempty");
    degree_ += s;
  }
}

YoungSubgroupSpec YoungSubgroupSpec::two_block(int n, int k) {
  if (k < 1 || k >= n)
    throw InvalidArgument("two-block Young subgroup needs 1 <= k < n");
  return YoungSubgroupSpec({k, n - k});
}

YoungSubgroupSpec YoungSubgroupSpec::of_shape(const Partition& shape) {
  return YoungSubgroupSpec(shape.parts());
}

Partition YoungSubgroupSpec::shape() const {
  std::vector<int> parts = sizes_;
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

Int YoungSubgroupSpec::order() const {
  Int out = 1;
  for (int s : sizes_)
    out = checked_mul(out, factorial(s));
  return out;
}

// Enumeration

namespace {

struct ClassBuilder {
  int n;
  std::vector<int> mult;  // remaining cycles by length - 1
  std::vector<int> images;
  std::vector<bool> used;
  const std::function<void(const Permutation&)>& visit;

  void place_next() {
    int start = 0;
    while (start < n && used[static_cast<std::size_t>(start)])
      ++start;
    if (start == n) {
      visit(Permutation(std::span<const int>(images)));
      return;
    }
    for (int length = 1; length <= n - start; ++length) {
      if (mult[static_cast<std::size_t>(length - 1)] == 0)
        continue;
      --mult[static_cast<std::size_t>(length - 1)];
      used[static_cast<std::size_t>(start)] = true;
      extend_cycle(start, start, length - 1);
      used[static_cast<std::size_t>(start)] = false;
      ++mult[static_cast<std::size_t>(length - 1)];
    }
  }

  // Chooses the next `left` points of the cycle through `start`.
  void extend_cycle(int start, int last, int left) {
    if (left == 0) {
      images[static_cast<std::size_t>(last)] = start;
      place_next();
      return;
    }
    for (int next = start + 1; next < n; ++next) {
      if (used[static_cast<std::size_t>(next)])
        continue;
      used[static_cast<std::size_t>(next)] = true;
      images[static_cast<std::size_t>(last)] = next;
      extend_cycle(start, next, left - 1);
      used[static_cast<std::size_t>(next)] = false;
    }
  }
};

} // namespace

void for_each_in_class(const CycleType& ct, const std::function<void(const Permutation&)>& visit,
                       const Limits& limits) {
  check_enum_degree(ct.degree(), limits);
  int n = ct.degree();
  std::vector<int> mult(static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l)
    mult[static_cast<std::size_t>(l - 1)] = ct.multiplicity(l);
  ClassBuilder builder{n, std::move(mult), std::vector<int>(static_cast<std::size_t>(n), 0),
                       std::vector<bool>(static_cast<std::size_t>(n), false), visit};
  builder.place_next();
}

std::vector<Permutation> enumerate_class(const CycleType& ct, const Limits& limits) {
  std::vector<Permutation> out;
  check_enum_degree(ct.degree(), limits);
  out.reserve(static_cast<std::size_t>(class_size(ct)));
  for_each_in_class(ct, [&](const Permutation& p) { out.push_back(p); }, limits);
  return out;
}

void for_each_in_young_subgroup(const YoungSubgroupSpec& spec,
                                const std::function<void(const Permutation&)>& visit,
                                const Limits& limits) {
  check_enum_degree(spec.degree(), limits);
  std::vector<int> images(static_cast<std::size_t>(spec.degree()));
  std::iota(images.begin(), images.end(), 0);
  std::vector<int> offsets;
  int offset = 0;
  for (int s : spec.block_sizes()) {
    offsets.push_back(offset);
    offset += s;
  }
  while (true) {
    visit(Permutation(std::span<const int>(images)));
    // Odometer: advance the last block, carrying into earlier ones on wrap.
    int block = static_cast<int>(offsets.size()) - 1;
    for (; block >= 0; --block) {
      auto first = images.begin() + offsets[static_cast<std::size_t>(block)];
      auto last = first + spec.block_sizes()[static_cast<std::size_t>(block)];
      if (std::next_permutation(first, last))
        break;
    }
    if (block < 0)
      return;
  }
}

std::vector<Permutation> enumerate_young_subgroup(const YoungSubgroupSpec& spec,
                                                  const Limits& limits) {
  std::vector<Permutation> out;
  check_enum_degree(spec.degree(), limits);
  out.reserve(static_cast<std::size_t>(spec.order()));
  for_each_in_young_subgroup(spec, [&](const Permutation& p) { out.push_back(p); }, limits);
  return out;
}

} // namespace sncode

#include "sncode/report.hpp"

#include "sncode/characters.hpp"
#include "sncode/code_criterion.hpp"
#include "sncode/error.hpp"
#include "sncode/tiling_oracle.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

namespace sncode::report {

using nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "json")
    return Format::json;
  if (name == "csv")
    return Format::csv;
  if (name == "text")
    return Format::text;
  throw InvalidArgument("unknown output format '" + std::string(name) + "'");
}

RunConfig RunConfig::from_environment() {
  RunConfig config;
  if (const char* raw = std::getenv("SNCODE_MAX_DEGREE"); raw != nullptr && *raw != '\0') {
    std::string_view text(raw);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1)
      throw InvalidArgument("SNCODE_MAX_DEGREE must be a positive integer, got '" +
                            std::string(text) + "'");
    config.limits.max_enum_degree = value;
  }
  return config;
}

bool VerifyRecord::consistent() const {
  if (is_code != theorem || theorem != characters)
    return false;
  return !is_code || (r && predicted_r && static_cast<std::int64_t>(*r) == *predicted_r);
}

bool SearchRecord::consistent() const {
  for (const SearchRow& row : rows) {
    if (!row.brute)
      continue;
    if (*row.brute != row.criterion)
      return false;
    if (row.r && row.brute_r && static_cast<std::int64_t>(*row.brute_r) != *row.r)
      return false;
  }
  return true;
}

// Commands

ClassifyRecord run_classify(int n, int k, std::string_view cycle_type, const RunConfig& config) {
  CodeQuery q = CodeQuery::make(n, k, CycleType::parse(cycle_type, n));
  ClassifyRecord rec;
  rec.n = n;
  rec.k = k;
  rec.cycle_type = q.cycle_type().to_string();
  rec.j = q.j();
  rec.theorem = theorem_classify(q);
  rec.failing_m = first_nonvanishing_m(q, config.limits);
  rec.characters = !rec.failing_m.has_value();
  if (rec.characters)
    rec.r = to_int64(compute_r(q));
  return rec;
}

VerifyRecord run_verify(int n, int k, std::string_view cycle_type, const RunConfig& config) {
  CodeQuery q = CodeQuery::make(n, k, CycleType::parse(cycle_type, n));
  auto cls = enumerate_class(q.cycle_type(), config.limits);
  auto young = enumerate_young_subgroup(YoungSubgroupSpec::two_block(n, k), config.limits);
  TilingReport tiling = verify_tiling(cls, young, config.limits);

  VerifyRecord rec;
  rec.n = n;
  rec.k = k;
  rec.cycle_type = q.cycle_type().to_string();
  rec.products = static_cast<std::uint64_t>(cls.size()) * young.size();
  rec.is_code = tiling.is_code;
  rec.r = tiling.r;
  if (tiling.witness) {
    rec.witness = tiling.witness->element.to_string();
    rec.witness_count = tiling.witness->count;
  }
  rec.histogram = tiling.histogram;
  rec.theorem = theorem_classify(q);
  rec.characters = char_criterion(q, config.limits);
  if (rec.characters)
    rec.predicted_r = to_int64(compute_r(q));
  return rec;
}

SearchRecord run_search(int n, int k, bool brute, const RunConfig& config) {
  SearchRecord rec;
  rec.n = n;
  rec.k = k;
  rec.brute = brute;
  for (const CodeEntry& entry : search_codes(n, k, config.limits)) {
    SearchRow row;
    row.cycle_type = entry.cycle_type.to_string();
    row.r = to_int64(entry.r);
    if (brute) {
      auto cls = enumerate_class(entry.cycle_type, config.limits);
      auto young = enumerate_young_subgroup(YoungSubgroupSpec::two_block(n, k), config.limits);
      TilingReport tiling = verify_tiling(cls, young, config.limits);
      row.brute = tiling.is_code;
      row.brute_r = tiling.r;
    }
    rec.rows.push_back(std::move(row));
  }
  return rec;
}

SearchRecord run_shape_search(std::string_view shape, bool brute, const RunConfig& config) {
  Partition lam = Partition::parse(shape);
  const int n = lam.size();
  if (n > config.limits.max_arith_degree)
    throw LimitExceeded("degree " + std::to_string(n) + " exceeds the arithmetic cap " +
                        std::to_string(config.limits.max_arith_degree));
  YoungSubgroupSpec spec = YoungSubgroupSpec::of_shape(lam);
  std::vector<Permutation> young;
  if (brute)
    young = enumerate_young_subgroup(spec, config.limits);

  SearchRecord rec;
  rec.n = n;
  rec.shape = lam.to_string();
  rec.brute = brute;
  const Int order = factorial(n);
  for (const Partition& lengths : partitions_of(n)) {
    CycleType ct = CycleType::from_partition(lengths);
    SearchRow row;
    row.cycle_type = ct.to_string();
    row.criterion = young_criterion_general(lam, ct);
    if (brute) {
      auto cls = enumerate_class(ct, config.limits);
      TilingReport tiling = verify_tiling(cls, young, config.limits);
      row.brute = tiling.is_code;
      row.brute_r = tiling.r;
    }
    if (!row.criterion && !row.brute.value_or(false))
      continue;
    if (row.criterion) {
      Int products = checked_mul(class_size(ct), spec.order());
      if (products % order == 0)
        row.r = to_int64(products / order);
    }
    rec.rows.push_back(std::move(row));
  }
  return rec;
}

CharRecord run_char(int n, std::string_view shape, std::string_view cycle_type,
                    std::string_view method, const RunConfig& config) {
  Partition lam = Partition::parse(shape);
  if (lam.size() != n)
    throw InvalidArgument("shape " + lam.to_string() + " is not a partition of " +
                          std::to_string(n));
  CycleType ct = CycleType::parse(cycle_type, n);
  if (method != "frobenius" && method != "mn" && method != "both")
    throw InvalidArgument("method must be frobenius, mn or both");
  const bool two_row = lam.length() <= 2;
  if (method == "frobenius" && !two_row)
    throw InvalidArgument("the frobenius method only handles two-row shapes, got " +
                          lam.to_string());

  CharRecord rec;
  rec.n = n;
  rec.shape = lam.to_string();
  rec.cycle_type = ct.to_string();
  rec.method = std::string(method);
  if (method == "frobenius") {
    rec.value = to_int64(two_row_char(ct, lam.part(1), config.limits));
    return rec;
  }
  Int value = mn_character(lam, ct);
  if (method == "both" && two_row) {
    Int frob = two_row_char(ct, lam.part(1), config.limits);
    if (frob != value)
      throw CrossCheckFailure("Frobenius gives " + to_string(frob) + " but Murnaghan-Nakayama gives " +
                              to_string(value) + " for shape " + lam.to_string() + " on " +
                              ct.to_string());
  }
  rec.value = to_int64(value);
  return rec;
}

// JSON

namespace {

template <typename T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

template <typename T>
std::string optional_text(const std::optional<T>& v) {
  if (!v)
    return "";
  if constexpr (std::is_same_v<T, std::string>)
    return *v;
  else if constexpr (std::is_same_v<T, bool>)
    return bool_text(*v);
  else
    return std::to_string(*v);
}

ordered_json histogram_json(const std::map<std::uint64_t, std::uint64_t>& histogram) {
  ordered_json out = ordered_json::array();
  for (const auto& [count, elements] : histogram)
    out.push_back({{"count", count}, {"elements", elements}});
  return out;
}

std::string histogram_text(const std::map<std::uint64_t, std::uint64_t>& histogram) {
  std::string out;
  for (const auto& [count, elements] : histogram) {
    if (!out.empty())
      out += ';';
    out += std::to_string(count) + ":" + std::to_string(elements);
  }
  return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace

ordered_json to_json(const ClassifyRecord& rec) {
  return {{"schema", kSchemaVersion},   {"command", "classify"},
          {"n", rec.n},                 {"k", rec.k},
          {"cycle_type", rec.cycle_type}, {"j", rec.j},
          {"theorem", rec.theorem},     {"characters", rec.characters},
          {"r", optional_json(rec.r)},  {"failing_m", optional_json(rec.failing_m)}};
}

ordered_json to_json(const VerifyRecord& rec) {
  ordered_json witness = nullptr;
  if (rec.witness)
    witness = {{"element", *rec.witness}, {"count", *rec.witness_count}};
  return {{"schema", kSchemaVersion},
          {"command", "verify"},
          {"n", rec.n},
          {"k", rec.k},
          {"cycle_type", rec.cycle_type},
          {"products", rec.products},
          {"is_code", rec.is_code},
          {"r", optional_json(rec.r)},
          {"witness", witness},
          {"histogram", histogram_json(rec.histogram)},
          {"theorem", rec.theorem},
          {"characters", rec.characters},
          {"predicted_r", optional_json(rec.predicted_r)},
          {"consistent", rec.consistent()}};
}

ordered_json to_json(const SearchRecord& rec) {
  ordered_json rows = ordered_json::array();
  for (const SearchRow& row : rec.rows) {
    ordered_json j = {{"cycle_type", row.cycle_type}, {"r", optional_json(row.r)}};
    if (rec.shape)
      j["criterion"] = row.criterion;
    j["brute"] = optional_json(row.brute);
    j["brute_r"] = optional_json(row.brute_r);
    rows.push_back(std::move(j));
  }
  ordered_json out = {{"schema", kSchemaVersion}, {"command", "search"}, {"n", rec.n}};
  out["k"] = optional_json(rec.k);
  if (rec.shape) {
    out["shape"] = *rec.shape;
    out["note"] = "conjectural beyond two-row shapes";
  }
  out["brute"] = rec.brute;
  out["codes"] = std::move(rows);
  out["consistent"] = rec.consistent();
  return out;
}

ordered_json to_json(const CharRecord& rec) {
  return {{"schema", kSchemaVersion}, {"command", "char"},         {"n", rec.n},
          {"shape", rec.shape},       {"cycle_type", rec.cycle_type}, {"method", rec.method},
          {"value", rec.value}};
}

// Rendering

std::string render(const ClassifyRecord& rec, Format format) {
  switch (format) {
  case Format::json:
    return dump(to_json(rec));
  case Format::csv:
    return "n,k,cycle_type,j,theorem,characters,r,failing_m\n" + std::to_string(rec.n) + "," +
           std::to_string(rec.k) + "," + rec.cycle_type + "," + std::to_string(rec.j) + "," +
           bool_text(rec.theorem) + "," + bool_text(rec.characters) + "," + optional_text(rec.r) +
           "," + optional_text(rec.failing_m) + "\n";
  case Format::text:
    break;
  }
  std::ostringstream out;
  out << "n=" << rec.n << " k=" << rec.k << " j=" << rec.j << " cycle_type=" << rec.cycle_type
      << "\n";
  out << "theorem: " << bool_text(rec.theorem) << "\n";
  out << "characters: " << bool_text(rec.characters) << "\n";
  if (rec.r)
    out << "r: " << *rec.r << "\n";
  if (rec.failing_m)
    out << "failing_m: " << *rec.failing_m << "\n";
  if (!rec.consistent())
    out << "MISMATCH: cycle-type rule and character criterion disagree\n";
  return out.str();
}

std::string render(const VerifyRecord& rec, Format format) {
  switch (format) {
  case Format::json:
    return dump(to_json(rec));
  case Format::csv:
    return "n,k,cycle_type,is_code,r,witness,witness_count,theorem,characters,histogram\n" +
           std::to_string(rec.n) + "," + std::to_string(rec.k) + "," + rec.cycle_type + "," +
           bool_text(rec.is_code) + "," + optional_text(rec.r) + "," + optional_text(rec.witness) +
           "," + optional_text(rec.witness_count) + "," + bool_text(rec.theorem) + "," +
           bool_text(rec.characters) + "," + histogram_text(rec.histogram) + "\n";
  case Format::text:
    break;
  }
  std::ostringstream out;
  out << "n=" << rec.n << " k=" << rec.k << " cycle_type=" << rec.cycle_type << "\n";
  out << "products: " << rec.products << "\n";
  out << "histogram (count: elements):\n";
  for (const auto& [count, elements] : rec.histogram)
    out << "  " << count << ": " << elements << "\n";
  out << "is_code: " << bool_text(rec.is_code) << "\n";
  if (rec.r)
    out << "r: " << *rec.r << "\n";
  if (rec.witness)
    out << "witness: " << *rec.witness << " count " << *rec.witness_count << "\n";
  out << "theorem: " << bool_text(rec.theorem) << "\n";
  out << "characters: " << bool_text(rec.characters) << "\n";
  if (!rec.consistent())
    out << "MISMATCH: oracle and criteria disagree\n";
  return out.str();
}

std::string render(const SearchRecord& rec, Format format) {
  switch (format) {
  case Format::json:
    return dump(to_json(rec));
  case Format::csv: {
    std::string out = rec.shape ? "shape,cycle_type,criterion,r,brute,brute_r\n"
                                : "n,k,cycle_type,r,brute,brute_r\n";
    for (const SearchRow& row : rec.rows) {
      if (rec.shape)
        out += *rec.shape + "," + row.cycle_type + "," + bool_text(row.criterion);
      else
        out += std::to_string(rec.n) + "," + std::to_string(*rec.k) + "," + row.cycle_type;
      out += "," + optional_text(row.r) + "," + optional_text(row.brute) + "," +
             optional_text(row.brute_r) + "\n";
    }
    return out;
  }
  case Format::text:
    break;
  }
  std::ostringstream out;
  if (rec.shape)
    out << "shape=" << *rec.shape << " (conjectural beyond two-row shapes)\n";
  else
    out << "n=" << rec.n << " k=" << *rec.k << "\n";
  if (rec.rows.empty()) {
    out << "no codes\n";
    return out.str();
  }
  out << "cycle_type r";
  if (rec.shape)
    out << " criterion";
  if (rec.brute)
    out << " brute brute_r";
  out << "\n";
  for (const SearchRow& row : rec.rows) {
    out << row.cycle_type << " " << (row.r ? std::to_string(*row.r) : "-");
    if (rec.shape)
      out << " " << bool_text(row.criterion);
    if (rec.brute)
      out << " " << optional_text(row.brute) << " "
          << (row.brute_r ? std::to_string(*row.brute_r) : "-");
    out << "\n";
  }
  if (!rec.consistent())
    out << "MISMATCH: oracle and criterion disagree\n";
  return out.str();
}

std::string render(const CharRecord& rec, Format format) {
  switch (format) {
  case Format::json:
    return dump(to_json(rec));
  case Format::csv:
    return "n,shape,cycle_type,method,value\n" + std::to_string(rec.n) + "," + rec.shape + "," +
           rec.cycle_type + "," + rec.method + "," + std::to_string(rec.value) + "\n";
  case Format::text:
    break;
  }
  return std::to_string(rec.value) + "\n";
}

} // namespace sncode::report

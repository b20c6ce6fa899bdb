#pragma once

// Records produced by the command-line front end and their JSON / CSV / text
// renderings. Field names and CSV headers are part of the tool's interface;
// see README.md.

#include "sncode/perm.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace sncode::report {

inline constexpr int kSchemaVersion = 1;

enum class Format { json, csv, text };

Format parse_format(std::string_view name);

struct RunConfig {
  Limits limits;
  Format format = Format::text;

  /// Applies SNCODE_MAX_DEGREE when set.
  static RunConfig from_environment();
};

/// Exit status of the tool.
enum class Status : int { ok = 0, usage = 1, limit = 2, cross_check = 3 };

struct ClassifyRecord {
  int n = 0;
  int k = 0;
  std::string cycle_type;
  int j = 0;
  bool theorem = false;
  bool characters = false;
  std::optional<std::int64_t> r;
  std::optional<int> failing_m;

  bool consistent() const { return theorem == characters; }
};

struct VerifyRecord {
  int n = 0;
  int k = 0;
  std::string cycle_type;
  std::uint64_t products = 0;
  bool is_code = false;
  std::optional<std::uint64_t> r;
  std::optional<std::string> witness;
  std::optional<std::uint64_t> witness_count;
  std::map<std::uint64_t, std::uint64_t> histogram;
  bool theorem = false;
  bool characters = false;
  std::optional<std::int64_t> predicted_r;

  bool consistent() const;
};

struct SearchRow {
  std::string cycle_type;
  std::optional<std::int64_t> r;
  /// Character test for general shapes; always true for two-row searches.
  bool criterion = true;
  /// Oracle verdict, present with --brute.
  std::optional<bool> brute;
  std::optional<std::uint64_t> brute_r;
};

struct SearchRecord {
  int n = 0;
  std::optional<int> k;
  /// Set for general Young shapes; those results are conjectural.
  std::optional<std::string> shape;
  bool brute = false;
  std::vector<SearchRow> rows;

  bool consistent() const;
};

struct CharRecord {
  int n = 0;
  std::string shape;
  std::string cycle_type;
  std::string method;
  std::int64_t value = 0;
};

ClassifyRecord run_classify(int n, int k, std::string_view cycle_type, const RunConfig& config);
VerifyRecord run_verify(int n, int k, std::string_view cycle_type, const RunConfig& config);
SearchRecord run_search(int n, int k, bool brute, const RunConfig& config);
/// Exploratory search over every class for the Young subgroup of `shape`.
SearchRecord run_shape_search(std::string_view shape, bool brute, const RunConfig& config);
/// `method` is "frobenius", "mn" or "both".
CharRecord run_char(int n, std::string_view shape, std::string_view cycle_type,
                    std::string_view method, const RunConfig& config);

nlohmann::ordered_json to_json(const ClassifyRecord& rec);
nlohmann::ordered_json to_json(const VerifyRecord& rec);
nlohmann::ordered_json to_json(const SearchRecord& rec);
nlohmann::ordered_json to_json(const CharRecord& rec);

std::string render(const ClassifyRecord& rec, Format format);
std::string render(const VerifyRecord& rec, Format format);
std::string render(const SearchRecord& rec, Format format);
std::string render(const CharRecord& rec, Format format);

} // namespace sncode::report

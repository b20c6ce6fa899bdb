// sncode: decide, search and verify conjugacy-class codes S_n = X * Y_k.

#include "sncode/error.hpp"
#include "sncode/report.hpp"

#include <iostream>
#include <string>

#include "CLI11.hpp"

using namespace sncode;
using namespace sncode::report;

namespace {

int exit_code(Status s) { return static_cast<int>(s); }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy-class codes against Young subgroups of S_n"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  int max_degree = 0;
  std::uint64_t max_products = 0;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--max-degree", max_degree, "Enumeration cap (default 10, or SNCODE_MAX_DEGREE)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-products", max_products, "Oracle budget |A|*|B| (default 1e8)")
      ->check(CLI::PositiveNumber);

  int n = 0;
  int k = 0;
  std::string cycle_type;
  std::string shape;
  std::string method = "both";
  bool brute = false;

  auto* classify = app.add_subcommand("classify", "Decide a class by the cycle-type rule and by characters");
  classify->add_option("-n", n, "Degree")->required();
  classify->add_option("-k", k, "Block size of Y_k")->required();
  classify->add_option("-t,--type", cycle_type, "Cycle type, e.g. 3+2+1")->required();

  auto* verify = app.add_subcommand("verify", "Count all products X*Y_k by brute force");
  verify->add_option("-n", n, "Degree")->required();
  verify->add_option("-k", k, "Block size of Y_k")->required();
  verify->add_option("-t,--type", cycle_type, "Cycle type, e.g. 3+2+1")->required();

  auto* search = app.add_subcommand("search", "List every class that tiles against Y_k");
  search->add_option("-n", n, "Degree");
  search->add_option("-k", k, "Block size of Y_k");
  search->add_option("-l,--shape", shape,
                     "Explore a general Young subgroup shape instead (conjectural)");
  search->add_flag("--brute", brute, "Re-verify each row with the product oracle");

  auto* chr = app.add_subcommand("char", "Evaluate an irreducible character of S_n");
  chr->add_option("-n", n, "Degree")->required();
  chr->add_option("-l,--shape", shape, "Shape, e.g. 4+2")->required();
  chr->add_option("-t,--type", cycle_type, "Cycle type, e.g. 3+2+1")->required();
  chr->add_option("--method", method, "frobenius, mn or both")
      ->check(CLI::IsMember({"frobenius", "mn", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_code(Status::usage);
  }

  try {
    RunConfig config = RunConfig::from_environment();
    config.format = parse_format(format_name);
    if (max_degree > 0)
      config.limits.max_enum_degree = max_degree;
    if (max_products > 0)
      config.limits.max_products = max_products;

    if (*classify) {
      ClassifyRecord rec = run_classify(n, k, cycle_type, config);
      std::cout << render(rec, config.format);
      if (!rec.consistent()) {
        std::cerr << "error: cycle-type rule and character criterion disagree\n";
        return exit_code(Status::cross_check);
      }
      return exit_code(Status::ok);
    }
    if (*verify) {
      VerifyRecord rec = run_verify(n, k, cycle_type, config);
      std::cout << render(rec, config.format);
      if (!rec.consistent()) {
        std::cerr << "error: brute-force oracle disagrees with the criteria\n";
        return exit_code(Status::cross_check);
      }
      return exit_code(Status::ok);
    }
    if (*search) {
      SearchRecord rec;
      if (!shape.empty()) {
        rec = run_shape_search(shape, brute, config);
      } else {
        if (search->count("-n") == 0 || search->count("-k") == 0)
          throw InvalidArgument("search needs -n and -k, or --shape");
        rec = run_search(n, k, brute, config);
      }
      std::cout << render(rec, config.format);
      if (!rec.consistent()) {
        std::cerr << "error: brute-force oracle disagrees with the criterion\n";
        return exit_code(Status::cross_check);
      }
      return exit_code(Status::ok);
    }
    if (*chr) {
      std::cout << render(run_char(n, shape, cycle_type, method, config), config.format);
      return exit_code(Status::ok);
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(Status::usage);
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (*verify || brute)
      std::cerr << "hint: lower n, raise --max-products, or use classify only\n";
    return exit_code(Status::limit);
  } catch (const CrossCheckFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(Status::cross_check);
  }
  return exit_code(Status::usage);
}

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hgs/hgs.hpp"

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kIoOrParse = 1;
constexpr int kUnsupported = 2;
constexpr int kBraceLaw = 3;

int exit_code_for(hgs::ErrorCode code) {
  switch (code) {
    case hgs::ErrorCode::UnsupportedOrder:
    case hgs::ErrorCode::OrderTooLarge:
    case hgs::ErrorCode::CatalogIncompleteForOrder:
      return kUnsupported;
    case hgs::ErrorCode::BraceLawViolated:
    case hgs::ErrorCode::IdentityMismatch:
      return kBraceLaw;
    default:
      return kIoOrParse;
  }
}

/// A catalog name, or failing that a group file.
hgs::FiniteGroup load_group(const std::string& source, bool heavy) {
  if (std::filesystem::is_regular_file(source)) return hgs::read_group(source);
  return hgs::catalog_group(source, {heavy}).group;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    hgs::detail::write_file(out, text);
}

struct EnumerateArgs {
  std::string source;
  std::string out;
  std::string format = "json";
  std::size_t bound = 27;
  bool heavy = false;
};

int run_enumerate(const EnumerateArgs& a) {
  const hgs::FiniteGroup circ = load_group(a.source, a.heavy);
  const auto reports = hgs::enumerate_reports(circ, {a.bound, a.heavy});
  std::size_t cyclic = 0, surjective = 0;
  for (const auto& r : reports) {
    cyclic += hgs::is_cyclic(r.operation);
    surjective += r.is_surjective;
  }
  emit(a.format == "table" ? hgs::format_reports_table(reports) : hgs::format_reports(reports), a.out);
  std::cout << "total=" << reports.size() << " cyclic_type=" << cyclic << " surjective=" << surjective << '\n';
  return kOk;
}

int run_verify(const std::string& suite, const hgs::VerifyOptions& options) {
  bool all_ok = true;
  for (const auto& c : hgs::run_suite(suite, options)) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " | " << c.detail << '\n';
    if (!c.passed && all_ok) std::cerr << "first failure: " << c.name << ": " << c.detail << '\n';
    all_ok = all_ok && c.passed;
  }
  return all_ok ? kOk : kIoOrParse;
}

int run_analyze(const std::string& circ_source, const std::string& dot_file, const std::string& out) {
  const hgs::FiniteGroup circ = load_group(circ_source, true);
  const hgs::FiniteGroup dot = hgs::read_group(dot_file);
  if (dot.order() != circ.order()) throw hgs::Error(hgs::ErrorCode::IdentityMismatch, "the two tables have different orders");
  emit(hgs::format_reports({hgs::analyze(hgs::make_brace(dot, circ))}), out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf-Galois structures via skew braces"};
  app.require_subcommand(1);

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "all structures on a Galois group, as reports");
  enumerate->add_option("group", en.source, "catalog name or group file")->required();
  enumerate->add_option("--out", en.out, "write reports here instead of stdout");
  enumerate->add_option("--format", en.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  enumerate->add_option("--bound", en.bound, "largest order to enumerate");
  enumerate->add_flag("--enable-heavy-orders", en.heavy, "allow elementary abelian groups of order 16 and 27");

  std::string suite;
  hgs::VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "axioms, bijection, byott, paper-numbers, childs or all")
      ->required()
      ->check(CLI::IsMember(hgs::verify_suite_names()));
  verify->add_flag("--oracle-order-8", vopts.oracle_order_8, "include order 8 in the Sym(n) oracle comparison");

  std::string circ_source, dot_file, analyze_out;
  auto* analyze = app.add_subcommand("analyze", "report for one brace");
  analyze->add_option("circ", circ_source, "catalog name or group file for the Galois group")->required();
  analyze->add_option("dot", dot_file, "group file with the second operation")->required();
  analyze->add_option("--out", analyze_out, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors share exit 1 with I/O and parse failures; --help stays 0.
    const int code = app.exit(e);
    return code == 0 ? kOk : kIoOrParse;
  }

  try {
    if (*enumerate) return run_enumerate(en);
    if (*verify) return run_verify(suite, vopts);
    if (*analyze) return run_analyze(circ_source, dot_file, analyze_out);
  } catch (const hgs::BraceLawError& e) {
    std::cerr << e.what() << " triple=(" << e.a() << "," << e.b() << "," << e.c() << ")\n";
    return kBraceLaw;
  } catch (const hgs::Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kIoOrParse;
  }
  return kOk;
}

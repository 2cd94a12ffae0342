// kmorbit: classify nilpotent elements of affine sl_n and act on them.
//
// Exit codes: 0 ok, 1 selfcheck failure, 2 bad input, 3 not nilpotent,
// 4 precision exhausted, 5 not conjugate, 6 other algebraic error.

#include "kmorbit/documents.hpp"
#include "kmorbit/error.hpp"
#include "kmorbit/orbits.hpp"
#include "kmorbit/selfcheck.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace kmorbit;

namespace {

enum Exit { ok = 0, selfcheck_failed = 1, bad_input = 2, not_nilpotent = 3, precision = 4, not_conjugate = 5, algebra = 6 };

struct Globals {
  int prec = kDefaultWorkingPrecision;
  std::string form = "killing";
  bool json_out = false;

  AlgebraOptions algebra() const {
    AlgebraOptions o;
    o.working_prec = prec;
    o.form = form == "trace" ? FormNormalization::trace : FormNormalization::killing;
    return o;
  }
};

json read_document(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in)
      throw InvalidInput("cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

std::string matrix_rows(const MatK& m) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += i ? "; " : "";
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out += (j ? " " : "") + format_laurent(m(i, j));
  }
  return out + "]";
}

json label_json(const OrbitLabel& l) {
  return {{"partition", l.partition}, {"k", l.k}, {"level", l.level.to_string()}};
}

int cmd_classify(const Globals& g, const std::string& file) {
  const AffineElement a = element_from_json(read_document(file));
  const OrbitLabel label = classify(a, g.algebra());
  if (g.json_out)
    std::cout << label_json(label).dump() << "\n";
  else
    std::cout << label << "\n";
  return ok;
}

int cmd_enumerate(const Globals& g, int n, const std::string& level_text, const std::string& format) {
  if (n < 1)
    throw InvalidInput("-n must be at least 1");
  const GaussianRational level = parse_scalar(level_text);
  const auto entries = enumerate_orbits(n, level);
  if (format == "json" || g.json_out) {
    json rows = json::array();
    for (const auto& e : entries) {
      json row = label_json(e.label);
      row["matrix"] = matrix_to_json(e.rep);
      rows.push_back(std::move(row));
    }
    std::cout << rows.dump(2) << "\n";
    return ok;
  }
  std::size_t width = 9;
  for (const auto& e : entries)
    width = std::max(width, format_partition(e.label.partition).size());
  std::cout << std::left << std::setw(static_cast<int>(width) + 2) << "partition"
            << "k  level  representative\n";
  for (const auto& e : entries)
    std::cout << std::setw(static_cast<int>(width) + 2) << format_partition(e.label.partition)
              << std::setw(3) << e.label.k << std::setw(7) << e.label.level.to_string()
              << matrix_rows(e.rep) << "\n";
  return ok;
}

int cmd_act(const Globals& g, const std::string& group_file, const std::string& elem_file) {
  const GroupElement h = group_from_json(read_document(group_file), g.prec);
  const AffineElement a = element_from_json(read_document(elem_file));
  std::cout << element_to_json(adjoint_act(h, a, g.algebra())).dump(2) << "\n";
  return ok;
}

int cmd_bracket(const Globals& g, const std::string& a_file, const std::string& b_file) {
  const AffineElement a = element_from_json(read_document(a_file));
  const AffineElement b = element_from_json(read_document(b_file));
  std::cout << element_to_json(bracket(a, b, g.algebra())).dump(2) << "\n";
  return ok;
}

int cmd_conjugator(const Globals& g, const std::string& from_file, const std::string& to_file) {
  const AffineElement a = element_from_json(read_document(from_file));
  const AffineElement b = element_from_json(read_document(to_file));
  const GroupElement h =
      conjugator_quasi_jordan(QuasiJordanForm::from_matrix(a.mat()), QuasiJordanForm::from_matrix(b.mat()), g.prec);
  std::cout << group_to_json(h).dump(2) << "\n";
  return ok;
}

int cmd_selfcheck(const Globals& g, std::uint64_t seed, int cases) {
  SelfcheckOptions opts;
  opts.seed = seed;
  opts.cases = cases;
  opts.algebra = g.algebra();
  const auto reports = run_selfcheck(opts);
  int passed = 0, failed = 0;
  json out = json::array();
  for (const auto& r : reports) {
    passed += r.passed;
    failed += r.failed;
    if (g.json_out) {
      out.push_back({{"suite", r.name}, {"passed", r.passed}, {"failed", r.failed},
                     {"counterexample", r.counterexample}});
      continue;
    }
    std::cout << (r.failed ? "FAIL " : "ok   ") << r.name << ": " << r.passed << "/" << r.passed + r.failed
              << "\n";
    if (r.failed)
      std::cout << "     counterexample: " << r.counterexample << "\n";
  }
  if (g.json_out)
    std::cout << json{{"seed", seed}, {"suites", out}}.dump(2) << "\n";
  else
    std::cout << "seed " << seed << ": " << passed << " passed, " << failed << " failed\n";
  return failed ? selfcheck_failed : ok;
}

int report(int code, const std::string& what) {
  std::cerr << "kmorbit: " << what << "\n";
  return code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotent orbits of affine sl_n: classification, adjoint action, conjugators"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--prec", g.prec, "Working precision (series terms)")
      ->default_val(kDefaultWorkingPrecision)
      ->check(CLI::Range(1, 100000));
  app.add_option("--form", g.form, "Invariant form normalization")
      ->default_val("killing")
      ->check(CLI::IsMember({"killing", "trace"}));
  app.add_flag("--json", g.json_out, "Machine-readable output");

  std::string file, second;
  auto* classify_cmd = app.add_subcommand("classify", "Orbit label (partition, k, level) of an element");
  classify_cmd->add_option("file", file, "Element document (- for stdin)")->required();

  int n = 0;
  std::string level = "0", format = "table";
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Canonical representatives of every orbit");
  enumerate_cmd->add_option("-n", n, "Matrix size")->required();
  enumerate_cmd->add_option("--level", level, "Level (Q(i) literal)")->default_val("0");
  enumerate_cmd->add_option("--format", format, "table or json")
      ->default_val("table")
      ->check(CLI::IsMember({"table", "json"}));

  auto* act_cmd = app.add_subcommand("act", "Apply a group element to an element");
  act_cmd->add_option("group", file, "Group document")->required();
  act_cmd->add_option("element", second, "Element document")->required();

  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two elements");
  bracket_cmd->add_option("a", file, "Element document")->required();
  bracket_cmd->add_option("b", second, "Element document")->required();

  auto* conj_cmd = app.add_subcommand("conjugator", "Diagonal conjugator between quasi-Jordan forms");
  conj_cmd->add_option("from", file, "Element document with quasi-Jordan matrix")->required();
  conj_cmd->add_option("to", second, "Element document with quasi-Jordan matrix")->required();

  std::uint64_t seed = SelfcheckOptions{}.seed;
  int cases = SelfcheckOptions{}.cases;
  auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Run the bundled invariant suites");
  selfcheck_cmd->add_option("--seed", seed, "Generator seed");
  selfcheck_cmd->add_option("--cases", cases, "Cases per suite")->check(CLI::Range(1, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }

  try {
    if (*classify_cmd)
      return cmd_classify(g, file);
    if (*enumerate_cmd)
      return cmd_enumerate(g, n, level, format);
    if (*act_cmd)
      return cmd_act(g, file, second);
    if (*bracket_cmd)
      return cmd_bracket(g, file, second);
    if (*conj_cmd)
      return cmd_conjugator(g, file, second);
    if (*selfcheck_cmd)
      return cmd_selfcheck(g, seed, cases);
  } catch (const SyntaxError& e) {
    return report(bad_input, std::string("syntax error: ") + e.what());
  } catch (const InvalidInput& e) {
    return report(bad_input, e.what());
  } catch (const DimensionMismatch& e) {
    return report(bad_input, e.what());
  } catch (const InvalidPartition& e) {
    return report(bad_input, e.what());
  } catch (const InvalidShift& e) {
    return report(bad_input, e.what());
  } catch (const ShapeMismatch& e) {
    return report(bad_input, e.what());
  } catch (const NotNilpotent& e) {
    return report(not_nilpotent, e.what());
  } catch (const PrecisionExhausted& e) {
    return report(precision, std::string(e.what()) + " (retry with a larger --prec)");
  } catch (const NotConjugate& e) {
    return report(not_conjugate, e.what());
  } catch (const Error& e) {
    return report(algebra, e.what());
  } catch (const std::exception& e) {
    return report(algebra, std::string("internal error: ") + e.what());
  }
  return bad_input;
}

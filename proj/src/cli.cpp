#include "oneplane/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "oneplane/analysis.hpp"
#include "oneplane/constructions.hpp"
#include "oneplane/io.hpp"
#include "oneplane/saturation.hpp"
#include "oneplane/search.hpp"

namespace oneplane {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw FormatError(0, "cannot open '" + path + "' for writing");
  file << content;
}

DrawingClass parse_class(const std::string& name) {
  auto cls = class_from_name(name);
  if (!cls) throw CLI::ValidationError("--class", "unknown class '" + name + "'");
  return *cls;
}

const char* status_str(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::NotApplicable: return "N/A";
  }
  return "?";
}

void print_check(std::ostream& out, const std::string& name, const CheckResult& check,
                 bool& any_fail) {
  out << "CHECK " << name << " " << status_str(check.status);
  if (check.failed()) {
    any_fail = true;
    if (!check.witness.empty()) out << " " << check.witness;
  }
  out << "\n";
}

int cmd_gen(const std::string& family, int k, const std::string& output,
            std::ostream& out) {
  Drawing d = [&] {
    if (family == "hstar") return gen_h_star();
    if (family == "mstar") return gen_m_star();
    if (family == "hk") return gen_h(k);
    if (family == "hprime") return gen_h_prime(k);
    if (family == "mk") return gen_m(k);
    if (family == "mprime") return gen_m_prime(k);
    throw CLI::ValidationError("--family", "unknown family '" + family + "'");
  }();
  write_output(output, serialize_drawing(d), out);
  return kOk;
}

int cmd_validate(const std::string& file, DrawingClass cls, std::ostream& out) {
  Drawing d = parse_drawing(read_file(file));
  ValidationReport report = validate(d, cls);
  out << "VALIDATE class=" << class_name(cls) << " ok=" << (report.ok ? "true" : "false")
      << "\n";
  for (const CrossingViolation& v : report.violations) {
    out << "violation crossing " << v.a << " crossing " << v.b;
    if (!v.shared.empty()) {
      out << " shared=";
      for (size_t i = 0; i < v.shared.size(); ++i)
        out << (i ? "," : "") << v.shared[i];
    }
    out << "\n";
  }
  return report.ok ? kOk : kCheckFailed;
}

int cmd_census(const std::string& file, std::ostream& out) {
  Drawing d = parse_drawing(read_file(file));
  Census cen = census(d);
  out << "n=" << cen.n << " m=" << cen.m << " c=" << cen.c << " h=" << cen.h
      << " t=" << cen.t << "\n";
  for (const auto& [size, counts] : cen.face_histogram)
    out << "f" << size << " true=" << counts.first << " false=" << counts.second << "\n";
  return kOk;
}

int cmd_saturate(const std::string& file, DrawingClass cls, const std::string& output,
                 const std::string& log_path, std::ostream& out) {
  Drawing d = parse_drawing(read_file(file));
  SaturationResult result = saturate(d, cls);
  write_output(output, serialize_drawing(result.drawing), out);
  if (!log_path.empty()) write_output(log_path, serialize_log(result.log), out);
  return kOk;
}

int cmd_verify(const std::string& file, const std::string& class_arg, bool assert_maximal,
               std::ostream& out) {
  Drawing d = parse_drawing(read_file(file));
  DrawingClass cls;
  if (!class_arg.empty()) {
    cls = parse_class(class_arg);
  } else if (validate(d, DrawingClass::Plane).ok) {
    cls = DrawingClass::Plane;
  } else if (validate(d, DrawingClass::IcPlane).ok) {
    cls = DrawingClass::IcPlane;
  } else if (validate(d, DrawingClass::NicPlane).ok) {
    cls = DrawingClass::NicPlane;
  } else {
    cls = DrawingClass::OnePlane;
  }

  bool any_fail = false;
  CheckResult class_check;
  class_check.status = validate(d, cls).ok ? CheckStatus::Pass : CheckStatus::Fail;
  print_check(out, std::string("class_") + class_name(cls), class_check, any_fail);

  bool maximal_confirmed = false;
  if (assert_maximal) {
    maximal_confirmed = validate(d, cls).ok && is_maximal(d, cls);
    CheckResult check;
    check.status = maximal_confirmed ? CheckStatus::Pass : CheckStatus::Fail;
    print_check(out, "maximal", check, any_fail);
  }

  StructureReport structure = verify_structure(d, maximal_confirmed);
  for (auto& [name, check] : structure.items()) print_check(out, name, *check, any_fail);
  BoundReport bounds = verify_bounds(census(d), cls, maximal_confirmed);
  for (auto& [name, check] : bounds.items()) print_check(out, name, *check, any_fail);

  return any_fail ? kCheckFailed : kOk;
}

int cmd_export(const std::string& file, const std::string& output, std::ostream& out) {
  Drawing d = parse_drawing(read_file(file));
  write_output(output, to_dot(d), out);
  return kOk;
}

int cmd_search_enum(int n, DrawingClass cls, int c_max, long long budget,
                    const std::string& witness_path, std::ostream& out) {
  EnumResult result = enumerate_maximal_small(n, cls, c_max, budget);
  out << "RESULT n=" << result.n << " class=" << class_name(result.cls)
      << " examined=" << result.examined << " maximal=" << result.maximal
      << " min_edges=" << result.min_edges_maximal << "\n";
  if (!witness_path.empty() && result.witness)
    write_output(witness_path, serialize_drawing(*result.witness), out);
  return kOk;
}

int cmd_search_random(int n, DrawingClass cls, std::uint64_t seed,
                      const std::string& output, std::ostream& out) {
  Drawing d = random_saturated(n, cls, seed);
  out << "RANDOM n=" << n << " class=" << class_name(cls) << " seed=" << seed
      << " m=" << d.edges().size() << "\n";
  if (!output.empty()) write_output(output, serialize_drawing(d), out);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"1-plane, IC-plane and NIC-plane drawing toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a family drawing");
  std::string family;
  int k = 1;
  std::string gen_output;
  gen->add_option("--family", family, "hstar|hk|hprime|mstar|mk|mprime")->required();
  gen->add_option("--k", k, "family index (k >= 1)");
  gen->add_option("-o,--output", gen_output, "output file (stdout if omitted)");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check class membership");
  std::string validate_class;
  std::string validate_file;
  validate_cmd->add_option("--class", validate_class, "plane|1p|ic|nic")->required();
  validate_cmd->add_option("file", validate_file, "drawing file")->required();

  // census
  auto* census_cmd = app.add_subcommand("census", "print drawing counts");
  std::string census_file;
  census_cmd->add_option("file", census_file, "drawing file")->required();

  // saturate
  auto* saturate_cmd = app.add_subcommand("saturate", "add edges until maximal");
  std::string saturate_class, saturate_output, saturate_log, saturate_file;
  saturate_cmd->add_option("--class", saturate_class, "plane|1p|ic|nic")->required();
  saturate_cmd->add_option("-o,--output", saturate_output, "output drawing file");
  saturate_cmd->add_option("--log", saturate_log, "insertion log file");
  saturate_cmd->add_option("file", saturate_file, "drawing file")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run structure and bound checks");
  bool verify_all = false;
  bool verify_maximal = false;
  std::string verify_class, verify_file;
  verify_cmd->add_flag("--all", verify_all, "run every check");
  verify_cmd->add_option("--class", verify_class, "plane|1p|ic|nic");
  verify_cmd->add_flag("--maximal", verify_maximal, "assert maximality (checked)");
  verify_cmd->add_option("file", verify_file, "drawing file")->required();

  // search
  auto* search_cmd = app.add_subcommand("search", "enumerate or sample drawings");
  bool search_enum = false, search_random = false;
  int search_n = 4, search_cmax = 1;
  long long search_budget = 500'000'000;
  std::uint64_t search_seed = 0;
  std::string search_class, search_witness, search_output;
  search_cmd->add_flag("--enum", search_enum, "exhaustive enumeration");
  search_cmd->add_flag("--random", search_random, "one seeded random drawing");
  search_cmd->add_option("--n", search_n, "vertex count")->required();
  search_cmd->add_option("--class", search_class, "plane|1p|ic|nic")->required();
  search_cmd->add_option("--cmax", search_cmax, "max crossings (enum)");
  search_cmd->add_option("--budget", search_budget, "work limit (enum)");
  search_cmd->add_option("--seed", search_seed, "rng seed (random)");
  search_cmd->add_option("--witness", search_witness, "witness drawing file (enum)");
  search_cmd->add_option("-o,--output", search_output, "output drawing file (random)");

  // export
  auto* export_cmd = app.add_subcommand("export", "export planarization");
  bool export_dot = false;
  std::string export_file, export_output;
  export_cmd->add_flag("--dot", export_dot, "DOT format");
  export_cmd->add_option("file", export_file, "drawing file")->required();
  export_cmd->add_option("-o,--output", export_output, "output file (stdout if omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(family, k, gen_output, out);
    if (validate_cmd->parsed())
      return cmd_validate(validate_file, parse_class(validate_class), out);
    if (census_cmd->parsed()) return cmd_census(census_file, out);
    if (saturate_cmd->parsed())
      return cmd_saturate(saturate_file, parse_class(saturate_class), saturate_output,
                          saturate_log, out);
    if (verify_cmd->parsed())
      return cmd_verify(verify_file, verify_class, verify_maximal, out);
    if (search_cmd->parsed()) {
      if (search_enum == search_random)
        throw CLI::ValidationError("search", "pass exactly one of --enum / --random");
      DrawingClass cls = parse_class(search_class);
      if (search_enum)
        return cmd_search_enum(search_n, cls, search_cmax, search_budget,
                               search_witness, out);
      return cmd_search_random(search_n, cls, search_seed, search_output, out);
    }
    if (export_cmd->parsed()) return cmd_export(export_file, export_output, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DrawingError& e) {
    // Structural problems in input files are format-level failures; errors
    // raised by requested operations are check failures.
    if (e.code() == ErrorCode::BudgetExceeded || e.code() == ErrorCode::ClassViolation) {
      err << "ERROR " << e.what() << "\n";
      return kCheckFailed;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace oneplane

#include "straightedge/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "straightedge/brackets.hpp"
#include "straightedge/io.hpp"
#include "straightedge/oracle.hpp"
#include "straightedge/svg.hpp"

namespace straightedge {

int exit_code(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::OnCubic:
      return kOnCubic;
    case VerdictKind::NotOnCubic:
      return kNotOnCubic;
    case VerdictKind::Degenerate:
      return kDegenerate;
  }
  return kDegenerate;
}

PartitionScheme parse_partition(const std::string& text) {
  std::optional<std::vector<int>> s1, t1;
  std::stringstream parts(text);
  for (std::string part; std::getline(parts, part, ';');) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw InputError("partition: expected name=indices in '" + part + "'");
    std::string name = part.substr(0, eq);
    name.erase(0, name.find_first_not_of(' '));
    name.erase(name.find_last_not_of(' ') + 1);
    std::vector<int> idx;
    std::stringstream items(part.substr(eq + 1));
    for (std::string item; std::getline(items, item, ',');) {
      try {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(item);
        idx.push_back(v - 1);
      } catch (const std::logic_error&) {
        throw InputError("partition: bad index '" + item + "'");
      }
    }
    if (name == "s1") s1 = idx;
    else if (name == "t1") t1 = idx;
    else throw InputError("partition: unknown set '" + name + "' (expected s1 and t1)");
  }
  if (!s1 || !t1) throw InputError("partition: both s1 and t1 are required");
  return PartitionScheme::from_sets(*s1, *t1);
}

namespace {

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(path + ": invalid JSON: " + e.what());
  }
}

std::vector<Point> load_points(const std::string& path, std::size_t expected) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_points(buf.str(), expected);
}

struct RunFlags {
  std::string partition;
  std::uint64_t seed = 0;
  std::size_t max_retries = 64;
};

CheckOptions check_options(const RunFlags& f) {
  CheckOptions o;
  o.max_schemes = f.max_retries;
  o.auxiliary.seed = f.seed;
  if (!f.partition.empty()) o.first_scheme = parse_partition(f.partition);
  return o;
}

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--partition", f.partition, "Scheme tried first, e.g. \"s1=1,2,3,4,5;t1=3,4,5,6,7\"");
  cmd->add_option("--seed", f.seed, "Seed for the auxiliary-point sequence");
  cmd->add_option("--max-retries", f.max_retries, "Number of partition schemes to attempt")
      ->check(CLI::PositiveNumber);
}

int run_verify(const std::string& file, const RunFlags& flags, const std::optional<std::string>& trace_path,
               bool trace_stdout, const std::string& svg_path, std::ostream& out, std::ostream& err) {
  auto points = load_points(file, 10);
  CheckResult r = check_ten_on_cubic(points, check_options(flags));
  out << to_string(r.verdict.kind) << "\n";
  out << "reason: " << r.verdict.reason << "\n";
  out << "schemes tried: " << r.schemes_tried << (r.used_fallback ? " (seven-on-a-conic fallback)" : "") << "\n";
  if (r.trace) {
    out << "[P2, U, V] = " << to_string(r.trace->collinearity) << "\n";
    if (trace_stdout) out << trace_to_json(*r.trace).dump(2) << "\n";
    if (trace_path) {
      std::ofstream f(*trace_path);
      if (!f) throw std::runtime_error("cannot write " + *trace_path);
      f << trace_to_json(*r.trace).dump(2) << "\n";
    }
    if (!svg_path.empty()) emit_svg(*r.trace, svg_path);
  } else if (trace_stdout || trace_path || !svg_path.empty()) {
    err << "no construction trace: every scheme degenerated\n";
  }
  for (const auto& line : r.log) err << "retry: " << line << "\n";
  return exit_code(r.verdict.kind);
}

int run_oracle(const std::string& file, std::ostream& out) {
  auto points = load_points(file, 0);
  if (points.size() != 10) throw InputError("expected 10 points, got " + std::to_string(points.size()));
  Rational det = cubic_det(points);
  bool on = is_zero(det);
  out << to_string(on ? VerdictKind::OnCubic : VerdictKind::NotOnCubic) << "\n";
  out << "det: " << to_string(det) << "\n";
  return on ? kOnCubic : kNotOnCubic;
}

std::vector<BinomialRelation> read_relations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::vector<BinomialRelation> out;
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_relation(line));
    } catch (const BracketError& e) {
      throw InputError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

int run_certificate(const std::string& file, const RunFlags& flags, const std::string& relations_path,
                    std::ostream& out, std::ostream& err) {
  nlohmann::json doc = read_json(file);
  std::optional<ConstructionTrace> trace;
  if (is_trace_document(doc)) {
    trace = trace_from_json(doc);
    auto bad = incidence_violations(*trace);
    if (!bad.empty()) {
      err << "error: trace is inconsistent: " << bad.front() << "\n";
      return kDegenerate;
    }
  } else {
    auto points = parse_points(doc.dump(), 10);
    CheckResult r = check_ten_on_cubic(points, check_options(flags));
    if (!r.trace) {
      err << "error: no construction trace (" << to_string(r.verdict.kind) << ": " << r.verdict.reason << ")\n";
      return kDegenerate;
    }
    trace = std::move(r.trace);
  }
  auto relations = relations_path.empty() ? certificate_relations() : read_relations(relations_path);
  CertificateReport rep = verify_certificate(*trace, relations);
  out << "reduction: " << equation_string(rep.reduction.relation) << "\n";
  out << "conclusion " << to_string(certificate_conclusion()) << ": "
      << (rep.reduces_to_conclusion ? "matched" : "not matched") << "\n";
  for (const auto& [rel, ok] : rep.checks) out << (ok ? "PASS " : "FAIL ") << to_string(rel) << "\n";
  out << "passed: " << rep.passed() << "/" << rep.checks.size() << "\n";
  out << "vanishing cancelled brackets:";
  if (rep.vanishing_cancelled.empty()) out << " none";
  for (const auto& s : rep.vanishing_cancelled) out << " " << to_string(s);
  out << "\n";
  out << "radicands:";
  for (const auto& d : rep.radicands) out << " " << to_string(d);
  out << "\n";
  out << "P2, U, V collinear: " << (rep.conclusion_holds ? "yes" : "no") << "\n";
  return rep.conclusive() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact straightedge test for ten points on a plane cubic"};
  app.require_subcommand(1);

  std::string file;
  RunFlags flags;
  std::optional<std::string> trace_path;
  bool trace_flag = false;
  std::string svg_path;
  std::string relations_path;

  auto* verify = app.add_subcommand("verify", "Decide by straightedge construction");
  verify->add_option("file", file, "Point document")->required();
  auto* trace_opt = verify->add_option("--trace", trace_path, "Write the JSON trace (stdout without PATH)")
                        ->expected(0, 1);
  verify->add_option("--svg", svg_path, "Write an SVG diagram");
  add_run_flags(verify, flags);

  auto* oracle = app.add_subcommand("oracle", "Decide by the 10x10 determinant");
  oracle->add_option("file", file, "Point document")->required();

  auto* cert = app.add_subcommand("certificate", "Check the bracket certificate on a configuration");
  cert->add_option("file", file, "Point or trace document")->required();
  cert->add_option("--relations", relations_path, "One relation per line instead of the built-in 25");
  add_run_flags(cert, flags);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }
  trace_flag = trace_opt->count() > 0;
  bool trace_stdout = trace_flag && (!trace_path || trace_path->empty());
  if (trace_stdout) trace_path.reset();

  try {
    if (*verify) return run_verify(file, flags, trace_path, trace_stdout, svg_path, out, err);
    if (*oracle) return run_oracle(file, out);
    return run_certificate(file, flags, relations_path, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace straightedge

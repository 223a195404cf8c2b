#include "hirano_cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hirano/blockthm.hpp"
#include "hirano/decomp.hpp"
#include "hirano/drazin.hpp"
#include "hirano/error.hpp"
#include "hirano/genfuzz.hpp"
#include "hirano/json_io.hpp"
#include "hirano/poly.hpp"

namespace hirano::cli {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text << '\n';
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
      return kUsage;
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NotSquare:
    case ErrorKind::ArityMismatch:
      return kDimension;
    case ErrorKind::NotHirano:
    case ErrorKind::NotStronglyDrazin:
    case ErrorKind::Singular:
    case ErrorKind::HypothesesFail:
      return kNonexistence;
    default:
      return kInternal;
  }
}

std::string yes_no(const std::optional<std::size_t>& e) {
  return e ? "yes (exponent " + std::to_string(*e) + ")" : "no";
}

TheoremId theorem_from(const std::string& text) {
  const auto id = parse_theorem_id(text);
  if (!id) throw Error(ErrorKind::InvalidArgument, "unknown theorem id '" + text + "'");
  return *id;
}

// --- check -----------------------------------------------------------------

int cmd_check(const std::string& path, std::ostream& out) {
  const Matrix a = matrix_from_json(read_file(path));
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "check needs a square matrix");
  out << "size: " << a.rows() << "x" << a.cols() << '\n';
  out << "index: " << drazin_index(a) << '\n';
  out << "nilpotent: " << yes_no(nilpotency_exponent(a)) << '\n';
  out << "strongly-drazin: " << yes_no(is_strongly_drazin_invertible(a)) << '\n';
  out << "hirano: " << yes_no(is_hirano_invertible(a)) << '\n';
  const Poly p = char_poly(a);
  out << "char-poly: " << to_string(p) << '\n';
  const auto f = factor_unit_roots(p);
  out << "factorization: " << (f ? to_string(*f) : std::string("none over {x, x-1, x+1}")) << '\n';
  return kOk;
}

// --- invert ----------------------------------------------------------------

int cmd_invert(const std::string& path, const std::string& kind, std::ostream& out, std::ostream& err) {
  const Matrix a = matrix_from_json(read_file(path));
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "invert needs a square matrix");
  json j;
  j["kind"] = kind;
  if (kind == "drazin") {
    const DrazinData d = drazin_inverse(a);
    j["inverse"] = json::parse(matrix_to_json(d.inverse));
    j["certificate"] = json::parse(drazin_to_json(d));
  } else if (kind == "strong") {
    if (!is_strongly_drazin_invertible(a)) {
      err << "strongly Drazin inverse does not exist: A - A^2 is not nilpotent\n"
          << matrix_to_json(a - a * a) << '\n';
      return kNonexistence;
    }
    const StrongDrazinCert c = strongly_drazin_inverse(a);
    j["inverse"] = json::parse(matrix_to_json(c.z));
    j["certificate"] = json::parse(cert_to_json(c));
  } else {
    if (!is_hirano_invertible(a)) {
      err << "Hirano inverse does not exist: A - A^3 is not nilpotent\n"
          << matrix_to_json(a - power(a, 3)) << '\n';
      return kNonexistence;
    }
    const HiranoCert c = hirano_inverse(a);
    j["inverse"] = json::parse(matrix_to_json(c.z));
    j["certificate"] = json::parse(cert_to_json(c));
  }
  out << j.dump(2) << '\n';
  return kOk;
}

// --- decompose -------------------------------------------------------------

int cmd_decompose(const std::string& path, const std::string& mode, const std::string& prefix, std::ostream& out,
                  std::ostream& err) {
  const Matrix a = matrix_from_json(read_file(path));
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "decompose needs a square matrix");
  SplitPair s{a, a};
  if (mode == "tripotent") {
    if (!is_hirano_invertible(a)) {
      err << "no tripotent split: A - A^3 is not nilpotent\n" << matrix_to_json(a - power(a, 3)) << '\n';
      return kNonexistence;
    }
    s = tripotent_nilpotent(a);
  } else if (mode == "idempotent") {
    if (!is_strongly_drazin_invertible(a)) {
      err << "no idempotent split: A - A^2 is not nilpotent\n" << matrix_to_json(a - a * a) << '\n';
      return kNonexistence;
    }
    s = idempotent_nilpotent(a);
  } else {
    s = jordan_chevalley(a);
  }
  json j = json::parse(split_to_json(s));
  j["mode"] = mode;
  out << j.dump(2) << '\n';
  if (!prefix.empty()) {
    write_file(prefix + ".structured.json", matrix_to_json(s.structured));
    write_file(prefix + ".nilpotent.json", matrix_to_json(s.nilpotent));
  }
  return kOk;
}

// --- theorem ---------------------------------------------------------------

int cmd_theorem(const std::string& id_text, const std::string& path, bool as_stated, std::ostream& out) {
  const TheoremId id = theorem_from(id_text);
  const BlockInstance inst = blocks_from_json(read_file(path));
  const TheoremReport report = verify_conclusion(id, inst, as_stated ? Profile::AsStated : Profile::Default);
  out << report_to_json(report) << '\n';
  return kOk;
}

// --- fuzz ------------------------------------------------------------------

struct FuzzOptions {
  std::string id;
  std::size_t trials = 100;
  std::optional<std::size_t> size;
  std::uint64_t seed = 1;
  int entry_bound = 3;
  std::string drop;
  std::string out_path;
  unsigned threads = 0;
  bool as_stated = false;
};

void save_counterexample(const Counterexample& ce, TheoremId id, const FuzzOptions& o, const GenConfig& cfg,
                         std::ostream& out) {
  const Profile profile = o.as_stated ? Profile::AsStated : Profile::Default;
  const std::string path = o.out_path.empty()
                               ? "counterexample-" + std::string(to_string(id)) + "-" + std::to_string(ce.seed) + ".json"
                               : o.out_path;
  write_file(path, counterexample_to_json(ce, id, o.drop, profile, cfg));
  out << "counterexample: trial " << ce.trial << ", seed " << ce.seed << ", size " << ce.block_size << ", verdict "
      << to_string(ce.report.verdict) << '\n';
  out << "target: " << (ce.report.target_exponent ? "in" : "not in") << " class " << to_string(ce.report.target_class)
      << '\n';
  out << "written: " << path << '\n';
}

int cmd_fuzz(const FuzzOptions& o, std::ostream& out) {
  const TheoremId id = theorem_from(o.id);
  const Profile profile = o.as_stated ? Profile::AsStated : Profile::Default;
  GenConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.entry_bound = o.entry_bound;
  if (o.size) {
    if (*o.size == 0) throw Error(ErrorKind::InvalidArgument, "--size must be positive");
    cfg.block_size = *o.size;
  }

  auto header = [&] {
    out << "theorem: " << to_string(id) << '\n';
    out << "profile: " << (o.as_stated ? "as-stated" : "default") << '\n';
    out << "seed: " << o.seed << '\n';
  };

  if (!o.drop.empty()) {
    const ProbeResult r = necessity_probe(id, o.drop, cfg, profile);
    header();
    out << "mode: probe\n";
    out << "dropped: " << r.dropped << '\n';
    out << "trials: " << r.trials_run << '\n';
    out << "generation-failures: " << r.generation_failures << '\n';
    if (r.counterexample) {
      save_counterexample(*r.counterexample, id, o, cfg, out);
    } else {
      out << "counterexample: none\n";
    }
    return kOk;
  }

  std::vector<std::size_t> sizes;
  if (o.size) {
    sizes.push_back(*o.size);
  } else {
    sizes = {2, 3, 4};
  }
  const SweepSummary s = soundness_sweep(id, cfg, profile, sizes, o.threads);
  header();
  out << "mode: sweep\n";
  out << "trials: " << s.trials << '\n';
  out << "verified: " << s.verified << '\n';
  out << "hypotheses-fail: " << s.hypotheses_fail << '\n';
  out << "conclusion-fail: " << s.conclusion_fail << '\n';
  out << "generation-failures: " << s.generation_failures << '\n';
  for (const auto& [name, count] : s.side_condition_failures) {
    out << "side-condition-failures: " << name << " " << count << '\n';
  }
  for (const auto& [n, count] : s.nonvacuous_by_size) {
    out << "all-blocks-nonzero: size " << n << " " << count << '\n';
  }
  if (s.counterexamples.empty()) {
    out << "counterexample: none\n";
  } else {
    save_counterexample(s.counterexamples.front(), id, o, cfg, out);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Drazin, strongly Drazin and Hirano inverses; block-matrix theorem checks", "hirano"};
  app.require_subcommand(1);

  std::string matrix_path;
  std::string blocks_path;
  std::string kind = "hirano";
  std::string mode = "tripotent";
  std::string prefix;
  std::string theorem_id;
  bool as_stated = false;
  FuzzOptions fuzz;

  auto* check = app.add_subcommand("check", "Class membership, index and characteristic polynomial");
  check->add_option("--matrix", matrix_path, "Matrix file")->required();

  auto* invert = app.add_subcommand("invert", "Generalized inverse with certificate");
  invert->add_option("--matrix", matrix_path, "Matrix file")->required();
  invert->add_option("--kind", kind, "drazin, strong or hirano")
      ->check(CLI::IsMember({"drazin", "strong", "hirano"}))
      ->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "Commuting structured + nilpotent split");
  decompose->add_option("--matrix", matrix_path, "Matrix file")->required();
  decompose->add_option("--mode", mode, "tripotent, idempotent or jc")
      ->check(CLI::IsMember({"tripotent", "idempotent", "jc"}))
      ->capture_default_str();
  decompose->add_option("--write", prefix, "Also write PREFIX.structured.json and PREFIX.nilpotent.json");

  auto* theorem = app.add_subcommand("theorem", "Check hypotheses and conclusion of a block theorem");
  theorem->add_option("--id", theorem_id, "Theorem id, e.g. T2_7")->required();
  theorem->add_option("--blocks", blocks_path, "Block file")->required();
  theorem->add_flag("--as-stated", as_stated, "Use the literal hypothesis list");

  auto* fuzzer = app.add_subcommand("fuzz", "Soundness sweep, or necessity probe with --drop");
  fuzzer->add_option("--id", fuzz.id, "Theorem id")->required();
  fuzzer->add_option("--trials", fuzz.trials, "Number of trials")->capture_default_str();
  fuzzer->add_option("--size", fuzz.size, "Block size (default: cycle through 2, 3, 4)");
  fuzzer->add_option("--seed", fuzz.seed, "Sweep seed")->capture_default_str();
  fuzzer->add_option("--entry-bound", fuzz.entry_bound, "Entry magnitude bound")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  fuzzer->add_option("--drop", fuzz.drop, "Hypothesis to violate");
  fuzzer->add_option("--out", fuzz.out_path, "Counterexample file");
  fuzzer->add_option("--threads", fuzz.threads, "Worker threads (0: THREADS env)");
  fuzzer->add_flag("--as-stated", fuzz.as_stated, "Use the literal hypothesis list");

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(matrix_path, out);
    if (*invert) return cmd_invert(matrix_path, kind, out, err);
    if (*decompose) return cmd_decompose(matrix_path, mode, prefix, out, err);
    if (*theorem) return cmd_theorem(theorem_id, blocks_path, as_stated, out);
    if (*fuzzer) return cmd_fuzz(fuzz, out);
  } catch (const Error& e) {
    err << "hirano: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "hirano: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace hirano::cli

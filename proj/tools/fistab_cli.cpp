// fistab command line front end. Output goes through report.hpp, so
// FISTAB_FORMAT=kv switches every command to key=value lines.
//
// Exit codes: 0 success, 1 usage or input error, 2 failed check.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fistab/bounds.hpp"
#include "fistab/fi_complex.hpp"
#include "fistab/fi_homology.hpp"
#include "fistab/io.hpp"
#include "fistab/random.hpp"
#include "fistab/report.hpp"
#include "fistab/verify.hpp"

using namespace fistab;

namespace {

constexpr int kOk = 0, kUsage = 1, kFailed = 2;

/// Thrown for bad command arguments that CLI11 cannot catch by itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// First keyword of a text file, skipping comments and blank lines.
std::string file_kind(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (ls >> tok && tok[0] != '#') return tok;
  }
  return "";
}

/// A module file read as a one-term complex, or a complex file as is.
FIComplex load_complex(const std::string& path) {
  const auto text = slurp(path);
  if (file_kind(text) == "FIMODULE") return single_degree(module_from_text(text));
  return complex_from_text(text);
}

FIModule load_module(const std::string& path) {
  const auto text = slurp(path);
  if (file_kind(text) != "FIMODULE") throw UsageError(path + ": expected an FIMODULE file");
  return module_from_text(text);
}

ExtInt parse_ext(const std::string& s) {
  if (s == "inf" || s == "+inf") return ExtInt::pos_inf();
  if (s == "-inf") return ExtInt::neg_inf();
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("not an integer or +-inf: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

/// "0:1,1:2,3:-inf" -> {0: 1, 1: 2, 3: -inf}.
DegreeSeq parse_seq(const std::string& s) {
  DegreeSeq t;
  for (const auto& item : split(s, ',')) {
    auto kv = split(item, ':');
    if (kv.size() != 2) throw UsageError("expected k:value, got '" + item + "'");
    const ExtInt k = parse_ext(kv[0]);
    if (!k.finite()) throw UsageError("degree index must be finite: '" + item + "'");
    t[static_cast<int>(k.value())] = parse_ext(kv[1]);
  }
  if (t.empty()) throw UsageError("empty degree sequence");
  return t;
}

/// "P" or "A..B".
std::pair<long, long> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const ExtInt v = parse_ext(s);
    if (!v.finite()) throw UsageError("range endpoints must be finite");
    return {v.value(), v.value()};
  }
  const ExtInt a = parse_ext(s.substr(0, dots)), b = parse_ext(s.substr(dots + 2));
  if (!a.finite() || !b.finite() || a.value() > b.value()) throw UsageError("bad range '" + s + "'");
  if (b.value() - a.value() > 10000) throw UsageError("range '" + s + "' is too long");
  return {a.value(), b.value()};
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

Record bound_record(const std::string& name, const BoundReport& r) {
  Record rec{{"bound", name}, {"t0", r.t0.to_string()}, {"t1", r.t1.to_string()}, {"regime", r.regime},
             {"formula", r.formula}};
  if (!r.notes.empty()) rec.emplace_back("notes", join(r.notes, "; "));
  return rec;
}

struct Options {
  OutputFormat fmt = output_format_from_env();

  std::string file;
  long level = -1, degree = -1;
  long kmin = 0, kmax = -1;

  std::string t_seq, pi_seq, variant = "general";
  long k = 0, delta = 0, hmax = 0, p = 0, f = 0, a = 0, b = 0;

  std::string cube_file, direction;
  long d = 3, u = 0, n = 0;
  std::string p_range;

  std::string kind, ring = "Q", dims, out_file;
  std::uint64_t seed = 0;
  long N = 4, max_degree = 2, max_dim = 2, entry_bound = 3;

  std::string suite, dump_dir;
  std::size_t trials = 100;
  unsigned jobs = 1;
};

// ---------------------------------------------------------------------------

int cmd_validate(const Options& o) {
  const auto text = slurp(o.file);
  const auto kind = file_kind(text);
  std::istringstream in(text);
  std::vector<std::string> problems;
  std::string what;
  if (kind == "FIMODULE") {
    auto v = read_module_raw(in);
    problems = validate(v);
    what = "module N=" + std::to_string(v.N) + " ring=" + (v.ring == Ring::Integers ? "Z" : "Q");
  } else if (kind == "FICOMPLEX") {
    auto w = read_complex_raw(in);
    problems = validate(w);
    what = "complex N=" + std::to_string(w.N) + " degrees " + std::to_string(w.qmin) + ".." + std::to_string(w.qmax);
  } else if (kind == "CUBE") {
    auto s = read_cube(in);
    if (auto bad = s.monotonicity_violation())
      problems.push_back("k is not monotone: mask " + std::to_string(bad->first) + " exceeds mask " +
                         std::to_string(bad->second));
    what = "cube n=" + std::to_string(s.n);
  } else {
    throw UsageError(o.file + ": unknown file kind '" + kind + "'");
  }
  std::vector<Record> rows;
  for (const auto& p : problems) rows.push_back({{"problem", p}});
  std::cout << render_one({{"file", o.file}, {"object", what}, {"valid", problems.empty() ? "yes" : "no"}}, o.fmt);
  if (!rows.empty()) std::cout << render(rows, o.fmt);
  return problems.empty() ? kOk : kFailed;
}

int cmd_homology(const Options& o) {
  const auto v = load_module(o.file);
  if (o.level > static_cast<long>(v.N)) throw UsageError("--level exceeds the truncation N=" + std::to_string(v.N));
  std::vector<Record> rows;
  const std::size_t lo = o.level < 0 ? 0 : static_cast<std::size_t>(o.level);
  const std::size_t hi = o.level < 0 ? v.N : lo;
  for (std::size_t n = lo; n <= hi; ++n) {
    if (o.degree >= 0) {
      rows.push_back({{"level", std::to_string(n)}, {"p", std::to_string(o.degree)},
                      {"H", fih_group(v, n, static_cast<std::size_t>(o.degree)).to_string(v.ring)}});
      continue;
    }
    auto h = fih_groups(v, n, n);
    for (std::size_t p = 0; p < h.size(); ++p)
      rows.push_back({{"level", std::to_string(n)}, {"p", std::to_string(p)}, {"H", h[p].to_string(v.ring)}});
  }
  std::cout << render(rows, o.fmt);
  return kOk;
}

void print_profile(const DegreeProfile& prof, const std::string& label, OutputFormat fmt) {
  std::vector<Record> rows;
  for (const auto& [k, e] : prof.t)
    rows.push_back({{"k", std::to_string(k)},
                    {label, e.to_string()},
                    {"status", e.exact ? "exact" : "truncation-limited (N=" + std::to_string(prof.N) + ")"}});
  std::cout << render(rows, fmt);
}

int cmd_degrees(const Options& o) {
  const auto text = slurp(o.file);
  if (file_kind(text) == "FICOMPLEX") {
    const auto w = complex_from_text(text);
    const long kmax = o.kmax < 0 ? w.qmax + 2 : o.kmax;
    print_profile(hyper_degrees(w, static_cast<int>(o.kmin), static_cast<int>(kmax)), "t_k", o.fmt);
    return kOk;
  }
  const auto v = module_from_text(text);
  const long kmax = o.kmax < 0 ? std::min<long>(2, static_cast<long>(v.N)) : o.kmax;
  if (kmax > static_cast<long>(v.N)) throw UsageError("--kmax exceeds the truncation N=" + std::to_string(v.N));
  print_profile(degrees(v, static_cast<std::size_t>(kmax)), "t_k", o.fmt);
  Record est;
  if (v.ring == Ring::Rationals) {
    auto e = delta_estimate(v);
    est.emplace_back("delta", std::to_string(e.value));
    est.emplace_back("delta_note", e.note);
  }
  if (v.N >= 1) {
    auto e = hmax_estimate(v);
    est.emplace_back("hmax", std::to_string(e.value));
    est.emplace_back("hmax_note", e.note);
  }
  if (!est.empty()) std::cout << '\n' << render_one(est, o.fmt);
  return kOk;
}

int cmd_hyper(const Options& o) {
  const auto w = load_complex(o.file);
  if (o.level > static_cast<long>(w.N)) throw UsageError("--level exceeds the truncation N=" + std::to_string(w.N));
  std::vector<Record> rows;
  const std::size_t lo = o.level < 0 ? 0 : static_cast<std::size_t>(o.level);
  const std::size_t hi = o.level < 0 ? w.N : lo;
  for (std::size_t n = lo; n <= hi; ++n)
    for (const auto& [m, h] : hyper_groups(w, n))
      rows.push_back({{"level", std::to_string(n)}, {"m", std::to_string(m)}, {"H", h.to_string(w.ring)}});
  std::cout << render(rows, o.fmt);
  return kOk;
}

int cmd_bounds(const std::string& which, const Options& o) {
  if (which == "ganli") {
    std::cout << render_one(bound_record("ganli", gan_li_bounds(parse_seq(o.t_seq), static_cast<int>(o.k))), o.fmt);
  } else if (which == "bahran") {
    std::cout << render_one(bound_record("bahran", bahran_bounds(o.delta, o.hmax)), o.fmt);
  } else if (which == "goingdown") {
    GoingDownVariant v;
    if (o.variant == "general")
      v = GoingDownVariant::general();
    else if (o.variant == "cofi")
      v = GoingDownVariant::co_fi();
    else if (o.variant == "monotone")
      v = GoingDownVariant::monotone(o.f);
    else if (o.variant == "linear")
      v = GoingDownVariant::linear(o.a, o.b);
    else
      throw UsageError("unknown going-down variant '" + o.variant + "'");
    std::cout << render_one(
        bound_record("goingdown-" + o.variant, going_down_bounds(parse_seq(o.t_seq), static_cast<int>(o.p), v)),
        o.fmt);
  } else {
    std::map<std::pair<int, int>, ExtInt> pi;
    for (const auto& item : split(o.pi_seq, ',')) {
      auto f = split(item, ':');
      if (f.size() != 3) throw UsageError("expected i:j:value, got '" + item + "'");
      const ExtInt i = parse_ext(f[0]), j = parse_ext(f[1]);
      if (!i.finite() || !j.finite()) throw UsageError("indices must be finite: '" + item + "'");
      pi[{static_cast<int>(i.value()), static_cast<int>(j.value())}] = parse_ext(f[2]);
    }
    const ExtInt t = going_up_bound(pi, static_cast<int>(o.k));
    std::cout << render_one({{"bound", "goingup"},
                             {"k", std::to_string(o.k)},
                             {"t0", t.to_string()},
                             {"regime", "max over i + j = k"},
                             {"formula", "t0(H_k) <= max_{i+j=k} t0(pi_i H_j)"}},
                            o.fmt);
  }
  return kOk;
}

int cmd_cube(const Options& o) {
  const auto s = cube_from_text(slurp(o.cube_file));
  const auto dir = o.direction == "cart" ? CubeDirection::ToCartesian : CubeDirection::ToCocartesian;
  auto r = cube_cartesianity(s, dir);
  Record rec{{"bound", o.direction == "cart" ? "cartesian" : "cocartesian"},
             {"n", std::to_string(s.n)},
             {"degree", r.t0.to_string()},
             {"regime", r.regime},
             {"formula", r.formula},
             {"notes", join(r.notes, "; ")}};
  std::cout << render_one(rec, o.fmt);
  return kOk;
}

int cmd_conf(const Options& o) {
  const auto [lo, hi] = parse_range(o.p_range);
  std::vector<Record> rows;
  for (long p = lo; p <= hi; ++p) {
    auto s = conf_bounds(p, o.d, ConfVariant::Stated), b = conf_bounds(p, o.d, ConfVariant::Body);
    rows.push_back({{"p", std::to_string(p)},
                    {"t0_stated", s.t0.to_string()},
                    {"t1_stated", s.t1.to_string()},
                    {"t0_body", b.t0.to_string()},
                    {"t1_body", b.t1.to_string()},
                    {"regime", "d=" + std::to_string(o.d)},
                    {"formula_stated", s.formula},
                    {"formula_body", b.formula}});
  }
  std::cout << render(rows, o.fmt);
  if (o.n > 0)
    std::cout << '\n'
              << render_one({{"cube", "configuration n-cube"},
                             {"n", std::to_string(o.n)},
                             {"cartesian", std::to_string(conf_cube_cartesianity(o.n, o.d))},
                             {"formula", "(n-1)(d-2) + 1"}},
                            o.fmt);
  return kOk;
}

int cmd_cohomology(const Options& o) {
  const auto [lo, hi] = parse_range(o.p_range);
  std::vector<Record> rows;
  for (long p = lo; p <= hi; ++p) {
    auto r = cohomology_bounds(p, o.d, o.u);
    rows.push_back({{"p", std::to_string(p)},
                    {"t0", r.t0.to_string()},
                    {"t1", r.t1.to_string()},
                    {"regime", r.regime},
                    {"formula", r.formula}});
  }
  std::cout << render(rows, o.fmt);
  if (o.n > 0)
    std::cout << '\n'
              << render_one({{"cube", "chain n-cube"},
                             {"n", std::to_string(o.n)},
                             {"partition_min", std::to_string(chain_cube_min(o.n, o.d, o.u))},
                             {"cocartesian", std::to_string(chain_cube_cocartesianity(o.n, o.d, o.u))},
                             {"formula", "n - 1 + min_s [s(u+1) + (n-s)(d-2) - floor((n-s)/2)(d-3)]"}},
                            o.fmt);
  return kOk;
}

int cmd_gen(const Options& o) {
  if (o.N < 0 || o.N > 6) throw UsageError("size guard: N must be in 0..6");
  if (o.max_dim < 0 || o.max_dim > 4) throw UsageError("size guard: dims must be at most 4");
  if (o.entry_bound < 0 || o.entry_bound > 3) throw UsageError("size guard: entries must lie in [-3, 3]");
  if (o.max_degree < 0) throw UsageError("--max-degree must be >= 0");
  RandomParams p;
  p.ring = o.ring == "Z" ? Ring::Integers : Ring::Rationals;
  p.N = static_cast<std::size_t>(o.N);
  p.max_degree = static_cast<std::size_t>(o.max_degree);
  p.max_dim = static_cast<std::size_t>(o.max_dim);
  p.entry_bound = static_cast<int>(o.entry_bound);
  Rng rng(o.seed);

  std::string text;
  if (o.kind == "free") {
    FBData x;
    if (!o.dims.empty()) {
      std::vector<std::size_t> dims;
      for (const auto& tok : split(o.dims, ',')) {
        const ExtInt v = parse_ext(tok);
        if (!v.finite() || v.value() < 0 || v.value() > 4) throw UsageError("size guard: dims must lie in 0..4");
        dims.push_back(static_cast<std::size_t>(v.value()));
      }
      if (dims.size() > p.N + 1) throw UsageError("--dims lists more degrees than N+1");
      dims.resize(p.N + 1, 0);
      x = random_fb_data_with_dims(rng, p.ring, dims);
    } else {
      x = random_fb_data(rng, p);
    }
    auto v = free_fi_module(x);
    v.name = "free";
    text = to_text(v);
  } else if (o.kind == "coker") {
    auto g = random_coker_module(rng, p);
    for (const auto& n : g.notices) std::cerr << "notice: " << n << '\n';
    text = to_text(g.module);
  } else {
    text = to_text(random_free_complex(rng, p));
  }
  if (o.out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out_file);
    if (!(out << text)) throw UsageError("cannot write '" + o.out_file + "'");
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> suites;
  if (o.suite == "all")
    for (const auto& [name, fn] : verify_suites()) suites.push_back(name);
  else
    suites.push_back(o.suite);
  bool ok = true;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    const auto rep = verify(suites[i], o.trials, o.seed, o.jobs);
    if (i) std::cout << '\n';
    std::cout << rep.text(o.fmt);
    ok = ok && rep.passed();
    if (!o.dump_dir.empty() && !rep.passed()) {
      std::filesystem::create_directories(o.dump_dir);
      for (const auto& [trial, t] : rep.failures) {
        const auto path = std::filesystem::path(o.dump_dir) / (suites[i] + "-trial-" + std::to_string(trial) + ".txt");
        std::ofstream(path) << t.artifact;
        std::cout << render_one({{"artifact", path.string()}}, o.fmt);
      }
    }
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact FI-module homology, stability degrees and stable-range bounds"};
  app.require_subcommand(1);
  Options o;

  auto* validate_cmd = app.add_subcommand("validate", "Parse and check a module, complex or cube file");
  validate_cmd->add_option("file", o.file, "Input file")->required();

  auto* homology_cmd = app.add_subcommand("homology", "FI-homology groups of a module");
  homology_cmd->add_option("file", o.file, "FIMODULE file")->required();
  homology_cmd->add_option("--level,-n", o.level, "Level n (default: all)")->check(CLI::NonNegativeNumber);
  homology_cmd->add_option("--degree,-p", o.degree, "Homological degree p (default: all)")
      ->check(CLI::NonNegativeNumber);

  auto* degrees_cmd = app.add_subcommand("degrees", "Observed degrees t_k and degree estimates");
  degrees_cmd->add_option("file", o.file, "FIMODULE or FICOMPLEX file")->required();
  degrees_cmd->add_option("--kmax", o.kmax, "Largest k (default: min(2, N) for modules)");
  degrees_cmd->add_option("--kmin", o.kmin, "Smallest k (complexes only)");

  auto* hyper_cmd = app.add_subcommand("hyper", "Hyperhomology of a complex (a module is taken in degree 0)");
  hyper_cmd->add_option("file", o.file, "FICOMPLEX or FIMODULE file")->required();
  hyper_cmd->add_option("--level,-n", o.level, "Level n (default: all)")->check(CLI::NonNegativeNumber);

  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form degree bounds");
  bounds_cmd->require_subcommand(1);
  auto* ganli_cmd = bounds_cmd->add_subcommand("ganli", "t0, t1 of H_k from hyperhomology degrees");
  ganli_cmd->add_option("--t", o.t_seq, "Degrees as k:t_k,...")->required();
  ganli_cmd->add_option("--k", o.k, "Homological degree k")->required();
  auto* bahran_cmd = bounds_cmd->add_subcommand("bahran", "t0, t1 from stable and local degree");
  bahran_cmd->add_option("--delta", o.delta, "Stable degree")->required();
  bahran_cmd->add_option("--hmax", o.hmax, "Local degree")->required();
  auto* down_cmd = bounds_cmd->add_subcommand("goingdown", "t0, t1 of pi_p from hyperhomology degrees");
  down_cmd->add_option("--t", o.t_seq, "Degrees as k:t_k,...")->required();
  down_cmd->add_option("--p", o.p, "Degree p")->required();
  down_cmd->add_option("--variant", o.variant, "general, cofi, monotone or linear")
      ->check(CLI::IsMember({"general", "cofi", "monotone", "linear"}));
  down_cmd->add_option("--f", o.f, "Monotone variant: f(p)");
  down_cmd->add_option("--a", o.a, "Linear variant: slope a in t_p <= -a p + b");
  down_cmd->add_option("--b", o.b, "Linear variant: intercept b");
  auto* up_cmd = bounds_cmd->add_subcommand("goingup", "t0 of H_k from a spectral sequence page");
  up_cmd->add_option("--pi", o.pi_seq, "Entries as i:j:t0,...")->required();
  up_cmd->add_option("--k", o.k, "Total degree k")->required();

  auto* cube_cmd = app.add_subcommand("cube", "Cartesianity of a cube from face data");
  cube_cmd->add_option("--spec", o.cube_file, "CUBE file")->required();
  cube_cmd->add_option("--direction", o.direction, "cart or cocart")
      ->required()
      ->check(CLI::IsMember({"cart", "cocart"}));

  auto* conf_cmd = app.add_subcommand("conf", "Stable range for homotopy of configuration spaces");
  conf_cmd->add_option("--d", o.d, "Manifold dimension (>= 3)")->required();
  conf_cmd->add_option("--p", o.p_range, "Degree p or range A..B")->required();
  conf_cmd->add_option("--n", o.n, "Also report the configuration n-cube");

  auto* coh_cmd = app.add_subcommand("cohomology", "Stable range for cohomology of configuration spaces");
  coh_cmd->add_option("--d", o.d, "Manifold dimension (>= 3)")->required();
  coh_cmd->add_option("--u", o.u, "Connectivity u (>= 0)")->required();
  coh_cmd->add_option("--p", o.p_range, "Degree p or range A..B")->required();
  coh_cmd->add_option("--n", o.n, "Also report the chain n-cube");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance (deterministic in the seed)");
  gen_cmd->add_option("--kind", o.kind, "free, coker or complex")
      ->required()
      ->check(CLI::IsMember({"free", "coker", "complex"}));
  gen_cmd->add_option("--seed", o.seed, "Seed")->required();
  gen_cmd->add_option("--N", o.N, "Truncation N (<= 6)");
  gen_cmd->add_option("--ring", o.ring, "Q or Z")->check(CLI::IsMember({"Q", "Z"}));
  gen_cmd->add_option("--dims", o.dims, "free only: dims of X as d0,d1,...");
  gen_cmd->add_option("--max-degree", o.max_degree, "Largest cardinality carrying generators");
  gen_cmd->add_option("--max-dim", o.max_dim, "Largest dimension per cardinality (<= 4)");
  gen_cmd->add_option("--entry-bound", o.entry_bound, "Entries drawn from [-b, b] (b <= 3)");
  gen_cmd->add_option("--out,-o", o.out_file, "Write to a file instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Run a randomized property suite");
  std::vector<std::string> names{"all"};
  for (const auto& [name, fn] : verify_suites()) names.push_back(name);
  verify_cmd->add_option("--suite", o.suite, "Suite name or all")->required()->check(CLI::IsMember(names));
  verify_cmd->add_option("--trials", o.trials, "Number of trials");
  verify_cmd->add_option("--seed", o.seed, "Seed")->required();
  verify_cmd->add_option("--jobs,-j", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--dump", o.dump_dir, "Directory for counterexample files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(o);
    if (*homology_cmd) return cmd_homology(o);
    if (*degrees_cmd) return cmd_degrees(o);
    if (*hyper_cmd) return cmd_hyper(o);
    if (*bounds_cmd) return cmd_bounds(bounds_cmd->get_subcommands().front()->get_name(), o);
    if (*cube_cmd) return cmd_cube(o);
    if (*conf_cmd) return cmd_conf(o);
    if (*coh_cmd) return cmd_cohomology(o);
    if (*gen_cmd) return cmd_gen(o);
    if (*verify_cmd) return cmd_verify(o);
  } catch (const ParseError& e) {
    std::cerr << o.file << o.cube_file << ": " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kFailed;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

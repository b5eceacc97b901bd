#pragma once

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "fistab/bounds.hpp"
#include "fistab/colimit.hpp"
#include "fistab/fi_complex.hpp"
#include "fistab/fi_homology.hpp"
#include "fistab/io.hpp"
#include "fistab/oracles.hpp"
#include "fistab/random.hpp"
#include "fistab/report.hpp"

namespace fistab {

/// Result of one randomized trial. `artifact` replays the instance.
struct TrialOutcome {
  bool ok = true;
  std::string failure;
  std::string artifact;
  std::size_t checks = 0;
  std::map<std::string, long> minima;  // smallest observed value per metric
  std::map<std::string, long> counts;  // summed over trials
  std::vector<std::string> notices;

  void check(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      failure = what;
    }
  }
  void observe(const std::string& metric, long v) {
    auto [it, fresh] = minima.emplace(metric, v);
    if (!fresh) it->second = std::min(it->second, v);
  }
  void count(const std::string& what, long v = 1) { counts[what] += v; }
};

struct VerifyReport {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t checks = 0;
  std::size_t notices = 0;
  std::map<std::string, long> minima, counts;
  std::vector<std::pair<std::size_t, TrialOutcome>> failures;

  bool passed() const { return failures.empty(); }

  Record summary() const {
    Record r{{"suite", suite},
             {"seed", std::to_string(seed)},
             {"trials", std::to_string(trials)},
             {"failed", std::to_string(failures.size())},
             {"checks", std::to_string(checks)}};
    for (const auto& [k, v] : counts) r.emplace_back(k, std::to_string(v));
    for (const auto& [k, v] : minima) r.emplace_back(k, std::to_string(v));
    if (notices) r.emplace_back("notices", std::to_string(notices));
    r.emplace_back("result", passed() ? "PASS" : "FAIL");
    return r;
  }

  std::string text(OutputFormat fmt) const {
    std::string s = render_one(summary(), fmt);
    for (const auto& [i, t] : failures)
      s += render_one({{"failed_trial", std::to_string(i)},
                       {"trial_seed", std::to_string(Rng::trial_seed(seed, i))},
                       {"reason", t.failure}},
                      fmt);
    return s;
  }
};

namespace verify_detail {

inline std::string header(const std::string& suite, std::size_t trial, std::uint64_t seed) {
  return "# suite " + suite + " trial " + std::to_string(trial) + " trial-seed " + std::to_string(seed) + "\n";
}

inline void homology(Rng& rng, TrialOutcome& out) {
  RandomParams p;
  p.ring = rng.coin() ? Ring::Integers : Ring::Rationals;
  p.N = static_cast<std::size_t>(rng.uniform(0, 6));
  p.max_degree = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(p.N)));
  p.max_dim = 3;
  auto x = random_fb_data(rng, p);
  auto v = free_fi_module(x);
  v.name = "free";
  for (std::size_t n = 0; n <= v.N && out.ok; ++n) {
    auto h = fih_groups(v, n, n);
    out.check(h[0] == AbelianClass{x.dims[n], {}},
              "H_0 at level " + std::to_string(n) + " is " + h[0].to_string(v.ring) + ", expected rank " +
                  std::to_string(x.dims[n]));
    for (std::size_t q = 1; q < h.size(); ++q)
      out.check(h[q].is_zero(), "H_" + std::to_string(q) + " at level " + std::to_string(n) + " is nonzero");
  }
  if (!out.ok) out.artifact = to_text(v);
}

inline void colim(Rng& rng, TrialOutcome& out) {
  RandomParams p;
  p.ring = Ring::Rationals;
  p.N = 5;
  p.max_degree = static_cast<std::size_t>(rng.uniform(1, 3));
  auto g = random_coker_module(rng, p);
  const auto& v = g.module;
  auto prof = degrees(v, 1);
  const int n0 = std::max(prof[0], prof[1]);
  const long cut = std::max(n0, 0);
  for (std::size_t n = 0; n <= v.N; ++n)
    out.check(colim_compare(v, n, cut).comparison_is_iso,
              "colimit over |S| <= " + std::to_string(cut) + " is not V at level " + std::to_string(n));
  if (n0 >= 1) {
    bool fails_somewhere = false;
    for (std::size_t n = 0; n <= v.N && !fails_somewhere; ++n)
      fails_somewhere = !colim_compare(v, n, n0 - 1).comparison_is_iso;
    out.check(fails_somewhere, "cutoff " + std::to_string(n0 - 1) + " already gives V at every level");
    out.count("minimality_checked");
  }
  if (!out.ok) out.artifact = to_text(v);
}

inline void shift(Rng& rng, TrialOutcome& out) {
  RandomParams p;
  p.ring = rng.coin() ? Ring::Integers : Ring::Rationals;
  p.N = 5;
  p.max_degree = static_cast<std::size_t>(rng.uniform(0, 3));
  auto v = rng.coin() ? free_fi_module(random_fb_data(rng, p)) : random_coker_module(rng, p).module;
  for (std::size_t n = 0; n + 1 <= v.N; ++n) {
    out.check(shift_cone_check(v, n), "cone identity fails at n = " + std::to_string(n));
    for (std::size_t a = 0; a <= n; ++a)
      out.check(les_middle_exact(v, n, a),
                "not exact at the middle for n = " + std::to_string(n) + ", a = " + std::to_string(a));
  }
  if (!out.ok) out.artifact = to_text(v);
}

inline void ganli(Rng& rng, TrialOutcome& out) {
  RandomParams p;
  p.ring = Ring::Rationals;
  p.N = static_cast<std::size_t>(rng.uniform(2, 5));
  p.max_degree = 2;
  p.max_dim = 2;
  auto w = random_free_complex(rng, p);
  auto bad = validate(w);
  out.check(bad.empty(), bad.empty() ? "" : bad.front());
  auto t = hyper_degrees(w, w.qmin, w.qmax + 1);
  for (int k = w.qmin; k <= w.qmax; ++k) {
    auto h = degrees(homology_module(w, k), std::min<std::size_t>(1, w.N));
    const long b0 = 2L * t[k] + 1, b1 = 2L * std::max(t[k], t[k + 1]) + 2;
    out.check(h[0] <= b0, "t0(H_" + std::to_string(k) + ") = " + std::to_string(h[0]) + " > 2 t_k + 1 = " +
                              std::to_string(b0));
    out.check(h[1] <= b1, "t1(H_" + std::to_string(k) + ") = " + std::to_string(h[1]) +
                              " > 2 max(t_k, t_k+1) + 2 = " + std::to_string(b1));
    if (h[0] >= 0) out.observe("worst_slack_t0", b0 - h[0]);
    if (h[1] >= 0) out.observe("worst_slack_t1", b1 - h[1]);
  }
  if (!out.ok) out.artifact = to_text(w);
}

inline void degrees_suite(Rng& rng, TrialOutcome& out) {
  RandomParams p;
  p.ring = rng.coin() ? Ring::Integers : Ring::Rationals;
  p.N = 5;
  p.max_degree = static_cast<std::size_t>(rng.uniform(0, 2));
  // zero cokernels satisfy everything trivially; redraw a few times
  auto g = random_coker_module(rng, p);
  for (int redraw = 0; redraw < 4 && g.module.is_zero(); ++redraw) {
    out.count("zero_redrawn");
    g = random_coker_module(rng, p);
  }
  for (const auto& s : g.notices) out.notices.push_back(s);
  const auto& v = g.module;
  auto prof = degrees(v, 1);
  const int t0 = prof[0], t1 = prof[1];
  const int dx = g.generators.is_zero() ? -1 : static_cast<int>(g.generators.degree());
  const int dr = g.relations.is_zero() ? -1 : static_cast<int>(g.relations.degree());
  out.check(t0 <= dx, "t0 exceeds the generator degree");
  out.check(t1 <= std::max(dx, dr), "t1 exceeds the presentation degree");

  const int h = hmax_estimate(v).value;
  // the relation is stated for nonzero modules; t0 = t1 = -1 would force hmax <= -3
  if (v.is_zero())
    out.count("zero_modules");
  else
    out.check(h <= t0 + std::max(t0, t1) - 1, "hmax " + std::to_string(h) + " > t0 + max(t0, t1) - 1");
  const int hf = hmax_estimate(free_fi_module(g.generators)).value;
  out.check(hf == -1, "hmax of a free module is " + std::to_string(hf));
  if (v.ring == Ring::Rationals) {
    const int d = delta_estimate(v).value;
    out.check(d <= t0, "delta " + std::to_string(d) + " > t0 " + std::to_string(t0));
    auto b = bahran_bounds(d, h);
    out.count("regularity_compared");
    out.check(ExtInt(t0) <= b.t0, "t0 = " + std::to_string(t0) + " above the regularity bound " + b.t0.to_string() +
                                      " (" + b.regime + ")");
    out.check(ExtInt(t1) <= b.t1, "t1 = " + std::to_string(t1) + " above the regularity bound " + b.t1.to_string() +
                                      " (" + b.regime + ")");
    if (t0 >= 0) out.observe("worst_slack_bahran_t0", b.t0.value() - t0);
    if (t1 >= 0) out.observe("worst_slack_bahran_t1", b.t1.value() - t1);
  }
  if (!out.ok) out.artifact = to_text(v);
}

inline void bounds(Rng& rng, TrialOutcome& out) {
  // the worked values
  out.check(gan_li_bounds({{0, 3}, {1, 3}}, 0).t0 == ExtInt(7), "gan-li (3,3)");
  out.check(gan_li_bounds({{0, 2}, {1, 5}}, 0).t1 == ExtInt(12), "gan-li (2,5)");
  out.check(bahran_bounds(3, 4).t0 == ExtInt(6) && bahran_bounds(3, 4).t1 == ExtInt(7), "regularity (3,4)");
  out.check(bahran_bounds(-1, 5).t0 == ExtInt(5) && bahran_bounds(-1, 5).t1 == ExtInt(6), "regularity (-1,5)");
  out.check(cohomology_bounds(2, 3, 0).t0 == ExtInt(5) && cohomology_bounds(2, 3, 0).t1 == ExtInt(6),
            "cohomology (d=3,u=0,p=2)");
  out.check(cohomology_bounds(3, 5, 0).t0 == ExtInt(7) && cohomology_bounds(3, 5, 0).t1 == ExtInt(8),
            "cohomology (d=5,u=0,p=3)");
  out.check(conf_bounds(2, 3, ConfVariant::Stated).t0 == ExtInt(3) &&
                conf_bounds(2, 3, ConfVariant::Stated).t1 == ExtInt(4),
            "conf (d=3,p=2,stated)");

  // random instances
  const long d = rng.uniform(-1, 15), h = rng.uniform(-1, 15);
  const auto r = bahran_bounds(d, h);
  for (auto [dd, hh] : {std::pair{d + 1, h}, std::pair{d, h + 1}}) {
    const auto s = bahran_bounds(dd, hh);
    if (s.regime == r.regime)
      out.check(r.t0 <= s.t0 && r.t1 <= s.t1, "regularity bound decreases within regime " + r.regime);
  }
  const long c = rng.uniform(0, 8);
  DegreeSeq t;
  for (int k = -1; k <= 20; ++k) t[k] = c;
  out.check(going_down_bounds(t, 0, GoingDownVariant::monotone(c)).t0 <=
                going_down_bounds(t, 0, GoingDownVariant::general()).t0,
            "monotone going-down t0 worse than general for constant " + std::to_string(c));
  const int n = static_cast<int>(rng.uniform(1, 8));
  const long dd = rng.uniform(3, 7), u = rng.uniform(0, 3);
  out.check(partition_minimum(chain_cube_spec(n, dd, u)) == ExtInt(chain_cube_min(n, dd, u)),
            "chain-cube minimum: closed form differs from the partition DP");
  const long p = rng.uniform(2, 30), dc = rng.uniform(3, 9);
  out.check(conf_bounds(p, dc, ConfVariant::Stated).t0 <= conf_bounds(p, dc, ConfVariant::Body).t0,
            "stated variant exceeds the body variant");
  if (!out.ok) out.artifact = "";
}

inline CubeSpec random_monotone_cube(Rng& rng, int n) {
  CubeSpec s{n, std::vector<ExtInt>(std::size_t{1} << n, ExtInt(0))};
  std::vector<long> base(static_cast<std::size_t>(n));
  for (auto& b : base) b = rng.uniform(-2, 6);
  const long inf_from = rng.coin() ? rng.uniform(2, n + 1) : n + 1;
  for (std::uint32_t m = 1; m < s.k.size(); ++m) {
    const int c = std::popcount(m);
    if (c >= inf_from) {
      s.k[m] = ExtInt::pos_inf();
      continue;
    }
    long v = LONG_MIN;
    for (int i = 0; i < n; ++i)
      if (m & (1u << i)) v = std::max(v, base[static_cast<std::size_t>(i)]);
    s.k[m] = v + rng.uniform(0, 4) * (c - 1);
  }
  for (std::uint32_t m = 1; m < s.k.size(); ++m)
    for (int i = 0; i < n; ++i)
      if ((m & (1u << i)) && (m ^ (1u << i)) != 0) s.k[m] = std::max(s.k[m], s.k[m ^ (1u << i)]);
  return s;
}

inline void partitions(Rng& rng, TrialOutcome& out) {
  const int n = static_cast<int>(rng.uniform(1, 8));
  auto s = random_monotone_cube(rng, n);
  ExtInt oracle = ExtInt::pos_inf();
  oracle::for_each_set_partition(static_cast<unsigned>(n), [&](const std::vector<std::uint32_t>& blocks) {
    ExtInt sum = 0;
    for (auto b : blocks) sum = sum + s.k[b];
    oracle = std::min(oracle, sum);
  });
  const ExtInt dp = partition_minimum(s);
  out.check(dp == oracle, "DP minimum " + dp.to_string() + " differs from enumeration " + oracle.to_string());
  out.check(!s.monotonicity_violation().has_value(), "generated spec is not monotone");
  if (!out.ok) out.artifact = to_text(s);
}

}  // namespace verify_detail

using TrialFn = std::function<void(Rng&, TrialOutcome&)>;

inline const std::map<std::string, TrialFn>& verify_suites() {
  static const std::map<std::string, TrialFn> suites{
      {"homology", verify_detail::homology}, {"colim", verify_detail::colim},
      {"shift", verify_detail::shift},       {"ganli", verify_detail::ganli},
      {"degrees", verify_detail::degrees_suite}, {"bounds", verify_detail::bounds},
      {"partitions", verify_detail::partitions}};
  return suites;
}

/// Run `trials` independent trials. Trial i uses Rng(trial_seed(seed, i)), so
/// results do not depend on `jobs`; they are merged in trial order.
inline VerifyReport run_trials(const std::string& suite, const TrialFn& fn, std::size_t trials, std::uint64_t seed,
                               unsigned jobs = 1) {
  std::vector<TrialOutcome> outcomes(trials);
  auto run = [&](std::size_t i) {
    const auto ts = Rng::trial_seed(seed, i);
    Rng rng(ts);
    TrialOutcome& out = outcomes[i];
    try {
      fn(rng, out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.failure = std::string("exception: ") + e.what();
    }
    if (!out.ok) out.artifact = verify_detail::header(suite, i, ts) + out.artifact;
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < trials; ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < trials;) run(i);
      });
    for (auto& th : pool) th.join();
  }

  VerifyReport rep;
  rep.suite = suite;
  rep.trials = trials;
  rep.seed = seed;
  for (std::size_t i = 0; i < trials; ++i) {
    auto& o = outcomes[i];
    rep.checks += o.checks;
    rep.notices += o.notices.size();
    for (const auto& [k, v] : o.minima) {
      auto [m, fresh] = rep.minima.emplace(k, v);
      if (!fresh) m->second = std::min(m->second, v);
    }
    for (const auto& [k, v] : o.counts) rep.counts[k] += v;
    if (!o.ok) rep.failures.emplace_back(i, std::move(o));
  }
  return rep;
}

inline VerifyReport verify(const std::string& suite, std::size_t trials, std::uint64_t seed, unsigned jobs = 1) {
  const auto& suites = verify_suites();
  auto it = suites.find(suite);
  if (it == suites.end()) throw InvalidArgument("unknown suite '" + suite + "'");
  return run_trials(suite, it->second, trials, seed, jobs);
}

}  // namespace fistab

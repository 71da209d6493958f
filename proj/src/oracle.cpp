#include "secant/oracle.hpp"

#include "secant/rank.hpp"

#include <algorithm>
#include <limits>

namespace secant {

namespace {

std::size_t checked_columns(int n, int j, const PrimeFieldConfig& cfg) {
  Int cols = monomial_count(n, j);
  if (cols > Int(cfg.max_columns))
    throw ResourceGuardError("degree-" + std::to_string(j) + " piece in " + std::to_string(n) +
                             " variables has " + cols.str() + " monomials, above the column bound " +
                             std::to_string(cfg.max_columns));
  return static_cast<std::size_t>(cols);
}

std::uint64_t partition_label(const Partition& lam) {
  std::uint64_t h = 0;
  for (int p : lam.parts()) h = mix64(h ^ static_cast<std::uint64_t>(p));
  return h;
}

// Generators of I_{P_1} + ... + I_{P_l} for one trial, possibly in fewer
// variables after eliminating coordinate linear factors.
struct TrialIdeal {
  int vars = 0;          // variables of the ring the generators live in
  int eliminated = 0;    // coordinate linear forms already in the ideal
  std::vector<HomogeneousForm> gens;
};

bool linear_reducible(const Instance& inst, const PrimeFieldConfig& cfg) {
  return cfg.reduce_linear && inst.lambda.r() == 2 && inst.lambda.part(1) == 1;
}

TrialIdeal sample_ideal(const Instance& inst, const PrimeFieldConfig& cfg, std::uint64_t seed, int trial) {
  TrialIdeal ti;
  const auto& parts = inst.lambda.parts();
  if (linear_reducible(inst, cfg)) {
    // GL_n moves l general linear forms to coordinates, so x_{n-q+1..n} stand in
    // for them and the remaining factors are general forms in n - q variables.
    ti.eliminated = std::min(inst.l, inst.n);
    ti.vars = inst.n - ti.eliminated;
    if (ti.vars == 0) return ti;
    for (int pt = 0; pt < inst.l; ++pt) {
      Rng rng(derive_seed(seed, trial, pt, 0));
      ti.gens.push_back(random_form(ti.vars, parts[0], cfg.p, rng));
    }
    return ti;
  }
  ti.vars = inst.n;
  for (int pt = 0; pt < inst.l; ++pt) {
    std::vector<HomogeneousForm> factors;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      Rng rng(derive_seed(seed, trial, pt, i));
      factors.push_back(random_form(inst.n, parts[i], cfg.p, rng));
    }
    for (auto& g : tangent_generators(factors, cfg.p)) ti.gens.push_back(std::move(g));
  }
  return ti;
}

std::size_t trial_rank(const Instance& inst, const TrialIdeal& ti, int j, const PrimeFieldConfig& cfg,
                       std::size_t cap) {
  const std::size_t full = checked_columns(inst.n, j, cfg);
  const std::size_t reduced_cols = static_cast<std::size_t>(monomial_count(ti.vars, j));
  const std::size_t from_linear = full - reduced_cols;
  if (ti.vars == 0 || ti.gens.empty()) return from_linear;
  std::size_t sub_cap = cap >= from_linear ? cap - from_linear : 0;
  return from_linear + ideal_piece_rank(ti.gens, j, cfg, sub_cap);
}

struct Probe {
  std::vector<std::size_t> cols;
  std::vector<std::size_t> max_rank;
  std::vector<std::size_t> top_ranks;  // rank at the last probed degree per trial
};

// Ranks at the given degrees, maximized over trials. With caps, a trial
// stops early at a degree once the cap is hit and no further trials run when
// every degree is capped.
Probe probe(const Instance& inst, const PrimeFieldConfig& cfg, std::uint64_t seed,
            const std::vector<int>& degrees, const std::vector<std::size_t>* caps, bool stop_when_capped) {
  Probe pr;
  for (int j : degrees) pr.cols.push_back(checked_columns(inst.n, j, cfg));
  pr.max_rank.assign(degrees.size(), 0);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    TrialIdeal ti = sample_ideal(inst, cfg, seed, trial);
    std::size_t top = 0;
    for (std::size_t a = 0; a < degrees.size(); ++a) {
      std::size_t cap = caps ? (*caps)[a] : pr.cols[a];
      if (stop_when_capped && pr.max_rank[a] >= cap) {
        top = pr.max_rank[a];
        continue;
      }
      std::size_t rk = trial_rank(inst, ti, degrees[a], cfg, cap);
      pr.max_rank[a] = std::max(pr.max_rank[a], rk);
      top = rk;
    }
    pr.top_ranks.push_back(top);
    if (stop_when_capped) {
      bool done = true;
      for (std::size_t a = 0; a < degrees.size(); ++a)
        done = done && pr.max_rank[a] >= (caps ? (*caps)[a] : pr.cols[a]);
      if (done) break;
    }
  }
  return pr;
}

}  // namespace

std::size_t ideal_piece_rank(const std::vector<HomogeneousForm>& generators, int j,
                             const PrimeFieldConfig& cfg, std::size_t cap) {
  if (generators.empty()) return 0;
  const int n = generators.front().n;
  const std::size_t cols = checked_columns(n, j, cfg);
  cap = std::min(cap, cols);
  if (cap == 0) return 0;
  std::size_t rows_total = 0;
  for (auto& g : generators)
    if (g.degree <= j) rows_total += static_cast<std::size_t>(monomial_count(n, j - g.degree));
  if (rows_total == 0) return 0;
  if (ModularRank::estimate_bytes(cols, std::min(cap, rows_total), 128) > cfg.max_bytes)
    throw ResourceGuardError("elimination with " + std::to_string(cols) + " columns exceeds the memory bound");

  const MonomialIndex& target = MonomialIndex::get(n, j);
  ModularRank engine(cols, cfg.p, cap);
  constexpr std::size_t kBatch = 128;
  std::vector<double> buf(kBatch * cols, 0.0);
  std::size_t filled = 0;
  const double half = double(cfg.p / 2);
  auto flush = [&] {
    engine.add_rows(buf.data(), filled);
    std::fill(buf.begin(), buf.begin() + filled * cols, 0.0);
    filled = 0;
  };
  for (auto& g : generators) {
    if (g.degree > j || engine.saturated()) continue;
    const MonomialIndex& gi = MonomialIndex::get(n, g.degree);
    const MonomialIndex& mi = MonomialIndex::get(n, j - g.degree);
    std::vector<std::pair<const std::uint8_t*, double>> support;
    for (std::size_t a = 0; a < g.coeffs.size(); ++a)
      if (g.coeffs[a]) {
        double v = double(g.coeffs[a]);
        support.emplace_back(gi.exponents(a), v > half ? v - double(cfg.p) : v);
      }
    if (support.empty()) continue;
    for (std::size_t m = 0; m < mi.size() && !engine.saturated(); ++m) {
      double* row = &buf[filled * cols];
      const std::uint8_t* me = mi.exponents(m);
      for (auto& [ge, v] : support) row[target.rank_of_sum(me, ge)] = v;
      if (++filled == kBatch) flush();
    }
  }
  if (filled && !engine.saturated()) flush();
  return engine.rank();
}

OracleRun oracle_run(const Instance& inst, const PrimeFieldConfig& cfg, bool want_hilbert) {
  inst.validate();
  cfg.validate();
  OracleRun run;
  run.inst = inst;
  run.p = cfg.p;
  run.seed = derive_seed(cfg.seed, inst.n, inst.l, partition_label(inst.lambda));
  run.linear_reduced = linear_reducible(inst, cfg);
  const int d = inst.lambda.d();
  std::vector<int> degrees;
  if (want_hilbert)
    for (int j = 0; j <= d; ++j) degrees.push_back(j);
  else
    degrees.push_back(d);
  Probe pr = probe(inst, cfg, run.seed, degrees, nullptr, false);
  run.trial_ranks = pr.top_ranks;
  run.max_rank = pr.max_rank.back();
  run.columns = pr.cols.back();
  run.secant_dim = static_cast<long long>(run.max_rank) - 1;
  run.codim = run.columns - run.max_rank;
  if (want_hilbert) {
    std::vector<std::size_t> h(degrees.size());
    for (std::size_t a = 0; a < degrees.size(); ++a) h[a] = pr.cols[a] - pr.max_rank[a];
    run.hilbert = std::move(h);
  }
  return run;
}

std::optional<std::vector<std::size_t>> LadderCache::find(const Key& key) const {
  std::lock_guard lock(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void LadderCache::store(const Key& key, std::vector<std::size_t> hilbert) {
  std::lock_guard lock(mu_);
  map_.emplace(key, std::move(hilbert));
}

WlpResult wlp_consequence_check(const Instance& inst, const PrimeFieldConfig& cfg, LadderCache* cache) {
  inst.validate();
  cfg.validate();
  WlpResult res;
  const int l = inst.l, d = inst.lambda.d();
  res.k = std::max(0, 2 * l - inst.n);
  if (res.k == 0) return res;
  const SeriesNumerator num_l = series_pow(reducible_numerator(inst.lambda), l);
  SeriesNumerator shift = SeriesNumerator::one();
  for (int i = 0; i <= res.k; ++i) {
    if (i > 0) shift = shift * SeriesNumerator::one_minus_power(1);
    LadderStep step;
    step.i = i;
    step.vars = 2 * l - i;
    step.expected = plus_truncate(expand_rational(num_l * shift, 2 * l, d));
    Instance sub{step.vars, l, inst.lambda};
    // Seeded by (l, lambda, vars) only, so every cell sharing the level agrees.
    const std::uint64_t seed = derive_seed(cfg.seed, 0x1adde7, l, partition_label(inst.lambda), step.vars);
    LadderCache::Key key{l, inst.lambda.str(), step.vars, cfg.p, seed, cfg.trials};
    std::optional<std::vector<std::size_t>> cached = cache ? cache->find(key) : std::nullopt;
    if (cached) {
      step.oracle = *cached;
    } else {
      std::vector<int> degrees;
      std::vector<std::size_t> caps;
      for (int j = 0; j <= d; ++j) {
        degrees.push_back(j);
        Int cols = monomial_count(step.vars, j);
        // The truncated series bounds the Hilbert function from below, so the
        // rank can never exceed cols - expected.
        Int cap = cols - step.expected[j];
        caps.push_back(cap > 0 ? static_cast<std::size_t>(cap) : 0);
      }
      Probe pr = probe(sub, cfg, seed, degrees, &caps, true);
      step.oracle.resize(degrees.size());
      for (std::size_t a = 0; a < degrees.size(); ++a) step.oracle[a] = pr.cols[a] - pr.max_rank[a];
      if (cache) cache->store(key, step.oracle);
    }
    step.match = true;
    for (int j = 0; j <= d; ++j) step.match = step.match && Int(step.oracle[j]) == step.expected[j];
    res.pass = res.pass && step.match;
    res.ladder.push_back(std::move(step));
  }
  return res;
}

FroebergResult froeberg_oracle_r2(int n, int l, int k, int d, const PrimeFieldConfig& cfg) {
  cfg.validate();
  if (k < 1 || 2 * k > d) throw std::invalid_argument("need 1 <= k <= d/2");
  if (n < 1 || l < 1) throw std::invalid_argument("need n >= 1 and l >= 1");
  FroebergResult res;
  std::vector<int> degs;
  SeriesNumerator num = SeriesNumerator::one();
  for (int i = 0; i < l; ++i) {
    degs.push_back(k);
    degs.push_back(d - k);
    num = num * SeriesNumerator::one_minus_power(k) * SeriesNumerator::one_minus_power(d - k);
  }
  res.predicted = plus_truncate(expand_rational(num, n, d));
  res.recursive_agrees = froeberg_recursive(n, degs, d) == res.predicted;
  std::vector<std::size_t> best(d + 1, 0);
  const std::uint64_t seed = derive_seed(cfg.seed, 0xf20e, n, l, k, d);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    std::vector<HomogeneousForm> gens;
    for (std::size_t g = 0; g < degs.size(); ++g) {
      Rng rng(derive_seed(seed, trial, g));
      gens.push_back(random_form(n, degs[g], cfg.p, rng));
    }
    for (int j = 0; j <= d; ++j) best[j] = std::max(best[j], ideal_piece_rank(gens, j, cfg));
  }
  res.hilbert.resize(d + 1);
  res.froeberg_match = true;
  for (int j = 0; j <= d; ++j) {
    res.hilbert[j] = checked_columns(n, j, cfg) - best[j];
    res.froeberg_match = res.froeberg_match && Int(res.hilbert[j]) == res.predicted[j];
  }
  return res;
}

}  // namespace secant

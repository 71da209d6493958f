#include "secant/workbench.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

namespace secant {

const char* to_string(RowState s) {
  switch (s) {
    case RowState::ok: return "ok";
    case RowState::predictor_only: return "predictor_only";
    case RowState::finding: return "finding";
    case RowState::proven_disagreement: return "proven_disagreement";
    case RowState::skipped: return "skipped";
  }
  return "?";
}

namespace {

PredictionReport family_prediction(const std::string& family, const Instance& inst) {
  if (family == "linear_factor") return linear_factor_predict(inst.n, inst.l, inst.lambda.d());
  if (family == "reducible_forms") return reducible_forms_predict(inst.n, inst.l, inst.lambda.d());
  return predict(inst);
}

void attach_oracle(SweepRow& row, const PrimeFieldConfig& cfg) {
  try {
    OracleRun run = oracle_run(row.inst, cfg, false);
    row.oracle_dim = run.secant_dim;
    row.trial_ranks = run.trial_ranks;
    row.oracle_seed = run.seed;
    row.agree = Int(run.secant_dim) == row.prediction.predicted;
    if (*row.agree) {
      row.state = RowState::ok;
      return;
    }
    std::ostringstream why;
    why << "oracle " << run.secant_dim << " vs predicted " << row.prediction.predicted << "; p=" << run.p
        << " seed=" << run.seed << " ranks=";
    for (std::size_t t = 0; t < run.trial_ranks.size(); ++t) why << (t ? "/" : "") << run.trial_ranks[t];
    row.note = why.str();
    row.state = row.prediction.status == Status::proven ? RowState::proven_disagreement : RowState::finding;
  } catch (const ResourceGuardError& e) {
    row.state = RowState::skipped;
    row.note = e.what();
  }
}

SweepRow evaluate(const std::string& family, const Instance& inst, const SweepConfig& cfg, LadderCache* cache) {
  auto t0 = std::chrono::steady_clock::now();
  SweepRow row;
  row.family = family;
  row.inst = inst;
  row.prediction = family_prediction(family, inst);
  if (!cfg.predictor_only) attach_oracle(row, cfg.oracle);
  if (cfg.wlp && 2 * inst.l > inst.n) {
    try {
      row.wlp = wlp_consequence_check(inst, cfg.oracle, cache);
      if (!row.wlp->pass) {
        std::ostringstream why;
        why << (row.note.empty() ? "" : "; ") << "wlp ladder mismatch (seed " << cfg.oracle.seed << ", p "
            << cfg.oracle.p << ")";
        row.note += why.str();
      }
    } catch (const ResourceGuardError& e) {
      row.note += (row.note.empty() ? "" : "; ") + std::string("wlp skipped: ") + e.what();
    }
  }
  row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

void tally(SweepSummary& s, const SweepRow& row) {
  ++s.rows;
  if (row.prediction.status == Status::proven) ++s.proven;
  else ++s.conjectural;
  switch (row.state) {
    case RowState::ok: ++s.agree; break;
    case RowState::finding: ++s.disagree; ++s.findings; break;
    case RowState::proven_disagreement: ++s.disagree; ++s.proven_disagreements; break;
    case RowState::skipped: ++s.skipped; break;
    case RowState::predictor_only: ++s.not_run; break;
  }
  if (row.wlp && row.wlp->k > 0) {
    ++s.wlp_checked;
    if (!row.wlp->pass) {
      ++s.wlp_failed;
      if (row.prediction.status == Status::proven) ++s.wlp_failed_proven;
    }
  }
}

void hook_tally(SweepSummary& s, int bound) {
  for (int n = 3; n <= bound; ++n)
    for (int l = n + 1; l <= bound; ++l)
      for (int sv = 1; sv <= bound; ++sv)
        for (int d1 = 2 * sv; d1 < (n - 1) * (sv - 1); ++d1) {
          std::vector<int> parts(static_cast<std::size_t>(sv) + 1, 1);
          parts[0] = d1;
          HookImplication res = hook_implication_check(n, l, Partition(parts));
          ++s.hook_rows;
          if (res.g <= 0) {
            ++s.hook_g_nonpositive;
            if (!res.implication_holds) ++s.hook_failures;
          }
        }
}

std::string csv_quote(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

SweepRow verify_case(const Instance& inst, const PrimeFieldConfig& cfg) {
  SweepConfig sc;
  sc.oracle = cfg;
  return evaluate("general", inst, sc, nullptr);
}

std::vector<std::pair<std::string, Instance>> sweep_instances(const SweepConfig& cfg) {
  std::vector<std::pair<std::string, Instance>> cells;
  static const char* kOrder[] = {"general", "linear_factor", "balanced", "reducible_forms", "n3line"};
  for (const char* fam : kOrder) {
    if (!cfg.families.count(fam)) continue;
    const std::string family = fam;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
      for (int l = cfg.l_min; l <= cfg.l_max; ++l)
        for (int d = std::max(cfg.d_min, 2); d <= cfg.d_max; ++d) {
          std::vector<Partition> parts;
          if (family == "general") {
            parts = enumerate_partitions(d, 2, std::min(cfg.r_max, d));
          } else if (family == "linear_factor") {
            if (d >= 3) parts.emplace_back(std::vector<int>{d - 1, 1});
          } else if (family == "balanced") {
            if (d % 2 == 0) parts.emplace_back(std::vector<int>{d / 2, d / 2});
          } else if (family == "reducible_forms") {
            parts.emplace_back(std::vector<int>{d - 1, 1});
          } else if (family == "n3line") {
            if (n == 3 && l == 2) parts = enumerate_partitions(d, 2, std::min(cfg.r_max, d));
          }
          for (auto& p : parts) cells.push_back({family, Instance{n, l, p}});
        }
  }
  return cells;
}

SweepResult sweep(const SweepConfig& cfg, const std::function<void(const SweepRow&)>& on_row) {
  if (!cfg.predictor_only || cfg.wlp) cfg.oracle.validate();
  SweepResult result;
  auto cells = sweep_instances(cfg);
  LadderCache cache;
  result.rows.reserve(cells.size());
  ordered_parallel<SweepRow>(
      cells.size(), cfg.threads,
      [&](std::size_t i) { return evaluate(cells[i].first, cells[i].second, cfg, &cache); },
      [&](std::size_t, SweepRow&& row) {
        tally(result.summary, row);
        if (on_row) on_row(row);
        result.rows.push_back(std::move(row));
      });
  if (cfg.hook_region_max > 0) hook_tally(result.summary, cfg.hook_region_max);
  return result;
}

void write_csv_header(std::ostream& out) {
  out << "family,n,l,partition,d,r,s,N,expected,predicted,fills,defect,epsilon,status,oracle_dim,agree,"
         "state,trial_ranks,oracle_seed,wlp_k,wlp_pass,citation,note\n";
}

void write_csv_row(std::ostream& out, const SweepRow& row) {
  const PredictionReport& p = row.prediction;
  std::string ranks;
  for (std::size_t t = 0; t < row.trial_ranks.size(); ++t) ranks += (t ? ";" : "") + std::to_string(row.trial_ranks[t]);
  out << row.family << ',' << row.inst.n << ',' << row.inst.l << ',' << csv_quote(row.inst.lambda.str()) << ','
      << row.inst.lambda.d() << ',' << row.inst.lambda.r() << ',' << row.inst.lambda.s() << ',' << p.N << ','
      << p.expected << ',' << p.predicted << ',' << (p.fills ? 1 : 0) << ',' << p.defect << ',' << p.epsilon << ','
      << to_string(p.status) << ',' << (row.oracle_dim ? std::to_string(*row.oracle_dim) : "") << ','
      << (row.agree ? (*row.agree ? "1" : "0") : "") << ',' << to_string(row.state) << ',' << ranks << ','
      << (row.oracle_dim ? std::to_string(row.oracle_seed) : "") << ','
      << (row.wlp ? std::to_string(row.wlp->k) : "") << ','
      << (row.wlp ? (row.wlp->pass ? "1" : "0") : "") << ',' << csv_quote(p.citation) << ',' << csv_quote(row.note)
      << '\n';
}

Json to_json(const SweepRow& row) {
  Json j;
  j["family"] = row.family;
  j["prediction"] = to_json(row.prediction);
  if (row.oracle_dim) {
    j["oracle_dim"] = *row.oracle_dim;
    j["agree"] = *row.agree;
    j["trial_ranks"] = row.trial_ranks;
    j["oracle_seed"] = row.oracle_seed;
  }
  if (row.wlp) j["wlp"] = to_json(*row.wlp);
  j["state"] = to_string(row.state);
  j["note"] = row.note;
  j["runtime_ms"] = row.runtime_ms;
  return j;
}

Json to_json(const SweepSummary& s) {
  Json j;
  j["rows"] = s.rows;
  j["proven"] = s.proven;
  j["conjectural"] = s.conjectural;
  j["agree"] = s.agree;
  j["disagree"] = s.disagree;
  j["skipped"] = s.skipped;
  j["not_run"] = s.not_run;
  j["proven_disagreements"] = s.proven_disagreements;
  j["findings"] = s.findings;
  j["wlp_checked"] = s.wlp_checked;
  j["wlp_failed"] = s.wlp_failed;
  j["wlp_failed_proven"] = s.wlp_failed_proven;
  j["hook_rows"] = s.hook_rows;
  j["hook_g_nonpositive"] = s.hook_g_nonpositive;
  j["hook_failures"] = s.hook_failures;
  return j;
}

}  // namespace secant

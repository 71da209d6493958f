#include "secant/report_json.hpp"
#include "secant/workbench.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace secant;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitProvenDisagreement = 3;
constexpr int kExitResourceGuard = 4;

struct OracleFlags {
  std::uint64_t prime = PrimeFieldConfig{}.p;
  int trials = PrimeFieldConfig{}.trials;
  std::uint64_t seed = PrimeFieldConfig{}.seed;
  std::size_t max_columns = PrimeFieldConfig{}.max_columns;

  void attach(CLI::App* app) {
    app->add_option("--prime", prime, "prime modulus");
    app->add_option("--trials", trials, "random specializations per case");
    app->add_option("--seed", seed, "root seed");
    app->add_option("--max-columns", max_columns, "resource guard on the graded piece size");
  }
  PrimeFieldConfig config() const {
    PrimeFieldConfig cfg;
    cfg.p = prime;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.max_columns = max_columns;
    cfg.validate();
    return cfg;
  }
};

std::pair<int, int> parse_range(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text + "', expected A:B");
  }
}

void print_prediction(const PredictionReport& rep, bool json) {
  if (json) {
    std::cout << to_json(rep).dump(2) << '\n';
    return;
  }
  std::cout << "n=" << rep.inst.n << " l=" << rep.inst.l << " partition=[" << rep.inst.lambda.str() << "]\n"
            << "  N=" << rep.N << " dimX=" << rep.dimX << " expected=" << rep.expected << " epsilon=" << rep.epsilon
            << '\n'
            << "  predicted=" << rep.predicted << (rep.fills ? " (fills)" : "") << " defect=" << rep.defect << '\n'
            << "  status=" << to_string(rep.status) << " [" << rep.citation << "]\n";
  for (auto& e : rep.errata) std::cout << "  note: " << e << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secant varieties of reducible hypersurfaces: predictions and a rank oracle"};
  app.require_subcommand(1);

  int n = 0, l = 0, d = 0, truncate = -1;
  std::string partition;
  bool json = false;
  OracleFlags oflags;

  auto* c_predict = app.add_subcommand("predict", "closed-form dimension prediction");
  c_predict->add_option("--n", n)->required();
  c_predict->add_option("--l", l)->required();
  c_predict->add_option("--partition", partition)->required();
  c_predict->add_flag("--json", json);

  std::string which = "predicted";
  auto* c_series = app.add_subcommand("series", "Hilbert series constructions");
  c_series->add_option("--n", n)->required();
  c_series->add_option("--l", l)->required();
  c_series->add_option("--partition", partition)->required();
  c_series->add_option("--truncate", truncate, "last degree")->required();
  c_series->add_option("--which", which)->check(CLI::IsMember({"numerator", "join", "artinian", "predicted"}));

  bool full_hilbert = false;
  auto* c_oracle = app.add_subcommand("oracle", "Terracini rank oracle over Z/p");
  c_oracle->add_option("--n", n)->required();
  c_oracle->add_option("--l", l)->required();
  c_oracle->add_option("--partition", partition)->required();
  c_oracle->add_flag("--full-hilbert", full_hilbert, "Hilbert function in every degree up to d");
  c_oracle->add_flag("--json", json);
  oflags.attach(c_oracle);

  auto* c_verify = app.add_subcommand("verify", "prediction against the oracle");
  c_verify->add_option("--n", n)->required();
  c_verify->add_option("--l", l)->required();
  c_verify->add_option("--partition", partition)->required();
  oflags.attach(c_verify);

  std::string n_range, l_range, families = "general", out_path, format = "csv";
  int d_max = 0, r_max = 0, threads = 0, hook_max = 0;
  bool predictor_only = false, wlp = false;
  auto* c_sweep = app.add_subcommand("sweep", "grid sweep");
  c_sweep->add_option("--n-range", n_range, "A:B, number of variables")->required();
  c_sweep->add_option("--l-range", l_range, "A:B, secant index")->required();
  c_sweep->add_option("--d-max", d_max, "largest degree")->required();
  c_sweep->add_option("--r-max", r_max, "most parts per partition")->required();
  c_sweep->add_option("--families", families, "comma list: general,linear_factor,balanced,reducible_forms,n3line");
  c_sweep->add_flag("--predictor-only", predictor_only, "skip the oracle");
  c_sweep->add_flag("--wlp", wlp, "also run the Lefschetz ladder check where 2l > n");
  c_sweep->add_option("--threads", threads, "worker threads, 0 for all cores");
  c_sweep->add_option("--hook-region", hook_max, "tally the hook implication test for n, l, s up to this bound");
  c_sweep->add_option("--out", out_path, "output file")->required();
  c_sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  oflags.attach(c_sweep);

  auto* c_n3 = app.add_subcommand("n3line", "secant lines in the plane");
  c_n3->add_option("--partition", partition)->required();

  auto* c_lf = app.add_subcommand("lfactor", "partition [d-1,1]");
  c_lf->add_option("--n", n)->required();
  c_lf->add_option("--l", l)->required();
  c_lf->add_option("--d", d)->required();

  auto* c_rf = app.add_subcommand("redforms", "variety of reducible forms");
  c_rf->add_option("--n", n)->required();
  c_rf->add_option("--l", l)->required();
  c_rf->add_option("--d", d)->required();

  auto* c_segre = app.add_subcommand("segre", "Segre-side balance report");
  c_segre->add_option("--n", n)->required();
  c_segre->add_option("--l", l)->required();
  c_segre->add_option("--partition", partition)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (c_predict->parsed()) {
      print_prediction(predict(Instance{n, l, Partition::parse(partition)}), json);
    } else if (c_series->parsed()) {
      Instance inst{n, l, Partition::parse(partition)};
      inst.validate();
      if (truncate < 0) throw std::invalid_argument("truncation bound must be nonnegative");
      SeriesNumerator num = reducible_numerator(inst.lambda);
      Json out;
      out["which"] = which;
      if (which == "numerator") {
        out["terms"] = to_json(num);
        out["polynomial"] = to_polynomial_string(num);
      } else {
        TruncatedSeries s;
        SeriesNumerator num_l = series_pow(num, l);
        if (which == "join") s = expand_rational(num_l, n * l, truncate);
        else if (which == "artinian") s = expand_rational(num_l, 2 * l, truncate);
        else s = predicted_hilbert(n, l, inst.lambda, truncate);
        out["coefficients"] = to_json(s);
        out["polynomial"] = to_polynomial_string(s);
      }
      std::cout << out.dump(2) << '\n';
    } else if (c_oracle->parsed()) {
      OracleRun run = oracle_run(Instance{n, l, Partition::parse(partition)}, oflags.config(), full_hilbert);
      if (json) {
        std::cout << to_json(run).dump(2) << '\n';
      } else {
        std::cout << "secant_dim=" << run.secant_dim << " codim=" << run.codim << " ranks=";
        for (std::size_t t = 0; t < run.trial_ranks.size(); ++t) std::cout << (t ? "," : "") << run.trial_ranks[t];
        std::cout << '\n';
        if (run.hilbert) {
          std::cout << "hilbert=";
          for (std::size_t j = 0; j < run.hilbert->size(); ++j) std::cout << (j ? "," : "") << (*run.hilbert)[j];
          std::cout << '\n';
        }
      }
    } else if (c_verify->parsed()) {
      SweepRow row = verify_case(Instance{n, l, Partition::parse(partition)}, oflags.config());
      std::cout << to_json(row).dump(2) << '\n';
      if (row.state == RowState::skipped) return kExitResourceGuard;
      if (row.state == RowState::proven_disagreement) return kExitProvenDisagreement;
    } else if (c_sweep->parsed()) {
      SweepConfig cfg;
      std::tie(cfg.n_min, cfg.n_max) = parse_range(n_range);
      std::tie(cfg.l_min, cfg.l_max) = parse_range(l_range);
      cfg.d_max = d_max;
      cfg.r_max = r_max;
      cfg.families.clear();
      std::stringstream ss(families);
      for (std::string f; std::getline(ss, f, ',');) {
        static const std::set<std::string> known{"general", "linear_factor", "balanced", "reducible_forms", "n3line"};
        if (!known.count(f)) throw std::invalid_argument("unknown family: " + f);
        cfg.families.insert(f);
      }
      if (cfg.n_min < 3 || cfg.l_min < 1 || cfg.n_min > cfg.n_max || cfg.l_min > cfg.l_max)
        throw std::invalid_argument("ranges need 3 <= n_min <= n_max and 1 <= l_min <= l_max");
      cfg.predictor_only = predictor_only;
      cfg.wlp = wlp;
      cfg.threads = threads;
      cfg.hook_region_max = hook_max;
      cfg.oracle = oflags.config();
      std::ofstream out(out_path);
      if (!out) throw std::invalid_argument("cannot open " + out_path);
      Json rows = Json::array();
      if (format == "csv") write_csv_header(out);
      SweepResult res = sweep(cfg, [&](const SweepRow& row) {
        if (format == "csv") write_csv_row(out, row);
        else rows.push_back(to_json(row));
      });
      if (format == "json") {
        Json doc;
        doc["rows"] = rows;
        doc["summary"] = to_json(res.summary);
        out << doc.dump(2) << '\n';
      }
      std::cout << to_json(res.summary).dump(2) << '\n';
      if (res.summary.proven_disagreements > 0) return kExitProvenDisagreement;
    } else if (c_n3->parsed()) {
      std::cout << to_json(n3_secant_line(Partition::parse(partition))).dump(2) << '\n';
    } else if (c_lf->parsed()) {
      print_prediction(linear_factor_predict(n, l, d), true);
    } else if (c_rf->parsed()) {
      print_prediction(reducible_forms_predict(n, l, d), true);
    } else if (c_segre->parsed()) {
      Instance inst{n, l, Partition::parse(partition)};
      std::cout << to_json(segre_report(n, inst.lambda, l, predict(inst))).dump(2) << '\n';
    }
  } catch (const ResourceGuardError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kExitResourceGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}

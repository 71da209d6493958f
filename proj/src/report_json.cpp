#include "secant/report_json.hpp"

namespace secant {

Json to_json(const Int& v) { return v.str(); }

Json to_json(const TruncatedSeries& s) {
  Json out = Json::array();
  for (auto& c : s.coeffs()) out.push_back(c.str());
  return out;
}

Json to_json(const SeriesNumerator& s) {
  Json out = Json::array();
  for (auto& [deg, c] : s.terms()) out.push_back(Json::array({deg, c.str()}));
  return out;
}

Json to_json(const PredictionReport& rep) {
  Json j;
  j["n"] = rep.inst.n;
  j["l"] = rep.inst.l;
  j["partition"] = rep.inst.lambda.str();
  j["d"] = rep.inst.lambda.d();
  j["r"] = rep.inst.lambda.r();
  j["s"] = rep.inst.lambda.s();
  j["N"] = to_json(rep.N);
  j["dimX"] = to_json(rep.dimX);
  j["expected"] = to_json(rep.expected);
  j["predicted"] = to_json(rep.predicted);
  j["fills"] = rep.fills;
  j["defect"] = to_json(rep.defect);
  j["epsilon"] = to_json(rep.epsilon);
  j["status"] = to_string(rep.status);
  j["citation"] = rep.citation;
  Json a = Json::array();
  for (auto& v : rep.a_seq) a.push_back(v.str());
  j["a_seq"] = a;
  j["errata"] = rep.errata;
  return j;
}

Json to_json(const OracleRun& run) {
  Json j;
  j["n"] = run.inst.n;
  j["l"] = run.inst.l;
  j["partition"] = run.inst.lambda.str();
  j["prime"] = run.p;
  j["seed"] = run.seed;
  j["trial_ranks"] = run.trial_ranks;
  j["max_rank"] = run.max_rank;
  j["columns"] = run.columns;
  j["secant_dim"] = run.secant_dim;
  j["codim"] = run.codim;
  j["linear_reduced"] = run.linear_reduced;
  if (run.hilbert) j["hilbert"] = *run.hilbert;
  return j;
}

Json to_json(const WlpResult& res) {
  Json j;
  j["k"] = res.k;
  j["pass"] = res.pass;
  Json ladder = Json::array();
  for (auto& st : res.ladder) {
    Json s;
    s["i"] = st.i;
    s["vars"] = st.vars;
    s["oracle"] = st.oracle;
    s["expected"] = to_json(st.expected);
    s["match"] = st.match;
    ladder.push_back(s);
  }
  j["hilbert_ladder"] = ladder;
  return j;
}

Json to_json(const SegreReport& rep) {
  Json j;
  Json f = Json::array();
  for (auto& v : rep.factors) f.push_back(v.str());
  j["factors"] = f;
  j["balanced"] = rep.balanced;
  j["nondefective_implied"] = rep.nondefective_implied;
  return j;
}

Json to_json(const SecantLineN3Result& res) {
  Json j;
  j["classification"] = to_string(res.classification);
  j["defect"] = res.defect.str();
  j["p"] = res.p.str();
  j["exceptional"] = res.exceptional;
  j["dim"] = res.dim.str();
  return j;
}

}  // namespace secant

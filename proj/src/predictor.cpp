#include "secant/predictor.hpp"

#include <algorithm>
#include <stdexcept>

namespace secant {

const char* to_string(Status s) { return s == Status::proven ? "proven" : "conjectural"; }

const char* to_string(LineClass c) {
  switch (c) {
    case LineClass::fills: return "fills";
    case LineClass::defective: return "defective";
    case LineClass::nondefective: return "nondefective";
  }
  return "?";
}

const char* to_string(Family f) {
  switch (f) {
    case Family::balanced: return "balanced";
    case Family::linear_factor: return "linear_factor";
    case Family::reducible_forms: return "reducible_forms";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "balanced") return Family::balanced;
  if (name == "linear_factor") return Family::linear_factor;
  if (name == "reducible_forms") return Family::reducible_forms;
  throw std::invalid_argument("unknown family: " + name);
}

namespace {

Int alternating_tail(int l, int n, int s, int d, int k_start) {
  Int sum = 0;
  for (int k = k_start; k <= l; ++k) {
    Int term = binom(l, k) * binom(static_cast<long>(d) - static_cast<long>(k) * s + n - 1, n - 1);
    if (k % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

const char* kLinearFactorErratum =
    "dim of the [d-1,1] variety is C(d+n-2,n-1)+n-2 from the sum formula; "
    "the closed form C(d+n-2,n-1)+n-1 is off by one and unused";

bool all_ones(const Partition& lambda) { return lambda.d1() == 1; }

bool is_linear_factor(const Partition& lambda) { return lambda.r() == 2 && lambda.part(1) == 1; }

void set_status(PredictionReport& rep) {
  const Instance& in = rep.inst;
  const Partition& lam = in.lambda;
  const int n = in.n, l = in.l, r = lam.r(), s = lam.s();
  auto proven = [&](const char* why) {
    rep.status = Status::proven;
    rep.citation = why;
  };
  if (2 * l <= n) return proven("proper intersection: 2l <= n");
  if (r == 2 && 2 * l <= n + 1) return proven("r = 2, 2l <= n+1: complete intersection of general forms");
  if (r == 2 && n == 3) return proven("r = 2, n = 3: general forms in three variables (Anick)");
  if (r == 2 && lam.d() == 2) return proven("lambda = [1,1]");
  if (is_linear_factor(lam)) return proven("lambda = [d-1,1]: linear factor family");
  if (r >= 3 && n <= l && static_cast<long>(l - 1) * s <= lam.d1() + n - 1)
    return proven("r >= 3, n <= l <= 1 + (d1+n-1)/s");
  if (Int(l) >= binom(s + n - 1, n - 1)) return proven("l >= C(s+n-1,n-1)");
  if (n == 3 && l == 2) return proven("secant lines, n = 3: plane classification");
  if (n == 3 && all_ones(lam)) return proven("n = 3, all parts 1: plane configurations of lines (external)");
  rep.status = Status::conjectural;
  rep.citation = "conjectural: no proof covers this case";
}

}  // namespace

Int a_coeff(const Instance& inst, int j) {
  const Partition& lam = inst.lambda;
  const int n = inst.n, l = inst.l, d = lam.d(), r = lam.r();
  if (j < 0 || j > d) throw std::out_of_range("a_j index outside 0..d");
  auto B = [n](long top) { return binom(top + n - 1, n - 1); };
  Int a = B(j);
  Int sum = 0;
  for (int p : lam.parts()) sum += B(static_cast<long>(j) + p - d);
  a -= l * sum;
  a += Int(r - 1) * l * binom(j, d);
  for (int k = 2; k <= l; ++k) {
    Int term = binom(l, k) * B(static_cast<long>(j) - static_cast<long>(k) * (d - lam.d1()));
    if (k % 2) a -= term;
    else a += term;
  }
  a += binom(l, 2) * B(static_cast<long>(j) + 2 * lam.d2() - 2 * d);
  a += Int(l) * (l - 1) * B(static_cast<long>(j) + lam.d1() + lam.d2() - 2 * d);
  return a;
}

Int nonfilling_dim_formula(const Instance& inst) {
  const Partition& lam = inst.lambda;
  const int n = inst.n, l = inst.l, d = lam.d(), s = lam.s();
  auto B = [n](long top) { return binom(top + n - 1, n - 1); };
  Int dim = Int(l) * dim_variety(n, lam) + l - 1;
  for (int k = 2; k <= l; ++k) {
    Int term = binom(l, k) * B(static_cast<long>(lam.d1()) - static_cast<long>(k - 1) * s);
    if (k % 2) dim += term;
    else dim -= term;
  }
  dim -= binom(l, 2) * B(2L * lam.d2() - d);
  dim -= Int(l) * (l - 1) * B(static_cast<long>(lam.d1()) + lam.d2() - d);
  return dim;
}

PredictionReport predict(const Instance& inst) {
  inst.validate();
  PredictionReport rep;
  rep.inst = inst;
  const Partition& lam = inst.lambda;
  const int d = lam.d(), s = lam.s();
  rep.N = inst.N();
  rep.dimX = dim_variety(inst.n, lam);
  Expected e = expected_dim(inst);
  rep.expected = e.expected;
  rep.epsilon = e.epsilon;

  rep.a_seq.reserve(d + 1);
  for (int j = 0; j <= d; ++j) {
    rep.a_seq.push_back(a_coeff(inst, j));
    if (j < s && rep.a_seq.back() <= 0) throw std::logic_error("a_j must be positive below s");
    if (j >= s && rep.a_seq.back() <= 0 && !rep.first_nonpositive) rep.first_nonpositive = j;
  }
  rep.fills = rep.first_nonpositive.has_value();
  if (rep.fills) {
    rep.predicted = rep.N - 1;
  } else {
    rep.predicted = rep.N - 1 - rep.a_seq[d];
    if (rep.predicted != nonfilling_dim_formula(inst))
      throw std::logic_error("closed dimension formula disagrees with N-1-a_d");
  }
  Int naive = Int(inst.l) * rep.dimX + inst.l - 1;
  rep.overly_fills = rep.predicted == rep.N - 1 && rep.N - 1 < naive;
  rep.defect = rep.expected - rep.predicted;
  set_status(rep);
  if (is_linear_factor(lam)) rep.errata.emplace_back(kLinearFactorErratum);

  if (inst.n == 3 && inst.l == 2) {
    SecantLineN3Result line = n3_secant_line(lam);
    if (line.dim != rep.predicted)
      throw std::logic_error("plane secant-line classification disagrees with a_j prediction for " +
                             lam.str());
  }
  return rep;
}

Int syz_dim(int n, int l, int s, int d) { return alternating_tail(l, n, s, d, 2); }

Int gould_sum(int l, int n, int s, int d) { return alternating_tail(l, n, s, d, 0); }

SecantLineN3Result n3_secant_line(const Partition& lambda) {
  if (lambda.r() < 2) throw std::invalid_argument("partition needs at least two parts");
  SecantLineN3Result res;
  const auto& pt = lambda.parts();
  const int r = lambda.r(), s = lambda.s(), d1 = lambda.d1();
  for (int i = 1; i < r; ++i)
    for (int j = i + 1; j < r; ++j) res.p += Int(pt[i]) * pt[j];

  Instance inst{3, 2, lambda};
  Int top = inst.N() - 1;
  Expected e = expected_dim(inst);

  if (r == 3) {
    int a = pt[1], b = pt[2];
    res.exceptional = b == 1 || (b == 2 && a <= 6) || (a == 3 && b == 3);
  } else if (r == 4) {
    res.exceptional = pt[2] == 1 && pt[3] == 1 && pt[1] <= 4;
  } else if (r == 5) {
    res.exceptional = pt[1] == 1;
  }

  if (r == 2 || res.exceptional) {
    res.classification = LineClass::fills;
    res.dim = top;
  } else if (d1 >= s) {
    res.classification = LineClass::defective;
    res.defect = std::min(binom(d1 - s + 2, 2), Int(2 * res.p - 3 * s));
    res.dim = e.expected - res.defect;
  } else {
    res.classification = LineClass::nondefective;
    res.dim = e.expected;
  }
  return res;
}

int threshold_l0(Family family, int n, int d) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  const int start = (n + 1) / 2;
  if (family == Family::balanced) {
    if (d % 2) throw std::invalid_argument("balanced family needs even d");
    Int N = binom(d + n - 1, n - 1);
    Int B = binom(d / 2 + n - 1, n - 1);
    for (int l = start;; ++l) {
      Int L = l;
      if (N <= 2 * L * B + L - 2 * L * L || 2 * L >= B) return l;
    }
  }
  for (int l = start;; ++l)
    if (binom(d - l + n - 1, d) <= Int(l) * (n - l)) return l;
}

PredictionReport linear_factor_predict(int n, int l, int d) {
  if (d < 3) throw std::invalid_argument("linear factor family needs d >= 3");
  Instance inst{n, l, Partition({d - 1, 1})};
  inst.validate();
  PredictionReport rep;
  rep.inst = inst;
  rep.N = inst.N();
  rep.dimX = dim_variety(n, inst.lambda);
  Expected e = expected_dim(inst);
  rep.expected = e.expected;
  rep.epsilon = e.epsilon;
  for (int j = 0; j <= d; ++j) rep.a_seq.push_back(a_coeff(inst, j));
  int l0 = threshold_l0(Family::linear_factor, n, d);
  rep.fills = l >= l0 || l >= n;
  if (rep.fills) {
    rep.predicted = rep.N - 1;
  } else {
    rep.predicted = rep.N - binom(d + n - l - 1, d) + Int(l) * (n - l) - 1;
  }
  for (int j = 0; j <= d; ++j)
    if (rep.a_seq[j] <= 0) {
      rep.first_nonpositive = j;
      break;
    }
  Int naive = Int(l) * rep.dimX + l - 1;
  rep.overly_fills = rep.predicted == rep.N - 1 && rep.N - 1 < naive;
  rep.defect = rep.expected - rep.predicted;
  rep.status = Status::proven;
  rep.citation = "lambda = [d-1,1]: linear factor family, threshold l0 = " + std::to_string(l0);
  rep.errata.emplace_back(kLinearFactorErratum);
  return rep;
}

PredictionReport reducible_forms_predict(int n, int l, int d) {
  PredictionReport rep = d >= 3 ? linear_factor_predict(n, l, d) : predict(Instance{n, l, Partition({1, 1})});
  int l0 = threshold_l0(Family::reducible_forms, n, d);
  if (l >= l0) {
    rep.fills = true;
    rep.predicted = rep.N - 1;
    rep.defect = rep.expected - rep.predicted;
    rep.status = Status::proven;
    rep.citation = "reducible forms: l >= l0 = " + std::to_string(l0) + " fills";
  } else if (2 * l <= n) {
    rep.status = Status::proven;
    rep.citation = "reducible forms, 2l <= n: largest component [d-1,1] dominates";
  } else {
    rep.status = Status::conjectural;
    rep.citation = "reducible forms, n < 2l < 2*l0: [d-1,1] value conjectured";
  }
  return rep;
}

HookImplication hook_implication_check(int n, int l, const Partition& lambda) {
  const int d1 = lambda.d1(), s = lambda.s();
  if (d1 < s) throw std::invalid_argument("requires d1 >= s");
  HookImplication res;
  for (int k = 2; k <= l; ++k) {
    Int term = binom(l, k) * binom(static_cast<long>(d1) - static_cast<long>(k - 1) * s + n - 1, n - 1);
    if (k % 2) res.g -= term;
    else res.g += term;
  }
  if (res.g > 0) {
    res.implication_holds = true;
  } else {
    std::vector<int> hook(static_cast<std::size_t>(s) + 1, 1);
    hook[0] = d1;
    Int N = binom(d1 + s + n - 1, n - 1);
    res.implication_holds = Int(l) * dim_variety(n, Partition(hook)) + l >= N;
  }
  return res;
}

}  // namespace secant

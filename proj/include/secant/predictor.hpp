#pragma once

#include "secant/combinatorics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace secant {

enum class Status { proven, conjectural };
const char* to_string(Status);

struct PredictionReport {
  Instance inst;
  Int N;
  Int dimX;
  Int expected;
  Int epsilon;
  Int predicted;
  Int defect;
  bool fills = false;
  bool overly_fills = false;
  std::vector<Int> a_seq;
  std::optional<int> first_nonpositive;
  Status status = Status::conjectural;
  std::string citation;
  std::vector<std::string> errata;
};

Int a_coeff(const Instance& inst, int j);

// Closed dimension formula for the non-filling case, evaluated term by term.
Int nonfilling_dim_formula(const Instance& inst);

PredictionReport predict(const Instance& inst);

// sum_{k=2}^{l} (-1)^k C(l,k) C(d - k s + n - 1, n - 1)
Int syz_dim(int n, int l, int s, int d);

// Same alternating sum started at k = 0.
Int gould_sum(int l, int n, int s, int d);

enum class LineClass { fills, defective, nondefective };
const char* to_string(LineClass);

// Secant lines (l = 2) in the plane (n = 3).
struct SecantLineN3Result {
  LineClass classification = LineClass::nondefective;
  Int defect;
  Int p;
  bool exceptional = false;
  Int dim;
};
SecantLineN3Result n3_secant_line(const Partition& lambda);

enum class Family { balanced, linear_factor, reducible_forms };
const char* to_string(Family);
Family parse_family(const std::string&);

int threshold_l0(Family family, int n, int d);

// Partition [d-1, 1].
PredictionReport linear_factor_predict(int n, int l, int d);

// Variety of all reducible degree-d forms.
PredictionReport reducible_forms_predict(int n, int l, int d);

struct HookImplication {
  Int g;
  bool implication_holds = false;
};
HookImplication hook_implication_check(int n, int l, const Partition& lambda);

}  // namespace secant

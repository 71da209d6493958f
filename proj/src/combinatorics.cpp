#include "secant/combinatorics.hpp"

#include "secant/predictor.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace secant {

Int binom(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  Int result = 1;
  for (long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

Int monomial_count(int vars, long j) {
  if (j < 0) return 0;
  if (vars == 0) return j == 0 ? 1 : 0;
  return binom(j + vars - 1, vars - 1);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition needs at least one part");
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  d_ = 0;
  for (int p : parts_) d_ += p;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad partition text: '" + std::string(text) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::t() const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), parts_.front()));
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

void Instance::validate() const {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (l < 1) throw std::invalid_argument("l must be at least 1");
  if (lambda.r() < 2) throw std::invalid_argument("partition needs at least two parts");
}

Int Instance::N() const { return binom(lambda.d() + n - 1, n - 1); }

Int dim_variety(int n, const Partition& lambda) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  Int sum = 0;
  for (int p : lambda.parts()) sum += binom(p + n - 1, n - 1);
  return sum - lambda.r();
}

Expected expected_dim(const Instance& inst) {
  Int naive = Int(inst.l) * dim_variety(inst.n, inst.lambda) + inst.l - 1;
  Int top = inst.N() - 1;
  return {std::min(naive, top), naive > top ? Int(naive - top) : Int(0)};
}

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::less: return "less";
    case Dominance::greater: return "greater";
    case Dominance::equal: return "equal";
    case Dominance::incomparable: return "incomparable";
  }
  return "?";
}

Dominance partition_compare(const Partition& a, const Partition& b) {
  if (a.d() != b.d()) throw std::invalid_argument("partitions of different integers");
  bool ge = true, le = true;
  int sa = 0, sb = 0;
  std::size_t len = std::max(a.parts().size(), b.parts().size());
  for (std::size_t i = 0; i < len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) ge = false;
    if (sa > sb) le = false;
  }
  if (ge && le) return Dominance::equal;
  if (ge) return Dominance::greater;
  if (le) return Dominance::less;
  return Dominance::incomparable;
}

namespace {

void partitions_rec(int remaining, int max_part, int parts_left, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  int hi = std::min(max_part, remaining - (parts_left - 1));
  int lo = (remaining + parts_left - 1) / parts_left;
  for (int p = hi; p >= lo; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d, int r_min, int r_max) {
  std::vector<Partition> out;
  std::vector<int> cur;
  for (int r = std::max(r_min, 1); r <= std::min(r_max, d); ++r)
    partitions_rec(d, d, r, cur, out);
  return out;
}

SegreReport segre_report(int n, const Partition& lambda, int l, const PredictionReport& prediction) {
  SegreReport rep;
  for (int p : lambda.parts()) rep.factors.push_back(binom(p + n - 1, n - 1));
  Int prod = 1, sum = 0;
  for (std::size_t i = 1; i < rep.factors.size(); ++i) {
    prod *= rep.factors[i];
    sum += rep.factors[i] - 1;
  }
  rep.balanced = rep.factors[0] - 1 <= prod - sum;
  Int naive = Int(l) * dim_variety(n, lambda) + l - 1;
  rep.nondefective_implied = prediction.defect == 0 && prediction.status == Status::proven &&
                             prediction.predicted == naive;
  return rep;
}

}  // namespace secant

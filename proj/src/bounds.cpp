#include "stanley/bounds.hpp"

#include <algorithm>

#include "stanley/binomial.hpp"
#include "stanley/engine.hpp"
#include "stanley/errors.hpp"

namespace stanley {

namespace {

int ceil_div3(int a) { return a >= 0 ? (a + 2) / 3 : -((-a) / 3); }

void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_zero()) throw InputError(std::string(what) + " is undefined for the zero ideal");
  if (ideal.is_unit()) throw InputError(std::string(what) + " is undefined for the unit ideal");
}

void require_at_least(int n, int min, const char* what) {
  if (n < min) throw InputError(std::string(what) + " needs n >= " + std::to_string(min));
}

BoundEntry lower_entry(int raw, std::string provenance) {
  return BoundEntry{std::max(raw, 0), raw, std::move(provenance)};
}

BoundEntry upper_entry(int value, std::string provenance) {
  return BoundEntry{value, value, std::move(provenance)};
}

bool is_line(const MonomialIdeal& ideal) {
  return ideal.num_vars() >= 2 && ideal == line_ideal(ideal.num_vars());
}

bool is_cycle(const MonomialIdeal& ideal) {
  return ideal.num_vars() >= 3 && ideal == cycle_ideal(ideal.num_vars());
}

}  // namespace

int okazaki_lower(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "Okazaki's bound");
  const int m = static_cast<int>(ideal.num_generators());
  return std::max(1, ideal.num_vars() - m / 2);
}

int quotient_gen_lower(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "the generator-count bound for S/I");
  return ideal.num_vars() - static_cast<int>(ideal.num_generators());
}

int pair_lower(const MonomialIdeal& larger, const MonomialIdeal& smaller) {
  const GeneratorSplit split = generator_split(larger, smaller);
  const int p = static_cast<int>(smaller.num_generators());
  const int q = static_cast<int>(larger.num_generators());
  const int r = static_cast<int>(split.common_count);
  return larger.num_vars() - p - (q - r) / 2;
}

int sum_quotient_lower(int sdepth_ideal, int sdepth_quotient, int n) {
  return sdepth_ideal + sdepth_quotient - n;
}

int depth_line_quotient(int n) {
  require_at_least(n, 1, "depth(S/I_n)");
  return ceil_div3(n);
}

int depth_cycle_quotient(int n) {
  require_at_least(n, 3, "depth(S/J_n)");
  return ceil_div3(n - 1);
}

int sdepth_line_quotient(int n) {
  require_at_least(n, 1, "sdepth(S/I_n)");
  return ceil_div3(n);
}

int sdepth_cycle_mod_line(int n) {
  require_at_least(n, 3, "sdepth(J_n/I_n)");
  return ceil_div3(n + 2);
}

CycleBracket sdepth_cycle_quotient_bracket(int n) {
  require_at_least(n, 3, "sdepth(S/J_n)");
  CycleBracket b;
  b.lower = ceil_div3(n - 1);
  if (n % 3 != 1) {
    b.upper = b.lower;
    b.exact = b.lower;
    b.exact_source = "Thm 1.9(1)";
    return b;
  }
  b.upper = ceil_div3(n);
  switch (n) {
    case 4: b.exact = 1; break;
    case 7: b.exact = 2; break;
    case 10: b.exact = 4; break;
    case 13: b.exact = 5; break;
    default: break;
  }
  if (b.exact) b.exact_source = "Remark 1.11";
  return b;
}

std::int64_t cycle_beta_closed(int n, int t) {
  require_at_least(n, 3, "the cycle level-count formula");
  if (t < 0 || t > n) throw InputError("level t outside [0, n]");
  return checked_sub(binomial(n - t + 1, t), binomial(n - t - 1, t - 2));
}

int BoundReport::best_lower() const {
  int best = 0;
  for (const auto& b : lower_bounds) best = std::max(best, b.value);
  if (exact) best = std::max(best, exact->value);
  return best;
}

std::optional<int> BoundReport::best_upper() const {
  std::optional<int> best;
  for (const auto& b : upper_bounds) best = best ? std::min(*best, b.value) : b.value;
  if (exact) best = best ? std::min(*best, exact->value) : exact->value;
  return best;
}

nlohmann::json BoundReport::to_json() const {
  auto entries = [](const std::vector<BoundEntry>& list) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : list) arr.push_back({{"value", e.value}, {"raw", e.raw}, {"provenance", e.provenance}});
    return arr;
  };
  auto single = [](const std::optional<BoundEntry>& e) {
    return e ? nlohmann::json{{"value", e->value}, {"provenance", e->provenance}} : nlohmann::json(nullptr);
  };
  nlohmann::json j;
  j["target"] = target;
  j["infinite"] = infinite;
  j["lower_bounds"] = entries(lower_bounds);
  j["upper_bounds"] = entries(upper_bounds);
  j["exact"] = single(exact);
  j["depth_formula"] = single(depth_formula);
  j["stanley_conjecture"] = stanley_conjecture ? nlohmann::json(*stanley_conjecture) : nlohmann::json(nullptr);
  return j;
}

SubsetPoset poset_of_target(const BoundTarget& target, const PosetLimits& limits) {
  switch (target.kind) {
    case PosetKind::ideal: return poset_of_ideal(target.ideal, limits);
    case PosetKind::quotient: return poset_of_quotient(target.ideal, limits);
    case PosetKind::pair:
      if (!target.smaller) throw InputError("pair target needs two ideals");
      return poset_of_ideal_quotient(target.ideal, *target.smaller, limits);
  }
  throw InputError("unknown target kind");
}

BoundReport bound_report(const BoundTarget& target, const PosetLimits& limits) {
  BoundReport report;
  const MonomialIdeal& ideal = target.ideal;
  const int n = ideal.num_vars();

  switch (target.kind) {
    case PosetKind::ideal: {
      report.target = "I = " + ideal.to_string();
      report.infinite = ideal.is_zero();
      if (!ideal.is_zero() && !ideal.is_unit()) report.lower_bounds.push_back(lower_entry(okazaki_lower(ideal), "Thm 1.4"));
      // depth(I) = depth(S/I) + 1.
      if (is_line(ideal)) {
        report.depth_formula = BoundEntry{depth_line_quotient(n) + 1, depth_line_quotient(n) + 1, "Lemma 1.2"};
      } else if (is_cycle(ideal)) {
        report.depth_formula = BoundEntry{depth_cycle_quotient(n) + 1, depth_cycle_quotient(n) + 1, "Prop 1.3"};
      }
      break;
    }
    case PosetKind::quotient: {
      report.target = "S/I, I = " + ideal.to_string();
      report.infinite = ideal.is_unit();
      if (!ideal.is_zero() && !ideal.is_unit()) {
        report.lower_bounds.push_back(lower_entry(quotient_gen_lower(ideal), "Prop 2.6"));
      }
      if (is_line(ideal)) {
        const int v = sdepth_line_quotient(n);
        report.lower_bounds.push_back(lower_entry(v, "Lemma 1.6"));
        report.upper_bounds.push_back(upper_entry(v, "Lemma 1.6"));
        report.exact = BoundEntry{v, v, "Lemma 1.6"};
        report.depth_formula = BoundEntry{depth_line_quotient(n), depth_line_quotient(n), "Lemma 1.2"};
      } else if (is_cycle(ideal)) {
        const CycleBracket b = sdepth_cycle_quotient_bracket(n);
        report.lower_bounds.push_back(lower_entry(b.lower, "Prop 1.8"));
        report.upper_bounds.push_back(upper_entry(b.upper, n % 3 == 1 ? "Thm 1.9(2)" : "Thm 1.9(1)"));
        if (b.exact) report.exact = BoundEntry{*b.exact, *b.exact, b.exact_source};
        report.depth_formula = BoundEntry{depth_cycle_quotient(n), depth_cycle_quotient(n), "Prop 1.3"};
      }
      break;
    }
    case PosetKind::pair: {
      if (!target.smaller) throw InputError("pair target needs two ideals");
      const MonomialIdeal& smaller = *target.smaller;
      report.target = "J/I, J = " + ideal.to_string() + ", I = " + smaller.to_string();
      report.lower_bounds.push_back(lower_entry(pair_lower(ideal, smaller), "Prop 2.9"));
      report.infinite = ideal == smaller;
      if (is_cycle(ideal) && smaller == line_ideal(n)) {
        const int v = sdepth_cycle_mod_line(n);
        report.lower_bounds.push_back(lower_entry(v, "Prop 1.10"));
        report.upper_bounds.push_back(upper_entry(v, "Prop 1.10"));
        report.exact = BoundEntry{v, v, "Prop 1.10"};
        report.depth_formula = BoundEntry{v, v, "Prop 1.10"};
      }
      break;
    }
  }

  const bool squarefree = ideal.is_squarefree() && (!target.smaller || target.smaller->is_squarefree());
  if (squarefree && n <= std::min(limits.max_vars, kMaxPosetVars)) {
    const SubsetPoset poset = poset_of_target(target, limits);
    report.infinite = poset.empty();
    if (!poset.empty()) {
      report.upper_bounds.push_back(upper_entry(alpha_upper_bound(poset), "Thm 2.4 alpha-test"));
      report.upper_bounds.push_back(upper_entry(empty_cut_bound(poset), "empty-cut (Thm 1.9 proof)"));
    }
  }
  if (report.infinite) {
    report.upper_bounds.clear();
    report.exact.reset();
  }
  if (report.depth_formula) report.stanley_conjecture = report.best_lower() >= report.depth_formula->value;
  return report;
}

}  // namespace stanley

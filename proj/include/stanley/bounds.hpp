#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stanley/certificate_io.hpp"
#include "stanley/ideal.hpp"
#include "stanley/poset.hpp"

namespace stanley {

// Generator-count bounds. All throw InputError for the zero or unit ideal.

/// sdepth(I) >= max{1, n - floor(m/2)} for I minimally generated by m monomials.
int okazaki_lower(const MonomialIdeal& ideal);

/// sdepth(S/I) >= n - m. The raw value, possibly negative.
int quotient_gen_lower(const MonomialIdeal& ideal);

/// sdepth(J/I) >= n - p - floor((q - r)/2) with p = |G(I)|, q = |G(J)| and r
/// the number of generators of J lying in I. Throws InputError unless I is in J.
int pair_lower(const MonomialIdeal& larger, const MonomialIdeal& smaller);

/// sdepth((I+J)/I) >= sdepth(J) + sdepth(S/I) - n. The right side is
/// increasing in both arguments, so lower bounds in give a lower bound out.
int sum_quotient_lower(int sdepth_ideal, int sdepth_quotient, int n);

// Closed forms for the path and cycle families.

int depth_line_quotient(int n);   ///< ceil(n/3), n >= 1
int depth_cycle_quotient(int n);  ///< ceil((n-1)/3), n >= 3
int sdepth_line_quotient(int n);  ///< ceil(n/3), n >= 1
int sdepth_cycle_mod_line(int n); ///< ceil((n+2)/3) = sdepth = depth of J_n/I_n, n >= 3

struct CycleBracket {
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
  std::string exact_source;  ///< provenance label of the exact value, if any
};

/// sdepth(S/J_n): exact ceil((n-1)/3) for n = 0, 2 mod 3; for n = 1 mod 3 the
/// bracket [ceil((n-1)/3), ceil(n/3)] with known values at n = 4, 7, 10, 13.
CycleBracket sdepth_cycle_quotient_bracket(int n);

/// Number of independent t-sets of the n-cycle: C(n-t+1, t) - C(n-t-1, t-2).
std::int64_t cycle_beta_closed(int n, int t);

/// Which module a report describes. For pairs, `ideal` is J and `smaller` is I.
struct BoundTarget {
  PosetKind kind = PosetKind::quotient;
  MonomialIdeal ideal;
  std::optional<MonomialIdeal> smaller;
};

struct BoundEntry {
  int value = 0;  ///< displayed value; lower bounds are clamped at 0
  int raw = 0;    ///< the formula's literal value
  std::string provenance;
};

struct BoundReport {
  std::string target;
  bool infinite = false;  ///< the module is zero (empty poset)
  std::vector<BoundEntry> lower_bounds;
  std::vector<BoundEntry> upper_bounds;
  std::optional<BoundEntry> exact;
  std::optional<BoundEntry> depth_formula;
  /// sdepth >= depth established by the listed bounds (family targets only).
  std::optional<bool> stanley_conjecture;

  int best_lower() const;
  std::optional<int> best_upper() const;
  nlohmann::json to_json() const;
};

/// Collect every bound that applies to the target. Poset-based upper bounds
/// (alpha-test, empty cut) are included only for squarefree input.
BoundReport bound_report(const BoundTarget& target, const PosetLimits& limits = {});

/// The poset whose Stanley depth equals that of the target module.
SubsetPoset poset_of_target(const BoundTarget& target, const PosetLimits& limits = {});

}  // namespace stanley

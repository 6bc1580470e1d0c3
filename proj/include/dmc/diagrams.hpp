#ifndef DMC_DIAGRAMS_HPP
#define DMC_DIAGRAMS_HPP

#include "dmc/eval.hpp"

namespace dmc {

struct SuiteReport {
  std::string name;
  std::vector<DiagramReport> diagrams;

  bool passed() const {
    for (const auto& d : diagrams)
      if (!d.commutes()) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (const auto& d : diagrams)
      if (!d.commutes()) n++;
    return n;
  }
};

/// The two distributivity squares (numeral tensored with an injected point
/// against the injected pair) for m <= m_max, points up to val_bound, both
/// injections, plus the two-fold-power variant for m1, m2 <= alpha_max.
SuiteReport prop3_suite(const CheckConfig& cfg, unsigned long long fuel,
                        unsigned long long m_max = 32,
                        unsigned long long val_bound = 8,
                        unsigned long long alpha_max = 8);

/// T d = d', G d = d', M_p d = d' at reindexed objects: the functor action
/// on a distributivity arrow against the arrow rebuilt at the transformed
/// objects; identical judgments plus pointwise agreement.
SuiteReport coherence_suite(const CheckConfig& cfg, unsigned long long fuel);

/// Naturality of eta on functions kept at safety level 1, checked pointwise
/// up to bound.
SuiteReport eta_suite(const CheckConfig& cfg, unsigned long long fuel,
                      unsigned long long bound = 32);

/// The minimization coalgebra square for a family of terminating step maps:
/// unfolding the result against one application of the step map followed by
/// the recursive minimization, on all inputs up to input_bound. The final
/// diagram uses a witness-free step map and counts as commuting only when
/// evaluation exhausts exactly the configured fuel.
SuiteReport min_square_suite(const CheckConfig& cfg, unsigned long long fuel,
                             unsigned long long input_bound = 64);

std::vector<SuiteReport> all_suites(const CheckConfig& cfg,
                                    unsigned long long fuel);

}  // namespace dmc

#endif

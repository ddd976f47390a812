#include "evarlab/evar/maximality.hpp"

#include "evarlab/algebra/ideal_ops.hpp"
#include "evarlab/errors.hpp"

namespace evarlab::evar {

MaximalityReport detect_nontrivially_maximal(
    const EigenvalueIdeal& E, const std::vector<std::vector<int>>& lk,
    const algebra::GroebnerOptions& opts) {
  std::size_t n = E.components;
  if (n == 0) throw Error("detect_nontrivially_maximal: no components");
  if (lk.size() != n)
    throw Error("detect_nontrivially_maximal: linking matrix has " +
                std::to_string(lk.size()) + " rows for " + std::to_string(n) +
                " components");

  algebra::GroebnerOptions step = opts;
  step.stage = "maximality saturation";

  MaximalityReport report;
  report.residual = E.ideal;
  for (const auto& sigma : rep::canonical_sign_vectors(n)) {
    std::string label;
    for (int s : sigma) label += s > 0 ? '+' : '-';
    report.sigma_labels.push_back(std::move(label));
    algebra::Ideal sheet = rep::abelian_ideal(lk, sigma, E.ideal.ring);
    report.contained_in_sigma.push_back(
        algebra::radical_contains(E.ideal, sheet, step));
    report.residual = algebra::saturate(report.residual, sheet, step);
  }
  report.dimension = algebra::ideal_dimension(report.residual, step);
  report.verdict = report.dimension == static_cast<int>(n);
  return report;
}

}  // namespace evarlab::evar

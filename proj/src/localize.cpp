#include "simulroots/localize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "simulroots/errors.hpp"

namespace simulroots {

std::vector<InclusionDisk> inclusion_disks(const MonicPolynomial& f, const ApproximationVector& z0,
                                           const NormParameter& norm) {
  const auto q = step_quantities(f, z0, norm);
  const auto cert = certify_from_E(CertificateKind::localization, q.E,
                                   MethodParams::make(f.degree(), norm));
  if (!cert.satisfied) {
    throw Error(ErrorKind::certificate_not_satisfied, "localization condition does not hold at z0");
  }
  if (cert.degenerate || !cert.disk_ratio) {
    throw Error(ErrorKind::certificate_degenerate, "theta * lambda^2 >= 1");
  }
  const double C = *cert.disk_ratio;
  std::vector<InclusionDisk> disks(z0.size());
  for (std::size_t i = 0; i < z0.size(); ++i) {
    disks[i] = {z0[i] - q.W[i], C * std::abs(q.W[i])};
  }
  return disks;
}

bool simplicity_verdict(const MonicPolynomial& f, const ApproximationVector& z0,
                        const NormParameter& norm) {
  return certify_localization(f, z0, norm).satisfied;
}

DisjointnessReport check_disjoint(std::span<const InclusionDisk> disks) {
  DisjointnessReport r;
  r.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      const double gap =
          std::abs(disks[i].center - disks[j].center) - (disks[i].radius + disks[j].radius);
      r.min_gap = std::min(r.min_gap, gap);
      if (!(gap > 0.0)) r.disjoint = false;
    }
  }
  return r;
}

std::optional<std::vector<std::size_t>> match_roots_to_disks(std::span<const InclusionDisk> disks,
                                                             std::span<const Complex> roots) {
  if (disks.size() != roots.size()) return std::nullopt;
  std::vector<std::size_t> assign(roots.size());
  std::vector<bool> taken(disks.size(), false);
  for (std::size_t r = 0; r < roots.size(); ++r) {
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < disks.size(); ++k) {
      const double dist = std::abs(roots[r] - disks[k].center);
      if (dist < best_dist) {
        best_dist = dist;
        best = k;
      }
    }
    if (taken[best] || !(best_dist < disks[best].radius)) return std::nullopt;
    taken[best] = true;
    assign[r] = best;
  }
  return assign;
}

}  // namespace simulroots

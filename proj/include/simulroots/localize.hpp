#pragma once

#include <optional>
#include <span>
#include <vector>

#include "simulroots/certify.hpp"

namespace simulroots {

struct InclusionDisk {
  Complex center;
  double radius = 0.0;
};

/// Disks centred at z_i - W_i(z0) with radius C |W_i(z0)|,
/// C = theta*lambda / (1 - theta*lambda^2). Under the localization certificate
/// they are mutually disjoint and each holds exactly one zero.
///
/// Throws Error(certificate_not_satisfied) when the certificate fails and
/// Error(certificate_degenerate) when theta*lambda^2 >= 1.
std::vector<InclusionDisk> inclusion_disks(const MonicPolynomial& f, const ApproximationVector& z0,
                                           const NormParameter& norm);

/// True iff the localization certificate holds, which proves all zeros
/// simple. False means "not certified", never "has a multiple zero".
bool simplicity_verdict(const MonicPolynomial& f, const ApproximationVector& z0,
                        const NormParameter& norm);

struct DisjointnessReport {
  bool disjoint = true;
  /// min over pairs of |c_i - c_j| - (r_i + r_j); reported so near-tangency
  /// (gap below ~1e-14) is visible.
  double min_gap = 0.0;
};

DisjointnessReport check_disjoint(std::span<const InclusionDisk> disks);

/// Assigns each root to the disk with the nearest centre and returns the
/// assignment (root index -> disk index) if it is a bijection with every root
/// strictly inside its disk.
std::optional<std::vector<std::size_t>> match_roots_to_disks(std::span<const InclusionDisk> disks,
                                                             std::span<const Complex> roots);

}  // namespace simulroots

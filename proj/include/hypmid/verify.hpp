#pragma once

// Seeded invariant sweeps. The samplers are shared with the tests; the sweep
// itself backs `hypmid verify`. Reports contain no timings, so identical
// configurations produce identical text.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hypmid/constructions.hpp"

namespace hypmid {

using Rng = std::mt19937_64;

enum class Suite { HalfPlane, Disk, All };

Suite parse_suite(std::string_view text);
std::string_view to_string(Suite suite);

struct SweepConfig {
  Suite suite = Suite::All;
  int samples = 1000;
  std::uint64_t seed = 42;
  double min_separation = 1e-3;   // Euclidean |x − y|
  double max_modulus = 0.95;      // disk points stay in |p| ≤ this
  double min_modulus_gap = 1e-3;  // ||x| − |y|| for the bisector-circle claims
  double min_noncollinear = 1e-3; // |sin ∠x0y|
  double tol = 1e-8;              // claim threshold

  bool valid() const;
};

// --- Samplers -----------------------------------------------------------------

double uniform(Rng& rng, double lo, double hi);

/// Area-uniform in the closed disk of radius `max_modulus`.
Point2d sample_disk_point(Rng& rng, double max_modulus);

/// Disk pair satisfying every admissibility filter of `cfg`.
std::pair<Point2d, Point2d> sample_disk_pair(Rng& rng, const SweepConfig& cfg);

/// |x| = |y| exactly (same radius, different angles), noncollinear with 0.
std::pair<Point2d, Point2d> sample_equal_moduli_pair(Rng& rng, const SweepConfig& cfg);

/// Both points on one diameter.
std::pair<Point2d, Point2d> sample_diameter_pair(Rng& rng, const SweepConfig& cfg);

/// H² pair on a semicircle centered on the real axis, x₂ ≠ y₂ not required.
std::pair<Point2d, Point2d> sample_halfplane_pair(Rng& rng, const SweepConfig& cfg);

/// H² pair on one vertical line.
std::pair<Point2d, Point2d> sample_vertical_pair(Rng& rng, const SweepConfig& cfg);

/// Distinct x, y on S¹ ∩ H², angular gap at least `min_separation`.
std::pair<Point2d, Point2d> sample_unit_arc_pair(Rng& rng, const SweepConfig& cfg);

/// Disk pair whose inversion arc x^*, x, y, y^* is a semicircle of S¹(a,r_a).
std::pair<Point2d, Point2d> sample_semicircle_pair(Rng& rng, const SweepConfig& cfg);

// --- Sweep --------------------------------------------------------------------

struct ClaimSummary {
  std::string group;
  std::string name;
  double max_residual = 0.0;
  int evaluated = 0;
  int skipped = 0;   // condition not met, or the method does not apply
  int failures = 0;  // residual above the threshold, or an unexpected error

  bool pass() const { return failures == 0; }
};

struct SweepReport {
  SweepConfig config;
  std::vector<ClaimSummary> claims;

  bool all_pass() const;
  /// One line per claim, fixed formatting.
  std::string to_text() const;
};

SweepReport run_sweep(const SweepConfig& cfg);

}  // namespace hypmid

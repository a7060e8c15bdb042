#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sqz/maps.hpp"
#include "sqz/types.hpp"

namespace sqz {

struct CertifyConfig;

// The sample set used by inscribed-radius certification. Rays are points of
// the closed unit polydisk; the trial at radius r tests the scaled points
// r·u, so validation is monotone per ray. Probes are fixed obstruction
// points (images of punctures) tested against the open polydisk directly.
struct RaySet {
  std::vector<CVector> rays;
  std::vector<CVector> probes;
  std::vector<CVector> probe_preimages;  // parallel to probes
  std::size_t torus_count = 0;
  std::size_t face_count = 0;
  std::size_t interior_count = 0;
};

// Deterministic sample construction: torus directions use per-coordinate
// golden-ratio rotations with seeded phase offsets, faces pin one coordinate
// to the torus and draw the rest uniformly from the closed disk, interior
// points are uniform in the closed unit polydisk. Identical cfg+seed yields
// identical rays.
RaySet build_rays(int dim, const CertifyConfig& cfg);

// Adds obstruction probes for every puncture of f.source (recursively for
// products): the probe is f.forward at the excluded point, with the other
// product blocks held at the map's center f⁻¹(0).
void add_puncture_probes(const HoloMap& f, RaySet& rays);

// Index of the first failing sample at trial radius r, or -1 when all pass.
// Probes occupy indices [0, probes.size()); ray k maps to probes.size()+k.
// A probe fails when it lies in the open polydisk of radius r; a ray fails
// when r·u is not in the image of f. The two implementations are
// result-identical; the parallel one reduces by minimum index, so thread
// count never changes the outcome.
std::ptrdiff_t scan_first_failure_serial(const HoloMap& f, const RaySet& rays,
                                         double r);
std::ptrdiff_t scan_first_failure_parallel(const HoloMap& f, const RaySet& rays,
                                           double r);

// Dispatches to the parallel kernel when OpenMP is compiled in.
std::ptrdiff_t scan_first_failure(const HoloMap& f, const RaySet& rays, double r);

}  // namespace sqz

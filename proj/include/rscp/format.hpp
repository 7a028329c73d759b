#pragma once

// File writers for grids (VTK legacy), meshes (OBJ), contours and potential
// samples (CSV). Data files never carry timestamps.

#include <iosfwd>
#include <span>
#include <string>

#include "rscp/density.hpp"
#include "rscp/surface.hpp"

namespace rscp::format {

/// printf "%.<digits>g".
std::string num(double x, int digits = 9);

/// x rounded to `digits` significant digits (for JSON emission).
double round_sig(double x, int digits);

/// "n=2 l=1 m=0 Z=1 b=0.5 c=0.5 m'=... gamma1=... k=... l'=... n_r=... n'=... lambda=... E=..."
std::string state_summary(const states::StateLabels& labels, const states::PotentialParams& params,
                          const states::QuasiNumbers& q);

void write_vtk(std::ostream& os, const density::DensityGrid& grid);
void write_obj(std::ostream& os, const surface::TriangleMesh& mesh, const density::DensityGrid& grid, bool cutaway);
void write_contours_csv(std::ostream& os, std::span<const surface::ContourSet> sets, const density::DensityGrid& grid);

}  // namespace rscp::format

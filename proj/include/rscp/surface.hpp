#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "rscp/density.hpp"

namespace rscp::surface {

using Vec3 = std::array<double, 3>;

struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<double> vertex_scalar;
  double level = 0;

  bool empty() const { return triangles.empty(); }
};

/// One entry of the marching-cubes case table: up to five triangles as
/// local cube-edge indices, terminated by -1.
using CaseEntry = std::array<std::int8_t, 16>;

/// The 256-case table. Generated once by tracing the iso-polygon of every
/// corner configuration around the cube faces. Ambiguous faces always
/// separate the supra-level corners, a rule that depends only on the face,
/// so neighbouring cells agree and the surface is watertight. Triangles are
/// wound with normals pointing toward decreasing field.
const std::array<CaseEntry, 256>& case_table();

/// Cube corner c sits at offset (c & 1, (c >> 1) & 1, (c >> 2) & 1); edge e
/// joins corners cube_edges()[e][0] < cube_edges()[e][1].
const std::array<std::array<int, 2>, 12>& cube_edges();

/// Isosurface of a relative (max = 100) grid. A corner is inside when its
/// value exceeds `level`. Vertices are shared between cells and emitted in
/// cell order; triangles are emitted in cell-index order.
TriangleMesh marching_cubes(const density::DensityGrid& grid, double level);

/// Removes the octant x < 0, y < 0, z > 0 and caps the three exposed
/// quarter planes where the field exceeds the mesh level.
TriangleMesh apply_cutaway(const TriangleMesh& mesh, const density::DensityGrid& grid);

struct Polyline {
  std::vector<std::array<double, 2>> points;  // (y, z)
  bool closed = false;
};

struct ContourSet {
  double level = 0;
  std::vector<Polyline> polylines;
};

/// Contours of the x = 0 plane restricted to y >= 0, z >= 0. Saddle cells
/// are resolved by the cell-centre average.
std::vector<ContourSet> slice_contour(const density::DensityGrid& grid, std::span<const double> levels);

/// Default contour levels 10, 20, ..., 100.
std::vector<double> default_levels();

/// Mean of |z| / r over voxels with value >= level (r = 0 excluded).
double pole_concentration(const density::DensityGrid& grid, double level);

// Mesh diagnostics.
int connected_components(const TriangleMesh& mesh);
/// True when every undirected edge is used by exactly two triangles.
bool is_watertight(const TriangleMesh& mesh);
double surface_area(const TriangleMesh& mesh);

}  // namespace rscp::surface

#include "rscp/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace rscp::format {

std::string num(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

double round_sig(double x, int digits) {
  if (!std::isfinite(x) || x == 0) return x;
  return std::strtod(num(x, digits).c_str(), nullptr);
}

std::string state_summary(const states::StateLabels& labels, const states::PotentialParams& params,
                          const states::QuasiNumbers& q) {
  return "n=" + std::to_string(labels.n) + " l=" + std::to_string(labels.l) + " m=" + std::to_string(labels.m)
         + " Z=" + num(params.Z) + " b=" + num(params.b) + " c=" + num(params.c) + " m'=" + num(q.m_prime)
         + " gamma1=" + num(q.gamma1) + " k=" + std::to_string(q.k) + " l'=" + num(q.l_prime)
         + " n_r=" + std::to_string(q.n_r) + " n'=" + num(q.n_prime) + " lambda=" + num(q.lambda)
         + " E=" + num(q.energy);
}

void write_vtk(std::ostream& os, const density::DensityGrid& grid) {
  const int n = grid.spec.n_points;
  const std::string o = num(grid.spec.coord(0));
  const std::string d = num(grid.spec.spacing());
  os << "# vtk DataFile Version 3.0\n"
     << "rscp density " << state_summary(grid.labels, grid.params, grid.quasi)
     << " scale=" << (grid.relative ? "relative100" : "absolute") << "\n"
     << "ASCII\n"
     << "DATASET STRUCTURED_POINTS\n"
     << "DIMENSIONS " << n << ' ' << n << ' ' << n << "\n"
     << "ORIGIN " << o << ' ' << o << ' ' << o << "\n"
     << "SPACING " << d << ' ' << d << ' ' << d << "\n"
     << "POINT_DATA " << grid.values.size() << "\n"
     << "SCALARS density float 1\n"
     << "LOOKUP_TABLE default\n";
  std::string line;
  char buf[32];
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.9g", grid.values[i]);
    line += buf;
    if ((i + 1) % 9 == 0 || i + 1 == grid.values.size()) {
      line += '\n';
      os << line;
      line.clear();
    } else {
      line += ' ';
    }
  }
}

void write_obj(std::ostream& os, const surface::TriangleMesh& mesh, const density::DensityGrid& grid, bool cutaway) {
  os << "# rscp isosurface " << state_summary(grid.labels, grid.params, grid.quasi) << "\n"
     << "# level=" << num(mesh.level) << " cutaway=" << (cutaway ? 1 : 0) << " N=" << grid.spec.n_points
     << " half_extent=" << num(grid.spec.half_extent) << "\n"
     << "# vertices=" << mesh.vertices.size() << " triangles=" << mesh.triangles.size() << "\n";
  for (const auto& v : mesh.vertices) os << "v " << num(v[0]) << ' ' << num(v[1]) << ' ' << num(v[2]) << "\n";
  for (const auto& t : mesh.triangles) os << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << "\n";
}

void write_contours_csv(std::ostream& os, std::span<const surface::ContourSet> sets, const density::DensityGrid& grid) {
  os << "# rscp slice x=0 quadrant y>=0 z>=0 " << state_summary(grid.labels, grid.params, grid.quasi) << "\n";
  os << "# levels=";
  for (std::size_t i = 0; i < sets.size(); ++i) os << (i ? " " : "") << num(sets[i].level);
  os << "\n";
  os << "level,polyline,point,y,z,closed\n";
  for (const auto& set : sets)
    for (std::size_t p = 0; p < set.polylines.size(); ++p) {
      const auto& line = set.polylines[p];
      for (std::size_t i = 0; i < line.points.size(); ++i)
        os << num(set.level) << ',' << p << ',' << i << ',' << num(line.points[i][0]) << ','
           << num(line.points[i][1]) << ',' << (line.closed ? 1 : 0) << "\n";
    }
}

}  // namespace rscp::format

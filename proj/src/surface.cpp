#include "rscp/surface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "rscp/error.hpp"

namespace rscp::surface {
namespace {

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 corner_offset(int c) { return {double(c & 1), double((c >> 1) & 1), double((c >> 2) & 1)}; }

constexpr std::array<std::array<int, 2>, 12> kEdges{{
    {0, 1}, {2, 3}, {4, 5}, {6, 7},  // x
    {0, 2}, {1, 3}, {4, 6}, {5, 7},  // y
    {0, 4}, {1, 5}, {2, 6}, {3, 7},  // z
}};

int edge_between(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int e = 0; e < 12; ++e)
    if (kEdges[e][0] == a && kEdges[e][1] == b) return e;
  throw std::logic_error("corners are not adjacent");
}

// The six faces, corners ordered counter-clockwise seen from outside.
std::array<std::array<int, 4>, 6> oriented_faces() {
  std::array<std::array<int, 4>, 6> faces{};
  int f = 0;
  for (int axis = 0; axis < 3; ++axis)
    for (int side = 0; side < 2; ++side) {
      const int u = (axis + 1) % 3, v = (axis + 2) % 3;
      auto corner = [&](int du, int dv) { return (side << axis) | (du << u) | (dv << v); };
      std::array<int, 4> face{corner(0, 0), corner(1, 0), corner(1, 1), corner(0, 1)};
      Vec3 normal{0, 0, 0};
      normal[axis] = side == 0 ? -1 : 1;
      const Vec3 p0 = corner_offset(face[0]), p1 = corner_offset(face[1]), p2 = corner_offset(face[2]);
      if (dot(cross(sub(p1, p0), sub(p2, p1)), normal) < 0) std::swap(face[1], face[3]);
      faces[f++] = face;
    }
  return faces;
}

// Directed closed loops of cube edges for one corner configuration.
std::vector<std::vector<int>> trace_loops(int config) {
  static const auto faces = oriented_faces();
  std::array<int, 12> next;
  next.fill(-1);
  auto inside = [config](int c) { return (config >> c) & 1; };
  for (const auto& face : faces) {
    std::array<int, 4> e{};
    std::array<bool, 4> in{};
    for (int i = 0; i < 4; ++i) {
      e[i] = edge_between(face[i], face[(i + 1) % 4]);
      in[i] = inside(face[i]);
    }
    const int count = int(in[0]) + in[1] + in[2] + in[3];
    if (count == 0 || count == 4) continue;
    if (count == 2 && in[0] == in[2]) {
      // saddle face: cut off each inside corner separately
      for (int i = 0; i < 4; ++i)
        if (in[i]) next[e[(i + 3) % 4]] = e[i];
      continue;
    }
    int start = -1, end = -1;
    for (int i = 0; i < 4; ++i) {
      const bool a = in[i], b = in[(i + 1) % 4];
      if (!a && b) start = e[i];
      if (a && !b) end = e[i];
    }
    next[start] = end;
  }
  std::vector<std::vector<int>> loops;
  std::array<bool, 12> used{};
  for (int s = 0; s < 12; ++s) {
    if (next[s] < 0 || used[s]) continue;
    std::vector<int> loop;
    for (int e = s; !used[e]; e = next[e]) {
      used[e] = true;
      loop.push_back(e);
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

std::array<CaseEntry, 256> generate_table() {
  // Orientation check on the single-corner case: the loop normal must point
  // away from the inside corner 0, i.e. along +(1,1,1).
  auto midpoint = [](int e) {
    const Vec3 a = corner_offset(kEdges[e][0]), b = corner_offset(kEdges[e][1]);
    return Vec3{0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1]), 0.5 * (a[2] + b[2])};
  };
  const auto probe = trace_loops(1).front();
  const Vec3 n = cross(sub(midpoint(probe[1]), midpoint(probe[0])), sub(midpoint(probe[2]), midpoint(probe[0])));
  const bool flip = dot(n, {1, 1, 1}) < 0;

  std::array<CaseEntry, 256> table{};
  for (int config = 0; config < 256; ++config) {
    CaseEntry entry;
    entry.fill(-1);
    std::size_t pos = 0;
    for (const auto& loop : trace_loops(config))
      for (std::size_t i = 1; i + 1 < loop.size(); ++i) {
        if (pos + 3 >= entry.size()) throw std::logic_error("marching cubes case overflow");
        entry[pos++] = static_cast<std::int8_t>(loop[0]);
        entry[pos++] = static_cast<std::int8_t>(flip ? loop[i + 1] : loop[i]);
        entry[pos++] = static_cast<std::int8_t>(flip ? loop[i] : loop[i + 1]);
      }
    table[config] = entry;
  }
  return table;
}

bool degenerate(const Vec3& a, const Vec3& b, const Vec3& c, double scale) {
  return 0.5 * norm(cross(sub(b, a), sub(c, a))) <= 1e-12 * scale * scale;
}

// Crossing point on the lattice segment from lower point pa (value va) to
// upper point pb (value vb). Always evaluated lower-to-upper so shared edges
// give bit-identical points.
Vec3 crossing(const Vec3& pa, double va, const Vec3& pb, double vb, double level) {
  const double t = (level - va) / (vb - va);
  return {pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1]), pa[2] + t * (pb[2] - pa[2])};
}

}  // namespace

const std::array<CaseEntry, 256>& case_table() {
  static const auto table = generate_table();
  return table;
}

const std::array<std::array<int, 2>, 12>& cube_edges() { return kEdges; }

TriangleMesh marching_cubes(const density::DensityGrid& grid, double level) {
  if (!(level > 0 && level < 100)) throw Error(Errc::domain, "marching_cubes: level must lie in (0, 100)");
  const auto& table = case_table();
  const int n = grid.spec.n_points;
  const double d = grid.spec.spacing();
  std::vector<double> axis(n);
  for (int i = 0; i < n; ++i) axis[i] = grid.spec.coord(i);

  TriangleMesh mesh;
  mesh.level = level;
  std::unordered_map<std::uint64_t, int> edge_vertex;
  const std::uint64_t corner_base = 3 * static_cast<std::uint64_t>(grid.values.size());

  auto vertex_for = [&](int i, int j, int k, int local_edge) {
    const int a = kEdges[local_edge][0], b = kEdges[local_edge][1];
    const int ai = i + (a & 1), aj = j + ((a >> 1) & 1), ak = k + ((a >> 2) & 1);
    const int bi = i + (b & 1), bj = j + ((b >> 1) & 1), bk = k + ((b >> 2) & 1);
    const int axis_id = local_edge / 4;
    const double va = grid.at(ai, aj, ak), vb = grid.at(bi, bj, bk);
    // A corner holding exactly the level is outside, and every edge through
    // it crosses there; share one vertex so the surface stays closed.
    std::uint64_t key = static_cast<std::uint64_t>(grid.index(ai, aj, ak)) * 3 + axis_id;
    if (va == level) key = corner_base + grid.index(ai, aj, ak);
    if (vb == level) key = corner_base + grid.index(bi, bj, bk);
    auto [it, fresh] = edge_vertex.try_emplace(key, static_cast<int>(mesh.vertices.size()));
    if (fresh) {
      mesh.vertices.push_back(crossing({axis[ai], axis[aj], axis[ak]}, va, {axis[bi], axis[bj], axis[bk]}, vb, level));
      const double t = (level - va) / (vb - va);
      mesh.vertex_scalar.push_back(va + t * (vb - va));
    }
    return it->second;
  };

  for (int k = 0; k + 1 < n; ++k)
    for (int j = 0; j + 1 < n; ++j)
      for (int i = 0; i + 1 < n; ++i) {
        int config = 0;
        for (int c = 0; c < 8; ++c)
          if (grid.at(i + (c & 1), j + ((c >> 1) & 1), k + ((c >> 2) & 1)) > level) config |= 1 << c;
        if (config == 0 || config == 255) continue;
        const CaseEntry& entry = table[config];
        for (std::size_t t = 0; t < entry.size() && entry[t] >= 0; t += 3) {
          const std::array<int, 3> tri{vertex_for(i, j, k, entry[t]), vertex_for(i, j, k, entry[t + 1]),
                                       vertex_for(i, j, k, entry[t + 2])};
          if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) continue;
          if (degenerate(mesh.vertices[tri[0]], mesh.vertices[tri[1]], mesh.vertices[tri[2]], d)) continue;
          mesh.triangles.push_back(tri);
        }
      }
  return mesh;
}

namespace {

struct PolyVertex {
  Vec3 p;
  double s;
};

// Splits `poly` by the plane coord[axis] = 0 into the parts with
// coord >= 0 and coord <= 0. Intersection points are computed from the
// lexicographically smaller endpoint so neighbouring triangles agree.
void split(const std::vector<PolyVertex>& poly, int axis, std::vector<PolyVertex>& pos,
           std::vector<PolyVertex>& neg) {
  pos.clear();
  neg.clear();
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const PolyVertex& a = poly[i];
    const PolyVertex& b = poly[(i + 1) % m];
    const double da = a.p[axis], db = b.p[axis];
    if (da >= 0) pos.push_back(a);
    if (da <= 0) neg.push_back(a);
    if ((da > 0 && db < 0) || (da < 0 && db > 0)) {
      const bool swap = b.p < a.p;
      const PolyVertex& lo = swap ? b : a;
      const PolyVertex& hi = swap ? a : b;
      const double t = lo.p[axis] / (lo.p[axis] - hi.p[axis]);
      PolyVertex x{{lo.p[0] + t * (hi.p[0] - lo.p[0]), lo.p[1] + t * (hi.p[1] - lo.p[1]),
                    lo.p[2] + t * (hi.p[2] - lo.p[2])},
                   lo.s + t * (hi.s - lo.s)};
      x.p[axis] = 0;
      pos.push_back(x);
      neg.push_back(x);
    }
  }
}

class MeshBuilder {
 public:
  explicit MeshBuilder(const TriangleMesh& base, double scale) : mesh_(base), scale_(scale) {
    mesh_.triangles.clear();
    for (std::size_t i = 0; i < mesh_.vertices.size(); ++i) index_.emplace(mesh_.vertices[i], static_cast<int>(i));
  }

  int vertex(const Vec3& p, double s) {
    auto [it, fresh] = index_.try_emplace(p, static_cast<int>(mesh_.vertices.size()));
    if (fresh) {
      mesh_.vertices.push_back(p);
      mesh_.vertex_scalar.push_back(s);
    }
    return it->second;
  }

  void add(const std::array<int, 3>& tri) { mesh_.triangles.push_back(tri); }

  void add_fan(const std::vector<PolyVertex>& poly) {
    if (poly.size() < 3) return;
    std::vector<int> ids;
    for (const auto& v : poly) ids.push_back(vertex(v.p, v.s));
    for (std::size_t i = 1; i + 1 < ids.size(); ++i) add_checked({ids[0], ids[i], ids[i + 1]});
  }

  void add_checked(const std::array<int, 3>& tri) {
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) return;
    const auto& v = mesh_.vertices;
    if (degenerate(v[tri[0]], v[tri[1]], v[tri[2]], scale_)) return;
    add(tri);
  }

  TriangleMesh take() { return std::move(mesh_); }
  const TriangleMesh& mesh() const { return mesh_; }

 private:
  TriangleMesh mesh_;
  double scale_;
  std::map<Vec3, int> index_;
};

bool in_open_octant(const Vec3& p) { return p[0] < 0 && p[1] < 0 && p[2] > 0; }
bool in_closed_octant(const Vec3& p) { return p[0] <= 0 && p[1] <= 0 && p[2] >= 0; }

// Quarter plane of the removed octant's boundary: fixed axis at 0 and the
// two remaining axes restricted to the octant side.
struct QuarterPlane {
  int fixed;
  int u, v;          // in-plane axes
  bool u_negative;   // u <= 0 side (else u >= 0)
  bool v_negative;
  int normal_sign;   // outward normal (into the removed octant) along `fixed`
};

constexpr std::array<QuarterPlane, 3> kCapPlanes{{
    {0, 1, 2, true, false, -1},  // x = 0, y <= 0, z >= 0
    {1, 0, 2, true, false, -1},  // y = 0, x <= 0, z >= 0
    {2, 0, 1, true, true, +1},   // z = 0, x <= 0, y <= 0
}};

bool plane_has_cap(const TriangleMesh& mesh, const QuarterPlane& q) {
  for (const auto& t : mesh.triangles) {
    bool on = true;
    for (int id : t) {
      const Vec3& p = mesh.vertices[id];
      on = on && p[q.fixed] == 0 && (q.u_negative ? p[q.u] <= 0 : p[q.u] >= 0)
           && (q.v_negative ? p[q.v] <= 0 : p[q.v] >= 0);
    }
    if (on) return true;
  }
  return false;
}

void add_cap(MeshBuilder& builder, const density::DensityGrid& grid, const QuarterPlane& q, double level) {
  const int n = grid.spec.n_points;
  const int c = (n - 1) / 2;
  const double d = grid.spec.spacing();
  auto lattice_value = [&](int iu, int iv) {
    std::array<int, 3> idx{};
    idx[q.fixed] = c;
    idx[q.u] = iu;
    idx[q.v] = iv;
    return grid.at(idx[0], idx[1], idx[2]);
  };
  auto lattice_point = [&](int iu, int iv) {
    Vec3 p{};
    p[q.fixed] = 0;
    p[q.u] = grid.spec.coord(iu);
    p[q.v] = grid.spec.coord(iv);
    return p;
  };
  const int u_lo = q.u_negative ? 0 : c, u_hi = q.u_negative ? c : n - 1;
  const int v_lo = q.v_negative ? 0 : c, v_hi = q.v_negative ? c : n - 1;

  for (int iv = v_lo; iv < v_hi; ++iv)
    for (int iu = u_lo; iu < u_hi; ++iu) {
      const std::array<std::array<int, 2>, 4> sq{{{iu, iv}, {iu + 1, iv}, {iu + 1, iv + 1}, {iu, iv + 1}}};
      std::array<double, 4> val{};
      std::array<bool, 4> in{};
      int count = 0;
      for (int s = 0; s < 4; ++s) {
        val[s] = lattice_value(sq[s][0], sq[s][1]);
        in[s] = val[s] > level;
        count += in[s];
      }
      if (count == 0) continue;
      auto edge_point = [&](int s) {
        // lower lattice point first, matching marching_cubes
        const int t = (s + 1) % 4;
        const bool forward = sq[s] < sq[t];
        const int a = forward ? s : t, b = forward ? t : s;
        return PolyVertex{crossing(lattice_point(sq[a][0], sq[a][1]), val[a], lattice_point(sq[b][0], sq[b][1]),
                                   val[b], level),
                          level};
      };
      auto corner = [&](int s) { return PolyVertex{lattice_point(sq[s][0], sq[s][1]), val[s]}; };

      std::vector<std::vector<PolyVertex>> polys;
      if (count == 2 && in[0] == in[2]) {
        for (int s = 0; s < 4; ++s)
          if (in[s]) polys.push_back({edge_point((s + 3) % 4), corner(s), edge_point(s)});
      } else {
        std::vector<PolyVertex> poly;
        for (int s = 0; s < 4; ++s) {
          if (in[s]) poly.push_back(corner(s));
          if (in[s] != in[(s + 1) % 4]) poly.push_back(edge_point(s));
        }
        polys.push_back(std::move(poly));
      }
      for (auto& poly : polys) {
        // orient toward the removed octant
        Vec3 normal{0, 0, 0};
        for (std::size_t i = 1; i + 1 < poly.size(); ++i)
          normal = [&] {
            const Vec3 cr = cross(sub(poly[i].p, poly[0].p), sub(poly[i + 1].p, poly[0].p));
            return Vec3{normal[0] + cr[0], normal[1] + cr[1], normal[2] + cr[2]};
          }();
        if (normal[q.fixed] * q.normal_sign < 0) std::reverse(poly.begin(), poly.end());
        builder.add_fan(poly);
      }
    }
  (void)d;
}

}  // namespace

TriangleMesh apply_cutaway(const TriangleMesh& mesh, const density::DensityGrid& grid) {
  const double scale = grid.spec.spacing();
  MeshBuilder builder(mesh, scale);
  std::vector<PolyVertex> poly, keep, rest, rest2;
  for (const auto& tri : mesh.triangles) {
    const Vec3& a = mesh.vertices[tri[0]];
    const Vec3& b = mesh.vertices[tri[1]];
    const Vec3& c = mesh.vertices[tri[2]];
    if (!in_open_octant(a) && !in_open_octant(b) && !in_open_octant(c)) {
      const bool outside = (a[0] >= 0 && b[0] >= 0 && c[0] >= 0) || (a[1] >= 0 && b[1] >= 0 && c[1] >= 0)
                           || (a[2] <= 0 && b[2] <= 0 && c[2] <= 0);
      if (outside) {
        builder.add(tri);
        continue;
      }
    }
    if (in_closed_octant(a) && in_closed_octant(b) && in_closed_octant(c)) continue;

    poly = {{a, mesh.vertex_scalar[tri[0]]}, {b, mesh.vertex_scalar[tri[1]]}, {c, mesh.vertex_scalar[tri[2]]}};
    split(poly, 0, keep, rest);  // x >= 0 kept
    builder.add_fan(keep);
    split(rest, 1, keep, rest2);  // y >= 0 kept
    builder.add_fan(keep);
    split(rest2, 2, rest, keep);  // z <= 0 kept, z >= 0 removed
    builder.add_fan(keep);
  }
  for (const auto& q : kCapPlanes)
    if (!plane_has_cap(mesh, q)) add_cap(builder, grid, q, mesh.level);
  return builder.take();
}

std::vector<double> default_levels() {
  std::vector<double> levels;
  for (int i = 1; i <= 10; ++i) levels.push_back(10.0 * i);
  return levels;
}

std::vector<ContourSet> slice_contour(const density::DensityGrid& grid, std::span<const double> levels) {
  const int n = grid.spec.n_points;
  const int c = (n - 1) / 2;
  const int m = n - c;  // samples per axis in the quadrant
  auto value = [&](int ju, int kv) { return grid.at(c, c + ju, c + kv); };
  auto coord = [&](int idx) { return grid.spec.coord(c + idx); };

  std::vector<ContourSet> out;
  for (double level : levels) {
    if (!(level > 0 && level <= 100)) throw Error(Errc::domain, "slice_contour: level must lie in (0, 100]");
    ContourSet set;
    set.level = level;

    // Edge ids: horizontal edge (j,k)-(j+1,k) -> 2*(k*m+j), vertical (j,k)-(j,k+1) -> 2*(k*m+j)+1.
    std::map<int, std::array<double, 2>> points;
    std::map<int, std::vector<int>> adjacency;
    auto edge_point = [&](int j0, int k0, int j1, int k1) {
      const double va = value(j0, k0), vb = value(j1, k1);
      int id = j1 > j0 ? 2 * (k0 * m + j0) : 2 * (k0 * m + j0) + 1;
      // a node exactly at the level is shared by all edges through it
      if (va == level) id = 2 * m * m + k0 * m + j0;
      if (vb == level) id = 2 * m * m + k1 * m + j1;
      if (!points.count(id)) {
        const double t = (level - va) / (vb - va);
        points[id] = {coord(j0) + t * (coord(j1) - coord(j0)), coord(k0) + t * (coord(k1) - coord(k0))};
      }
      return id;
    };
    auto link = [&](int a, int b) {
      if (a == b) return;
      adjacency[a].push_back(b);
      adjacency[b].push_back(a);
    };

    for (int k = 0; k + 1 < m; ++k)
      for (int j = 0; j + 1 < m; ++j) {
        const std::array<std::array<int, 2>, 4> sq{{{j, k}, {j + 1, k}, {j + 1, k + 1}, {j, k + 1}}};
        std::array<double, 4> val{};
        std::array<bool, 4> in{};
        int count = 0;
        for (int s = 0; s < 4; ++s) {
          val[s] = value(sq[s][0], sq[s][1]);
          in[s] = val[s] > level;
          count += in[s];
        }
        if (count == 0 || count == 4) continue;
        auto edge = [&](int s) {
          const int t = (s + 1) % 4;
          const bool forward = sq[s] < sq[t];
          const auto& a = forward ? sq[s] : sq[t];
          const auto& b = forward ? sq[t] : sq[s];
          return edge_point(a[0], a[1], b[0], b[1]);
        };
        if (count == 2 && in[0] == in[2]) {
          const double centre = 0.25 * (val[0] + val[1] + val[2] + val[3]);
          const bool cut_inside = !(centre > level);
          for (int s = 0; s < 4; ++s)
            if (in[s] == cut_inside) link(edge((s + 3) % 4), edge(s));
          continue;
        }
        std::vector<int> crossings;
        for (int s = 0; s < 4; ++s)
          if (in[s] != in[(s + 1) % 4]) crossings.push_back(edge(s));
        link(crossings[0], crossings[1]);
      }

    std::map<int, bool> visited;
    auto walk = [&](int start) {
      Polyline line;
      int prev = -1, cur = start;
      while (true) {
        visited[cur] = true;
        line.points.push_back(points[cur]);
        int nxt = -1;
        for (int nb : adjacency[cur])
          if (nb != prev && !visited[nb]) {
            nxt = nb;
            break;
          }
        if (nxt < 0) {
          // closed when the start is adjacent to the end
          const auto& adj = adjacency[cur];
          if (line.points.size() > 2 && std::find(adj.begin(), adj.end(), start) != adj.end()) {
            line.closed = true;
            line.points.push_back(points[start]);
          }
          break;
        }
        prev = cur;
        cur = nxt;
      }
      return line;
    };
    for (const auto& [id, adj] : adjacency)
      if (adj.size() == 1 && !visited[id]) set.polylines.push_back(walk(id));
    for (const auto& [id, adj] : adjacency)
      if (!visited[id]) set.polylines.push_back(walk(id));
    out.push_back(std::move(set));
  }
  return out;
}

double pole_concentration(const density::DensityGrid& grid, double level) {
  const int n = grid.spec.n_points;
  double sum = 0;
  std::size_t count = 0;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        if (!(grid.at(i, j, k) >= level)) continue;
        const double x = grid.spec.coord(i), y = grid.spec.coord(j), z = grid.spec.coord(k);
        const double r = std::sqrt((x * x + y * y) + z * z);
        if (r == 0) continue;
        sum += std::abs(z) / r;
        ++count;
      }
  if (count == 0) throw Error(Errc::empty_selection, "pole_concentration: no voxel at or above level");
  return sum / static_cast<double>(count);
}

int connected_components(const TriangleMesh& mesh) {
  std::vector<int> parent(mesh.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> used(mesh.vertices.size(), false);
  for (const auto& t : mesh.triangles) {
    for (int id : t) used[id] = true;
    parent[find(t[1])] = find(t[0]);
    parent[find(t[2])] = find(t[0]);
  }
  int count = 0;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (used[i] && find(static_cast<int>(i)) == static_cast<int>(i)) ++count;
  return count;
}

bool is_watertight(const TriangleMesh& mesh) {
  std::map<std::pair<int, int>, int> incidence;
  for (const auto& t : mesh.triangles)
    for (int e = 0; e < 3; ++e) {
      const int a = t[e], b = t[(e + 1) % 3];
      ++incidence[{std::min(a, b), std::max(a, b)}];
    }
  return std::all_of(incidence.begin(), incidence.end(), [](const auto& kv) { return kv.second == 2; });
}

double surface_area(const TriangleMesh& mesh) {
  double area = 0;
  for (const auto& t : mesh.triangles)
    area += 0.5 * norm(cross(sub(mesh.vertices[t[1]], mesh.vertices[t[0]]), sub(mesh.vertices[t[2]], mesh.vertices[t[0]])));
  return area;
}

}  // namespace rscp::surface

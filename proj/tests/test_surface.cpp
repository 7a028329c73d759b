#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "rscp/error.hpp"
#include "rscp/surface.hpp"

using namespace rscp;
using namespace rscp::surface;
using density::DensityGrid;

namespace {

DensityGrid synthetic(int n, double h, const std::function<double(double, double, double)>& f) {
  DensityGrid g;
  g.spec = {n, h};
  g.values.resize(static_cast<std::size_t>(n) * n * n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const double v = f(g.spec.coord(i), g.spec.coord(j), g.spec.coord(k));
        g.values[g.index(i, j, k)] = v;
        g.max_value = std::max(g.max_value, v);
      }
  g.relative = true;
  return g;
}

DensityGrid cone(int n, double h, double R) {
  return synthetic(n, h, [R](double x, double y, double z) {
    return 100 * std::max(0.0, 1 - std::sqrt(x * x + y * y + z * z) / R);
  });
}

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

Vec3 centroid(const TriangleMesh& m, const std::array<int, 3>& t) {
  Vec3 c{};
  for (int v : t)
    for (int a = 0; a < 3; ++a) c[a] += m.vertices[v][a] / 3;
  return c;
}

bool on_cut_plane(const Vec3& c) {
  return (c[0] == 0 && c[1] <= 0 && c[2] >= 0) || (c[1] == 0 && c[0] <= 0 && c[2] >= 0)
         || (c[2] == 0 && c[0] <= 0 && c[1] <= 0);
}

double triangle_area(const TriangleMesh& m, const std::array<int, 3>& t) {
  const auto &a = m.vertices[t[0]], &b = m.vertices[t[1]], &c = m.vertices[t[2]];
  const Vec3 u{b[0] - a[0], b[1] - a[1], b[2] - a[2]}, v{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
  return 0.5 * norm({u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]});
}

DensityGrid hydrogen_2p(int n) {
  return density::normalize_relative(density::build_grid({2, 1, 0}, {1, 0, 0}, {n, 12}, 0));
}

}  // namespace

TEST_CASE("case table sanity") {
  const auto& table = case_table();
  CHECK(table[0][0] == -1);
  CHECK(table[255][0] == -1);
  for (int c = 1; c < 255; ++c) {
    int len = 0;
    while (table[c][len] != -1) ++len;
    CHECK(len % 3 == 0);
    CHECK(len >= 3);
    CHECK(len <= 15);
  }
  // single corner: one triangle on the three edges meeting at corner 0
  std::vector<int> e(table[1].begin(), table[1].begin() + 3);
  std::sort(e.begin(), e.end());
  CHECK(e == std::vector<int>{0, 4, 8});
}

TEST_CASE("marching_cubes on a zero field is empty") {
  const auto g = synthetic(9, 1, [](double, double, double) { return 0.0; });
  CHECK(marching_cubes(g, 50).empty());
  CHECK_THROWS_AS(marching_cubes(g, 0), Error);
  CHECK_THROWS_AS(marching_cubes(g, 100), Error);
}

TEST_CASE("marching_cubes recovers a sphere") {
  const double R = 1.6;
  const auto g = cone(41, 1, R);
  const auto mesh = marching_cubes(g, 50);
  REQUIRE_FALSE(mesh.empty());
  const double d = g.spec.spacing();
  for (const auto& v : mesh.vertices) CHECK(std::abs(norm(v) - R / 2) < d);
  for (double s : mesh.vertex_scalar) CHECK(std::abs(s - 50) < 1e-9);
  CHECK(is_watertight(mesh));
  CHECK(connected_components(mesh) == 1);
  CHECK(surface_area(mesh) == doctest::Approx(std::numbers::pi * R * R).epsilon(0.02));
  for (const auto& t : mesh.triangles) {
    CHECK(triangle_area(mesh, t) > 1e-12 * d * d);
    for (int v : t) CHECK((v >= 0 && v < static_cast<int>(mesh.vertices.size())));
    // outward normals: the field decreases away from the centre
    const auto &a = mesh.vertices[t[0]], &b = mesh.vertices[t[1]], &c = mesh.vertices[t[2]];
    const Vec3 u{b[0] - a[0], b[1] - a[1], b[2] - a[2]}, w{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
    const Vec3 nrm{u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
    const auto cc = centroid(mesh, t);
    CHECK(nrm[0] * cc[0] + nrm[1] * cc[1] + nrm[2] * cc[2] > 0);
  }
}

TEST_CASE("lattice nodes exactly at the level keep the mesh closed") {
  // r = 0.8 falls on lattice nodes for these sizes, e.g. (0, -0.48, -0.64)
  for (int n : {51, 61}) {
    const auto g = cone(n, 1, 1.6);
    const auto mesh = marching_cubes(g, 50);
    CAPTURE(n);
    CHECK(is_watertight(mesh));
    CHECK(connected_components(mesh) == 1);
    CHECK(is_watertight(apply_cutaway(mesh, g)));
  }
  const auto g = synthetic(51, 1, [](double, double y, double z) {
    return 100 * std::max(0.0, 1 - std::sqrt(y * y + z * z) / 1.6);
  });
  const double level = 50;
  const auto sets = slice_contour(g, std::span<const double>(&level, 1));
  CHECK(sets[0].polylines.size() == 1);
}

TEST_CASE("marching_cubes handles saddle-rich fields") {
  // a periodic field hits the ambiguous cases often
  const auto g = synthetic(33, 1, [](double x, double y, double z) {
    return 50 + 45 * std::sin(9 * x) * std::sin(9 * y) * std::sin(9 * z);
  });
  for (double level : {20.0, 50.0, 73.0}) {
    const auto mesh = marching_cubes(g, level);
    REQUIRE_FALSE(mesh.empty());
    for (double s : mesh.vertex_scalar) CHECK(std::abs(s - level) < 1e-9);
    // edges on the domain boundary are open; interior edges must pair up
    std::map<std::pair<int, int>, int> uses;
    for (const auto& t : mesh.triangles)
      for (int e = 0; e < 3; ++e) {
        const int a = t[e], b = t[(e + 1) % 3];
        ++uses[{std::min(a, b), std::max(a, b)}];
      }
    bool interior_ok = true;
    for (const auto& [edge, count] : uses) {
      const auto &p = mesh.vertices[edge.first], &q = mesh.vertices[edge.second];
      bool boundary = false;
      for (int a = 0; a < 3; ++a)
        boundary = boundary || (std::abs(p[a]) == 1 && std::abs(q[a]) == 1 && p[a] == q[a]);
      if (!boundary) interior_ok = interior_ok && count == 2;
      CHECK(count <= 2);
    }
    CHECK(interior_ok);
  }
}

TEST_CASE("hydrogen 2p level 50 has two lobes, symmetric in z") {
  const auto g = hydrogen_2p(81);
  const auto mesh = marching_cubes(g, 50);
  CHECK(connected_components(mesh) == 2);
  CHECK(is_watertight(mesh));

  std::vector<Vec3> a, b;
  for (const auto& v : mesh.vertices) {
    a.push_back(v);
    b.push_back({v[0], v[1], -v[2]});
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  REQUIRE(a.size() == b.size());
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int c = 0; c < 3; ++c) worst = std::max(worst, std::abs(a[i][c] - b[i][c]));
  CHECK(worst < 1e-9);
}

TEST_CASE("supra-level regions shrink with the level") {
  const auto g = density::normalize_relative(density::build_grid({4, 3, 0}, {1, 0.5, 0.5}, {61, 30}, 0));
  std::size_t prev = g.values.size() + 1;
  for (double level : {10.0, 30.0, 50.0, 70.0, 90.0}) {
    const auto count = static_cast<std::size_t>(
        std::count_if(g.values.begin(), g.values.end(), [level](double v) { return v > level; }));
    CHECK(count <= prev);
    prev = count;
  }
  // each vertex of the level-70 mesh lies in a cell touching the level-40 region
  const auto inner = marching_cubes(g, 70);
  const double d = g.spec.spacing(), h = g.spec.half_extent;
  for (const auto& v : inner.vertices) {
    const int i = std::min(static_cast<int>((v[0] + h) / d), 59);
    const int j = std::min(static_cast<int>((v[1] + h) / d), 59);
    const int k = std::min(static_cast<int>((v[2] + h) / d), 59);
    double best = 0;
    for (int c = 0; c < 8; ++c) best = std::max(best, g.at(i + (c & 1), j + ((c >> 1) & 1), k + ((c >> 2) & 1)));
    CHECK(best > 40);
  }
}

TEST_CASE("apply_cutaway") {
  const auto g = cone(41, 1, 1.6);
  const auto mesh = marching_cubes(g, 50);
  const auto cut = apply_cutaway(mesh, g);

  SUBCASE("octant removed and capped") {
    for (const auto& t : cut.triangles) {
      const auto c = centroid(cut, t);
      CHECK_FALSE((c[0] < 0 && c[1] < 0 && c[2] > 0));
    }
    int caps[3] = {0, 0, 0};
    for (const auto& t : cut.triangles) {
      const auto c = centroid(cut, t);
      if (!on_cut_plane(c)) continue;
      for (int a = 0; a < 3; ++a)
        if (c[a] == 0) ++caps[a];
    }
    CHECK(caps[0] > 0);
    CHECK(caps[1] > 0);
    CHECK(caps[2] > 0);
    CHECK(is_watertight(cut));
    CHECK(connected_components(cut) == 1);
  }
  SUBCASE("the original surface loses one octant of area") {
    double kept = 0, cap = 0;
    for (const auto& t : cut.triangles) (on_cut_plane(centroid(cut, t)) ? cap : kept) += triangle_area(cut, t);
    CHECK(kept < surface_area(mesh));
    CHECK(kept == doctest::Approx(surface_area(mesh) * 7 / 8).epsilon(0.02));
    // three quarter discs of radius 0.8
    CHECK(cap == doctest::Approx(3 * std::numbers::pi * 0.64 / 4).epsilon(0.03));
  }
  SUBCASE("idempotent") {
    const auto twice = apply_cutaway(cut, g);
    CHECK(twice.vertices == cut.vertices);
    CHECK(twice.triangles == cut.triangles);
  }
  SUBCASE("mesh in x > 0 is unchanged") {
    const auto blob = synthetic(41, 1, [](double x, double y, double z) {
      const double dx = x - 0.5;
      return 100 * std::max(0.0, 1 - std::sqrt(dx * dx + y * y + z * z) / 0.8);
    });
    const auto m = marching_cubes(blob, 50);
    const auto c = apply_cutaway(m, blob);
    CHECK(c.vertices == m.vertices);
    CHECK(c.triangles == m.triangles);
  }
  SUBCASE("empty mesh stays empty") {
    const auto zero = synthetic(9, 1, [](double, double, double) { return 0.0; });
    auto e = marching_cubes(zero, 50);
    CHECK(apply_cutaway(e, zero).empty());
  }
}

TEST_CASE("cutaway on a hydrogen mesh") {
  const auto g = hydrogen_2p(61);
  const auto mesh = marching_cubes(g, 30);
  const auto cut = apply_cutaway(mesh, g);
  for (const auto& t : cut.triangles) {
    const auto c = centroid(cut, t);
    CHECK_FALSE((c[0] < 0 && c[1] < 0 && c[2] > 0));
  }
  CHECK(is_watertight(cut));
  CHECK(connected_components(cut) == 2);
}

TEST_CASE("slice_contour on synthetic fields") {
  const double R = 1.6;
  const auto g = synthetic(41, 1, [R](double, double y, double z) {
    return 100 * std::max(0.0, 1 - std::sqrt(y * y + z * z) / R);
  });
  const double d = g.spec.spacing();

  SUBCASE("quarter circle") {
    const double level = 50;
    const auto sets = slice_contour(g, std::span<const double>(&level, 1));
    REQUIRE(sets.size() == 1);
    REQUIRE(sets[0].polylines.size() == 1);
    const auto& line = sets[0].polylines[0];
    CHECK_FALSE(line.closed);
    for (const auto& p : line.points) {
      CHECK(p[0] >= 0);
      CHECK(p[1] >= 0);
      CHECK(std::abs(std::hypot(p[0], p[1]) - R / 2) < 0.1 * d);
    }
    const auto& a = line.points.front();
    const auto& b = line.points.back();
    CHECK((a[0] == 0 || a[1] == 0));
    CHECK((b[0] == 0 || b[1] == 0));
  }

  SUBCASE("default levels give ten sets; level 100 is at most a point") {
    const auto levels = default_levels();
    CHECK(levels.size() == 10);
    CHECK(levels.front() == 10);
    CHECK(levels.back() == 100);
    const auto sets = slice_contour(g, levels);
    CHECK(sets.size() == 10);
    for (const auto& line : sets.back().polylines) CHECK(line.points.size() <= 1);
  }

  SUBCASE("nesting for a unimodal field") {
    auto f = [](double y, double z) {
      return 100 * std::exp(-((y - 0.45) * (y - 0.45) / 0.08 + (z - 0.4) * (z - 0.4) / 0.03));
    };
    const auto bump = synthetic(81, 1, [&](double, double y, double z) { return f(y, z); });
    const std::vector<double> levels{30, 60};
    const auto sets = slice_contour(bump, levels);
    REQUIRE(sets.size() == 2);
    REQUIRE(sets[1].polylines.size() == 1);
    CHECK(sets[0].polylines.size() == 1);
    CHECK(sets[1].polylines[0].closed);
    for (const auto& p : sets[1].polylines[0].points) CHECK(f(p[0], p[1]) > 30);
  }

  SUBCASE("zero plane") {
    const auto zero = synthetic(11, 1, [](double, double, double) { return 0.0; });
    for (const auto& s : slice_contour(zero, default_levels())) CHECK(s.polylines.empty());
  }

  SUBCASE("invalid level") {
    const double bad = 0;
    CHECK_THROWS_AS(slice_contour(g, std::span<const double>(&bad, 1)), Error);
  }
}

TEST_CASE("pole_concentration") {
  auto single = [](int i, int j, int k) {
    DensityGrid g;
    g.spec = {5, 2};
    g.values.assign(125, 0.0);
    g.values[g.index(i, j, k)] = 100;
    g.max_value = 100;
    g.relative = true;
    return g;
  };
  CHECK(pole_concentration(single(2, 2, 4), 50) == 1.0);
  CHECK(pole_concentration(single(2, 2, 0), 50) == 1.0);
  CHECK(pole_concentration(single(2, 4, 2), 50) == 0.0);
  CHECK(pole_concentration(single(3, 3, 3), 50) == doctest::Approx(1 / std::sqrt(3.0)));
  CHECK_THROWS_AS(pole_concentration(single(2, 2, 2), 50), Error);
  CHECK_THROWS_AS(pole_concentration(single(2, 2, 4), 101), Error);
}

TEST_CASE("pole concentration rises with the level for (6,5,0)") {
  const states::BoundState s({6, 5, 0}, {1, 0.5, 0.5});
  const auto g = density::normalize_relative(
      density::build_grid(s, {101, density::auto_extent(s, 0.999)}, 0));
  double prev = 0;
  for (double level : {10.0, 30.0, 50.0, 70.0, 90.0}) {
    const double v = pole_concentration(g, level);
    CHECK(v > prev);
    CHECK(v <= 1);
    prev = v;
  }
}

#pragma once

// Triangulated spacelike surfaces in L^3.  Vertex normals are unit timelike
// and future-pointing; scalar channels hold per-vertex fields (H, residual).

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "smax/errors.hpp"
#include "smax/lorentz.hpp"

namespace smax {

struct SurfaceMesh {
  std::vector<LVec3> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<LVec3> vertex_normals;  // unit timelike, z > 0
  std::map<std::string, std::vector<double>> channels;

  std::size_t vertex_count() const { return vertices.size(); }
};

struct MeshValidity {
  bool halfspace = true;        // all z > 0
  bool normals_unit = true;     // <N,N> = -1 within 1e-9, future-pointing
  bool edges_spacelike = true;  // <e,e> > 0 for every edge
  double worst_normal_dev = 0.0;
  double worst_edge_sq = 1.0;
  double min_z = 0.0;
  bool ok() const { return halfspace && normals_unit && edges_spacelike; }
};

inline MeshValidity validate_mesh(const SurfaceMesh& m) {
  MeshValidity v;
  v.min_z = m.vertices.empty() ? 0.0 : m.vertices.front().z;
  for (const auto& p : m.vertices) {
    v.min_z = std::min(v.min_z, p.z);
    if (!(p.z > 0.0)) v.halfspace = false;
  }
  for (const auto& n : m.vertex_normals) {
    const double dev = std::abs(minkowski_sq(n) + 1.0);
    v.worst_normal_dev = std::max(v.worst_normal_dev, dev);
    if (dev > 1e-9 || !(n.z > 0.0)) v.normals_unit = false;
  }
  for (const auto& t : m.triangles) {
    for (int k = 0; k < 3; ++k) {
      const LVec3 e = m.vertices[t[(k + 1) % 3]] - m.vertices[t[k]];
      const double q = minkowski_sq(e);
      v.worst_edge_sq = std::min(v.worst_edge_sq, q);
      if (!(q > 0.0)) v.edges_spacelike = false;
    }
  }
  return v;
}

// 1-ring vertex adjacency from the triangle list.
inline std::vector<std::set<int>> vertex_adjacency(const SurfaceMesh& m) {
  std::vector<std::set<int>> adj(m.vertices.size());
  for (const auto& t : m.triangles) {
    for (int k = 0; k < 3; ++k) {
      adj[t[k]].insert(t[(k + 1) % 3]);
      adj[t[k]].insert(t[(k + 2) % 3]);
    }
  }
  return adj;
}

// Vertices on a boundary edge (an edge incident to exactly one triangle).
inline std::vector<bool> boundary_vertices(const SurfaceMesh& m) {
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& t : m.triangles) {
    for (int k = 0; k < 3; ++k) {
      int a = t[k], b = t[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      ++edge_count[{a, b}];
    }
  }
  std::vector<bool> on_boundary(m.vertices.size(), false);
  for (const auto& [e, c] : edge_count) {
    if (c == 1) {
      on_boundary[e.first] = true;
      on_boundary[e.second] = true;
    }
  }
  return on_boundary;
}

// Interior = not on a boundary edge and not adjacent to a boundary vertex;
// curvature estimates need a full 2-ring.
inline std::vector<bool> deep_interior_vertices(const SurfaceMesh& m) {
  const auto bd = boundary_vertices(m);
  const auto adj = vertex_adjacency(m);
  std::vector<bool> deep(m.vertices.size(), false);
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    if (bd[i]) continue;
    bool ok = true;
    for (int j : adj[i])
      if (bd[j]) ok = false;
    deep[i] = ok;
  }
  return deep;
}

// Estimates vertex normals by averaging Lorentzian triangle normals.  For a
// spacelike triangle the cross of two edges is timelike; the average is
// normalized to <N,N> = -1 and oriented future (z > 0).
inline void estimate_vertex_normals(SurfaceMesh& m) {
  std::vector<LVec3> acc(m.vertices.size(), {0, 0, 0});
  for (const auto& t : m.triangles) {
    const LVec3 a = m.vertices[t[1]] - m.vertices[t[0]];
    const LVec3 b = m.vertices[t[2]] - m.vertices[t[0]];
    LVec3 n = lorentz_cross(a, b);
    if (n.z < 0.0) n = -n;
    for (int k = 0; k < 3; ++k) acc[t[k]] = acc[t[k]] + n;
  }
  m.vertex_normals.resize(m.vertices.size());
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    const LVec3 n = unit_future_timelike(acc[i]);
    if (n.x == 0.0 && n.y == 0.0 && n.z == 0.0)
      throw DegenerateStar("estimate_vertex_normals: non-timelike normal at vertex " +
                           std::to_string(i));
    m.vertex_normals[i] = n;
  }
}

// ASCII OBJ export, z-up right-handed; channels go to a sibling CSV keyed by
// vertex index (see write_channels_csv).
inline void write_obj(const SurfaceMesh& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("write_obj: cannot open " + path);
  char buf[160];
  for (const auto& v : m.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
    out << buf;
  }
  for (const auto& n : m.vertex_normals) {
    std::snprintf(buf, sizeof buf, "vn %.17g %.17g %.17g\n", n.x, n.y, n.z);
    out << buf;
  }
  for (const auto& t : m.triangles) {
    std::snprintf(buf, sizeof buf, "f %d %d %d\n", t[0] + 1, t[1] + 1, t[2] + 1);
    out << buf;
  }
}

}  // namespace smax

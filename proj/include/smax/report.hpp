#pragma once

// Artifact emission: deterministic JSON reports (stable key order, floats at
// 17 significant digits) and CSV tables with a "# meta:" first line.

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include "smax/dirichlet.hpp"
#include "smax/errors.hpp"
#include "smax/mesh.hpp"
#include "smax/profile.hpp"

namespace smax {

namespace detail {

inline void dump_number(double x, std::string& out) {
  if (std::isnan(x) || std::isinf(x)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

inline void dump_json_string(const std::string& s, std::string& out) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace detail

// Compact dump with lexicographically sorted object keys (nlohmann::json
// stores objects in a std::map) and %.17g floating point formatting.
inline void dump_stable(const nlohmann::json& j, std::string& out) {
  using nlohmann::json;
  switch (j.type()) {
    case json::value_t::null: out += "null"; break;
    case json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
    case json::value_t::number_integer:
      out += std::to_string(j.get<long long>());
      break;
    case json::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      break;
    case json::value_t::number_float:
      detail::dump_number(j.get<double>(), out);
      break;
    case json::value_t::string:
      detail::dump_json_string(j.get<std::string>(), out);
      break;
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ',';
        first = false;
        dump_stable(e, out);
      }
      out += ']';
      break;
    }
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        detail::dump_json_string(it.key(), out);
        out += ':';
        dump_stable(it.value(), out);
      }
      out += '}';
      break;
    }
    default: out += "null";
  }
}

inline std::string dump_stable(const nlohmann::json& j) {
  std::string out;
  dump_stable(j, out);
  return out;
}

inline void emit_report(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("emit_report: cannot open " + path);
  out << dump_stable(j) << '\n';
}

inline nlohmann::json parse_report(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("parse_report: cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

// -- CSV --------------------------------------------------------------------

inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_profile_csv(const ProfileSolution& sol, const std::string& command,
                              const std::string& path,
                              const ProfileOptions& opts = {}) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("write_profile_csv: cannot open " + path);
  out << "# meta: command=" << command << " alpha=" << fmt17(sol.alpha)
      << " axis=" << to_string(sol.axis_kind) << " ndim=" << sol.dim_n
      << " left=" << to_string(sol.left.tag) << " right=" << to_string(sol.right.tag)
      << " a=" << fmt17(sol.left.r) << " b=" << fmt17(sol.right.r)
      << " eps_u=" << fmt17(opts.eps_u) << " eps_s=" << fmt17(opts.eps_s) << "\n";
  out << "r,u,uprime\n";
  for (const auto& s : sol.samples)
    out << fmt17(s.r) << ',' << fmt17(s.u) << ',' << fmt17(s.up) << '\n';
}

inline void write_grid_csv(const GridField& u, const std::string& command,
                           double alpha, double tol, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("write_grid_csv: cannot open " + path);
  out << "# meta: command=" << command << " alpha=" << fmt17(alpha)
      << " h=" << fmt17(u.dom.h) << " tol=" << fmt17(tol) << "\n";
  out << "x,y,u\n";
  for (int j = 0; j < u.dom.ny; ++j)
    for (int i = 0; i < u.dom.nx; ++i)
      out << fmt17(u.dom.x(i)) << ',' << fmt17(u.dom.y(j)) << ',' << fmt17(u.at(i, j))
          << '\n';
}

// Per-vertex scalar channels keyed by vertex index; sibling file of the OBJ.
inline void write_channels_csv(const SurfaceMesh& m, const std::string& command,
                               double alpha, double tol, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("write_channels_csv: cannot open " + path);
  out << "# meta: command=" << command << " alpha=" << fmt17(alpha)
      << " tol=" << fmt17(tol) << "\n";
  out << "index";
  for (const auto& [name, _] : m.channels) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    out << i;
    for (const auto& [_, vals] : m.channels)
      out << ',' << (i < vals.size() ? fmt17(vals[i]) : "");
    out << '\n';
  }
}

// Graph of a grid solution as an OBJ mesh (z = u(x,y)).
inline SurfaceMesh grid_to_mesh(const GridField& u) {
  SurfaceMesh m;
  const int nx = u.dom.nx, ny = u.dom.ny;
  m.vertices.reserve(std::size_t(nx) * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      m.vertices.push_back({u.dom.x(i), u.dom.y(j), u.at(i, j)});
  auto vid = [&](int i, int j) { return j * nx + i; };
  for (int j = 0; j + 1 < ny; ++j)
    for (int i = 0; i + 1 < nx; ++i) {
      m.triangles.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      m.triangles.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  estimate_vertex_normals(m);
  return m;
}

}  // namespace smax

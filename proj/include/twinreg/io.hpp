// File formats: ASCII PLY point clouds and JSON pose/vector encodings.

#ifndef TWINREG_IO_HPP
#define TWINREG_IO_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "twinreg/se3.hpp"
#include "twinreg/types.hpp"

namespace twinreg {

using Json = nlohmann::json;

/// Round-trippable decimal rendering of a double; used everywhere a float
/// is written to a deterministic artifact.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// PLY
// ---------------------------------------------------------------------------

inline void write_ply(const std::string& path, const PointCloud& cloud) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("write_ply: cannot open " + path);
  out << "ply\nformat ascii 1.0\nelement vertex " << cloud.size()
      << "\nproperty float x\nproperty float y\nproperty float z\n"
         "end_header\n";
  for (const Vec3& p : cloud) {
    out << format_double(p.x()) << ' ' << format_double(p.y()) << ' '
        << format_double(p.z()) << '\n';
  }
  if (!out) throw IoError("write_ply: write failed for " + path);
}

inline PointCloud read_ply(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("read_ply: cannot open " + path);
  std::string line;
  std::size_t count = 0;
  bool in_header = true;
  while (in_header && std::getline(in, line)) {
    std::istringstream ss(line);
    std::string tok;
    ss >> tok;
    if (tok == "element") {
      std::string what;
      ss >> what >> count;
      if (what != "vertex") throw IoError("read_ply: unsupported element");
    } else if (tok == "end_header") {
      in_header = false;
    }
  }
  if (in_header) throw IoError("read_ply: missing end_header in " + path);
  PointCloud cloud;
  cloud.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line))
      throw IoError("read_ply: truncated vertex list in " + path);
    std::istringstream ss(line);
    Vec3 p;
    ss >> p.x() >> p.y() >> p.z();
    if (!ss) throw IoError("read_ply: bad vertex line in " + path);
    cloud.push_back(p);
  }
  return cloud;
}

// ---------------------------------------------------------------------------
// JSON encodings
// ---------------------------------------------------------------------------

/// 16 row-major floats of the homogeneous matrix.
inline Json pose_to_json(const Pose& t) {
  const Mat4 m = t.matrix();
  Json arr = Json::array();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) arr.push_back(m(r, c));
  return arr;
}

inline Pose pose_from_json(const Json& arr) {
  if (!arr.is_array() || arr.size() != 16)
    throw IoError("pose_from_json: expected 16 floats");
  Mat4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = arr[4 * r + c].get<double>();
  return Pose(m.block<3, 3>(0, 0), m.block<3, 1>(0, 3));
}

/// 6 floats [omega, tau].
inline Json lie_to_json(const LieVector& y) {
  const Vec6 v = y.to_vector();
  Json arr = Json::array();
  for (int i = 0; i < 6; ++i) arr.push_back(v[i]);
  return arr;
}

inline LieVector lie_from_json(const Json& arr) {
  if (!arr.is_array() || arr.size() != 6)
    throw IoError("lie_from_json: expected 6 floats");
  Vec6 v;
  for (int i = 0; i < 6; ++i) v[i] = arr[i].get<double>();
  return LieVector(v);
}

inline void write_text_file(const std::string& path,
                            const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("write_text_file: cannot open " + path);
  out << content;
  if (!out) throw IoError("write_text_file: write failed for " + path);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("read_text_file: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_json_file(const std::string& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

inline Json read_json_file(const std::string& path) {
  return Json::parse(read_text_file(path));
}

}  // namespace twinreg

#endif  // TWINREG_IO_HPP

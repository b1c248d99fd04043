// SE(3)/se(3) algebra: the representation layer for poses, their 6-D Lie
// coordinates, and 6x6 covariances over those coordinates.

#ifndef TWINREG_SE3_HPP
#define TWINREG_SE3_HPP

#include <cmath>
#include <utility>

#include "twinreg/types.hpp"

namespace twinreg {

/// Threshold below which rotation magnitudes take the Taylor branch.
inline constexpr double kSmallAngle = 1e-8;

/// 6-D Lie-algebra coordinates of a rigid transform: rotation part omega
/// (axis-angle, rad) and translation part tau (m). Serialized as
/// [omega, tau].
struct LieVector {
  Vec3 omega = Vec3::Zero();
  Vec3 tau = Vec3::Zero();

  LieVector() = default;
  LieVector(const Vec3& w, const Vec3& t) : omega(w), tau(t) {}
  explicit LieVector(const Vec6& v) : omega(v.head<3>()), tau(v.tail<3>()) {}

  Vec6 to_vector() const {
    Vec6 v;
    v << omega, tau;
    return v;
  }

  bool is_finite() const {
    return omega.allFinite() && tau.allFinite();
  }
};

/// Rigid transform with an orthonormal rotation block (det = +1).
struct Pose {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  Pose() = default;
  Pose(const Mat3& R, const Vec3& t) : rotation(R), translation(t) {}

  static Pose identity() { return Pose(); }

  bool is_valid(double tol = 1e-9) const {
    if (!rotation.allFinite() || !translation.allFinite()) return false;
    const Mat3 err = rotation.transpose() * rotation - Mat3::Identity();
    if (err.cwiseAbs().maxCoeff() > tol) return false;
    return std::abs(rotation.determinant() - 1.0) <= tol;
  }

  Mat4 matrix() const {
    Mat4 m = Mat4::Identity();
    m.block<3, 3>(0, 0) = rotation;
    m.block<3, 1>(0, 3) = translation;
    return m;
  }
};

/// 6x6 covariance over Lie coordinates: rad^2 rotation block, m^2
/// translation block.
struct Covariance6 {
  Mat6 matrix = Mat6::Zero();

  Covariance6() = default;
  explicit Covariance6(const Mat6& m) : matrix(m) {}

  static Covariance6 from_diagonal(const Vec6& d) {
    Covariance6 c;
    c.matrix = d.asDiagonal();
    return c;
  }

  Vec6 diagonal() const { return matrix.diagonal(); }

  bool is_valid(double tol = 1e-9) const {
    if (!matrix.allFinite()) return false;
    if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > tol)
      return false;
    Eigen::SelfAdjointEigenSolver<Mat6> es(matrix);
    return es.eigenvalues().minCoeff() >= -tol;
  }
};

/// Skew-symmetric matrix of omega: hat(w) v = w x v.
inline Mat3 hat(const Vec3& w) {
  Mat3 s;
  // clang-format off
  s <<      0.0, -w.z(),  w.y(),
        w.z(),      0.0, -w.x(),
       -w.y(),  w.x(),      0.0;
  // clang-format on
  return s;
}

inline Vec3 vee(const Mat3& s) {
  return Vec3(s(2, 1), s(0, 2), s(1, 0));
}

/// Rodrigues rotation from axis-angle coordinates.
inline Mat3 so3_exp(const Vec3& omega) {
  const double theta = omega.norm();
  const Mat3 W = hat(omega);
  if (theta < kSmallAngle) {
    return Mat3::Identity() + W + 0.5 * W * W;
  }
  const double a = std::sin(theta) / theta;
  const double b = (1.0 - std::cos(theta)) / (theta * theta);
  return Mat3::Identity() + a * W + b * W * W;
}

/// Principal-branch axis-angle of a rotation matrix. Throws AngleNearPi when
/// the angle is close enough to pi that the branch is ambiguous
/// (trace(R) <= -1 + 1e-6).
inline Vec3 so3_log(const Mat3& R) {
  const double trace = R.trace();
  if (trace <= -1.0 + 1e-6) {
    throw AngleNearPi("so3_log: rotation angle too close to pi");
  }
  const Vec3 v = vee(R - R.transpose()) * 0.5;  // sin(theta) * axis
  const double s = v.norm();
  const double c = 0.5 * (trace - 1.0);
  const double theta = std::atan2(s, c);
  if (theta < kSmallAngle) {
    // theta/sin(theta) ~ 1 + theta^2/6
    return v * (1.0 + theta * theta / 6.0);
  }
  return v * (theta / s);
}

/// SO(3) left Jacobian: the translation map of the full SE(3) exponential.
inline Mat3 so3_left_jacobian(const Vec3& omega) {
  const double theta = omega.norm();
  const Mat3 W = hat(omega);
  if (theta < kSmallAngle) {
    return Mat3::Identity() + 0.5 * W + (1.0 / 6.0) * W * W;
  }
  const double t2 = theta * theta;
  const double a = (1.0 - std::cos(theta)) / t2;
  const double b = (theta - std::sin(theta)) / (t2 * theta);
  return Mat3::Identity() + a * W + b * W * W;
}

inline Mat3 so3_left_jacobian_inverse(const Vec3& omega) {
  const double theta = omega.norm();
  const Mat3 W = hat(omega);
  if (theta < kSmallAngle) {
    return Mat3::Identity() - 0.5 * W + (1.0 / 12.0) * W * W;
  }
  const double t2 = theta * theta;
  const double c =
      1.0 / t2 - (1.0 + std::cos(theta)) / (2.0 * theta * std::sin(theta));
  return Mat3::Identity() - 0.5 * W + c * W * W;
}

/// Full SE(3) exponential: R = exp(hat(omega)), t = J_l(omega) tau.
inline Pose exp_map(const LieVector& y) {
  return Pose(so3_exp(y.omega), so3_left_jacobian(y.omega) * y.tau);
}

/// Inverse of exp_map on the principal branch. Throws AngleNearPi near pi.
inline LieVector log_map(const Pose& T) {
  const Vec3 omega = so3_log(T.rotation);
  return LieVector(omega, so3_left_jacobian_inverse(omega) * T.translation);
}

/// The network-output convention: rotation through the exponential map,
/// translation taken verbatim. Distinct from exp_map, which routes the
/// translation through the left Jacobian.
inline Pose exp_map_decoupled(const LieVector& y) {
  return Pose(so3_exp(y.omega), y.tau);
}

inline LieVector log_map_decoupled(const Pose& T) {
  return LieVector(so3_log(T.rotation), T.translation);
}

inline Pose compose(const Pose& a, const Pose& b) {
  return Pose(a.rotation * b.rotation,
              a.rotation * b.translation + a.translation);
}

inline Pose inverse(const Pose& t) {
  const Mat3 rt = t.rotation.transpose();
  return Pose(rt, -(rt * t.translation));
}

inline Vec3 transform_point(const Pose& t, const Vec3& p) {
  return t.rotation * p + t.translation;
}

inline PointCloud apply(const Pose& t, const PointCloud& cloud) {
  PointCloud out;
  out.reserve(cloud.size());
  for (const Vec3& p : cloud) out.push_back(transform_point(t, p));
  return out;
}

struct GeodesicError {
  double rot = 0.0;    // rad
  double trans = 0.0;  // m
};

/// Rotation angle of the relative rotation plus translation distance.
/// Symmetric in its arguments and zero iff the poses coincide.
inline GeodesicError geodesic_error(const Pose& est, const Pose& gt) {
  const Mat3 rel = est.rotation.transpose() * gt.rotation;
  const Vec3 v = vee(rel - rel.transpose()) * 0.5;
  const double s = v.norm();
  const double c = 0.5 * (rel.trace() - 1.0);
  GeodesicError e;
  e.rot = std::atan2(s, c);
  e.trans = (est.translation - gt.translation).norm();
  return e;
}

}  // namespace twinreg

#endif  // TWINREG_SE3_HPP

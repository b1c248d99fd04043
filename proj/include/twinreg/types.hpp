// twinreg - digital-twin point cloud registration with uncertainty-gated
// shared autonomy. Header-only, C++20, Eigen-based.

#ifndef TWINREG_TYPES_HPP
#define TWINREG_TYPES_HPP

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <stdexcept>
#include <string>
#include <vector>

namespace twinreg {

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using MatX = Eigen::MatrixXd;
using VecX = Eigen::VectorXd;

/// A raw 3-D point set. Points are expressed in whatever frame the producer
/// documents (camera frame for sensor clouds, twin frame for references).
using PointCloud = std::vector<Vec3>;

// ---------------------------------------------------------------------------
// Error types. Thrown conditions are part of each operation's contract.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define TWINREG_DEFINE_ERROR(NAME)                                  \
  struct NAME : Error {                                             \
    explicit NAME(const std::string& msg = #NAME) : Error(msg) {}   \
  }

TWINREG_DEFINE_ERROR(AngleNearPi);
TWINREG_DEFINE_ERROR(UnknownRegime);
TWINREG_DEFINE_ERROR(RejectionExhausted);
TWINREG_DEFINE_ERROR(DegenerateNeighborhood);
TWINREG_DEFINE_ERROR(DegenerateConfiguration);
TWINREG_DEFINE_ERROR(NoHypothesisFound);
TWINREG_DEFINE_ERROR(EmptyCorrespondences);
TWINREG_DEFINE_ERROR(DimensionMismatch);
TWINREG_DEFINE_ERROR(NonFiniteLoss);
TWINREG_DEFINE_ERROR(SingularSystem);
TWINREG_DEFINE_ERROR(InvalidEvidence);
TWINREG_DEFINE_ERROR(InsufficientCalibration);
TWINREG_DEFINE_ERROR(EmptyValidation);
TWINREG_DEFINE_ERROR(OverlappingWindows);
TWINREG_DEFINE_ERROR(NonFiniteState);
TWINREG_DEFINE_ERROR(MissingModel);
TWINREG_DEFINE_ERROR(IoError);

#undef TWINREG_DEFINE_ERROR

}  // namespace twinreg

#endif  // TWINREG_TYPES_HPP

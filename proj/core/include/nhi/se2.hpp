#pragma once

#include <Eigen/Core>

#include <string>

namespace nhi::se2 {

/// Element of the Lie algebra se(2) in coordinates with respect to the basis
/// {e1_hat, e2_hat, e3_hat}: w is the angular rate, (x, y) the translational
/// rates. The hat map sends (w, x, y) to the 3x3 matrix
///   [ 0  -w   x ]
///   [ w   0   y ]
///   [ 0   0   0 ].
struct AlgebraVector {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;

  AlgebraVector() = default;
  AlgebraVector(double w_, double x_, double y_) : w(w_), x(x_), y(y_) {}
  explicit AlgebraVector(const Eigen::Vector3d& v) : w(v[0]), x(v[1]), y(v[2]) {}

  Eigen::Vector3d coords() const { return {w, x, y}; }
  double norm() const { return coords().norm(); }
};

/// SE(2) group element. theta is kept unwrapped (no mod 2*pi) so that
/// trajectories and error norms stay smooth.
struct GroupElement {
  double theta = 0.0;
  double x = 0.0;
  double y = 0.0;

  GroupElement() = default;
  GroupElement(double theta_, double x_, double y_) : theta(theta_), x(x_), y(y_) {}

  static GroupElement identity() { return {}; }

  Eigen::Vector3d coords() const { return {theta, x, y}; }
  /// Homogeneous 3x3 matrix [[R(theta), (x,y)], [0, 1]].
  Eigen::Matrix3d matrix() const;
};

using TangentMatrix = Eigen::Matrix3d;

Eigen::Matrix3d hat(const AlgebraVector& v);

/// Inverse of hat. Throws Error if the entries that must vanish for an
/// se(2) matrix exceed 1e-9 in magnitude.
AlgebraVector unhat(const Eigen::Matrix3d& m);

GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);

/// Group exponential, closed form. The v.w -> 0 limit is evaluated by short
/// Taylor series of sin(w)/w and (1-cos w)/w below |w| = 1e-4 to keep the
/// branch continuous.
GroupElement exp(const AlgebraVector& v);

/// Cayley map (I - hat(v)/2)^-1 (I + hat(v)/2), in closed form. The rotation
/// block is (1/(4+w^2)) [[4-w^2, -4w], [4w, 4-w^2]].
GroupElement cay(const AlgebraVector& v);

/// Canonical coordinates of the second kind with the fixed basis order
/// (e1, e2, e3): ccsk(v) = exp(w e1) exp(x e2) exp(y e3).
GroupElement ccsk(const AlgebraVector& v);

/// [ad_v] acting on algebra coordinates: rows (0,0,0), (y,0,-w), (-x,w,0).
TangentMatrix ad_matrix(const AlgebraVector& v);

/// Adjoint action Ad_g v = unhat(G hat(v) G^-1).
AlgebraVector adjoint(const GroupElement& g, const AlgebraVector& v);

/// 3x3 matrix of Ad_g on algebra coordinates.
TangentMatrix adjoint_matrix(const GroupElement& g);

/// Truncated inverse right-trivialized tangent of exp:
/// sum_{j<=order} (B_j / j!) [ad_v]^j with Bernoulli numbers
/// B0=1, B1=-1/2, B2=1/6, B3=0. order must be in {1, 2, 3}.
TangentMatrix dexp_inv_matrix(const AlgebraVector& v, int order = 2);

/// Exact inverse right-trivialized tangent of cay:
/// I - [ad_v]/2 with the first column augmented by v.w * v / 4.
TangentMatrix dcay_inv_matrix(const AlgebraVector& v);

/// Exact inverse right-trivialized tangent of ccsk. For SE(2) the forward
/// tangent works out to blkdiag(1, R(v.w)), so the inverse is
/// blkdiag(1, R(-v.w)).
TangentMatrix dccsk_inv_matrix(const AlgebraVector& v);

enum class TauKind { Exp, Cay, Ccsk };

TauKind tau_kind_from_string(const std::string& name);
std::string to_string(TauKind kind);

/// Retraction tau(v) for the selected kind.
GroupElement retract(TauKind kind, const AlgebraVector& v);

/// dtau^-1 as a matrix on algebra coordinates. dtau_order selects the
/// truncation order of the dexp^-1 series and is ignored by the exact
/// cay/ccsk tangents.
TangentMatrix dtau_inv_matrix(TauKind kind, const AlgebraVector& v, int dtau_order = 1);

/// Directional derivative of dtau_inv_matrix at v in direction dv, used to
/// assemble analytic Newton Jacobians for the implicit reduced step.
TangentMatrix dtau_inv_matrix_derivative(TauKind kind, const AlgebraVector& v,
                                         const AlgebraVector& dv, int dtau_order = 1);

}  // namespace nhi::se2

#include "nhi/se2.hpp"

#include <cmath>

#include "nhi/errors.hpp"

namespace nhi::se2 {

namespace {

// sin(w)/w and (1-cos w)/w with series evaluation near w = 0.
void sinc_pair(double w, double& a, double& b) {
  if (std::abs(w) < 1e-4) {
    const double w2 = w * w;
    a = 1.0 - w2 / 6.0 + w2 * w2 / 120.0 - w2 * w2 * w2 / 5040.0;
    b = w / 2.0 - w * w2 / 24.0 + w * w2 * w2 / 720.0 - w * w2 * w2 * w2 / 40320.0;
  } else {
    a = std::sin(w) / w;
    b = (1.0 - std::cos(w)) / w;
  }
}

}  // namespace

Eigen::Matrix3d GroupElement::matrix() const {
  const double c = std::cos(theta), s = std::sin(theta);
  Eigen::Matrix3d m;
  m << c, -s, x, s, c, y, 0, 0, 1;
  return m;
}

Eigen::Matrix3d hat(const AlgebraVector& v) {
  Eigen::Matrix3d m;
  m << 0, -v.w, v.x, v.w, 0, v.y, 0, 0, 0;
  return m;
}

AlgebraVector unhat(const Eigen::Matrix3d& m) {
  const double skew = std::abs(m(0, 0)) + std::abs(m(1, 1)) + std::abs(m(0, 1) + m(1, 0));
  const double bottom = std::abs(m(2, 0)) + std::abs(m(2, 1)) + std::abs(m(2, 2));
  if (skew > 1e-9 || bottom > 1e-9) {
    throw Error("unhat: matrix is not an se(2) element");
  }
  return {m(1, 0), m(0, 2), m(1, 2)};
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  const double c = std::cos(g1.theta), s = std::sin(g1.theta);
  return {g1.theta + g2.theta, g1.x + c * g2.x - s * g2.y, g1.y + s * g2.x + c * g2.y};
}

GroupElement inverse(const GroupElement& g) {
  const double c = std::cos(g.theta), s = std::sin(g.theta);
  return {-g.theta, -(c * g.x + s * g.y), -(-s * g.x + c * g.y)};
}

GroupElement exp(const AlgebraVector& v) {
  double a, b;
  sinc_pair(v.w, a, b);
  return {v.w, a * v.x - b * v.y, b * v.x + a * v.y};
}

GroupElement cay(const AlgebraVector& v) {
  const double den = 4.0 + v.w * v.w;
  const double c = (4.0 - v.w * v.w) / den;
  const double s = 4.0 * v.w / den;
  return {std::atan2(s, c), (4.0 * v.x - 2.0 * v.w * v.y) / den,
          (2.0 * v.w * v.x + 4.0 * v.y) / den};
}

GroupElement ccsk(const AlgebraVector& v) {
  const GroupElement rot{v.w, 0.0, 0.0};
  return compose(compose(rot, GroupElement{0.0, v.x, 0.0}), GroupElement{0.0, 0.0, v.y});
}

TangentMatrix ad_matrix(const AlgebraVector& v) {
  TangentMatrix m;
  m << 0, 0, 0, v.y, 0, -v.w, -v.x, v.w, 0;
  return m;
}

TangentMatrix adjoint_matrix(const GroupElement& g) {
  // Ad_g (w, u) = (w, R(theta) u + w (y, -x)).
  const double c = std::cos(g.theta), s = std::sin(g.theta);
  TangentMatrix m;
  m << 1, 0, 0, g.y, c, -s, -g.x, s, c;
  return m;
}

AlgebraVector adjoint(const GroupElement& g, const AlgebraVector& v) {
  return AlgebraVector(Eigen::Vector3d(adjoint_matrix(g) * v.coords()));
}

TangentMatrix dexp_inv_matrix(const AlgebraVector& v, int order) {
  if (order < 1 || order > 3) {
    throw Error("dexp_inv_matrix: unsupported series order " + std::to_string(order));
  }
  // Bernoulli coefficients B_j / j! for j = 1..3; B3 = 0.
  static constexpr double kCoeff[4] = {1.0, -1.0 / 2.0, 1.0 / 12.0, 0.0};
  const TangentMatrix ad = ad_matrix(v);
  TangentMatrix out = TangentMatrix::Identity();
  TangentMatrix power = TangentMatrix::Identity();
  for (int j = 1; j <= order; ++j) {
    power = power * ad;
    out += kCoeff[j] * power;
  }
  return out;
}

TangentMatrix dcay_inv_matrix(const AlgebraVector& v) {
  TangentMatrix m = TangentMatrix::Identity() - 0.5 * ad_matrix(v);
  m.col(0) += 0.25 * v.w * v.coords();
  return m;
}

TangentMatrix dccsk_inv_matrix(const AlgebraVector& v) {
  const double c = std::cos(v.w), s = std::sin(v.w);
  TangentMatrix m;
  m << 1, 0, 0, 0, c, s, 0, -s, c;
  return m;
}

TauKind tau_kind_from_string(const std::string& name) {
  if (name == "exp") return TauKind::Exp;
  if (name == "cay") return TauKind::Cay;
  if (name == "ccsk") return TauKind::Ccsk;
  throw Error("unknown retraction map '" + name + "' (expected exp, cay or ccsk)");
}

std::string to_string(TauKind kind) {
  switch (kind) {
    case TauKind::Exp: return "exp";
    case TauKind::Cay: return "cay";
    case TauKind::Ccsk: return "ccsk";
  }
  return "?";
}

GroupElement retract(TauKind kind, const AlgebraVector& v) {
  switch (kind) {
    case TauKind::Exp: return exp(v);
    case TauKind::Cay: return cay(v);
    case TauKind::Ccsk: return ccsk(v);
  }
  throw Error("retract: bad TauKind");
}

TangentMatrix dtau_inv_matrix(TauKind kind, const AlgebraVector& v, int dtau_order) {
  switch (kind) {
    case TauKind::Exp: return dexp_inv_matrix(v, dtau_order);
    case TauKind::Cay: return dcay_inv_matrix(v);
    case TauKind::Ccsk: return dccsk_inv_matrix(v);
  }
  throw Error("dtau_inv_matrix: bad TauKind");
}

TangentMatrix dtau_inv_matrix_derivative(TauKind kind, const AlgebraVector& v,
                                         const AlgebraVector& dv, int dtau_order) {
  switch (kind) {
    case TauKind::Exp: {
      if (dtau_order < 1 || dtau_order > 3) {
        throw Error("dtau_inv_matrix_derivative: unsupported series order");
      }
      static constexpr double kCoeff[4] = {1.0, -1.0 / 2.0, 1.0 / 12.0, 0.0};
      const TangentMatrix ad = ad_matrix(v);
      const TangentMatrix add = ad_matrix(dv);
      TangentMatrix out = TangentMatrix::Zero();
      for (int j = 1; j <= dtau_order; ++j) {
        // d(ad^j) = sum_i ad^i (d ad) ad^(j-1-i)
        for (int i = 0; i < j; ++i) {
          TangentMatrix term = TangentMatrix::Identity();
          for (int k = 0; k < i; ++k) term = term * ad;
          term = term * add;
          for (int k = 0; k < j - 1 - i; ++k) term = term * ad;
          out += kCoeff[j] * term;
        }
      }
      return out;
    }
    case TauKind::Cay: {
      TangentMatrix out = -0.5 * ad_matrix(dv);
      out.col(0) += 0.25 * (dv.w * v.coords() + v.w * dv.coords());
      return out;
    }
    case TauKind::Ccsk: {
      const double c = std::cos(v.w), s = std::sin(v.w);
      TangentMatrix out = TangentMatrix::Zero();
      out(1, 1) = -s;
      out(1, 2) = c;
      out(2, 1) = -c;
      out(2, 2) = -s;
      return dv.w * out;
    }
  }
  throw Error("dtau_inv_matrix_derivative: bad TauKind");
}

}  // namespace nhi::se2

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adamlab/rng.hpp"

namespace adamlab {

using Vec = std::vector<double>;

enum class NoiseKind { UniformBall, Rademacher };

const char* to_string(NoiseKind kind);
NoiseKind parse_noise_kind(const std::string& name);

/// Additive zero-mean gradient noise with ||zeta|| <= sigma on every draw.
struct NoiseModel {
  NoiseKind kind = NoiseKind::UniformBall;
  double sigma = 0.0;
};

struct CertifiedConstants {
  double L_hat = 0.0;
  double G_hat = 0.0;  ///< bound on ||grad f|| over the box
  std::optional<double> pl_v_hat;
  double resolution = 0.0;  ///< grid step the values were accepted at
  int refinements = 0;
  bool exact = false;  ///< closed form, no grid involved
};

struct CertifyOptions {
  double resolution = 1e-3;
  int max_refinements = 6;
  double safety = 0.01;
  double stability = 1e-3;  ///< accept when halving moves every value by less than this
  double pl_floor = 1e-12;
};

/// Separable objective f(x) = sum_i phi(x_i) with f* = 0, certified on the
/// box [-R, R]^d.
class Problem {
 public:
  enum class Kernel { Quadratic, BoundedNonconvex, PlSine };

  Problem(Kernel kernel, int dim, double box_radius, NoiseModel noise,
          const CertifyOptions& opts = {});

  const std::string& id() const { return id_; }
  Kernel kernel() const { return kernel_; }
  int dim() const { return dim_; }
  double box_radius() const { return box_radius_; }
  const NoiseModel& noise() const { return noise_; }
  const CertifiedConstants& constants() const { return constants_; }
  double f_star() const { return 0.0; }
  bool claims_pl() const { return kernel_ != Kernel::BoundedNonconvex; }

  /// M = G_hat + sigma, the almost-sure bound on oracle draws inside the box.
  double M() const { return constants_.G_hat + noise_.sigma; }

  double value(const Vec& x) const;
  Vec gradient(const Vec& x) const;
  void gradient(const Vec& x, Vec& out) const;
  bool in_box(const Vec& x) const;

  /// g = grad f(x) + zeta. `grad` must already hold grad f(x).
  void oracle(const Vec& grad, Rng& rng, Vec& g) const;

  /// 1-D kernel and its derivatives.
  double phi(double t) const;
  double dphi(double t) const;

 private:
  void check_dim(const Vec& x) const;

  Kernel kernel_;
  std::string id_;
  int dim_;
  double box_radius_;
  NoiseModel noise_;
  CertifiedConstants constants_;
};

/// "quadratic", "bounded-nonconvex" or "pl-sine". Throws LookupError otherwise.
Problem builtin(const std::string& id, int dim = 1, double box_radius = 10.0,
                NoiseModel noise = {}, const CertifyOptions& opts = {});

std::vector<std::string> builtin_ids();

/// Grid certification of L, G and the PL constant on [-R, R], lifted to d
/// dimensions. Throws CertificationError when halving the grid keeps moving
/// the values.
CertifiedConstants certify_constants(const Problem& problem, const CertifyOptions& opts = {});

/// max_i |grad_i - central difference_i| / (1 + |grad_i|)
double finite_diff_check(const Problem& problem, const Vec& x, double h);

}  // namespace adamlab

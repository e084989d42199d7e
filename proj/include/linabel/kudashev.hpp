// The Kudashev equation dR/dz = (486R^4 - 171R^2 + 9zR + 5) /
// (9 (54R^3 - 9R + z)(2R + 3z)): general parametric solution, algebraic
// solution, equilibria, separatrices and phase-portrait sampling.
#ifndef LINABEL_KUDASHEV_HPP
#define LINABEL_KUDASHEV_HPP

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "linabel/abel.hpp"

namespace linabel {

struct PhasePointRZ {
  double R;
  double z;
};

enum class KummerBranch { w1, w2 };

// Solution branch of the general parametric solution.
struct Branch {
  enum class Kind { kummer_w1, kummer_w2, generic };
  Kind kind = Kind::kummer_w1;
  int epsilon = +1;     // the sign epsilon = +-1
  double a = 1.0;       // generic-branch mix in the Frobenius basis
  double b = 0.0;

  static Branch kummer(KummerBranch which, int epsilon);
  static Branch generic(double a, double b, int epsilon);
};

// Sample of a parametric (R(s), z(s)) curve with analytic derivatives.
struct RzSample {
  double R;
  double z;
  double R_s;
  double z_s;
};

double kudashev_rhs(const PhasePointRZ& pt);

// Parametric general solution at s along a branch.
PhasePointRZ general_solution_point(const Branch& br, double s);
RzSample general_solution_sample(const Branch& br, double s);

// Point transformation from the reduced Abel plane.
PhasePointRZ from_omega_psi(const PhasePointOmegaPsi& pt, int epsilon);

// Algebraic solution in the sigma parametrisation.
PhasePointRZ algebraic_solution_point(int epsilon, double sigma);
RzSample algebraic_solution_sample(int epsilon, double sigma);

// 20 (1 - 3R^2)^3 - 27 (z + 14R^3 - 4R)^2; zero on the algebraic solution.
double implicit_residual(const PhasePointRZ& pt);

// The six equilibrium points P1..P6, left to right.
std::array<PhasePointRZ, 6> equilibria();

// Kummer separatrix solutions w1, w2 of the hypergeometric equation and
// their derivatives, s <= 0.  At s = 0 both equal the same finite value and
// the derivative diverges (returned as +-infinity).
std::pair<double, double> separatrix_w(KummerBranch branch, double s);

// Explicit algebraic separatrix z(R), sign selects the branch.
double explicit_separatrix_z(double R, int sign);

// ---------------------------------------------------------------------------
// Phase-portrait sampling
// ---------------------------------------------------------------------------

struct PortraitWindow {
  double R_min = -0.8;
  double R_max = 0.8;
  double z_min = -2.0;
  double z_max = 2.0;
};

struct PortraitOptions {
  PortraitWindow window;
  double rel_tol = 1e-10;
  double max_arclength = 20.0;
  int max_steps = 200000;
};

struct Trajectory {
  enum class End { window_exit, pole_event, length_limit, equilibrium };
  std::vector<PhasePointRZ> points;
  End end = End::window_exit;
};

// Integrates the flow through `seed` in both directions with an adaptive
// embedded Runge-Kutta pair, stopping at pole-curve events; the two halves
// are joined into one polyline.
Trajectory integrate_trajectory(const PhasePointRZ& seed,
                                const PortraitOptions& opt);

std::vector<Trajectory> phase_portrait(std::span<const PhasePointRZ> seeds,
                                       const PortraitOptions& opt);

}  // namespace linabel

#endif  // LINABEL_KUDASHEV_HPP

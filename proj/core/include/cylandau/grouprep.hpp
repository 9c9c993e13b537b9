#pragma once

#include <array>
#include <complex>
#include <random>
#include <variant>
#include <vector>

#include "cylandau/config.hpp"
#include "cylandau/wavefunction.hpp"

namespace cylandau::grouprep {

// Phase conventions used by every function in this module:
//   * operators compose right-to-left: (A B) psi = A (B psi);
//   * the group commutator is K(a, b) = a b a^{-1} b^{-1};
//   * the plane wedge is x ^ y = x1 y2 - x2 y1.
// With these choices the abstract commutator functions below evaluate as
//   plane:             c(x, x') = e^{i lambda x ^ x'}
//   periodic cylinder: c((phi,m),(phi',m')) = e^{i nu (m' phi - m phi')}
// and the concrete actions reproduce them as follows: the mode-space
// cylinder action gives exactly c_nu, while the plane translation action
// built from the half-wedge cocycle realizes K(x, x') = e^{-i lambda x ^ x'}
// (first slot) and K(y, y') = e^{+i lambda y ^ y'} (second slot).

struct PlaneVec {
  double x1 = 0.0, x2 = 0.0;
};

struct CylElem {
  double theta = 0.0;  // canonical in [0, 2 pi)
  double eta = 0.0;
};

struct PerCylElem {
  double phi = 0.0;  // canonical in [0, 2 pi)
  int m = 0;
};

using GroupElement = std::variant<PlaneVec, CylElem, PerCylElem>;

GroupElement plane_vec(double x1, double x2);
GroupElement cyl_elem(double theta, double eta);
GroupElement per_cyl_elem(double phi, int m);

/// Group addition; throws KindMismatch across variants. Angles wrap mod 2 pi.
GroupElement add(const GroupElement& g, const GroupElement& h);
GroupElement negate(const GroupElement& g);

struct PlaneLambda {
  double lambda = 0.0;
};
struct PeriodicCylinderNu {
  int nu = 0;
};
/// The would-be bilinear pairing on the full cylinder group; kept around to
/// demonstrate that no nonzero lambda survives the 2 pi wraparound.
struct CylinderCandidate {
  double lambda = 0.0;
};

using CommutatorFunction =
    std::variant<PlaneLambda, PeriodicCylinderNu, CylinderCandidate>;

/// Unit-modulus commutator phase c(g, h). Throws KindMismatch when the
/// element variants do not match the function kind.
std::complex<double> eval_commutator(const CommutatorFunction& cf,
                                     const GroupElement& g,
                                     const GroupElement& h);

struct CocycleReport {
  double max_left_additivity = 0.0;   // |c(g+h,k) - c(g,k) c(h,k)|
  double max_right_additivity = 0.0;  // |c(g,h+k) - c(g,h) c(g,k)|
  double max_antisymmetry = 0.0;      // |c(g,h) c(h,g) - 1|
  int triples = 0;

  double max_deviation() const;
  bool pass(double tol = 1e-9) const { return max_deviation() <= tol; }
};

CocycleReport check_cocycle_laws(
    const CommutatorFunction& cf,
    const std::vector<std::array<GroupElement, 3>>& triples);

/// Random sample triples matching the kind of cf. Cylinder triples include
/// wraparound-prone angles on purpose.
std::vector<std::array<GroupElement, 3>> sample_triples(
    const CommutatorFunction& cf, int count, std::mt19937_64& rng);

/// Worst violation of 2 pi angular periodicity of the candidate cylinder
/// pairing: max over eta of |e^{i lambda 2 pi eta} - 1|. Zero iff lambda
/// vanishes on a dense sample.
double cylinder_obstruction(double lambda,
                            const std::vector<double>& eta_samples);

/// True iff e^{2 pi i nu} = 1 within tol, i.e. the flux per unit slice is an
/// integer number of flux quanta.
bool flux_quantization_check(double nu, double tol = 1e-9);

/// Element (g, s) of the central extension, |s| = 1.
struct ExtensionElement {
  GroupElement g;
  std::complex<double> s{1.0, 0.0};
};

/// The cocycle splitting beta with beta(g,h) - beta(h,g) = alpha(g,h):
/// half-wedge for the plane and candidate kinds, and the one-sided
/// beta((phi,m),(phi',m')) = nu m' phi for the periodic cylinder (the
/// half-alpha choice is not well defined there).
double extension_cocycle(const CommutatorFunction& cf, const GroupElement& g,
                         const GroupElement& h);

/// (g,s) (h,t) = (g + h, e^{i beta(g,h)} s t).
ExtensionElement extension_multiply(const CommutatorFunction& cf,
                                    const ExtensionElement& a,
                                    const ExtensionElement& b);

ExtensionElement extension_inverse(const CommutatorFunction& cf,
                                   const ExtensionElement& a);

// -- truncated unitary representations on the window |n| <= N ---------------

enum class RepSpace { FourierCircle, SequenceZ };

/// A truncated representation: the carrier space, the central charge and the
/// index cutoff. matrix() materializes group elements as operators.
struct TruncatedRep {
  RepSpace space = RepSpace::FourierCircle;
  int nu = 1;
  int N = 16;
};

/// Dense complex matrix over mode indices -N..N, row-major.
struct RepMatrix {
  int N = 0;
  std::vector<std::complex<double>> a;

  int dim() const { return 2 * N + 1; }
  std::complex<double>& at(int row_n, int col_n) {
    return a[(row_n + N) * dim() + (col_n + N)];
  }
  const std::complex<double>& at(int row_n, int col_n) const {
    return a[(row_n + N) * dim() + (col_n + N)];
  }
};

RepMatrix rep_identity(int N);
RepMatrix rep_multiply(const RepMatrix& a, const RepMatrix& b);

/// Action of (phi, m) on the Fourier window of L^2(S^1): rotations act as
/// diagonal phases e^{i n phi}, axial steps shift the index by nu m.
/// Throws WindowOverflow when |nu m| > N.
RepMatrix rep_circle(int nu, const PerCylElem& element, int N);

/// Action of (phi, m) on the window of l^2(Z): rotations act as diagonal
/// phases e^{-i nu n phi}, axial steps shift the index by -m.
/// Throws WindowOverflow when |m| > N.
RepMatrix rep_sequence(int nu, const PerCylElem& element, int N);

RepMatrix rep_matrix(const TruncatedRep& rep, const PerCylElem& element);

/// Frobenius deviation of U^dagger U from the identity, restricted to the
/// columns whose image stays inside the window (shift operators are only
/// isometric there).
double unitarity_defect(const RepMatrix& u, int interior_margin = 0);

/// max_n || U_g U_h e_n - c(g,h) U_h U_g e_n || over basis vectors e_n whose
/// images under both orders stay inside the window, with g = (theta, 0) and
/// h = (0, m).
double interior_commutator_deviation(RepSpace space, int nu, double theta,
                                     int m, int N);

// -- actions on quasi-periodic wavefunctions --------------------------------

/// Action of the extended periodic-cylinder group element (phi, m) on a
/// mode-resolved state: mode n is sent to mode n + nu m with its profile
/// shifted by m in y and multiplied by e^{i n phi}. The axial period is 1.
/// Throws GridOverflow when the shifted profiles lose more than ~1e-6 of
/// their mass off the grid edge.
WaveFunction cylinder_group_action(const CylinderConfig& config, int nu,
                                   double phi, int m, const WaveFunction& psi);

/// Commuting action of the continuous Heisenberg group with central charge
/// -nu: profile f_n(y) picks up e^{i nu xi y} e^{i (n+q) xi} and shifts by
/// eta. Throws GridOverflow as above.
WaveFunction heisenberg_action(const CylinderConfig& config, int nu, double xi,
                               double eta, const WaveFunction& psi);

// -- plane reference case ----------------------------------------------------

/// Smooth compactly-supported test state on a square 2-D grid (row-major in
/// the first coordinate).
struct PlaneState {
  Grid gx, gy;
  std::vector<std::complex<double>> values;

  std::complex<double>& at(int ix, int iy) { return values[ix * gy.n_points + iy]; }
  const std::complex<double>& at(int ix, int iy) const {
    return values[ix * gy.n_points + iy];
  }
};

PlaneState make_plane_gaussian(double half_width, int n_points);
double plane_norm(const PlaneState& s);

/// Magnetic translation by x in the half-wedge cocycle:
///   first slot   psi(w) -> e^{+i (lambda/2) x ^ w} psi(w + x)
///   second slot  psi(w) -> e^{-i (lambda/2) x ^ w} psi(w + x)
PlaneState plane_translation(double lambda, std::array<double, 2> x,
                             bool second_slot, const PlaneState& psi);

struct PlanePairCheck {
  std::array<double, 2> x, xp;
  std::complex<double> expected;   // e^{-i lambda x ^ x'}
  double commutator_deviation;     // first-slot group commutator vs expected
  double cross_commutation;        // first vs second slot, should commute
};

struct PlaneRepReport {
  double lambda = 0.0;
  double max_commutator_deviation = 0.0;
  double max_cross_commutation = 0.0;
  std::vector<PlanePairCheck> pairs;
};

/// Verifies the projective phase law of the plane translation action on a
/// test state, pair by pair.
PlaneRepReport plane_commutator_check(
    double lambda, const std::vector<std::array<std::array<double, 2>, 2>>& pairs,
    const PlaneState& psi);

}  // namespace cylandau::grouprep

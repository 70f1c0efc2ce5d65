#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jsk/diffop.hpp"
#include "jsk/jets.hpp"
#include "jsk/ratfunc.hpp"
#include "jsk/ratmatrix.hpp"
#include "jsk/syzygy.hpp"

namespace jsk {

// ---------------------------------------------------------------------------
// Flat diagonal metrics.

struct MetricSpec {
    int n = 0;
    std::vector<int> diagonalSigns;  // entries are +1 or -1
    bool conformalNormalized = false;

    MetricSpec(int n, std::vector<int> signs, bool normalized = false);

    static MetricSpec euclidean(int n);
    // (+1, -1, ..., -1)
    static MetricSpec minkowski(int n);

    int sign(int i) const { return diagonalSigns[static_cast<size_t>(i)]; }
    // For diagonal +-1 metrics |det| = 1, so the normalized metric coincides
    // with the metric itself; the flag is kept for reporting.
    MetricSpec normalized() const;
};

// ---------------------------------------------------------------------------
// Lie-algebra structure constants c^tau_{rho sigma}; construction validates
// antisymmetry and the Jacobi identity and throws JacobiError otherwise.

struct StructureConstants {
    int p = 0;
    // c[tau][rho][sigma]
    std::vector<std::vector<std::vector<Rational>>> c;

    StructureConstants(int p, std::vector<std::vector<std::vector<Rational>>> c);

    static StructureConstants zero(int p);
    // Basis (dilatation, translation) of the 1D affine algebra with
    // [dilatation, translation] = translation.
    static StructureConstants affine1d();
    static StructureConstants so3();

    const Rational& at(int tau, int rho, int sigma) const {
        return c[static_cast<size_t>(tau)][static_cast<size_t>(rho)]
                [static_cast<size_t>(sigma)];
    }
};

// A p-tuple of 1-forms with rational-function coefficients: A^tau_i dx^i.
struct GaugePotential {
    int p = 0, n = 0;
    // A[tau][i]
    std::vector<std::vector<RationalFunction>> A;

    GaugePotential(int p, int n);
    const RationalFunction& at(int tau, int i) const {
        return A[static_cast<size_t>(tau)][static_cast<size_t>(i)];
    }
    RationalFunction& at(int tau, int i) {
        return A[static_cast<size_t>(tau)][static_cast<size_t>(i)];
    }
};

// Curvature 2-form components F^tau_{ij}, stored for i < j only.
struct Curvature {
    int p = 0, n = 0;
    std::map<std::array<int, 3>, RationalFunction> F;  // key (tau, i, j), i < j

    // Antisymmetry-aware lookup: at(tau, j, i) = -at(tau, i, j).
    RationalFunction at(int tau, int i, int j) const;
    bool is_zero() const;
};

// curvature F^tau_ij = d_i A^tau_j - d_j A^tau_i + c^tau_{rho sigma} A^rho_i
// A^sigma_j.  The sign on the quadratic term is fixed so that F(a^{-1}da) = 0
// with the bracket convention [e_rho, e_sigma] = c^tau_{rho sigma} e_tau.
Curvature maurer_cartan(const GaugePotential& A, const StructureConstants& c);

// Maurer-Cartan potential A = a^{-1} da of the 1D affine group element
// [[a1, a2], [0, 1]] over n base variables; a1 must be a nonzero function.
GaugePotential affine_potential(const RationalFunction& a1,
                                const RationalFunction& a2, int n);

// ---------------------------------------------------------------------------
// Named operators.

// Full deformation form: Omega_ij = w_rj d_i xi^r + w_ir d_j xi^r, rows
// ordered (1,1), (1,2), ..., (i<=j lexicographic).
LinearDiffOp killing(int n, const MetricSpec& metric);
// Half of the above (the strain form epsilon = Omega / 2).
LinearDiffOp killing_epsilon(int n, const MetricSpec& metric);
// Trace-free part: Omega_ij - (2/n) w_ij d_r xi^r; the target carries one
// identically-vanishing trace combination.
LinearDiffOp conformal_killing(int n, const MetricSpec& metric);
// Omega rows stacked with the Christoffel deformations Gamma^k_ij = d_i d_j
// xi^k (flat background), rows (k, i<=j); for n=2 this has 3 + 6 = 9 rows.
LinearDiffOp killing_with_christoffel(int n);
// Exterior derivative on r-forms, components indexed by sorted subsets in
// lexicographic order; 0 <= r < n.
LinearDiffOp exterior_derivative(int n, int r);
// Plane equilibrium equations on symmetric stresses (s11, s12, s22).
LinearDiffOp divergence2();
// Airy parametrization (d2^2, -d1 d2, d1^2)^T of the plane equilibrium
// equations.
LinearDiffOp airy2();

// First Spencer operator of the 1D second-order system on the solution-jet
// coordinates (xi, xi_x):  [[d1, -1], [0, d1]].
LinearDiffOp spencer_d1_affine();
// First Spencer operator of the plane isometry system on (xi1, xi2, rho),
// rho the rotation coordinate; 6 rows ordered (axis, component).
LinearDiffOp spencer_d1_killing2();
// Second Spencer operator, 3 rows; compose with the first gives zero.
LinearDiffOp spencer_d2_killing2();

// Hodge star on component indices: the signed permutation taking the r-form
// slot S to the (n-r)-form slot complement(S) with the sign of the
// permutation (S, complement).  Returns a C(n,n-r) x C(n,r) matrix over Q.
RatMatrix hodge_star_matrix(int n, int r);

// Sign s with adjoint(d_r) = s * (star^T d_{n-1-r} star) on component
// indices; +1 or -1 when the identity holds, 0 when neither sign matches.
int poincare_duality_sign(int n, int r);

// ---------------------------------------------------------------------------
// Diagram scenarios.

struct DiagramReport {
    SequenceDims spencerRow, middleRow, janetRow;
    long thetaDim = 0;
    std::vector<std::pair<std::string, bool>> checks;

    bool ok() const;
    std::string first_failing() const;
};

// 1D second-order system: rows (2,2) / (1,3,2) / (1,1), theta dimension 2.
DiagramReport affine_diagram();
// Plane isometries: rows (3,6,3) / (12,16,6) / (9,10,3); the Janet numbers
// 10 and 3 are produced by the syzygy engine.
DiagramReport killing_n2_diagram();

// ---------------------------------------------------------------------------
// Dualities.

struct Cosserat1dResult {
    LinearDiffOp d1;         // first Spencer operator on (xi, xi_x)
    LinearDiffOp equations;  // sign-normalized adjoint: d_x s = f, d_x m + s = g
    GreensIdentity certificate;
    std::vector<std::pair<std::string, bool>> checks;
    bool ok() const;
    std::string first_failing() const;
};
Cosserat1dResult cosserat_1d();

struct CosseratN2Result {
    LinearDiffOp d1;             // first Spencer operator on (xi1, xi2, rho)
    LinearDiffOp equations;      // 3 rows on (s11, s12, s21, s22, m1, m2)
    LinearDiffOp param;          // first-order parametrization by (phi1..phi3)
    LinearDiffOp airyReduction;  // phi1 = d2 phi, phi2 = d1 phi, phi3 = -phi
    LinearDiffOp reducedParam;   // param . airyReduction
    std::vector<std::pair<std::string, bool>> checks;
    bool ok() const;
    std::string first_failing() const;
};
CosseratN2Result cosserat_n2();

struct AiryDualityResult {
    LinearDiffOp strainCC;    // CC row of the strain operator
    LinearDiffOp adjointCC;   // its adjoint, a second-order column
    LinearDiffOp airy;        // symmetric-component Airy parametrization
    LinearDiffOp divergence;  // plane equilibrium equations
    std::vector<std::pair<std::string, bool>> checks;
    bool ok() const;
    std::string first_failing() const;
};
AiryDualityResult airy_duality_n2();

// ---------------------------------------------------------------------------
// Curvature-type component counts.

struct CountReport {
    int n = 0;
    long riemannClosed = 0;  // n^2 (n^2 - 1) / 12
    long weylClosed = 0;     // n (n+1) (n+2) (n-3) / 12, n >= 3
    long ricciClosed = 0;    // n (n+1) / 2
    long riemannRank = 0;    // from the Killing symbol prolongation
    long weylRank = 0;       // from the conformal Killing symbol prolongation
    bool weylApplicable = false;  // n >= 3

    bool ok() const;
    std::string first_failing() const;
};
// Requires n >= 2 (UsageError otherwise).
CountReport riemann_weyl_counts(int n);

// ---------------------------------------------------------------------------
// Gauge scenarios.

struct GaugeDemoResult {
    GaugePotential A;
    bool flat = false;
    std::vector<std::vector<Polynomial>> gaugingMatrix;  // d f_q / d a^tau
    long gaugingRank = 0;
    std::vector<std::pair<std::string, bool>> checks;
    bool ok() const;
    std::string first_failing() const;
};
// The 1D affine action y = a1 x + a2: Maurer-Cartan flatness of a^{-1}da and
// the rank of the parameter-gauging matrix (rows f, f_x, f_xx; columns a1,
// a2).  a1 must be nonzero.
GaugeDemoResult affine_gauge_demo(const RationalFunction& a1,
                                  const RationalFunction& a2);

// ---------------------------------------------------------------------------
// Elations and the electromagnetic field.

struct ElationResult {
    MetricSpec metric;
    Section a;  // covector components a_i
    // xi[k][(i,j)] with i <= j: xi^k_ij = delta^k_i a_j + delta^k_j a_i -
    // w_ij w^{kr} a_r.
    std::map<std::array<int, 3>, Polynomial> xi;  // key (k, i, j), i <= j
    std::vector<Polynomial> trace;                // xi^r_{ri}, one per i
    std::map<std::array<int, 2>, Polynomial> F;   // key (i, j), i < j
    std::vector<std::pair<std::string, bool>> checks;
    bool ok() const;
    std::string first_failing() const;

    Polynomial field(int i, int j) const;  // antisymmetry-aware lookup
    bool field_zero() const;
};
// Requires metric.n == 4.
ElationResult elations_em(const MetricSpec& metric, const Section& a);

// The 1-form a is closed iff d_i a_j = d_j a_i for all i < j.
bool one_form_closed(const Section& a);
// Radial homotopy primitive: for closed a returns phi with d_i phi = a_i.
Polynomial homotopy_potential(const Section& a);

}  // namespace jsk

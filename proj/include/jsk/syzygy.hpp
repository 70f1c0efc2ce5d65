#pragma once

#include <string>
#include <vector>

#include "jsk/diffop.hpp"
#include "jsk/groebner.hpp"

namespace jsk {

// Rows of the operator matrix as elements of R^sourceComps.  A covector
// lambda in R^targetComps annihilates the operator exactly when it is a
// syzygy of these rows.
std::vector<ModuleElement> operator_rows(const LinearDiffOp& op);

// Build an operator whose rows are the given module elements (each of length
// sourceComps over n symbols).
LinearDiffOp rows_to_operator(int n, int sourceComps,
                              const std::vector<ModuleElement>& rows,
                              std::string label = "");

// Generators of { lambda : sum_i lambda_i g_i = 0 }, computed by tagging each
// generator with a unit vector and eliminating the leading block, then pruned
// to an irredundant set.  Canonically ordered and integer-primitive.
std::vector<ModuleElement> syzygy_generators(const std::vector<ModuleElement>& gens);

struct CompatibilityResult {
    std::vector<ModuleElement> generators;  // may be empty
    LinearDiffOp cc;  // one row per generator; zero rows when none exist
};

// First compatibility operator of op: cc . op = 0, and the rows of cc
// generate every annihilating covector.
CompatibilityResult compatibility_conditions(const LinearDiffOp& op);

// All syzygies of op whose components have total degree <= maxOrder, as a
// canonical basis of that finite-dimensional space.  Brute force by exact
// linear algebra on coefficients; serves as an independent cross-check of
// the basis-driven computation.
std::vector<ModuleElement> syzygy_space_basis(const LinearDiffOp& op, int maxOrder);

// Dimension of the degree-bounded syzygy space derived from the
// basis-driven side (leading-monomial count).
long syzygy_dim_up_to(const LinearDiffOp& op, int maxDeg);

// Every consecutive pair composes to zero.
bool is_complex(const std::vector<LinearDiffOp>& seq);

// Row modules agree, i.e. the two systems are the same up to an invertible
// (over R) recombination of equations.
bool rows_module_equal(const LinearDiffOp& a, const LinearDiffOp& b);

// op . param = 0 and the rows of op generate ALL compatibility conditions of
// param, i.e. op is exactly the relation system satisfied by the image of
// param.
bool check_parametrization(const LinearDiffOp& op, const LinearDiffOp& param);

// Exactness of the pair (a, b) with b . a = 0 at the middle spot, in the
// sense that the rows of b generate every covector annihilating a.
bool check_exactness_pair(const LinearDiffOp& a, const LinearDiffOp& b);

}  // namespace jsk

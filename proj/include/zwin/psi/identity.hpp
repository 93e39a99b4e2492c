#pragma once

#include <vector>

#include "zwin/numkernel/derivative_fn.hpp"
#include "zwin/numkernel/prec_real.hpp"
#include "zwin/psi/psi.hpp"

namespace zwin {

// W(x) = prod_k (x - x_k) times g, derivatives by Leibniz.
DerivativeFn times_node_polynomial(const NodeSet& ns, DerivativeFn g);

struct IdentityResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  // max(sum of |LHS terms|, integral of |Psi f^(2r)|).
  double scale = 0.0;
  double quad_error = 0.0;
  long panels = 0;
};

// LHS = sum_{k=1}^r Psi_{2k-1}(a) f^(2k-1)(a) - Psi_{2k-1}(-a) f^(2k-1)(-a),
// RHS = integral_{-a}^{a} Psi_{2r-1}(x) f^(2r)(x) dx (adaptive, split at the
// nodes).  Requires 2r >= n + 2 and f vanishing at the nodes.
IdentityResult verify_identity(const DerivativeFn& f, const NodeSet& ns, int r, double rel_tol = 1e-14);

// RHS with a fixed number of GL16 panels per inter-node piece.
double identity_rhs_fixed(const DerivativeFn& f, const NodeSet& ns, int r, int panels);

// sqrt(integral_{-a}^{a} f^(order)(x)^2 dx).
double derivative_l2(const DerivativeFn& f, double a, int order);

}  // namespace zwin

#ifndef EPSPECTRA_EP_DYNAMICS_HPP
#define EPSPECTRA_EP_DYNAMICS_HPP

#include "epspectra/field.hpp"

namespace epspectra {

inline constexpr double default_dealias_fraction = 2.0 / 3.0;

// Bilinear pieces of the nonlocal transport form of the Euler-Poincare
// system. With G_w the Jacobian matrix (G_w)_{ij} = d_j w_i,
//
//   q_op(u,v) = -(1-Lap)^{-1} div[ G_u G_v + G_u G_v^T - G_u^T G_v
//                                  - (div u) G_v + (1/2) I (G_u : G_v) ]
//   r_op(u,v) = -(1-Lap)^{-1} [ (div u) v + G_u . v ],  (G_u . v)_i = sum_j d_i u_j v_j
//
// with the tensor divergence contracting the second slot, (div T)_j = sum_i d_i T_ji;
// this pairing is what makes the d >= 2 momentum-form residual vanish. Every
// quadratic product is dealiased at the given fraction.
VectorField q_op(const VectorField& u, const VectorField& v,
                 double fraction = default_dealias_fraction);
VectorField r_op(const VectorField& u, const VectorField& v,
                 double fraction = default_dealias_fraction);
VectorField p_op(const VectorField& u, double fraction = default_dealias_fraction);

// (a . grad) w
VectorField convect(const VectorField& a, const VectorField& w,
                    double fraction = default_dealias_fraction);

// Right-hand side of du/dt = -(u . grad)u + p_op(u)
VectorField ep_rhs(const VectorField& u, double fraction = default_dealias_fraction);

// First-order coefficient of the short-time flow expansion,
//   U0(u) = (u . grad)u - p_op(u) = -ep_rhs(u).
VectorField u0_functional(const VectorField& u, double fraction = default_dealias_fraction);

// L^2 norm of the momentum-form residual
//   d_t m + (u . grad) m + G_u . m + (div u) m,   m = (1 - Lap) u,
// evaluated with d_t m = (1 - Lap) u_t. Vanishes (to discretization error)
// when u_t = ep_rhs(u), which ties the transport form back to the momentum
// form of the system.
double momentum_residual(const VectorField& u, const VectorField& u_t);

}  // namespace epspectra

#endif

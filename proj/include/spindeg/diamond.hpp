#pragma once

#include "spindeg/channel.hpp"
#include "spindeg/matrix.hpp"

namespace spindeg {

// Completely bounded trace norm of a Hermitian-preserving map, computed by
// semidefinite programming: with J the Choi matrix,
//   ||Phi||_diamond = min t  s.t.  Y >= J,  Y >= -J,  t I - Tr_out(Y) >= 0.
// Throws std::runtime_error when the interior-point solve does not converge.
double diamond_norm(const LinearMapChoi& phi);

// d_in * d_out^2 * max|J_ij|; cheap outer bound, loose by design.
double diamond_upper_maxnorm(const LinearMapChoi& phi);

// trace_norm((id (x) Phi)(|probe><probe|)) for a unit vector probe on
// reference (x) input, both of dimension d_in; never exceeds the diamond norm.
double diamond_lower_entangled(const LinearMapChoi& phi, const ComplexMatrix& probe);

}  // namespace spindeg

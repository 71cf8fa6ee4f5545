#pragma once

#include <array>
#include <utility>

#include "entswap/linalg.hpp"

namespace entswap {

// 4x4 density matrix. Construction checks hermiticity (1e-10), unit trace
// (1e-10) and positivity (eigenvalues >= -1e-10).
class TwoQubitState {
public:
    explicit TwoQubitState(ComplexMatrix density);

    const ComplexMatrix& density() const { return density_; }

private:
    ComplexMatrix density_;
};

// 16-dim pure state over qubits 1..4, qubit 1 most significant
// (basis index 8*b1 + 4*b2 + 2*b3 + b4). Must be normalized within 1e-12.
class FourQubitPureState {
public:
    explicit FourQubitPureState(StateVector vec);

    const StateVector& vector() const { return vec_; }

private:
    StateVector vec_;
};

// Probability weights over the four Bell projectors.
struct BellDiagonalSpec {
    std::array<double, 4> weights{};
};

// The +/-1 signs mu_il of the four Bell-product identities
// |Psi_i>_12 |Psi_i>_34 = (1/2) sum_l mu_il |Psi_l>_23 |Psi_l>_14.
struct BellSignMatrix {
    std::array<std::array<int, 4>, 4> mu{};
};

// |Psi_i> for i in 1..4:
//   Psi1 = (|00>+|11>)/sqrt2, Psi2 = (|00>-|11>)/sqrt2,
//   Psi3 = (|01>+|10>)/sqrt2, Psi4 = (|01>-|10>)/sqrt2.
StateVector bell_vector(int i);

// |Psi1>_12 |Psi1>_34 as a 16-dim vector.
FourQubitPureState initial_state();

// sum_l w_l |Psi_l><Psi_l|. Throws BadWeights unless each weight is in [0,1]
// and they sum to 1 within 1e-10.
TwoQubitState bell_diagonal_state(const BellDiagonalSpec& spec);

// Peres-Horodecki test: true iff the partial transpose (on the second qubit
// factor) has minimum eigenvalue >= -1e-10. For two qubits PPT <=> separable.
bool is_ppt_separable(const TwoQubitState& rho);

BellSignMatrix bell_sign_matrix();

// Product of two Bell-pair states placed on arbitrary qubit pairs: the
// first label of each pair is the first tensor factor of its 4-dim vector.
// Used to realize e.g. |Psi_l>_23 |Psi_l>_14 as a 16-dim vector.
StateVector product_state_on_pairs(std::pair<int, int> pair_a, const StateVector& vec_a,
                                   std::pair<int, int> pair_b, const StateVector& vec_b);

// Typed convenience over the linalg partial trace.
TwoQubitState reduced_density(const FourQubitPureState& psi, std::pair<int, int> keep);

}  // namespace entswap

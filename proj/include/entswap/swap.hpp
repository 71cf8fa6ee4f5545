#pragma once

#include <optional>
#include <vector>

#include "entswap/povm.hpp"
#include "entswap/states.hpp"

namespace entswap {

// Result of one measurement outcome. Outcomes with probability below 1e-12
// are flagged and carry no post-measurement states.
struct OutcomeRecord {
    int outcome_index = 0;  // 1-based
    double probability = 0.0;
    bool zero_probability = false;
    std::optional<TwoQubitState> rho14;
    std::optional<TwoQubitState> rho12;
    std::optional<TwoQubitState> rho34;
};

// p_k = Tr(element) / 4.
double outcome_probability(const ComplexMatrix& element);

// (1/sqrt(p_k)) (sqrt(element) on qubits (2,3)) |Phi>, normalized.
// Throws ZeroProbability when Tr(element) <= 1e-12.
FourQubitPureState post_measurement_state(const ComplexMatrix& element);

// rho_14|k = conj(element) / Tr(element), conjugation in the computational basis.
TwoQubitState rho14_closed_form(const ComplexMatrix& element);

// Bell weights of rho_12|k = rho_34|k for a Bell-diagonal measurement:
// tau_l = gamma_l^2 / (16 p_k) with
// gamma_l = sqrt(x_k) mu_kl + sum_{j!=k} sqrt(y_kj) mu_jl. k is 1-based.
BellDiagonalSpec bell_diagonal_reduced_closed_form(const BellDiagonalPovmSpec& spec, int k);

// Full protocol via the 16-dim oracle path: per-outcome probability,
// post-measurement state, and the reduced states of (1,4), (1,2), (3,4).
std::vector<OutcomeRecord> run_swap(const Povm& povm);

}  // namespace entswap

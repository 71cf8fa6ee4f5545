#pragma once

#include <array>
#include <string>
#include <vector>

#include "entswap/linalg.hpp"
#include "entswap/states.hpp"

namespace entswap {

// Two-qubit POVM: ordered 4x4 elements, each Hermitian PSD, summing to I.
struct Povm {
    std::vector<ComplexMatrix> elements;
};

// Bell-diagonal measurement family M_i(lambda) = x_i |Psi_i><Psi_i| +
// sum_{j!=i} y_ij |Psi_j><Psi_j| with x_i = lambda + (1-lambda) q_ii and
// y_ij = (1-lambda) q_ij. q is column-stochastic: sum_i q_il = 1 for each l.
struct BellDiagonalPovmSpec {
    double lambda = 1.0;
    std::array<std::array<double, 4>, 4> q{};
};

// Throws PovmValidationError (NotHermitian / NotPsd / NotComplete, with the
// offending element index) unless every element is Hermitian within 1e-10
// with eigenvalues >= -1e-10 and the elements sum to I within 1e-9.
void validate(const Povm& p);

// The four Bell projectors |Psi_i><Psi_i|.
Povm bell_measurement();

// Rank-1 projectors onto the given basis. Throws NotOrthonormal unless the
// vectors are pairwise orthonormal within 1e-10.
Povm com_from_basis(const std::array<StateVector, 4>& basis);

// lambda |Psi_i><Psi_i| + (1-lambda) I/4.
Povm white_noise_family(double lambda);

// Rank-2 Bell-diagonal elements pairing (Psi1,Psi2) and (Psi3,Psi4):
// M_1 = lambda P_1 + (1-lambda) P_2, M_2 = lambda P_2 + (1-lambda) P_1, etc.
Povm rank2_family(double lambda);

Povm bell_diagonal_family(const BellDiagonalPovmSpec& spec);

// Checks the BellDiagonalPovmSpec invariants; throws BadSpec.
void validate_spec(const BellDiagonalPovmSpec& spec);

// JSON round trip: { "elements": [ [[ [re,im] x4 ] x4 ] x k ] }, row-major.
// Loading validates; numbers are written with enough digits to round-trip.
void povm_to_file(const Povm& p, const std::string& path);
Povm povm_from_file(const std::string& path);

std::string povm_to_json_string(const Povm& p);
Povm povm_from_json_string(const std::string& text);

}  // namespace entswap

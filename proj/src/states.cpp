#include "entswap/states.hpp"

#include <cmath>
#include <string>

namespace entswap {

TwoQubitState::TwoQubitState(ComplexMatrix density) : density_(std::move(density)) {
    if (density_.rows() != 4 || density_.cols() != 4)
        throw std::invalid_argument("TwoQubitState: density must be 4x4");
    if (density_.hermiticity_defect() > 1e-10)
        throw std::invalid_argument("TwoQubitState: density not Hermitian within 1e-10");
    if (std::abs(density_.trace() - cdouble(1.0)) > 1e-10)
        throw std::invalid_argument("TwoQubitState: trace differs from 1 by more than 1e-10");
    const EigResult eig = hermitian_eig(density_);
    if (eig.eigenvalues.front() < -1e-10)
        throw std::invalid_argument("TwoQubitState: eigenvalue below -1e-10");
}

FourQubitPureState::FourQubitPureState(StateVector vec) : vec_(std::move(vec)) {
    if (vec_.dim() != 16)
        throw std::invalid_argument("FourQubitPureState: vector must be 16-dimensional");
    if (std::abs(vec_.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("FourQubitPureState: norm differs from 1 by more than 1e-12");
}

StateVector bell_vector(int i) {
    const double s = 1.0 / std::sqrt(2.0);
    StateVector v(4);
    switch (i) {
        case 1: v[0] = s; v[3] = s; break;
        case 2: v[0] = s; v[3] = -s; break;
        case 3: v[1] = s; v[2] = s; break;
        case 4: v[1] = s; v[2] = -s; break;
        default: throw BadIndex("bell_vector: index must be in 1..4, got " + std::to_string(i));
    }
    return v;
}

FourQubitPureState initial_state() {
    return FourQubitPureState(kron(bell_vector(1), bell_vector(1)));
}

TwoQubitState bell_diagonal_state(const BellDiagonalSpec& spec) {
    double sum = 0.0;
    for (double w : spec.weights) {
        if (!(w >= 0.0 && w <= 1.0)) throw BadWeights("bell_diagonal_state: weight outside [0,1]");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-10)
        throw BadWeights("bell_diagonal_state: weights sum differs from 1 by more than 1e-10");
    ComplexMatrix rho(4, 4);
    for (int l = 0; l < 4; ++l) rho += spec.weights[l] * outer(bell_vector(l + 1));
    return TwoQubitState(rho);
}

bool is_ppt_separable(const TwoQubitState& rho) {
    // Partial transpose on the second factor: (a,b),(c,d) -> (a,d),(c,b).
    const ComplexMatrix& r = rho.density();
    ComplexMatrix pt(4, 4);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d)
                    pt(2 * a + b, 2 * c + d) = r(2 * a + d, 2 * c + b);
    const EigResult eig = hermitian_eig(pt);
    return eig.eigenvalues.front() >= -1e-10;
}

BellSignMatrix bell_sign_matrix() {
    BellSignMatrix s;
    s.mu = {{{+1, +1, +1, +1},
             {+1, +1, -1, -1},
             {+1, -1, +1, -1},
             {+1, -1, -1, +1}}};
    return s;
}

StateVector product_state_on_pairs(std::pair<int, int> pair_a, const StateVector& vec_a,
                                   std::pair<int, int> pair_b, const StateVector& vec_b) {
    int seen = 0;
    for (int q : {pair_a.first, pair_a.second, pair_b.first, pair_b.second}) {
        if (q < 1 || q > 4 || (seen & (1 << q)))
            throw BadQubitSet("product_state_on_pairs: the two pairs must partition qubits 1..4");
        seen |= 1 << q;
    }
    if (vec_a.dim() != 4 || vec_b.dim() != 4)
        throw BadQubitSet("product_state_on_pairs: pair states must be 4-dimensional");
    const auto bit = [](int q) { return 4 - q; };

    StateVector out(16);
    for (std::size_t n = 0; n < 16; ++n) {
        const auto bit_of = [&](int q) { return (n >> bit(q)) & 1; };
        const std::size_t ia = 2 * bit_of(pair_a.first) + bit_of(pair_a.second);
        const std::size_t ib = 2 * bit_of(pair_b.first) + bit_of(pair_b.second);
        out[n] = vec_a[ia] * vec_b[ib];
    }
    return out;
}

TwoQubitState reduced_density(const FourQubitPureState& psi, std::pair<int, int> keep) {
    return TwoQubitState(reduced_density(psi.vector(), keep));
}

}  // namespace entswap

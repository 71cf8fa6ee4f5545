#include "entswap/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>

namespace entswap {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cdouble s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

cdouble ComplexMatrix::trace() const {
    cdouble t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return d;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    assert(a.cols() == b.rows());
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cdouble aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexMatrix operator*(cdouble s, ComplexMatrix a) { return a *= s; }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    double d = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) d = std::max(d, std::abs(a(r, c) - b(r, c)));
    return d;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes_) s += std::norm(a);
    return std::sqrt(s);
}

StateVector& StateVector::normalize() {
    const double n = norm();
    if (n > 0.0)
        for (auto& a : amplitudes_) a /= n;
    return *this;
}

cdouble inner_product(const StateVector& a, const StateVector& b) {
    assert(a.dim() == b.dim());
    cdouble s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

StateVector kron(const StateVector& a, const StateVector& b) {
    StateVector out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
    return out;
}

StateVector operator*(const ComplexMatrix& m, const StateVector& v) {
    assert(m.cols() == v.dim());
    StateVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        cdouble s = 0.0;
        for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
    assert(a.dim() == b.dim());
    double d = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

ComplexMatrix outer(const StateVector& v) {
    ComplexMatrix m(v.dim(), v.dim());
    for (std::size_t r = 0; r < v.dim(); ++r)
        for (std::size_t c = 0; c < v.dim(); ++c) m(r, c) = v[r] * std::conj(v[c]);
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const cdouble f = a(ar, ac);
            if (f == cdouble(0.0)) continue;
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc)
                    out(ar * b.rows() + br, ac * b.cols() + bc) = f * b(br, bc);
        }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
    return out;
}

ComplexMatrix conjugate_in_computational_basis(const ComplexMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = std::conj(a(r, c));
    return out;
}

namespace {

// One two-sided Jacobi rotation zeroing a(p,q). The rotation is the complex
// analogue of the Numerical-Recipes symmetric update: with a(p,q) = r e^{i phi},
// J differs from the identity in J(p,p)=J(q,q)=c, J(p,q)=s e^{i phi},
// J(q,p)=-s e^{-i phi}, and a <- J^dagger a J keeps a Hermitian.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cdouble apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const cdouble phase = apq / r;  // e^{i phi}

    const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const std::size_t n = a.rows();
    a(p, p) -= t * r;
    a(q, q) += t * r;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const cdouble akp = a(k, p);
        const cdouble akq = a(k, q);
        a(k, p) = c * akp - s * std::conj(phase) * akq;
        a(k, q) = s * phase * akp + c * akq;
        a(p, k) = std::conj(a(k, p));
        a(q, k) = std::conj(a(k, q));
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cdouble vkp = v(k, p);
        const cdouble vkq = v(k, q);
        v(k, p) = c * vkp - s * std::conj(phase) * vkq;
        v(k, q) = s * phase * vkp + c * vkq;
    }
}

double offdiag_sq(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t p = 0; p + 1 < a.rows(); ++p)
        for (std::size_t q = p + 1; q < a.rows(); ++q) s += std::norm(a(p, q));
    return s;
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& h) {
    if (!h.is_square()) throw NotHermitian("hermitian_eig: matrix is not square");
    if (h.hermiticity_defect() > 1e-10)
        throw NotHermitian("hermitian_eig: matrix is not Hermitian within 1e-10");

    const std::size_t n = h.rows();
    ComplexMatrix a = h;
    // Symmetrize so the working copy is exactly Hermitian with real diagonal.
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = a(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const cdouble avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double frob_sq = a.frobenius_norm() * a.frobenius_norm();
    const double stop = frob_sq * 1e-30 + 1e-300;
    for (int sweep = 0; sweep < 60 && offdiag_sq(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigResult res;
    res.eigenvalues.resize(n);
    res.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        res.eigenvalues[i] = a(order[i], order[i]).real();
        for (std::size_t r = 0; r < n; ++r) res.eigenvectors(r, i) = v(r, order[i]);
    }
    return res;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
    EigResult eig = hermitian_eig(h);
    const std::size_t n = h.rows();
    for (double& lambda : eig.eigenvalues) {
        if (lambda < -1e-10) throw NotPsd("psd_sqrt: eigenvalue below -1e-10");
        if (lambda < 0.0) lambda = 0.0;
    }
    // V sqrt(Lambda) V^dagger
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double root = std::sqrt(eig.eigenvalues[i]);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                out(r, c) += root * eig.eigenvectors(r, i) * std::conj(eig.eigenvectors(c, i));
    }
    return out;
}

ComplexMatrix reduced_density(const StateVector& psi, std::pair<int, int> keep) {
    if (psi.dim() != 16) throw BadQubitSet("reduced_density: state must be 16-dimensional");
    int ka = keep.first;
    int kb = keep.second;
    if (ka > kb) std::swap(ka, kb);
    if (ka < 1 || kb > 4 || ka == kb) throw BadQubitSet("reduced_density: keep labels must be two distinct qubits in 1..4");

    // Qubit q occupies bit (4 - q) of the basis index.
    const auto bit = [](int q) { return 4 - q; };
    int env[2];
    int e = 0;
    for (int q = 1; q <= 4; ++q)
        if (q != ka && q != kb) env[e++] = q;

    const auto index = [&](std::size_t kept, std::size_t envv) {
        std::size_t n = 0;
        n |= ((kept >> 1) & 1) << bit(ka);
        n |= (kept & 1) << bit(kb);
        n |= ((envv >> 1) & 1) << bit(env[0]);
        n |= (envv & 1) << bit(env[1]);
        return n;
    };

    ComplexMatrix rho(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            cdouble acc = 0.0;
            for (std::size_t ev = 0; ev < 4; ++ev) acc += psi[index(r, ev)] * std::conj(psi[index(c, ev)]);
            rho(r, c) = acc;
        }
    return rho;
}

}  // namespace entswap

#include "qsent/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "qsent/error.hpp"

namespace qsent {

namespace {

void require_square(const ComplexMatrix& x, const char* what) {
    if (x.rows() != x.cols()) {
        throw Error(ErrorCode::NonSquare, std::string(what) + ": got " + std::to_string(x.rows()) + "x" +
                                              std::to_string(x.cols()));
    }
}

} // namespace

double Spectrum::sum() const noexcept { return std::accumulate(values.begin(), values.end(), 0.0); }

double hermiticity_deviation(const ComplexMatrix& x) {
    require_square(x, "hermiticity_deviation");
    return (x - x.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "max_abs_diff: shapes differ");
    }
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

Spectrum hermitian_eigenvalues(const ComplexMatrix& x) {
    require_square(x, "hermitian_eigenvalues");
    if (x.size() == 0) return {{}, SpectrumKind::HermitianEigenvalues};
    const double deviation = hermiticity_deviation(x);
    if (deviation > herm_tol) {
        throw Error(ErrorCode::NotHermitian, "deviation " + std::to_string(deviation) + " exceeds tolerance");
    }
    const ComplexMatrix symmetric = (x + x.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(symmetric, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::InvalidSpectrum, "eigensolver did not converge");
    }
    const auto& ev = solver.eigenvalues();
    Spectrum out{std::vector<double>(ev.data(), ev.data() + ev.size()), SpectrumKind::HermitianEigenvalues};
    std::sort(out.values.begin(), out.values.end(), std::greater<>());
    return out;
}

Spectrum singular_values(const ComplexMatrix& x) {
    if (x.size() == 0) return {{}, SpectrumKind::SingularValues};
    Eigen::JacobiSVD<ComplexMatrix> svd(x);
    const auto& sv = svd.singularValues();
    Spectrum out{std::vector<double>(sv.data(), sv.data() + sv.size()), SpectrumKind::SingularValues};
    std::sort(out.values.begin(), out.values.end(), std::greater<>());
    return out;
}

Spectrum clamp_psd(Spectrum spectrum, double tol) {
    for (double& v : spectrum.values) {
        if (v < -tol) {
            throw Error(ErrorCode::NotPositive, "eigenvalue " + std::to_string(v) + " below -" + std::to_string(tol));
        }
        if (std::abs(v) <= tol) v = 0.0;
    }
    return spectrum;
}

std::size_t numeric_rank(const Spectrum& spectrum, double tol) {
    return static_cast<std::size_t>(
        std::count_if(spectrum.values.begin(), spectrum.values.end(), [tol](double v) { return v > tol; }));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& x, std::ptrdiff_t d, Subsystem traced) {
    if (d <= 0 || x.rows() != d * d || x.cols() != d * d) {
        throw Error(ErrorCode::DimensionMismatch, "partial_trace: expected a " + std::to_string(d * d) + "x" +
                                                      std::to_string(d * d) + " matrix");
    }
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (std::ptrdiff_t i = 0; i < d; ++i) {
        for (std::ptrdiff_t j = 0; j < d; ++j) {
            Complex acc{0.0, 0.0};
            for (std::ptrdiff_t k = 0; k < d; ++k) {
                acc += traced == Subsystem::Second ? x(i * d + k, j * d + k) : x(k * d + i, k * d + j);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

ComplexMatrix vec(const ComplexMatrix& x) {
    require_square(x, "vec");
    const auto d = x.rows();
    ComplexMatrix out(d * d, 1);
    for (Eigen::Index mu = 0; mu < d; ++mu) {
        for (Eigen::Index nu = 0; nu < d; ++nu) out(mu * d + nu, 0) = x(mu, nu);
    }
    return out;
}

ComplexMatrix unvec(const ComplexMatrix& v, std::ptrdiff_t d) {
    if (v.cols() != 1 || v.rows() != d * d) {
        throw Error(ErrorCode::DimensionMismatch, "unvec: expected a column of length " + std::to_string(d * d));
    }
    ComplexMatrix out(d, d);
    for (Eigen::Index mu = 0; mu < d; ++mu) {
        for (Eigen::Index nu = 0; nu < d; ++nu) out(mu, nu) = v(mu * d + nu, 0);
    }
    return out;
}

InverseSqrt inverse_sqrt_psd(const ComplexMatrix& x) {
    require_square(x, "inverse_sqrt_psd");
    const ComplexMatrix symmetric = (x + x.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(symmetric);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::SingularNormalizer, "eigensolver did not converge");
    }
    const Eigen::VectorXd& ev = solver.eigenvalues();
    const double lo = ev.minCoeff();
    const double hi = ev.maxCoeff();
    if (!(lo > 0.0)) {
        throw Error(ErrorCode::SingularNormalizer, "matrix is not positive definite");
    }
    const Eigen::VectorXd inv_sqrt = ev.array().rsqrt();
    return {solver.eigenvectors() * inv_sqrt.asDiagonal() * solver.eigenvectors().adjoint(), hi / lo};
}

} // namespace qsent

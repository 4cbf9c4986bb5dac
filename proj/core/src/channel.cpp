#include "qsent/channel.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qsent/error.hpp"

namespace qsent {

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus_ops) : kraus_(std::move(kraus_ops)) {
    if (kraus_.empty()) throw Error(ErrorCode::DimensionMismatch, "channel needs at least one Kraus operator");
    dim_ = kraus_.front().rows();
    if (dim_ < min_channel_dim || dim_ > max_channel_dim) {
        throw Error(ErrorCode::DimensionMismatch, "channel dimension " + std::to_string(dim_) + " outside [2, 16]");
    }
    for (const auto& a : kraus_) {
        if (a.rows() != dim_ || a.cols() != dim_) {
            throw Error(ErrorCode::DimensionMismatch, "Kraus operators must all be " + std::to_string(dim_) + "x" +
                                                          std::to_string(dim_));
        }
    }
    const double defect = tp_defect();
    if (!(defect <= tp_tol)) {
        throw Error(ErrorCode::NotTracePreserving, "max |sum A^dag A - I| = " + std::to_string(defect));
    }
}

double KrausChannel::tp_defect() const {
    ComplexMatrix acc = ComplexMatrix::Zero(dim_, dim_);
    for (const auto& a : kraus_) acc.noalias() += a.adjoint() * a;
    return max_abs_diff(acc, ComplexMatrix::Identity(dim_, dim_));
}

double KrausChannel::unitality_defect() const {
    ComplexMatrix acc = ComplexMatrix::Zero(dim_, dim_);
    for (const auto& a : kraus_) acc.noalias() += a * a.adjoint();
    return max_abs_diff(acc, ComplexMatrix::Identity(dim_, dim_));
}

bool DynamicalDiagnostics::valid() const noexcept {
    const double tol = eig_tol(dim * dim);
    return hermiticity <= herm_tol && min_eigenvalue >= -tol && trace_defect <= tol && partial_trace_defect <= tp_tol;
}

ComplexMatrix maximally_entangled_state(std::ptrdiff_t d) {
    ComplexMatrix phi = ComplexMatrix::Zero(d * d, 1);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::ptrdiff_t nu = 0; nu < d; ++nu) phi(nu * d + nu, 0) = amp;
    return phi;
}

DynamicalMatrix dynamical_from_kraus(const KrausChannel& ch) {
    const auto d = ch.dim();
    ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
    for (const auto& a : ch.kraus_ops()) {
        const ComplexMatrix v = vec(a);
        out.noalias() += v * v.adjoint();
    }
    return {d, std::move(out)};
}

SuperoperatorMatrix superoperator_from_kraus(const KrausChannel& ch) {
    const auto d = ch.dim();
    ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
    for (const auto& a : ch.kraus_ops()) out += kron(a, a.conjugate());
    return {d, std::move(out)};
}

ComplexMatrix reshuffle(const ComplexMatrix& m, std::ptrdiff_t d) {
    if (d <= 0 || m.rows() != d * d || m.cols() != d * d) {
        throw Error(ErrorCode::DimensionMismatch, "reshuffle: expected a " + std::to_string(d * d) + "x" +
                                                      std::to_string(d * d) + " matrix");
    }
    ComplexMatrix out(d * d, d * d);
    for (std::ptrdiff_t alpha = 0; alpha < d; ++alpha) {
        for (std::ptrdiff_t beta = 0; beta < d; ++beta) {
            for (std::ptrdiff_t mu = 0; mu < d; ++mu) {
                for (std::ptrdiff_t nu = 0; nu < d; ++nu) {
                    out(alpha * d + beta, mu * d + nu) = m(alpha * d + mu, beta * d + nu);
                }
            }
        }
    }
    return out;
}

ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& x) {
    if (x.rows() != ch.dim() || x.cols() != ch.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "apply_channel: input must be " + std::to_string(ch.dim()) + "x" +
                                                      std::to_string(ch.dim()));
    }
    ComplexMatrix out = ComplexMatrix::Zero(ch.dim(), ch.dim());
    for (const auto& a : ch.kraus_ops()) out.noalias() += a * x * a.adjoint();
    return out;
}

ComplexMatrix apply_via_dynamical(const DynamicalMatrix& dm, const ComplexMatrix& x) {
    const auto d = dm.dim;
    if (x.rows() != d || x.cols() != d) {
        throw Error(ErrorCode::DimensionMismatch, "apply_via_dynamical: input must be " + std::to_string(d) + "x" +
                                                      std::to_string(d));
    }
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    return partial_trace(dm.matrix * kron(id, x.transpose()), d, Subsystem::Second);
}

bool is_unital(const KrausChannel& ch, double tol) { return ch.unitality_defect() <= tol; }

DynamicalDiagnostics diagnose(const DynamicalMatrix& dm) {
    const auto d = dm.dim;
    DynamicalDiagnostics out;
    out.dim = d;
    out.hermiticity = hermiticity_deviation(dm.matrix);
    if (out.hermiticity <= herm_tol) out.min_eigenvalue = hermitian_eigenvalues(dm.matrix).min();
    else out.min_eigenvalue = -std::numeric_limits<double>::infinity();
    out.trace_defect = std::abs(dm.matrix.trace() - Complex(static_cast<double>(d), 0.0));
    out.partial_trace_defect =
        max_abs_diff(partial_trace(dm.matrix, d, Subsystem::First), ComplexMatrix::Identity(d, d));
    return out;
}

} // namespace qsent

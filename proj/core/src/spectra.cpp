#include "qsent/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qsent/error.hpp"

namespace qsent {

namespace {

InequalityReport make_report(std::string name, double lhs, double rhs, Direction dir, double abs_tol) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.direction = dir;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    const double margin = dir == Direction::LessEqual ? rhs - lhs : lhs - rhs;
    r.slack = margin / scale;
    r.passed = margin >= -abs_tol;
    return r;
}

InequalityReport make_relative_report(std::string name, double lhs, double rhs, Direction dir, double rel_tol) {
    auto r = make_report(std::move(name), lhs, rhs, dir, 0.0);
    r.passed = r.slack >= -rel_tol;
    return r;
}

/// Eigenvalues of a positive matrix for the anti-norm regime of q.
Spectrum positive_spectrum(const ComplexMatrix& x, NormRegime regime) {
    Spectrum ev = hermitian_eigenvalues(x);
    if (regime == NormRegime::AntinormStrict) {
        if (ev.min() <= strict_pos_tol) {
            throw Error(ErrorCode::NotPositive,
                        "negative-order anti-norm needs a strictly positive matrix, min eigenvalue " +
                            std::to_string(ev.min()));
        }
        return ev;
    }
    return clamp_psd(std::move(ev), eig_tol(x.rows()));
}

double order_norm_of_positive(const Spectrum& ev, double q) {
    if (std::isinf(q)) return ev.max();
    return power_mean_norm(ev.values, q);
}

} // namespace

NormOrder::NormOrder(double q) : q_(q), infinite_(std::isinf(q) && q > 0) {
    if (q == 0.0 || std::isnan(q) || (std::isinf(q) && q < 0)) {
        throw Error(ErrorCode::InvalidOrder, "order must be nonzero and finite or +inf, got " + std::to_string(q));
    }
}

NormOrder NormOrder::infinity() noexcept {
    NormOrder o;
    o.q_ = std::numeric_limits<double>::infinity();
    o.infinite_ = true;
    return o;
}

NormRegime NormOrder::regime() const noexcept {
    if (infinite_ || q_ >= 1.0) return NormRegime::Norm;
    return q_ > 0.0 ? NormRegime::AntinormPsd : NormRegime::AntinormStrict;
}

double power_sum(std::span<const double> values, double q) {
    double acc = 0.0;
    for (double v : values) {
        if (v > 0.0) acc += std::pow(v, q);
    }
    return acc;
}

double power_mean_norm(std::span<const double> values, double q) {
    double pivot = 0.0;
    if (q > 0.0) {
        for (double v : values) pivot = std::max(pivot, v);
        if (pivot == 0.0) return 0.0;
    } else {
        pivot = std::numeric_limits<double>::infinity();
        for (double v : values) {
            if (!(v > 0.0)) throw Error(ErrorCode::NotPositive, "negative order needs strictly positive values");
            pivot = std::min(pivot, v);
        }
        if (std::isinf(pivot)) return 0.0;
    }
    double acc = 0.0;
    for (double v : values) {
        if (v > 0.0) acc += std::pow(v / pivot, q);
    }
    return pivot * std::pow(acc, 1.0 / q);
}

double schatten_norm(const Spectrum& singular, NormOrder q) {
    if (q.regime() != NormRegime::Norm) {
        throw Error(ErrorCode::InvalidOrder, "Schatten norm needs q >= 1, got " + std::to_string(q.value()));
    }
    if (q.is_infinite()) return singular.max();
    return power_mean_norm(singular.values, q.value());
}

double schatten_norm(const ComplexMatrix& x, NormOrder q) {
    if (q.regime() != NormRegime::Norm) {
        throw Error(ErrorCode::InvalidOrder, "Schatten norm needs q >= 1, got " + std::to_string(q.value()));
    }
    if (q.value() == 2.0) return x.norm();
    return schatten_norm(singular_values(x), q);
}

double schatten_antinorm(const ComplexMatrix& x, NormOrder q) {
    const auto regime = q.regime();
    if (regime == NormRegime::Norm) {
        throw Error(ErrorCode::InvalidOrder, "anti-norm needs q < 1, got " + std::to_string(q.value()));
    }
    return power_mean_norm(positive_spectrum(x, regime).values, q.value());
}

InequalityReport check_prop1(const ComplexMatrix& x, double q) {
    const NormOrder order(q);
    const auto regime = order.regime();
    if (order.is_infinite()) throw Error(ErrorCode::InvalidOrder, "check_prop1 needs a finite order");

    // One spectrum serves all three norms: singular values in the norm regime,
    // eigenvalues of the positive matrix otherwise (where they coincide).
    const Spectrum spec = regime == NormRegime::Norm ? singular_values(x) : positive_spectrum(x, regime);
    const double n1 = spec.sum();
    const double n2 = std::sqrt(power_sum(spec.values, 2.0));
    if (!(n1 > 0.0)) throw Error(ErrorCode::DomainError, "check_prop1 needs a nonzero matrix");

    const double lhs = std::pow(power_mean_norm(spec.values, q), q);
    const double rhs = std::pow(n2, 2.0 * (q - 1.0)) * std::pow(n1, 2.0 - q);
    const Direction dir = (q >= 1.0 && q <= 2.0) ? Direction::LessEqual : Direction::GreaterEqual;
    return make_relative_report("prop1", lhs, rhs, dir, 1e-9);
}

InequalityReport check_two_inf_one(const ComplexMatrix& x) {
    const Spectrum sv = singular_values(x);
    if (!(sv.max() > 0.0)) throw Error(ErrorCode::DomainError, "check_two_inf_one needs a nonzero matrix");
    const double lhs = std::sqrt(power_sum(sv.values, 2.0));
    const double rhs = std::sqrt(sv.max()) * std::sqrt(sv.sum());
    return make_report("21in", lhs, rhs, Direction::LessEqual, 1e-10);
}

InequalityReport check_superop_norm_bound(const KrausChannel& ch) {
    const auto d = ch.dim();
    const double k_inf = singular_values(superoperator_from_kraus(ch).matrix).max();
    const ComplexMatrix rho_star = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
    const double out_inf = singular_values(apply_channel(ch, rho_star)).max();
    double rhs = std::sqrt(static_cast<double>(d)) * std::sqrt(out_inf);
    if (is_unital(ch, unital_tol)) rhs = std::min(rhs, 1.0);
    return make_report("upkp", k_inf, rhs, Direction::LessEqual, 1e-10);
}

InequalityReport check_antinorm_monotonicity(const ComplexMatrix& x, double p, double q) {
    if (!(p > 0.0 && p < q)) {
        throw Error(ErrorCode::InvalidOrder, "monotonicity needs 0 < p < q, got p=" + std::to_string(p) +
                                                 " q=" + std::to_string(q));
    }
    const Spectrum ev = positive_spectrum(x, NormRegime::AntinormPsd);
    return make_report("npqr", order_norm_of_positive(ev, q), order_norm_of_positive(ev, p), Direction::LessEqual,
                       1e-10);
}

InequalityReport check_superadditivity(const ComplexMatrix& x, const ComplexMatrix& y, double q) {
    const NormOrder order(q);
    if (order.regime() == NormRegime::Norm) {
        throw Error(ErrorCode::InvalidOrder, "superadditivity needs an anti-norm order, got " + std::to_string(q));
    }
    const double lhs = schatten_antinorm(x + y, order);
    const double rhs = schatten_antinorm(x, order) + schatten_antinorm(y, order);
    return make_report("sups", lhs, rhs, Direction::GreaterEqual, 1e-10);
}

InequalityReport check_norm_ratio_product(const KrausChannel& ch) {
    const auto d = static_cast<double>(ch.dim());
    const Spectrum dyn = clamp_psd(hermitian_eigenvalues(dynamical_from_kraus(ch).matrix), eig_tol(ch.dim() * ch.dim()));
    const Spectrum sup = singular_values(superoperator_from_kraus(ch).matrix);
    const double lhs = (dyn.sum() / std::sqrt(power_sum(dyn.values, 2.0))) *
                       (sup.sum() / std::sqrt(power_sum(sup.values, 2.0)));
    const double rhs = is_unital(ch, unital_tol) ? d : std::sqrt(d);
    return make_report("cbn0", lhs, rhs, Direction::GreaterEqual, 1e-9);
}

} // namespace qsent

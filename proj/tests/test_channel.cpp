#include <doctest.h>

#include <cmath>

#include "qsent/channel.hpp"
#include "qsent/error.hpp"
#include "qsent/sampler.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace qsent;
using qsent::testing::random_density;
using qsent::testing::random_matrix;

namespace {

KrausChannel depolarizing(std::ptrdiff_t d) { return named_channel("completely-depolarizing", d); }

std::vector<KrausChannel> mixed_population() {
    std::vector<KrausChannel> out;
    for (std::ptrdiff_t d : {2, 3, 4}) {
        for (std::uint64_t i = 0; i < 6; ++i) {
            SamplerConfig cfg{d, 1 + i % static_cast<std::uint64_t>(d * d), 1000 + i, ChannelFamily::Cptp, {}, 0.0};
            out.push_back(sample(cfg));
            cfg.family = ChannelFamily::UnitaryMixture;
            out.push_back(sample(cfg));
            cfg.family = ChannelFamily::Unistochastic;
            out.push_back(sample(cfg));
        }
    }
    return out;
}

} // namespace

TEST_CASE("KrausChannel validates its operators") {
    CHECK_NOTHROW(KrausChannel({ComplexMatrix::Identity(2, 2)}));
    try {
        KrausChannel({0.5 * ComplexMatrix::Identity(2, 2)});
        FAIL("expected NotTracePreserving");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotTracePreserving);
    }
    CHECK_THROWS_AS(KrausChannel(std::vector<ComplexMatrix>{}), Error);
    CHECK_THROWS_AS(KrausChannel({ComplexMatrix::Identity(1, 1)}), Error);
    CHECK_THROWS_AS(KrausChannel({ComplexMatrix::Identity(17, 17)}), Error);
    CHECK_THROWS_AS(KrausChannel({ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(3, 3)}), Error);
}

TEST_CASE("maximally entangled state") {
    const ComplexMatrix phi = maximally_entangled_state(3);
    CHECK(phi.norm() == doctest::Approx(1.0));
    CHECK(phi(0, 0).real() == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(phi(4, 0).real() == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(phi(1, 0) == Complex(0.0));
}

TEST_CASE("dynamical matrix of closed-form channels") {
    SUBCASE("identity channel, d = 2: rank one with eigenvalue 2") {
        const auto dm = dynamical_from_kraus(KrausChannel({ComplexMatrix::Identity(2, 2)}));
        const auto ev = hermitian_eigenvalues(dm.matrix);
        CHECK(ev.values[0] == doctest::Approx(2.0));
        for (std::size_t j = 1; j < 4; ++j) CHECK(std::abs(ev.values[j]) <= 1e-12);
        for (int mu = 0; mu < 2; ++mu)
            for (int nu = 0; nu < 2; ++nu) CHECK(dm.matrix(mu * 2 + mu, nu * 2 + nu) == Complex(1.0));
    }
    SUBCASE("completely depolarizing, d = 2: D = I/2") {
        const auto dm = dynamical_from_kraus(depolarizing(2));
        CHECK(max_abs_diff(dm.matrix, 0.5 * ComplexMatrix::Identity(4, 4)) <= 1e-15);
    }
    SUBCASE("unitary channel: spectrum {d, 0, ...}") {
        Rng rng(9);
        const KrausChannel u({haar_unitary(3, rng)});
        const auto ev = hermitian_eigenvalues(dynamical_from_kraus(u).matrix);
        CHECK(ev.values[0] == doctest::Approx(3.0).epsilon(1e-12));
        for (std::size_t j = 1; j < ev.size(); ++j) CHECK(std::abs(ev.values[j]) <= 1e-12);
    }
}

TEST_CASE("superoperator matrix of closed-form channels") {
    CHECK(max_abs_diff(superoperator_from_kraus(KrausChannel({ComplexMatrix::Identity(2, 2)})).matrix,
                       ComplexMatrix::Identity(4, 4)) == 0.0);

    const ComplexMatrix vi = vec(ComplexMatrix::Identity(2, 2));
    const auto dep = superoperator_from_kraus(depolarizing(2));
    CHECK(max_abs_diff(dep.matrix, 0.5 * vi * vi.adjoint()) <= 1e-15);
    const auto sv = singular_values(dep.matrix);
    CHECK(sv.values[0] == doctest::Approx(1.0));
    for (std::size_t j = 1; j < sv.size(); ++j) CHECK(sv.values[j] <= 1e-15);

    Rng rng(19);
    const ComplexMatrix u = haar_unitary(3, rng);
    const auto km = superoperator_from_kraus(KrausChannel({u}));
    CHECK(max_abs_diff(km.matrix, kron(u, u.conjugate())) == 0.0);
    for (double s : singular_values(km.matrix).values) CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("superoperator acts on vec(X)") {
    Rng rng(23);
    for (const auto& ch : mixed_population()) {
        const auto km = superoperator_from_kraus(ch);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const ComplexMatrix x = random_matrix(ch.dim(), ch.dim(), rng);
            worst = std::max(worst, (vec(apply_channel(ch, x)) - km.matrix * vec(x)).norm());
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("reshuffle") {
    const auto id_choi = dynamical_from_kraus(KrausChannel({ComplexMatrix::Identity(2, 2)}));
    CHECK(max_abs_diff(reshuffle(id_choi.matrix, 2), ComplexMatrix::Identity(4, 4)) == 0.0);

    Rng rng(29);
    for (std::ptrdiff_t d : {2, 3, 5}) {
        const ComplexMatrix m = random_matrix(d * d, d * d, rng);
        const ComplexMatrix r = reshuffle(m, d);
        CHECK(max_abs_diff(reshuffle(r, d), m) == 0.0);
        CHECK(std::abs(r.norm() - m.norm()) <= 1e-12 * m.norm());
        // Spot-check the index map.
        CHECK(r(0 * d + 1, 1 * d + 0) == m(0 * d + 1, 1 * d + 0));
        CHECK(r(1 * d + 0, 0 * d + 1) == m(1 * d + 0, 0 * d + 1));
        CHECK(r(0 * d + 0, 1 * d + 1) == m(0 * d + 1, 0 * d + 1));
    }

    try {
        reshuffle(ComplexMatrix::Identity(5, 5), 2);
        FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
}

TEST_CASE("property: K = reshuffle(D) and both match their literal constructions") {
    for (const auto& ch : mixed_population()) {
        const auto dm = dynamical_from_kraus(ch);
        const auto km = superoperator_from_kraus(ch);
        CHECK(max_abs_diff(reshuffle(dm.matrix, ch.dim()), km.matrix) <= 1e-12);
        CHECK(max_abs_diff(oracle::choi_via_entangled_state(ch), dm.matrix) <= 1e-12);
        CHECK(max_abs_diff(oracle::superoperator_via_basis(ch), km.matrix) <= 1e-12);
        CHECK(std::abs(dm.matrix.norm() - km.matrix.norm()) <= 1e-12);
    }
}

TEST_CASE("property: dynamical matrices satisfy their invariants") {
    for (const auto& ch : mixed_population()) {
        const auto diag = diagnose(dynamical_from_kraus(ch));
        CHECK(diag.valid());
        CHECK(diag.hermiticity <= herm_tol);
        CHECK(diag.trace_defect <= eig_tol(ch.dim() * ch.dim()));
        CHECK(diag.partial_trace_defect <= tp_tol);
    }
}

TEST_CASE("property: Choi spectrum equals the Kraus Gram spectrum") {
    for (const auto& ch : mixed_population()) {
        const auto tol = eig_tol(ch.dim() * ch.dim());
        const auto choi = oracle::nonzero(hermitian_eigenvalues(dynamical_from_kraus(ch).matrix).values, tol);
        const auto gram = oracle::nonzero(oracle::general_eigenvalues(oracle::kraus_gram(ch)), tol);
        REQUIRE(choi.size() == gram.size());
        for (std::size_t j = 0; j < choi.size(); ++j) CHECK(std::abs(choi[j] - gram[j]) <= 1e-9);
    }
}

TEST_CASE("apply_channel") {
    Rng rng(31);
    const ComplexMatrix x = random_matrix(3, 3, rng);
    CHECK(max_abs_diff(apply_channel(KrausChannel({ComplexMatrix::Identity(3, 3)}), x), x) == 0.0);

    const ComplexMatrix rho = random_density(3, rng);
    CHECK(max_abs_diff(apply_channel(depolarizing(3), rho), ComplexMatrix::Identity(3, 3) / 3.0) <= 1e-14);

    for (const auto& ch : mixed_population()) {
        const ComplexMatrix rho_star = ComplexMatrix::Identity(ch.dim(), ch.dim()) / static_cast<double>(ch.dim());
        CHECK(std::abs(apply_channel(ch, rho_star).trace() - Complex(1.0)) <= 1e-12);
    }

    CHECK_THROWS_AS(apply_channel(depolarizing(2), ComplexMatrix::Identity(3, 3)), Error);
}

TEST_CASE("property: Kraus action agrees with the Choi-side action") {
    Rng rng(37);
    for (const auto& ch : mixed_population()) {
        const auto dm = dynamical_from_kraus(ch);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const ComplexMatrix rho = random_density(ch.dim(), rng);
            worst = std::max(worst, max_abs_diff(apply_channel(ch, rho), apply_via_dynamical(dm, rho)));
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("is_unital") {
    Rng rng(41);
    CHECK(is_unital(KrausChannel({haar_unitary(3, rng)}), 1e-10));
    CHECK(is_unital(depolarizing(3), 1e-10));
    // Σ A A† = diag(1 + γ, 1 − γ)
    const auto damping = named_channel("amplitude-damping", 2, 0.5);
    CHECK_FALSE(is_unital(damping, 1e-10));
    CHECK(damping.unitality_defect() == doctest::Approx(0.5));
}

#include <doctest.h>

#include <cmath>

#include "qsent/error.hpp"
#include "qsent/matcore.hpp"
#include "support/generators.hpp"

using namespace qsent;
using qsent::testing::diag;
using qsent::testing::random_hermitian;
using qsent::testing::random_matrix;

TEST_CASE("hermitian_eigenvalues on closed-form inputs") {
    CHECK(hermitian_eigenvalues(ComplexMatrix::Identity(2, 2)).values == std::vector<double>{1.0, 1.0});

    const auto d = hermitian_eigenvalues(diag({3.0, -1.0}));
    REQUIRE(d.size() == 2);
    CHECK(d.values[0] == doctest::Approx(3.0));
    CHECK(d.values[1] == doctest::Approx(-1.0));

    // λ² − 1 = 0
    const auto x = hermitian_eigenvalues(qsent::testing::pauli_x());
    CHECK(x.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(x.values[1] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(x.kind == SpectrumKind::HermitianEigenvalues);
}

TEST_CASE("hermitian_eigenvalues rejects bad input") {
    CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix::Zero(2, 3)), Error);
    try {
        hermitian_eigenvalues(ComplexMatrix::Zero(2, 3));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonSquare);
    }

    ComplexMatrix skew = ComplexMatrix::Zero(2, 2);
    skew(0, 1) = 1.0;
    try {
        hermitian_eigenvalues(skew);
        FAIL("expected NotHermitian");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotHermitian);
    }

    // Deviations under herm_tol are symmetrized away.
    ComplexMatrix near = ComplexMatrix::Identity(2, 2);
    near(0, 1) = 1e-10;
    CHECK_NOTHROW(hermitian_eigenvalues(near));
}

TEST_CASE("singular_values on closed-form inputs") {
    CHECK(singular_values(ComplexMatrix::Identity(4, 4)).values == std::vector<double>{1.0, 1.0, 1.0, 1.0});

    const auto d = singular_values(diag({3.0, -4.0}));
    CHECK(d.values[0] == doctest::Approx(4.0));
    CHECK(d.values[1] == doctest::Approx(3.0));

    ComplexMatrix nil = ComplexMatrix::Zero(2, 2);
    nil(0, 1) = 2.0; // X†X = diag(0, 4)
    const auto n = singular_values(nil);
    CHECK(n.values[0] == doctest::Approx(2.0));
    CHECK(n.values[1] == doctest::Approx(0.0));
    CHECK(n.kind == SpectrumKind::SingularValues);
}

TEST_CASE("kron matches the index formula") {
    CHECK(max_abs_diff(kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)),
                       ComplexMatrix::Identity(4, 4)) == 0.0);
    CHECK(max_abs_diff(kron(diag({1, 2}), diag({3, 4})), diag({3, 4, 6, 8})) == 0.0);

    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected.block(0, 2, 2, 2) = ComplexMatrix::Identity(2, 2);
    expected.block(2, 0, 2, 2) = ComplexMatrix::Identity(2, 2);
    CHECK(max_abs_diff(kron(qsent::testing::pauli_x(), ComplexMatrix::Identity(2, 2)), expected) == 0.0);

    Rng rng(7);
    const ComplexMatrix a = random_matrix(2, 3, rng);
    const ComplexMatrix b = random_matrix(3, 2, rng);
    const ComplexMatrix k = kron(a, b);
    REQUIRE(k.rows() == 6);
    REQUIRE(k.cols() == 6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int r = 0; r < 3; ++r)
                for (int l = 0; l < 2; ++l) CHECK(k(i * 3 + r, j * 2 + l) == a(i, j) * b(r, l));
}

TEST_CASE("partial_trace") {
    CHECK(max_abs_diff(partial_trace(ComplexMatrix::Identity(4, 4), 2, Subsystem::Second),
                       2.0 * ComplexMatrix::Identity(2, 2)) == 0.0);

    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = random_matrix(3, 3, rng);
        const ComplexMatrix b = random_matrix(3, 3, rng);
        const ComplexMatrix ab = kron(a, b);
        CHECK(max_abs_diff(partial_trace(ab, 3, Subsystem::Second), a * b.trace()) <= 1e-12);
        CHECK(max_abs_diff(partial_trace(ab, 3, Subsystem::First), a.trace() * b) <= 1e-12);
        CHECK(std::abs(partial_trace(ab, 3, Subsystem::First).trace() - ab.trace()) <= eig_tol(9));
    }

    // Choi matrix of the d = 2 identity channel: Σ |μμ⟩⟨νν|.
    ComplexMatrix choi = ComplexMatrix::Zero(4, 4);
    for (int mu = 0; mu < 2; ++mu)
        for (int nu = 0; nu < 2; ++nu) choi(mu * 2 + mu, nu * 2 + nu) = 1.0;
    CHECK(max_abs_diff(partial_trace(choi, 2, Subsystem::First), ComplexMatrix::Identity(2, 2)) == 0.0);

    try {
        partial_trace(ComplexMatrix::Identity(5, 5), 2, Subsystem::First);
        FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
}

TEST_CASE("vec is the row-major flattening") {
    const ComplexMatrix v = vec(ComplexMatrix::Identity(2, 2));
    CHECK(v(0, 0) == Complex(1.0));
    CHECK(v(1, 0) == Complex(0.0));
    CHECK(v(2, 0) == Complex(0.0));
    CHECK(v(3, 0) == Complex(1.0));

    // vec(|0⟩⟨1|) = |0⟩ ⊗ |1⟩
    ComplexMatrix e01 = ComplexMatrix::Zero(2, 2);
    e01(0, 1) = 1.0;
    ComplexMatrix ket01 = ComplexMatrix::Zero(4, 1);
    ket01(1, 0) = 1.0;
    CHECK(max_abs_diff(vec(e01), ket01) == 0.0);

    CHECK((vec(ComplexMatrix::Identity(2, 2)).adjoint() * vec(ComplexMatrix::Identity(2, 2)))(0, 0) ==
          Complex(2.0));

    try {
        vec(ComplexMatrix::Zero(2, 3));
        FAIL("expected NonSquare");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonSquare);
    }

    Rng rng(3);
    const ComplexMatrix x = random_matrix(4, 4, rng);
    CHECK(max_abs_diff(unvec(vec(x), 4), x) == 0.0);
}

TEST_CASE("property: eigenvalue sum equals the trace") {
    Rng rng(101);
    for (std::ptrdiff_t n : {2, 5, 9, 16, 32, 64}) {
        for (int trial = 0; trial < 5; ++trial) {
            const ComplexMatrix h = random_hermitian(n, rng);
            const auto spec = hermitian_eigenvalues(h);
            CHECK(spec.size() == static_cast<std::size_t>(n));
            CHECK(std::is_sorted(spec.values.rbegin(), spec.values.rend()));
            CHECK(std::abs(spec.sum() - h.trace().real()) <= 1e-10);
        }
    }
}

TEST_CASE("property: singular values are the eigenvalues of sqrt(X†X)") {
    Rng rng(202);
    for (std::ptrdiff_t n : {2, 4, 9, 16}) {
        for (int trial = 0; trial < 5; ++trial) {
            const ComplexMatrix x = random_matrix(n, n, rng);
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(x.adjoint() * x);
            const ComplexMatrix abs_x = es.operatorSqrt();
            const auto sv = singular_values(x);
            const auto ev = hermitian_eigenvalues((abs_x + abs_x.adjoint()) * 0.5);
            for (std::size_t j = 0; j < sv.size(); ++j) CHECK(std::abs(sv.values[j] - ev.values[j]) <= 1e-9);
            for (double s : sv.values) CHECK(s >= 0.0);
        }
    }
}

TEST_CASE("property: vec is an isometry for the Hilbert-Schmidt product") {
    Rng rng(303);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix x = random_matrix(8, 8, rng);
        const ComplexMatrix y = random_matrix(8, 8, rng);
        const Complex lhs = (vec(x).adjoint() * vec(y))(0, 0);
        const Complex rhs = (x.adjoint() * y).trace();
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("clamp_psd zeroes round-off and rejects real negatives") {
    Spectrum s{{2.0, 1e-12, -1e-12, 0.0}, SpectrumKind::HermitianEigenvalues};
    const auto c = clamp_psd(s, 1e-9);
    CHECK(c.values == std::vector<double>{2.0, 0.0, 0.0, 0.0});
    CHECK(numeric_rank(c, 1e-9) == 1);

    try {
        clamp_psd(Spectrum{{1.0, -1e-3}, SpectrumKind::HermitianEigenvalues}, 1e-9);
        FAIL("expected NotPositive");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPositive);
    }
}

TEST_CASE("inverse_sqrt_psd") {
    Rng rng(5);
    const ComplexMatrix s = qsent::testing::random_psd(4, rng);
    const auto root = inverse_sqrt_psd(s);
    CHECK(max_abs_diff(root.matrix * s * root.matrix, ComplexMatrix::Identity(4, 4)) <= 1e-10);
    CHECK(root.condition >= 1.0);

    try {
        inverse_sqrt_psd(diag({1.0, 0.0}));
        FAIL("expected SingularNormalizer");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularNormalizer);
    }
}

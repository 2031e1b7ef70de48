#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fuzzylab/circle_model.hpp"
#include "fuzzylab/operator_matrix.hpp"
#include "test_support.hpp"

using namespace fuzzylab;
using fuzzylab::testing::Rng;

TEST_CASE("matmul basics") {
    Rng rng;
    OperatorMatrix a = testing::random_matrix(rng, 4);
    CHECK((matmul(OperatorMatrix::identity(4), a) - a).max_abs() == 0.0);

    OperatorMatrix u(2), l(2);
    u(0, 1) = 1.0;
    l(1, 0) = 1.0;
    OperatorMatrix p = matmul(u, l);
    CHECK(p(0, 0) == Complex(1.0, 0.0));
    CHECK(p(0, 1) == Complex(0.0, 0.0));
    CHECK(p(1, 0) == Complex(0.0, 0.0));
    CHECK(p(1, 1) == Complex(0.0, 0.0));

    CHECK_THROWS_AS(matmul(OperatorMatrix(2), OperatorMatrix(3)), std::invalid_argument);
}

TEST_CASE("unitary from the eigendecomposition oracle") {
    Rng rng;
    for (int n : {3, 6, 9}) {
        OperatorMatrix h = testing::random_hermitian(rng, n);
        OperatorMatrix u = hermitian_eig(h).eigenvectors;
        OperatorMatrix gram = matmul(u.adjoint(), u);
        CHECK((gram - OperatorMatrix::identity(n)).max_abs() <= 1e-12);
    }
}

TEST_CASE("commutator") {
    Rng rng;
    OperatorMatrix a = testing::random_matrix(rng, 5);
    CHECK(commutator(a, a).max_abs() <= 1e-15);
    CHECK(commutator(OperatorMatrix::identity(5), a).max_abs() <= 1e-15);

    OperatorMatrix sx(2), sy(2);
    sx(0, 1) = sx(1, 0) = 1.0;
    sy(0, 1) = Complex(0.0, -1.0);
    sy(1, 0) = Complex(0.0, 1.0);
    // direct multiplication oracle
    OperatorMatrix expect(2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            Complex s = 0.0;
            for (int k = 0; k < 2; ++k) s += sx(r, k) * sy(k, c) - sy(r, k) * sx(k, c);
            expect(r, c) = s;
        }
    CHECK((commutator(sx, sy) - expect).max_abs() == 0.0);
    CHECK(expect(0, 0) == Complex(0.0, 2.0));
    CHECK(expect(1, 1) == Complex(0.0, -2.0));
}

TEST_CASE("hermitian_eig values and contract") {
    {
        OperatorMatrix d = OperatorMatrix::diagonal(std::vector<double>{3.0, 1.0, 2.0});
        auto dec = hermitian_eig(d);
        CHECK(dec.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(dec.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(dec.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-14));
    }
    {
        OperatorMatrix s(2);
        s(0, 1) = s(1, 0) = 1.0;
        auto dec = hermitian_eig(s);
        CHECK(dec.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(dec.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
    }
    {
        // R^2 of the smallest circle model against the closed-form spectrum
        // evaluated independently: 1 + m^2/k in the bulk, (1 + L(L-1)/k)/2 at
        // the edges.
        const int lambda = 1;
        const double k = 4.0;
        CircleModel m = build_circle(lambda, k);
        auto dec = hermitian_eig(m.R2);
        const double edge = 0.5 * (1.0 + lambda * (lambda - 1.0) / k);
        const double bulk = 1.0;
        CHECK(dec.eigenvalues[0] == doctest::Approx(edge).epsilon(1e-14));
        CHECK(dec.eigenvalues[1] == doctest::Approx(edge).epsilon(1e-14));
        CHECK(dec.eigenvalues[2] == doctest::Approx(bulk).epsilon(1e-14));
    }

    OperatorMatrix bad(2);
    bad(0, 1) = 1.0;  // strictly upper, not Hermitian
    CHECK_THROWS_WITH_AS(hermitian_eig(bad), doctest::Contains("asymmetry"), std::invalid_argument);
}

TEST_CASE("hermitian_eig reconstruction and phase determinism") {
    Rng rng;
    for (int n : {2, 3, 5, 8}) {
        OperatorMatrix a = testing::random_hermitian(rng, n);
        auto dec = hermitian_eig(a);
        OperatorMatrix rebuilt(n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                Complex s = 0.0;
                for (int j = 0; j < n; ++j)
                    s += dec.eigenvectors(r, j) * dec.eigenvalues[j] *
                         std::conj(dec.eigenvectors(c, j));
                rebuilt(r, c) = s;
            }
        CHECK((rebuilt - a).max_abs() <= 1e-10 * n * std::max(1.0, a.max_abs()));
        CHECK((matmul(dec.eigenvectors.adjoint(), dec.eigenvectors) - OperatorMatrix::identity(n))
                  .max_abs() <= 1e-12 * n);
        for (int j = 1; j < n; ++j) CHECK(dec.eigenvalues[j] >= dec.eigenvalues[j - 1]);
        for (int j = 0; j < n; ++j) {
            // first nonzero component real positive
            for (int i = 0; i < n; ++i) {
                const Complex z = dec.eigenvectors(i, j);
                if (std::abs(z) > 1e-9) {
                    CHECK(z.real() > 0.0);
                    CHECK(std::abs(z.imag()) <= 1e-9 * std::abs(z.real()) + 1e-12);
                    break;
                }
            }
        }
    }
}

TEST_CASE("operator_norm") {
    CHECK(operator_norm(OperatorMatrix::identity(7)) == doctest::Approx(1.0).epsilon(1e-12));
    {
        // Jordan block: A^H A = diag(0, 1), so the top singular value is 1
        OperatorMatrix a(2);
        a(0, 1) = 1.0;
        CHECK(operator_norm(a) == doctest::Approx(1.0).epsilon(1e-10));
    }
    CHECK(operator_norm(OperatorMatrix::diagonal(std::vector<double>{0.3, -2.0})) ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(operator_norm(OperatorMatrix(4)) == 0.0);
}

TEST_CASE("operator_norm submultiplicative on random matrices") {
    Rng rng;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform() * 6);
        OperatorMatrix a = testing::random_matrix(rng, n);
        OperatorMatrix b = testing::random_matrix(rng, n);
        CHECK(operator_norm(matmul(a, b)) <= operator_norm(a) * operator_norm(b) + 1e-9);
    }
}

TEST_CASE("adjoint is an antihomomorphism") {
    Rng rng;
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform() * 6);
        OperatorMatrix a = testing::random_matrix(rng, n);
        OperatorMatrix b = testing::random_matrix(rng, n);
        CHECK((a.adjoint().adjoint() - a).max_abs() == 0.0);
        const double scale = operator_norm(a) * operator_norm(b);
        CHECK((matmul(a, b).adjoint() - matmul(b.adjoint(), a.adjoint())).max_abs() <=
              1e-12 * n * std::max(1.0, scale));
    }
}

TEST_CASE("matrix_polynomial") {
    Rng rng;
    OperatorMatrix a = testing::random_matrix(rng, 4);
    CHECK((matrix_polynomial(a, std::vector<double>{1.0}) - OperatorMatrix::identity(4)).max_abs() ==
          0.0);
    CHECK((matrix_polynomial(a, std::vector<double>{0.0, 1.0}) - a).max_abs() == 0.0);

    OperatorMatrix d = OperatorMatrix::diagonal(std::vector<double>{-1.0, 0.0, 1.0});
    auto coeffs = lagrange_projector_coeffs({-1.0, 0.0, 1.0}, 2);
    OperatorMatrix p = matrix_polynomial(d, coeffs);
    OperatorMatrix expect(3);
    expect(2, 2) = 1.0;
    CHECK((p - expect).max_abs() <= 1e-14);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fuzzylab/circle_model.hpp"
#include "test_support.hpp"

using namespace fuzzylab;
using fuzzylab::testing::Rng;

TEST_CASE("default k schedule") {
    CHECK(default_k_schedule(1) == 4.0);
    CHECK(default_k_schedule(2) == 36.0);
    CHECK(default_k_schedule(3) == 144.0);
}

TEST_CASE("ladder entries of the smallest model") {
    CircleModel m = build_circle(1, 4.0);
    // xi+ psi_0 = (1/sqrt2) psi_1, xi+ psi_1 = 0
    CHECK(m.xi_plus(2, 1).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    for (int r = 0; r < 3; ++r) CHECK(m.xi_plus(r, 2) == Complex(0.0, 0.0));
    CHECK((m.xi_minus - m.xi_plus.adjoint()).max_abs() == 0.0);

    // [xi+, xi-] psi_1 = psi_1 / 2 by explicit 3x3 multiplication
    Complex acc = 0.0;
    for (int k = 0; k < 3; ++k)
        acc += m.xi_plus(2, k) * m.xi_minus(k, 2) - m.xi_minus(2, k) * m.xi_plus(k, 2);
    CHECK(acc.real() == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS(build_circle(0, 4.0), std::invalid_argument);
    CHECK_THROWS_AS(build_circle(1, 0.0), std::invalid_argument);
}

TEST_CASE("consistency flag") {
    CHECK(build_circle(1, 4.0).consistency_ok);
    // lambda^2 = 25 vs 2 sqrt(20) - 2 ~ 6.9: flagged but constructed
    CircleModel flagged = build_circle(5, 10.0);
    CHECK_FALSE(flagged.consistency_ok);
    CHECK(flagged.dim == 11);
}

TEST_CASE("prop 2.1 at the smallest model") {
    CircleModel m = build_circle(1, 4.0);
    CheckReport rep = verify_circle_identities(m);
    CHECK(rep.all_pass());
    for (const auto& c : rep.checks) {
        INFO(c.name);
        CHECK(c.residual <= 1e-14);
    }
    // R^2 eigenvalues per the closed form: psi_0 -> 1, psi_{±1} -> 1/2
    CHECK(m.R2(1, 1).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(m.R2(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(m.R2(2, 2).real() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("exactness across the cutoff sweep") {
    for (int lambda = 1; lambda <= 20; ++lambda) {
        CircleModel m = build_circle(lambda, default_k_schedule(lambda));
        CHECK(m.consistency_ok);
        CheckReport rep = verify_circle_identities(m);
        for (const auto& c : rep.checks) {
            INFO("lambda " << lambda << " " << c.name);
            if (c.name == "projector-polynomial") {
                // interpolation through 2*lambda+1 integer nodes is too
                // ill-conditioned beyond lambda = 10 even in extended precision
                if (lambda <= 10) CHECK(c.residual <= 1e-12 * m.dim);
            } else {
                CHECK(c.residual <= 1e-13 * m.dim);
            }
        }
        // spectrum of Hbar is exactly {m^2}
        for (int mm = -lambda; mm <= lambda; ++mm)
            CHECK(m.Hbar(mm + lambda, mm + lambda).real() == static_cast<double>(mm) * mm);
    }
}

TEST_CASE("so3 realization") {
    for (int lambda : {1, 3, 10}) {
        CircleModel m = build_circle(lambda, default_k_schedule(lambda));
        So3Realization r = build_so3_realization(m);
        for (const auto& c : r.report.checks) {
            INFO("lambda " << lambda << " " << c.name);
            CHECK(c.pass);
        }
        CHECK(r.report.at("casimirsu2").residual <= 1e-12 * m.dim);
        CHECK(r.report.at("transfD2").residual <= 1e-15);  // reconstruction to rounding
    }
    // f_+ value at the smallest model; the sqrt(2) belongs to E^+
    CircleModel m = build_circle(1, 4.0);
    So3Realization r = build_so3_realization(m);
    CHECK(r.f_plus(1.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r.f_plus(1.0) * r.E_plus(2, 1).real() ==
          doctest::Approx(m.xi_plus(2, 1).real()).epsilon(1e-15));
    // reflection symmetry of the spectral functions: f_±(-s) = f_∓(s)
    for (double s : {-0.75, 0.0, 0.3}) {
        CHECK(r.f_plus(-s) == doctest::Approx(r.f_minus(s)).epsilon(1e-13));
        CHECK(r.f_plus(1.0 + s) == doctest::Approx(r.f_minus(s)).epsilon(1e-13));
    }
}

TEST_CASE("O(2) action") {
    Rng rng;
    CircleModel m = build_circle(3, default_k_schedule(3));

    const double theta = 0.25 + rng.uniform();
    CircleOperators rot = o2_transform(m, O2Kind::rotation, theta);
    CHECK((rot.xi_plus - m.xi_plus * std::polar(1.0, theta)).max_abs() <= 1e-12);
    CHECK((rot.Lbar - m.Lbar).max_abs() <= 1e-12);

    CircleOperators refl = o2_transform(m, O2Kind::reflection);
    CHECK((refl.Lbar + m.Lbar).max_abs() <= 1e-11);
    CHECK((refl.xi_plus - m.xi_minus).max_abs() <= 1e-11);

    CircleOperators ident = o2_transform(m, O2Kind::rotation, 0.0);
    CHECK((ident.xi_plus - m.xi_plus).max_abs() == 0.0);

    // conjugation preserves every commutation-relation residual
    for (const auto& ops : {rot, refl}) {
        CheckReport rep = verify_circle_relations(ops);
        for (const auto& c : rep.checks) {
            INFO(c.name);
            CHECK(c.residual <= 1e-12 * m.dim);
        }
    }
}

TEST_CASE("projected derivatives") {
    const int lambda = 3;
    {
        // k -> infinity limit of the band coefficients
        CircleModel m = build_circle(lambda, 1e12);
        ProjectedDerivatives d = projected_derivatives(m);
        const int mm = -lambda + 1;
        CHECK(d.d_plus(mm - 1 + lambda, mm + lambda).real() ==
              doctest::Approx((mm - 0.5) / std::sqrt(2.0)).epsilon(1e-5));
        for (int r = 0; r < m.dim; ++r) CHECK(d.d_plus(r, 0) == Complex(0.0, 0.0));
        // d+ lowers m by one: only the first subdiagonal is populated
        for (int r = 0; r < m.dim; ++r)
            for (int c = 0; c < m.dim; ++c)
                if (r != c - 1) CHECK(d.d_plus(r, c) == Complex(0.0, 0.0));
    }
    {
        const double k = 1e6;
        CircleModel m = build_circle(lambda, k);
        ProjectedDerivatives d = projected_derivatives(m);
        // [d+, d-] and {d+, d-} are diagonal, boundary terms confined to m = ±lambda
        for (int r = 0; r < m.dim; ++r)
            for (int c = 0; c < m.dim; ++c)
                if (r != c) {
                    CHECK(std::abs(d.commutator_pm(r, c)) == 0.0);
                    CHECK(std::abs(d.anticommutator_pm(r, c)) == 0.0);
                }
        // bulk diagonal against the leading closed form; the matrices are
        // built from the truncated series so the match is O(k^{-3/2})
        const double sq2k = std::sqrt(2.0 * k);
        for (int mm = -lambda + 1; mm <= lambda - 1; ++mm) {
            const double leading =
                mm - 3.0 * mm / (2.0 * sq2k) - (4.0 * mm * mm * mm + 31.0 / 8.0 * mm) / (2.0 * k);
            CHECK(std::abs(d.commutator_pm(mm + lambda, mm + lambda).real() - leading) <=
                  50.0 * std::pow(lambda + 1.0, 3) * std::pow(k, -1.5));
        }
    }
}

TEST_CASE("the pair generates the full matrix algebra") {
    for (int lambda = 1; lambda <= 4; ++lambda) {
        CircleModel m = build_circle(lambda, default_k_schedule(lambda));
        CHECK(circle_generated_dimension(m) == m.dim * m.dim);
    }
}

TEST_CASE("verification report json schema") {
    CheckReport rep = verify_circle_identities(build_circle(1, 4.0));
    const std::string j = rep.to_json();
    CHECK(j.find("\"check_name\":\"comrelD=2\"") != std::string::npos);
    CHECK(j.find("\"residual\":") != std::string::npos);
    CHECK(j.find("\"tolerance\":") != std::string::npos);
    CHECK(j.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("operator csv") {
    CircleModel m = build_circle(1, 4.0);
    const std::string csv = operator_to_csv(m.Lbar);
    CHECK(csv.rfind("row,col,re,im\n", 0) == 0);
    size_t lines = 0;
    for (char ch : csv)
        if (ch == '\n') ++lines;
    CHECK(lines == 1 + 9);
}

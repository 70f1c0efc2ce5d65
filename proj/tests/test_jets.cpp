#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jsk/errors.hpp"
#include "jsk/jets.hpp"
#include "jsk/rng.hpp"

using namespace jsk;

namespace {

Polynomial X(int n, const std::string& s) {
    return Polynomial::parse(VarFamily::Position, n, s);
}

Section section(int n, const std::vector<std::string>& comps) {
    Section s(n, static_cast<int>(comps.size()));
    for (size_t i = 0; i < comps.size(); ++i) s.comps[i] = X(n, comps[i]);
    return s;
}

}  // namespace

TEST_CASE("jet dimensions") {
    CHECK(jet_dim(1, 1, 2) == 3);
    CHECK(jet_dim(2, 2, 2) == 12);
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 3; ++m) CHECK(jet_dim(n, m, 0) == m);
    CHECK(strict_jet_dim(2, 2, 3) == 8);
    CHECK(strict_jet_dim(4, 4, 3) == 80);
    CHECK_THROWS_AS(jet_dim(0, 1, 1), Error);
    CHECK_THROWS_AS(jet_dim(1, 1, -1), Error);
}

TEST_CASE("prolongation lists true derivatives") {
    JetSection j = prolong(section(1, {"x1^3"}), 2);
    CHECK(j.at(0, MultiIndex{0}) == X(1, "x1^3"));
    CHECK(j.at(0, MultiIndex{1}) == X(1, "3*x1^2"));
    CHECK(j.at(0, MultiIndex{2}) == X(1, "6*x1"));

    JetSection c = prolong(section(2, {"5"}), 2);
    for (const auto& [key, p] : c.entries)
        if (key.mu.degree() > 0) CHECK(p.is_zero());

    // First-order polynomial: second jet entry is zero.
    JetSection a = prolong(section(1, {"3*x1 + 7"}), 2);
    CHECK(a.at(0, MultiIndex{1}) == X(1, "3"));
    CHECK(a.at(0, MultiIndex{2}).is_zero());
}

TEST_CASE("spencer operator annihilates exactly the prolongations") {
    Rng rng(301);
    for (int t = 0; t < 100; ++t) {
        int n = rng.uniform(1, 3);
        int m = rng.uniform(1, 2);
        int q = rng.uniform(0, 2);
        Section f = rng.section(n, m, 4, 3);
        JetSection jet = prolong(f, q + 1);
        CHECK(spencer(jet).is_zero());

        // Perturb one entry of positive order: now it cannot be a
        // prolongation, and the Spencer image must see that.
        JetSection bad = jet;
        MultiIndex target(n);
        target[rng.uniform(0, n - 1)] = 1;
        bad.at(rng.uniform(0, m - 1), target) += X(n, "1");
        CHECK_FALSE(spencer(bad).is_zero());
    }
}

TEST_CASE("vanishing spencer image means the jet is a prolongation") {
    Rng rng(307);
    for (int t = 0; t < 100; ++t) {
        int n = rng.uniform(1, 3);
        int m = rng.uniform(1, 2);
        int q = rng.uniform(0, 2);
        Section f = rng.section(n, m, 3, 3);
        JetSection jet = prolong(f, q + 1);
        if (rng.uniform(0, 1) == 1) {
            MultiIndex target(n);
            target[rng.uniform(0, n - 1)] = 1;
            jet.at(rng.uniform(0, m - 1), target) += X(n, "x1");
        }
        // Either way: zero image iff equal to the prolongation of the
        // order-0 part.
        bool flat = spencer(jet).is_zero();
        CHECK(flat == (jet == prolong(jet.order0(), jet.q)));
    }
}

TEST_CASE("spencer oracle values in one variable") {
    // f2 = (x^3, 3x^2, 0): top entry is wrong by 6x.
    JetSection f(1, 1, 2);
    f.at(0, MultiIndex{0}) = X(1, "x1^3");
    f.at(0, MultiIndex{1}) = X(1, "3*x1^2");
    SpencerImage im = spencer(f);
    CHECK(im.at(0, 0, MultiIndex{0}).is_zero());
    CHECK(im.at(0, 0, MultiIndex{1}) == X(1, "6*x1"));

    JetSection g(1, 1, 2);
    g.at(0, MultiIndex{0}) = X(1, "x1^2");
    SpencerImage gi = spencer(g);
    CHECK(gi.at(0, 0, MultiIndex{0}) == X(1, "2*x1"));
    CHECK(gi.at(0, 0, MultiIndex{1}).is_zero());
}

TEST_CASE("restricted spencer reproduces the 1D second-order system") {
    // xi2 = (xi, xix) with the order-2 slot constrained to zero.
    JetSection f(1, 1, 1);
    f.at(0, MultiIndex{0}) = X(1, "x1^3");
    f.at(0, MultiIndex{1}) = X(1, "x1");
    SpencerImage im = restricted_spencer(f);
    CHECK(im.at(0, 0, MultiIndex{0}) == X(1, "3*x1^2 - x1"));  // dx xi - xix
    CHECK(im.at(0, 0, MultiIndex{1}) == X(1, "1"));            // dx xix

    // Jets of actual group elements c2 + c1 x are killed.
    JetSection g(1, 1, 1);
    g.at(0, MultiIndex{0}) = X(1, "2*x1 + 5");
    g.at(0, MultiIndex{1}) = X(1, "2");
    CHECK(restricted_spencer(g).is_zero());
}

TEST_CASE("restricted spencer on plane isometry jet coordinates") {
    // Jet coordinates (xi1, xi2, rho) with xi1_1 = xi2_2 = 0, xi1_2 = rho,
    // xi2_1 = -rho: six independent image components.
    Polynomial xi1 = X(2, "x1*x2");
    Polynomial xi2 = X(2, "x2^2");
    Polynomial rho = X(2, "x1 + x2");
    JetSection f(2, 2, 1);
    MultiIndex e1{1, 0}, e2{0, 1}, zero{0, 0};
    f.at(0, zero) = xi1;
    f.at(1, zero) = xi2;
    f.at(0, e2) = rho;
    f.at(1, e1) = -rho;

    SpencerImage im = restricted_spencer(f);
    CHECK(im.at(0, 0, zero) == xi1.differentiate(0));          // d1 xi1
    CHECK(im.at(1, 0, zero) == xi1.differentiate(1) - rho);    // d2 xi1 - rho
    CHECK(im.at(0, 1, zero) == xi2.differentiate(0) + rho);    // d1 xi2 + rho
    CHECK(im.at(1, 1, zero) == xi2.differentiate(1));          // d2 xi2
    CHECK(im.at(0, 0, e2) == rho.differentiate(0));            // d1 rho
    CHECK(im.at(1, 0, e2) == rho.differentiate(1));            // d2 rho
    // The remaining first-order entries are forced duplicates.
    CHECK(im.at(0, 1, e1) == -rho.differentiate(0));
    CHECK(im.at(1, 1, e1) == -rho.differentiate(1));
    CHECK(im.at(0, 0, e1).is_zero());
    CHECK(im.at(1, 1, e2).is_zero());
}

TEST_CASE("spencer bundle dimensions match the diagram numbers") {
    SequenceDims d222 = spencer_bundle_dims(2, 2, 2);
    CHECK(d222.dims == std::vector<long>{12, 16, 6});
    CHECK(d222.sourceDim == 2);
    CHECK(d222.euler_sum() == 0);

    SequenceDims d112 = spencer_bundle_dims(1, 1, 2);
    CHECK(d112.dims == std::vector<long>{3, 2});
    CHECK(d112.euler_sum() == 0);

    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 2; ++m) {
            SequenceDims flat = spencer_bundle_dims(n, m, 0);
            for (int r = 0; r <= n; ++r)
                CHECK(flat.dims[static_cast<size_t>(r)] ==
                      m * binomial(n, r).get_si());
            CHECK(flat.euler_sum() == 0);
        }
}

TEST_CASE("spencer bundle rows are resolutions for all small sizes") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 2; ++m)
            for (int q = 0; q <= 3; ++q)
                CHECK(spencer_bundle_dims(n, m, q).euler_sum() == 0);
}

TEST_CASE("polynomial solutions of the 1D second-order operator") {
    LinearDiffOp op = LinearDiffOp::from_strings(1, {{"d1^2"}}, "dxx");
    SolutionBasis sol = polynomial_solutions(op, 3);
    REQUIRE(sol.basis.size() == 2);
    // Span is {1, x}.
    CHECK(section_in_span(sol.basis, section(1, {"1"})));
    CHECK(section_in_span(sol.basis, section(1, {"x1 + 4"})));
    CHECK_FALSE(section_in_span(sol.basis, section(1, {"x1^2"})));
    // Every basis element is killed by the operator.
    for (const Section& s : sol.basis) CHECK(apply(op, s).is_zero());
    // Finite type: the dimension is stationary in the bound.
    for (int bound = 1; bound <= 4; ++bound)
        CHECK(polynomial_solutions(op, bound).basis.size() == 2);
}

TEST_CASE("prolongation rank of the plane strain symbol") {
    LinearDiffOp killing2 = LinearDiffOp::from_strings(
        2, {{"2*d1", "0"}, {"d2", "d1"}, {"0", "2*d2"}}, "killing2");
    ProlongationCount pc = symbol_prolongation_rank(killing2, 1);
    CHECK(pc.sourceJets == 8);
    CHECK(pc.targetJetsRaw == 9);
    CHECK(pc.effectiveTargetComps == 3);
    CHECK(pc.rank == 8);  // rank equals sourceJets: injective prolongation
    CHECK(pc.cc_by_difference() == 1);
}

TEST_CASE("vector bracket oracles and Jacobi identity") {
    // [x dx, dx] = -dx.
    Section a = section(1, {"x1"});
    Section b = section(1, {"1"});
    CHECK(vector_bracket(a, b) == section(1, {"-1"}));
    // Antisymmetry forces [xi, xi] = 0.
    Rng rng(311);
    for (int t = 0; t < 30; ++t) {
        int n = rng.uniform(1, 3);
        Section xi = rng.section(n, n, 3, 3);
        CHECK(vector_bracket(xi, xi).is_zero());
        Section eta = rng.section(n, n, 3, 3);
        Section zeta = rng.section(n, n, 3, 3);
        Section jac(n, n);
        Section t1 = vector_bracket(vector_bracket(xi, eta), zeta);
        Section t2 = vector_bracket(vector_bracket(eta, zeta), xi);
        Section t3 = vector_bracket(vector_bracket(zeta, xi), eta);
        for (int k = 0; k < n; ++k)
            jac.comps[static_cast<size_t>(k)] =
                t1.comps[static_cast<size_t>(k)] + t2.comps[static_cast<size_t>(k)] +
                t3.comps[static_cast<size_t>(k)];
        CHECK(jac.is_zero());
    }
}

TEST_CASE("span membership is exact") {
    std::vector<Section> basis = {section(2, {"x1", "0"}), section(2, {"0", "x2"})};
    CHECK(section_in_span(basis, section(2, {"2*x1", "-3*x2"})));
    CHECK_FALSE(section_in_span(basis, section(2, {"x2", "0"})));
    CHECK(section_in_span({}, Section(2, 2)));
}

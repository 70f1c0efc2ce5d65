#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "jsk/diffop.hpp"
#include "jsk/errors.hpp"
#include "jsk/rng.hpp"

using namespace jsk;

namespace {

Section section1(int n, const std::string& text) {
    Section s(n, 1);
    s.comps[0] = Polynomial::parse(VarFamily::Position, n, text);
    return s;
}

}  // namespace

TEST_CASE("applying d/dx1 to x1^3 gives 3*x1^2") {
    LinearDiffOp d = LinearDiffOp::from_strings(1, {{"d1"}}, "d/dx1");
    Section out = apply(d, section1(1, "x1^3"));
    CHECK(out.comps[0] == Polynomial::parse(VarFamily::Position, 1, "3*x1^2"));
}

TEST_CASE("composition multiplies symbols") {
    LinearDiffOp a = LinearDiffOp::from_strings(2, {{"d1 + d2"}});
    LinearDiffOp b = LinearDiffOp::from_strings(2, {{"d1 - d2"}});
    CHECK(compose(a, b) == LinearDiffOp::from_strings(2, {{"d1^2 - d2^2"}}));
}

TEST_CASE("operator order and zero detection") {
    LinearDiffOp op = LinearDiffOp::from_strings(2, {{"d1^2 + d1", "0"}});
    CHECK(op.order() == 2);
    CHECK_FALSE(op.is_zero());
    LinearDiffOp z(2, 2, 1);
    CHECK(z.is_zero());
    CHECK(z.order() == -1);
}

TEST_CASE("adjoint flips derivative signs and transposes") {
    // The adjoint of the gradient is minus the divergence.
    LinearDiffOp grad = LinearDiffOp::from_strings(2, {{"d1"}, {"d2"}}, "grad");
    LinearDiffOp ad = adjoint(grad);
    CHECK(ad == LinearDiffOp::from_strings(2, {{"-d1", "-d2"}}));
    // Even-order terms keep their sign.
    LinearDiffOp lap = LinearDiffOp::from_strings(2, {{"d1^2 + d2^2"}});
    CHECK(adjoint(lap) == lap);
}

TEST_CASE("adjoint is an involution") {
    Rng rng(101);
    for (int t = 0; t < 100; ++t) {
        int n = rng.uniform(1, 3);
        LinearDiffOp op = rng.diffop(n, rng.uniform(1, 3), rng.uniform(1, 3), 3, 3);
        CHECK(adjoint(adjoint(op)) == op);
    }
}

TEST_CASE("adjoint reverses composition") {
    Rng rng(103);
    for (int t = 0; t < 100; ++t) {
        int n = rng.uniform(1, 3);
        int p = rng.uniform(1, 3), q = rng.uniform(1, 3), r = rng.uniform(1, 3);
        LinearDiffOp a = rng.diffop(n, q, r, 2, 2);
        LinearDiffOp b = rng.diffop(n, p, q, 2, 2);
        CHECK(adjoint(compose(a, b)) == compose(adjoint(b), adjoint(a)));
    }
}

TEST_CASE("symbolic composition matches composed action") {
    Rng rng(107);
    for (int t = 0; t < 40; ++t) {
        int n = rng.uniform(1, 3);
        int p = rng.uniform(1, 2), q = rng.uniform(1, 2), r = rng.uniform(1, 2);
        LinearDiffOp a = rng.diffop(n, q, r, 2, 2);
        LinearDiffOp b = rng.diffop(n, p, q, 2, 2);
        Section s = rng.section(n, p, 3, 3);
        CHECK(apply(compose(a, b), s) == apply(a, apply(b, s)));
    }
}

TEST_CASE("application is linear") {
    Rng rng(109);
    for (int t = 0; t < 40; ++t) {
        int n = rng.uniform(1, 3);
        int p = rng.uniform(1, 3), q = rng.uniform(1, 3);
        LinearDiffOp op = rng.diffop(n, p, q, 3, 3);
        Section s = rng.section(n, p, 3, 3);
        Section u = rng.section(n, p, 3, 3);
        Rational alpha = rng.small_rational();
        Section combo(n, p);
        for (int j = 0; j < p; ++j)
            combo.comps[static_cast<size_t>(j)] =
                s.comps[static_cast<size_t>(j)] * alpha + u.comps[static_cast<size_t>(j)];
        Section lhs = apply(op, combo);
        Section a = apply(op, s), b = apply(op, u);
        for (int i = 0; i < q; ++i)
            CHECK(lhs.comps[static_cast<size_t>(i)] ==
                  a.comps[static_cast<size_t>(i)] * alpha + b.comps[static_cast<size_t>(i)]);
    }
}

TEST_CASE("integration by parts certificate has zero residual") {
    Rng rng(113);
    for (int t = 0; t < 100; ++t) {
        int n = rng.uniform(1, 3);
        int p = rng.uniform(1, 2), q = rng.uniform(1, 2);
        LinearDiffOp op = rng.diffop(n, p, q, 3, 2);
        Section lambda = rng.section(n, q, 3, 2);
        Section xi = rng.section(n, p, 3, 2);
        GreensIdentity cert = greens_identity(op, lambda, xi);
        CHECK(cert.holds());
    }
}

TEST_CASE("certificate flux is genuinely used") {
    // For op = d/dx1 with lambda = x1, xi = x1: x1*(x1)' = 1*x1... the two
    // pairings differ and the flux carries the difference.
    LinearDiffOp d = LinearDiffOp::from_strings(1, {{"d1"}});
    GreensIdentity cert = greens_identity(d, section1(1, "x1"), section1(1, "x1"));
    CHECK(cert.pairing_left == Polynomial::parse(VarFamily::Position, 1, "x1"));
    CHECK(cert.pairing_right == Polynomial::parse(VarFamily::Position, 1, "-x1"));
    CHECK(cert.flux[0] == Polynomial::parse(VarFamily::Position, 1, "x1^2"));
    CHECK(cert.holds());
}

TEST_CASE("shape mismatches throw") {
    LinearDiffOp op = LinearDiffOp::from_strings(2, {{"d1", "d2"}});
    Section wrong(2, 1);
    CHECK_THROWS_AS(apply(op, wrong), DimensionMismatch);
    CHECK_THROWS_AS(compose(op, op), DimensionMismatch);
    CHECK_THROWS_AS(LinearDiffOp::from_strings(2, {{"d1", "d2"}, {"d1"}}),
                    DimensionMismatch);
}

TEST_CASE("json round trip preserves the operator") {
    LinearDiffOp op = LinearDiffOp::from_strings(
        2, {{"d1^2 - d2^2", "2*d1*d2"}, {"0", "d2 - 1/3"}}, "sample");
    nlohmann::ordered_json j = diffop_to_json(op);
    CHECK(j["n"] == 2);
    CHECK(j["sourceComps"] == 2);
    CHECK(j["targetComps"] == 2);
    CHECK(j["label"] == "sample");
    CHECK(j["entries"][0][0] == "d1^2 - d2^2");
    LinearDiffOp back = diffop_from_json(j);
    CHECK(back == op);
    CHECK(back.label() == "sample");
}

TEST_CASE("json validation rejects malformed records") {
    nlohmann::json missing = {{"n", 2}, {"sourceComps", 1}, {"targetComps", 1}};
    CHECK_THROWS_AS(diffop_from_json(missing), ParseError);
    nlohmann::json ragged = {{"n", 2},
                             {"sourceComps", 2},
                             {"targetComps", 1},
                             {"entries", {{"d1"}}}};
    CHECK_THROWS_AS(diffop_from_json(ragged), ParseError);
    nlohmann::json badpoly = {{"n", 1},
                              {"sourceComps", 1},
                              {"targetComps", 1},
                              {"entries", {{"d7"}}}};
    CHECK_THROWS_AS(diffop_from_json(badpoly), ParseError);
}

TEST_CASE("file save and load round trip") {
    LinearDiffOp op = LinearDiffOp::from_strings(3, {{"d1", "d2", "d3"}}, "div3");
    const char* path = "diffop_roundtrip_tmp.json";
    save_diffop(op, path);
    LinearDiffOp back = load_diffop(path);
    CHECK(back == op);
    std::remove(path);
    CHECK_THROWS_AS(load_diffop("does_not_exist_477.json"), ParseError);
}

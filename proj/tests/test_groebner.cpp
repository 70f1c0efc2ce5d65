#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "jsk/rng.hpp"
#include "jsk/syzygy.hpp"

using namespace jsk;

namespace {

Polynomial D(int n, const std::string& s) {
    return Polynomial::parse(VarFamily::Derivative, n, s);
}

ModuleElement elem(int n, const std::vector<std::string>& comps) {
    ModuleElement e(n, static_cast<int>(comps.size()));
    for (size_t i = 0; i < comps.size(); ++i) e.comps[i] = D(n, comps[i]);
    return e;
}

}  // namespace

TEST_CASE("leading terms under both orders") {
    ModuleElement e = elem(2, {"d2^3", "d1"});
    auto pot = leading_term(e, OrderKind::PositionOverTerm);
    CHECK(pot->first.pos == 0);  // first component wins regardless of degree
    CHECK(pot->first.mono == MultiIndex{0, 3});
    auto top = leading_term(e, OrderKind::TermOverPosition);
    CHECK(top->first.pos == 0);  // d2^3 has higher degree than d1
    ModuleElement f = elem(2, {"d2", "d1"});
    auto ftop = leading_term(f, OrderKind::TermOverPosition);
    CHECK(ftop->first.pos == 1);  // equal degree, d1 beats d2
}

TEST_CASE("normal form in the ring case") {
    // Against { d1 - d2 }, every d1 collapses to d2.
    std::vector<ModuleElement> basis = {elem(2, {"d1 - d2"})};
    ModuleElement r = normal_form(elem(2, {"d1^2"}), basis, OrderKind::PositionOverTerm);
    CHECK(r == elem(2, {"d2^2"}));
}

TEST_CASE("groebner basis oracle for a small ideal") {
    std::vector<ModuleElement> gens = {elem(2, {"d1^2 - 1"}), elem(2, {"d1*d2 - d2"})};
    std::vector<ModuleElement> gb = module_groebner(gens, OrderKind::PositionOverTerm);
    CHECK(gb.size() == 2);
    // Membership: d2*(d1^2 - 1) is inside, d1 + 1 is not.
    CHECK(module_contains(gb, elem(2, {"d1^2*d2 - d2"}), OrderKind::PositionOverTerm));
    CHECK_FALSE(module_contains(gb, elem(2, {"d1 + 1"}), OrderKind::PositionOverTerm));
}

TEST_CASE("groebner basis is canonical under generator shuffling") {
    Rng rng(211);
    std::vector<ModuleElement> gens = {
        elem(2, {"d1^2", "d2"}),
        elem(2, {"d1*d2", "d1"}),
        elem(2, {"d2^2", "d1 + d2"}),
        elem(2, {"d1^2 + d1*d2", "d1 + d2"}),
    };
    for (OrderKind kind :
         {OrderKind::PositionOverTerm, OrderKind::TermOverPosition}) {
        std::vector<ModuleElement> reference = module_groebner(gens, kind);
        // Idempotent.
        CHECK(module_groebner(reference, kind) == reference);
        for (int t = 0; t < 5; ++t) {
            std::vector<ModuleElement> shuffled = gens;
            for (size_t i = shuffled.size(); i > 1; --i)
                std::swap(shuffled[i - 1],
                          shuffled[static_cast<size_t>(rng.uniform(0, static_cast<int>(i) - 1))]);
            CHECK(module_groebner(shuffled, kind) == reference);
        }
    }
}

TEST_CASE("module equality is generator independent") {
    std::vector<ModuleElement> a = {elem(2, {"d1", "d2"})};
    std::vector<ModuleElement> b = {elem(2, {"2*d1", "2*d2"})};
    std::vector<ModuleElement> c = {elem(2, {"d2", "d1"})};
    CHECK(modules_equal(a, b));
    CHECK_FALSE(modules_equal(a, c));
}

TEST_CASE("bounded degree dimension counts multiples") {
    // Multiples p*d1 with deg <= 3 in two symbols: p ranges over degree <= 2.
    std::vector<ModuleElement> gens = {elem(2, {"d1"})};
    CHECK(bounded_degree_dim(gens, 3) == 6);
    CHECK(bounded_degree_dim(gens, 0) == 0);
}

TEST_CASE("gradient in the plane has the rotation as compatibility condition") {
    LinearDiffOp grad = LinearDiffOp::from_strings(2, {{"d1"}, {"d2"}}, "grad");
    CompatibilityResult cc = compatibility_conditions(grad);
    REQUIRE(cc.generators.size() == 1);
    CHECK(cc.generators[0] == elem(2, {"d2", "-d1"}));
    CHECK(compose(cc.cc, grad).is_zero());
}

TEST_CASE("gradient in space yields curl, then divergence") {
    LinearDiffOp grad = LinearDiffOp::from_strings(3, {{"d1"}, {"d2"}, {"d3"}}, "grad");
    CompatibilityResult curl = compatibility_conditions(grad);
    REQUIRE(curl.generators.size() == 3);
    for (const ModuleElement& g : curl.generators) CHECK(g.max_degree() == 1);

    // Same module as the textbook curl rows.
    LinearDiffOp known = LinearDiffOp::from_strings(
        3, {{"0", "-d3", "d2"}, {"d3", "0", "-d1"}, {"-d2", "d1", "0"}}, "curl");
    CHECK(rows_module_equal(curl.cc, known));
    CHECK(check_parametrization(curl.cc, grad));

    CompatibilityResult div = compatibility_conditions(curl.cc);
    REQUIRE(div.generators.size() == 1);
    CHECK(div.generators[0].max_degree() == 1);
    CHECK(is_complex({grad, curl.cc, div.cc}));
    CHECK(check_exactness_pair(curl.cc, div.cc));
}

TEST_CASE("zero rows produce unit syzygies") {
    LinearDiffOp op = LinearDiffOp::from_strings(2, {{"d1"}, {"0"}});
    CompatibilityResult cc = compatibility_conditions(op);
    REQUIRE(cc.generators.size() == 1);
    CHECK(cc.generators[0] == elem(2, {"0", "1"}));
}

TEST_CASE("independent rows have no compatibility conditions") {
    LinearDiffOp op =
        LinearDiffOp::from_strings(2, {{"d1", "d2"}, {"d2", "d1"}});
    CompatibilityResult cc = compatibility_conditions(op);
    CHECK(cc.generators.empty());
    CHECK(cc.cc.target_comps() == 0);
    CHECK(syzygy_dim_up_to(op, 4) == 0);
    CHECK(syzygy_space_basis(op, 4).empty());
}

TEST_CASE("plane strain relation is recovered verbatim") {
    // Rows: e11 = d1 xi1, e12 = (d2 xi1 + d1 xi2)/2, e22 = d2 xi2.
    LinearDiffOp strain = LinearDiffOp::from_strings(
        2, {{"d1", "0"}, {"1/2*d2", "1/2*d1"}, {"0", "d2"}}, "strain");
    CompatibilityResult cc = compatibility_conditions(strain);
    REQUIRE(cc.generators.size() == 1);
    CHECK(cc.generators[0] == elem(2, {"d2^2", "-2*d1*d2", "d1^2"}));
}

TEST_CASE("koszul relation between d1^2 and d1*d2") {
    LinearDiffOp op = LinearDiffOp::from_strings(2, {{"d1^2"}, {"d1*d2"}});
    CompatibilityResult cc = compatibility_conditions(op);
    REQUIRE(cc.generators.size() == 1);
    CHECK(cc.generators[0] == elem(2, {"d2", "-d1"}));
}

TEST_CASE("generator-driven and brute-force syzygies agree on random operators") {
    Rng rng(223);
    for (int t = 0; t < 12; ++t) {
        int n = rng.uniform(1, 2);
        int source = rng.uniform(1, 2);
        int target = rng.uniform(2, 3);
        LinearDiffOp op = rng.diffop(n, source, target, 2, 2);
        CompatibilityResult cc = compatibility_conditions(op);
        CHECK(compose(cc.cc, op).is_zero());

        std::vector<ModuleElement> bruteForce = syzygy_space_basis(op, 4);
        // Dimensions of the degree-bounded space agree...
        CHECK(syzygy_dim_up_to(op, 4) == static_cast<long>(bruteForce.size()));
        // ...and every brute-force syzygy lies in the generated module.
        if (!cc.generators.empty()) {
            std::vector<ModuleElement> gb =
                module_groebner(cc.generators, OrderKind::PositionOverTerm);
            for (const ModuleElement& e : bruteForce)
                CHECK(module_contains(gb, e, OrderKind::PositionOverTerm));
        } else {
            CHECK(bruteForce.empty());
        }
    }
}

TEST_CASE("parametrization check rejects wrong relation systems") {
    LinearDiffOp grad = LinearDiffOp::from_strings(2, {{"d1"}, {"d2"}});
    LinearDiffOp rot = LinearDiffOp::from_strings(2, {{"d2", "-d1"}});
    CHECK(check_parametrization(rot, grad));
    // Annihilates but does not generate everything: double the relation order.
    LinearDiffOp weak = LinearDiffOp::from_strings(2, {{"d1*d2", "-d1^2"}});
    CHECK(compose(weak, grad).is_zero());
    CHECK_FALSE(check_parametrization(weak, grad));
    // Does not even annihilate.
    LinearDiffOp bad = LinearDiffOp::from_strings(2, {{"d1", "d2"}});
    CHECK_FALSE(check_parametrization(bad, grad));
}

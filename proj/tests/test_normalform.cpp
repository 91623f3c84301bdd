#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ccnet/normalform.hpp"
#include "ccnet/polytext.hpp"
#include "ccnet/structure.hpp"

using namespace ccnet;

namespace {

std::mt19937 rng(20817);

Rat rnd_rat() {
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> den(1, 2);
    return rat(num(rng), den(rng));
}

PolyMap rnd_grade(const Signature& sig, int k, int l) {
    GradedBasis b = make_basis(sig, k, l);
    std::vector<Rat> c(static_cast<size_t>(b.size()));
    for (auto& v : c) v = rnd_rat();
    return b.from_coordinates(c);
}

// two cells, cell 2 driven by cell 1: pi_1 = (1,1), pi_2 = (2,1)
const NetworkSpec feed2 = make_network(
    2, 1, 0, {FiniteMap({1, 2}), FiniteMap({1, 1})}, true);
const NetworkSpec feed2p = make_network(
    2, 1, 1, {FiniteMap({1, 2}), FiniteMap({1, 1})}, true);

// two cells, three inputs; ker gamma is nontrivial from the quadratics on
const NetworkSpec overl2 = make_network(
    2, 1, 0, {FiniteMap({1, 2}), FiniteMap({1, 1}), FiniteMap({2, 2})}, true);

// three-cell feed-forward chain
const NetworkSpec chain3 = make_network(
    3, 1, 0, {FiniteMap({1, 2, 3}), FiniteMap({2, 3, 3})}, true);

PolyMap linear(const NetworkSpec& spec, const std::string& text) {
    return parse_polymap({text}, network_sig(spec));
}

} // namespace

TEST_CASE("the semisimple part pulls back the matrix decomposition") {
    for (int trial = 0; trial < 10; ++trial) {
        const NetworkSpec& spec = trial % 2 == 0 ? feed2 : overl2;
        Signature sig = network_sig(spec);
        PolyMap f0 = rnd_grade(sig, 0, 0);
        SnSplit split = sn_decompose(spec, f0);

        CHECK(pm_sub(pm_add(split.f0_S, split.f0_N), f0).is_zero());
        JordanChevalley jc = jordan_chevalley(gamma_matrix(spec, f0));
        CHECK(gamma_matrix(spec, split.f0_S) == jc.semisimple);
        CHECK(gamma_matrix(spec, split.f0_N) == jc.nilpotent);
        CHECK(split.witness == jc.witness);
        CHECK(is_nilpotent(gamma_matrix(spec, split.f0_N)));
        CHECK(sigma_bracket(spec, split.f0_S, split.f0_N).is_zero());
    }
    CHECK_THROWS_AS(sn_decompose(feed2, linear(feed2, "X1^2")), validation_error);
}

TEST_CASE("a nilpotent linearization splits as 0 + N") {
    PolyMap f0 = linear(chain3, "X2 - X3");
    REQUIRE(is_nilpotent(gamma_matrix(chain3, f0)));
    SnSplit split = sn_decompose(chain3, f0);
    CHECK(split.f0_S.is_zero());
    CHECK(pm_sub(split.f0_N, f0).is_zero());
}

TEST_CASE("grade spaces complement the image of ad") {
    PolyMap f0 = linear(feed2, "X1 - 2*X2");
    SnSplit split = sn_decompose(feed2, f0);
    for (Strategy st : {Strategy::sn, Strategy::image}) {
        for (int k = 1; k <= 3; ++k) {
            GradeSpace gs = grade_space(feed2, split, k, 0, st);
            int q = gs.quotient_dim();
            // image of ad_q plus the normal space spans, with zero overlap
            std::vector<std::vector<Rat>> cols;
            for (int j = 0; j < gs.ad_q.cols; ++j) {
                std::vector<Rat> col(static_cast<size_t>(q));
                for (int i = 0; i < q; ++i) col[static_cast<size_t>(i)] = gs.ad_q.at(i, j);
                cols.push_back(std::move(col));
            }
            EchelonSubspace image = echelon_span(cols, q);
            std::vector<std::vector<Rat>> both = cols;
            for (const auto& v : gs.normal_q) both.push_back(v);
            CHECK(echelon_span(both, q).dim() == q);
            CHECK(image.dim() + static_cast<int>(gs.normal_q.size()) == q);
            CHECK(gs.normal_space.size() == gs.normal_q.size());
        }
    }
}

TEST_CASE("projection and lift are inverse on representatives") {
    PolyMap f0 = linear(overl2, "X1 - 2*X2 + X3");
    SnSplit split = sn_decompose(overl2, f0);
    GradeSpace gs = grade_space(overl2, split, 1, 0, Strategy::sn);
    for (int t = 0; t < 5; ++t) {
        std::vector<Rat> q(static_cast<size_t>(gs.quotient_dim()));
        for (auto& v : q) v = rnd_rat();
        CHECK(gs.project(gs.lift(q)) == q);
    }
    // projecting a kernel element gives zero
    KernelGamma ker = kernel_gamma(overl2, 1, 0);
    REQUIRE_FALSE(ker.elements.empty());
    for (const auto& h : ker.elements) {
        std::vector<Rat> q = gs.project(h);
        for (const auto& v : q) CHECK(v == 0);
    }
}

TEST_CASE("homological solve satisfies its equation modulo ker gamma") {
    for (const NetworkSpec* specp : {&feed2, &overl2}) {
        const NetworkSpec& spec = *specp;
        PolyMap f0 = linear(spec, spec.arity() == 2 ? "X1 - 2*X2" : "X1 - 2*X2 + X3");
        SnSplit split = sn_decompose(spec, f0);
        for (Strategy st : {Strategy::sn, Strategy::image}) {
            for (int t = 0; t < 4; ++t) {
                PolyMap h = rnd_grade(network_sig(spec), 2, 0);
                HomologicalSolution sol = homological_solve(spec, f0, 2, 0, h, st);
                PolyMap lhs = pm_add(sigma_bracket(spec, f0, sol.generator), sol.residual);
                // equality after substitution into every cell
                for (const auto& cell : gamma_symbolic(spec, pm_sub(lhs, h)))
                    CHECK(cell.is_zero());

                GradeSpace gs = grade_space(spec, split, 2, 0, st);
                EchelonSubspace normal = echelon_span(gs.normal_q, gs.quotient_dim());
                CHECK(normal.contains(gs.project(sol.residual)));
                // the generator carries no component along ker ad_q
                EchelonSubspace adker =
                    echelon_span(kernel_basis(gs.ad_q), gs.quotient_dim());
                CHECK(adker.reduce(gs.project(sol.generator)) == gs.project(sol.generator));
            }
        }
    }
}

TEST_CASE("normal form kills the removable quadratic terms") {
    // hyperbolic-free semisimple case: eigenvalues of ad are nonzero except
    // on the normal space itself
    PolyMap f0 = linear(feed2, "X1 - 2*X2");
    PolyMap f = pm_add(f0, parse_polymap({"X1^2 - X1*X2 + 3*X2^2"}, network_sig(feed2)));
    NormalFormOptions opt;
    opt.r1 = 2;
    NormalFormResult res = normal_form(feed2, f, opt);

    CHECK(pm_sub(grade_component(res.fbar, 0, 0), f0).is_zero());
    REQUIRE(res.grades.size() == 2);
    for (size_t i = 0; i < res.grades.size(); ++i) {
        const GradeSpace& gs = res.grades[i];
        CHECK(res.generators[i].k == gs.k);
        // each normalized grade of fbar lies in the chosen normal space
        EchelonSubspace normal = echelon_span(gs.normal_q, gs.quotient_dim());
        CHECK(normal.contains(gs.project(grade_component(res.fbar, gs.k, gs.l))));
    }
    CHECK(normal_form_symmetry_check(feed2, res.split, res.fbar, 2, 0));

    // replaying the recorded generators reproduces fbar
    PolyMap replay = truncate_grades(f, opt.r1, opt.r2);
    for (const auto& g : res.generators)
        if (!g.g.is_zero()) replay = lie_series_apply(feed2, g.g, g.k, g.l, replay, opt.r1, opt.r2);
    CHECK(pm_sub(replay, res.fbar).is_zero());
}

TEST_CASE("a map already in normal form passes through unchanged") {
    PolyMap f0 = linear(feed2, "X1 - 2*X2");
    NormalFormOptions opt;
    opt.r1 = 3;
    NormalFormResult res = normal_form(feed2, f0, opt);
    CHECK(pm_sub(res.fbar, f0).is_zero());
    for (const auto& g : res.generators) CHECK(g.g.is_zero());
}

TEST_CASE("parameter grades are normalized in series order") {
    Signature sig = network_sig(feed2p);
    PolyMap f = pm_add(linear(feed2p, "X1 - 2*X2"),
                       parse_polymap({"l1 + l1*X1 + X1^2"}, sig));
    NormalFormOptions opt;
    opt.r1 = 1;
    opt.r2 = 1;
    NormalFormResult res = normal_form(feed2p, f, opt);
    // order: (1,0), (-1,1), (0,1), (1,1)
    REQUIRE(res.grades.size() == 4);
    CHECK(res.grades[0].k == 1);
    CHECK(res.grades[0].l == 0);
    CHECK(res.grades[1].k == -1);
    CHECK(res.grades[1].l == 1);
    CHECK(res.grades[3].k == 1);
    CHECK(res.grades[3].l == 1);
    for (size_t i = 0; i < res.grades.size(); ++i) {
        const GradeSpace& gs = res.grades[i];
        EchelonSubspace normal = echelon_span(gs.normal_q, gs.quotient_dim());
        CHECK(normal.contains(gs.project(grade_component(res.fbar, gs.k, gs.l))));
    }
    PolyMap replay = truncate_grades(f, 1, 1);
    for (const auto& g : res.generators)
        if (!g.g.is_zero()) replay = lie_series_apply(feed2p, g.g, g.k, g.l, replay, 1, 1);
    CHECK(pm_sub(replay, res.fbar).is_zero());
}

TEST_CASE("the Lie series matches its explicit partial sums") {
    Signature sig = network_sig(feed2);
    for (int t = 0; t < 5; ++t) {
        PolyMap g = rnd_grade(sig, 1, 0);
        PolyMap f0 = rnd_grade(sig, 0, 0);
        PolyMap series = lie_series_apply(feed2, g, 1, 0, f0, 2, 0);
        PolyMap b1 = sigma_bracket(feed2, g, f0);
        PolyMap b2 = sigma_bracket(feed2, g, b1);
        PolyMap expect = pm_add(f0, pm_add(b1, pm_scale(b2, rat(1, 2))));
        CHECK(pm_sub(series, truncate_grades(expect, 2, 0)).is_zero());
    }
    CHECK_THROWS_AS(
        lie_series_apply(feed2, parse_polymap({"X1 + X1^2"}, sig), 1, 0,
                         rnd_grade(sig, 0, 0), 2, 0),
        validation_error);
}

TEST_CASE("full-space mode refuses networks with a gamma kernel") {
    PolyMap f0 = linear(overl2, "X1 - 2*X2 + X3");
    PolyMap f = pm_add(f0, rnd_grade(network_sig(overl2), 1, 0));
    NormalFormOptions opt;
    opt.r1 = 1;
    opt.use_quotient = false;
    CHECK_THROWS_AS(normal_form(overl2, f, opt), guard_error);
    // the quotient handles it
    opt.use_quotient = true;
    CHECK_NOTHROW(normal_form(overl2, f, opt));
    // and a kernel-free network is fine either way
    NormalFormOptions opt2;
    opt2.r1 = 2;
    opt2.use_quotient = false;
    CHECK_NOTHROW(normal_form(feed2, pm_add(linear(feed2, "X1 - 2*X2"),
                                            rnd_grade(network_sig(feed2), 1, 0)),
                              opt2));
}

TEST_CASE("invariant restriction keeps the normal form invariant") {
    // the overlapping network has the swap (1 2) as a dynamical input symmetry
    auto pairs = dynamical_input_symmetries(overl2);
    REQUIRE(pairs.size() >= 2);
    Signature sig = network_sig(overl2);

    // invariant linearization plus invariant higher terms
    InvariantSubbasis lin = invariant_subbasis(overl2, pairs, 0, 0);
    REQUIRE_FALSE(lin.elements.empty());
    PolyMap f0 = zero_map(sig);
    for (const auto& e : lin.elements) f0 = pm_add(f0, pm_scale(e, rnd_rat()));
    if (gamma_matrix(overl2, f0) == RationalMatrix(2, 2))
        f0 = lin.elements[0];   // avoid the degenerate zero draw
    InvariantSubbasis quad = invariant_subbasis(overl2, pairs, 1, 0);
    PolyMap f = f0;
    for (const auto& e : quad.elements) f = pm_add(f, pm_scale(e, rnd_rat()));

    NormalFormOptions opt;
    opt.r1 = 2;
    opt.invariant_group = &pairs;
    NormalFormResult res = normal_form(overl2, f, opt);
    for (auto [k, l] : grades_present(res.fbar)) {
        InvariantSubbasis inv = invariant_subbasis(overl2, pairs, k, l);
        EchelonSubspace span = echelon_span(inv.vectors, inv.basis.size());
        CHECK(span.contains(inv.basis.coordinates(grade_component(res.fbar, k, l))));
    }
    // generators are invariant too
    for (const auto& g : res.generators) {
        if (g.g.is_zero()) continue;
        InvariantSubbasis inv = invariant_subbasis(overl2, pairs, g.k, g.l);
        EchelonSubspace span = echelon_span(inv.vectors, inv.basis.size());
        CHECK(span.contains(inv.basis.coordinates(g.g)));
    }

    // a non-invariant linearization is rejected in invariant mode
    PolyMap bad = pm_add(linear(overl2, "X2"), rnd_grade(sig, 1, 0));
    if (!echelon_span(lin.vectors, lin.basis.size())
             .contains(lin.basis.coordinates(grade_component(bad, 0, 0))))
        CHECK_THROWS_AS(normal_form(overl2, bad, opt), validation_error);
}

TEST_CASE("input validation") {
    Signature sig = network_sig(feed2);
    NormalFormOptions opt;
    CHECK_THROWS_AS(normal_form(feed2, parse_polymap({"1 + X1"}, sig), opt),
                    validation_error);
    CHECK_THROWS_AS(normal_form(feed2, parse_polymap({"X1^2"}, sig), opt),
                    validation_error);
    CHECK(strategy_from_name("sn") == Strategy::sn);
    CHECK(strategy_from_name("image") == Strategy::image);
    CHECK_THROWS_AS(strategy_from_name("other"), validation_error);
}

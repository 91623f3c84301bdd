#include "ccnet/normalform.hpp"

#include <algorithm>

namespace ccnet {

SnSplit sn_decompose(const NetworkSpec& spec, const PolyMap& f0) {
    require_table(spec);
    auto grades = grades_present(f0);
    if (grades.size() > 1 || (grades.size() == 1 && grades[0] != std::pair<int, int>{0, 0}))
        throw validation_error("decomposition needs a linear homogeneous map");

    RationalMatrix M = gamma_matrix(spec, f0);
    JordanChevalley jc = jordan_chevalley(M);

    // Recover f0_S from gamma_{f0_S} = S; gamma is injective on linear maps,
    // and the semisimple part of an admissible linear map is admissible, so
    // the system has exactly one solution.
    GradedBasis lin = make_basis(network_sig(spec), 0, 0);
    const int d2 = M.rows * M.cols;
    RationalMatrix sys(d2, lin.size());
    for (int col = 0; col < lin.size(); ++col) {
        RationalMatrix G = gamma_matrix(spec, lin.entry(col));
        for (int r = 0; r < d2; ++r) sys.at(r, col) = G.a[static_cast<size_t>(r)];
    }
    auto coords = solve(sys, jc.semisimple.a);
    if (!coords)
        throw internal_error("semisimple part of an admissible map is not admissible");

    SnSplit split;
    split.f0 = f0;
    split.f0_S = lin.from_coordinates(*coords);
    split.f0_N = pm_sub(f0, split.f0_S);
    split.witness = jc.witness;
    return split;
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "sn") return Strategy::sn;
    if (name == "image") return Strategy::image;
    throw validation_error("unknown strategy '" + name + "' (expected sn or image)");
}

std::vector<Rat> GradeSpace::project(const PolyMap& h) const {
    std::vector<Rat> mc = basis.coordinates(h);
    if (!working.contains(mc))
        throw validation_error("polynomial lies outside the working subspace of the grade");
    std::vector<Rat> wc(static_cast<size_t>(working.dim()));
    for (size_t i = 0; i < wc.size(); ++i)
        wc[i] = mc[static_cast<size_t>(working.pivots[i])];
    std::vector<Rat> red = kernel.reduce(wc);
    std::vector<Rat> q(rep.size());
    for (size_t i = 0; i < rep.size(); ++i) q[i] = red[static_cast<size_t>(rep[i])];
    return q;
}

PolyMap GradeSpace::lift(const std::vector<Rat>& q) const {
    if (q.size() != rep.size()) throw validation_error("lift: wrong coordinate count");
    std::vector<Rat> mc(static_cast<size_t>(basis.size()), Rat(0));
    for (size_t i = 0; i < rep.size(); ++i) {
        if (q[i] == 0) continue;
        const auto& row = working.basis[static_cast<size_t>(rep[i])];
        for (size_t c = 0; c < mc.size(); ++c)
            if (row[c] != 0) mc[c] += q[i] * row[c];
    }
    return basis.from_coordinates(mc);
}

namespace {

// Quotient-coordinate matrix of [f, .] on a grade space under construction.
RationalMatrix quotient_ad(const NetworkSpec& spec, const PolyMap& f, const GradeSpace& gs) {
    const int q = gs.quotient_dim();
    RationalMatrix mat(q, q);
    for (int col = 0; col < q; ++col) {
        PolyMap b = gs.basis.from_coordinates(gs.working.basis[static_cast<size_t>(gs.rep[col])]);
        PolyMap br = sigma_bracket(spec, f, b);
        std::vector<Rat> mc = gs.basis.coordinates(br);
        if (!gs.working.contains(mc))
            throw internal_error("bracket left the invariant subspace of the grade");
        std::vector<Rat> wc(static_cast<size_t>(gs.working.dim()));
        for (size_t i = 0; i < wc.size(); ++i)
            wc[i] = mc[static_cast<size_t>(gs.working.pivots[i])];
        std::vector<Rat> red = gs.kernel.reduce(wc);
        for (int row = 0; row < q; ++row)
            mat.at(row, col) = red[static_cast<size_t>(gs.rep[row])];
    }
    return mat;
}

std::vector<std::vector<Rat>> matrix_columns(const RationalMatrix& m) {
    std::vector<std::vector<Rat>> cols(static_cast<size_t>(m.cols));
    for (int c = 0; c < m.cols; ++c) {
        cols[static_cast<size_t>(c)].resize(static_cast<size_t>(m.rows));
        for (int r = 0; r < m.rows; ++r) cols[static_cast<size_t>(c)][static_cast<size_t>(r)] = m.at(r, c);
    }
    return cols;
}

} // namespace

GradeSpace grade_space(const NetworkSpec& spec, const SnSplit& split, int k, int l,
                       Strategy strategy, const std::vector<InputSymmetry>* invariant_group,
                       bool use_quotient) {
    require_table(spec);
    GradeSpace gs;
    gs.k = k;
    gs.l = l;
    gs.basis = make_basis(network_sig(spec), k, l);
    const int B = gs.basis.size();

    if (invariant_group) {
        InvariantSubbasis inv = invariant_subbasis(spec, *invariant_group, k, l);
        gs.working = echelon_span(inv.vectors, B);
    } else {
        std::vector<std::vector<Rat>> unit(static_cast<size_t>(B),
                                           std::vector<Rat>(static_cast<size_t>(B), Rat(0)));
        for (int i = 0; i < B; ++i) unit[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
        gs.working = echelon_span(unit, B);
    }

    // ker gamma intersected with the working subspace, in working coordinates:
    // c is in the intersection iff sum_i c_i W_i reduces to zero against the
    // full kernel.
    KernelGamma kg = kernel_gamma(spec, k, l);
    EchelonSubspace full_kernel = echelon_span(kg.vectors, B);
    const int w = gs.working.dim();
    RationalMatrix residual(B, w);
    for (int i = 0; i < w; ++i) {
        std::vector<Rat> red = full_kernel.reduce(gs.working.basis[static_cast<size_t>(i)]);
        for (int r = 0; r < B; ++r) residual.at(r, i) = red[static_cast<size_t>(r)];
    }
    gs.kernel = echelon_span(kernel_basis(residual), w);
    if (!use_quotient && gs.kernel.dim() > 0)
        throw guard_error("full-space mode requested but ker gamma is nontrivial at grade (" +
                          std::to_string(k) + "," + std::to_string(l) + ")");

    std::vector<bool> is_pivot(static_cast<size_t>(w), false);
    for (int p : gs.kernel.pivots) is_pivot[static_cast<size_t>(p)] = true;
    for (int i = 0; i < w; ++i)
        if (!is_pivot[static_cast<size_t>(i)]) gs.rep.push_back(i);

    gs.ad_q = quotient_ad(spec, split.f0, gs);
    const int q = gs.quotient_dim();

    if (strategy == Strategy::image) {
        EchelonSubspace image = echelon_span(matrix_columns(gs.ad_q), q);
        std::vector<bool> impiv(static_cast<size_t>(q), false);
        for (int p : image.pivots) impiv[static_cast<size_t>(p)] = true;
        for (int i = 0; i < q; ++i)
            if (!impiv[static_cast<size_t>(i)]) {
                std::vector<Rat> e(static_cast<size_t>(q), Rat(0));
                e[static_cast<size_t>(i)] = 1;
                gs.normal_q.push_back(std::move(e));
            }
    } else {
        RationalMatrix ad_s = quotient_ad(spec, split.f0_S, gs);
        RationalMatrix ad_n = quotient_ad(spec, split.f0_N, gs);
        std::vector<std::vector<Rat>> ker_s = kernel_basis(ad_s);
        std::vector<std::vector<Rat>> span_vecs;
        for (const auto& v : ker_s) span_vecs.push_back(mat_apply(ad_n, v));
        EchelonSubspace accum = echelon_span(span_vecs, q);
        for (const auto& v : ker_s) {
            if (accum.contains(v)) continue;
            gs.normal_q.push_back(v);
            span_vecs.push_back(v);
            accum = echelon_span(span_vecs, q);
        }
    }

    // The chosen normal space must complement the image of ad on the quotient.
    {
        std::vector<std::vector<Rat>> both = matrix_columns(gs.ad_q);
        int im_rank = echelon_span(both, q).dim();
        for (const auto& v : gs.normal_q) both.push_back(v);
        if (echelon_span(both, q).dim() != q ||
            im_rank + static_cast<int>(gs.normal_q.size()) != q)
            throw internal_error("normal space fails to complement the image of ad");
    }

    gs.normal_space.reserve(gs.normal_q.size());
    for (const auto& v : gs.normal_q) gs.normal_space.push_back(gs.lift(v));
    return gs;
}

namespace {

HomologicalSolution solve_on_grade(const GradeSpace& gs, const PolyMap& h) {
    std::vector<Rat> hq = gs.project(h);
    const int q = gs.quotient_dim();
    const int nn = static_cast<int>(gs.normal_q.size());
    RationalMatrix sys(q, q + nn);
    for (int r = 0; r < q; ++r) {
        for (int c = 0; c < q; ++c) sys.at(r, c) = gs.ad_q.at(r, c);
        for (int c = 0; c < nn; ++c) sys.at(r, q + c) = gs.normal_q[static_cast<size_t>(c)][static_cast<size_t>(r)];
    }
    auto sol = solve(sys, hq);
    if (!sol) throw internal_error("homological equation is unsolvable on the quotient");

    std::vector<Rat> gq(sol->begin(), sol->begin() + q);
    std::vector<Rat> rq(static_cast<size_t>(q), Rat(0));
    for (int c = 0; c < nn; ++c) {
        const Rat& amount = (*sol)[static_cast<size_t>(q + c)];
        if (amount == 0) continue;
        for (int r = 0; r < q; ++r)
            rq[static_cast<size_t>(r)] += amount * gs.normal_q[static_cast<size_t>(c)][static_cast<size_t>(r)];
    }
    // Minimal generator: no component along ker ad.
    EchelonSubspace ker_ad = echelon_span(kernel_basis(gs.ad_q), q);
    gq = ker_ad.reduce(gq);

    HomologicalSolution out;
    out.generator = gs.lift(gq);
    out.residual = gs.lift(rq);
    return out;
}

} // namespace

HomologicalSolution homological_solve(const NetworkSpec& spec, const PolyMap& f0, int k,
                                      int l, const PolyMap& h, Strategy strategy) {
    SnSplit split = sn_decompose(spec, f0);
    GradeSpace gs = grade_space(spec, split, k, l, strategy);
    return solve_on_grade(gs, h);
}

using Grade = std::pair<int, int>;
using Family = std::map<Grade, PolyMap>;

namespace {

Family family_of(const PolyMap& f) {
    Family fam;
    for (auto [k, l] : grades_present(f)) fam[{k, l}] = grade_component(f, k, l);
    return fam;
}

PolyMap assemble(const Signature& sig, const Family& fam) {
    PolyMap out = zero_map(sig);
    for (const auto& kv : fam) out = pm_add(out, kv.second);
    return out;
}

// exp(ad_g) on a truncated graded family; g homogeneous of grade (gk, gl).
Family exp_ad(const NetworkSpec& spec, const PolyMap& g, int gk, int gl, const Family& fam,
              int r1, int r2) {
    Family result = fam;
    Family current = fam;
    Rat factorial(1);
    for (int j = 1; !current.empty(); ++j) {
        if (j > 200) throw internal_error("Lie series failed to terminate");
        Family next;
        for (const auto& [grade, comp] : current) {
            int nk = grade.first + gk, nl = grade.second + gl;
            if (nk < -1 || nk > r1 || nl > r2) continue;
            PolyMap br = sigma_bracket(spec, g, comp);
            if (br.is_zero()) continue;
            auto it = next.find({nk, nl});
            if (it == next.end())
                next[{nk, nl}] = std::move(br);
            else
                it->second = pm_add(it->second, br);
        }
        factorial *= j;
        for (const auto& [grade, comp] : next) {
            PolyMap scaled = pm_scale(comp, 1 / factorial);
            auto it = result.find(grade);
            if (it == result.end())
                result[grade] = std::move(scaled);
            else
                it->second = pm_add(it->second, scaled);
        }
        current = std::move(next);
    }
    // Drop components that cancelled to zero.
    for (auto it = result.begin(); it != result.end();)
        it = it->second.is_zero() ? result.erase(it) : std::next(it);
    return result;
}

std::vector<Grade> normalization_order(int r1, int r2) {
    std::vector<Grade> order;
    for (int k = 1; k <= r1; ++k) order.push_back({k, 0});
    for (int l = 1; l <= r2; ++l)
        for (int k = -1; k <= r1; ++k) order.push_back({k, l});
    return order;
}

} // namespace

NormalFormResult normal_form(const NetworkSpec& spec, const PolyMap& f,
                             const NormalFormOptions& opt) {
    require_table(spec);
    if (!(f.sig == network_sig(spec)))
        throw validation_error("normal form: signature does not match the network");
    if (opt.r1 < 0 || opt.r2 < 0) throw validation_error("normal form: negative degree");
    if (!grade_component(f, -1, 0).is_zero())
        throw validation_error("normal form: f(0;0) must vanish");
    PolyMap f00 = grade_component(f, 0, 0);
    if (f00.is_zero())
        throw validation_error("normal form: the linearization (grade (0,0)) is absent");

    NormalFormResult res;
    res.split = sn_decompose(spec, f00);

    if (opt.invariant_group) {
        InvariantSubbasis inv0 = invariant_subbasis(spec, *opt.invariant_group, 0, 0);
        EchelonSubspace w0 = echelon_span(inv0.vectors, inv0.basis.size());
        if (!w0.contains(inv0.basis.coordinates(f00)))
            throw validation_error("normal form: the linearization is not invariant "
                                   "under the given input symmetries");
    }

    Family fam = family_of(truncate_grades(f, opt.r1, opt.r2));
    for (Grade grade : normalization_order(opt.r1, opt.r2)) {
        auto [k, l] = grade;
        GradeSpace gs =
            grade_space(spec, res.split, k, l, opt.strategy, opt.invariant_group, opt.use_quotient);
        PolyMap h = fam.count(grade) ? fam[grade] : zero_map(network_sig(spec));
        HomologicalSolution sol = solve_on_grade(gs, h);
        res.generators.push_back({k, l, sol.generator});
        if (!sol.generator.is_zero())
            fam = exp_ad(spec, sol.generator, k, l, fam, opt.r1, opt.r2);
        res.grades.push_back(std::move(gs));
    }
    res.fbar = assemble(network_sig(spec), fam);
    return res;
}

bool normal_form_symmetry_check(const NetworkSpec& spec, const SnSplit& split,
                                const PolyMap& fbar, int r1, int r2) {
    for (auto [k, l] : grades_present(fbar)) {
        if (k > r1 || l > r2) continue;
        PolyMap br = sigma_bracket(spec, split.f0_S, grade_component(fbar, k, l));
        if (br.is_zero()) continue;
        GradedBasis basis = make_basis(network_sig(spec), k, l);
        KernelGamma kg = kernel_gamma(spec, k, l);
        EchelonSubspace kernel = echelon_span(kg.vectors, basis.size());
        if (!kernel.contains(basis.coordinates(br))) return false;
    }
    return true;
}

PolyMap lie_series_apply(const NetworkSpec& spec, const PolyMap& g, int gk, int gl,
                         const PolyMap& f, int r1, int r2) {
    for (auto grade : grades_present(g))
        if (grade != Grade{gk, gl})
            throw validation_error("Lie series: generator is not homogeneous of the stated grade");
    Family fam = family_of(truncate_grades(f, r1, r2));
    fam = exp_ad(spec, g, gk, gl, fam, r1, r2);
    return assemble(network_sig(spec), fam);
}

} // namespace ccnet

#include "ccnet/liealg.hpp"

namespace ccnet {

PolyMap sigma_compose(const NetworkSpec& spec, const PolyMap& f, const PolyMap& g) {
    require_table(spec);
    Signature sig = network_sig(spec);
    if (!(f.sig == sig) || !(g.sig == sig))
        throw validation_error("composition: signatures do not match the network");
    std::vector<PolyMap> args;
    args.reserve(static_cast<size_t>(spec.arity()));
    for (int j = 1; j <= spec.arity(); ++j)
        args.push_back(compose_selection(g, a_map(spec, j)));
    return substitute(f, args);
}

PolyMap sigma_bracket(const NetworkSpec& spec, const PolyMap& f, const PolyMap& g) {
    require_table(spec);
    Signature sig = network_sig(spec);
    if (!(f.sig == sig) || !(g.sig == sig))
        throw validation_error("bracket: signatures do not match the network");
    const int m = spec.dim;
    PolyMap out = zero_map(sig);
    for (int j = 1; j <= spec.arity(); ++j) {
        IndexSelection aj = a_map(spec, j);
        PolyMap g_aj = compose_selection(g, aj);
        PolyMap f_aj = compose_selection(f, aj);
        for (int d = 1; d <= m; ++d) {
            int v = sig.var(j, d);
            for (int c = 0; c < m; ++c) {
                out.comp[static_cast<size_t>(c)] = poly_add(
                    out.comp[static_cast<size_t>(c)],
                    poly_sub(poly_mul(poly_partial(f.comp[static_cast<size_t>(c)], v),
                                      g_aj.comp[static_cast<size_t>(d) - 1]),
                             poly_mul(poly_partial(g.comp[static_cast<size_t>(c)], v),
                                      f_aj.comp[static_cast<size_t>(d) - 1])));
            }
        }
    }
    return out;
}

AdMatrix ad_matrix(const NetworkSpec& spec, const PolyMap& f0, int k, int l) {
    auto grades = grades_present(f0);
    if (!(grades.size() == 1 && grades[0] == std::pair<int, int>{0, 0}))
        throw validation_error("ad matrix needs a linear homogeneous generator");
    AdMatrix ad;
    ad.basis = make_basis(network_sig(spec), k, l);
    const int n = ad.basis.size();
    ad.mat = RationalMatrix(n, n);
    for (int col = 0; col < n; ++col) {
        PolyMap b = ad.basis.entry(col);
        std::vector<Rat> coords = ad.basis.coordinates(sigma_bracket(spec, f0, b));
        for (int row = 0; row < n; ++row) ad.mat.at(row, col) = coords[static_cast<size_t>(row)];
    }
    return ad;
}

KernelGamma kernel_gamma(const NetworkSpec& spec, int k, int l) {
    KernelGamma ker;
    ker.basis = make_basis(network_sig(spec), k, l);
    GradedBasis target = make_basis(full_state_sig(spec), k, l);
    const int n = ker.basis.size();
    const int rows_per_cell = target.size();
    RationalMatrix sys(rows_per_cell * spec.cells, n);
    for (int col = 0; col < n; ++col) {
        PolyMap b = ker.basis.entry(col);
        for (int i = 1; i <= spec.cells; ++i) {
            std::vector<Rat> coords = target.coordinates(compose_selection(b, pi(spec, i)));
            for (int r = 0; r < rows_per_cell; ++r)
                sys.at((i - 1) * rows_per_cell + r, col) = coords[static_cast<size_t>(r)];
        }
    }
    ker.vectors = kernel_basis(sys);
    ker.elements.reserve(ker.vectors.size());
    for (const auto& v : ker.vectors) ker.elements.push_back(ker.basis.from_coordinates(v));
    return ker;
}

} // namespace ccnet

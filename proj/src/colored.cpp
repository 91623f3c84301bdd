#include "ccnet/colored.hpp"

#include <set>
#include <sstream>

namespace ccnet {

namespace {

long long pow_clamped(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (1LL << 40)) return 1LL << 40;
        r *= base;
    }
    return r;
}

std::string pair_name(int d, int c, int j) {
    std::ostringstream os;
    os << "#" << j << "@(" << d << "<-" << c << ")";
    return os.str();
}

} // namespace

int ColoredNetworkSpec::compose_index(int e, int d, int c, int j1, int j2) const {
    auto it = table.find({e, d, c, j1, j2});
    if (it == table.end()) throw internal_error("semigroupoid table entry missing");
    return it->second;
}

void validate_colored_network(const ColoredNetworkSpec& spec) {
    const int C = spec.colors;
    if (C < 1) throw validation_error("colored network needs at least one color");
    if (static_cast<int>(spec.cell_counts.size()) != C ||
        static_cast<int>(spec.cell_dims.size()) != C)
        throw validation_error("cell counts/dims must list one entry per color");
    for (int c = 0; c < C; ++c) {
        if (spec.cell_counts[static_cast<size_t>(c)] < 1)
            throw validation_error("color " + std::to_string(c + 1) + " has no cells");
        if (spec.cell_dims[static_cast<size_t>(c)] < 1)
            throw validation_error("color " + std::to_string(c + 1) + " has dimension < 1");
    }
    if (spec.params < 0) throw validation_error("negative parameter count");
    if (static_cast<int>(spec.maps.size()) != C)
        throw validation_error("map table must have one row per target color");
    for (int d = 1; d <= C; ++d) {
        if (static_cast<int>(spec.maps[static_cast<size_t>(d) - 1].size()) != C)
            throw validation_error("map table must have one column per source color");
        for (int c = 1; c <= C; ++c) {
            std::set<FiniteMap> seen;
            for (int j = 1; j <= spec.arity(d, c); ++j) {
                const FiniteMap& m = spec.sigma(d, c, j);
                if (m.domain() != spec.cell_counts[static_cast<size_t>(c) - 1])
                    throw validation_error("map " + pair_name(d, c, j) + " has domain size " +
                                           std::to_string(m.domain()) + ", expected " +
                                           std::to_string(spec.cell_counts[static_cast<size_t>(c) - 1]));
                validate_map(m, spec.cell_counts[static_cast<size_t>(d) - 1], pair_name(d, c, j));
                if (!seen.insert(m).second)
                    throw validation_error("duplicate map " + map_str(m) + " for color pair (" +
                                           std::to_string(d) + "<-" + std::to_string(c) + ")");
            }
        }
    }
    if (spec.has_table) {
        for (int e = 1; e <= C; ++e)
            for (int d = 1; d <= C; ++d)
                for (int c = 1; c <= C; ++c)
                    for (int j1 = 1; j1 <= spec.arity(e, d); ++j1)
                        for (int j2 = 1; j2 <= spec.arity(d, c); ++j2) {
                            int j3 = spec.compose_index(e, d, c, j1, j2);
                            if (j3 < 1 || j3 > spec.arity(e, c))
                                throw validation_error("semigroupoid table entry out of range");
                            if (!(compose_maps(spec.sigma(e, d, j1), spec.sigma(d, c, j2)) ==
                                  spec.sigma(e, c, j3)))
                                throw validation_error("semigroupoid table disagrees with the maps");
                        }
    }
}

void require_colored_table(const ColoredNetworkSpec& spec) {
    if (!spec.has_table)
        throw validation_error("operation requires a semigroupoid; complete the network first");
}

namespace {

// Composition indices for lists that are closed under typed composition.
std::map<std::array<int, 5>, int> build_table(const ColoredNetworkSpec& spec) {
    const int C = spec.colors;
    std::map<std::array<int, 5>, int> table;
    std::vector<std::vector<std::map<FiniteMap, int>>> index(
        static_cast<size_t>(C), std::vector<std::map<FiniteMap, int>>(static_cast<size_t>(C)));
    for (int d = 1; d <= C; ++d)
        for (int c = 1; c <= C; ++c)
            for (int j = 1; j <= spec.arity(d, c); ++j)
                index[static_cast<size_t>(d) - 1][static_cast<size_t>(c) - 1][spec.sigma(d, c, j)] = j;
    for (int e = 1; e <= C; ++e)
        for (int d = 1; d <= C; ++d)
            for (int c = 1; c <= C; ++c)
                for (int j1 = 1; j1 <= spec.arity(e, d); ++j1)
                    for (int j2 = 1; j2 <= spec.arity(d, c); ++j2) {
                        FiniteMap prod = compose_maps(spec.sigma(e, d, j1), spec.sigma(d, c, j2));
                        auto& idx = index[static_cast<size_t>(e) - 1][static_cast<size_t>(c) - 1];
                        auto it = idx.find(prod);
                        if (it == idx.end()) throw internal_error("typed map lists are not closed");
                        table[{e, d, c, j1, j2}] = it->second;
                    }
    return table;
}

bool lists_closed(const ColoredNetworkSpec& spec) {
    const int C = spec.colors;
    for (int d = 1; d <= C; ++d)
        for (int c = 1; c <= C; ++c) {
            std::set<FiniteMap> present(
                spec.maps[static_cast<size_t>(d) - 1][static_cast<size_t>(c) - 1].begin(),
                spec.maps[static_cast<size_t>(d) - 1][static_cast<size_t>(c) - 1].end());
            for (int dd = 1; dd <= C; ++dd)
                for (int j1 = 1; j1 <= spec.arity(d, dd); ++j1)
                    for (int j2 = 1; j2 <= spec.arity(dd, c); ++j2)
                        if (!present.count(compose_maps(spec.sigma(d, dd, j1), spec.sigma(dd, c, j2))))
                            return false;
        }
    return true;
}

} // namespace

ColoredNetworkSpec semigroupoid_closure(const ColoredNetworkSpec& spec) {
    validate_colored_network(spec);
    const int C = spec.colors;
    ColoredNetworkSpec out = spec;
    out.has_table = false;
    out.table.clear();
    out.original_counts.assign(static_cast<size_t>(C), std::vector<int>(static_cast<size_t>(C), 0));
    for (int d = 1; d <= C; ++d)
        for (int c = 1; c <= C; ++c)
            out.original_counts[static_cast<size_t>(d) - 1][static_cast<size_t>(c) - 1] =
                spec.arity(d, c);

    std::vector<std::vector<std::map<FiniteMap, int>>> index(
        static_cast<size_t>(C), std::vector<std::map<FiniteMap, int>>(static_cast<size_t>(C)));
    for (int d = 1; d <= C; ++d)
        for (int c = 1; c <= C; ++c)
            for (int j = 1; j <= out.arity(d, c); ++j)
                index[static_cast<size_t>(d) - 1][static_cast<size_t>(c) - 1][out.sigma(d, c, j)] = j;

    // Round-based breadth-first closure over composable typed pairs, scanned
    // in (e, d, c, j1, j2) order; identical to the semigroup closure when
    // there is a single color.
    std::vector<std::vector<size_t>> settled(static_cast<size_t>(C),
                                             std::vector<size_t>(static_cast<size_t>(C), 0));
    while (true) {
        std::vector<std::vector<size_t>> count(static_cast<size_t>(C),
                                               std::vector<size_t>(static_cast<size_t>(C), 0));
        bool done = true;
        for (int d = 0; d < C; ++d)
            for (int c = 0; c < C; ++c) {
                count[static_cast<size_t>(d)][static_cast<size_t>(c)] =
                    out.maps[static_cast<size_t>(d)][static_cast<size_t>(c)].size();
                if (count[static_cast<size_t>(d)][static_cast<size_t>(c)] !=
                    settled[static_cast<size_t>(d)][static_cast<size_t>(c)])
                    done = false;
            }
        if (done) break;
        for (int e = 1; e <= C; ++e)
            for (int d = 1; d <= C; ++d)
                for (int c = 1; c <= C; ++c) {
                    size_t n1 = count[static_cast<size_t>(e) - 1][static_cast<size_t>(d) - 1];
                    size_t n2 = count[static_cast<size_t>(d) - 1][static_cast<size_t>(c) - 1];
                    for (size_t j1 = 1; j1 <= n1; ++j1)
                        for (size_t j2 = 1; j2 <= n2; ++j2) {
                            if (j1 <= settled[static_cast<size_t>(e) - 1][static_cast<size_t>(d) - 1] &&
                                j2 <= settled[static_cast<size_t>(d) - 1][static_cast<size_t>(c) - 1])
                                continue;
                            FiniteMap prod = compose_maps(out.sigma(e, d, static_cast<int>(j1)),
                                                          out.sigma(d, c, static_cast<int>(j2)));
                            auto& idx = index[static_cast<size_t>(e) - 1][static_cast<size_t>(c) - 1];
                            if (!idx.count(prod)) {
                                auto& list = out.maps[static_cast<size_t>(e) - 1][static_cast<size_t>(c) - 1];
                                list.push_back(prod);
                                idx[prod] = static_cast<int>(list.size());
                                long long bound =
                                    pow_clamped(out.cell_counts[static_cast<size_t>(e) - 1],
                                                out.cell_counts[static_cast<size_t>(c) - 1]);
                                if (static_cast<long long>(list.size()) > bound)
                                    throw internal_error("closure exceeded the typed map count");
                            }
                        }
                }
        settled = count;
    }

    out.table = build_table(out);
    out.has_table = true;
    return out;
}

ColoredNetworkSpec make_colored_network(int colors, const std::vector<int>& cell_counts,
                                        const std::vector<int>& cell_dims, int params,
                                        const std::vector<std::vector<std::vector<FiniteMap>>>& maps,
                                        bool close) {
    ColoredNetworkSpec spec;
    spec.colors = colors;
    spec.params = params;
    spec.cell_counts = cell_counts;
    spec.cell_dims = cell_dims;
    spec.maps = maps;
    validate_colored_network(spec);
    spec.original_counts.assign(static_cast<size_t>(colors),
                                std::vector<int>(static_cast<size_t>(colors), 0));
    for (int d = 1; d <= colors; ++d)
        for (int c = 1; c <= colors; ++c)
            spec.original_counts[static_cast<size_t>(d) - 1][static_cast<size_t>(c) - 1] =
                spec.arity(d, c);
    if (close) return semigroupoid_closure(spec);
    if (lists_closed(spec)) {
        spec.table = build_table(spec);
        spec.has_table = true;
    }
    return spec;
}

ColoredNetworkSpec colored_from_homogeneous(const NetworkSpec& spec) {
    validate_network(spec);
    ColoredNetworkSpec out;
    out.colors = 1;
    out.params = spec.params;
    out.cell_counts = {spec.cells};
    out.cell_dims = {spec.dim};
    out.maps = {{spec.maps}};
    out.original_counts = {{spec.original_n}};
    if (spec.table) {
        for (int j1 = 1; j1 <= spec.table->size(); ++j1)
            for (int j2 = 1; j2 <= spec.table->size(); ++j2)
                out.table[{1, 1, 1, j1, j2}] = spec.table->compose_index(j1, j2);
        out.has_table = true;
    }
    return out;
}

Signature colored_profile_sig(const ColoredNetworkSpec& spec, int c) {
    if (c < 1 || c > spec.colors) throw validation_error("color out of range");
    Signature sig;
    for (int d = 1; d <= spec.colors; ++d)
        for (int j = 1; j <= spec.arity(d, c); ++j)
            sig.slot_dims.push_back(spec.cell_dims[static_cast<size_t>(d) - 1]);
    sig.out_dim = spec.cell_dims[static_cast<size_t>(c) - 1];
    sig.params = spec.params;
    return sig;
}

Signature colored_full_sig(const ColoredNetworkSpec& spec) {
    Signature sig;
    int total = 0;
    for (int c = 1; c <= spec.colors; ++c) {
        int nc = spec.cell_counts[static_cast<size_t>(c) - 1];
        int mc = spec.cell_dims[static_cast<size_t>(c) - 1];
        for (int i = 0; i < nc; ++i) sig.slot_dims.push_back(mc);
        total += nc * mc;
    }
    sig.out_dim = total;
    sig.params = spec.params;
    return sig;
}

int colored_slot_index(const ColoredNetworkSpec& spec, int c, int d, int j) {
    if (d < 1 || d > spec.colors || c < 1 || c > spec.colors)
        throw validation_error("color out of range");
    if (j < 1 || j > spec.arity(d, c)) throw validation_error("map index out of range");
    int pos = 0;
    for (int dd = 1; dd < d; ++dd) pos += spec.arity(dd, c);
    return pos + j;
}

int colored_cell_index(const ColoredNetworkSpec& spec, int c, int i) {
    if (c < 1 || c > spec.colors) throw validation_error("color out of range");
    if (i < 1 || i > spec.cell_counts[static_cast<size_t>(c) - 1])
        throw validation_error("cell index out of range");
    int pos = 0;
    for (int cc = 1; cc < c; ++cc) pos += spec.cell_counts[static_cast<size_t>(cc) - 1];
    return pos + i;
}

int colored_state_offset(const ColoredNetworkSpec& spec, int c, int i) {
    colored_cell_index(spec, c, i);  // range checks
    int off = 0;
    for (int cc = 1; cc < c; ++cc)
        off += spec.cell_counts[static_cast<size_t>(cc) - 1] *
               spec.cell_dims[static_cast<size_t>(cc) - 1];
    return off + (i - 1) * spec.cell_dims[static_cast<size_t>(c) - 1];
}

void validate_colored_family(const ColoredNetworkSpec& spec, const ColoredPolyFamily& f) {
    if (static_cast<int>(f.comp.size()) != spec.colors)
        throw validation_error("family must have one function per color");
    for (int c = 1; c <= spec.colors; ++c)
        if (!(f.comp[static_cast<size_t>(c) - 1].sig == colored_profile_sig(spec, c)))
            throw validation_error("function of color " + std::to_string(c) +
                                   " does not match the arity profile");
}

ColoredPolyFamily zero_colored_family(const ColoredNetworkSpec& spec) {
    ColoredPolyFamily f;
    for (int c = 1; c <= spec.colors; ++c) f.comp.push_back(zero_map(colored_profile_sig(spec, c)));
    return f;
}

IndexSelection colored_pi(const ColoredNetworkSpec& spec, int c, int i) {
    colored_cell_index(spec, c, i);  // range checks
    IndexSelection s;
    for (int cc = 1; cc <= spec.colors; ++cc)
        for (int k = 0; k < spec.cell_counts[static_cast<size_t>(cc) - 1]; ++k)
            s.source_dims.push_back(spec.cell_dims[static_cast<size_t>(cc) - 1]);
    for (int d = 1; d <= spec.colors; ++d)
        for (int j = 1; j <= spec.arity(d, c); ++j) {
            s.target_dims.push_back(spec.cell_dims[static_cast<size_t>(d) - 1]);
            s.sel.push_back(colored_cell_index(spec, d, spec.sigma(d, c, j)(i)));
        }
    return s;
}

IndexSelection colored_a_map(const ColoredNetworkSpec& spec, int d, int c, int j) {
    require_colored_table(spec);
    colored_slot_index(spec, c, d, j);  // range checks
    IndexSelection s;
    for (int e = 1; e <= spec.colors; ++e)
        for (int k = 1; k <= spec.arity(e, c); ++k)
            s.source_dims.push_back(spec.cell_dims[static_cast<size_t>(e) - 1]);
    for (int e = 1; e <= spec.colors; ++e)
        for (int k = 1; k <= spec.arity(e, d); ++k) {
            s.target_dims.push_back(spec.cell_dims[static_cast<size_t>(e) - 1]);
            s.sel.push_back(colored_slot_index(spec, c, e, spec.compose_index(e, d, c, k, j)));
        }
    return s;
}

ColoredPolyFamily colored_compose(const ColoredNetworkSpec& spec, const ColoredPolyFamily& f,
                                  const ColoredPolyFamily& g) {
    require_colored_table(spec);
    validate_colored_family(spec, f);
    validate_colored_family(spec, g);
    ColoredPolyFamily out;
    for (int c = 1; c <= spec.colors; ++c) {
        std::vector<PolyMap> args;
        for (int d = 1; d <= spec.colors; ++d)
            for (int j = 1; j <= spec.arity(d, c); ++j)
                args.push_back(compose_selection(g.comp[static_cast<size_t>(d) - 1],
                                                 colored_a_map(spec, d, c, j)));
        out.comp.push_back(substitute(f.comp[static_cast<size_t>(c) - 1], args));
    }
    return out;
}

ColoredPolyFamily colored_bracket(const ColoredNetworkSpec& spec, const ColoredPolyFamily& f,
                                  const ColoredPolyFamily& g) {
    require_colored_table(spec);
    validate_colored_family(spec, f);
    validate_colored_family(spec, g);
    ColoredPolyFamily out;
    for (int c = 1; c <= spec.colors; ++c) {
        Signature sig = colored_profile_sig(spec, c);
        PolyMap acc = zero_map(sig);
        const PolyMap& fc = f.comp[static_cast<size_t>(c) - 1];
        const PolyMap& gc = g.comp[static_cast<size_t>(c) - 1];
        for (int d = 1; d <= spec.colors; ++d) {
            int md = spec.cell_dims[static_cast<size_t>(d) - 1];
            for (int j = 1; j <= spec.arity(d, c); ++j) {
                IndexSelection aj = colored_a_map(spec, d, c, j);
                PolyMap g_aj = compose_selection(g.comp[static_cast<size_t>(d) - 1], aj);
                PolyMap f_aj = compose_selection(f.comp[static_cast<size_t>(d) - 1], aj);
                int slot = colored_slot_index(spec, c, d, j);
                for (int s = 1; s <= md; ++s) {
                    int v = sig.var(slot, s);
                    for (int r = 0; r < sig.out_dim; ++r) {
                        acc.comp[static_cast<size_t>(r)] = poly_add(
                            acc.comp[static_cast<size_t>(r)],
                            poly_sub(poly_mul(poly_partial(fc.comp[static_cast<size_t>(r)], v),
                                              g_aj.comp[static_cast<size_t>(s) - 1]),
                                     poly_mul(poly_partial(gc.comp[static_cast<size_t>(r)], v),
                                              f_aj.comp[static_cast<size_t>(s) - 1])));
                    }
                }
            }
        }
        out.comp.push_back(std::move(acc));
    }
    return out;
}

std::vector<Rat> colored_gamma_eval(const ColoredNetworkSpec& spec, const ColoredPolyFamily& f,
                                    const std::vector<Rat>& x, const std::vector<Rat>& lambda) {
    validate_colored_family(spec, f);
    Signature full = colored_full_sig(spec);
    if (static_cast<int>(x.size()) != full.state_vars())
        throw validation_error("state vector has the wrong length");
    if (static_cast<int>(lambda.size()) != spec.params)
        throw validation_error("parameter vector has the wrong length");
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(full.state_vars()));
    for (int c = 1; c <= spec.colors; ++c)
        for (int i = 1; i <= spec.cell_counts[static_cast<size_t>(c) - 1]; ++i) {
            std::vector<Rat> args;
            for (int d = 1; d <= spec.colors; ++d) {
                int md = spec.cell_dims[static_cast<size_t>(d) - 1];
                for (int j = 1; j <= spec.arity(d, c); ++j) {
                    int off = colored_state_offset(spec, d, spec.sigma(d, c, j)(i));
                    for (int s = 0; s < md; ++s) args.push_back(x[static_cast<size_t>(off + s)]);
                }
            }
            std::vector<Rat> vals = pm_eval(f.comp[static_cast<size_t>(c) - 1], args, lambda);
            for (auto& v : vals) out.push_back(std::move(v));
        }
    return out;
}

std::vector<PolyMap> colored_gamma_symbolic(const ColoredNetworkSpec& spec,
                                            const ColoredPolyFamily& f) {
    validate_colored_family(spec, f);
    std::vector<PolyMap> out;
    for (int c = 1; c <= spec.colors; ++c)
        for (int i = 1; i <= spec.cell_counts[static_cast<size_t>(c) - 1]; ++i)
            out.push_back(compose_selection(f.comp[static_cast<size_t>(c) - 1],
                                            colored_pi(spec, c, i)));
    return out;
}

RationalMatrix colored_gamma_matrix(const ColoredNetworkSpec& spec, const ColoredPolyFamily& f0) {
    validate_colored_family(spec, f0);
    for (int c = 1; c <= spec.colors; ++c) {
        auto grades = grades_present(f0.comp[static_cast<size_t>(c) - 1]);
        if (grades.size() > 1 || (grades.size() == 1 && grades[0] != std::pair<int, int>{0, 0}))
            throw validation_error("gamma matrix needs a linear family");
    }
    Signature full = colored_full_sig(spec);
    const int D = full.state_vars();
    RationalMatrix M(D, D);
    std::vector<PolyMap> cells = colored_gamma_symbolic(spec, f0);
    int row0 = 0;
    for (const auto& cell : cells) {
        for (int r = 0; r < cell.sig.out_dim; ++r) {
            for (const auto& term : cell.comp[static_cast<size_t>(r)]) {
                int var = -1;
                for (size_t v = 0; v < term.mono.size(); ++v)
                    if (term.mono[v] == 1) var = static_cast<int>(v);
                if (var < 0 || var >= D) throw internal_error("nonlinear term in a linear map");
                M.at(row0 + r, var) += term.coeff;
            }
        }
        row0 += cell.sig.out_dim;
    }
    return M;
}

ColoredPolyFamily colored_extend_family(const ColoredNetworkSpec& spec,
                                        const ColoredPolyFamily& f) {
    if (spec.original_counts.empty())
        throw validation_error("network does not record its original arity profile");
    if (static_cast<int>(f.comp.size()) != spec.colors)
        throw validation_error("family must have one function per color");
    ColoredPolyFamily out;
    for (int c = 1; c <= spec.colors; ++c) {
        Signature orig;
        for (int d = 1; d <= spec.colors; ++d)
            for (int j = 0; j < spec.original_counts[static_cast<size_t>(d) - 1][static_cast<size_t>(c) - 1]; ++j)
                orig.slot_dims.push_back(spec.cell_dims[static_cast<size_t>(d) - 1]);
        orig.out_dim = spec.cell_dims[static_cast<size_t>(c) - 1];
        orig.params = spec.params;
        const PolyMap& fc = f.comp[static_cast<size_t>(c) - 1];
        if (fc.sig == colored_profile_sig(spec, c)) {
            out.comp.push_back(fc);
            continue;
        }
        if (!(fc.sig == orig))
            throw validation_error("function of color " + std::to_string(c) +
                                   " does not match the original arity profile");
        IndexSelection widen;
        for (int d = 1; d <= spec.colors; ++d)
            for (int j = 1; j <= spec.arity(d, c); ++j)
                widen.source_dims.push_back(spec.cell_dims[static_cast<size_t>(d) - 1]);
        for (int d = 1; d <= spec.colors; ++d)
            for (int j = 1; j <= spec.original_counts[static_cast<size_t>(d) - 1][static_cast<size_t>(c) - 1]; ++j) {
                widen.target_dims.push_back(spec.cell_dims[static_cast<size_t>(d) - 1]);
                widen.sel.push_back(colored_slot_index(spec, c, d, j));
            }
        out.comp.push_back(compose_selection(fc, widen));
    }
    return out;
}

ColoredSnSplit colored_sn_decompose(const ColoredNetworkSpec& spec, const ColoredPolyFamily& f0) {
    require_colored_table(spec);
    RationalMatrix M = colored_gamma_matrix(spec, f0);
    JordanChevalley jc = jordan_chevalley(M);

    std::vector<GradedBasis> lin;
    int total = 0;
    for (int c = 1; c <= spec.colors; ++c) {
        lin.push_back(make_basis(colored_profile_sig(spec, c), 0, 0));
        total += lin.back().size();
    }
    const int d2 = M.rows * M.cols;
    RationalMatrix sys(d2, total);
    int col = 0;
    for (int c = 1; c <= spec.colors; ++c)
        for (int t = 0; t < lin[static_cast<size_t>(c) - 1].size(); ++t, ++col) {
            ColoredPolyFamily e = zero_colored_family(spec);
            e.comp[static_cast<size_t>(c) - 1] = lin[static_cast<size_t>(c) - 1].entry(t);
            RationalMatrix G = colored_gamma_matrix(spec, e);
            for (int r = 0; r < d2; ++r) sys.at(r, col) = G.a[static_cast<size_t>(r)];
        }
    auto coords = solve(sys, jc.semisimple.a);
    if (!coords)
        throw internal_error("semisimple part is not a colored network map");

    ColoredSnSplit split;
    split.f0 = f0;
    col = 0;
    for (int c = 1; c <= spec.colors; ++c) {
        std::vector<Rat> segment(coords->begin() + col,
                                 coords->begin() + col + lin[static_cast<size_t>(c) - 1].size());
        split.f0_S.comp.push_back(lin[static_cast<size_t>(c) - 1].from_coordinates(segment));
        split.f0_N.comp.push_back(pm_sub(f0.comp[static_cast<size_t>(c) - 1],
                                         split.f0_S.comp.back()));
        col += lin[static_cast<size_t>(c) - 1].size();
    }
    split.witness = jc.witness;
    return split;
}

} // namespace ccnet

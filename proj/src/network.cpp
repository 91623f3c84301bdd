#include "ccnet/network.hpp"

#include <algorithm>
#include <set>

namespace ccnet {

void validate_network(const NetworkSpec& spec) {
    if (spec.cells < 1) throw validation_error("network needs at least one cell");
    if (spec.dim < 1) throw validation_error("cell dimension must be positive");
    if (spec.params < 0) throw validation_error("negative parameter count");
    if (spec.maps.empty()) throw validation_error("network needs at least one map");
    std::set<FiniteMap> seen;
    for (size_t j = 0; j < spec.maps.size(); ++j) {
        if (spec.maps[j].domain() != spec.cells)
            throw validation_error("map #" + std::to_string(j + 1) + " has wrong domain size");
        validate_map(spec.maps[j], spec.cells, "#" + std::to_string(j + 1));
        if (!seen.insert(spec.maps[j]).second)
            throw validation_error("duplicate map " + map_str(spec.maps[j]));
    }
    if (spec.table) {
        if (spec.table->elements != spec.maps)
            throw internal_error("table elements disagree with the map list");
    }
}

NetworkSpec make_network(int cells, int dim, int params,
                         const std::vector<FiniteMap>& maps, bool close) {
    NetworkSpec spec;
    spec.cells = cells;
    spec.dim = dim;
    spec.params = params;
    spec.maps = maps;
    spec.original_n = static_cast<int>(maps.size());
    validate_network(spec);
    if (close) {
        SemigroupTable sg = semigroup_closure(maps);
        spec.maps = sg.elements;
        spec.table = std::move(sg);
    } else {
        // Attach a table when the list happens to be closed already.
        std::set<FiniteMap> have(maps.begin(), maps.end());
        bool closed = true;
        for (const auto& a : maps) {
            for (const auto& b : maps)
                if (!have.count(compose_maps(a, b))) { closed = false; break; }
            if (!closed) break;
        }
        if (closed) spec.table = semigroup_closure(maps);
    }
    validate_network(spec);
    return spec;
}

const SemigroupTable& require_table(const NetworkSpec& spec) {
    if (!spec.table)
        throw validation_error("operation requires a semigroup; complete the network first");
    return *spec.table;
}

Signature network_sig(const NetworkSpec& spec) {
    return homogeneous_sig(spec.arity(), spec.dim, spec.params);
}

Signature full_state_sig(const NetworkSpec& spec) {
    return homogeneous_sig(spec.cells, spec.dim, spec.params);
}

IndexSelection pi(const NetworkSpec& spec, int i) {
    if (i < 1 || i > spec.cells) throw validation_error("pi: cell out of range");
    IndexSelection s;
    s.source_dims.assign(static_cast<size_t>(spec.cells), spec.dim);
    s.target_dims.assign(static_cast<size_t>(spec.arity()), spec.dim);
    s.sel.reserve(spec.maps.size());
    for (const auto& m : spec.maps) s.sel.push_back(m(i));
    return s;
}

IndexSelection a_map(const NetworkSpec& spec, int j) {
    const SemigroupTable& sg = require_table(spec);
    if (j < 1 || j > sg.size()) throw validation_error("A-map: element index out of range");
    IndexSelection s;
    s.source_dims.assign(static_cast<size_t>(sg.size()), spec.dim);
    s.target_dims = s.source_dims;
    s.sel.reserve(static_cast<size_t>(sg.size()));
    for (int k = 1; k <= sg.size(); ++k) s.sel.push_back(sg.compose_index(k, j));
    return s;
}

std::vector<Rat> gamma_eval(const NetworkSpec& spec, const PolyMap& f,
                            const std::vector<Rat>& x, const std::vector<Rat>& lambda) {
    if (!(f.sig == network_sig(spec)))
        throw validation_error("gamma: function signature does not match the network");
    if (static_cast<int>(x.size()) != spec.cells * spec.dim)
        throw validation_error("gamma: state vector has wrong length");
    const int m = spec.dim;
    std::vector<Rat> y;
    y.reserve(x.size());
    std::vector<Rat> args(static_cast<size_t>(spec.arity() * m));
    for (int i = 1; i <= spec.cells; ++i) {
        for (int j = 1; j <= spec.arity(); ++j) {
            int src = spec.maps[static_cast<size_t>(j) - 1](i);
            for (int d = 0; d < m; ++d)
                args[static_cast<size_t>((j - 1) * m + d)] = x[static_cast<size_t>((src - 1) * m + d)];
        }
        std::vector<Rat> val = pm_eval(f, args, lambda);
        y.insert(y.end(), val.begin(), val.end());
    }
    return y;
}

std::vector<PolyMap> gamma_symbolic(const NetworkSpec& spec, const PolyMap& f) {
    if (!(f.sig == network_sig(spec)))
        throw validation_error("gamma: function signature does not match the network");
    std::vector<PolyMap> out;
    out.reserve(static_cast<size_t>(spec.cells));
    for (int i = 1; i <= spec.cells; ++i)
        out.push_back(compose_selection(f, pi(spec, i)));
    return out;
}

RationalMatrix gamma_matrix(const NetworkSpec& spec, const PolyMap& f0) {
    auto grades = grades_present(f0);
    if (grades.size() > 1 || (grades.size() == 1 && grades[0] != std::pair<int, int>{0, 0}))
        throw validation_error("gamma matrix needs a linear homogeneous map");
    std::vector<PolyMap> g = gamma_symbolic(spec, f0);
    const int m = spec.dim;
    const int dim = spec.cells * m;
    RationalMatrix M(dim, dim);
    for (int i = 0; i < spec.cells; ++i)
        for (int d = 0; d < m; ++d) {
            const Poly& row = g[static_cast<size_t>(i)].comp[static_cast<size_t>(d)];
            for (const auto& t : row) {
                int v = -1;
                for (size_t w = 0; w < t.mono.size(); ++w)
                    if (t.mono[w] == 1) { v = static_cast<int>(w); break; }
                if (v < 0 || mono_degree(t.mono) != 1)
                    throw internal_error("gamma matrix: nonlinear term slipped through");
                M.at(i * m + d, v) = t.coeff;
            }
        }
    return M;
}

FundamentalNetwork fundamental_network(const NetworkSpec& spec) {
    const SemigroupTable& sg = require_table(spec);
    FundamentalNetwork fn;
    fn.faithful = is_faithful_tilde(sg);
    fn.net.cells = sg.size();
    fn.net.dim = spec.dim;
    fn.net.params = spec.params;
    fn.net.maps = sg.tilde;
    fn.net.original_n = sg.size();
    if (fn.faithful) {
        // The tilde maps are closed under composition (the tilde assignment is
        // a homomorphism), so the closure returns exactly this list.
        fn.net.table = semigroup_closure(sg.tilde);
        validate_network(fn.net);
    }
    return fn;
}

std::vector<PolyMap> fundamental_components(const NetworkSpec& spec, const PolyMap& f) {
    const SemigroupTable& sg = require_table(spec);
    if (!(f.sig == network_sig(spec)))
        throw validation_error("fundamental components: signature mismatch");
    std::vector<PolyMap> out;
    out.reserve(static_cast<size_t>(sg.size()));
    for (int j = 1; j <= sg.size(); ++j)
        out.push_back(compose_selection(f, a_map(spec, j)));
    return out;
}

NetworkSlaveReduction slave_reduce(const NetworkSpec& spec) {
    validate_network(spec);
    SlaveReduction red = slave_reduce_maps(spec.cells, spec.maps);
    NetworkSlaveReduction out;
    out.kept_cells = red.kept_cells;
    out.map_target = red.map_target;
    out.degenerate = red.degenerate;
    if (red.degenerate) return out;
    out.reduced = make_network(red.reduced_cells, spec.dim, spec.params, red.maps,
                               /*close=*/false);
    return out;
}

PolyMap extend_function(const NetworkSpec& spec, const PolyMap& f) {
    Signature target = network_sig(spec);
    if (f.sig == target) return f;
    if (f.sig.out_dim != spec.dim || f.sig.params != spec.params)
        throw validation_error("extend: function dimension or parameters disagree with the network");
    return extend_arity(f, target.slot_dims);
}

} // namespace ccnet

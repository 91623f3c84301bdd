#include "ccnet/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ccnet {

Partition partition_from_labels(const std::vector<int>& block_of) {
    std::map<int, std::vector<int>> by_label;
    for (size_t i = 0; i < block_of.size(); ++i)
        by_label[block_of[i]].push_back(static_cast<int>(i) + 1);
    Partition p;
    for (auto& [_, cells] : by_label) p.blocks.push_back(std::move(cells));
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return p;
}

std::vector<FiniteMap> network_symmetries(const NetworkSpec& spec) {
    validate_network(spec);
    if (spec.cells > 10)
        throw guard_error("symmetry search is exhaustive and limited to 10 cells");
    std::vector<int> perm(static_cast<size_t>(spec.cells));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<FiniteMap> out;
    do {
        FiniteMap p{perm};
        bool ok = true;
        for (const auto& s : spec.maps)
            if (compose_maps(p, s) != compose_maps(s, p)) { ok = false; break; }
        if (ok) out.push_back(p);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<Partition> balanced_partitions(const NetworkSpec& spec) {
    validate_network(spec);
    if (spec.cells > 12)
        throw guard_error("balanced partition search is exhaustive and limited to 12 cells");
    const int N = spec.cells;
    // Restricted growth strings: label[i] <= 1 + max(label[0..i-1]).
    std::vector<int> label(static_cast<size_t>(N), 1);
    std::vector<Partition> out;
    auto balanced = [&]() {
        for (const auto& s : spec.maps)
            for (int i = 1; i <= N; ++i)
                for (int j = i + 1; j <= N; ++j)
                    if (label[static_cast<size_t>(i) - 1] == label[static_cast<size_t>(j) - 1] &&
                        label[static_cast<size_t>(s(i)) - 1] != label[static_cast<size_t>(s(j)) - 1])
                        return false;
        return true;
    };
    // Enumerate in lexicographic label order.
    auto rec = [&](auto&& self, int i, int maxl) -> void {
        if (i == N) {
            if (balanced()) out.push_back(partition_from_labels(label));
            return;
        }
        for (int v = 1; v <= maxl + 1; ++v) {
            label[static_cast<size_t>(i)] = v;
            self(self, i + 1, std::max(maxl, v));
        }
    };
    rec(rec, 1, 1);  // cell 1 always gets label 1
    std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return a.blocks.size() < b.blocks.size();
    });
    return out;
}

ClosureInvarianceReport closure_invariance_report(const NetworkSpec& spec) {
    validate_network(spec);
    ClosureInvarianceReport rep;
    rep.raw_maps = spec.arity();
    rep.symmetries = network_symmetries(spec);
    rep.partitions = balanced_partitions(spec);

    NetworkSpec closed =
        make_network(spec.cells, spec.dim, spec.params, spec.maps, /*close=*/true);
    rep.closed_maps = closed.arity();
    if (network_symmetries(closed) != rep.symmetries)
        throw internal_error("closure changed the symmetry group");
    if (balanced_partitions(closed) != rep.partitions)
        throw internal_error("closure changed the balanced partitions");
    return rep;
}

std::vector<InputSymmetry> dynamical_input_symmetries(const NetworkSpec& spec) {
    validate_network(spec);
    if (spec.cells > 10)
        throw guard_error("input symmetry search is exhaustive and limited to 10 cells");
    std::map<FiniteMap, int> index;
    for (size_t j = 0; j < spec.maps.size(); ++j)
        index[spec.maps[j]] = static_cast<int>(j) + 1;

    std::vector<int> perm(static_cast<size_t>(spec.cells));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<InputSymmetry> out;
    do {
        FiniteMap p{perm};
        FiniteMap q;
        q.images.reserve(spec.maps.size());
        bool ok = true;
        for (const auto& s : spec.maps) {
            // p o sigma_j = sigma_{q(j)} o p determines q(j) uniquely.
            FiniteMap lhs = compose_maps(p, s);
            // sigma o p: evaluate candidate via p^{-1}: sigma = lhs o p^{-1}.
            FiniteMap target;
            target.images.resize(perm.size());
            for (int i = 1; i <= spec.cells; ++i)
                target.images[static_cast<size_t>(p(i)) - 1] = lhs(i);
            auto it = index.find(target);
            if (it == index.end()) { ok = false; break; }
            q.images.push_back(it->second);
        }
        if (ok) out.push_back({p, q});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

IndexSelection lambda_selection(const NetworkSpec& spec, const FiniteMap& q) {
    if (q.domain() != spec.arity())
        throw validation_error("slot permutation has wrong length");
    IndexSelection s;
    s.source_dims.assign(static_cast<size_t>(spec.arity()), spec.dim);
    s.target_dims = s.source_dims;
    s.sel = q.images;
    validate_selection(s);
    return s;
}

InvariantSubbasis invariant_subbasis(const NetworkSpec& spec,
                                     const std::vector<InputSymmetry>& group, int k, int l) {
    InvariantSubbasis inv;
    inv.basis = make_basis(network_sig(spec), k, l);
    GradedBasis target = make_basis(full_state_sig(spec), k, l);
    const int n = inv.basis.size();
    const int rows_per = target.size();
    RationalMatrix sys(static_cast<int>(group.size()) * spec.cells * rows_per, n);
    for (int col = 0; col < n; ++col) {
        PolyMap b = inv.basis.entry(col);
        int r0 = 0;
        for (const auto& gq : group) {
            PolyMap bl = compose_selection(b, lambda_selection(spec, gq.q));
            for (int i = 1; i <= spec.cells; ++i) {
                IndexSelection pii = pi(spec, i);
                PolyMap diff = pm_sub(compose_selection(bl, pii), compose_selection(b, pii));
                std::vector<Rat> coords = target.coordinates(diff);
                for (int r = 0; r < rows_per; ++r) sys.at(r0 + r, col) = coords[static_cast<size_t>(r)];
                r0 += rows_per;
            }
        }
    }
    inv.vectors = kernel_basis(sys);
    inv.elements.reserve(inv.vectors.size());
    for (const auto& v : inv.vectors) inv.elements.push_back(inv.basis.from_coordinates(v));
    return inv;
}

} // namespace ccnet

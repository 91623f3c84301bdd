#include "ccnet/finmap.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ccnet {

void validate_map(const FiniteMap& f, int codomain, const std::string& name) {
    if (f.domain() == 0) throw validation_error("map " + name + " is empty");
    for (int i = 1; i <= f.domain(); ++i) {
        int v = f(i);
        if (v < 1 || v > codomain) {
            std::ostringstream os;
            os << "map " << name << " sends cell " << i << " to " << v
               << ", outside 1.." << codomain;
            throw validation_error(os.str());
        }
    }
}

FiniteMap compose_maps(const FiniteMap& a, const FiniteMap& b) {
    FiniteMap r;
    r.images.reserve(b.images.size());
    for (int i = 1; i <= b.domain(); ++i) {
        int bi = b(i);
        if (bi < 1 || bi > a.domain())
            throw validation_error("composition: inner image out of outer domain");
        r.images.push_back(a(bi));
    }
    return r;
}

std::string map_str(const FiniteMap& f) {
    std::ostringstream os;
    os << "(";
    for (int i = 1; i <= f.domain(); ++i) {
        if (i > 1) os << ",";
        os << f(i);
    }
    os << ")";
    return os.str();
}

namespace {

// N^N with overflow clamp; only used for the closure guard.
long long pow_clamped(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (1LL << 40)) return 1LL << 40;
        r *= base;
    }
    return r;
}

} // namespace

SemigroupTable semigroup_closure(const std::vector<FiniteMap>& maps) {
    if (maps.empty()) throw validation_error("closure of an empty map list");
    const int N = maps[0].domain();
    for (size_t j = 0; j < maps.size(); ++j) {
        if (maps[j].domain() != N)
            throw validation_error("closure: maps have mixed domain sizes");
        validate_map(maps[j], N, "#" + std::to_string(j + 1));
    }

    std::map<FiniteMap, int> index;   // map -> 1-based element index
    std::vector<FiniteMap> elements;
    for (const auto& m : maps) {
        if (index.count(m))
            throw validation_error("closure: duplicate input map " + map_str(m));
        elements.push_back(m);
        index[m] = static_cast<int>(elements.size());
    }

    const long long bound = pow_clamped(N, N);
    // Round-based breadth-first closure: each round scans all pairs of the
    // elements present when the round started, appending new products in
    // (left index, right index) order.
    size_t settled = 0;  // products among the first `settled` elements are known present
    while (true) {
        size_t count = elements.size();
        if (settled == count) break;
        for (size_t j1 = 0; j1 < count; ++j1) {
            for (size_t j2 = 0; j2 < count; ++j2) {
                if (j1 < settled && j2 < settled) continue;
                FiniteMap prod = compose_maps(elements[j1], elements[j2]);
                if (!index.count(prod)) {
                    elements.push_back(prod);
                    index[prod] = static_cast<int>(elements.size());
                    if (static_cast<long long>(elements.size()) > bound)
                        throw internal_error("closure exceeded N^N elements");
                }
            }
        }
        settled = count;
    }

    SemigroupTable sg;
    sg.elements = std::move(elements);
    const int n = sg.size();
    sg.table.assign(n, std::vector<int>(n, 0));
    for (int j1 = 1; j1 <= n; ++j1)
        for (int j2 = 1; j2 <= n; ++j2) {
            FiniteMap prod = compose_maps(sg.elements[j1 - 1], sg.elements[j2 - 1]);
            auto it = index.find(prod);
            if (it == index.end()) throw internal_error("closure not closed");
            sg.table[j1 - 1][j2 - 1] = it->second;
        }
    sg.tilde.reserve(n);
    for (int j = 1; j <= n; ++j)
        sg.tilde.emplace_back(sg.table[j - 1]);
    return sg;
}

bool is_faithful_tilde(const SemigroupTable& sg) {
    std::set<FiniteMap> seen;
    for (const auto& t : sg.tilde)
        if (!seen.insert(t).second) return false;
    return true;
}

SlaveReduction slave_reduce_maps(int cells, const std::vector<FiniteMap>& maps) {
    for (const auto& m : maps)
        if (m.domain() != cells)
            throw validation_error("slave reduction: map domain mismatch");

    std::vector<int> kept(static_cast<size_t>(cells));
    for (int i = 0; i < cells; ++i) kept[static_cast<size_t>(i)] = i + 1;

    // Iteratively delete cells that are nobody's input, not even their own.
    // Removing a layer can orphan the cells that fed only that layer, so the
    // sweep repeats until stable. Map images over the surviving cells always
    // survive, so restriction is well defined.
    while (!kept.empty()) {
        std::set<int> inputs;
        for (const auto& m : maps)
            for (int c : kept) inputs.insert(m(c));
        std::vector<int> next;
        for (int c : kept)
            if (inputs.count(c)) next.push_back(c);
        if (next.size() == kept.size()) break;
        kept = std::move(next);
    }

    SlaveReduction red;
    red.kept_cells = kept;
    red.reduced_cells = static_cast<int>(kept.size());
    if (kept.empty()) {
        red.degenerate = true;
        red.map_target.assign(maps.size(), 0);
        return red;
    }

    std::vector<int> relabel(static_cast<size_t>(cells) + 1, 0);
    for (size_t i = 0; i < kept.size(); ++i)
        relabel[static_cast<size_t>(kept[i])] = static_cast<int>(i) + 1;

    std::map<FiniteMap, int> index;
    red.map_target.reserve(maps.size());
    for (const auto& m : maps) {
        FiniteMap r;
        r.images.reserve(kept.size());
        for (int c : kept) r.images.push_back(relabel[static_cast<size_t>(m(c))]);
        auto it = index.find(r);
        if (it == index.end()) {
            red.maps.push_back(r);
            int idx = static_cast<int>(red.maps.size());
            index[r] = idx;
            red.map_target.push_back(idx);
        } else {
            red.map_target.push_back(it->second);
        }
    }
    return red;
}

} // namespace ccnet

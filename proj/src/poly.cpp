#include "ccnet/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ccnet {

int mono_degree(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool mono_less(const Mono& a, const Mono& b) {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

int Signature::state_vars() const {
    return std::accumulate(slot_dims.begin(), slot_dims.end(), 0);
}

int Signature::var(int slot, int comp) const {
    int off = 0;
    for (int j = 1; j < slot; ++j) off += slot_dims[static_cast<size_t>(j) - 1];
    return off + comp - 1;
}

bool Signature::uniform() const {
    for (int d : slot_dims)
        if (d != out_dim) return false;
    return true;
}

Signature homogeneous_sig(int n, int m, int p) {
    Signature s;
    s.slot_dims.assign(static_cast<size_t>(n), m);
    s.out_dim = m;
    s.params = p;
    return s;
}

bool PolyMap::is_zero() const {
    for (const auto& c : comp)
        if (!c.empty()) return false;
    return true;
}

PolyMap zero_map(const Signature& sig) {
    PolyMap f;
    f.sig = sig;
    f.comp.assign(static_cast<size_t>(sig.out_dim), Poly{});
    return f;
}

Poly poly_normalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return mono_less(a.mono, b.mono); });
    Poly out;
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && mono_less(a[i].mono, b[j].mono))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || mono_less(b[j].mono, a[i].mono)) {
            out.push_back(b[j++]);
        } else {
            Rat c = a[i].coeff + b[j].coeff;
            if (c != 0) out.push_back({a[i].mono, c});
            ++i, ++j;
        }
    }
    return out;
}

Poly poly_neg(const Poly& a) {
    Poly out = a;
    for (auto& t : out) t.coeff = -t.coeff;
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

Poly poly_scale(const Poly& a, const Rat& c) {
    if (c == 0) return {};
    Poly out = a;
    for (auto& t : out) t.coeff *= c;
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    std::vector<Term> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& ta : a)
        for (const auto& tb : b) {
            Mono m = ta.mono;
            for (size_t v = 0; v < m.size(); ++v) m[v] += tb.mono[v];
            terms.push_back({std::move(m), ta.coeff * tb.coeff});
        }
    return poly_normalize(std::move(terms));
}

Poly poly_const(const Rat& c, int nvars) {
    if (c == 0) return {};
    return {Term{Mono(static_cast<size_t>(nvars), 0), c}};
}

Poly poly_var(int v, int nvars) {
    Mono m(static_cast<size_t>(nvars), 0);
    m[static_cast<size_t>(v)] = 1;
    return {Term{std::move(m), Rat(1)}};
}

Poly poly_pow(const Poly& a, int e, int nvars) {
    Poly out = poly_const(Rat(1), nvars);
    for (int i = 0; i < e; ++i) out = poly_mul(out, a);
    return out;
}

Poly poly_partial(const Poly& a, int v) {
    Poly out;
    for (const auto& t : a) {
        int e = t.mono[static_cast<size_t>(v)];
        if (e == 0) continue;
        Term d{t.mono, t.coeff * e};
        d.mono[static_cast<size_t>(v)] -= 1;
        out.push_back(std::move(d));
    }
    return poly_normalize(std::move(out));
}

Rat poly_eval(const Poly& a, const std::vector<Rat>& x) {
    Rat sum(0);
    for (const auto& t : a) {
        Rat prod = t.coeff;
        for (size_t v = 0; v < t.mono.size(); ++v)
            for (int e = 0; e < t.mono[v]; ++e) prod *= x[v];
        sum += prod;
    }
    return sum;
}

Poly poly_subst(const Poly& a, const std::vector<Poly>& args, int target_vars) {
    // powers[v][e] caches args[v]^e.
    std::vector<std::vector<Poly>> powers(args.size());
    auto power = [&](size_t v, int e) -> const Poly& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(poly_const(Rat(1), target_vars));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(poly_mul(cache.back(), args[v]));
        return cache[static_cast<size_t>(e)];
    };
    Poly out;
    for (const auto& t : a) {
        Poly prod = poly_const(t.coeff, target_vars);
        for (size_t v = 0; v < t.mono.size(); ++v)
            if (t.mono[v] > 0) prod = poly_mul(prod, power(v, t.mono[v]));
        out = poly_add(out, prod);
    }
    return out;
}

int poly_state_degree(const Poly& a, int state_vars) {
    int deg = -1;
    for (const auto& t : a) {
        int d = 0;
        for (int v = 0; v < state_vars; ++v) d += t.mono[static_cast<size_t>(v)];
        deg = std::max(deg, d);
    }
    return deg;
}

static void check_same_sig(const PolyMap& a, const PolyMap& b, const char* op) {
    if (!(a.sig == b.sig) || a.comp.size() != b.comp.size())
        throw validation_error(std::string(op) + ": signature mismatch");
}

PolyMap pm_add(const PolyMap& a, const PolyMap& b) {
    check_same_sig(a, b, "add");
    PolyMap out = a;
    for (size_t c = 0; c < out.comp.size(); ++c)
        out.comp[c] = poly_add(a.comp[c], b.comp[c]);
    return out;
}

PolyMap pm_sub(const PolyMap& a, const PolyMap& b) {
    check_same_sig(a, b, "sub");
    PolyMap out = a;
    for (size_t c = 0; c < out.comp.size(); ++c)
        out.comp[c] = poly_sub(a.comp[c], b.comp[c]);
    return out;
}

PolyMap pm_scale(const PolyMap& a, const Rat& c) {
    PolyMap out = a;
    for (auto& p : out.comp) p = poly_scale(p, c);
    return out;
}

PolyMap pm_partial(const PolyMap& f, int slot, int comp) {
    if (slot < 1 || slot > f.sig.arity())
        throw validation_error("partial: slot out of range");
    if (comp < 1 || comp > f.sig.slot_dims[static_cast<size_t>(slot) - 1])
        throw validation_error("partial: component out of range");
    int v = f.sig.var(slot, comp);
    PolyMap out = f;
    for (auto& p : out.comp) p = poly_partial(p, v);
    return out;
}

std::vector<Rat> pm_eval(const PolyMap& f, const std::vector<Rat>& x,
                         const std::vector<Rat>& lambda) {
    if (static_cast<int>(x.size()) != f.sig.state_vars())
        throw validation_error("evaluate: state vector has wrong length");
    if (static_cast<int>(lambda.size()) != f.sig.params)
        throw validation_error("evaluate: parameter vector has wrong length");
    std::vector<Rat> full = x;
    full.insert(full.end(), lambda.begin(), lambda.end());
    std::vector<Rat> out;
    out.reserve(f.comp.size());
    for (const auto& p : f.comp) out.push_back(poly_eval(p, full));
    return out;
}

void validate_selection(const IndexSelection& s) {
    if (s.sel.size() != s.target_dims.size())
        throw validation_error("selection: selector length differs from target arity");
    for (size_t t = 0; t < s.sel.size(); ++t) {
        int src = s.sel[t];
        if (src < 1 || src > static_cast<int>(s.source_dims.size()))
            throw validation_error("selection: source slot out of range");
        if (s.source_dims[static_cast<size_t>(src) - 1] != s.target_dims[t])
            throw validation_error("selection: slot dimension mismatch");
    }
}

IndexSelection selection_identity(const std::vector<int>& dims) {
    IndexSelection s;
    s.source_dims = dims;
    s.target_dims = dims;
    s.sel.resize(dims.size());
    std::iota(s.sel.begin(), s.sel.end(), 1);
    return s;
}

IndexSelection selection_compose(const IndexSelection& a, const IndexSelection& b) {
    if (b.target_dims != a.source_dims)
        throw validation_error("selection composition: profiles do not match");
    IndexSelection r;
    r.source_dims = b.source_dims;
    r.target_dims = a.target_dims;
    r.sel.reserve(a.sel.size());
    for (int t : a.sel) r.sel.push_back(b.sel[static_cast<size_t>(t) - 1]);
    return r;
}

PolyMap compose_selection(const PolyMap& f, const IndexSelection& a) {
    validate_selection(a);
    if (f.sig.slot_dims != a.target_dims)
        throw validation_error("compose_selection: map does not consume the target profile");
    Signature rsig;
    rsig.slot_dims = a.source_dims;
    rsig.out_dim = f.sig.out_dim;
    rsig.params = f.sig.params;

    const int old_sv = f.sig.state_vars();
    const int new_sv = rsig.state_vars();
    std::vector<int> var_map(static_cast<size_t>(f.sig.total_vars()));
    for (int t = 1; t <= f.sig.arity(); ++t)
        for (int d = 1; d <= f.sig.slot_dims[static_cast<size_t>(t) - 1]; ++d)
            var_map[static_cast<size_t>(f.sig.var(t, d))] =
                rsig.var(a.sel[static_cast<size_t>(t) - 1], d);
    for (int q = 0; q < f.sig.params; ++q)
        var_map[static_cast<size_t>(old_sv + q)] = new_sv + q;

    PolyMap out = zero_map(rsig);
    for (size_t c = 0; c < f.comp.size(); ++c) {
        std::vector<Term> terms;
        terms.reserve(f.comp[c].size());
        for (const auto& t : f.comp[c]) {
            Mono m(static_cast<size_t>(rsig.total_vars()), 0);
            for (size_t v = 0; v < t.mono.size(); ++v)
                m[static_cast<size_t>(var_map[v])] += t.mono[v];
            terms.push_back({std::move(m), t.coeff});
        }
        out.comp[c] = poly_normalize(std::move(terms));
    }
    return out;
}

PolyMap substitute(const PolyMap& f, const std::vector<PolyMap>& slot_args) {
    if (static_cast<int>(slot_args.size()) != f.sig.arity())
        throw validation_error("substitute: argument count differs from arity");
    if (slot_args.empty()) {
        PolyMap out = f;
        return out;
    }
    const Signature& tsig = slot_args[0].sig;
    for (int j = 0; j < f.sig.arity(); ++j) {
        if (!(slot_args[static_cast<size_t>(j)].sig == tsig))
            throw validation_error("substitute: arguments have mixed signatures");
        if (slot_args[static_cast<size_t>(j)].sig.out_dim !=
            f.sig.slot_dims[static_cast<size_t>(j)])
            throw validation_error("substitute: argument dimension mismatch");
    }
    if (tsig.params != f.sig.params)
        throw validation_error("substitute: parameter count mismatch");

    const int tv = tsig.total_vars();
    std::vector<Poly> args;
    args.reserve(static_cast<size_t>(f.sig.total_vars()));
    for (int j = 1; j <= f.sig.arity(); ++j)
        for (int d = 1; d <= f.sig.slot_dims[static_cast<size_t>(j) - 1]; ++d)
            args.push_back(slot_args[static_cast<size_t>(j) - 1].comp[static_cast<size_t>(d) - 1]);
    for (int q = 1; q <= f.sig.params; ++q)
        args.push_back(poly_var(tsig.param_var(q), tv));

    Signature rsig = tsig;
    rsig.out_dim = f.sig.out_dim;
    PolyMap out = zero_map(rsig);
    for (size_t c = 0; c < f.comp.size(); ++c)
        out.comp[c] = poly_subst(f.comp[c], args, tv);
    return out;
}

static std::pair<int, int> term_grade(const Mono& m, int state_vars) {
    int sd = 0, pd = 0;
    for (size_t v = 0; v < m.size(); ++v)
        (static_cast<int>(v) < state_vars ? sd : pd) += m[v];
    return {sd - 1, pd};
}

PolyMap grade_component(const PolyMap& f, int k, int l) {
    const int sv = f.sig.state_vars();
    PolyMap out = zero_map(f.sig);
    for (size_t c = 0; c < f.comp.size(); ++c)
        for (const auto& t : f.comp[c])
            if (term_grade(t.mono, sv) == std::pair<int, int>{k, l})
                out.comp[c].push_back(t);
    return out;
}

PolyMap truncate_grades(const PolyMap& f, int max_k, int max_l) {
    const int sv = f.sig.state_vars();
    PolyMap out = zero_map(f.sig);
    for (size_t c = 0; c < f.comp.size(); ++c)
        for (const auto& t : f.comp[c]) {
            auto [k, l] = term_grade(t.mono, sv);
            if (k <= max_k && l <= max_l) out.comp[c].push_back(t);
        }
    return out;
}

std::vector<std::pair<int, int>> grades_present(const PolyMap& f) {
    std::map<std::pair<int, int>, bool> seen;
    const int sv = f.sig.state_vars();
    for (const auto& c : f.comp)
        for (const auto& t : c) seen[term_grade(t.mono, sv)] = true;
    std::vector<std::pair<int, int>> out;
    for (const auto& [g, _] : seen) out.push_back(g);
    return out;
}

PolyMap extend_arity(const PolyMap& f, const std::vector<int>& new_slot_dims) {
    const auto& old_dims = f.sig.slot_dims;
    if (new_slot_dims.size() < old_dims.size() ||
        !std::equal(old_dims.begin(), old_dims.end(), new_slot_dims.begin()))
        throw validation_error("extend: new profile does not extend the old one");
    Signature rsig = f.sig;
    rsig.slot_dims = new_slot_dims;
    const int old_sv = f.sig.state_vars();
    const int new_sv = rsig.state_vars();
    PolyMap out = zero_map(rsig);
    for (size_t c = 0; c < f.comp.size(); ++c) {
        for (const auto& t : f.comp[c]) {
            Mono m(static_cast<size_t>(rsig.total_vars()), 0);
            std::copy(t.mono.begin(), t.mono.begin() + old_sv, m.begin());
            for (int q = 0; q < f.sig.params; ++q)
                m[static_cast<size_t>(new_sv + q)] = t.mono[static_cast<size_t>(old_sv + q)];
            out.comp[c].push_back({std::move(m), t.coeff});
        }
    }
    return out;
}

// Degree-d exponent vectors over nvars variables, lexicographically larger
// vectors first (so X1^d leads).
static void enumerate_monos(int nvars, int d, Mono& prefix, std::vector<Mono>& out) {
    if (nvars == 0) {
        if (d == 0) out.push_back(prefix);
        return;
    }
    if (nvars == 1) {
        prefix.push_back(d);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        prefix.push_back(e);
        enumerate_monos(nvars - 1, d - e, prefix, out);
        prefix.pop_back();
    }
}

GradedBasis make_basis(const Signature& sig, int k, int l) {
    if (k < -1) throw validation_error("basis: state grade below -1");
    if (l < 0) throw validation_error("basis: negative parameter grade");
    GradedBasis b;
    b.k = k;
    b.l = l;
    b.sig = sig;
    if (k == -1 && l == 0) return b;

    std::vector<Mono> smonos, pmonos;
    Mono prefix;
    enumerate_monos(sig.state_vars(), k + 1, prefix, smonos);
    enumerate_monos(sig.params, l, prefix, pmonos);
    const int entries = static_cast<int>(smonos.size() * pmonos.size()) * sig.out_dim;
    b.comp_of.reserve(static_cast<size_t>(entries));
    b.monos.reserve(static_cast<size_t>(entries));
    for (int c = 1; c <= sig.out_dim; ++c)
        for (const auto& s : smonos)
            for (const auto& p : pmonos) {
                Mono m = s;
                m.insert(m.end(), p.begin(), p.end());
                b.comp_of.push_back(c);
                b.monos.push_back(std::move(m));
            }
    return b;
}

PolyMap GradedBasis::entry(int idx) const {
    PolyMap f = zero_map(sig);
    f.comp[static_cast<size_t>(comp_of[static_cast<size_t>(idx)]) - 1] = {
        Term{monos[static_cast<size_t>(idx)], Rat(1)}};
    return f;
}

std::vector<Rat> GradedBasis::coordinates(const PolyMap& f) const {
    if (!(f.sig == sig))
        throw validation_error("coordinates: signature mismatch");
    std::map<std::pair<int, Mono>, size_t> where;
    for (size_t i = 0; i < monos.size(); ++i)
        where[{comp_of[i], monos[i]}] = i;
    std::vector<Rat> out(monos.size(), Rat(0));
    for (size_t c = 0; c < f.comp.size(); ++c)
        for (const auto& t : f.comp[c]) {
            auto it = where.find({static_cast<int>(c) + 1, t.mono});
            if (it == where.end())
                throw internal_error("coordinates: polynomial leaves the graded basis");
            out[it->second] = t.coeff;
        }
    return out;
}

PolyMap GradedBasis::from_coordinates(const std::vector<Rat>& c) const {
    if (c.size() != monos.size())
        throw validation_error("from_coordinates: wrong length");
    PolyMap f = zero_map(sig);
    for (size_t i = 0; i < monos.size(); ++i)
        if (c[i] != 0)
            f.comp[static_cast<size_t>(comp_of[i]) - 1].push_back({monos[i], c[i]});
    return f;
}

} // namespace ccnet

#include "ccnet/linalg.hpp"

#include <algorithm>

namespace ccnet {

RationalMatrix identity_matrix(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols != b.rows) throw validation_error("matrix product: shape mismatch");
    RationalMatrix r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                if (b.at(k, j) != 0) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

RationalMatrix mat_add(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw validation_error("matrix sum: shape mismatch");
    RationalMatrix r = a;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += b.a[i];
    return r;
}

RationalMatrix mat_sub(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw validation_error("matrix difference: shape mismatch");
    RationalMatrix r = a;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= b.a[i];
    return r;
}

RationalMatrix mat_scale(const RationalMatrix& a, const Rat& c) {
    RationalMatrix r = a;
    for (auto& x : r.a) x *= c;
    return r;
}

bool mat_is_zero(const RationalMatrix& a) {
    return std::all_of(a.a.begin(), a.a.end(), [](const Rat& x) { return x == 0; });
}

std::vector<Rat> mat_apply(const RationalMatrix& a, const std::vector<Rat>& x) {
    if (static_cast<int>(x.size()) != a.cols)
        throw validation_error("matrix apply: length mismatch");
    std::vector<Rat> y(static_cast<size_t>(a.rows), Rat(0));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (a.at(i, j) != 0) y[static_cast<size_t>(i)] += a.at(i, j) * x[static_cast<size_t>(j)];
    return y;
}

std::vector<int> rref_inplace(RationalMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) { p = r; break; }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
        Rat inv = 1 / m.at(row, col);
        for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rat f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(RationalMatrix m) { return static_cast<int>(rref_inplace(m).size()); }

std::vector<std::vector<Rat>> kernel_basis(const RationalMatrix& m) {
    RationalMatrix r = m;
    std::vector<int> pivots = rref_inplace(r);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    std::vector<std::vector<Rat>> vecs;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rat> v(static_cast<size_t>(m.cols), Rat(0));
        v[static_cast<size_t>(free)] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<size_t>(pivots[i])] = -r.at(static_cast<int>(i), free);
        vecs.push_back(std::move(v));
    }
    return echelon_span(vecs, m.cols).basis;
}

EchelonSubspace echelon_span(const std::vector<std::vector<Rat>>& vectors, int dim) {
    RationalMatrix m(static_cast<int>(vectors.size()), dim);
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (static_cast<int>(vectors[i].size()) != dim)
            throw validation_error("echelon span: vector length mismatch");
        for (int j = 0; j < dim; ++j) m.at(static_cast<int>(i), j) = vectors[i][static_cast<size_t>(j)];
    }
    EchelonSubspace s;
    s.pivots = rref_inplace(m);
    for (size_t i = 0; i < s.pivots.size(); ++i) {
        std::vector<Rat> row(static_cast<size_t>(dim));
        for (int j = 0; j < dim; ++j) row[static_cast<size_t>(j)] = m.at(static_cast<int>(i), j);
        s.basis.push_back(std::move(row));
    }
    return s;
}

std::vector<Rat> EchelonSubspace::reduce(const std::vector<Rat>& v) const {
    std::vector<Rat> r = v;
    for (size_t i = 0; i < basis.size(); ++i) {
        const Rat& c = r[static_cast<size_t>(pivots[i])];
        if (c == 0) continue;
        Rat f = c;  // basis rows have unit pivots
        for (size_t j = 0; j < r.size(); ++j)
            if (basis[i][j] != 0) r[j] -= f * basis[i][j];
    }
    return r;
}

bool EchelonSubspace::contains(const std::vector<Rat>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; });
}

std::optional<std::vector<Rat>> solve(const RationalMatrix& A, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != A.rows)
        throw validation_error("solve: right-hand side length mismatch");
    RationalMatrix aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[static_cast<size_t>(i)];
    }
    std::vector<int> pivots = rref_inplace(aug);
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
    std::vector<Rat> x(static_cast<size_t>(A.cols), Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i)
        x[static_cast<size_t>(pivots[i])] = aug.at(static_cast<int>(i), A.cols);
    return x;
}

UPoly upoly_trim(UPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int upoly_deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly upoly_add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return upoly_trim(std::move(r));
}

UPoly upoly_sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return upoly_trim(std::move(r));
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return upoly_trim(std::move(r));
}

UPoly upoly_rem(UPoly a, const UPoly& b) {
    if (b.empty()) throw validation_error("polynomial remainder by zero");
    a = upoly_trim(std::move(a));
    while (upoly_deg(a) >= upoly_deg(b)) {
        Rat f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a = upoly_trim(std::move(a));
    }
    return a;
}

UPoly upoly_divexact(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw validation_error("polynomial division by zero");
    UPoly rem = upoly_trim(a);
    UPoly q(rem.size(), Rat(0));
    while (upoly_deg(rem) >= upoly_deg(b)) {
        Rat f = rem.back() / b.back();
        size_t shift = rem.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
        rem = upoly_trim(std::move(rem));
    }
    if (!rem.empty()) throw internal_error("inexact polynomial division");
    return upoly_trim(std::move(q));
}

UPoly upoly_monic(UPoly p) {
    p = upoly_trim(std::move(p));
    if (p.empty()) return p;
    Rat inv = 1 / p.back();
    for (auto& c : p) c *= inv;
    return p;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    a = upoly_trim(std::move(a));
    b = upoly_trim(std::move(b));
    while (!b.empty()) {
        UPoly r = upoly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return upoly_monic(std::move(a));
}

UPoly upoly_deriv(const UPoly& p) {
    UPoly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<long>(i));
    return upoly_trim(std::move(r));
}

Rat upoly_eval(const UPoly& p, const Rat& x) {
    Rat r(0);
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

RationalMatrix upoly_eval_matrix(const UPoly& p, const RationalMatrix& m) {
    if (m.rows != m.cols) throw validation_error("polynomial of a non-square matrix");
    RationalMatrix r(m.rows, m.cols);
    for (size_t i = p.size(); i-- > 0;) {
        r = mat_mul(r, m);
        for (int d = 0; d < m.rows; ++d) r.at(d, d) += p[i];
    }
    return r;
}

UPoly minimal_polynomial(const RationalMatrix& m) {
    if (m.rows != m.cols) throw validation_error("minimal polynomial of a non-square matrix");
    const int n = m.rows;
    const int nn = n * n;
    // Flattened powers I, M, M^2, ... until the first linear dependence.
    std::vector<std::vector<Rat>> powers;
    RationalMatrix p = identity_matrix(n);
    for (int d = 0;; ++d) {
        powers.push_back(p.a);
        RationalMatrix sys(nn, d + 1);
        for (int c = 0; c <= d; ++c)
            for (int r = 0; r < nn; ++r) sys.at(r, c) = powers[static_cast<size_t>(c)][static_cast<size_t>(r)];
        if (rank(sys) <= d) {
            // M^d depends on lower powers: solve for the combination.
            RationalMatrix lower(nn, d);
            for (int c = 0; c < d; ++c)
                for (int r = 0; r < nn; ++r) lower.at(r, c) = powers[static_cast<size_t>(c)][static_cast<size_t>(r)];
            auto combo = solve(lower, powers.back());
            if (!combo) throw internal_error("minimal polynomial: dependent power not solvable");
            UPoly mp(static_cast<size_t>(d) + 1, Rat(0));
            for (int i = 0; i < d; ++i) mp[static_cast<size_t>(i)] = -(*combo)[static_cast<size_t>(i)];
            mp[static_cast<size_t>(d)] = 1;
            return mp;
        }
        if (d == n) throw internal_error("minimal polynomial exceeded the dimension");
        p = mat_mul(p, m);
    }
}

UPoly square_free_part(const UPoly& p) {
    UPoly d = upoly_deriv(p);
    if (d.empty()) return upoly_monic(p);
    return upoly_monic(upoly_divexact(p, upoly_gcd(p, d)));
}

bool is_nilpotent(const RationalMatrix& m) {
    if (m.rows != m.cols) return false;
    RationalMatrix p = m;
    for (int i = 0; i < m.rows; ++i) {
        if (mat_is_zero(p)) return true;
        p = mat_mul(p, m);
    }
    return mat_is_zero(p);
}

namespace {

// Inverse of a modulo mu via the extended Euclidean algorithm.
UPoly upoly_invmod(const UPoly& a, const UPoly& mu) {
    UPoly r0 = mu, r1 = upoly_rem(a, mu);
    UPoly t0 = {}, t1 = {Rat(1)};
    while (!r1.empty()) {
        // r0 = q r1 + r2
        UPoly q;
        {
            UPoly rem = r0;
            q.assign(rem.size(), Rat(0));
            while (upoly_deg(rem) >= upoly_deg(r1)) {
                Rat f = rem.back() / r1.back();
                size_t shift = rem.size() - r1.size();
                q[shift] = f;
                for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= f * r1[i];
                rem = upoly_trim(std::move(rem));
            }
            q = upoly_trim(std::move(q));
            r0 = std::move(r1);
            r1 = std::move(rem);
        }
        UPoly t2 = upoly_sub(t0, upoly_mul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (upoly_deg(r0) != 0)
        throw internal_error("polynomial not invertible modulo the minimal polynomial");
    Rat inv = 1 / r0[0];
    for (auto& c : t0) c *= inv;
    return upoly_rem(std::move(t0), mu);
}

UPoly upoly_compose_mod(const UPoly& p, const UPoly& s, const UPoly& mu) {
    UPoly r;
    for (size_t i = p.size(); i-- > 0;) {
        r = upoly_rem(upoly_mul(r, s), mu);
        r = upoly_add(r, {p[i]});
    }
    return r;
}

} // namespace

JordanChevalley jordan_chevalley(const RationalMatrix& m) {
    if (m.rows != m.cols) throw validation_error("decomposition of a non-square matrix");
    UPoly mu = minimal_polynomial(m);
    UPoly sf = square_free_part(mu);
    UPoly sfd = upoly_deriv(sf);

    // Newton iteration in Q[x]/(mu), starting at s = x. The multiplicity of
    // any root of mu is at most deg mu, so convergence takes at most
    // ceil(log2(deg mu)) doublings.
    UPoly s = {Rat(0), Rat(1)};
    int bound = 1;
    for (int t = upoly_deg(mu); (1 << bound) < t; ++bound) {}
    ++bound;
    for (int it = 0;; ++it) {
        UPoly val = upoly_compose_mod(sf, s, mu);
        if (val.empty()) break;
        if (it >= bound) throw internal_error("semisimple-part iteration failed to converge");
        UPoly dval = upoly_compose_mod(sfd, s, mu);
        s = upoly_rem(upoly_sub(s, upoly_mul(val, upoly_invmod(dval, mu))), mu);
    }

    // Normalize the witness to zero constant term; when 0 is an eigenvalue
    // this already holds, otherwise shift by a multiple of mu.
    if (!s.empty() && s[0] != 0) {
        Rat mu0 = upoly_eval(mu, Rat(0));
        if (mu0 == 0) throw internal_error("witness with constant term despite eigenvalue zero");
        s = upoly_sub(s, upoly_trim([&] {
            UPoly shifted = mu;
            Rat f = s[0] / mu0;
            for (auto& c : shifted) c *= f;
            return shifted;
        }()));
    }

    JordanChevalley jc;
    jc.witness = s;
    jc.semisimple = upoly_eval_matrix(s, m);
    jc.nilpotent = mat_sub(m, jc.semisimple);
    return jc;
}

} // namespace ccnet

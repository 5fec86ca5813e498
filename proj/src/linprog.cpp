#include "gkz/linprog.hpp"

#include <algorithm>
#include <map>

namespace gkz {

namespace {

// scale so the first nonzero coefficient is +-1; merge duplicates keeping the
// tightest right-hand side
std::vector<LinIneq> simplify(std::vector<LinIneq> sys) {
    std::map<QVec, std::pair<Rat, bool>> best;
    std::vector<LinIneq> trivial;
    for (auto& q : sys) {
        Rat scale = 0;
        for (const auto& c : q.a)
            if (c != 0) { scale = (c > 0 ? c : Rat(-c)); break; }
        if (scale == 0) {
            trivial.push_back(q);  // 0 >= b constraint, keep for feasibility check
            continue;
        }
        QVec a = q.a;
        for (auto& c : a) c /= scale;
        Rat b = q.b / scale;
        auto it = best.find(a);
        if (it == best.end())
            best[a] = {b, q.strict};
        else if (b > it->second.first || (b == it->second.first && q.strict))
            it->second = {b, q.strict};
    }
    std::vector<LinIneq> out;
    for (auto& [a, rb] : best) out.push_back({a, rb.first, rb.second});
    for (auto& q : trivial) out.push_back(q);
    return out;
}

} // namespace

std::optional<QVec> fm_feasible(std::vector<LinIneq> system, int nvars) {
    // eliminate variables from the back, remembering each layer for back-substitution
    std::vector<std::vector<LinIneq>> layers;
    layers.push_back(simplify(std::move(system)));
    for (int k = nvars - 1; k >= 0; --k) {
        const auto& cur = layers.back();
        std::vector<LinIneq> lower, upper, rest;
        for (const auto& q : cur) {
            if (q.a[k] > 0) lower.push_back(q);
            else if (q.a[k] < 0) upper.push_back(q);
            else rest.push_back(q);
        }
        for (const auto& lo : lower)
            for (const auto& up : upper) {
                // lo: a x >= b with a_k > 0  -> x_k >= (b - rest)/a_k
                // up: a x >= b with a_k < 0  -> x_k <= ...
                Rat cl = lo.a[k], cu = -up.a[k];
                LinIneq comb;
                comb.a.assign(nvars, Rat(0));
                for (int j = 0; j < nvars; ++j) comb.a[j] = lo.a[j] * cu + up.a[j] * cl;
                comb.a[k] = 0;
                comb.b = lo.b * cu + up.b * cl;
                comb.strict = lo.strict || up.strict;
                rest.push_back(comb);
            }
        layers.push_back(simplify(std::move(rest)));
    }
    // constant layer: every constraint reads 0 >= b
    for (const auto& q : layers.back()) {
        if (q.strict ? !(q.b < 0) : !(q.b <= 0)) return std::nullopt;
    }
    // back-substitute
    QVec x(nvars, Rat(0));
    for (int k = 0; k < nvars; ++k) {
        const auto& layer = layers[nvars - 1 - k];  // layer with variables 0..k alive
        bool has_lo = false, has_up = false, lo_strict = false, up_strict = false;
        Rat lo, up;
        for (const auto& q : layer) {
            if (q.a[k] == 0) continue;
            Rat bound = q.b;
            for (int j = 0; j < k; ++j) bound -= q.a[j] * x[j];
            bound /= q.a[k];
            if (q.a[k] > 0) {
                if (!has_lo || bound > lo || (bound == lo && q.strict)) { lo = bound; lo_strict = q.strict; }
                has_lo = true;
            } else {
                if (!has_up || bound < up || (bound == up && q.strict)) { up = bound; up_strict = q.strict; }
                has_up = true;
            }
        }
        if (has_lo && has_up) {
            if (lo == up) x[k] = lo;  // feasibility guarantees non-strict on both sides
            else x[k] = (lo + up) / 2;
        } else if (has_lo) {
            x[k] = lo_strict ? lo + 1 : lo;
        } else if (has_up) {
            x[k] = up_strict ? up - 1 : up;
        } else {
            x[k] = 0;
        }
    }
    return x;
}

std::optional<ZVec> find_positive_functional(const IntMatrix& columns) {
    int d = columns.rows(), n = columns.cols();
    std::vector<LinIneq> sys;
    for (int j = 0; j < n; ++j) {
        LinIneq q;
        q.a = to_qvec(columns.column(j));
        q.b = 1;
        sys.push_back(q);
    }
    auto x = fm_feasible(std::move(sys), d);
    if (!x) return std::nullopt;
    Int lcm = 1;
    for (const auto& c : *x) lcm = lcm / gcd_int(lcm, den(c)) * den(c);
    ZVec h(d);
    for (int i = 0; i < d; ++i) h[i] = num((*x)[i]) * (lcm / den((*x)[i]));
    return h;
}

bool in_rational_cone(const IntMatrix& G, const QVec& v) {
    int d = G.rows(), n = G.cols();
    // variables lambda_1..lambda_n >= 0 with G lambda = v
    std::vector<LinIneq> sys;
    for (int j = 0; j < n; ++j) {
        LinIneq q;
        q.a.assign(n, Rat(0));
        q.a[j] = 1;
        q.b = 0;
        sys.push_back(q);
    }
    for (int i = 0; i < d; ++i) {
        LinIneq ge, le;
        ge.a.assign(n, Rat(0));
        le.a.assign(n, Rat(0));
        for (int j = 0; j < n; ++j) {
            ge.a[j] = Rat(G.at(i, j));
            le.a[j] = Rat(-G.at(i, j));
        }
        ge.b = v[i];
        le.b = -v[i];
        sys.push_back(ge);
        sys.push_back(le);
    }
    return fm_feasible(std::move(sys), n).has_value();
}

bool in_half_open_zonotope(const IntMatrix& G, const ZVec& v) {
    int d = G.rows(), n = G.cols();
    std::vector<LinIneq> sys;
    for (int j = 0; j < n; ++j) {
        LinIneq lo, hi;
        lo.a.assign(n, Rat(0));
        lo.a[j] = 1;
        lo.b = 0;
        hi.a.assign(n, Rat(0));
        hi.a[j] = -1;
        hi.b = -1;
        hi.strict = true;  // lambda_j < 1
        sys.push_back(lo);
        sys.push_back(hi);
    }
    for (int i = 0; i < d; ++i) {
        LinIneq ge, le;
        ge.a.assign(n, Rat(0));
        le.a.assign(n, Rat(0));
        for (int j = 0; j < n; ++j) {
            ge.a[j] = Rat(G.at(i, j));
            le.a[j] = Rat(-G.at(i, j));
        }
        ge.b = Rat(v[i]);
        le.b = Rat(-v[i]);
        sys.push_back(ge);
        sys.push_back(le);
    }
    return fm_feasible(std::move(sys), n).has_value();
}

} // namespace gkz

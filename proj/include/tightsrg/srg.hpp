#pragma once

// Exact arithmetic on strongly-regular-graph parameter sets.
//
// A primitive SRG with parameters (v,k,lambda,mu) has integer eigenvalues
// k > e+ > 0 > e- (conference graphs excluded) with multiplicities m+, m-.
// The engine is restricted to the "tight" case where Hoffman's ratio bound
// equals the inertia bound:
//
//     v e- = m- (e- - k)
//
// In that case all parameters are rational functions of (e+, e-):
//
//     k  = ((e-)^2 - e-e+) / (e+ + 1)
//     mu = (e-(e+)^2 + (e-)^2) / (e+ + 1)
//     m- = ((e+)^2 + e-e+ + e+ - (e-)^2) / ((e+)^2 + e-)
//     v  = (2e+ - e- + 1)((e+)^2 + e-e+ + e+ - (e-)^2) / ((e+ + 1)((e+)^2 + e-))
//
// and the Hoffman bound v e-/(e- - k) equals m- exactly.

#include <algorithm>
#include <future>
#include <vector>

#include "tightsrg/arith.hpp"
#include "tightsrg/errors.hpp"

namespace tightsrg {

struct SrgParams {
    Int v;       // vertex count
    Int k;       // degree
    Int lambda;  // common neighbours of adjacent pairs
    Int mu;      // common neighbours of non-adjacent pairs

    bool operator==(const SrgParams&) const = default;

    // k(k - lambda - 1) = (v - k - 1) mu
    bool satisfies_identity() const {
        return k * (k - lambda - 1) == (v - k - 1) * mu;
    }
};

struct Spectrum {
    Int e_plus;   // second-largest eigenvalue, > 0
    Int e_minus;  // smallest eigenvalue, < 0
    Int m_plus;   // multiplicity of e_plus
    Int m_minus;  // multiplicity of e_minus

    bool operator==(const Spectrum&) const = default;
};

// A parameter set satisfying the tightness condition, keyed by (e+, e-).
struct TightParams {
    SrgParams params;
    Spectrum spectrum;
    Int hoffman;  // Hoffman bound value; equals spectrum.m_minus

    bool operator==(const TightParams&) const = default;
};

// Integer eigenvalues and multiplicities of a primitive SRG.
// Throws IdentityViolated, NotPrimitive, or NonIntegralSpectrum (the
// conference-graph case is rejected rather than approximated).
inline Spectrum spectrum_of(const SrgParams& p) {
    if (!p.satisfies_identity())
        throw IdentityViolated("k(k-lambda-1) != (v-k-1)mu for (" + p.v.str() + "," +
                               p.k.str() + "," + p.lambda.str() + "," + p.mu.str() + ")");
    if (p.mu <= 0 || p.mu >= p.k)
        throw NotPrimitive("mu = " + p.mu.str() + " outside (0, k)");

    // eigenvalues are the roots of x^2 - (lambda-mu)x - (k-mu)
    Int tr = p.lambda - p.mu;
    Int disc = tr * tr + 4 * (p.k - p.mu);
    Int root;
    if (!is_perfect_square(disc, &root))
        throw NonIntegralSpectrum("discriminant " + disc.str() + " is not a perfect square");
    // disc == tr^2 (mod 2), so root and tr always share parity
    Spectrum s;
    s.e_plus = (tr + root) / 2;
    s.e_minus = (tr - root) / 2;

    Int num = (s.e_minus + 1) * p.k * (p.k - s.e_minus);
    Int den = p.mu * (s.e_minus - s.e_plus);
    if (!divides(den, num))
        throw NonIntegralSpectrum("multiplicity m+ = " + num.str() + "/" + den.str() +
                                  " is not an integer");
    s.m_plus = num / den;
    s.m_minus = p.v - 1 - s.m_plus;
    if (s.m_plus < 1 || s.m_minus < 1)
        throw NonIntegralSpectrum("non-positive multiplicity");
    return s;
}

// Evaluates the closed forms for (v,k,lambda,mu,m-) at integer (e+, e-).
// Throws NonIntegral when any derived value is fractional, NotPrimitive when
// mu falls outside (0,k) or the eigenvalues are out of range, and
// NegativeLambda for the rare integral-but-infeasible sets (e.g. (5,-27)).
inline TightParams params_from_eigenvalues(const Int& e_plus, const Int& e_minus) {
    if (e_plus < 1 || e_minus > -2)
        throw NotPrimitive("require e+ >= 1 and e- <= -2, got (" + e_plus.str() + "," +
                           e_minus.str() + ")");
    const Int a = e_plus;
    const Int b = -e_minus;

    Int num_k = b * b + a * b;
    if (!divides(a + 1, num_k))
        throw NonIntegral("k = " + num_k.str() + "/" + Int(a + 1).str());
    Int k = num_k / (a + 1);

    Int num_mu = b * b - a * a * b;
    if (!divides(a + 1, num_mu))
        throw NonIntegral("mu = " + num_mu.str() + "/" + Int(a + 1).str());
    Int mu = num_mu / (a + 1);
    if (mu <= 0 || mu >= k)
        throw NotPrimitive("mu = " + mu.str() + " outside (0, k)");

    Int lambda = mu + a - b;
    if (lambda < 0)
        throw NegativeLambda("lambda = " + lambda.str() + " for (e+,e-) = (" + a.str() +
                             ",-" + b.str() + ")");

    Int num_m = a * a - a * b + a - b * b;  // < 0 here
    Int den_m = a * a - b;                  // < 0 since mu > 0 forces b > a^2
    if (!divides(den_m, num_m))
        throw NonIntegral("m- = " + num_m.str() + "/" + den_m.str());
    Int m_minus = num_m / den_m;

    Int num_v = (2 * a + b + 1) * num_m;
    Int den_v = (a + 1) * den_m;
    if (!divides(den_v, num_v))
        throw NonIntegral("v = " + num_v.str() + "/" + den_v.str());
    Int v = num_v / den_v;

    TightParams t;
    t.params = SrgParams{v, k, lambda, mu};
    t.spectrum = Spectrum{a, e_minus, v - 1 - m_minus, m_minus};
    t.hoffman = m_minus;

    if (t.spectrum.m_plus < 1)
        throw NonIntegral("m+ = " + t.spectrum.m_plus.str());
    if (!t.params.satisfies_identity())
        throw IdentityViolated("derived parameters violate the SRG identity");
    if (v * e_minus != m_minus * (e_minus - k))
        throw IdentityViolated("derived parameters are not tight");
    return t;
}

// Exact test of v e- = m-(e- - k); propagates spectrum errors.
inline bool is_tight(const SrgParams& p) {
    Spectrum s = spectrum_of(p);
    return p.v * s.e_minus == s.m_minus * (s.e_minus - p.k);
}

// v e- / (e- - k) as an exact rational.
inline Rat hoffman_bound(const SrgParams& p) {
    Spectrum s = spectrum_of(p);
    return make_rat(p.v * s.e_minus, s.e_minus - p.k);
}

namespace detail {

// One e+ column of the scan. Feasibility needs lambda >= 0, i.e. b >= a^2+a,
// and every tight set satisfies v > b^2/(a+1), which truncates the b loop;
// the inequality is re-checked on every candidate produced.
inline void scan_eplus_column(const Int& a, const Int& v_min, const Int& v_max,
                              std::vector<TightParams>& out) {
    for (Int b = a * a + a; b * b <= (a + 1) * v_max; ++b) {
        TightParams t;
        try {
            t = params_from_eigenvalues(a, -b);
        } catch (const Error&) {
            continue;
        }
        if ((a + 1) * t.params.v <= b * b)
            throw IdentityViolated("scan bound v > (e-)^2/(e+ + 1) violated at (" +
                                   a.str() + ",-" + b.str() + ")");
        if (t.params.v >= v_min && t.params.v <= v_max) out.push_back(t);
    }
}

}  // namespace detail

// Complete list of tight parameter sets with v in [v_min, v_max] and
// e+ >= e_plus_min, sorted by (v, k). The loop bounds follow from
// v > (e-)^2/(e+ + 1) on the feasible region (checked per candidate), which
// gives b <= sqrt((a+1) v_max) and a minimal achievable v above a^4/(a+1).
inline std::vector<TightParams> scan_tight_parameters(const Int& v_min, const Int& v_max,
                                                      const Int& e_plus_min,
                                                      int threads = 1) {
    if (v_min > v_max) throw Error("empty range: v_min > v_max");
    if (e_plus_min < 1) throw Error("e_plus_min must be >= 1");

    std::vector<Int> columns;
    for (Int a = e_plus_min; a * a * a * a < v_max * (a + 1); ++a) columns.push_back(a);

    std::vector<TightParams> rows;
    if (threads > 1) {
        std::vector<std::future<std::vector<TightParams>>> futs;
        for (const Int& a : columns)
            futs.push_back(std::async(std::launch::async, [&, a] {
                std::vector<TightParams> part;
                detail::scan_eplus_column(a, v_min, v_max, part);
                return part;
            }));
        for (auto& f : futs) {
            auto part = f.get();
            rows.insert(rows.end(), part.begin(), part.end());
        }
    } else {
        for (const Int& a : columns) detail::scan_eplus_column(a, v_min, v_max, rows);
    }
    std::sort(rows.begin(), rows.end(), [](const TightParams& x, const TightParams& y) {
        if (x.params.v != y.params.v) return x.params.v < y.params.v;
        return x.params.k < y.params.k;
    });
    return rows;
}

}  // namespace tightsrg

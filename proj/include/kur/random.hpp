#pragma once

#include <algorithm>
#include <random>

#include "kur/calculus.hpp"
#include "kur/forms.hpp"

namespace kur {

/// Deterministic generator for fuzz inputs.  All draws go through raw
/// mt19937_64 output (std distributions are implementation-defined), so the
/// same seed yields the same stream on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }
    int range(int lo, int hi) { // inclusive
        return lo + (int)(next() % (uint64_t)(hi - lo + 1));
    }
    bool chance(int percent) { return range(1, 100) <= percent; }

    Rat rat() {
        int num = range(-3, 3);
        if (num == 0) num = 1;
        int den = chance(30) ? 2 : 1;
        Rat r(num, den);
        if (chance(25)) r = r * Rat::i();
        return r;
    }

    Fn fn(const Geometry& g) {
        int terms = range(1, 2);
        Fn out = Fn::zero(g);
        for (int t = 0; t < terms; ++t) {
            if (g.ring == RingKind::Chart) {
                ChartMono m(2 * g.n, 0);
                int deg = range(0, 2);
                for (int d = 0; d < deg; ++d) m[range(0, 2 * g.n - 1)] += 1;
                out = out + Fn::chartMonomial(g, m, rat());
            } else {
                TorusFreq f(2 * g.n, GaussInt{});
                for (int j = 0; j < g.n; ++j) {
                    int l = range(-1, 1), k = range(-1, 1);
                    f[j] = GaussInt{l, k};          // alpha_j = l + ik
                    f[g.n + j] = GaussInt{-l, k};   // beta_j = -l + ik
                }
                out = out + Fn::character(g, f, rat());
            }
        }
        return out;
    }

    FnSeries fnSeries(const Geometry& g, bool inMaximal) {
        FnSeries s;
        int parts = range(1, 2);
        for (int p = 0; p < parts; ++p) {
            TMono mono(g.m, 0);
            int lo = inMaximal ? 1 : 0;
            int deg = range(lo, std::min(2, g.N));
            for (int d = 0; d < deg; ++d) mono[range(0, g.m - 1)] += 1;
            s.add(mono, fn(g));
        }
        return s;
    }

    /// Random canonical form of bidegree (p,q); vector-valued when
    /// valued, with coefficients in m when inMaximal.
    VForm form(const Geometry& g, int p, int q, bool valued, bool inMaximal = false,
               int maxTerms = 3) {
        VForm out(g);
        int terms = range(1, maxTerms);
        for (int t = 0; t < terms; ++t) {
            FormKey key;
            key.holo = subset(g.n, p);
            key.anti = subset(g.n, q);
            key.vec = valued ? range(1, g.n) : 0;
            out.addCanonical(key, fnSeries(g, inMaximal));
        }
        return out;
    }

    /// (0,0) vector field with coefficients in m (gauge generator).
    VForm vectorField(const Geometry& g) { return form(g, 0, 0, true, true, 2); }

    /// Torus Dolbeault cocycle of bidegree (0,1) with tangent values:
    /// harmonic constants plus delbar-exact terms delbar(f (x) d_a); used to
    /// seed the Maurer-Cartan solver.  When `values` is nonempty the frame
    /// indices are drawn from it.
    VForm cocycleSeed(const Geometry& g, const std::vector<int>& values = {}) {
        auto pickValue = [&]() {
            if (values.empty()) return range(1, g.n);
            return values[range(0, (int)values.size() - 1)];
        };
        VForm seed(g);
        int harm = range(1, 2);
        for (int t = 0; t < harm; ++t) {
            FormKey key;
            key.anti = {range(1, g.n)};
            key.vec = pickValue();
            seed.addCanonical(key, FnSeries::make(tmonoOne(g.m), Fn::constant(g, rat())));
        }
        int exact = range(0, 2);
        for (int t = 0; t < exact; ++t) {
            VForm potential(g);
            FormKey key;
            key.vec = pickValue();
            potential.addCanonical(key, FnSeries::make(tmonoOne(g.m), fn(g)));
            seed = seed + exterior(potential, ExtKind::Delbar);
        }
        return seed;
    }

private:
    std::vector<int> subset(int n, int size) {
        std::vector<int> pool;
        for (int j = 1; j <= n; ++j) pool.push_back(j);
        // Deterministic Fisher-Yates.
        for (int j = n - 1; j > 0; --j) std::swap(pool[j], pool[range(0, j)]);
        pool.resize(std::min(size, n));
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    std::mt19937_64 eng_;
};

} // namespace kur

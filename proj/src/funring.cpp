#include "kur/funring.hpp"

#include <numeric>

#include "kur/errors.hpp"

namespace kur {

std::string Geometry::str() const {
    std::string out = ring == RingKind::Chart ? "chart" : "torus";
    out += "(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",N=" + std::to_string(N) + ")";
    return out;
}

Geometry chartGeometry(int n, int m, int N) { return Geometry{RingKind::Chart, n, m, N}; }
Geometry torusGeometry(int n, int m, int N) { return Geometry{RingKind::Torus, n, m, N}; }

bool latticeAdmissible(const TorusFreq& f, int n) {
    if ((int)f.size() != 2 * n) return false;
    for (int j = 0; j < n; ++j)
        if (f[n + j] != -f[j].conj()) return false;
    return true;
}

bool ChartMonoLess::operator()(const ChartMono& a, const ChartMono& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

bool TorusFreqLess::operator()(const TorusFreq& a, const TorusFreq& b) const {
    auto grade = [](const TorusFreq& f) {
        int g = 0;
        for (auto& e : f) g += std::abs(e.re) + std::abs(e.im);
        return g;
    };
    int ga = grade(a), gb = grade(b);
    if (ga != gb) return ga < gb;
    return a < b;
}

Fn Fn::zero(const Geometry& g) { return Fn(g.ring, g.n); }

Fn Fn::constant(const Geometry& g, const Rat& c) {
    Fn f(g.ring, g.n);
    if (g.ring == RingKind::Chart)
        f.addChart(ChartMono(2 * g.n, 0), c);
    else
        f.addTorus(TorusFreq(2 * g.n, GaussInt{}), c);
    return f;
}

Fn Fn::coordinate(const Geometry& g, int j, DerKind kind) {
    if (g.ring != RingKind::Chart) throw WrongGeometry("coordinate monomials need the chart ring");
    if (j < 1 || j > g.n) throw TypeError("coordinate index out of range");
    ChartMono m(2 * g.n, 0);
    m[(kind == DerKind::Holo ? 0 : g.n) + (j - 1)] = 1;
    return chartMonomial(g, m, Rat(1));
}

Fn Fn::chartMonomial(const Geometry& g, const ChartMono& mono, const Rat& c) {
    if (g.ring != RingKind::Chart) throw WrongGeometry("chart monomial in torus ring");
    Fn f(g.ring, g.n);
    f.addChart(mono, c);
    return f;
}

Fn Fn::character(const Geometry& g, const TorusFreq& freq, const Rat& c) {
    if (g.ring != RingKind::Torus) throw WrongGeometry("character in chart ring");
    if (!latticeAdmissible(freq, g.n))
        throw LatticeViolation("frequency pair violates the torus lattice constraint");
    Fn f(g.ring, g.n);
    f.addTorus(freq, c);
    return f;
}

bool Fn::isZero() const {
    if (kind_ == RingKind::Chart) return chartTerms().empty();
    return torusTerms().empty();
}

void Fn::addChart(const ChartMono& m, const Rat& c) {
    if (c.isZero()) return;
    if ((int)m.size() != 2 * n_) throw RingMismatch("chart monomial of wrong dimension");
    auto& T = std::get<ChartTerms>(terms_);
    auto [it, fresh] = T.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.isZero()) T.erase(it);
    }
}

void Fn::addTorus(const TorusFreq& f, const Rat& c) {
    if (c.isZero()) return;
    if ((int)f.size() != 2 * n_) throw RingMismatch("frequency pair of wrong dimension");
    auto& T = std::get<TorusTerms>(terms_);
    auto [it, fresh] = T.emplace(f, c);
    if (!fresh) {
        it->second += c;
        if (it->second.isZero()) T.erase(it);
    }
}

Fn Fn::operator-() const { return scaled(Rat(-1)); }

Fn Fn::scaled(const Rat& c) const {
    Fn r(kind_, n_);
    if (c.isZero()) return r;
    if (kind_ == RingKind::Chart)
        for (auto& [m, a] : chartTerms()) r.addChart(m, a * c);
    else
        for (auto& [f, a] : torusTerms()) r.addTorus(f, a * c);
    return r;
}

Fn operator+(const Fn& a, const Fn& b) {
    if (a.kind() != b.kind() || a.dim() != b.dim())
        throw RingMismatch("sum of elements of different rings");
    Fn r = a;
    if (a.kind() == RingKind::Chart)
        for (auto& [m, c] : b.chartTerms()) r.addChart(m, c);
    else
        for (auto& [f, c] : b.torusTerms()) r.addTorus(f, c);
    return r;
}

bool operator==(const Fn& a, const Fn& b) {
    return a.kind() == b.kind() && a.dim() == b.dim() && a.terms_ == b.terms_;
}

bool operator<(const Fn& a, const Fn& b) {
    if (a.kind() != b.kind()) return a.kind() < b.kind();
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.terms_ < b.terms_;
}

Fn fn_mul(const Fn& f, const Fn& g) {
    if (f.kind() != g.kind() || f.dim() != g.dim())
        throw RingMismatch("product of elements of different rings");
    Fn r(f.kind(), f.dim());
    if (f.kind() == RingKind::Chart) {
        for (auto& [ma, ca] : f.chartTerms())
            for (auto& [mb, cb] : g.chartTerms()) {
                ChartMono m(ma.size());
                for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.addChart(m, ca * cb);
            }
    } else {
        for (auto& [fa, ca] : f.torusTerms())
            for (auto& [fb, cb] : g.torusTerms()) {
                TorusFreq s(fa.size());
                for (size_t i = 0; i < s.size(); ++i) s[i] = fa[i] + fb[i];
                r.addTorus(s, ca * cb);
            }
    }
    return r;
}

Fn derivative(const Fn& f, int j, DerKind kind) {
    if (j < 1 || j > f.dim()) throw TypeError("derivative index out of range");
    Fn r(f.kind(), f.dim());
    int n = f.dim();
    if (f.kind() == RingKind::Chart) {
        int slot = (kind == DerKind::Holo ? 0 : n) + (j - 1);
        for (auto& [m, c] : f.chartTerms()) {
            if (m[slot] == 0) continue;
            ChartMono d = m;
            d[slot] -= 1;
            r.addChart(d, c * Rat(m[slot]));
        }
    } else {
        int slot = (kind == DerKind::Holo ? 0 : n) + (j - 1);
        for (auto& [fr, c] : f.torusTerms()) r.addTorus(fr, c * fr[slot].toRat());
    }
    return r;
}

Rat torus_zero_freq(const Fn& f) {
    if (f.kind() != RingKind::Torus) throw WrongGeometry("zero-frequency mode needs the torus ring");
    auto it = f.torusTerms().find(TorusFreq(2 * f.dim(), GaussInt{}));
    return it == f.torusTerms().end() ? Rat(0) : it->second;
}

Fn restrict_chart(const Fn& f, const std::set<int>& zeroSet) {
    int n = f.dim();
    for (int j : zeroSet)
        if (j < 1 || j > n) throw TypeError("restriction index out of range");
    if (f.kind() == RingKind::Chart) {
        Fn r(f.kind(), n);
        for (auto& [m, c] : f.chartTerms()) {
            bool dies = false;
            for (int j : zeroSet)
                if (m[j - 1] > 0 || m[n + j - 1] > 0) {
                    dies = true;
                    break;
                }
            if (!dies) r.addChart(m, c);
        }
        return r;
    }
    // Torus: project the frequency pair onto the surviving components; the
    // result lives in the subtorus ring of dimension n - |zeroSet|.
    int nsub = n - (int)zeroSet.size();
    Fn r(RingKind::Torus, nsub);
    for (auto& [fr, c] : f.torusTerms()) {
        TorusFreq sub;
        sub.reserve(2 * nsub);
        for (int j = 1; j <= n; ++j)
            if (!zeroSet.count(j)) sub.push_back(fr[j - 1]);
        for (int j = 1; j <= n; ++j)
            if (!zeroSet.count(j)) sub.push_back(fr[n + j - 1]);
        // Componentwise constraint survives any coordinate projection.
        if (!latticeAdmissible(sub, nsub))
            throw LatticeViolation("projected frequency violates the subtorus lattice");
        r.addTorus(sub, c);
    }
    return r;
}

Fn project_to_subtorus(const Fn& f, const std::set<int>& tangential) {
    int n = f.dim();
    Fn r(f.kind(), n);
    if (f.kind() == RingKind::Chart) {
        for (auto& [m, c] : f.chartTerms()) {
            bool dies = false;
            for (int j = 1; j <= n; ++j)
                if (!tangential.count(j) && (m[j - 1] > 0 || m[n + j - 1] > 0)) {
                    dies = true;
                    break;
                }
            if (!dies) r.addChart(m, c);
        }
        return r;
    }
    for (auto& [fr, c] : f.torusTerms()) {
        TorusFreq proj = fr;
        for (int j = 1; j <= n; ++j)
            if (!tangential.count(j)) {
                proj[j - 1] = GaussInt{};
                proj[n + j - 1] = GaussInt{};
            }
        r.addTorus(proj, c);
    }
    return r;
}

namespace {

std::string chartMonoStr(const ChartMono& m, int n) {
    std::string out;
    auto piece = [&](const char* name, int j, int e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += name + std::to_string(j);
        if (e > 1) out += "^" + std::to_string(e);
    };
    for (int j = 1; j <= n; ++j) piece("v", j, m[j - 1]);
    for (int j = 1; j <= n; ++j) piece("vb", j, m[n + j - 1]);
    return out.empty() ? "1" : out;
}

std::string freqStr(const TorusFreq& f, int n) {
    std::string out = "E[";
    for (int j = 0; j < n; ++j) {
        if (j) out += ",";
        out += f[j].str();
    }
    out += ";";
    for (int j = 0; j < n; ++j) {
        if (j) out += ",";
        out += f[n + j].str();
    }
    return out + "]";
}

} // namespace

std::string Fn::str() const {
    if (isZero()) return "0";
    std::string out;
    auto emit = [&](const Rat& c, const std::string& mono) {
        if (!out.empty()) out += " + ";
        bool unit = mono == "1";
        if (unit)
            out += c.str();
        else if (c == Rat(1))
            out += mono;
        else if (c == Rat(-1))
            out += "-" + mono;
        else
            out += c.str() + "*" + mono;
    };
    if (kind_ == RingKind::Chart)
        for (auto& [m, c] : chartTerms()) emit(c, chartMonoStr(m, n_));
    else
        for (auto& [f, c] : torusTerms()) {
            bool unit = true;
            for (auto& e : f)
                if (!e.isZero()) unit = false;
            emit(c, unit ? "1" : freqStr(f, n_));
        }
    return out;
}

} // namespace kur

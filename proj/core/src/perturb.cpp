#include "layerstab/perturb.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "layerstab/error.hpp"

namespace layerstab {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::string to_string(PerturbationClass cls) {
    switch (cls) {
        case PerturbationClass::Pb: return "Pb";
        case PerturbationClass::PbM: return "PbM";
        case PerturbationClass::Pm: return "Pm";
        case PerturbationClass::PmM: return "PmM";
    }
    return "?";
}

PerturbationSpectrum::PerturbationSpectrum(int n_interfaces, int J, double L)
    : n_(n_interfaces), J_(J), L_(L) {
    if (n_ != 3 && n_ != 4) throw ValidationError("a spectrum needs 3 or 4 interfaces");
    if (J_ < 0) throw ValidationError("truncation order must be non-negative");
    if (!(L > 0.0)) throw ValidationError("strip length must be positive");
    a_.assign(static_cast<size_t>(n_) * (J_ + 1), 0.0);
    b_.assign(static_cast<size_t>(n_) * (J_ + 1), 0.0);
}

double PerturbationSpectrum::a(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j > J_) throw ValidationError("cosine coefficient index out of range");
    return a_[static_cast<size_t>(i) * (J_ + 1) + j];
}

double PerturbationSpectrum::b(int i, int j) const {
    if (i < 0 || i >= n_ || j < 1 || j > J_) throw ValidationError("sine coefficient index out of range");
    return b_[static_cast<size_t>(i) * (J_ + 1) + j];
}

void PerturbationSpectrum::set_a(int i, int j, double value) {
    if (i < 0 || i >= n_ || j < 0 || j > J_) throw ValidationError("cosine coefficient index out of range");
    a_[static_cast<size_t>(i) * (J_ + 1) + j] = value;
}

void PerturbationSpectrum::set_b(int i, int j, double value) {
    if (i < 0 || i >= n_ || j < 1 || j > J_) throw ValidationError("sine coefficient index out of range");
    b_[static_cast<size_t>(i) * (J_ + 1) + j] = value;
}

std::vector<double> PerturbationSpectrum::synthesize(double x1) const {
    std::vector<double> p(n_, 0.0);
    const double c0 = 1.0 / std::sqrt(L_);
    const double cj = std::sqrt(2.0 / L_);
    for (int i = 0; i < n_; ++i) {
        double v = a(i, 0) * c0;
        for (int j = 1; j <= J_; ++j) {
            const double t = 2.0 * kPi * j * x1 / L_;
            v += cj * (a(i, j) * std::cos(t) + b(i, j) * std::sin(t));
        }
        p[i] = v;
    }
    return p;
}

std::vector<double> PerturbationSpectrum::synthesize_derivative(double x1) const {
    std::vector<double> p(n_, 0.0);
    const double cj = std::sqrt(2.0 / L_);
    for (int i = 0; i < n_; ++i) {
        double v = 0.0;
        for (int j = 1; j <= J_; ++j) {
            const double k = 2.0 * kPi * j / L_;
            const double t = k * x1;
            v += cj * k * (-a(i, j) * std::sin(t) + b(i, j) * std::cos(t));
        }
        p[i] = v;
    }
    return p;
}

void PerturbationSpectrum::sample(int N, std::vector<double>& values, std::vector<double>& derivatives) const {
    values.assign(static_cast<size_t>(n_) * N, 0.0);
    derivatives.assign(static_cast<size_t>(n_) * N, 0.0);
    const double c0 = 1.0 / std::sqrt(L_);
    const double cj = std::sqrt(2.0 / L_);
    std::vector<double> cs(static_cast<size_t>(N) * (J_ + 1)), sn(static_cast<size_t>(N) * (J_ + 1));
    for (int k = 0; k < N; ++k) {
        for (int j = 0; j <= J_; ++j) {
            // index j*k mod N keeps the phases exact on the grid
            const long long m = (static_cast<long long>(j) * k) % N;
            const double t = 2.0 * kPi * static_cast<double>(m) / N;
            cs[static_cast<size_t>(k) * (J_ + 1) + j] = std::cos(t);
            sn[static_cast<size_t>(k) * (J_ + 1) + j] = std::sin(t);
        }
    }
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < N; ++k) {
            double v = a(i, 0) * c0;
            double d = 0.0;
            for (int j = 1; j <= J_; ++j) {
                const double c = cs[static_cast<size_t>(k) * (J_ + 1) + j];
                const double s = sn[static_cast<size_t>(k) * (J_ + 1) + j];
                const double kj = 2.0 * kPi * j / L_;
                v += cj * (a(i, j) * c + b(i, j) * s);
                d += cj * kj * (-a(i, j) * s + b(i, j) * c);
            }
            values[static_cast<size_t>(i) * N + k] = v;
            derivatives[static_cast<size_t>(i) * N + k] = d;
        }
    }
}

double PerturbationSpectrum::integral(int i) const { return std::sqrt(L_) * a(i, 0); }

double PerturbationSpectrum::sup_norm() const {
    const int N = std::max(64, 16 * (J_ + 1));
    std::vector<double> v, d;
    sample(N, v, d);
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

PerturbationSpectrum PerturbationSpectrum::scaled(double factor) const {
    PerturbationSpectrum out = *this;
    for (double& x : out.a_) x *= factor;
    for (double& x : out.b_) x *= factor;
    return out;
}

PerturbationSpectrum from_profiles(const std::vector<std::vector<double>>& samples, double L, int J) {
    if (samples.empty()) throw ValidationError("no profiles given");
    const int n = static_cast<int>(samples.size());
    const int N = static_cast<int>(samples.front().size());
    for (const auto& s : samples) {
        if (static_cast<int>(s.size()) != N) throw ValidationError("profiles must share one sampling grid");
    }
    if (N < 4 * J || N == 0) {
        std::ostringstream os;
        os << N << " samples cannot resolve " << J << " modes (need at least " << 4 * J << ")";
        throw AliasingError(os.str());
    }
    PerturbationSpectrum spec(n, J, L);
    const double h = L / N;
    for (int i = 0; i < n; ++i) {
        double s0 = 0.0;
        for (double v : samples[i]) s0 += v;
        spec.set_a(i, 0, s0 * h / std::sqrt(L));
        for (int j = 1; j <= J; ++j) {
            double sc = 0.0, ss = 0.0;
            for (int k = 0; k < N; ++k) {
                const long long m = (static_cast<long long>(j) * k) % N;
                const double t = 2.0 * kPi * static_cast<double>(m) / N;
                sc += samples[i][k] * std::cos(t);
                ss += samples[i][k] * std::sin(t);
            }
            spec.set_a(i, j, sc * h * std::sqrt(2.0 / L));
            spec.set_b(i, j, ss * h * std::sqrt(2.0 / L));
        }
    }
    return spec;
}

ClassVerdict validate(const PerturbationSpectrum& spec, PerturbationClass cls) {
    const double tol = 1e-12 * std::sqrt(spec.length());
    ClassVerdict v;
    const bool bilayer = cls == PerturbationClass::Pb || cls == PerturbationClass::PbM;
    const int need = bilayer ? 4 : 3;
    if (spec.interfaces() != need) {
        v.ok = false;
        v.violated = "interface count " + std::to_string(spec.interfaces()) + " does not match class " +
                     to_string(cls);
        v.residual = std::numeric_limits<double>::infinity();
        return v;
    }
    const auto a = [&](int i) { return spec.a(i, 0); };
    auto check = [&](double residual, const char* what) {
        if (v.ok && std::abs(residual) > tol) {
            v.ok = false;
            v.violated = what;
        }
        v.residual = std::max(v.residual, std::abs(residual));
    };
    switch (cls) {
        case PerturbationClass::Pb:
            check(2.0 * (a(0) + a(2)) - (a(1) + a(3)), "2(a10+a30) = a20+a40");
            break;
        case PerturbationClass::PbM:
            check(a(0) + a(2), "a10+a30 = 0");
            check(a(1) + a(3), "a20+a40 = 0");
            break;
        case PerturbationClass::Pm:
            check((a(1) - a(0)) - (a(2) - a(1)), "a20-a10 = a30-a20");
            break;
        case PerturbationClass::PmM:
            check(a(0) - a(1), "a10 = a20");
            check(a(1) - a(2), "a20 = a30");
            break;
    }
    return v;
}

double PerturbedInterfaces::position(int i, double x1) const {
    return base_[i] + orient_[i] * eps_ * spec_.synthesize(x1)[i];
}

namespace {

// Neighbouring pairs (lower, upper) in x2 order.
std::vector<std::pair<int, int>> neighbour_pairs(int n) {
    if (n == 3) return {{0, 1}, {1, 2}};
    return {{3, 2}, {2, 0}, {0, 1}};
}

}  // namespace

GapInfo minimum_gap(const PerturbedInterfaces& c) {
    const auto& spec = c.spectrum();
    const double L = spec.length();
    const int M = 8 * spec.order() + 1;
    const auto pairs = neighbour_pairs(c.count());
    GapInfo best{std::numeric_limits<double>::infinity(), 0.0};
    for (const auto& [lo, hi] : pairs) {
        auto gap = [&](double x) {
            const auto p = spec.synthesize(x);
            return (c.base(hi) + c.orientation(hi) * c.epsilon() * p[hi]) -
                   (c.base(lo) + c.orientation(lo) * c.epsilon() * p[lo]);
        };
        double gmin = std::numeric_limits<double>::infinity();
        int kmin = 0;
        for (int k = 0; k < M; ++k) {
            const double g = gap(L * k / M);
            if (g < gmin) {
                gmin = g;
                kmin = k;
            }
        }
        double xmin = L * kmin / M;
        if (spec.order() > 0) {
            const double h = L / M;
            const auto r = boost::math::tools::brent_find_minima(gap, xmin - h, xmin + h, 40);
            if (r.second < gmin) {
                gmin = r.second;
                xmin = r.first;
            }
        }
        if (gmin < best.gap) {
            double x = std::fmod(xmin, L);
            if (x < 0) x += L;
            best = {gmin, x};
        }
    }
    return best;
}

PerturbedInterfaces perturbed_interfaces(const LayerStructure& s, const PerturbationSpectrum& spec, double eps) {
    if (spec.interfaces() != s.interface_count()) {
        throw ValidationError("spectrum interface count does not match the structure");
    }
    if (std::abs(spec.length() - s.length()) > 1e-12 * s.length()) {
        throw ValidationError("spectrum strip length does not match the structure");
    }
    PerturbedInterfaces c(spec, eps);
    c.base_ = s.interface_positions();
    if (s.kind() == LayerKind::BilayerVUV) {
        c.orient_ = {1.0, 1.0, -1.0, -1.0};
        c.jump_ = {-2.0, 1.0, 2.0, -1.0};
    } else {
        c.orient_ = {1.0, 1.0, 1.0};
        c.jump_ = {1.0, -2.0, 1.0};
    }
    const GapInfo g = minimum_gap(c);
    if (!(g.gap > 0.0)) {
        std::ostringstream os;
        os << "perturbed interfaces touch or cross near x1 = " << g.x1 << " (gap " << g.gap << ")";
        throw CrossingError(os.str(), g.x1);
    }
    return c;
}

}  // namespace layerstab

#include "qwalk/coins.hpp"
#include "qwalk/text.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace qwalk {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

CoinMatrix hadamard() {
    const double h = 1.0 / std::numbers::sqrt2;
    CoinMatrix c;
    c << h, h, h, -h;
    return c;
}

CoinMatrix general(double theta, double phi1, double phi2) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const cplx i(0.0, 1.0);
    CoinMatrix m;
    m << c, std::exp(i * phi1) * s, std::exp(i * phi2) * s, -std::exp(i * (phi1 + phi2)) * c;
    return m;
}

CoinMatrix alpha_coin(const coin::Alpha& a, int t) {
    const double tau = a.tau;
    const double cos_theta = std::pow(tau / (t + tau), a.alpha) / std::numbers::sqrt2;
    const double sin_theta = std::sqrt(1.0 - cos_theta * cos_theta);
    CoinMatrix m;
    m << cos_theta, sin_theta, sin_theta, -cos_theta;
    return m;
}

CoinMatrix phi_coin(const coin::Phi& f, int t) {
    // Reduce (q t / p) mod 1 in integers so the coin is exactly periodic in t.
    const std::int64_t num = (static_cast<std::int64_t>(f.q) * t) % f.p;
    if (num == 0) {
        return hadamard();
    }
    const double phase = 2.0 * std::numbers::pi * static_cast<double>(num) / f.p;
    const double h = 1.0 / std::numbers::sqrt2;
    const cplx em = std::polar(h, -phase);
    const cplx ep = std::polar(h, phase);
    CoinMatrix m;
    m << em, em, ep, -ep;
    return m;
}

}  // namespace

void validate(const CoinSpec& spec) {
    std::visit(overloaded{
                   [](const coin::Hadamard&) {},
                   [](const coin::General& g) {
                       if (!std::isfinite(g.theta) || !std::isfinite(g.phi1) || !std::isfinite(g.phi2)) {
                           throw ValidationError("general coin angles must be finite");
                       }
                   },
                   [](const coin::Alpha& a) {
                       if (!(a.alpha >= 0.0) || !std::isfinite(a.alpha)) {
                           throw ValidationError("alpha coin needs alpha >= 0, got " + text::format_double(a.alpha));
                       }
                       if (a.tau < 1) {
                           throw ValidationError("alpha coin needs tau >= 1, got " + std::to_string(a.tau));
                       }
                   },
                   [](const coin::Phi& f) {
                       if (f.q < 1 || f.p < 1) {
                           throw ValidationError("phi coin needs positive q and p, got " + std::to_string(f.q) + "/" +
                                                 std::to_string(f.p));
                       }
                   },
               },
               spec);
}

CoinMatrix coin_at(const CoinSpec& spec, int t) {
    if (t < 0) {
        throw ValidationError("coin time must be >= 0, got " + std::to_string(t));
    }
    return std::visit(overloaded{
                          [](const coin::Hadamard&) { return hadamard(); },
                          [](const coin::General& g) { return general(g.theta, g.phi1, g.phi2); },
                          [t](const coin::Alpha& a) { return alpha_coin(a, t); },
                          [t](const coin::Phi& f) { return phi_coin(f, t); },
                      },
                      spec);
}

PairCoinMatrix kron(const CoinMatrix& a, const CoinMatrix& b) {
    PairCoinMatrix m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return m;
}

PairCoinMatrix pair_coin_at(const PairCoinSpec& spec, int t, bool same_site) {
    if (same_site && spec.interaction == InteractionRule::IdentityOne) {
        return PairCoinMatrix::Identity();
    }
    PairCoinMatrix m = kron(coin_at(spec.coin1, t), coin_at(spec.coin2, t));
    if (same_site && spec.interaction == InteractionRule::PiPhase) {
        m = -m;
    }
    return m;
}

CoinSpec parse_coin(const std::string& raw) {
    const auto parts = text::split(text::trim(raw), ':');
    const std::string& kind = parts.front();
    if (kind == "hadamard" && parts.size() == 1) {
        return coin::Hadamard{};
    }
    if (kind == "alpha" && (parts.size() == 2 || parts.size() == 3)) {
        coin::Alpha a;
        a.alpha = text::parse_double(parts[1], "alpha");
        if (parts.size() == 3) a.tau = text::parse_int(parts[2], "tau");
        validate(a);
        return a;
    }
    if (kind == "phi" && parts.size() == 2) {
        const auto qp = text::split(parts[1], '/');
        if (qp.size() != 2) {
            throw ValidationError("phi coin expects phi:Q/P, got '" + raw + "'");
        }
        coin::Phi f{text::parse_int(qp[0], "q"), text::parse_int(qp[1], "p")};
        validate(f);
        return f;
    }
    if (kind == "general" && parts.size() == 4) {
        coin::General g{text::parse_double(parts[1], "theta"), text::parse_double(parts[2], "phi1"),
                        text::parse_double(parts[3], "phi2")};
        validate(g);
        return g;
    }
    throw ValidationError("unrecognized coin '" + raw + "' (expected hadamard, alpha:A[:TAU], phi:Q/P or general:T:P1:P2)");
}

std::string to_string(const CoinSpec& spec) {
    return std::visit(overloaded{
                          [](const coin::Hadamard&) -> std::string { return "hadamard"; },
                          [](const coin::General& g) -> std::string {
                              return "general:" + text::format_double(g.theta) + ":" + text::format_double(g.phi1) +
                                     ":" + text::format_double(g.phi2);
                          },
                          [](const coin::Alpha& a) -> std::string {
                              std::string s = "alpha:" + text::format_double(a.alpha);
                              if (a.tau != 1) s += ":" + std::to_string(a.tau);
                              return s;
                          },
                          [](const coin::Phi& f) -> std::string {
                              return "phi:" + std::to_string(f.q) + "/" + std::to_string(f.p);
                          },
                      },
                      spec);
}

InteractionRule parse_interaction(const std::string& raw) {
    const std::string s(text::trim(raw));
    if (s == "none") return InteractionRule::None;
    if (s == "identity") return InteractionRule::IdentityOne;
    if (s == "pi-phase") return InteractionRule::PiPhase;
    throw ValidationError("unknown interaction '" + raw + "' (expected none, identity or pi-phase)");
}

std::string to_string(InteractionRule rule) {
    switch (rule) {
    case InteractionRule::None: return "none";
    case InteractionRule::IdentityOne: return "identity";
    case InteractionRule::PiPhase: return "pi-phase";
    }
    return "unknown";
}

}  // namespace qwalk

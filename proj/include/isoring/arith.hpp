#pragma once

/**
 * @file arith.hpp
 * @brief Arithmetic functions, their sequence representations, Dirichlet
 * convolution, the Rearick logarithm and hyperbolic trig.
 *
 * A multiplicative f is represented locally: for each prime p the values
 * f(p^0), f(p^1), ... are the GFP of some core found by peeling. An arbitrary
 * f may be represented globally: f(0), f(1), f(2), ... as a GFP, with f(0)
 * taken to be 1.
 */

#include "core.hpp"
#include "logexp.hpp"
#include "sequences.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isoring {

using Natural = std::uint64_t;

// ---------------------------------------------------------------------------
// Primes
// ---------------------------------------------------------------------------

inline bool is_prime(Natural n) {
    if (n < 2) return false;
    for (Natural d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Prime factorization as (p, e) pairs in increasing p.
inline std::vector<std::pair<Natural, unsigned>> factorize(Natural n) {
    if (n == 0) throw domain_error("factorize(0)");
    std::vector<std::pair<Natural, unsigned>> f;
    for (Natural d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) f.emplace_back(d, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

/// (p, e) with n = p^e, e >= 1, or nothing.
inline std::optional<std::pair<Natural, unsigned>> as_prime_power(Natural n) {
    if (n < 2) return std::nullopt;
    auto f = factorize(n);
    if (f.size() != 1) return std::nullopt;
    return f[0];
}

inline Integer integer_pow(Natural p, unsigned e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

inline std::vector<Natural> primes_up_to(Natural n) {
    std::vector<Natural> out;
    for (Natural p = 2; p <= n; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

// ---------------------------------------------------------------------------
// Arithmetic functions
// ---------------------------------------------------------------------------

class ArithFn {
public:
    using eval_fn = std::function<Rational(Natural)>;
    using prime_power_fn = std::function<Rational(Natural, unsigned)>;
    using stream_fn = std::function<Rational(unsigned)>;

    ArithFn(std::string name, eval_fn f) : name_(std::move(name)), eval_(std::move(f)) {}

    /// Multiplicative function given by its values at prime powers.
    static ArithFn multiplicative(std::string name, prime_power_fn at_pe, bool completely = false) {
        auto pp = std::make_shared<prime_power_fn const>(std::move(at_pe));
        ArithFn f(std::move(name), [pp](Natural n) {
            if (n == 0) throw domain_error("arithmetic functions are defined on n >= 1");
            Rational r(1);
            for (auto [p, e] : factorize(n)) r *= (*pp)(p, e);
            return r;
        });
        f.prime_power_ = pp;
        f.multiplicative_ = true;
        f.completely_multiplicative_ = completely;
        return f;
    }

    /// Function known only on 1..values.size().
    static ArithFn from_table(std::string name, std::vector<Rational> values) {
        auto v = std::make_shared<std::vector<Rational> const>(std::move(values));
        return ArithFn(std::move(name), [v](Natural n) {
            if (n == 0 || n > v->size()) throw domain_error("value at " + std::to_string(n) + " not available");
            return (*v)[n - 1];
        });
    }

    std::string const& name() const { return name_; }
    bool is_multiplicative() const { return multiplicative_; }
    bool is_completely_multiplicative() const { return completely_multiplicative_; }

    Rational operator()(Natural n) const {
        if (n == 0) throw domain_error("arithmetic functions are defined on n >= 1");
        return eval_(n);
    }

    /// f(p^e); e = 0 gives f(1).
    Rational at_prime_power(Natural p, unsigned e) const {
        if (e == 0) return (*this)(1);
        if (prime_power_) return (*prime_power_)(p, e);
        Integer q = integer_pow(p, e);
        if (!q.fits_ulong_p()) throw domain_error("p^e exceeds the machine range for " + name_);
        return (*this)(q.get_ui());
    }

    /// Value stream for a global representation: index 0 is 1 unless overridden.
    Rational global(unsigned n) const {
        if (global_) return (*global_)(n);
        return n == 0 ? Rational(1) : (*this)(n);
    }

    ArithFn& with_global_stream(stream_fn s) {
        global_ = std::make_shared<stream_fn const>(std::move(s));
        return *this;
    }
    ArithFn& with_core_labels(std::string local, std::string global) {
        local_label_ = std::move(local);
        global_label_ = std::move(global);
        return *this;
    }
    std::string const& local_core_label() const { return local_label_; }
    std::string const& global_core_label() const { return global_label_; }

private:
    std::string name_;
    eval_fn eval_;
    std::shared_ptr<prime_power_fn const> prime_power_;
    std::shared_ptr<stream_fn const> global_;
    bool multiplicative_ = false;
    bool completely_multiplicative_ = false;
    std::string local_label_, global_label_;
};

inline Rational catalan_number(unsigned n) { return Rational(binomial(2 * n, n), Integer(n + 1)); }

namespace builtin {

inline ArithFn zeta() {
    return ArithFn::multiplicative("zeta", [](Natural, unsigned) { return Rational(1); }, true);
}
inline ArithFn mu() {
    return ArithFn::multiplicative("mu", [](Natural, unsigned e) { return Rational(e == 1 ? -1 : 0); });
}
inline ArithFn tau() {
    return ArithFn::multiplicative("tau", [](Natural, unsigned e) { return Rational(e + 1); });
}
inline ArithFn sigma() {
    return ArithFn::multiplicative("sigma", [](Natural p, unsigned e) {
        return Rational(Integer(integer_pow(p, e + 1) - 1), Integer(p - 1));
    });
}
inline ArithFn phi() {
    return ArithFn::multiplicative("phi", [](Natural p, unsigned e) {
        return Rational(Integer(integer_pow(p, e) - integer_pow(p, e - 1)));
    });
}
inline ArithFn zeta_1() {
    return ArithFn::multiplicative("zeta_1", [](Natural p, unsigned e) { return Rational(integer_pow(p, e)); }, true);
}
/// The Dirichlet identity. Its global stream is (1, 0, 0, ...), so that it is
/// represented globally by the empty core as well as locally.
inline ArithFn delta() {
    return ArithFn::multiplicative("delta", [](Natural, unsigned) { return Rational(0); }, true)
        .with_global_stream([](unsigned n) { return Rational(n == 0 ? 1 : 0); });
}
inline ArithFn catalan() {
    return ArithFn("catalan", [](Natural n) {
               if (n == 0) throw domain_error("arithmetic functions are defined on n >= 1");
               return catalan_number(static_cast<unsigned>(n));
           })
        .with_global_stream([](unsigned n) { return catalan_number(n); })
        .with_core_labels("", "t_{j+1} = Catalan(j)");
}

inline std::vector<std::string> names() { return {"zeta", "mu", "tau", "sigma", "phi", "zeta_1", "delta", "catalan"}; }

inline ArithFn lookup(std::string const& name) {
    if (name == "zeta") return zeta();
    if (name == "mu") return mu();
    if (name == "tau") return tau();
    if (name == "sigma") return sigma();
    if (name == "phi") return phi();
    if (name == "zeta_1" || name == "id") return zeta_1();
    if (name == "delta") return delta();
    if (name == "catalan") return catalan();
    throw domain_error("unknown arithmetic function '" + name + "'");
}

} // namespace builtin

// ---------------------------------------------------------------------------
// Core inference and representations
// ---------------------------------------------------------------------------

struct InferredCore {
    Core<Rational> core;
    bool finite;                 ///< a zero parameter confirmed the degree within the data
    std::vector<Rational> peeled;  ///< t_1..t_m as peeled from the data
};

namespace detail {

/// Lazily peels core parameters from an unbounded value stream.
struct PeelingState {
    std::function<Rational(unsigned)> stream;
    std::vector<Rational> values;
    std::vector<Rational> t;
    std::mutex mu;

    Rational at(std::size_t j) {
        std::lock_guard lock(mu);
        while (t.size() < j) {
            std::size_t next = t.size() + 1;
            while (values.size() <= next) values.push_back(stream(static_cast<unsigned>(values.size())));
            Rational tj = values[next];
            for (std::size_t i = 1; i < next; ++i) tj -= t[i - 1] * values[next - i];
            t.push_back(tj);
        }
        return t[j - 1];
    }
};

inline std::string constant_label(std::vector<Rational> const& t) {
    if (t.size() < 2) return {};
    for (auto const& x : t)
        if (!(x == t[0])) return {};
    return t[0].str() + " for all j";
}

inline InferredCore classify(std::vector<Rational> peeled, std::function<Rational(unsigned)> stream, std::string label) {
    std::size_t last = 0;
    for (std::size_t j = 1; j <= peeled.size(); ++j)
        if (!peeled[j - 1].is_zero()) last = j;
    if (last < peeled.size()) {
        std::vector<Rational> t(peeled.begin(), peeled.begin() + static_cast<std::ptrdiff_t>(last));
        return {Core<Rational>::finite(std::move(t)), true, std::move(peeled)};
    }
    if (label.empty()) label = constant_label(peeled);
    if (label.empty()) label = "peeled from the value stream";
    std::function<Rational(std::size_t)> gen;
    if (stream) {
        auto st = std::make_shared<PeelingState>();
        st->stream = std::move(stream);
        gen = [st](std::size_t j) { return st->at(j); };
    } else {
        auto known = std::make_shared<std::vector<Rational> const>(peeled);
        gen = [known](std::size_t j) -> Rational {
            if (j > known->size())
                throw domain_error("core parameter t_" + std::to_string(j) + " is beyond the supplied values");
            return (*known)[j - 1];
        };
    }
    return {Core<Rational>::infinite(std::move(gen), std::move(label)), false, std::move(peeled)};
}

} // namespace detail

/// Core of the GFP sequence with the given values f(p^0..p^m). A finite core
/// is reported only when at least one trailing zero parameter confirms it;
/// otherwise the core is an infinite one backed by the peeled values.
inline InferredCore infer_core(std::vector<Rational> const& values) {
    if (values.empty()) throw domain_error("no values to infer a core from");
    auto peeled = peel_core(values, static_cast<unsigned>(values.size() - 1));
    return detail::classify(std::move(peeled), nullptr, "");
}

struct Representation {
    std::optional<Natural> prime;  ///< set for local representations
    InferredCore inferred;
    std::vector<Rational> values;  ///< F_0..F_{n_max}

    Core<Rational> const& core() const { return inferred.core; }
    bool finite() const { return inferred.finite; }
    unsigned n_max() const { return static_cast<unsigned>(values.size() - 1); }
};

namespace detail {
inline Representation represent(std::function<Rational(unsigned)> stream, unsigned n_max, std::optional<Natural> p,
                                std::string label) {
    if (n_max == 0) throw domain_error("representation needs n_max >= 1");
    std::vector<Rational> v;
    for (unsigned n = 0; n <= n_max; ++n) v.push_back(stream(n));
    auto peeled = peel_core(v, n_max);
    Representation r{p, classify(std::move(peeled), stream, std::move(label)), v};
    if (!(gfp_sequence(r.core(), n_max) == v))
        throw domain_error("internal consistency: inferred core does not reproduce the values");
    return r;
}
} // namespace detail

/// F_n = f(p^n), n = 0..n_max.
inline Representation local_rep(ArithFn const& f, Natural p, unsigned n_max) {
    if (!f.is_multiplicative()) throw domain_error(f.name() + " is not multiplicative: no local representation");
    if (!is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");
    return detail::represent([f, p](unsigned e) { return f.at_prime_power(p, e); }, n_max, p, f.local_core_label());
}

/// F_n = f(n), n = 0..n_max, with F_0 from the function's global stream.
inline Representation global_rep(ArithFn const& f, unsigned n_max) {
    if (!(f.global(0) == Rational(1))) throw domain_error("not a unit at p^0: global stream must start with 1");
    return detail::represent([f](unsigned n) { return f.global(n); }, n_max, std::nullopt, f.global_core_label());
}

// ---------------------------------------------------------------------------
// Dirichlet convolution
// ---------------------------------------------------------------------------

/// Values f(1..N) at indices 1..N; index 0 is unused.
using DirichletTable = std::vector<Rational>;

inline DirichletTable table(ArithFn const& f, Natural N) {
    DirichletTable t(N + 1, Rational(0));
    for (Natural n = 1; n <= N; ++n) t[n] = f(n);
    return t;
}

inline DirichletTable dirichlet_conv(DirichletTable const& f, DirichletTable const& g, Natural N) {
    if (f.size() <= N || g.size() <= N) throw domain_error("dirichlet_conv: tables shorter than N");
    DirichletTable h(N + 1, Rational(0));
    for (Natural d = 1; d <= N; ++d) {
        if (f[d].is_zero()) continue;
        for (Natural m = d, q = 1; m <= N; m += d, ++q) h[m] += f[d] * g[q];
    }
    return h;
}
inline DirichletTable dirichlet_conv(ArithFn const& f, ArithFn const& g, Natural N) {
    return dirichlet_conv(table(f, N), table(g, N), N);
}

inline DirichletTable dirichlet_inverse(DirichletTable const& f, Natural N) {
    if (f.size() <= N) throw domain_error("dirichlet_inverse: table shorter than N");
    if (N >= 1 && f[1].is_zero()) throw domain_error("non-unit: f(1) = 0 has no Dirichlet inverse");
    DirichletTable g(N + 1, Rational(0));
    if (N == 0) return g;
    Rational inv1 = f[1].inverse();
    g[1] = inv1;
    // accumulate sum_{d|n, d>1} f(d) g(n/d) as g fills in increasing order
    DirichletTable acc(N + 1, Rational(0));
    for (Natural n = 1; n <= N; ++n) {
        if (n > 1) g[n] = -acc[n] * inv1;
        if (g[n].is_zero()) continue;
        for (Natural d = 2; d * n <= N; ++d)
            if (!f[d].is_zero()) acc[d * n] += f[d] * g[n];
    }
    return g;
}
inline DirichletTable dirichlet_inverse(ArithFn const& f, Natural N) { return dirichlet_inverse(table(f, N), N); }

// ---------------------------------------------------------------------------
// Rearick logarithm
// ---------------------------------------------------------------------------

/// A formal rational combination sum_p c_p log p.
class FormalLog {
public:
    FormalLog() = default;

    /// log d = sum e_p log p.
    static FormalLog of(Natural d) {
        FormalLog l;
        for (auto [p, e] : factorize(d)) l.c_[p] = Rational(e);
        return l;
    }
    static FormalLog log_prime(Natural p, Rational c = 1) {
        FormalLog l;
        if (!c.is_zero()) l.c_[p] = std::move(c);
        return l;
    }

    bool is_zero() const { return c_.empty(); }
    Rational component(Natural p) const {
        auto it = c_.find(p);
        return it == c_.end() ? Rational(0) : it->second;
    }
    std::map<Natural, Rational> const& components() const { return c_; }

    FormalLog& add_scaled(FormalLog const& o, Rational const& s) {
        for (auto const& [p, c] : o.c_) {
            Rational& x = c_[p];
            x += c * s;
            if (x.is_zero()) c_.erase(p);
        }
        return *this;
    }
    friend FormalLog operator+(FormalLog a, FormalLog const& b) { return a.add_scaled(b, 1); }
    friend FormalLog operator-(FormalLog a, FormalLog const& b) { return a.add_scaled(b, -1); }
    friend FormalLog operator*(FormalLog const& a, Rational const& s) { return FormalLog().add_scaled(a, s); }
    bool operator==(FormalLog const&) const = default;

    /// "log 2", "2*log 2 - 1/2*log 3", "0".
    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto const& [p, c] : c_) {
            bool neg = c.sign() < 0;
            Rational mag = neg ? -c : c;
            s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (!(mag == Rational(1))) s += mag.str() + "*";
            s += "log " + std::to_string(p);
            first = false;
        }
        return s;
    }

private:
    std::map<Natural, Rational> c_;
};

/// Lf(n) = sum_{d|n} f(d) f^{-1}(n/d) log d for n = 1..N (index 0 unused).
inline std::vector<FormalLog> rearick_log(DirichletTable const& f, Natural N) {
    if (f.size() <= N) throw domain_error("rearick_log: table shorter than N");
    if (N >= 1 && !(f[1] == Rational(1))) throw domain_error("rearick_log needs f(1) = 1");
    auto finv = dirichlet_inverse(f, N);
    std::vector<FormalLog> out(N + 1);
    for (Natural d = 2; d <= N; ++d) {
        if (f[d].is_zero()) continue;
        FormalLog ld = FormalLog::of(d);
        for (Natural m = d, q = 1; m <= N; m += d, ++q)
            if (!finv[q].is_zero()) out[m].add_scaled(ld, f[d] * finv[q]);
    }
    return out;
}
inline std::vector<FormalLog> rearick_log(ArithFn const& f, Natural N) { return rearick_log(table(f, N), N); }

// ---------------------------------------------------------------------------
// Companions
// ---------------------------------------------------------------------------

/// G = L(F) of a representation. G_0 is the core degree; for an infinite core
/// it is the truncation n_max.
inline std::vector<Rational> companion(Representation const& r) { return log_op(r.values, r.core(), r.n_max()); }

/// The additive function g with g(p^e) = G_e at p, assembled from the local
/// companions of a multiplicative f, on 1..N.
inline DirichletTable additive_companion(ArithFn const& f, Natural N) {
    DirichletTable g(N + 1, Rational(0));
    std::map<Natural, std::vector<Rational>> per_prime;
    for (Natural n = 2; n <= N; ++n)
        for (auto [p, e] : factorize(n)) {
            auto& G = per_prime[p];
            if (G.size() <= e) G = companion(local_rep(f, p, std::max<unsigned>(e, 1)));
            g[n] += G[e];
        }
    return g;
}

// ---------------------------------------------------------------------------
// Hyperbolic trig
// ---------------------------------------------------------------------------

template <RingElement T>
struct TrigPair {
    ConvSeq<T> C;
    ConvSeq<T> S;
};

/// C = (E(G) + conj E(G)) / 2, S = (E(G) - conj E(G)) / 2, where conj is the
/// convolution inverse.
template <RingElement T>
TrigPair<T> trig_from_log(ConvSeq<T> const& g, unsigned n_max) {
    auto f = exp_op(g, n_max);
    auto fbar = conv_inverse(f, n_max);
    TrigPair<T> r;
    Rational half(1, 2);
    for (unsigned n = 0; n <= n_max; ++n) {
        r.C.push_back((f[n] + fbar[n]) * half);
        r.S.push_back((f[n] - fbar[n]) * half);
    }
    return r;
}

/// C_n = (F_n - bt_n) / 2, S_n = (F_n + bt_n) / 2 with bt = (-1, t_1, t_2, ...).
template <RingElement T>
TrigPair<T> trig_closed(Core<T> const& core, unsigned n_max) {
    auto f = gfp_sequence(core, n_max);
    TrigPair<T> r;
    Rational half(1, 2);
    for (unsigned n = 0; n <= n_max; ++n) {
        T bt = n == 0 ? T(Rational(-1)) : core.t(n);
        r.C.push_back((f[n] - bt) * half);
        r.S.push_back((f[n] + bt) * half);
    }
    return r;
}

inline TrigPair<Rational> trig(Representation const& r) { return trig_from_log(companion(r), r.n_max()); }

// ---------------------------------------------------------------------------
// Representability
// ---------------------------------------------------------------------------

struct RepresentabilityReport {
    std::string function;
    Natural N;
    bool multiplicative;                                   ///< f(mn) = f(m) f(n) on coprime m, n <= N with mn <= N
    std::optional<std::pair<Natural, Natural>> counterexample;
    struct Local {
        Natural p;
        bool finite;
        std::string core;
    };
    std::vector<Local> local;        ///< empty when f is not multiplicative
    bool locally_representable;
    bool globally_representable;     ///< the global stream starts with 1 and peels
    bool global_core_finite;
    std::string global_core;
};

inline RepresentabilityReport representability_check(ArithFn const& f, Natural N, std::vector<Natural> const& primes,
                                                     unsigned local_n = 12) {
    RepresentabilityReport rep{f.name(), N, true, std::nullopt, {}, false, false, false, ""};
    for (Natural m = 2; m <= N && rep.multiplicative; ++m)
        for (Natural n = m + 1; m * n <= N; ++n)
            if (std::gcd(m, n) == 1 && !(f(m * n) == f(m) * f(n))) {
                rep.multiplicative = false;
                rep.counterexample = std::make_pair(m, n);
                break;
            }
    if (rep.multiplicative && !(f(1) == Rational(1))) rep.multiplicative = false;
    if (rep.multiplicative) {
        ArithFn g = f;
        bool wrapped = !g.is_multiplicative();
        if (wrapped) {
            // observed multiplicative: use the values at prime powers up to N
            auto ff = std::make_shared<ArithFn const>(f);
            g = ArithFn::multiplicative(f.name(), [ff](Natural p, unsigned e) { return (*ff)(integer_pow(p, e).get_ui()); });
        }
        for (auto p : primes) {
            unsigned n = local_n;
            if (wrapped) {
                n = 0;
                for (Natural q = p; q <= N; q *= p) ++n;
                n = std::min(n, local_n);
                if (n == 0) continue;
            }
            auto r = local_rep(g, p, n);
            rep.local.push_back({p, r.finite(), core_str(r.core())});
        }
        rep.locally_representable = true;
    }
    if (f.global(0) == Rational(1)) {
        auto r = global_rep(f, static_cast<unsigned>(N));
        rep.globally_representable = true;
        rep.global_core_finite = r.finite();
        rep.global_core = core_str(r.core());
    }
    return rep;
}

} // namespace isoring

#include "pqpoly/identity_suite.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include <omp.h>

#include "pqpoly/combinatorics.hpp"
#include "pqpoly/egf_series.hpp"
#include "pqpoly/families.hpp"
#include "pqpoly/special_sequences.hpp"

namespace pqpoly {

namespace {

// ---------------------------------------------------------------------------
// Shared per-(k, point) family values.

struct FamilyTables {
    std::vector<XPoly> euler;
    std::vector<XPoly> bernoulli;
    std::vector<XPoly> cauchy1;
    std::vector<XPoly> cauchy2;
};

FamilyTables build_tables(long n_max, long k, const PQParams& params) {
    return {family_table(Family::poly_euler, n_max, k, params),
            family_table(Family::poly_bernoulli, n_max, k, params),
            family_table(Family::poly_cauchy_1, n_max, k, params),
            family_table(Family::poly_cauchy_2, n_max, k, params)};
}

struct Context {
    long k_min = 0;
    long k_count = 0;
    std::vector<FamilyTables> tables;

    const FamilyTables& at(std::size_t point, long k) const {
        return tables[point * static_cast<std::size_t>(k_count) + static_cast<std::size_t>(k - k_min)];
    }
};

using Sides = std::pair<XPoly, XPoly>;
using Evaluator = std::function<Sides(const Context&)>;

struct Task {
    std::size_t check;
    CellTuple cell;
    Evaluator eval;
};

struct Outcome {
    XPoly lhs;
    XPoly rhs;
    std::string error;
    bool ok() const { return error.empty() && lhs == rhs; }
};

Outcome run_task(const Task& task, const Context& ctx) {
    Outcome out;
    try {
        auto [lhs, rhs] = task.eval(ctx);
        out.lhs = std::move(lhs);
        out.rhs = std::move(rhs);
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Grid helpers.

struct GridPoint {
    long n;
    long k;
    std::size_t point;
    PQParams params;
};

CellTuple describe(const GridPoint& g) {
    return {{"n", std::to_string(g.n)},
            {"k", std::to_string(g.k)},
            {"p", g.params.p().to_string()},
            {"q", g.params.q().to_string()}};
}

CellTuple with(CellTuple cell, std::string key, std::string value) {
    cell.emplace_back(std::move(key), std::move(value));
    return cell;
}

template <class Fn>
void for_each_grid(const SuiteConfig& cfg, long n_from, long n_to, Fn fn) {
    for (std::size_t pi = 0; pi < cfg.points.size(); ++pi)
        for (long k = cfg.k_min; k <= cfg.k_max; ++k)
            for (long n = n_from; n <= n_to; ++n) fn(GridPoint{n, k, pi, cfg.points[pi]});
}


// ---------------------------------------------------------------------------
// Sum terms shared with the truncation checks.

XPoly eucls_term(long l, long k, const PQParams& params, const XPoly& euler_n) {
    XPoly inner;
    for (long j = 0; j <= l + 1; ++j)
        inner += sign_power(j) * binomial(l + 1, j) * euler_n.substitute_affine(Rational(1), Rational(-j));
    return pq_weight(l + 1, k, params) * inner;
}

// The i-sum runs over 0..n so vanishing past the bound comes from S2 alone.
XPoly tid1_term(long l, long n, std::span<const XPoly> euler) {
    Rational acc(0);
    for (long i = 0; i <= n; ++i) {
        const Rational s2 = stirling2(i, l);
        if (s2.is_zero()) continue;
        acc += binomial(n, i) * s2 * euler[n - i](Rational(-l));
    }
    return acc * rising_factorial(l);
}

XPoly tid2_term(long l, long n, std::span<const XPoly> euler) {
    Rational acc(0);
    for (long i = 0; i <= n; ++i) {
        const Rational s2 = stirling2(i, l);
        if (s2.is_zero()) continue;
        acc += binomial(n, i) * s2 * euler[n - i](Rational(0));
    }
    return acc * falling_factorial(l);
}

XPoly negate_x(const XPoly& f) { return f.substitute_affine(Rational(-1), Rational(0)); }

// ---------------------------------------------------------------------------
// Check enumerators. Each appends one task per grid cell.

using Enumerator = void (*)(const SuiteConfig&, std::size_t, std::vector<Task>&);

void enum_appell_i(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out) {
    for_each_grid(cfg, 0, cfg.n_max, [&](const GridPoint& g) {
        out.push_back({id, describe(g), [g](const Context& ctx) {
            const auto& e = ctx.at(g.point, g.k).euler;
            // Left side straight from the GF over Q[x]; right side from the numbers.
            const auto base = lift(poly_euler_base_series(g.k, g.params, static_cast<std::size_t>(g.n)));
            XPoly lhs = mul(base, EgfSeries<XPoly>::exp_of(XPoly::x(), base.order())).coeff(g.n);
            XPoly rhs;
            for (long i = 0; i <= g.n; ++i)
                rhs += XPoly::monomial(g.n - i, binomial(g.n, i) * e[i](Rational(0)));
            return Sides{lhs, rhs};
        }});
    });
}

void enum_appell_ii(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out) {
    for_each_grid(cfg, 0, cfg.n_max, [&](const GridPoint& g) {
        for (const Rational& y : y_samples(g.n, cfg.y_extra)) {
            out.push_back({id, with(describe(g), "y", y.to_string()), [g, y](const Context& ctx) {
                const auto& e = ctx.at(g.point, g.k).euler;
                XPoly rhs;
                for (long i = 0; i <= g.n; ++i) rhs += binomial(g.n, i) * y.pow(g.n - i) * e[i];
                return Sides{e[g.n].substitute_affine(Rational(1), y), rhs};
            }});
        }
    });
}

void enum_appell_iii(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out) {
    for_each_grid(cfg, 0, cfg.n_max, [&](const GridPoint& g) {
        for (long m : cfg.m_values) {
            out.push_back({id, with(describe(g), "m", std::to_string(m)), [g, m](const Context& ctx) {
                const auto& e = ctx.at(g.point, g.k).euler;
                XPoly rhs;
                for (long i = 0; i <= g.n; ++i)
                    rhs += binomial(g.n, i) * e[i] * XPoly::monomial(g.n - i, Rational(m - 1).pow(g.n - i));
                return Sides{e[g.n].substitute_affine(Rational(m), Rational(0)), rhs};
            }});
        }
    });
}

void enum_appell_iv(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out) {
    for_each_grid(cfg, 0, cfg.n_max, [&](const GridPoint& g) {
        out.push_back({id, describe(g), [g](const Context& ctx) {
            const auto& e = ctx.at(g.point, g.k).euler;
            XPoly rhs;
            for (long i = 0; i < g.n; ++i) rhs += binomial(g.n, i) * e[i];
            return Sides{e[g.n].substitute_affine(Rational(1), Rational(1)) - e[g.n], rhs};
        }});
    });
}

void enum_eucls(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out) {
    for_each_grid(cfg, 1, cfg.n_max, [&](const GridPoint& g) {
        out.push_back({id, describe(g), [g](const Context& ctx) {
            const XPoly classical = euler_poly(g.n);
            XPoly rhs;
            // Terms with l >= n vanish: an (l+1)-fold difference of a degree-n polynomial.
            for (long l = 0; l <= g.n - 1; ++l) rhs += eucls_term(l, g.k, g.params, classical);
            return Sides{ctx.at(g.point, g.k).euler[g.n], rhs};
        }});
    });
}

void enum_tid1(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out) {
    for_each_grid(cfg, 0, cfg.n_max, [&](const GridPoint& g) {
        out.push_back({id, describe(g), [g](const Context& ctx) {
            const auto& e = ctx.at(g.point, g.k).euler;
            XPoly rhs;
            for (long l = 0; l <= g.n; ++l) rhs += tid1_term(l, g.n, e);
            return Sides{e[g.n], rhs};
        }});
    });
}

void enum_tid2(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out) {
    for_each_grid(cfg, 0, cfg.n_max, [&](const GridPoint& g) {
        out.push_back({id, describe(g), [g](const Context& ctx) {
            const auto& e = ctx.at(g.point, g.k).euler;
            XPoly rhs;
            for (long l = 0; l <= g.n; ++l) rhs += tid2_term(l, g.n, e);
            return Sides{e[g.n], rhs};
        }});
    });
}

void enum_tid3(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out) {
    for_each_grid(cfg, 0, cfg.n_max, [&](const GridPoint& g) {
        for (long s : cfg.s_values) {
            out.push_back({id, with(describe(g), "s", std::to_string(s)), [g, s](const Context& ctx) {
                const auto& e = ctx.at(g.point, g.k).euler;
                const long n = g.n;
                XPoly rhs;
                for (long l = 0; l <= n; ++l) {
                    XPoly inner;
                    for (long i = 0; i <= n - l; ++i)
                        inner += binomial(n - l, i) / binomial(l + s, s) * e[n - l - i](Rational(0)) *
                                 bernoulli_order(i, s);
                    rhs += binomial(n, l) * stirling2(l + s, s) * inner;
                }
                return Sides{e[n], rhs};
            }});
        }
    });
}

void enum_tid4(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out) {
    for_each_grid(cfg, 0, cfg.n_max, [&](const GridPoint& g) {
        for (const Rational& u : cfg.u_values) {
            for (long s : cfg.s_values) {
                auto cell = with(with(describe(g), "u", u.to_string()), "s", std::to_string(s));
                out.push_back({id, std::move(cell), [g, u, s](const Context& ctx) {
                    const auto& e = ctx.at(g.point, g.k).euler;
                    const long n = g.n;
                    const Rational scale = (Rational(1) - u).pow(-s);
                    XPoly rhs;
                    for (long l = 0; l <= n; ++l) {
                        Rational inner(0);
                        for (long i = 0; i <= s; ++i)
                            inner += binomial(s, i) * (-u).pow(s - i) * e[n - l](Rational(i));
                        rhs += binomial(n, l) * scale * inner * frobenius_euler(l, s, u);
                    }
                    return Sides{e[n], rhs};
                }});
            }
        }
    });
}

void enum_euler_bernoulli(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out) {
    for_each_grid(cfg, 1, cfg.n_max, [&](const GridPoint& g) {
        out.push_back({id, describe(g), [g](const Context& ctx) {
            const auto& t = ctx.at(g.point, g.k);
            const XPoly& e = t.euler[g.n];
            const XPoly& b = t.bernoulli[g.n];
            XPoly lhs = e + e.substitute_affine(Rational(1), Rational(1));
            XPoly rhs = Rational(2) * b.substitute_affine(Rational(-1), Rational(0)) -
                        Rational(2) * b.substitute_affine(Rational(-1), Rational(1));
            return Sides{lhs, rhs};
        }});
    });
}

void enum_polyberrel1(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out) {
    for_each_grid(cfg, 0, cfg.n_max, [&](const GridPoint& g) {
        out.push_back({id, describe(g), [g](const Context& ctx) {
            return Sides{ctx.at(g.point, g.k).bernoulli[g.n],
                         poly_bernoulli(g.n, g.k, g.params, Route::stirling_closed_form)};
        }});
    });
}

void enum_cauchy_routes(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out, Family family) {
    static constexpr std::array<std::pair<Route, Route>, 3> kPairs{{
        {Route::gf, Route::stirling_closed_form},
        {Route::gf, Route::integral_expansion},
        {Route::stirling_closed_form, Route::integral_expansion},
    }};
    for_each_grid(cfg, 0, cfg.n_max, [&](const GridPoint& g) {
        for (const auto& [a, b] : kPairs) {
            if (b == Route::integral_expansion && g.k < 1) continue;
            auto cell = with(describe(g), "routes", std::string(to_string(a)) + "|" + std::string(to_string(b)));
            out.push_back({id, std::move(cell), [g, a, b, family](const Context&) {
                return Sides{evaluate({family, g.n, g.k, g.params, a}), evaluate({family, g.n, g.k, g.params, b})};
            }});
        }
    });
}

void enum_cauchy1_routes(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out) {
    enum_cauchy_routes(cfg, id, out, Family::poly_cauchy_1);
}

void enum_cauchy2_routes(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out) {
    enum_cauchy_routes(cfg, id, out, Family::poly_cauchy_2);
}

void enum_orthogonality(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out) {
    if (cfg.points.empty()) return;  // an empty grid stays empty
    for (long n = 0; n <= cfg.n_max; ++n) {
        for (long m = 0; m <= n; ++m) {
            for (int variant : {1, 2}) {
                CellTuple cell{{"n", std::to_string(n)}, {"m", std::to_string(m)},
                               {"sum", variant == 1 ? "S2*S1" : "S1*S2"}};
                out.push_back({id, std::move(cell), [n, m, variant](const Context&) {
                    XPoly lhs;
                    for (long l = m; l <= n; ++l) {
                        if (variant == 1)
                            lhs += sign_power(n - l) * (weighted_stirling2(n, l) * weighted_stirling1(l, m));
                        else
                            lhs += sign_power(l - m) * (weighted_stirling1(n, l) * weighted_stirling2(l, m));
                    }
                    return Sides{lhs, XPoly(n == m ? 1 : 0)};
                }});
            }
        }
    }
}

void enum_invrel1(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out) {
    for_each_grid(cfg, 0, cfg.n_max, [&](const GridPoint& g) {
        out.push_back({id, describe(g), [g](const Context& ctx) {
            const auto& b = ctx.at(g.point, g.k).bernoulli;
            XPoly lhs;
            for (long m = 0; m <= g.n; ++m) lhs += weighted_stirling1(g.n, m) * b[m];
            return Sides{lhs, XPoly(factorial(g.n) * pq_weight(g.n + 1, g.k, g.params))};
        }});
    });
}

void enum_invrel2(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out) {
    for_each_grid(cfg, 0, cfg.n_max, [&](const GridPoint& g) {
        out.push_back({id, describe(g), [g](const Context& ctx) {
            const auto& c = ctx.at(g.point, g.k).cauchy1;
            XPoly lhs;
            for (long m = 0; m <= g.n; ++m) lhs += weighted_stirling2(g.n, m) * c[m];
            return Sides{lhs, XPoly(pq_weight(g.n + 1, g.k, g.params))};
        }});
    });
}

void enum_invrel3(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out) {
    for_each_grid(cfg, 0, cfg.n_max, [&](const GridPoint& g) {
        out.push_back({id, describe(g), [g](const Context& ctx) {
            const auto& c = ctx.at(g.point, g.k).cauchy2;
            XPoly lhs;
            for (long m = 0; m <= g.n; ++m) lhs += negate_x(weighted_stirling2(g.n, m)) * c[m];
            return Sides{lhs, XPoly(sign_power(g.n) * pq_weight(g.n + 1, g.k, g.params))};
        }});
    });
}

enum class Cross { b_c, b_chat, c_b, chat_b };

// Each right side is a polynomial in y of degree <= n, so n + 1 samples
// pin it down.
void enum_cross(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out, Cross which) {
    const long n_to = std::min(cfg.n_max, cfg.cross_n_max);
    for_each_grid(cfg, 0, n_to, [&](const GridPoint& g) {
        for (const Rational& y : y_samples(g.n, cfg.y_extra)) {
            out.push_back({id, with(describe(g), "y", y.to_string()), [g, y, which](const Context& ctx) {
                const auto& t = ctx.at(g.point, g.k);
                const long n = g.n;
                XPoly rhs;
                for (long m = 0; m <= n; ++m) {
                    Rational inner(0);
                    for (long l = 0; l <= n; ++l) {
                        switch (which) {
                            case Cross::b_c:
                                inner += weighted_stirling2(m, l)(y) * t.cauchy1[l](y);
                                break;
                            case Cross::b_chat:
                                inner += weighted_stirling2(m, l)(-y) * t.cauchy2[l](y);
                                break;
                            case Cross::c_b:
                            case Cross::chat_b:
                                inner += weighted_stirling1(m, l)(y) * t.bernoulli[l](y);
                                break;
                        }
                    }
                    switch (which) {
                        case Cross::b_c:
                            rhs += sign_power(n - m) * factorial(m) * inner * weighted_stirling2(n, m);
                            break;
                        case Cross::b_chat:
                            rhs += sign_power(n) * factorial(m) * inner * weighted_stirling2(n, m);
                            break;
                        case Cross::c_b:
                            rhs += sign_power(n - m) / factorial(m) * inner * weighted_stirling1(n, m);
                            break;
                        case Cross::chat_b:
                            rhs += sign_power(n) / factorial(m) * inner * negate_x(weighted_stirling1(n, m));
                            break;
                    }
                }
                const XPoly& lhs = (which == Cross::b_c || which == Cross::b_chat) ? t.bernoulli[n]
                                   : which == Cross::c_b                          ? t.cauchy1[n]
                                                                                  : t.cauchy2[n];
                return Sides{lhs, rhs};
            }});
        }
    });
}

void enum_cross_b_c(const SuiteConfig& c, std::size_t id, std::vector<Task>& o) { enum_cross(c, id, o, Cross::b_c); }
void enum_cross_b_chat(const SuiteConfig& c, std::size_t id, std::vector<Task>& o) { enum_cross(c, id, o, Cross::b_chat); }
void enum_cross_c_b(const SuiteConfig& c, std::size_t id, std::vector<Task>& o) { enum_cross(c, id, o, Cross::c_b); }
void enum_cross_chat_b(const SuiteConfig& c, std::size_t id, std::vector<Task>& o) { enum_cross(c, id, o, Cross::chat_b); }

void enum_vandermonde(const SuiteConfig& cfg, std::size_t id, std::vector<Task>& out, bool first_kind_left) {
    for_each_grid(cfg, 1, cfg.n_max, [&](const GridPoint& g) {
        out.push_back({id, describe(g), [g, first_kind_left](const Context& ctx) {
            const auto& t = ctx.at(g.point, g.k);
            const auto& left = first_kind_left ? t.cauchy1 : t.cauchy2;
            const auto& right = first_kind_left ? t.cauchy2 : t.cauchy1;
            XPoly rhs;
            for (long m = 1; m <= g.n; ++m) rhs += binomial(g.n - 1, m - 1) / factorial(m) * right[m];
            return Sides{sign_power(g.n) / factorial(g.n) * left[g.n], rhs};
        }});
    });
}

void enum_vandermonde_c(const SuiteConfig& c, std::size_t id, std::vector<Task>& o) { enum_vandermonde(c, id, o, true); }
void enum_vandermonde_chat(const SuiteConfig& c, std::size_t id, std::vector<Task>& o) { enum_vandermonde(c, id, o, false); }

struct CheckEntry {
    std::string_view id;
    Enumerator enumerate;
};

constexpr std::array kChecks{
    CheckEntry{"appell_i", enum_appell_i},
    CheckEntry{"appell_ii", enum_appell_ii},
    CheckEntry{"appell_iii", enum_appell_iii},
    CheckEntry{"appell_iv", enum_appell_iv},
    CheckEntry{"eucls", enum_eucls},
    CheckEntry{"tid1", enum_tid1},
    CheckEntry{"tid2", enum_tid2},
    CheckEntry{"tid3", enum_tid3},
    CheckEntry{"tid4", enum_tid4},
    CheckEntry{"euler_bernoulli", enum_euler_bernoulli},
    CheckEntry{"polyberrel1", enum_polyberrel1},
    CheckEntry{"cauchy1_routes", enum_cauchy1_routes},
    CheckEntry{"cauchy2_routes", enum_cauchy2_routes},
    CheckEntry{"stirling_orthogonality", enum_orthogonality},
    CheckEntry{"invrel1", enum_invrel1},
    CheckEntry{"invrel2", enum_invrel2},
    CheckEntry{"invrel3", enum_invrel3},
    CheckEntry{"cross_b_c", enum_cross_b_c},
    CheckEntry{"cross_b_chat", enum_cross_b_chat},
    CheckEntry{"cross_c_b", enum_cross_c_b},
    CheckEntry{"cross_chat_b", enum_cross_chat_b},
    CheckEntry{"vandermonde_c", enum_vandermonde_c},
    CheckEntry{"vandermonde_chat", enum_vandermonde_chat},
};

const std::array<std::string_view, kChecks.size()> kIds = [] {
    std::array<std::string_view, kChecks.size()> ids{};
    for (std::size_t i = 0; i < kChecks.size(); ++i) ids[i] = kChecks[i].id;
    return ids;
}();

std::vector<std::size_t> selected_checks(const SuiteConfig& cfg) {
    for (const auto& name : cfg.only)
        if (std::find(kIds.begin(), kIds.end(), name) == kIds.end())
            throw std::invalid_argument("unknown identity id '" + name + "'");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < kChecks.size(); ++i)
        if (cfg.only.empty() || std::find(cfg.only.begin(), cfg.only.end(), kChecks[i].id) != cfg.only.end())
            out.push_back(i);
    return out;
}

Context make_context(const SuiteConfig& cfg, bool parallel) {
    Context ctx;
    ctx.k_min = cfg.k_min;
    ctx.k_count = std::max<long>(0, cfg.k_max - cfg.k_min + 1);
    const long n_max = std::max<long>(0, cfg.n_max);
    const long total = static_cast<long>(cfg.points.size()) * ctx.k_count;
    ctx.tables.resize(static_cast<std::size_t>(total));
    const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (parallel)
    for (long i = 0; i < total; ++i) {
        const auto point = static_cast<std::size_t>(i / ctx.k_count);
        const long k = cfg.k_min + i % ctx.k_count;
        ctx.tables[static_cast<std::size_t>(i)] = build_tables(n_max, k, cfg.points[point]);
    }
    return ctx;
}

std::vector<IdentityReport> execute(const SuiteConfig& cfg, bool parallel) {
    const auto checks = selected_checks(cfg);
    std::vector<Task> tasks;
    for (std::size_t slot = 0; slot < checks.size(); ++slot)
        kChecks[checks[slot]].enumerate(cfg, slot, tasks);

    const Context ctx = make_context(cfg, parallel);
    std::vector<Outcome> outcomes(tasks.size());
    const long count = static_cast<long>(tasks.size());
    if (parallel) {
        const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long i = 0; i < count; ++i) outcomes[i] = run_task(tasks[i], ctx);
    } else {
        for (long i = 0; i < count; ++i) outcomes[i] = run_task(tasks[i], ctx);
    }

    // Aggregate in task order so reports do not depend on scheduling.
    std::vector<IdentityReport> reports(checks.size());
    for (std::size_t slot = 0; slot < checks.size(); ++slot) reports[slot].id = std::string(kChecks[checks[slot]].id);
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        auto& r = reports[tasks[i].check];
        ++r.cells_total;
        if (outcomes[i].ok()) {
            ++r.cells_passed;
        } else if (!r.first_failure) {
            r.first_failure = CellFailure{tasks[i].cell, std::move(outcomes[i].lhs), std::move(outcomes[i].rhs),
                                          std::move(outcomes[i].error)};
        }
    }
    return reports;
}

}  // namespace

std::vector<PQParams> default_parameter_points() {
    return {PQParams(Rational(1, 2), Rational(1, 3)), PQParams(Rational(3, 4), Rational(1, 5)),
            PQParams(Rational(1), Rational(2, 7)), PQParams(Rational(1), Rational(1)),
            PQParams(Rational(2, 3), Rational(2, 3))};
}

std::span<const std::string_view> identity_ids() { return kIds; }

std::vector<IdentityReport> run_all(const SuiteConfig& config) { return execute(config, true); }

std::vector<IdentityReport> run_all_serial(const SuiteConfig& config) { return execute(config, false); }

IdentityReport run_check(std::string_view id, const SuiteConfig& config) {
    SuiteConfig one = config;
    one.only = {std::string(id)};
    return execute(one, false).front();
}

bool all_passed(std::span<const IdentityReport> reports) {
    return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.passed(); });
}

XPoly truncation_tail_term(TruncatedSum sum, long n, long k, const PQParams& params) {
    if (n < 0) throw std::invalid_argument("truncation_tail_term: negative n");
    switch (sum) {
        case TruncatedSum::eucls: return eucls_term(n, k, params, euler_poly(n));
        case TruncatedSum::tid1: return tid1_term(n + 1, n, family_table(Family::poly_euler, n, k, params));
        case TruncatedSum::tid2: return tid2_term(n + 1, n, family_table(Family::poly_euler, n, k, params));
    }
    throw std::logic_error("unreachable truncated sum");
}

std::vector<Rational> y_samples(long degree, long extra) {
    const long count = std::max<long>(0, degree) + 1 + std::max<long>(0, extra);
    std::vector<Rational> ys;
    for (long j = 0; j < count; ++j) ys.push_back(sign_power(j) * Rational(j + 1, 7));
    return ys;
}

}  // namespace pqpoly

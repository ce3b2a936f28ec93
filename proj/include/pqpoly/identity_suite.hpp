#ifndef PQPOLY_IDENTITY_SUITE_HPP
#define PQPOLY_IDENTITY_SUITE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pqpoly/pq_calculus.hpp"
#include "pqpoly/rational.hpp"
#include "pqpoly/xpoly.hpp"

namespace pqpoly {

/// Ordered (name, value) description of one grid cell, e.g. {"n","3"}.
using CellTuple = std::vector<std::pair<std::string, std::string>>;

struct CellFailure {
    CellTuple cell;
    XPoly lhs;
    XPoly rhs;
    /// Set when evaluation threw instead of producing two sides.
    std::string error;
};

struct IdentityReport {
    std::string id;
    std::size_t cells_total = 0;
    std::size_t cells_passed = 0;
    std::optional<CellFailure> first_failure;

    bool vacuous() const { return cells_total == 0; }
    bool passed() const { return !vacuous() && cells_passed == cells_total; }
};

/// The documented parameter points: (1/2,1/3), (3/4,1/5), (1,2/7),
/// (1,1) and the equal-limit point (2/3,2/3).
std::vector<PQParams> default_parameter_points();

struct SuiteConfig {
    long n_max = 10;
    long k_min = -2;
    long k_max = 3;
    std::vector<PQParams> points = default_parameter_points();
    std::vector<long> s_values{1, 2, 3};
    std::vector<Rational> u_values{Rational(-1), Rational(2), Rational(1, 2)};
    std::vector<long> m_values{1, 2, 3};
    /// Cross relations are run up to min(n_max, cross_n_max).
    long cross_n_max = 8;
    /// y-dependent identities use (y-degree bound + 1 + y_extra) samples.
    long y_extra = 1;
    /// Restrict to these identity ids; empty means all.
    std::vector<std::string> only;
    /// OpenMP thread cap for run_all; 0 uses the runtime default.
    int threads = 0;
};

/// Every identity id, in report order.
std::span<const std::string_view> identity_ids();

/// Runs the selected identities with grid cells spread over OpenMP threads.
/// The result is identical to run_all_serial for the same config.
std::vector<IdentityReport> run_all(const SuiteConfig& config);
/// Single-threaded reference implementation of run_all.
std::vector<IdentityReport> run_all_serial(const SuiteConfig& config);
/// One identity by id (serial). Throws std::invalid_argument for unknown ids.
IdentityReport run_check(std::string_view id, const SuiteConfig& config);

/// True iff every report passed and none is vacuous.
bool all_passed(std::span<const IdentityReport> reports);

/// Infinite sums the suite truncates.
enum class TruncatedSum { eucls, tid1, tid2 };

/// The first term past the truncation bound (l = n for eucls, l = n + 1 for
/// tid1/tid2); it is the zero polynomial when the truncation is sound.
XPoly truncation_tail_term(TruncatedSum sum, long n, long k, const PQParams& params);

/// y sample points used for y-dependent identities of y-degree `degree`.
std::vector<Rational> y_samples(long degree, long extra);

}  // namespace pqpoly

#endif  // PQPOLY_IDENTITY_SUITE_HPP

#include "plethyx/plethysm.hpp"

#include <map>

#include "plethyx/errors.hpp"

namespace plethyx {

TruncatedSeries h_series(int max_degree) {
    SchurPoly h;
    for (int m = 0; m <= max_degree; ++m) h.add_term(Partition(std::vector<int>{m}), 1);
    return TruncatedSeries(std::move(h), max_degree);
}

namespace {

// shared core: truncate_at < 0 means exact (no truncation)
PowerSumPoly plethysm_ps(const SchurPoly& f, const PowerSumPoly& g, int truncate_at) {
    PowerSumPoly fp = to_power_sum(f);
    std::map<int, PowerSumPoly> stretched; // cache of p_k |-> g with indices scaled by k
    PowerSumPoly out;
    for (const auto& [rho, a] : fp.terms()) {
        PowerSumPoly term = PowerSumPoly::one();
        for (int k : rho.parts()) {
            auto it = stretched.find(k);
            if (it == stretched.end()) {
                PowerSumPoly s = g.stretched(k);
                if (truncate_at >= 0) s = s.truncated(truncate_at);
                it = stretched.emplace(k, std::move(s)).first;
            }
            term = term.multiplied(it->second, truncate_at);
            if (term.is_zero()) break;
        }
        out += term.scaled(a);
    }
    return out;
}

} // namespace

SchurPoly plethysm(const SchurPoly& f, const SchurPoly& g) {
    return from_power_sum(plethysm_ps(f, to_power_sum(g), -1));
}

TruncatedSeries plethysm_truncated(const SchurPoly& f, const TruncatedSeries& g) {
    PowerSumPoly gp = to_power_sum(g.value).truncated(g.max_degree);
    SchurPoly value = from_power_sum(plethysm_ps(f, gp, g.max_degree));
    return TruncatedSeries(std::move(value), g.max_degree);
}

SchurPoly plethysm_adjoint(const SchurPoly& f, const SchurPoly& g) {
    auto fd = f.homogeneous_degree();
    auto gd = g.homogeneous_degree();
    if (!fd) throw scope_error("plethysm_adjoint: f must be homogeneous");
    if (!gd || (*gd < 1 && !g.is_zero()))
        throw scope_error("plethysm_adjoint: g must be homogeneous of degree >= 1");
    if (f.is_zero() || g.is_zero()) return SchurPoly::zero();
    int d = *fd, k = *gd;
    if (d % k != 0) return SchurPoly::zero();
    SchurPoly out;
    for (const Partition& mu : enumerate_partitions(d / k)) {
        BigInt c = hall_inner(f, plethysm(SchurPoly::single(mu), g));
        if (!c.is_zero()) out.add_term(mu, c);
    }
    return out;
}

namespace {

// s_mu[H] truncated at `depth`, memoized: the oracles hit the same pairs over
// and over during sweeps
const SchurPoly& s_mu_of_h(const Partition& mu, int depth) {
    static thread_local std::map<std::pair<std::vector<int>, int>, SchurPoly> cache;
    auto key = std::make_pair(mu.parts(), depth);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(std::move(key),
                           plethysm_truncated(SchurPoly::single(mu), h_series(depth)).value)
                 .first;
    return it->second;
}

} // namespace

TruncatedSeries frobenius_oracle(const SchurPoly& f, int max_degree) {
    auto fd = f.homogeneous_degree();
    if (!fd) throw scope_error("frobenius_oracle: f must be homogeneous");
    int d = *fd;
    SchurPoly out;
    for (int n = 0; n <= max_degree; ++n)
        for (const Partition& mu : enumerate_partitions(n)) {
            BigInt c = hall_inner(f, s_mu_of_h(mu, d));
            if (!c.is_zero()) out.add_term(mu, c);
        }
    return TruncatedSeries(std::move(out), max_degree);
}

BigInt restriction_oracle(const Partition& lambda, const Partition& mu) {
    return hall_inner(SchurPoly::single(lambda), s_mu_of_h(mu, lambda.size()));
}

} // namespace plethyx

#include "plethyx/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>

#include "plethyx/errors.hpp"
#include "plethyx/tableaux.hpp"

namespace plethyx {

int monomial_cap() {
    if (const char* env = std::getenv("PLETHYX_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 10;
}

/* ---- monomial-substitution oracle --------------------------------------- */

namespace {

using Expo = std::vector<int>;          // exponent vector over a fixed variable count
using MPoly = std::map<Expo, BigInt>;   // map order is lex; rbegin() is the leading term

void mpoly_add(MPoly& acc, const Expo& e, const BigInt& c) {
    auto [it, inserted] = acc.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

// semistandard fillings of the straight shape lambda with entries <= nvalues
void for_each_ssyt(const Partition& lambda, int nvalues,
                   const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    int rows = lambda.length();
    std::vector<std::vector<int>> fill(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) fill[size_t(i)].assign(size_t(lambda.part(i)), 0);
    std::function<void(int, int)> rec = [&](int row, int col) {
        if (row == rows) {
            visit(fill);
            return;
        }
        int nrow = row, ncol = col + 1;
        if (ncol == lambda.part(row)) {
            ++nrow;
            ncol = 0;
        }
        int left = col > 0 ? fill[size_t(row)][size_t(col) - 1] : 1;
        int above = row > 0 && col < lambda.part(row - 1) ? fill[size_t(row) - 1][size_t(col)] : 0;
        for (int v = std::max(left, above + 1); v <= nvalues; ++v) {
            fill[size_t(row)][size_t(col)] = v;
            rec(nrow, ncol);
        }
    };
    if (rows == 0)
        visit(fill);
    else
        rec(0, 0);
}

// s_lambda(x_1 .. x_nvars) as a monomial map
MPoly schur_monomials(const Partition& lambda, int nvars) {
    MPoly out;
    for_each_ssyt(lambda, nvars, [&](const std::vector<std::vector<int>>& fill) {
        Expo e(size_t(nvars), 0);
        for (const auto& row : fill)
            for (int v : row) ++e[size_t(v) - 1];
        mpoly_add(out, e, 1);
    });
    return out;
}

// s_mu evaluated at the monomial list: SSYT entries pick monomials, exponents add
MPoly schur_at_monomials(const Partition& mu, const std::vector<Expo>& monomials, int nvars) {
    MPoly out;
    for_each_ssyt(mu, int(monomials.size()), [&](const std::vector<std::vector<int>>& fill) {
        Expo e(size_t(nvars), 0);
        for (const auto& row : fill)
            for (int v : row) {
                const Expo& m = monomials[size_t(v) - 1];
                for (size_t i = 0; i < m.size(); ++i) e[i] += m[i];
            }
        mpoly_add(out, e, 1);
    });
    return out;
}

} // namespace

SchurPoly monomial_substitution_plethysm(const SchurPoly& f, const SchurPoly& g, int cap) {
    if (cap < 0) cap = monomial_cap();
    auto fd = f.homogeneous_degree();
    auto gd = g.homogeneous_degree();
    if (!fd || !gd)
        throw scope_error("monomial_substitution_plethysm: f and g must be homogeneous");
    if (f.is_zero() || g.is_zero()) return SchurPoly::zero();
    long long product = static_cast<long long>(*fd) * *gd;
    if (product > cap)
        throw cap_error("monomial_substitution_plethysm: deg(f)*deg(g) = " +
                        std::to_string(product) + " exceeds cap " + std::to_string(cap));
    if (*fd == 0) return f;
    int nvars = int(std::max<long long>(product, 1));

    // monomial list of g, multiplicities unfolded
    MPoly gpoly;
    for (const auto& [nu, c] : g.terms()) {
        MPoly part = schur_monomials(nu, nvars);
        for (const auto& [e, m] : part) mpoly_add(gpoly, e, m * c);
    }
    std::vector<Expo> monomials;
    for (const auto& [e, c] : gpoly) {
        if (c.is_negative())
            throw scope_error("monomial_substitution_plethysm: g has a negative monomial");
        long long m = c.to_long_long();
        for (long long k = 0; k < m; ++k) monomials.push_back(e);
    }

    MPoly result;
    for (const auto& [mu, c] : f.terms()) {
        MPoly val = schur_at_monomials(mu, monomials, nvars);
        for (const auto& [e, m] : val) mpoly_add(result, e, m * c);
    }

    // leading-term subtraction: the lex-greatest exponent of a symmetric
    // polynomial is weakly decreasing and is the leading monomial of its Schur
    // function, so peeling it off terminates
    SchurPoly out;
    while (!result.empty()) {
        auto lead = std::prev(result.end());
        Expo alpha = lead->first;
        BigInt c = lead->second;
        for (size_t i = 0; i + 1 < alpha.size(); ++i)
            if (alpha[i] < alpha[i + 1])
                throw integrality_error(
                    "monomial_substitution_plethysm: result is not symmetric");
        Partition lam(alpha);
        out.add_term(lam, c);
        MPoly expansion = schur_monomials(lam, nvars);
        for (const auto& [e, m] : expansion) mpoly_add(result, e, -(m * c));
    }
    return out;
}

/* ---- sweeps -------------------------------------------------------------- */

namespace {

struct CellResult {
    long long checked = 0;
    std::vector<Mismatch> mismatches;
};

// cells evaluated independently, results merged in index order so the report
// does not depend on the parallelism level
CellResult run_cells(size_t n, int parallelism, const std::function<CellResult(size_t)>& cell) {
    CellResult total;
    auto merge = [&](CellResult&& r) {
        total.checked += r.checked;
        for (auto& m : r.mismatches) total.mismatches.push_back(std::move(m));
    };
    if (parallelism <= 1) {
        for (size_t i = 0; i < n; ++i) merge(cell(i));
        return total;
    }
    size_t chunks = std::min<size_t>(size_t(parallelism), std::max<size_t>(n, 1));
    std::vector<std::future<std::vector<CellResult>>> futures;
    for (size_t k = 0; k < chunks; ++k) {
        size_t lo = n * k / chunks, hi = n * (k + 1) / chunks;
        futures.push_back(std::async(std::launch::async, [lo, hi, &cell] {
            std::vector<CellResult> rs;
            rs.reserve(hi - lo);
            for (size_t i = lo; i < hi; ++i) rs.push_back(cell(i));
            return rs;
        }));
    }
    for (auto& f : futures)
        for (auto& r : f.get()) merge(std::move(r));
    return total;
}

long long ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
}

std::string schur_brief(const SchurPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [lam, c] : p.terms()) {
        if (!s.empty()) s += " + ";
        s += c.to_string() + "*s[" + lam.to_string() + "]";
    }
    return s;
}

// exponent vectors of length exactly ell with entry sum <= max_size
std::vector<IntVector> exponent_vectors(int ell, int max_size) {
    std::vector<IntVector> out;
    IntVector cur(size_t(ell), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == ell) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[size_t(i)] = v;
            rec(i + 1, left - v);
        }
        cur[size_t(i)] = 0;
    };
    rec(0, max_size);
    return out;
}

std::string vec_to_string(const IntVector& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + ")";
}

} // namespace

SweepReport sweep_plethysm_hr(int max_size, int r_max, int parallelism) {
    auto t0 = std::chrono::steady_clock::now();
    struct Cell {
        int r;
        Partition mu;
    };
    std::vector<Cell> cells;
    for (int r = 1; r <= r_max; ++r)
        for (int d = 0; d <= max_size; d += r)
            for (const Partition& mu : enumerate_partitions(d / r)) cells.push_back({r, mu});

    CellResult total = run_cells(cells.size(), parallelism, [&](size_t i) {
        CellResult res;
        const auto& [r, mu] = cells[i];
        SchurPoly expansion = plethysm(SchurPoly::single(mu), SchurPoly::single(Partition({r})));
        int d = mu.size() * r;
        for (const Partition& lam : enumerate_partitions(d, r + 1)) {
            int closed = plethysm_coeff_hr_closed(lam, mu, r);
            BigInt brute = expansion.coeff(lam);
            ++res.checked;
            if (BigInt(closed) != brute)
                res.mismatches.push_back({"r=" + std::to_string(r) + " lambda=[" +
                                              lam.to_string() + "] mu=[" + mu.to_string() + "]",
                                          std::to_string(closed), brute.to_string()});
        }
        return res;
    });

    SweepReport report;
    report.suite = "plethysm-hr";
    report.checked = total.checked;
    report.mismatches = std::move(total.mismatches);
    report.config = {{"max_size", max_size}, {"r_max", r_max}};
    report.elapsed_ms = ms_since(t0);
    return report;
}

SweepReport sweep_restriction(int max_lambda, int max_mu, int parallelism) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Partition> lambdas;
    for (int n = 0; n <= max_lambda; ++n)
        for (const Partition& lam : enumerate_partitions(n, 3)) lambdas.push_back(lam);
    std::vector<Partition> mus;
    for (int n = 0; n <= max_mu; ++n)
        for (const Partition& mu : enumerate_partitions(n)) mus.push_back(mu);

    CellResult total = run_cells(lambdas.size(), parallelism, [&](size_t i) {
        CellResult res;
        const Partition& lam = lambdas[i];
        HPrefixedSeries closed = frobenius_three_columns(lam, max_mu);
        for (const Partition& mu : mus) {
            BigInt via_main = closed.coefficient(mu);
            BigInt tuples(count_restriction_tuples(lam, mu));
            BigInt oracle = restriction_oracle(lam, mu);
            ++res.checked;
            if (via_main != tuples || via_main != oracle)
                res.mismatches.push_back(
                    {"lambda=[" + lam.to_string() + "] mu=[" + mu.to_string() + "]",
                     "main=" + via_main.to_string() + " tuples=" + tuples.to_string(),
                     oracle.to_string()});
        }
        return res;
    });

    SweepReport report;
    report.suite = "restriction";
    report.checked = total.checked;
    report.mismatches = std::move(total.mismatches);
    report.config = {{"max_lambda", max_lambda}, {"max_mu", max_mu}};
    report.elapsed_ms = ms_since(t0);
    return report;
}

SweepReport sweep_he_h_perp(int max_size, int ell_max, int r_max, int parallelism) {
    auto t0 = std::chrono::steady_clock::now();
    struct Cell {
        bool elementary;
        int r;
        IntVector lam;
        bool rect; // compare the rectangular special case instead of brute force
    };
    std::vector<Cell> cells;
    for (int r = 1; r <= r_max; ++r) {
        for (int ell = 0; ell <= ell_max; ++ell)
            for (const IntVector& lam : exponent_vectors(ell, max_size)) {
                cells.push_back({false, r, lam, false});
                cells.push_back({true, r, lam, false});
            }
        for (const IntVector& lam : exponent_vectors(r + 1, max_size))
            cells.push_back({true, r, lam, true});
    }

    CellResult total = run_cells(cells.size(), parallelism, [&](size_t i) {
        CellResult res;
        const Cell& cell = cells[i];
        SchurPoly closed = cell.elementary ? e_hr_perp_closed(cell.lam, cell.r)
                                           : h_hr_perp_closed(cell.lam, cell.r);
        SchurPoly other;
        if (cell.rect) {
            other = e_hr_perp_rect(cell.lam, cell.r);
        } else {
            SchurPoly f = cell.elementary ? e_to_schur(cell.lam) : h_to_schur(cell.lam);
            other = plethysm_adjoint(f, SchurPoly::single(Partition({cell.r})));
        }
        ++res.checked;
        if (closed != other)
            res.mismatches.push_back({std::string(cell.elementary ? "e" : "h") + vec_to_string(cell.lam) +
                                          " r=" + std::to_string(cell.r) +
                                          (cell.rect ? " (rect)" : ""),
                                      schur_brief(closed), schur_brief(other)});
        return res;
    });

    SweepReport report;
    report.suite = "he-h-perp";
    report.checked = total.checked;
    report.mismatches = std::move(total.mismatches);
    report.config = {{"max_size", max_size}, {"ell_max", ell_max}, {"r_max", r_max}};
    report.elapsed_ms = ms_since(t0);
    return report;
}

SweepReport sweep_f_he(int max_size, int ell_max, int parallelism) {
    auto t0 = std::chrono::steady_clock::now();
    struct Cell {
        bool elementary;
        IntVector lam;
    };
    std::vector<Cell> cells;
    for (int ell = 0; ell <= ell_max; ++ell)
        for (const IntVector& lam : exponent_vectors(ell, max_size)) {
            cells.push_back({false, lam});
            cells.push_back({true, lam});
        }

    CellResult total = run_cells(cells.size(), parallelism, [&](size_t i) {
        CellResult res;
        const Cell& cell = cells[i];
        int weight = 0;
        for (int v : cell.lam) weight += v;
        int depth = weight + 3;
        HPrefixedSeries closed = cell.elementary ? frobenius_e_closed(cell.lam, depth)
                                                 : frobenius_h_closed(cell.lam, depth);
        SchurPoly f = cell.elementary ? e_to_schur(cell.lam) : h_to_schur(cell.lam);
        TruncatedSeries oracle = frobenius_oracle(f, depth);
        ++res.checked;
        if (closed.expanded(depth) != oracle.value)
            res.mismatches.push_back({std::string(cell.elementary ? "e" : "h") + vec_to_string(cell.lam),
                                      schur_brief(closed.expanded(depth)),
                                      schur_brief(oracle.value)});
        return res;
    });

    SweepReport report;
    report.suite = "f-he";
    report.checked = total.checked;
    report.mismatches = std::move(total.mismatches);
    report.config = {{"max_size", max_size}, {"ell_max", ell_max}};
    report.elapsed_ms = ms_since(t0);
    return report;
}

SweepReport sweep_ring(int max_size, int parallelism) {
    auto t0 = std::chrono::steady_clock::now();
    struct Cell {
        enum Kind { Straighten, Multiply } kind;
        Partition a, b;
    };
    std::vector<Cell> cells;
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            cells.push_back({Cell::Straighten, lam, {}});
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& mu : enumerate_partitions(n))
            for (int m = 0; n + m <= max_size; ++m)
                for (const Partition& nu : enumerate_partitions(m))
                    cells.push_back({Cell::Multiply, mu, nu});

    CellResult total = run_cells(cells.size(), parallelism, [&](size_t i) {
        CellResult res;
        const Cell& cell = cells[i];
        if (cell.kind == Cell::Straighten) {
            const Partition& lam = cell.a;
            SchurPoly s = SchurPoly::single(lam);
            // Jacobi-Trudi both ways
            ++res.checked;
            if (jacobi_trudi_h(lam.parts()) != s)
                res.mismatches.push_back({"jacobi_trudi_h [" + lam.to_string() + "]", "", ""});
            ++res.checked;
            if (jacobi_trudi_e(lam.parts()) != SchurPoly::single(lam.transposed()))
                res.mismatches.push_back({"jacobi_trudi_e [" + lam.to_string() + "]", "", ""});
            // Schur <-> power-sum round trip
            ++res.checked;
            if (from_power_sum(to_power_sum(s)) != s)
                res.mismatches.push_back({"power-sum round trip [" + lam.to_string() + "]", "", ""});
            // omega and antipode
            ++res.checked;
            if (omega(s) != SchurPoly::single(lam.transposed()) || omega(omega(s)) != s ||
                antipode(s) != omega(s).scaled(lam.size() % 2 ? BigInt(-1) : BigInt(1)))
                res.mismatches.push_back({"omega/antipode [" + lam.to_string() + "]", "", ""});
            // Hopf convolution: sum_mu S(s_mu) s_{lambda/mu} = [lambda empty]
            if (lam.size() <= 6) {
                SchurPoly conv;
                for (int k = 0; k <= lam.size(); ++k)
                    for (const Partition& mu : enumerate_partitions(k)) {
                        if (!lam.contains(mu)) continue;
                        conv += antipode(SchurPoly::single(mu)) * skew_schur(lam, mu);
                    }
                ++res.checked;
                SchurPoly expect = lam.empty() ? SchurPoly::one() : SchurPoly::zero();
                if (conv != expect)
                    res.mismatches.push_back({"antipode convolution [" + lam.to_string() + "]",
                                              schur_brief(conv), schur_brief(expect)});
            }
        } else {
            const Partition& mu = cell.a;
            const Partition& nu = cell.b;
            SchurPoly lr = SchurPoly::single(mu) * SchurPoly::single(nu);
            SchurPoly ps = from_power_sum(
                to_power_sum(SchurPoly::single(mu)).multiplied(to_power_sum(SchurPoly::single(nu))));
            ++res.checked;
            if (lr != ps)
                res.mismatches.push_back({"multiply [" + mu.to_string() + "]*[" + nu.to_string() + "]",
                                          schur_brief(lr), schur_brief(ps)});
            if (mu.size() <= 5 && nu.size() <= 5) {
                ++res.checked;
                if (omega(lr) != omega(SchurPoly::single(mu)) * omega(SchurPoly::single(nu)))
                    res.mismatches.push_back(
                        {"omega homomorphism [" + mu.to_string() + "]*[" + nu.to_string() + "]",
                         "", ""});
            }
        }
        return res;
    });

    SweepReport report;
    report.suite = "ring";
    report.checked = total.checked;
    report.mismatches = std::move(total.mismatches);
    report.config = {{"max_size", max_size}};
    report.elapsed_ms = ms_since(t0);
    return report;
}

} // namespace plethyx

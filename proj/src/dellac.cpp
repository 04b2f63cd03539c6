#include "cyclequiv/dellac.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cyclequiv {

int separator_boundary(int j, int n) { return mod_n(n - j, n); }

int end_vertex_of_row(int j, int n) {
    const int s = separator_boundary(j, n);
    return s == 0 ? n : s;
}

namespace {

void check_shape(const AffineDellacConfig& cfg) {
    if (cfg.n < 1 || cfg.omega < 1 ||
        static_cast<int>(cfg.rows.size()) != 2 * cfg.n)
        throw std::invalid_argument("malformed configuration");
    for (const DellacRow& r : cfg.rows)
        if (r.col < 1 || r.col > cfg.n)
            throw std::invalid_argument("malformed configuration");
}

int forced_zero_col(int j, int n) {
    return mod_n(end_vertex_of_row(j, n), n) + 1;
}

} // namespace

int p_of_row(const AffineDellacConfig& cfg, int j) {
    const DellacRow& r = cfg.rows[j - 1];
    if (r.k == 0) return 0;
    return mod_n(separator_boundary(j, cfg.n) - r.col, cfg.n) + 1;
}

int length_of_row(const AffineDellacConfig& cfg, int j) {
    const DellacRow& r = cfg.rows[j - 1];
    return p_of_row(cfg, j) + cfg.n * std::max(r.k - 1, 0);
}

ValidationResult validate(const AffineDellacConfig& cfg) {
    check_shape(cfg);
    const int n = cfg.n;

    for (int j = 1; j <= 2 * n; ++j)
        if (cfg.rows[j - 1].k < 0 || cfg.rows[j - 1].k > cfg.omega)
            return {false, "entry out of range"};

    std::vector<int> per_col(n, 0);
    for (const DellacRow& r : cfg.rows) ++per_col[r.col - 1];
    for (int c = 0; c < n; ++c)
        if (per_col[c] != 2) return {false, "two entries per column violated"};

    for (int j = 1; j <= 2 * n; ++j)
        if (cfg.rows[j - 1].k == 0 && cfg.rows[j - 1].col != forced_zero_col(j, n))
            return {false, "zero entry off its forced column"};

    long long sum = 0;
    for (int j = 1; j <= 2 * n; ++j) {
        const int l = length_of_row(cfg, j);
        if (l > cfg.omega * n) return {false, "row length exceeds omega*n"};
        sum += l;
    }
    const long long target = static_cast<long long>(cfg.omega) * n * n;
    if (sum != target) return {false, "sum condition violated"};
    return {true, ""};
}

std::vector<int> to_length_tuple(const AffineDellacConfig& cfg) {
    const ValidationResult v = validate(cfg);
    if (!v.ok) throw std::invalid_argument("invalid configuration: " + v.reason);
    std::vector<int> lengths(2 * cfg.n);
    for (int j = 1; j <= 2 * cfg.n; ++j)
        lengths[j - 1] = length_of_row(cfg, j);
    return lengths;
}

AffineDellacConfig from_length_tuple(int n, int omega,
                                     const std::vector<int>& lengths_by_row) {
    if (n < 1 || omega < 1 || static_cast<int>(lengths_by_row.size()) != 2 * n)
        throw std::invalid_argument("not a cell");

    DimVector total(n);
    for (int j = 1; j <= 2 * n; ++j) {
        const int l = lengths_by_row[j - 1];
        if (l < 0 || l > omega * n) throw std::invalid_argument("not a cell");
        if (l > 0)
            total += dim_vector(
                IndecNilp{from_display(end_vertex_of_row(j, n)), l}, n);
    }
    for (int v = 0; v < n; ++v)
        if (total[v] != static_cast<long long>(omega) * n)
            throw std::invalid_argument("not a cell");

    AffineDellacConfig cfg{n, omega, std::vector<DellacRow>(2 * n)};
    for (int j = 1; j <= 2 * n; ++j) {
        const int l = lengths_by_row[j - 1];
        DellacRow& r = cfg.rows[j - 1];
        if (l == 0) {
            r.k = 0;
            r.col = forced_zero_col(j, n);
        } else {
            r.k = (l + n - 1) / n;
            const int p = l - n * (r.k - 1);
            r.col = mod_n(separator_boundary(j, n) - (p - 1), n) + 1;
        }
    }
    assert(validate(cfg).ok);
    return cfg;
}

void for_each_config(int n, int omega,
                     const std::function<void(const AffineDellacConfig&)>& fn) {
    if (n < 1 || omega < 1) throw std::invalid_argument("n, omega >= 1");
    const long long target = static_cast<long long>(omega) * n * n;
    AffineDellacConfig cfg{n, omega, std::vector<DellacRow>(2 * n)};
    std::vector<int> per_col(n, 0);

    const std::function<void(int, long long)> dfs = [&](int j, long long sum) {
        if (j > 2 * n) {
            if (sum == target) fn(cfg);
            return;
        }
        const long long rows_left = 2 * n - j; // after this one
        // options in (k, col) lexicographic order
        for (int k = 0; k <= omega; ++k) {
            const int cmin = (k == 0) ? forced_zero_col(j, n) : 1;
            const int cmax = (k == 0) ? forced_zero_col(j, n) : n;
            for (int col = cmin; col <= cmax; ++col) {
                if (per_col[col - 1] == 2) continue;
                cfg.rows[j - 1] = DellacRow{col, k};
                const long long add = length_of_row(cfg, j);
                if (sum + add > target) continue;
                if (sum + add + rows_left * static_cast<long long>(omega) * n <
                    target)
                    continue;
                ++per_col[col - 1];
                dfs(j + 1, sum + add);
                --per_col[col - 1];
            }
        }
    };
    dfs(1, 0);
}

std::vector<AffineDellacConfig> enumerate_configs(int n, int omega) {
    std::vector<AffineDellacConfig> out;
    for_each_config(n, omega,
                    [&](const AffineDellacConfig& c) { out.push_back(c); });
    return out;
}

bool is_c_degenerate(const AffineDellacConfig& cfg, const CorankTuple& c) {
    check_shape(cfg);
    if (static_cast<int>(c.c.size()) != cfg.n)
        throw std::invalid_argument("corank tuple size");
    for (int j = 1; j <= cfg.n; ++j) {
        const int vertex = end_vertex_of_row(j, cfg.n); // 1-based
        if (c.c[vertex - 1] != 1) continue;
        if (cfg.rows[j - 1].k > 0) {
            if (cfg.rows[j + cfg.n - 1].k != cfg.omega ||
                p_of_row(cfg, j + cfg.n) != cfg.n)
                return false;
        }
    }
    return true;
}

std::vector<AffineDellacConfig> enumerate_c_degenerate(int n, int omega,
                                                       const CorankTuple& c) {
    std::vector<AffineDellacConfig> out;
    for_each_config(n, omega, [&](const AffineDellacConfig& cfg) {
        if (is_c_degenerate(cfg, c)) out.push_back(cfg);
    });
    return out;
}

DimVector row_fill_dim_vector(const AffineDellacConfig& cfg) {
    check_shape(cfg);
    const int n = cfg.n;
    DimVector d(n);
    for (int j = 1; j <= 2 * n; ++j) {
        const DellacRow& r = cfg.rows[j - 1];
        const int p = p_of_row(cfg, j);
        const int rep = std::max(r.k - 1, 0);
        std::vector<char> filled(n, 0);
        for (int t = 0; t < p; ++t) filled[mod_n(r.col - 1 + t, n)] = 1;
        for (int v = 0; v < n; ++v) d[v] += filled[v] ? r.k : rep;
    }
    return d;
}

namespace {

// Row j corresponds to the slot-(j<=n ? first : second) segment ending over
// e_j; in the degenerate flag quiver the two segments of end vertex e sit at
// indices 2(e-1) and 2(e-1)+1.
int segment_of_row(int j, int n) {
    const int e = end_vertex_of_row(j, n);
    const int slot = j <= n ? 0 : 1;
    return 2 * (e - 1) + slot;
}

void check_flag_cq(const CoefficientQuiver& cq) {
    if (static_cast<int>(cq.segments.size()) != 2 * cq.n)
        throw std::invalid_argument("not a degenerate flag quiver");
    for (int v = 0; v < cq.n; ++v)
        if (cq.d[v] != 2)
            throw std::invalid_argument("not a degenerate flag quiver");
}

} // namespace

FixedPoint fixed_point_from_row_lengths(const CoefficientQuiver& flag_cq,
                                        const std::vector<int>& lengths) {
    check_flag_cq(flag_cq);
    const int n = flag_cq.n;
    if (static_cast<int>(lengths.size()) != 2 * n)
        throw std::invalid_argument("length tuple size");
    FixedPoint L;
    L.suffix.assign(2 * n, 0);
    for (int j = 1; j <= 2 * n; ++j)
        L.suffix[segment_of_row(j, n)] = lengths[j - 1];
    if (!valid_fixed_point(flag_cq, L))
        throw std::invalid_argument("length exceeds segment");
    return L;
}

std::vector<int> row_lengths_from_fixed_point(const CoefficientQuiver& flag_cq,
                                              const FixedPoint& L) {
    check_flag_cq(flag_cq);
    const int n = flag_cq.n;
    if (!valid_fixed_point(flag_cq, L))
        throw std::invalid_argument("invalid fixed point");
    std::vector<int> lengths(2 * n, 0);
    for (int j = 1; j <= 2 * n; ++j)
        lengths[j - 1] = L.suffix[segment_of_row(j, n)];
    return lengths;
}

} // namespace cyclequiv

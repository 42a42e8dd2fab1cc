#pragma once

#include <stdexcept>
#include <vector>

namespace birkhoff {

// Exact linear assignment (minimum cost perfect matching on a complete
// bipartite graph) via shortest augmenting paths with potentials, O(n^3).
// Works over any totally ordered field-like scalar: rationals for exact
// callers, double for the kernel grids. "Infinity" is tracked with flags, so
// no sentinel values enter the arithmetic.
template <typename T>
struct LapResult {
    T value{};
    std::vector<int> row_to_col;
};

template <typename T>
LapResult<T> lap_min(const std::vector<std::vector<T>>& cost) {
    const int n = static_cast<int>(cost.size());
    if (n == 0) throw std::invalid_argument("assignment on empty matrix");

    std::vector<T> u(n, T(0)), v(n + 1, T(0));
    std::vector<int> match(n + 1, -1);  // column -> row; column n is the virtual root

    for (int r = 0; r < n; ++r) {
        match[n] = r;
        int j0 = n;
        std::vector<T> minv(n, T(0));
        std::vector<bool> minv_set(n, false), used(n + 1, false);
        std::vector<int> way(n, n);
        do {
            used[j0] = true;
            const int i0 = match[j0];
            int j1 = -1;
            T delta{};
            bool have_delta = false;
            for (int j = 0; j < n; ++j) {
                if (used[j]) continue;
                T cur = cost[i0][j] - u[i0] - v[j];
                if (!minv_set[j] || cur < minv[j]) {
                    minv[j] = cur;
                    minv_set[j] = true;
                    way[j] = j0;
                }
                if (minv_set[j] && (!have_delta || minv[j] < delta)) {
                    delta = minv[j];
                    j1 = j;
                    have_delta = true;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else if (minv_set[j]) {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != -1);
        do {
            const int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != n);
    }

    LapResult<T> out;
    out.row_to_col.assign(n, -1);
    for (int j = 0; j < n; ++j) out.row_to_col[match[j]] = j;
    out.value = T(0);
    for (int i = 0; i < n; ++i) out.value += cost[i][out.row_to_col[i]];
    return out;
}

}  // namespace birkhoff

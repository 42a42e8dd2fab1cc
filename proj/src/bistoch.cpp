#include "birkhoff/bistoch.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "birkhoff/assignment.hpp"

namespace birkhoff {
namespace {

constexpr std::size_t kBruteLimit = 8;

std::vector<std::vector<Rational>> negated_rows(const ExactMatrix& m) {
    std::vector<std::vector<Rational>> cost(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) cost[i][j] = -m.at(i, j);
    return cost;
}

Rational lap_max_value(const ExactMatrix& m, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
    std::vector<std::vector<Rational>> cost(rows.size(), std::vector<Rational>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) cost[i][j] = -m.at(rows[i], cols[j]);
    return -lap_min(cost).value;
}

MaxtraceWitness maxtrace_brute(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::uint8_t> images(n);
    std::iota(images.begin(), images.end(), std::uint8_t{0});
    std::vector<std::uint8_t> best_images = images;
    Rational best;
    for (std::size_t i = 0; i < n; ++i) best += m.at(i, i);
    Rational sum;
    while (std::next_permutation(images.begin(), images.end())) {
        sum = 0;
        for (std::size_t i = 0; i < n; ++i) sum += m.at(i, images[i]);
        if (sum > best) {  // strict, so the lexicographically first maximizer sticks
            best = sum;
            best_images = images;
        }
    }
    return {best, *Perm::from_images(std::move(best_images))};
}

MaxtraceWitness maxtrace_assignment(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    const Rational total = -lap_min(negated_rows(m)).value;

    // The LAP maximizer is not unique; rebuild the lexicographically smallest
    // one column choice at a time, keeping only choices whose best completion
    // still reaches the optimum.
    std::vector<int> free_cols(n);
    std::iota(free_cols.begin(), free_cols.end(), 0);
    std::vector<std::uint8_t> images(n);
    Rational prefix;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> rest_rows(n - i - 1);
        std::iota(rest_rows.begin(), rest_rows.end(), static_cast<int>(i + 1));
        bool placed = false;
        for (std::size_t t = 0; t < free_cols.size() && !placed; ++t) {
            const int j = free_cols[t];
            std::vector<int> rest_cols = free_cols;
            rest_cols.erase(rest_cols.begin() + static_cast<std::ptrdiff_t>(t));
            Rational completion;
            if (!rest_rows.empty()) completion = lap_max_value(m, rest_rows, rest_cols);
            if (prefix + m.at(i, j) + completion == total) {
                images[i] = static_cast<std::uint8_t>(j);
                prefix += m.at(i, j);
                free_cols = std::move(rest_cols);
                placed = true;
            }
        }
        if (!placed) throw std::logic_error("assignment refinement failed");
    }
    return {total, *Perm::from_images(std::move(images))};
}

// Sorted row entries, used to prune row-permutation candidates: equivalent
// matrices must match rows as multisets.
std::vector<std::string> row_signatures(const ExactMatrix& m) {
    std::vector<std::string> sig(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Rational> row(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
        std::sort(row.begin(), row.end());
        std::string s;
        for (const auto& e : row) {
            s += to_string(e);
            s += ',';
        }
        sig[i] = std::move(s);
    }
    return sig;
}

std::vector<Rational> column_of(const ExactMatrix& m, std::size_t j) {
    std::vector<Rational> col(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) col[i] = m.at(i, j);
    return col;
}

// Given row order rho (B-row i should equal A-row rho[i] up to columns),
// matches columns exactly; returns q with B = P A Q on success.
std::optional<Perm> match_columns(const ExactMatrix& a, const ExactMatrix& b,
                                  const std::vector<std::uint8_t>& rho) {
    const std::size_t n = a.rows();
    // Columns of A' (= A with rows permuted by rho) and of B, sorted together.
    std::vector<std::vector<Rational>> acols(n), bcols(n);
    for (std::size_t j = 0; j < n; ++j) {
        acols[j].resize(n);
        for (std::size_t i = 0; i < n; ++i) acols[j][i] = a.at(rho[i], j);
        bcols[j] = column_of(b, j);
    }
    std::vector<int> aidx(n), bidx(n);
    std::iota(aidx.begin(), aidx.end(), 0);
    std::iota(bidx.begin(), bidx.end(), 0);
    auto by_col = [](const std::vector<std::vector<Rational>>& cols) {
        return [&cols](int x, int y) { return cols[x] < cols[y]; };
    };
    std::sort(aidx.begin(), aidx.end(), by_col(acols));
    std::sort(bidx.begin(), bidx.end(), by_col(bcols));
    std::vector<std::uint8_t> gamma(n);  // B column j equals A' column gamma[j]
    for (std::size_t t = 0; t < n; ++t) {
        if (acols[aidx[t]] != bcols[bidx[t]]) return std::nullopt;
        gamma[bidx[t]] = static_cast<std::uint8_t>(aidx[t]);
    }
    // (A' Q)(i, j) = A'(i, q^{-1}(j)) wants q^{-1} = gamma.
    return Perm::from_images(std::move(gamma))->inverse();
}

}  // namespace

bool is_bistochastic(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0 || m.cols() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        Rational row, col;
        for (std::size_t j = 0; j < n; ++j) {
            if (m.at(i, j) < 0) return false;
            row += m.at(i, j);
            col += m.at(j, i);
        }
        if (row != 1 || col != 1) return false;
    }
    return true;
}

BistochMatrix::BistochMatrix(ExactMatrix m) : m_(std::move(m)) {
    if (!is_bistochastic(m_)) throw std::invalid_argument("matrix is not bistochastic");
}

Rational frobenius_sq(const ExactMatrix& m) {
    Rational sum;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) sum += m.at(i, j) * m.at(i, j);
    return sum;
}

MaxtraceWitness maxtrace(const ExactMatrix& m, MaxtraceMethod method) {
    const std::size_t n = m.rows();
    if (n == 0) throw std::invalid_argument("maxtrace of an empty matrix");
    if (m.cols() != n) throw std::invalid_argument("maxtrace requires a square matrix");
    switch (method) {
        case MaxtraceMethod::kBrute:
            return maxtrace_brute(m);
        case MaxtraceMethod::kAssignment:
            return maxtrace_assignment(m);
        case MaxtraceMethod::kAuto:
        default:
            return n <= kBruteLimit ? maxtrace_brute(m) : maxtrace_assignment(m);
    }
}

ErdosCertificate delta(const BistochMatrix& a) {
    ErdosCertificate cert;
    auto mt = maxtrace(a.matrix());
    cert.maxtrace_value = mt.value;
    cert.witness = std::move(mt.witness);
    cert.frobenius = frobenius_sq(a.matrix());
    cert.delta = cert.maxtrace_value - cert.frobenius;
    cert.erdos = cert.delta == 0;
    return cert;
}

std::optional<std::pair<Perm, Perm>> equivalence_witness(const BistochMatrix& a,
                                                         const BistochMatrix& b) {
    if (a.size() != b.size()) return std::nullopt;
    const std::size_t n = a.size();
    const auto siga = row_signatures(a.matrix());
    const auto sigb = row_signatures(b.matrix());

    // Depth-first over row assignments with the multiset prune; leaves try an
    // exact column match.
    std::vector<std::uint8_t> rho(n);
    std::vector<bool> used(n, false);
    std::optional<std::pair<Perm, Perm>> found;
    auto dfs = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) {
            auto q = match_columns(a.matrix(), b.matrix(), rho);
            if (!q) return false;
            found = {{*Perm::from_images(rho), *q}};
            return true;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (used[r] || sigb[i] != siga[r]) continue;
            used[r] = true;
            rho[i] = static_cast<std::uint8_t>(r);
            if (self(self, i + 1)) return true;
            used[r] = false;
        }
        return false;
    };
    dfs(dfs, 0);
    return found;
}

bool equivalent(const BistochMatrix& a, const BistochMatrix& b) {
    return equivalence_witness(a, b).has_value();
}

BistochMatrix canonical_form(const BistochMatrix& a) {
    const std::size_t n = a.size();
    const ExactMatrix& m = a.matrix();

    // The canonical first row is the smallest sorted row, which prunes most
    // row orders before any column sorting happens. Ordering must be on the
    // rational values, not on their serializations.
    std::vector<std::vector<Rational>> sorted_rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        sorted_rows[i].resize(n);
        for (std::size_t j = 0; j < n; ++j) sorted_rows[i][j] = m.at(i, j);
        std::sort(sorted_rows[i].begin(), sorted_rows[i].end());
    }
    const auto& best_row = *std::min_element(sorted_rows.begin(), sorted_rows.end());

    std::vector<std::uint8_t> rho(n);
    std::iota(rho.begin(), rho.end(), std::uint8_t{0});
    std::optional<ExactMatrix> best;
    do {
        if (sorted_rows[rho[0]] != best_row) continue;
        std::vector<int> cols(n);
        std::iota(cols.begin(), cols.end(), 0);
        std::sort(cols.begin(), cols.end(), [&](int x, int y) {
            for (std::size_t i = 0; i < n; ++i) {
                const int c = mpq_cmp(m.at(rho[i], x).get_mpq_t(), m.at(rho[i], y).get_mpq_t());
                if (c != 0) return c < 0;
            }
            return false;
        });
        ExactMatrix cand(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) cand.at(i, j) = m.at(rho[i], cols[j]);
        if (!best || ExactMatrix::compare(cand, *best) < 0) best = std::move(cand);
    } while (std::next_permutation(rho.begin(), rho.end()));
    return BistochMatrix(std::move(*best));
}

std::vector<BistochMatrix> transpose_class_merge(const std::vector<BistochMatrix>& reps) {
    std::vector<BistochMatrix> out;
    std::map<std::string, bool> seen;
    for (const auto& r : reps) {
        const std::string k1 = canonical_form(r).matrix().key();
        const std::string k2 = canonical_form(BistochMatrix(r.matrix().transpose())).matrix().key();
        const std::string key = std::min(k1, k2);
        if (seen.emplace(key, true).second) out.push_back(r);
    }
    return out;
}

BistochMatrix flat_matrix(std::size_t n) {
    return BistochMatrix(ExactMatrix::constant(n, rational(1, static_cast<long>(n))));
}

}  // namespace birkhoff

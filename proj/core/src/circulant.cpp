#include "polymod/circulant.hpp"

#include "polymod/errors.hpp"

#include <utility>

namespace polymod {

EqualSumMatrix::EqualSumMatrix(int order, std::vector<Rational> entries)
    : order_(order), entries_(std::move(entries)) {
    if (order_ < 1) {
        throw InvalidOrder("matrix order must be >= 1");
    }
    const auto m = static_cast<size_t>(order_);
    if (entries_.size() != m * m) {
        throw DimensionMismatch("equal-sum matrix needs order^2 entries");
    }
    for (const Rational& e : entries_) {
        if (sgn(e) < 0) {
            throw InvalidParams("equal-sum matrix entries must be >= 0");
        }
    }
    for (size_t i = 0; i < m; ++i) {
        Rational row_sum(0), col_sum(0);
        for (size_t j = 0; j < m; ++j) {
            row_sum += entries_[i * m + j];
            col_sum += entries_[j * m + i];
        }
        if (i == 0) {
            sigma_ = row_sum;
        }
        if (row_sum != sigma_ || col_sum != sigma_) {
            throw NotEqualSum("row/column sums do not share a common value");
        }
    }
}

EqualSumMatrix EqualSumMatrix::identity(int m) {
    if (m < 1) {
        throw InvalidOrder("matrix order must be >= 1");
    }
    std::vector<Rational> e(static_cast<size_t>(m) * m, Rational(0));
    for (int i = 0; i < m; ++i) {
        e[static_cast<size_t>(i) * m + i] = 1;
    }
    return {m, std::move(e)};
}

EqualSumMatrix EqualSumMatrix::shift(int m) {
    if (m < 1) {
        throw InvalidOrder("matrix order must be >= 1");
    }
    std::vector<Rational> e(static_cast<size_t>(m) * m, Rational(0));
    for (int i = 0; i < m; ++i) {
        e[static_cast<size_t>(i) * m + (i + 1) % m] = 1;
    }
    return {m, std::move(e)};
}

EqualSumMatrix EqualSumMatrix::uniform(int m) {
    if (m < 1) {
        throw InvalidOrder("matrix order must be >= 1");
    }
    std::vector<Rational> e(static_cast<size_t>(m) * m, Rational(1, m));
    return {m, std::move(e)};
}

const Rational& EqualSumMatrix::at(int i, int j) const {
    if (i < 0 || i >= order_ || j < 0 || j >= order_) {
        throw IndexOutOfRange("matrix index out of range");
    }
    return entries_[static_cast<size_t>(i) * order_ + j];
}

EqualSumMatrix EqualSumMatrix::pow(long e) const {
    if (e < 0) {
        throw InvalidParams("matrix power needs exponent >= 0");
    }
    EqualSumMatrix result = identity(order_);
    EqualSumMatrix base = *this;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

EqualSumMatrix operator*(const EqualSumMatrix& a, const EqualSumMatrix& b) {
    if (a.order_ != b.order_) {
        throw DimensionMismatch("matrix product needs equal orders");
    }
    const auto m = static_cast<size_t>(a.order_);
    std::vector<Rational> e(m * m, Rational(0));
    for (size_t i = 0; i < m; ++i) {
        for (size_t k = 0; k < m; ++k) {
            const Rational& aik = a.entries_[i * m + k];
            if (aik == 0) {
                continue;
            }
            for (size_t j = 0; j < m; ++j) {
                e[i * m + j] += aik * b.entries_[k * m + j];
            }
        }
    }
    return {a.order_, std::move(e)};
}

EqualSumMatrix operator+(const EqualSumMatrix& a, const EqualSumMatrix& b) {
    if (a.order_ != b.order_) {
        throw DimensionMismatch("matrix sum needs equal orders");
    }
    std::vector<Rational> e(a.entries_);
    for (size_t i = 0; i < e.size(); ++i) {
        e[i] += b.entries_[i];
    }
    return {a.order_, std::move(e)};
}

EqualSumMatrix operator*(const Rational& c, const EqualSumMatrix& a) {
    std::vector<Rational> e(a.entries_);
    for (Rational& x : e) {
        x *= c;
    }
    return {a.order_, std::move(e)};
}

bool operator==(const EqualSumMatrix& a, const EqualSumMatrix& b) {
    return a.order_ == b.order_ && a.entries_ == b.entries_;
}

EqualSumMatrix shift_matrix(int m) {
    return EqualSumMatrix::shift(m);
}

EqualSumMatrix mat_mul(const EqualSumMatrix& a, const EqualSumMatrix& b) {
    return a * b;
}

EqualSumMatrix mat_pow(const EqualSumMatrix& m, long e) {
    return m.pow(e);
}

Rational sigma(const EqualSumMatrix& m) {
    return m.sigma();
}

Rational delta(const EqualSumMatrix& m) {
    if (m.sigma() == 0) {
        throw ZeroSigma("reduced spread of a zero matrix");
    }
    Rational max = m.at(0, 0);
    Rational min = m.at(0, 0);
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            const Rational& e = m.at(i, j);
            if (e > max) {
                max = e;
            }
            if (e < min) {
                min = e;
            }
        }
    }
    return (max - min) / m.sigma();
}

Row row_apply(const Row& x, const EqualSumMatrix& m) {
    const int n = m.order();
    if (x.size() != static_cast<size_t>(n)) {
        throw DimensionMismatch("row length must match matrix order");
    }
    Row y(static_cast<size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i) {
        if (x[static_cast<size_t>(i)] == 0) {
            continue;
        }
        for (int j = 0; j < n; ++j) {
            y[static_cast<size_t>(j)] += x[static_cast<size_t>(i)] * m.at(i, j);
        }
    }
    return y;
}

Row row_of(const ModularVector& mv) {
    Row r;
    r.reserve(mv.counts().size());
    for (const Int& c : mv.counts()) {
        r.emplace_back(c);
    }
    return r;
}

std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>
extremal_cells(const EqualSumMatrix& m) {
    Rational max = m.at(0, 0);
    Rational min = m.at(0, 0);
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            const Rational& e = m.at(i, j);
            if (e > max) {
                max = e;
            }
            if (e < min) {
                min = e;
            }
        }
    }
    std::vector<std::pair<int, int>> max_cells, min_cells;
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            if (m.at(i, j) == max) {
                max_cells.emplace_back(i, j);
            }
            if (m.at(i, j) == min) {
                min_cells.emplace_back(i, j);
            }
        }
    }
    return {std::move(max_cells), std::move(min_cells)};
}

namespace {

void check_identity_args(int m, int k_max, int k_min) {
    if (m < 1) {
        throw InvalidModulus("identity check: modulus must be >= 1");
    }
    if (k_max < k_min) {
        throw InvalidParams("identity check: k_max below the first index");
    }
}

// Componentwise comparison; on mismatch records the smallest residue slot.
bool record_mismatch(int k, const Row& lhs, const Row& rhs,
                     IdentityReport& report) {
    for (size_t s = 0; s < lhs.size(); ++s) {
        if (lhs[s] != rhs[s]) {
            report.holds = false;
            report.first_failure = IdentityFailure{
                k, static_cast<int>(s) - 1, lhs[s], rhs[s]};
            return true;
        }
    }
    return false;
}

} // namespace

IdentityReport prism_identity_holds(const FVector& seed, int m, int k_max) {
    check_identity_args(m, k_max, 1);
    const EqualSumMatrix step =
        Rational(2) * EqualSumMatrix::identity(m) + EqualSumMatrix::shift(m);
    Row rhs = row_of(modular_reduce(seed, m));
    rhs[0] -= 1; // e1 sits at the slot of residue -1
    FVector fv = seed;
    IdentityReport report;
    for (int k = 1; k <= k_max; ++k) {
        fv = prism_step(fv);
        rhs = row_apply(rhs, step);
        Row lhs = row_of(modular_reduce(fv, m));
        lhs[0] -= 1;
        if (record_mismatch(k, lhs, rhs, report)) {
            return report;
        }
    }
    return report;
}

IdentityReport pyramid_identity_holds(const FVector& seed, int m, int k_max) {
    check_identity_args(m, k_max, 1);
    const EqualSumMatrix step =
        EqualSumMatrix::identity(m) + EqualSumMatrix::shift(m);
    Row rhs = row_of(modular_reduce(seed, m));
    FVector fv = seed;
    IdentityReport report;
    for (int k = 1; k <= k_max; ++k) {
        fv = pyramid_step(fv);
        rhs = row_apply(rhs, step);
        Row lhs = row_of(modular_reduce(fv, m));
        if (record_mismatch(k, lhs, rhs, report)) {
            return report;
        }
    }
    return report;
}

IdentityReport bipyramid_identity_holds(const FVector& seed, int m, int k_max) {
    check_identity_args(m, k_max, 1);
    if (seed.dim() < 1) {
        throw DegenerateBase("bipyramid tower needs a seed of dimension >= 1");
    }
    const EqualSumMatrix step =
        EqualSumMatrix::identity(m) +
        Rational(2) * EqualSumMatrix::shift(m);
    Row rhs = row_of(modular_reduce(seed, m));
    FVector fv = seed;
    IdentityReport report;
    for (int k = 1; k <= k_max; ++k) {
        const int top_dim = seed.dim() + k; // dimension of P_k
        rhs = row_apply(rhs, step);
        rhs[static_cast<size_t>(residue_rep(top_dim - 1, m) + 1)] -= 1;
        rhs[static_cast<size_t>(residue_rep(top_dim, m) + 1)] -= 1;
        fv = bipyramid_step(fv);
        Row lhs = row_of(modular_reduce(fv, m));
        if (record_mismatch(k, lhs, rhs, report)) {
            return report;
        }
    }
    return report;
}

IdentityReport stacked_identity_holds(int n, int m, int k_max) {
    if (n < 0) {
        throw InvalidParams("stacked identity: n must be >= 0");
    }
    check_identity_args(m, k_max, 2);
    const EqualSumMatrix step =
        EqualSumMatrix::identity(m) + EqualSumMatrix::shift(m);
    Row rhs = row_of(modular_reduce(modified_stacked_vector(n + 3, 2), m));
    IdentityReport report;
    for (int k = 2; k <= k_max; ++k) {
        if (k > 2) {
            rhs = row_apply(rhs, step);
        }
        Row lhs = row_of(
            modular_reduce(modified_stacked_vector(k + 1 + n, k), m));
        if (record_mismatch(k, lhs, rhs, report)) {
            return report;
        }
    }
    return report;
}

IdentityReport cyclic_identity_holds(int n, int m, int k_max) {
    if (n < 0) {
        throw InvalidParams("cyclic identity: n must be >= 0");
    }
    check_identity_args(m, k_max, 2);
    const EqualSumMatrix ident = EqualSumMatrix::identity(m);
    const EqualSumMatrix q = EqualSumMatrix::shift(m);
    const EqualSumMatrix a = ident + q;
    IdentityReport report;
    for (int k = 2; k <= k_max; ++k) {
        const long v = static_cast<long>(k) + 1 + n;
        const std::vector<Int> h = cyclic_hvector(v, k);
        // sum_{j=0}^{k} h_j A^j, accumulated with a running power of A
        EqualSumMatrix a_pow = ident;
        EqualSumMatrix sum = Rational(h[0]) * ident;
        for (int j = 1; j <= k; ++j) {
            a_pow = a_pow * a;
            sum = sum + Rational(h[static_cast<size_t>(j)]) * a_pow;
        }
        const EqualSumMatrix total = ident + q * sum;
        Row rhs(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) {
            rhs[static_cast<size_t>(j)] = total.at(0, j); // e1 * total
        }
        Row lhs = row_of(
            modular_reduce(reversed_vector(cyclic_fvector(v, k)), m));
        if (record_mismatch(k, lhs, rhs, report)) {
            return report;
        }
    }
    return report;
}

std::vector<SpreadRow> spread_profile(int m, int j_max) {
    if (m < 2) {
        throw InvalidOrder("spread_profile: m must be >= 2");
    }
    if (j_max < 1) {
        throw InvalidParams("spread_profile: j_max must be >= 1");
    }
    const EqualSumMatrix b =
        (EqualSumMatrix::identity(m) + EqualSumMatrix::shift(m))
            .pow(2L * m);
    std::vector<SpreadRow> rows;
    rows.reserve(static_cast<size_t>(j_max));
    EqualSumMatrix power = b;
    for (long j = 1; j <= j_max; ++j) {
        const auto [max_cells, min_cells] = extremal_cells(power);
        rows.push_back(
            SpreadRow{j, delta(power), max_cells.front(), min_cells.front()});
        if (j < j_max) {
            power = power * b;
        }
    }
    return rows;
}

bool unimodal(const std::vector<Int>& seq) {
    if (seq.empty()) {
        throw EmptyInput("unimodal: empty sequence");
    }
    size_t i = 0;
    while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) {
        ++i;
    }
    while (i + 1 < seq.size() && seq[i] >= seq[i + 1]) {
        ++i;
    }
    return i + 1 == seq.size();
}

} // namespace polymod

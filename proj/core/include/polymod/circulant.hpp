#pragma once

#include "polymod/families.hpp"
#include "polymod/fvector.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace polymod {

// m x m exact nonnegative matrix whose row sums and column sums all equal
// one common value sigma. Construction validates the invariant, so every
// instance in circulation is equal-sum; products, sums and powers stay
// within the class. Orders are small (m up to ~16), dense exact storage.
class EqualSumMatrix {
public:
    EqualSumMatrix(int order, std::vector<Rational> entries); // row-major

    static EqualSumMatrix identity(int m);
    /// Cyclic shift Q: acting on a row vector of residues it moves index
    /// r to r+1 modulo m. For m = 1 this is (1).
    static EqualSumMatrix shift(int m);
    /// J, all entries 1/m.
    static EqualSumMatrix uniform(int m);

    int order() const { return order_; }
    const Rational& at(int i, int j) const; // 0-based
    /// The common row/column sum.
    const Rational& sigma() const { return sigma_; }

    EqualSumMatrix pow(long e) const;

    friend EqualSumMatrix operator*(const EqualSumMatrix& a,
                                    const EqualSumMatrix& b);
    friend EqualSumMatrix operator+(const EqualSumMatrix& a,
                                    const EqualSumMatrix& b);
    friend EqualSumMatrix operator*(const Rational& c, const EqualSumMatrix& a);
    friend bool operator==(const EqualSumMatrix& a, const EqualSumMatrix& b);

private:
    int order_;
    std::vector<Rational> entries_;
    Rational sigma_;
};

EqualSumMatrix shift_matrix(int m);
EqualSumMatrix mat_mul(const EqualSumMatrix& a, const EqualSumMatrix& b);
EqualSumMatrix mat_pow(const EqualSumMatrix& m, long e);

Rational sigma(const EqualSumMatrix& m);

/// Reduced spread (max entry - min entry) / sigma; lies in [0, 1] and
/// vanishes exactly when all entries agree. Throws ZeroSigma on the zero
/// matrix.
Rational delta(const EqualSumMatrix& m);

// Row vectors multiply matrices on the right, matching the recursions'
// orientation. Slot s of a row corresponds to residue representative s-1.
using Row = std::vector<Rational>;

Row row_apply(const Row& x, const EqualSumMatrix& m);
Row row_of(const ModularVector& mv);

/// All cells carrying the maximum entry and all cells carrying the
/// minimum, in row-major order.
std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>
extremal_cells(const EqualSumMatrix& m);

struct IdentityFailure {
    int k = 0;
    int residue = 0; // representative in -1..m-2
    Rational lhs;
    Rational rhs;
};

struct IdentityReport {
    bool holds = true;
    std::optional<IdentityFailure> first_failure;
};

/// f^m(P_k) - e1 = (f^m(P_{k-1}) - e1)(2I + Q), checked exactly for
/// k = 1..k_max against the modular reduction of the iterated prism_step;
/// e1 sits in the residue slot of dimension -1.
IdentityReport prism_identity_holds(const FVector& seed, int m, int k_max);

/// f^m(P_k) = f^m(P_{k-1})(I + Q), no offset.
IdentityReport pyramid_identity_holds(const FVector& seed, int m, int k_max);

/// f^m(P_k) = f^m(P_{k-1})(I + 2Q) - c_k, where c_k has entry 1 at the
/// residue of d_k - 1 and entry 1 at the residue of d_k (accumulating when
/// the residues coincide); the corrections are taken from the concrete top
/// dimensions at each step.
IdentityReport bipyramid_identity_holds(const FVector& seed, int m, int k_max);

/// l^m(S_k) = l^m(S_2)(I + Q)^{k-2} for k = 2..k_max, where l^m is the
/// m-modular reduction (by dimension index) of modified_stacked_vector.
IdentityReport stacked_identity_holds(int n, int m, int k_max);

/// l^m(C_k) = e1 (I + Q sum_{j=0}^{k} h_j A^j) with A = I + Q, checked for
/// k = 2..k_max against the reduction of reversed_vector(cyclic_fvector).
IdentityReport cyclic_identity_holds(int n, int m, int k_max);

struct SpreadRow {
    long j = 0;
    Rational spread; // delta(B^j)
    std::pair<int, int> argmax;
    std::pair<int, int> argmin;
};

/// Exact reduced spreads of B^j for j = 1..j_max with B = (I+Q)^{2m};
/// argmax/argmin report the first extremal cell in row-major order.
std::vector<SpreadRow> spread_profile(int m, int j_max);

/// True iff the sequence is nondecreasing up to some index and
/// nonincreasing after it.
bool unimodal(const std::vector<Int>& seq);

} // namespace polymod

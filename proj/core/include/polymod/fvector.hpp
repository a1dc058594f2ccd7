#pragma once

#include "polymod/exact.hpp"

#include <vector>

namespace polymod {

/// Representative of the residue class of dimension i modulo m, drawn from
/// {-1, 0, ..., m-2}. Throws InvalidModulus if m < 1.
int residue_rep(long i, int m);

// Exact integer sequence indexed by dimension i = -1..dim (stored with
// offset +1). Carries no polytope invariants; this is the shape of the
// modified/reversed vectors used by the stacked and cyclic machinery.
class ExtendedVector {
public:
    ExtendedVector(int dim, std::vector<Int> counts);

    int dim() const { return dim_; }
    /// Entry at dimension i, -1 <= i <= dim. Throws IndexOutOfRange.
    const Int& at(int i) const;
    Int& at(int i);
    /// Entry at dimension i with the convention that everything outside
    /// -1..dim is 0.
    Int value_at(long i) const;
    const std::vector<Int>& counts() const { return counts_; }

    friend bool operator==(const ExtendedVector& a, const ExtendedVector& b) {
        return a.dim_ == b.dim_ && a.counts_ == b.counts_;
    }

private:
    int dim_;
    std::vector<Int> counts_; // counts_[i + 1] is the entry at dimension i
};

// Face-count vector of a d-polytope: counts_[i + 1] = f_i for
// i = -1, 0, ..., d, improper faces included (f_-1 = f_d = 1).
// Construction validates the improper entries, positivity and Euler's
// relation, so every FVector in circulation is a plausible polytope vector.
class FVector {
public:
    FVector(int dim, std::vector<Int> counts);

    int dim() const { return dim_; }
    const Int& at(int i) const;
    /// f_i with the convention f_i = 0 for i > dim or i < -1.
    Int value_at(long i) const;
    const std::vector<Int>& counts() const { return counts_; }

    ExtendedVector to_extended() const { return {dim_, counts_}; }

    friend bool operator==(const FVector& a, const FVector& b) {
        return a.dim_ == b.dim_ && a.counts_ == b.counts_;
    }

private:
    int dim_;
    std::vector<Int> counts_;
};

// Length-m vector of exact nonnegative integers indexed by residue
// representative r = -1, 0, ..., m-2 (stored with offset +1).
class ModularVector {
public:
    ModularVector(int modulus, std::vector<Int> counts);

    int modulus() const { return modulus_; }
    const Int& at(int r) const;
    const std::vector<Int>& counts() const { return counts_; }
    /// Sum of all components; equals f^1 when reduced from an FVector.
    Int total() const;

    friend bool operator==(const ModularVector& a, const ModularVector& b) {
        return a.modulus_ == b.modulus_ && a.counts_ == b.counts_;
    }

private:
    int modulus_;
    std::vector<Int> counts_;
};

/// Build an FVector from the proper face counts (f_0, ..., f_{d-1}),
/// appending the improper entries. Throws EmptyInput on an empty sequence
/// and EulerViolation when the alternating sum is nonzero.
FVector make_fvector(const std::vector<Int>& proper_counts);

Int total_faces(const FVector& f);

/// Component at representative r sums f_i over i = -1..d with i congruent
/// to r modulo m. m = d+2 reproduces f itself; m = 1 gives the total.
ModularVector modular_reduce(const FVector& f, int m);
ModularVector modular_reduce(const ExtendedVector& v, int m);

/// Euler's relation: the 2-modular reduction has equal components.
bool euler_holds(const FVector& f);
bool euler_holds(const ExtendedVector& v);

/// Sup-norm distance of mv/total from the uniform vector (1/m, ..., 1/m),
/// exact. Throws ZeroTotal when the total vanishes.
Rational distance_to_uniform(const ModularVector& mv);

} // namespace polymod

#include "polymod/fvector.hpp"

#include "polymod/errors.hpp"

#include <span>
#include <utility>

namespace polymod {

namespace {

// Alternating sum over i = -1..dim of counts[i + 1].
bool alternating_sum_vanishes(std::span<const Int> counts) {
    Int sum = 0;
    int sign = -1; // i = -1
    for (const Int& c : counts) {
        if (sign > 0) {
            sum += c;
        } else {
            sum -= c;
        }
        sign = -sign;
    }
    return sum == 0;
}

} // namespace

int residue_rep(long i, int m) {
    if (m < 1) {
        throw InvalidModulus("modulus must be >= 1");
    }
    long r = (i + 1) % m;
    if (r < 0) {
        r += m;
    }
    return static_cast<int>(r) - 1;
}

ExtendedVector::ExtendedVector(int dim, std::vector<Int> counts)
    : dim_(dim), counts_(std::move(counts)) {
    if (dim_ < 0 || counts_.size() != static_cast<size_t>(dim_) + 2) {
        throw DimensionMismatch("extended vector needs dim+2 entries");
    }
}

const Int& ExtendedVector::at(int i) const {
    if (i < -1 || i > dim_) {
        throw IndexOutOfRange("extended vector index out of range");
    }
    return counts_[static_cast<size_t>(i) + 1];
}

Int& ExtendedVector::at(int i) {
    if (i < -1 || i > dim_) {
        throw IndexOutOfRange("extended vector index out of range");
    }
    return counts_[static_cast<size_t>(i) + 1];
}

Int ExtendedVector::value_at(long i) const {
    if (i < -1 || i > dim_) {
        return 0;
    }
    return counts_[static_cast<size_t>(i) + 1];
}

FVector::FVector(int dim, std::vector<Int> counts)
    : dim_(dim), counts_(std::move(counts)) {
    if (dim_ < 0 || counts_.size() != static_cast<size_t>(dim_) + 2) {
        throw DimensionMismatch("f-vector needs dim+2 entries");
    }
    if (counts_.front() != 1 || counts_.back() != 1) {
        throw InvalidParams("improper face counts f_-1 and f_d must be 1");
    }
    for (const Int& c : counts_) {
        if (c < 1) {
            throw InvalidParams("face counts must be >= 1");
        }
    }
    if (!alternating_sum_vanishes(counts_)) {
        throw EulerViolation("alternating sum of face counts is nonzero");
    }
}

const Int& FVector::at(int i) const {
    if (i < -1 || i > dim_) {
        throw IndexOutOfRange("f-vector index out of range");
    }
    return counts_[static_cast<size_t>(i) + 1];
}

Int FVector::value_at(long i) const {
    if (i < -1 || i > dim_) {
        return 0;
    }
    return counts_[static_cast<size_t>(i) + 1];
}

ModularVector::ModularVector(int modulus, std::vector<Int> counts)
    : modulus_(modulus), counts_(std::move(counts)) {
    if (modulus_ < 1) {
        throw InvalidModulus("modulus must be >= 1");
    }
    if (counts_.size() != static_cast<size_t>(modulus_)) {
        throw DimensionMismatch("modular vector needs exactly m entries");
    }
    for (const Int& c : counts_) {
        if (c < 0) {
            throw InvalidParams("modular components must be >= 0");
        }
    }
}

const Int& ModularVector::at(int r) const {
    if (r < -1 || r > modulus_ - 2) {
        throw IndexOutOfRange("residue representative out of range");
    }
    return counts_[static_cast<size_t>(r) + 1];
}

Int ModularVector::total() const {
    Int sum = 0;
    for (const Int& c : counts_) {
        sum += c;
    }
    return sum;
}

FVector make_fvector(const std::vector<Int>& proper_counts) {
    if (proper_counts.empty()) {
        throw EmptyInput("make_fvector: no proper face counts given");
    }
    std::vector<Int> counts;
    counts.reserve(proper_counts.size() + 2);
    counts.emplace_back(1);
    counts.insert(counts.end(), proper_counts.begin(), proper_counts.end());
    counts.emplace_back(1);
    if (!alternating_sum_vanishes(counts)) {
        throw EulerViolation("make_fvector: alternating sum is nonzero");
    }
    return FVector(static_cast<int>(proper_counts.size()), std::move(counts));
}

Int total_faces(const FVector& f) {
    Int sum = 0;
    for (const Int& c : f.counts()) {
        sum += c;
    }
    return sum;
}

namespace {

ModularVector reduce_by_dimension(int dim, std::span<const Int> counts, int m) {
    if (m < 1) {
        throw InvalidModulus("modular_reduce: modulus must be >= 1");
    }
    std::vector<Int> reduced(static_cast<size_t>(m), Int(0));
    for (int i = -1; i <= dim; ++i) {
        reduced[static_cast<size_t>(residue_rep(i, m)) + 1] +=
            counts[static_cast<size_t>(i) + 1];
    }
    return ModularVector(m, std::move(reduced));
}

} // namespace

ModularVector modular_reduce(const FVector& f, int m) {
    return reduce_by_dimension(f.dim(), f.counts(), m);
}

ModularVector modular_reduce(const ExtendedVector& v, int m) {
    return reduce_by_dimension(v.dim(), v.counts(), m);
}

bool euler_holds(const FVector& f) {
    return alternating_sum_vanishes(f.counts());
}

bool euler_holds(const ExtendedVector& v) {
    return alternating_sum_vanishes(v.counts());
}

Rational distance_to_uniform(const ModularVector& mv) {
    Int total = mv.total();
    if (total == 0) {
        throw ZeroTotal("distance_to_uniform: total face count is zero");
    }
    const Rational uniform(1, mv.modulus());
    Rational best(0);
    for (const Int& c : mv.counts()) {
        Rational dev = Rational(c) / Rational(total) - uniform;
        dev = abs(dev);
        if (dev > best) {
            best = dev;
        }
    }
    return best;
}

} // namespace polymod

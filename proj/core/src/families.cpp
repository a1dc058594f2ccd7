#include "polymod/families.hpp"

#include "polymod/errors.hpp"

#include <utility>

namespace polymod {

FVector prism_step(const FVector& f) {
    const int d = f.dim();
    std::vector<Int> counts(static_cast<size_t>(d) + 3);
    counts[0] = 1; // f'_-1
    counts[1] = 2 * f.at(0);
    for (int i = 1; i <= d + 1; ++i) {
        counts[static_cast<size_t>(i) + 1] =
            2 * f.value_at(i) + f.value_at(i - 1);
    }
    return FVector(d + 1, std::move(counts));
}

FVector pyramid_step(const FVector& f) {
    const int d = f.dim();
    std::vector<Int> counts(static_cast<size_t>(d) + 3);
    for (int i = -1; i <= d + 1; ++i) {
        counts[static_cast<size_t>(i) + 1] =
            f.value_at(i) + f.value_at(i - 1);
    }
    return FVector(d + 1, std::move(counts));
}

FVector bipyramid_step(const FVector& f) {
    const int d = f.dim();
    if (d < 1) {
        throw DegenerateBase("bipyramid over a point is degenerate");
    }
    std::vector<Int> counts(static_cast<size_t>(d) + 3);
    for (int i = -1; i <= d - 1; ++i) {
        counts[static_cast<size_t>(i) + 1] =
            f.value_at(i) + 2 * f.value_at(i - 1);
    }
    counts[static_cast<size_t>(d) + 1] = 2 * f.at(d - 1); // base is not a face
    counts[static_cast<size_t>(d) + 2] = 1;
    return FVector(d + 1, std::move(counts));
}

FVector tower(const FVector& seed, TowerKind kind, int steps) {
    if (steps < 0) {
        throw InvalidParams("tower: steps must be >= 0");
    }
    FVector current = seed;
    for (int s = 0; s < steps; ++s) {
        switch (kind) {
        case TowerKind::Prism:
            current = prism_step(current);
            break;
        case TowerKind::Pyramid:
            current = pyramid_step(current);
            break;
        case TowerKind::Bipyramid:
            current = bipyramid_step(current);
            break;
        }
    }
    return current;
}

namespace {

void check_vd(long v, int d, const char* what) {
    if (d < 2 || v < static_cast<long>(d) + 1) {
        throw InvalidParams(std::string(what) +
                            ": requires d >= 2 and v >= d+1");
    }
}

} // namespace

FVector stacked_fvector(long v, int d) {
    check_vd(v, d, "stacked_fvector");
    std::vector<Int> counts(static_cast<size_t>(d) + 2);
    counts[0] = 1;
    counts[1] = v;
    for (int i = 1; i <= d - 2; ++i) {
        counts[static_cast<size_t>(i) + 1] =
            binomial(d, i) * v - binomial(d + 1, i + 1) * i;
    }
    counts[static_cast<size_t>(d)] =
        Int(d - 1) * v - Int(d + 1) * (d - 2); // f_{d-1}
    counts[static_cast<size_t>(d) + 1] = 1;
    return FVector(d, std::move(counts));
}

ExtendedVector modified_stacked_vector(long v, int d) {
    check_vd(v, d, "modified_stacked_vector");
    std::vector<Int> counts(static_cast<size_t>(d) + 2);
    for (int i = -1; i <= d; ++i) {
        counts[static_cast<size_t>(i) + 1] =
            binomial(d, i) * v - binomial(d + 1, i + 1) * i;
    }
    return ExtendedVector(d, std::move(counts));
}

std::vector<Int> cyclic_hvector(long v, int d) {
    check_vd(v, d, "cyclic_hvector");
    std::vector<Int> h(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d / 2; ++j) {
        h[static_cast<size_t>(j)] = binomial(v - d - 1 + j, j);
    }
    for (int j = d / 2 + 1; j <= d; ++j) {
        h[static_cast<size_t>(j)] = h[static_cast<size_t>(d - j)];
    }
    return h;
}

FVector cyclic_fvector(long v, int d) {
    check_vd(v, d, "cyclic_fvector");
    const std::vector<Int> h = cyclic_hvector(v, d);
    std::vector<Int> counts(static_cast<size_t>(d) + 2);
    counts[0] = 1;
    for (int i = 1; i <= d; ++i) {
        Int sum = 0;
        for (int j = 0; j <= i; ++j) {
            sum += binomial(d - j, d - i) * h[static_cast<size_t>(j)];
        }
        counts[static_cast<size_t>(i)] = sum; // f_{i-1}
    }
    counts[static_cast<size_t>(d) + 1] = 1;
    return FVector(d, std::move(counts));
}

ExtendedVector reversed_vector(const FVector& f) {
    const int d = f.dim();
    std::vector<Int> counts(static_cast<size_t>(d) + 2);
    for (int j = -1; j <= d; ++j) {
        counts[static_cast<size_t>(j) + 1] = f.at(d - 1 - j);
    }
    return ExtendedVector(d, std::move(counts));
}

int family_min_index(const FamilySpec& spec) {
    return std::holds_alternative<TowerSpec>(spec) ? 0 : 2;
}

int family_dim(const FamilySpec& spec, int k) {
    if (const auto* t = std::get_if<TowerSpec>(&spec)) {
        return t->seed.dim() + k;
    }
    return k;
}

FVector family_fvector(const FamilySpec& spec, int k) {
    if (k < family_min_index(spec)) {
        throw IndexOutOfRange("family member index below the first member");
    }
    if (const auto* t = std::get_if<TowerSpec>(&spec)) {
        return tower(t->seed, t->kind, k);
    }
    if (const auto* s = std::get_if<StackedSpec>(&spec)) {
        if (s->n < 0) {
            throw InvalidParams("stacked family: n must be >= 0");
        }
        return stacked_fvector(static_cast<long>(k) + 1 + s->n, k);
    }
    const auto& c = std::get<CyclicSpec>(spec);
    if (c.n < 0) {
        throw InvalidParams("cyclic family: n must be >= 0");
    }
    return cyclic_fvector(static_cast<long>(k) + 1 + c.n, k);
}

} // namespace polymod

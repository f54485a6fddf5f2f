#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "topolab/graph.hpp"
#include "topolab/indices.hpp"
#include "topolab/products.hpp"

namespace topolab {

// The six parametric families with closed-form edge partitions:
// P_r + P_s, C_r + C_s, K_r + K_s, C_r + K_s, P_r (.) P_s, C_r (.) C_s.
enum class Family {
    JoinPaths,
    JoinCycles,
    JoinComplete,
    JoinCycleComplete,
    CoronaPaths,
    CoronaCycles,
};

inline constexpr Family kAllFamilies[] = {
    Family::JoinPaths,    Family::JoinCycles,  Family::JoinComplete,
    Family::JoinCycleComplete, Family::CoronaPaths, Family::CoronaCycles,
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::JoinPaths: return "join-paths";
        case Family::JoinCycles: return "join-cycles";
        case Family::JoinComplete: return "join-complete";
        case Family::JoinCycleComplete: return "cycle-complete";
        case Family::CoronaPaths: return "corona-paths";
        case Family::CoronaCycles: return "corona-cycles";
    }
    throw std::invalid_argument("unknown family");
}

inline Family parse_family(const std::string& name) {
    for (Family f : kAllFamilies)
        if (name == family_name(f)) return f;
    throw std::invalid_argument("unknown family \"" + name +
                                "\" (expected join-paths, join-cycles, join-complete, "
                                "cycle-complete, corona-paths, corona-cycles)");
}

struct FamilySpec {
    Family family;
    int r;
    int s;
};

inline int family_min_r(Family f) {
    switch (f) {
        case Family::JoinPaths:
        case Family::CoronaPaths: return 2;
        case Family::JoinCycles:
        case Family::JoinCycleComplete:
        case Family::CoronaCycles: return 3;
        case Family::JoinComplete: return 1;
    }
    throw std::invalid_argument("unknown family");
}

inline int family_min_s(Family f) {
    switch (f) {
        case Family::JoinPaths:
        case Family::CoronaPaths: return 2;
        case Family::JoinCycles:
        case Family::CoronaCycles: return 3;
        case Family::JoinComplete:
        case Family::JoinCycleComplete: return 1;
    }
    throw std::invalid_argument("unknown family");
}

inline void check_domain(const FamilySpec& spec) {
    const int rmin = family_min_r(spec.family), smin = family_min_s(spec.family);
    if (spec.r < rmin)
        throw std::domain_error(std::string(family_name(spec.family)) + " requires r >= " +
                                std::to_string(rmin) + " (got r=" + std::to_string(spec.r) + ")");
    if (spec.s < smin)
        throw std::domain_error(std::string(family_name(spec.family)) + " requires s >= " +
                                std::to_string(smin) + " (got s=" + std::to_string(spec.s) + ")");
}

// Constructs the family member explicitly via the product operations.
inline Graph build_family_graph(const FamilySpec& spec) {
    check_domain(spec);
    switch (spec.family) {
        case Family::JoinPaths: return join(make_path(spec.r), make_path(spec.s));
        case Family::JoinCycles: return join(make_cycle(spec.r), make_cycle(spec.s));
        case Family::JoinComplete: return join(make_complete(spec.r), make_complete(spec.s));
        case Family::JoinCycleComplete: return join(make_cycle(spec.r), make_complete(spec.s));
        case Family::CoronaPaths: return corona(make_path(spec.r), make_path(spec.s));
        case Family::CoronaCycles: return corona(make_cycle(spec.r), make_cycle(spec.s));
    }
    throw std::invalid_argument("unknown family");
}

inline long long family_order(const FamilySpec& spec) {
    const long long r = spec.r, s = spec.s;
    switch (spec.family) {
        case Family::JoinPaths:
        case Family::JoinCycles:
        case Family::JoinComplete:
        case Family::JoinCycleComplete: return r + s;
        case Family::CoronaPaths:
        case Family::CoronaCycles: return r * s + r;
    }
    throw std::invalid_argument("unknown family");
}

inline long long family_size(const FamilySpec& spec) {
    const long long r = spec.r, s = spec.s;
    switch (spec.family) {
        case Family::JoinPaths: return r + s + r * s - 2;
        case Family::JoinCycles: return r + s + r * s;
        case Family::JoinComplete: return (r + s) * (r + s - 1) / 2;
        case Family::JoinCycleComplete: return r + r * s + s * (s - 1) / 2;
        case Family::CoronaPaths: return 2 * r * s - 1;
        case Family::CoronaCycles: return 2 * r * s + r;
    }
    throw std::invalid_argument("unknown family");
}

namespace detail {

inline void add_class(EdgeClassPartition& part, long long a, long long b, long long count) {
    if (count < 0) throw std::logic_error("symbolic partition produced a negative count");
    if (count == 0) return;
    if (a > b) std::swap(a, b);
    part[{static_cast<int>(a), static_cast<int>(b)}] += count;
}

} // namespace detail

// The family's degree-pair edge partition as a function of (r, s).
// Same shape as edge_partition(build_family_graph(spec)) — that equality
// is what the verification harness checks.
inline EdgeClassPartition symbolic_partition(const FamilySpec& spec) {
    check_domain(spec);
    const long long r = spec.r, s = spec.s;
    EdgeClassPartition part;
    using detail::add_class;
    switch (spec.family) {
        case Family::JoinPaths:
            // Path endpoints gain degree s+1 (resp. r+1), inner vertices s+2 (resp. r+2).
            if (r == 2) {
                add_class(part, s + 1, s + 1, 1);
            } else {
                add_class(part, s + 1, s + 2, 2);
                add_class(part, s + 2, s + 2, r - 3);
            }
            if (s == 2) {
                add_class(part, r + 1, r + 1, 1);
            } else {
                add_class(part, r + 1, r + 2, 2);
                add_class(part, r + 2, r + 2, s - 3);
            }
            add_class(part, s + 1, r + 1, 4);
            add_class(part, s + 1, r + 2, 2 * (s - 2));
            add_class(part, s + 2, r + 1, 2 * (r - 2));
            add_class(part, s + 2, r + 2, (r - 2) * (s - 2));
            break;
        case Family::JoinCycles:
            add_class(part, s + 2, s + 2, r);
            add_class(part, s + 2, r + 2, r * s);
            add_class(part, r + 2, r + 2, s);
            break;
        case Family::JoinComplete:
            add_class(part, r + s - 1, r + s - 1, (r + s) * (r + s - 1) / 2);
            break;
        case Family::JoinCycleComplete:
            add_class(part, s + 2, s + 2, r);
            add_class(part, s + 2, r + s - 1, r * s);
            add_class(part, r + s - 1, r + s - 1, s * (s - 1) / 2);
            break;
        case Family::CoronaPaths:
            // Copy vertices have degree 2 (copy endpoints) or 3 (copy inner);
            // base-path vertices have degree s+1 (endpoints) or s+2 (inner).
            if (s == 2) {
                add_class(part, 2, 2, r);
            } else {
                add_class(part, 2, 3, 2 * r);
                add_class(part, 3, 3, r * (s - 3));
            }
            if (r == 2) {
                add_class(part, s + 1, s + 1, 1);
            } else {
                add_class(part, s + 1, s + 2, 2);
                add_class(part, s + 2, s + 2, r - 3);
            }
            add_class(part, 2, s + 1, 4);
            add_class(part, 2, s + 2, 2 * (r - 2));
            add_class(part, 3, s + 1, 2 * (s - 2));
            add_class(part, 3, s + 2, (r - 2) * (s - 2));
            break;
        case Family::CoronaCycles:
            add_class(part, 3, 3, r * s);
            add_class(part, 3, s + 2, r * s);
            add_class(part, s + 2, s + 2, r);
            break;
    }
    return part;
}

// Closed-form index value: the symbolic partition pushed through the
// exact edge weights.
inline RadicalSum closed_index(const FamilySpec& spec, IndexKind kind) {
    return evaluate_partition(symbolic_partition(spec), kind);
}

} // namespace topolab

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "topolab/audit.hpp"
#include "topolab/families.hpp"
#include "topolab/indices.hpp"

namespace topolab {

// One (family, kind, r, s) comparison of the brute-force oracle against
// the closed form.
struct VerificationRecord {
    Family family;
    IndexKind kind;
    int r;
    int s;
    std::string oracle;
    std::string closed;
    bool exact_equal;
    double float_delta; // relative, vs max(1, |oracle|)
};

// An audit evaluation whose stated formula diverged from the derived form.
struct ErrataHit {
    Family family;
    IndexKind kind;
    int r;
    int s;
    std::string case_id;
    double statement_value;
    double normative_value;
    double delta;
    bool known; // present in the curated errata list
};

struct SummaryRow {
    Family family;
    IndexKind kind;
    long long pass = 0;
    long long fail = 0;
};

struct SweepReport {
    std::vector<VerificationRecord> records;
    std::vector<SummaryRow> summary;
    std::vector<ErrataHit> errata_hits;
    bool all_exact = true;
    bool audit_clean = true; // every hit is a known erratum
};

struct SweepOptions {
    std::vector<Family> families{std::begin(kAllFamilies), std::end(kAllFamilies)};
    std::vector<IndexKind> kinds{IndexKind::ESO, IndexKind::EU};
    int r_max = 10;
    int s_max = 10;
    bool audit = false;
    int threads = 0; // 0 = TOPOLAB_THREADS env var, else hardware concurrency
    // Test hook: perturbs one partition count at a seed-chosen grid point
    // before closed-form evaluation, to prove the harness catches faults.
    std::optional<unsigned long long> fault_seed;
};

// Sweep grids start at max(family minimum, 2); cycle parameters start at 3.
inline int sweep_min_r(Family f) { return std::max(family_min_r(f), 2); }
inline int sweep_min_s(Family f) { return std::max(family_min_s(f), 2); }

namespace detail {

struct GridPoint {
    Family family;
    IndexKind kind;
    int r;
    int s;
};

inline int resolve_threads(int requested, std::size_t points) {
    int t = requested;
    if (t <= 0) {
        if (const char* env = std::getenv("TOPOLAB_THREADS")) t = std::atoi(env);
    }
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
    if (t <= 0) t = 1;
    return static_cast<int>(std::min<std::size_t>(t, std::max<std::size_t>(points, 1)));
}

inline std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

} // namespace detail

inline SweepReport run_sweep(const SweepOptions& options) {
    // Canonical order regardless of how the request was phrased.
    std::vector<Family> families;
    for (Family f : kAllFamilies)
        if (std::find(options.families.begin(), options.families.end(), f) != options.families.end())
            families.push_back(f);
    std::vector<IndexKind> kinds;
    for (IndexKind k : {IndexKind::ESO, IndexKind::EU, IndexKind::SO})
        if (std::find(options.kinds.begin(), options.kinds.end(), k) != options.kinds.end())
            kinds.push_back(k);
    if (families.empty()) throw std::invalid_argument("run_sweep: no families requested");
    if (kinds.empty()) throw std::invalid_argument("run_sweep: no index kinds requested");

    std::vector<detail::GridPoint> points;
    for (Family f : families) {
        if (options.r_max < sweep_min_r(f) || options.s_max < sweep_min_s(f))
            throw std::invalid_argument(std::string("run_sweep: grid bounds below minimum for ") +
                                        family_name(f));
        for (IndexKind k : kinds)
            for (int r = sweep_min_r(f); r <= options.r_max; ++r)
                for (int s = sweep_min_s(f); s <= options.s_max; ++s)
                    points.push_back({f, k, r, s});
    }

    std::size_t fault_index = points.size(); // out of range = no fault
    if (options.fault_seed) {
        std::mt19937_64 rng(*options.fault_seed);
        fault_index = static_cast<std::size_t>(rng() % points.size());
    }

    struct PointResult {
        VerificationRecord record;
        std::optional<ErrataHit> hit;
    };
    std::vector<PointResult> results(points.size());

    auto evaluate = [&](std::size_t i) {
        const detail::GridPoint& p = points[i];
        const FamilySpec spec{p.family, p.r, p.s};
        const RadicalSum oracle = index_exact(build_family_graph(spec), p.kind);
        EdgeClassPartition part = symbolic_partition(spec);
        if (i == fault_index && !part.empty()) ++part.begin()->second;
        const RadicalSum closed = evaluate_partition(part, p.kind);

        VerificationRecord rec;
        rec.family = p.family;
        rec.kind = p.kind;
        rec.r = p.r;
        rec.s = p.s;
        rec.oracle = oracle.to_string();
        rec.closed = closed.to_string();
        rec.exact_equal = (oracle == closed);
        const double of = oracle.to_double(), cf = closed.to_double();
        rec.float_delta = std::abs(of - cf) / std::max(1.0, std::abs(of));
        results[i].record = std::move(rec);

        if (options.audit && p.kind != IndexKind::SO) {
            AuditRecord audit = audit_statement(spec, p.kind);
            if (audit.delta > kAuditTolerance) {
                results[i].hit = ErrataHit{p.family,
                                           p.kind,
                                           p.r,
                                           p.s,
                                           audit.case_id,
                                           audit.statement_value,
                                           audit.normative_value,
                                           audit.delta,
                                           audit.known_discrepancy};
            }
        }
    };

    const int threads = detail::resolve_threads(options.threads, points.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < points.size(); ++i) evaluate(i);
    } else {
        std::vector<std::exception_ptr> errors(points.size());
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < points.size(); i = next.fetch_add(1)) {
                    try {
                        evaluate(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        for (auto& th : pool) th.join();
        for (const std::exception_ptr& err : errors)
            if (err) std::rethrow_exception(err);
    }

    SweepReport report;
    report.records.reserve(points.size());
    for (Family f : families)
        for (IndexKind k : kinds) report.summary.push_back(SummaryRow{f, k});
    for (std::size_t i = 0; i < results.size(); ++i) {
        const VerificationRecord& rec = results[i].record;
        for (SummaryRow& row : report.summary)
            if (row.family == rec.family && row.kind == rec.kind)
                (rec.exact_equal ? row.pass : row.fail)++;
        report.all_exact = report.all_exact && rec.exact_equal;
        if (results[i].hit) {
            report.errata_hits.push_back(*results[i].hit);
            report.audit_clean = report.audit_clean && results[i].hit->known;
        }
        report.records.push_back(rec);
    }
    return report;
}

// CSV with the fixed column set; one row per record, already in
// (family, kind, r, s) order. Floats carry 9 fractional digits.
inline std::string to_csv(const SweepReport& report) {
    std::string out = "family,kind,r,s,exact_equal,float_delta,oracle,closed\n";
    for (const VerificationRecord& rec : report.records) {
        out += family_name(rec.family);
        out += ',';
        out += index_name(rec.kind);
        out += ',';
        out += std::to_string(rec.r) + ',' + std::to_string(rec.s) + ',';
        out += rec.exact_equal ? "true" : "false";
        out += ',';
        out += detail::format_float(rec.float_delta);
        out += ',';
        out += rec.oracle + ',' + rec.closed + '\n';
    }
    return out;
}

} // namespace topolab

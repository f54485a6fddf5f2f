#pragma once

#include <string>

#include <json.hpp>

#include "topolab/verify.hpp"

namespace topolab {

// JSON mirror of SweepReport; field names match the record structs.
inline std::string to_json(const SweepReport& report) {
    nlohmann::ordered_json j;
    j["records"] = nlohmann::ordered_json::array();
    for (const VerificationRecord& rec : report.records) {
        nlohmann::ordered_json r;
        r["family"] = family_name(rec.family);
        r["kind"] = index_name(rec.kind);
        r["r"] = rec.r;
        r["s"] = rec.s;
        r["oracle"] = rec.oracle;
        r["closed"] = rec.closed;
        r["exact_equal"] = rec.exact_equal;
        r["float_delta"] = rec.float_delta;
        j["records"].push_back(std::move(r));
    }
    j["summary"] = nlohmann::ordered_json::array();
    for (const SummaryRow& row : report.summary) {
        nlohmann::ordered_json r;
        r["family"] = family_name(row.family);
        r["kind"] = index_name(row.kind);
        r["pass"] = row.pass;
        r["fail"] = row.fail;
        j["summary"].push_back(std::move(r));
    }
    j["errata_hits"] = nlohmann::ordered_json::array();
    for (const ErrataHit& hit : report.errata_hits) {
        nlohmann::ordered_json r;
        r["family"] = family_name(hit.family);
        r["kind"] = index_name(hit.kind);
        r["r"] = hit.r;
        r["s"] = hit.s;
        r["case"] = hit.case_id;
        r["statement_value"] = hit.statement_value;
        r["normative_value"] = hit.normative_value;
        r["delta"] = hit.delta;
        r["known"] = hit.known;
        j["errata_hits"].push_back(std::move(r));
    }
    j["all_exact"] = report.all_exact;
    j["audit_clean"] = report.audit_clean;
    return j.dump(2) + "\n";
}

} // namespace topolab

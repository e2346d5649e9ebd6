#pragma once

// System files, covector literals and JSON reports.
//
// System file: {"covectors": [[...], ...], "dim": n, "embedding": [[...], ...],
// "name": "...", "params": {...}}, keys sorted, "embedding" present only when
// the system lives in a subspace of its outer coordinates.  Numbers are
// written in shortest round-trip form, so export -> import -> export is
// byte-identical.

#include "veesys/catalog.hpp"
#include "veesys/core.hpp"
#include "veesys/equivalence.hpp"
#include "veesys/restriction.hpp"
#include "veesys/veecheck.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace veesys {

std::string to_json(const CovectorSystem& system);

/// ParseError on malformed documents.  Covectors are put in canonical
/// direction, zero ones dropped and collinear ones merged; rank is not checked.
CovectorSystem from_json(std::string_view text, const TolerancePolicy& policy = {});

CovectorSystem load_system(const std::string& path, const TolerancePolicy& policy = {});
void save_system(const std::string& path, const CovectorSystem& system);

/// "e7-e8", "2e1", "-0.5*e3+e4", 1-based indices in the outer coordinates of
/// `system`; returns the covector in the system's own coordinates.
Covector parse_covector_literal(std::string_view text, const CovectorSystem& system);

/// Comma-separated covector literals and/or plain 0-based member indices.
std::vector<Covector> parse_along(std::string_view text, const CovectorSystem& system);

std::string vee_report_json(const CovectorSystem& system, const VeeReport& report);
std::string merge_log_json(const RestrictionResult& result);
std::string certificate_json(const Certificate& certificate);
/// One JSON object per line.
std::string catalog_jsonl(const std::vector<CatalogEntry>& entries);
std::string verification_json(const VerificationReport& report);

}  // namespace veesys

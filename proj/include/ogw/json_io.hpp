#pragma once

#include <string>

#include <json.hpp>

#include "ogw/maslov.hpp"
#include "ogw/schubert.hpp"
#include "ogw/signs.hpp"
#include "ogw/strata.hpp"

namespace ogw {

using Json = nlohmann::json;

// Flat key/value records mirroring the context field names.
Json sign_context_to_json(const SignContext& ctx);
SignContext sign_context_from_json(const Json& j);

Json bubble_context_to_json(const BubbleContext& b);
BubbleContext bubble_context_from_json(const Json& j);

// Loop files: {"schema": "ogw/loop-v1", "n": n, "samples": [...]} where
// each sample is the row-major list of n*n entries, each entry [re, im].
Json loop_to_json(const TotallyRealLoop& loop);
TotallyRealLoop loop_from_json(const Json& j, const MaslovOptions& opts = {});

Json schur_class_to_json(const SchurClass& u);

Json cancellation_report_to_json(const CancellationReport& r);
Json certificate_to_json(const CancellationCertificate& c);
Json stratum_to_json(const StratumDescriptor& s);

// Structural check of a report against its named schema; throws
// std::invalid_argument on violations.
void validate_report(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace ogw

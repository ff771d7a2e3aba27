#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "iclc/scheme.hpp"
#include "iclc/verify.hpp"

namespace iclc {

// Raised when a scheme document does not match the schema; `path` points at
// the offending field.
struct DocumentError : std::runtime_error {
    std::string path;
    DocumentError(std::string p, const std::string& what)
        : std::runtime_error(what + " (at " + p + ")"), path(std::move(p)) {}
};

// Self-describing scheme document ("schema": 1). Rationals are serialized as
// [num, den] integer pairs, never as decimals; round-trips are lossless.
nlohmann::json scheme_to_json(const Scheme& s);
Scheme scheme_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& r);

}  // namespace iclc

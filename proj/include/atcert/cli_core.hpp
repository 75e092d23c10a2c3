#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "atcert/common.hpp"
#include "atcert/genlab.hpp"

namespace atcert::cli {

using Json = nlohmann::ordered_json;

// Each builder returns the machine report; "ok" carries the overall verdict
// (exit 1 when false). Input problems throw (exit 2).
Json analyze_report(const std::string& rotsys_text, const Caps& caps);
Json detect_report(const std::string& rotsys_text, int l);
Json extract_report(const std::string& rotsys_text, int l, const Caps& caps);
Json verify_orientation_report(const std::string& rotsys_text, const std::string& orient_text,
                               const Caps& caps);
Json discharge_report(const std::string& rotsys_text, int l);
// Writes rotsys files into out_dir and returns the manifest.
Json enumerate_manifest(const GeneratorSpec& spec, const std::string& out_dir);
Json certify_batch_report(const GeneratorSpec& spec, const Caps& caps, int jobs);

bool report_ok(const Json& report);
std::string render(const Json& report, const std::string& format);

}  // namespace atcert::cli

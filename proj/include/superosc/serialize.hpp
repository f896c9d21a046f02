#pragma once

#include <string>

#include <json.hpp>

#include "superosc/genadditive.hpp"
#include "superosc/signal.hpp"

namespace superosc {

using ordered_json = nlohmann::ordered_json;

// Signal JSON schema (bit-exact round trip):
//   {"type":"harmonic_sum","terms":[{"amp":A,"freq":W,"phase":P},...]}
//   {"type":"sinc_series","band":O,"centers":[...],"coeffs":[...]}
//   {"type":"product","factors":[<signal>,...]}
//   {"type":"basis_sum","family":F,"params":{...},"coeffs":[...]}
ordered_json signal_to_json(const Signal& s);
Signal signal_from_json(const nlohmann::json& j);

// {"points":[...],"amps":[...]}
ConstraintSet constraints_from_json(const nlohmann::json& j);
ordered_json constraints_to_json(const ConstraintSet& cs);

ordered_json solve_report_to_json(const SolveReport& report);

// Serializer with decimal floats at 17 significant digits (%.17g), so values
// round-trip bit-exactly and files are byte-stable across runs.
std::string dump_json_17g(const ordered_json& j, int indent = 2);

// %.17g rendering of one double (shared with the CSV writers).
std::string format_17g(double v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace superosc

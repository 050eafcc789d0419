#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "toriclag/construction.hpp"
#include "toriclag/sampler.hpp"

namespace toriclag {

/// Malformed input (JSON syntax, schema, rational strings, shape rules).
/// Maps to exit code 2 in the CLI.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parsed problem document. Absent systems are stored as empty systems; the
/// stacked system is always derived, never part of the document.
struct InputDocument {
    int m = 0;
    QuadricSystem gamma;
    QuadricSystem delta;
};

InputDocument parse_input(const std::string& text);
std::string serialize_input(const InputDocument& doc);

/// JSON renderings. All keys in fixed insertion order, all rationals as
/// strings, all index lists 1-based.
nlohmann::ordered_json validation_json(const ValidationVerdict& v);
nlohmann::ordered_json delzant_json(const Polyhedron& p, const DelzantVerdict& v);
nlohmann::ordered_json report_json(const ConstructionReport& rep);
nlohmann::ordered_json batch_json(const BatchSummary& sum, const Tolerances& tol);

/// Human-readable renderings (deterministic).
std::string validation_text(const ValidationVerdict& v, const std::string& name);
std::string delzant_text(const Polyhedron& p, const DelzantVerdict& v, const std::string& name);
std::string batch_text(const BatchSummary& sum);

/// Canonical example documents; throws ParseError on an unusable m.
InputDocument example_document(const std::string& name, int m);

/// Fixed-width double rendering used everywhere a double is printed.
std::string format_double(double x);

}  // namespace toriclag

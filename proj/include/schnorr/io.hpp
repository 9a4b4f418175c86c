#pragma once

// JSON fixtures and run reports.
//
// Matrices are row-major arrays of rows.  Integers that fit in 64 bits are
// JSON numbers, larger ones decimal strings; N is always a string.  Output
// key order is fixed so identical payloads serialize to identical bytes.

#include <filesystem>
#include <string>

#include "json.hpp"
#include "schnorr/pipeline.hpp"

namespace schnorr {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);
Json vector_to_json(const IntVector& v);
IntVector vector_from_json(const Json& j);

Json relation_to_json(const SmoothRelation& r);
SmoothRelation relation_from_json(const Json& j);

Json fixture_to_json(const Fixture& fixture);
// Throws kFixture on a schema violation.
Fixture fixture_from_json(const Json& j);

std::string dump(const Json& j);

// Throws kIo on filesystem failures.
void write_fixture(const std::filesystem::path& path, const Fixture& fixture);
Fixture read_fixture(const std::filesystem::path& path);

// The lattice-stage fixture of one pipeline round.
Fixture round_fixture(const RunReport& report, const RoundRecord& round);

// Timing is the only run-dependent field and can be left out.
Json report_to_json(const RunReport& report, bool include_timing = true);

// Table-2-style text summary.
std::string format_report(const RunReport& report);

}  // namespace schnorr

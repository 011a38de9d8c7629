#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qsd/scan.hpp"

namespace qsd {

enum class EmitFormat { Csv, Json };

/// CSV with the fixed header t,entropy,eof,abs_delta,ddelta,cond; absent
/// values become empty fields, floats carry 17 significant digits, and any
/// tolerance overrides are logged as leading '#' comment lines.
void emit_csv(const std::vector<ScanRecord>& records, std::ostream& out,
              const std::vector<std::string>& tolerance_overrides = {});

/// JSON array mirroring the records; absent values become null.
void emit_json(const std::vector<ScanRecord>& records, std::ostream& out);

/// Parse records back from the JSON form.
std::vector<ScanRecord> parse_records_json(std::istream& in);

void emit(const std::vector<ScanRecord>& records, EmitFormat format,
          const std::filesystem::path& path,
          const std::vector<std::string>& tolerance_overrides = {});

}  // namespace qsd

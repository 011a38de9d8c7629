#include "qsd/emit.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <json.hpp>

namespace qsd {

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_optional(const std::optional<double>& x) {
  return x ? format_double(*x) : std::string();
}

nlohmann::ordered_json to_json_value(const std::optional<double>& x) {
  if (x) return *x;
  return nullptr;
}

}  // namespace

void emit_csv(const std::vector<ScanRecord>& records, std::ostream& out,
              const std::vector<std::string>& tolerance_overrides) {
  if (records.empty())
    throw ValidationError("emit: no records to write");
  for (const std::string& line : tolerance_overrides)
    out << "# tolerance override: " << line << "\n";
  out << "t,entropy,eof,abs_delta,ddelta,cond\n";
  for (const ScanRecord& r : records) {
    out << format_double(r.t) << ',' << format_optional(r.entropy) << ','
        << format_optional(r.eof) << ',' << format_double(std::abs(r.delta)) << ','
        << format_double(r.ddelta) << ',' << format_optional(r.cond) << '\n';
  }
}

void emit_json(const std::vector<ScanRecord>& records, std::ostream& out) {
  if (records.empty())
    throw ValidationError("emit: no records to write");
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ScanRecord& r : records) {
    nlohmann::ordered_json obj;
    obj["t"] = r.t;
    obj["entropy"] = to_json_value(r.entropy);
    obj["eof"] = to_json_value(r.eof);
    obj["delta"] = r.delta;
    obj["ddelta"] = r.ddelta;
    obj["cond"] = to_json_value(r.cond);
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << "\n";
}

std::vector<ScanRecord> parse_records_json(std::istream& in) {
  nlohmann::json arr;
  try {
    in >> arr;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("parse_records_json: ") + e.what());
  }
  if (!arr.is_array())
    throw ParseError("parse_records_json: expected a JSON array of records");
  std::vector<ScanRecord> records;
  records.reserve(arr.size());
  for (const auto& obj : arr) {
    const auto optional_of = [&](const char* key) -> std::optional<double> {
      if (!obj.contains(key) || obj[key].is_null()) return std::nullopt;
      return obj[key].get<double>();
    };
    records.push_back({obj.at("t").get<double>(), optional_of("entropy"),
                       optional_of("eof"), obj.at("delta").get<double>(),
                       obj.at("ddelta").get<double>(), optional_of("cond")});
  }
  return records;
}

void emit(const std::vector<ScanRecord>& records, EmitFormat format,
          const std::filesystem::path& path,
          const std::vector<std::string>& tolerance_overrides) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("emit: cannot open " + path.string() + " for writing");
  if (format == EmitFormat::Csv)
    emit_csv(records, out, tolerance_overrides);
  else
    emit_json(records, out);
  if (!out) throw IoError("emit: write to " + path.string() + " failed");
}

}  // namespace qsd

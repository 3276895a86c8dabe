#pragma once

#include <string>

#include "addlab/channels.hpp"

namespace addlab {

// Minimal insertion-ordered JSON writer. All floating-point values are
// emitted with 17 significant digits so payloads round-trip bit-exactly.
class JsonWriter {
public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array(const std::string& key = "");
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double v);
  JsonWriter& value(long long v);
  JsonWriter& value(int v);
  JsonWriter& value(unsigned long long v);
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& v);
  JsonWriter& null_value();
  JsonWriter& raw(const std::string& json);  // splice pre-rendered JSON

  JsonWriter& field(const std::string& k, double v);
  JsonWriter& field(const std::string& k, long long v);
  JsonWriter& field(const std::string& k, int v);
  JsonWriter& field(const std::string& k, unsigned long long v);
  JsonWriter& field(const std::string& k, bool v);
  JsonWriter& field(const std::string& k, const std::string& v);
  JsonWriter& field(const std::string& k, const char* v);
  JsonWriter& null_field(const std::string& k);

  const std::string& str() const { return out_; }

private:
  void comma();
  std::string out_;
  bool need_comma_ = false;
};

std::string format_double(double v);  // %.17g, "null" for non-finite
std::string json_escape(const std::string& s);

// Payload renderers (JSON objects, no envelope).
std::string construction_spec_json(const ConstructionSpec& spec);
std::string oracle_estimate_json(const OracleEstimate& est, const OracleConfig& cfg,
                                 const std::string& target);
std::string construct_summary_json(const ConstructionSpec& spec, const SubspaceBasis& basis,
                                   const OracleEstimate& max_schmidt, const OracleConfig& cfg);
std::string witness_report_json(const WitnessReport& rep);
std::string region_scan_json(const RegionScan& scan);

// CSV with "# key=value" header metadata lines, then the fixed column header
// family,p,d,member,n_or_x0,C,c,margin and one row per grid point.
std::string region_scan_csv(const RegionScan& scan);

// Inverse of construction_spec_json (lenient: unknown keys ignored).
ConstructionSpec construction_spec_from_json(const std::string& json);

}  // namespace addlab

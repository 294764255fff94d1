#pragma once
// CSV and JSON encodings of solver output.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dirac1d/spectral.hpp"
#include "dirac1d/wavefunction.hpp"

namespace dirac1d {

/// Nine significant digits, '.' decimal separator regardless of locale.
std::string format_number(double value);

void write_eigen_csv(std::ostream& os, std::span<const EigenvalueRecord> records);
void write_eigen_json(std::ostream& os, std::span<const EigenvalueRecord> records);
std::vector<EigenvalueRecord> read_eigen_json(const std::string& text);

struct ScanSample {
  double nu;
  double f;
};

void write_scan_csv(std::ostream& os, std::span<const ScanSample> samples);

/// x,psi1,psi2 rows preceded by '#' metadata lines.
void write_profile_csv(std::ostream& os, const WavefunctionProfile& profile);

void to_json(nlohmann::json& j, const EigenvalueRecord& record);
void from_json(const nlohmann::json& j, EigenvalueRecord& record);

}  // namespace dirac1d

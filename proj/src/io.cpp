#include "dirac1d/io.hpp"

#include <iomanip>
#include <locale>
#include <ostream>
#include <sstream>

namespace dirac1d {

std::string format_number(double value) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(9) << value;
  return os.str();
}

void write_eigen_csv(std::ostream& os, std::span<const EigenvalueRecord> records) {
  os << "index,nu,e_plus,e_minus,residual\n";
  for (const auto& r : records) {
    os << r.index << ',' << format_number(r.nu) << ',' << format_number(r.e_plus) << ','
       << format_number(r.e_minus) << ',' << format_number(r.residual) << '\n';
  }
}

void to_json(nlohmann::json& j, const EigenvalueRecord& record) {
  j = nlohmann::json{{"index", record.index},       {"nu", record.nu},
                     {"e_plus", record.e_plus},     {"e_minus", record.e_minus},
                     {"residual", record.residual}, {"method", std::string(to_string(record.method))}};
}

void from_json(const nlohmann::json& j, EigenvalueRecord& record) {
  j.at("index").get_to(record.index);
  j.at("nu").get_to(record.nu);
  j.at("e_plus").get_to(record.e_plus);
  j.at("e_minus").get_to(record.e_minus);
  j.at("residual").get_to(record.residual);
  record.method = method_from_string(j.at("method").get<std::string>());
}

// Full round-trip precision here; the 9-digit rule is for CSV.
void write_eigen_json(std::ostream& os, std::span<const EigenvalueRecord> records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) arr.push_back(r);
  os << arr.dump(2) << '\n';
}

std::vector<EigenvalueRecord> read_eigen_json(const std::string& text) {
  return nlohmann::json::parse(text).get<std::vector<EigenvalueRecord>>();
}

void write_scan_csv(std::ostream& os, std::span<const ScanSample> samples) {
  os << "nu,f\n";
  for (const auto& s : samples) os << format_number(s.nu) << ',' << format_number(s.f) << '\n';
}

void write_profile_csv(std::ostream& os, const WavefunctionProfile& profile) {
  os << "# nu = " << format_number(profile.nu) << '\n'
     << "# energy = " << format_number(profile.energy) << '\n'
     << "# norm = " << format_number(profile.norm) << '\n'
     << "# continuity_defect = " << format_number(profile.continuity_defect) << '\n'
     << "x,psi1,psi2\n";
  for (const auto& s : profile.grid) {
    os << format_number(s.x) << ',' << format_number(s.psi1) << ',' << format_number(s.psi2) << '\n';
  }
}

}  // namespace dirac1d

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nrwg/common.hpp"

namespace nrwg {

// One tabulated optical-constant sample: n = 1 - delta + i beta at the
// given photon energy.
struct OpticalSample {
  double energy_ev;
  double delta;
  double beta;
};

// Tabulated x-ray optical constants for one material. Immutable after
// construction; samples are strictly increasing in energy and beta >= 0
// (passive medium).
class MaterialOpticalData {
 public:
  MaterialOpticalData(std::string name, std::vector<OpticalSample> samples);

  // Parses a plain-text table, one sample per line:
  //   energy_eV delta beta
  // whitespace-separated, lines starting with '#' ignored.
  static MaterialOpticalData load(std::istream& in, const std::string& name);

  const std::string& name() const { return name_; }
  const std::vector<OpticalSample>& samples() const { return samples_; }

  // Complex refractive index at the given energy; delta and beta are
  // interpolated linearly and separately. Throws if out of range.
  Complex index_at(double energy_ev) const;

  // Writes the table back in the load() format at 17 significant digits,
  // so that load(serialize(x)) reproduces every sample bit-identically.
  void serialize(std::ostream& out) const;

 private:
  std::string name_;
  std::vector<OpticalSample> samples_;
};

MaterialOpticalData load_material_file(const std::string& path, const std::string& name);

}  // namespace nrwg

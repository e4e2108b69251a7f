#include "nrwg/materials.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace nrwg {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

MaterialOpticalData::MaterialOpticalData(std::string name, std::vector<OpticalSample> samples)
    : name_(std::move(name)), samples_(std::move(samples)) {
  if (samples_.empty()) {
    throw Error("materials: '" + name_ + "': table has no samples");
  }
  for (size_t i = 0; i < samples_.size(); ++i) {
    if (i > 0 && !(samples_[i].energy_ev > samples_[i - 1].energy_ev)) {
      throw Error("materials: '" + name_ + "': photon energies not strictly increasing at sample " +
                  std::to_string(i + 1));
    }
    if (samples_[i].beta < 0.0) {
      throw Error("materials: '" + name_ + "': negative beta at sample " + std::to_string(i + 1) +
                  " (passive medium requires beta >= 0)");
    }
  }
}

MaterialOpticalData MaterialOpticalData::load(std::istream& in, const std::string& name) {
  std::vector<OpticalSample> samples;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    OpticalSample s{};
    if (!(ls >> s.energy_ev >> s.delta >> s.beta)) {
      throw Error("materials: '" + name + "': parse error at line " + std::to_string(line_no) +
                  ": expected 'energy_eV delta beta'");
    }
    std::string rest;
    if (ls >> rest) {
      throw Error("materials: '" + name + "': parse error at line " + std::to_string(line_no) +
                  ": trailing token '" + rest + "'");
    }
    samples.push_back(s);
  }
  return MaterialOpticalData(name, std::move(samples));
}

Complex MaterialOpticalData::index_at(double energy_ev) const {
  const auto& s = samples_;
  if (energy_ev < s.front().energy_ev || energy_ev > s.back().energy_ev) {
    throw Error("materials: '" + name_ + "': energy " + fmt17(energy_ev) +
                " eV outside sampled range [" + fmt17(s.front().energy_ev) + ", " +
                fmt17(s.back().energy_ev) + "]");
  }
  if (s.size() == 1) {
    return Complex(1.0 - s.front().delta, s.front().beta);
  }
  size_t hi = 1;
  while (hi + 1 < s.size() && s[hi].energy_ev < energy_ev) ++hi;
  const auto& a = s[hi - 1];
  const auto& b = s[hi];
  double w = (energy_ev - a.energy_ev) / (b.energy_ev - a.energy_ev);
  double delta = a.delta + w * (b.delta - a.delta);
  double beta = a.beta + w * (b.beta - a.beta);
  return Complex(1.0 - delta, beta);
}

void MaterialOpticalData::serialize(std::ostream& out) const {
  out << "# " << name_ << ": energy_eV delta beta\n";
  for (const auto& s : samples_) {
    out << fmt17(s.energy_ev) << ' ' << fmt17(s.delta) << ' ' << fmt17(s.beta) << '\n';
  }
}

MaterialOpticalData load_material_file(const std::string& path, const std::string& name) {
  std::ifstream in(path);
  if (!in) {
    throw Error("materials: cannot open table file '" + path + "'");
  }
  return MaterialOpticalData::load(in, name);
}

}  // namespace nrwg

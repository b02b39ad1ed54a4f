#include "nhqm/csv.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace nhqm {

static std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);  // 17 significant digits
  return buf;
}

std::string to_csv(const Series& s) {
  if (s.columns.empty()) throw std::invalid_argument("to_csv: empty series");
  std::string out;
  bool first = true;
  for (const Column& c : s.columns) {
    if (!first) out += ',';
    first = false;
    if (c.real_valued)
      out += c.name;
    else
      out += c.name + "_re," + c.name + "_im";
  }
  out += '\n';
  for (int r = 0; r < s.rows(); ++r) {
    first = true;
    for (const Column& c : s.columns) {
      if (!first) out += ',';
      first = false;
      out += fmt17(c.values[r].real());
      if (!c.real_valued) {
        out += ',';
        out += fmt17(c.values[r].imag());
      }
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Series& s) {
  nlohmann::ordered_json j;
  for (const Column& c : s.columns) {
    if (c.real_valued) {
      std::vector<double> v(c.values.size());
      for (size_t i = 0; i < v.size(); ++i) v[i] = c.values[i].real();
      j[c.name] = v;
    } else {
      std::vector<double> re(c.values.size()), im(c.values.size());
      for (size_t i = 0; i < re.size(); ++i) {
        re[i] = c.values[i].real();
        im[i] = c.values[i].imag();
      }
      j[c.name + "_re"] = re;
      j[c.name + "_im"] = im;
    }
  }
  return j.dump(2) + "\n";
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);  // binary: keep \n endings as-is
  if (!f) throw std::runtime_error("write_text: cannot open '" + path + "'");
  f << content;
  if (!f) throw std::runtime_error("write_text: short write to '" + path + "'");
}

}  // namespace nhqm

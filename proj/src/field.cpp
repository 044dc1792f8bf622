// SPDX-License-Identifier: Apache-2.0
#include "lbfd/field.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace lbfd {

double max_abs_diff(const ScalarField& a, const ScalarField& b) {
  if (!a.same_shape(b)) throw ShapeMismatch("field shapes differ");
  double m = 0.0;
  for (size_t k = 0; k < a.v.size(); ++k) m = std::max(m, std::abs(a.v[k] - b.v[k]));
  return m;
}

void write_field_csv(const std::string& path, const ScalarField& f,
                     const std::string& header) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  if (!header.empty()) os << "# " << header << "\n";
  os << "x,y,phi\n";
  char buf[96];
  for (int j = 0; j < f.ny; ++j)
    for (int i = 0; i < f.nx; ++i) {
      std::snprintf(buf, sizeof buf, "%.12e,%.12e,%.12e\n", f.x(i), f.y(j), f.at(i, j));
      os << buf;
    }
}

void write_field_binary(const std::string& path, const ScalarField& f,
                        std::int64_t n, double dt) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path);
  const std::int64_t hx = f.nx, hy = f.ny;
  os.write(reinterpret_cast<const char*>(&hx), 8);
  os.write(reinterpret_cast<const char*>(&hy), 8);
  os.write(reinterpret_cast<const char*>(&n), 8);
  os.write(reinterpret_cast<const char*>(&f.dx), 8);
  os.write(reinterpret_cast<const char*>(&dt), 8);
  os.write(reinterpret_cast<const char*>(f.v.data()), std::streamsize(f.v.size() * 8));
}

ScalarField read_field_binary(const std::string& path, std::int64_t* n_out, double* dt_out) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::int64_t hx = 0, hy = 0, n = 0;
  double dx = 0, dt = 0;
  is.read(reinterpret_cast<char*>(&hx), 8);
  is.read(reinterpret_cast<char*>(&hy), 8);
  is.read(reinterpret_cast<char*>(&n), 8);
  is.read(reinterpret_cast<char*>(&dx), 8);
  is.read(reinterpret_cast<char*>(&dt), 8);
  ScalarField f(int(hx), int(hy), 0, 0, dx);
  is.read(reinterpret_cast<char*>(f.v.data()), std::streamsize(f.v.size() * 8));
  if (!is) throw std::runtime_error("truncated field file " + path);
  if (n_out) *n_out = n;
  if (dt_out) *dt_out = dt;
  return f;
}

}  // namespace lbfd

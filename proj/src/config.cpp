// SPDX-License-Identifier: Apache-2.0
#include "lbfd/config.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "lbfd/verify.hpp"

namespace lbfd {

namespace {

double parse_double(const std::string& v, const std::string& key) {
  try {
    size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size() || !std::isfinite(d))
      throw ParseError("value for '" + key + "' is not a finite number: " + v);
    return d;
  } catch (const std::invalid_argument&) {
    throw ParseError("value for '" + key + "' is not a number: " + v);
  } catch (const std::out_of_range&) {
    throw ParseError("value for '" + key + "' out of range: " + v);
  }
}

long parse_long(const std::string& v, const std::string& key) {
  const double d = parse_double(v, key);
  if (d != std::floor(d)) throw ParseError("value for '" + key + "' must be an integer");
  return long(d);
}

std::vector<double> parse_list(const std::string& v, const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_double(item, key));
  return out;
}

}  // namespace

void apply_key_value(RunConfig& cfg, const std::string& token, const std::string& where) {
  if (token.rfind("example", 0) == 0 && token.find('=') == std::string::npos) {
    cfg.example = int(parse_long(token.substr(7), "example"));
    return;
  }
  const size_t eq = token.find('=');
  if (eq == std::string::npos)
    throw ParseError(where + ": expected key=value, got '" + token + "'");
  const std::string key = token.substr(0, eq), val = token.substr(eq + 1);

  if (key == "example") cfg.example = int(parse_long(val, key));
  else if (key == "kappa") cfg.kappa = parse_double(val, key);
  else if (key == "source_const" || key == "R") cfg.source_const = parse_double(val, key);
  else if (key == "source_linear" || key == "zeta") cfg.source_linear = parse_double(val, key);
  else if (key == "lx") cfg.lx = parse_double(val, key);
  else if (key == "ly") cfg.ly = parse_double(val, key);
  else if (key == "x0") cfg.x0 = parse_double(val, key);
  else if (key == "y0") cfg.y0 = parse_double(val, key);
  else if (key == "boundary") {
    if (val == "periodic") cfg.boundary = BoundaryKind::periodic;
    else if (val == "dirichlet") cfg.boundary = BoundaryKind::dirichlet;
    else throw ParseError("boundary must be periodic or dirichlet");
  } else if (key == "eps" || key == "epsilon") cfg.eps = parse_double(val, key);
  else if (key == "s1") cfg.s1 = parse_double(val, key);
  else if (key == "s5") cfg.s5 = parse_double(val, key);
  else if (key == "matrix_kind") {
    if (val == "orthogonal") cfg.matrix_kind = MatrixKind::orthogonal;
    else if (val == "natural") cfg.matrix_kind = MatrixKind::natural;
    else throw ParseError("matrix_kind must be orthogonal or natural");
  } else if (key == "scheme") cfg.scheme = val;
  else if (key == "dx") cfg.dx = parse_double(val, key);
  else if (key == "dt") cfg.dt = parse_double(val, key);
  else if (key == "T") cfg.T = parse_double(val, key);
  else if (key == "rungs") cfg.rungs = int(parse_long(val, key));
  else if (key == "snapshots") cfg.snapshots = parse_list(val, key);
  else if (key == "grid") cfg.grid = int(parse_long(val, key));
  else if (key == "steps") cfg.steps = int(parse_long(val, key));
  else if (key == "s2_lo") cfg.s2_lo = parse_double(val, key);
  else if (key == "s2_hi") cfg.s2_hi = parse_double(val, key);
  else if (key == "s4_lo") cfg.s4_lo = parse_double(val, key);
  else if (key == "s4_hi") cfg.s4_hi = parse_double(val, key);
  else if (key == "w0_lo") cfg.w0_lo = parse_double(val, key);
  else if (key == "w0_hi") cfg.w0_hi = parse_double(val, key);
  else if (key == "scan_s5") cfg.scan_s5 = parse_double(val, key);
  else if (key == "res") cfg.res = int(parse_long(val, key));
  else if (key == "signs") cfg.signs = parse_long(val, key);
  else if (key == "tables") cfg.tables = val;
  else if (key == "out") cfg.out = val;
  else if (key == "seed") cfg.seed = std::uint64_t(parse_long(val, key));
  else if (key == "svg") cfg.svg = val == "1" || val == "true" || val == "yes";
  else throw ParseError(where + ": unknown key '" + key + "'");
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int ln = 0;
  while (std::getline(ss, line)) {
    ++ln;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    // trim
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    std::string tok = line.substr(b, e - b + 1);
    // allow "key = value" with spaces
    std::string squeezed;
    for (char ch : tok)
      if (ch != ' ' && ch != '\t') squeezed += ch;
    apply_key_value(cfg, squeezed, "line " + std::to_string(ln));
  }
  validate(cfg);
  return cfg;
}

void validate(const RunConfig& cfg) {
  std::vector<std::string> errs;
  if (cfg.example && (*cfg.example < 1 || *cfg.example > 3))
    errs.push_back("example must be 1, 2 or 3");
  if (!(cfg.dx > 0)) errs.push_back("dx must be > 0");
  if (!(cfg.dt > 0)) errs.push_back("dt must be > 0");
  if (!(cfg.T > 0)) errs.push_back("T must be > 0");
  if (cfg.rungs < 2) errs.push_back("rungs must be >= 2");
  if (cfg.res < 2) errs.push_back("res must be >= 2");
  const bool equiv_alias = cfg.scheme == "slfd_al";  // equiv pairs LB-AL with SLFD-AL
  if (!cfg.scheme.empty() && !equiv_alias) {
    try {
      scheme_from_string(cfg.scheme);
    } catch (const ValidationError& e) {
      errs.emplace_back(e.what());
    }
  }
  // derive the parameter set once so range problems surface here
  if (!cfg.scheme.empty() && cfg.eps > 0 && !equiv_alias) {
    try {
      const SchemeId id = scheme_from_string(cfg.scheme);
      const double zeta = cfg.example && *cfg.example == 3
                              ? -std::acos(-1.0) * std::acos(-1.0) *
                                    (1.0 - cfg.eps * cfg.dx * cfg.dx / cfg.dt)
                              : cfg.source_linear;
      switch (id) {
        case SchemeId::mrt_lb:
        case SchemeId::slfd: derive_fourth_order(cfg.eps, cfg.s5); break;
        case SchemeId::flfd: derive_fourth_order(cfg.eps, 1.0); break;
        case SchemeId::mrt_lb_mn:
        case SchemeId::slfd_mn: derive_fourth_order_natural(cfg.eps); break;
        case SchemeId::mrt_lb_al1:
        case SchemeId::slfd_al1: derive_linear_source_v1(cfg.eps); break;
        case SchemeId::mrt_lb_al2:
        case SchemeId::slfd_al2:
          derive_linear_source_v2(cfg.eps, cfg.s5 == 1.0 ? 1.2 : cfg.s5, zeta, cfg.dt);
          break;
      }
    } catch (const RangeError& e) {
      errs.emplace_back(std::string("parameter derivation: ") + e.what());
    } catch (const NegativeRadicand& e) {
      errs.emplace_back(std::string("parameter derivation: ") + e.what());
    }
  } else if (!(cfg.eps > 0)) {
    errs.push_back("eps must be > 0");
  }
  if (!errs.empty()) {
    std::string msg = "invalid configuration:";
    for (const std::string& e : errs) msg += "\n  - " + e;
    throw ValidationError(msg);
  }
}

std::string RunConfig::resolved() const {
  char buf[64];
  std::ostringstream os;
  os << "subcommand=" << subcommand;
  if (example) os << " example=" << *example;
  auto put = [&](const char* k, double v) {
    std::snprintf(buf, sizeof buf, " %s=%.12g", k, v);
    os << buf;
  };
  put("eps", eps);
  put("s1", s1);
  put("s5", s5);
  os << " matrix_kind=" << to_string(matrix_kind) << " scheme=" << scheme;
  put("dx", dx);
  put("dt", dt);
  put("T", T);
  os << " rungs=" << rungs << " grid=" << grid << " steps=" << steps << " res=" << res
     << " tables=" << tables << " seed=" << seed;
  return os.str();
}

}  // namespace lbfd

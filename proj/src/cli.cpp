// Copyright 2026 The qpi-tools authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpi/cli.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

#include "qpi/json_io.hpp"
#include "qpi/laws.hpp"
#include "qpi/parser.hpp"

namespace qpi::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct NamedTerm {
  Definition def;
  TypeExpr domain;
};

// Fetches a definition and its (required) domain annotation.
NamedTerm resolve(const SourceFile& f, const std::string& name) {
  if (!f.contains(name)) throw Error("no definition named '" + name + "'");
  const Definition& d = f.find(name);
  if (!d.dom) {
    throw Error("definition '" + name +
                "' needs a type annotation (def " + name +
                " : b1 ~> b2 = ...) to be evaluated");
  }
  return {d, *d.dom};
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void print_matrix_table(const CMatrix& m, std::ostream& out) {
  out << m.rows() << "x" << m.cols() << "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      char buf[80];
      std::snprintf(buf, sizeof(buf), "%12.6g%+.6gi", z.real(), z.imag());
      out << buf << (j + 1 == m.cols() ? "" : "  ");
    }
    out << "\n";
  }
}

void print_report_line(const LawReport& r, std::ostream& out) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-28s phi=%-12.8g %s  max_dev=%.3e",
                r.law.c_str(), r.phi, r.holds ? "ok  " : "FAIL",
                r.max_deviation);
  out << buf << "\n";
}

int guard(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace

double parse_phi(const std::string& s) {
  // k*pi/d, pi/d, k*pi, pi, or plain decimal radians.
  std::size_t pos = 0;
  double mult = 1.0;
  const std::size_t star = s.find('*');
  std::string rest = s;
  if (star != std::string::npos) {
    mult = std::stod(s.substr(0, star));
    rest = s.substr(star + 1);
  }
  if (rest.rfind("pi", 0) == 0) {
    double div = 1.0;
    pos = 2;
    if (pos < rest.size()) {
      if (rest[pos] != '/') throw Error("bad angle syntax: " + s);
      div = std::stod(rest.substr(pos + 1));
    }
    return mult * kPi / div;
  }
  if (star != std::string::npos) throw Error("bad angle syntax: " + s);
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw Error("bad angle syntax: " + s);
  return v;
}

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err) {
  return guard(err, [&] {
    const SourceFile f = parse_file(path);
    for (const Definition& d : f.defs()) {
      if (d.dom) {
        const TypeExpr cod = typecheck_measured(d.term, *d.dom);
        out << "ok " << d.name << " : " << d.dom->str() << " ~> "
            << cod.str() << "\n";
      } else {
        out << "ok " << d.name << " (no annotation; parsed only)\n";
      }
    }
    return kOk;
  });
}

int cmd_compile(const std::string& path, const std::string& name,
                const std::string& phi_str, bool json, std::ostream& out,
                std::ostream& err) {
  return guard(err, [&] {
    const double phi = parse_phi(phi_str);
    const SourceFile f = parse_file(path);
    const NamedTerm nt = resolve(f, name);
    if (!is_pure(nt.def.term)) {
      throw Error("'" + name +
                  "' contains measurement combinators; use `run` instead");
    }
    const CMatrix m = eval_qpi(phi, to_qpi(nt.def.term), nt.domain);
    if (json) {
      out << matrix_to_json(m).dump() << "\n";
    } else {
      print_matrix_table(m, out);
    }
    return kOk;
  });
}

int cmd_equiv(const std::string& path, const std::string& name1,
              const std::string& name2, const std::string& phi_str,
              double tol, bool json, std::ostream& out, std::ostream& err) {
  return guard(err, [&] {
    const double phi = parse_phi(phi_str);
    const SourceFile f = parse_file(path);
    const NamedTerm a = resolve(f, name1);
    const NamedTerm b = resolve(f, name2);
    if (a.domain != b.domain) {
      throw Error("domains disagree: " + a.domain.str() + " vs " +
                  b.domain.str());
    }
    if (!is_pure(a.def.term) || !is_pure(b.def.term)) {
      throw Error("equiv compares reversible-layer terms only");
    }
    LawReport r = equiv(phi, to_qpi(a.def.term), to_qpi(b.def.term),
                        a.domain, tol);
    r.law = "equiv(" + name1 + "," + name2 + ")";
    if (json) {
      out << report_to_json(r).dump() << "\n";
    } else {
      print_report_line(r, out);
    }
    return r.holds ? kOk : kLawFailure;
  });
}

int cmd_laws(const std::string& phi_str, std::uint64_t seed, int count,
             bool json, std::ostream& out, std::ostream& err) {
  return guard(err, [&] {
    const double phi = parse_phi(phi_str);
    std::vector<LawReport> reports = run_suite(phi);
    const std::vector<LawReport> props =
        random_property_suite(phi, count, seed);
    reports.insert(reports.end(), props.begin(), props.end());

    bool all = true;
    for (const LawReport& r : reports) {
      all = all && r.holds;
      if (json) {
        out << report_to_json(r).dump() << "\n";
      } else {
        print_report_line(r, out);
      }
    }
    if (!json) {
      out << (all ? "all laws hold" : "LAW FAILURES PRESENT") << " (phi="
          << fmt_double(phi) << ", seed=" << seed << ", count=" << count
          << ")\n";
    }
    return all ? kOk : kLawFailure;
  });
}

int cmd_run(const std::string& path, const std::string& name,
            const std::string& phi_str, std::uint64_t shots,
            std::uint64_t seed, std::int64_t input, bool unsafe,
            std::ostream& out, std::ostream& err) {
  return guard(err, [&] {
    const double phi = parse_phi(phi_str);
    const SourceFile f = parse_file(path);
    const NamedTerm nt = resolve(f, name);
    if (input < 0 || input >= nt.domain.dim()) {
      throw Error("input index " + std::to_string(input) +
                  " out of range for " + nt.domain.str());
    }
    if (is_pure(nt.def.term) && !unsafe) {
      throw Error("'" + name +
                  "' has no measurement; pass --unsafe to sample the raw "
                  "output distribution");
    }
    const SampleResult r = sample(phi, nt.def.term, nt.domain, input, shots,
                                  seed, unsafe);
    out << sample_to_json(r).dump() << "\n";
    return kOk;
  });
}

}  // namespace qpi::cli

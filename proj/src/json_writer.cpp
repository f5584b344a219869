// Copyright 2026 The orthogate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orthogate/json_writer.hpp"

#include <cmath>
#include <cstdio>

namespace orthogate::json {

namespace {

void newline(std::string& out, int indent, int depth) {
  if (indent < 0) return;
  out += '\n';
  out.append(static_cast<std::size_t>(indent * depth), ' ');
}

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) x = 0.0;  // print -0 as 0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  // Keep a marker that this is a real number, e.g. "1" -> "1.0".
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

bool is_flat(const Document& doc) {
  for (const auto& item : doc) {
    if (item.is_structured()) return false;
  }
  return true;
}

// Arrays of scalars, and arrays of such arrays (a state vector of [re, im]
// pairs), stay on one line.
bool is_compact(const Document& doc) {
  for (const auto& item : doc) {
    if (item.is_object() || (item.is_array() && !is_flat(item))) return false;
  }
  return true;
}

void write(const Document& doc, std::string& out, int indent, int depth) {
  switch (doc.type()) {
    case Document::value_t::object: {
      if (doc.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(out, indent, depth + 1);
        out += Document(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        write(it.value(), out, indent, depth + 1);
      }
      newline(out, indent, depth);
      out += '}';
      return;
    }
    case Document::value_t::array: {
      if (doc.empty()) {
        out += "[]";
        return;
      }
      const bool flat = is_compact(doc);
      out += '[';
      bool first = true;
      for (const auto& item : doc) {
        if (!first) out += flat && indent >= 0 ? ", " : ",";
        first = false;
        if (!flat) newline(out, indent, depth + 1);
        write(item, out, indent, depth + 1);
      }
      if (!flat) newline(out, indent, depth);
      out += ']';
      return;
    }
    case Document::value_t::number_float:
      out += format_double(doc.get<double>());
      return;
    default:
      out += doc.dump();
      return;
  }
}

}  // namespace

std::string dump(const Document& doc, int indent) {
  std::string out;
  write(doc, out, indent, 0);
  return out;
}

Document complex_value(cplx z) { return Document::array({z.real(), z.imag()}); }

Document state(const StateVector& v) {
  Document out = Document::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_value(v[i]));
  return out;
}

Document matrix(const ComplexMatrix& m) {
  Document out = Document::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Document row = Document::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_value(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Document real_matrix(const RealMatrix& m) {
  Document out = Document::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Document row = Document::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

Document real_vector(const RealVector& v) {
  Document out = Document::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

}  // namespace orthogate::json

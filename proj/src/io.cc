// Copyright 2026 The symstab Authors
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

#include "symstab/io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symstab/majorana.h"

namespace symstab {
namespace {

using nlohmann::json;

Complex ParseComplex(const json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
      !value[1].is_number()) {
    throw FormatError(where + ": expected [re, im]");
  }
  const Complex z(value[0].get<double>(), value[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw FormatError(where + ": non-finite number");
  }
  return z;
}

LoadedState ParseDicke(int n, const json& dicke) {
  if (!dicke.is_array() || static_cast<int>(dicke.size()) != n + 1) {
    throw FormatError("\"dicke\" must list n + 1 = " + std::to_string(n + 1) + " amplitudes");
  }
  std::vector<Complex> x;
  double norm2 = 0.0;
  for (std::size_t k = 0; k < dicke.size(); ++k) {
    x.push_back(ParseComplex(dicke[k], "dicke[" + std::to_string(k) + "]"));
    norm2 += std::norm(x.back());
  }
  try {
    return LoadedState{SymmetricState(n, std::move(x)), std::sqrt(norm2), false, std::nullopt};
  } catch (const DomainError& e) {
    throw FormatError(std::string("invalid Dicke amplitudes: ") + e.what());
  }
}

LoadedState ParseMajorana(int n, const json& entries) {
  if (!entries.is_array() || entries.empty()) {
    throw FormatError("\"majorana\" must be a non-empty array");
  }
  MajoranaSet set;
  set.n = n;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "majorana[" + std::to_string(i) + "]";
    const json& e = entries[i];
    if (!e.is_object() || !e.contains("a") || !e.contains("b") || !e.contains("mult")) {
      throw FormatError(where + ": expected {\"a\", \"b\", \"mult\"}");
    }
    if (!e["mult"].is_number_integer()) throw FormatError(where + ": mult must be an integer");
    const Complex a = ParseComplex(e["a"], where + ".a");
    const Complex b = ParseComplex(e["b"], where + ".b");
    try {
      set.clusters.push_back({ProjectivePoint::Canonicalize(a, b), e["mult"].get<int>()});
    } catch (const DomainError& err) {
      throw FormatError(where + ": " + err.what());
    }
  }
  try {
    set.Validate();
    set.Sort();
    return LoadedState{MajoranaCompose(set), 1.0, true, set};
  } catch (const DomainError& err) {
    throw FormatError(std::string("invalid Majorana set: ") + err.what());
  }
}

}  // namespace

LoadedState ParseState(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("state file must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw FormatError("state file needs an integer \"n\"");
  }
  const int n = doc["n"].get<int>();
  if (n < 1) throw FormatError("\"n\" must be at least 1");
  const bool has_dicke = doc.contains("dicke");
  const bool has_majorana = doc.contains("majorana");
  if (has_dicke == has_majorana) {
    throw FormatError("exactly one of \"dicke\" and \"majorana\" must be present");
  }
  return has_dicke ? ParseDicke(n, doc["dicke"]) : ParseMajorana(n, doc["majorana"]);
}

LoadedState LoadStateFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return ParseState(text.str());
}

std::string StateToJson(const SymmetricState& state) {
  json dicke = json::array();
  for (const Complex& x : state.amplitudes()) dicke.push_back({x.real(), x.imag()});
  return json{{"n", state.n()}, {"dicke", dicke}}.dump();
}

}  // namespace symstab

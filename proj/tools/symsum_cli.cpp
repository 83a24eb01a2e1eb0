/* Copyright (C) 2026 The symsum Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
// symsum: command-line front end over the C API.
//
// Exit codes:
//   0  success
//   1  internal error
//   2  bad arguments, parse errors, invalid field or spec
//   3  enumeration budget exceeded
//   4  no recurrence found
//   5  odd characteristic where p = 2 is required

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symsum/symsum.h"

namespace {

using Json = nlohmann::json;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(symsum_status s) {
  switch (s) {
    case SYMSUM_OK: return 0;
    case SYMSUM_ERR_BUDGET_EXCEEDED: return 3;
    case SYMSUM_ERR_NO_RECURRENCE_FOUND: return 4;
    case SYMSUM_ERR_ODD_CHARACTERISTIC: return 5;
    case SYMSUM_ERR_INTERNAL:
    case SYMSUM_ERR_NOT_A_UNIT:
    case SYMSUM_ERR_NOT_RATIONAL_INTEGER: return 1;
    default: return 2;
  }
}

void check(symsum_status s) {
  if (s != SYMSUM_OK)
    throw Failure{exit_code_for(s), std::string(symsum_status_name(s)) + ": " + symsum_last_error()};
}

// Takes ownership of a library string and parses it.
Json take(char* raw) {
  Json j = Json::parse(raw);
  symsum_string_free(raw);
  return j;
}

class Field {
 public:
  explicit Field(const std::string& text) { check(symsum_field_create(text.c_str(), &h_)); }
  ~Field() { symsum_field_destroy(h_); }
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;
  const symsum_field* get() const { return h_; }

 private:
  symsum_field* h_ = nullptr;
};

class Spec {
 public:
  Spec(const Field& f, const std::string& text) { check(symsum_spec_create(f.get(), text.c_str(), &h_)); }
  ~Spec() { symsum_spec_destroy(h_); }
  Spec(const Spec&) = delete;
  Spec& operator=(const Spec&) = delete;
  const symsum_spec* get() const { return h_; }

 private:
  symsum_spec* h_ = nullptr;
};

struct Options {
  std::string field = "2";
  std::string spec = "1";
  unsigned n = 0;
  unsigned n_min = 0;
  unsigned n_max = 0;
  std::string method = "multinomial";
  std::string mode = "char";
  std::string format = "text";
  std::uint64_t budget = 0;
  unsigned terms = 0;
  std::string kind = "nega-hadamard";
  std::vector<unsigned> degrees{2, 3};
  unsigned modulus = 2;
};

symsum_method parse_method(const std::string& m) {
  if (m == "brute") return SYMSUM_METHOD_BRUTE;
  if (m == "multinomial") return SYMSUM_METHOD_MULTINOMIAL;
  if (m == "partition") return SYMSUM_METHOD_PARTITION;
  if (m == "closed") return SYMSUM_METHOD_CLOSED;
  throw Failure{2, "unknown method: " + m};
}

symsum_recurrence_mode parse_mode(const std::string& m) {
  if (m == "char") return SYMSUM_RECURRENCE_CHAR;
  if (m == "lcm") return SYMSUM_RECURRENCE_LCM;
  if (m == "minimal") return SYMSUM_RECURRENCE_MINIMAL;
  throw Failure{2, "unknown mode: " + m};
}

std::string value_text(const Json& v) { return v.at("text").get<std::string>(); }

std::string plain(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string join(const Json& arr, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    out += arr[i].is_array() ? "(" + join(arr[i]) + ")" : plain(arr[i]);
  }
  return out;
}

// --- text renderers ---------------------------------------------------------

std::string text_field(const Json& j) {
  std::ostringstream os;
  os << j.at("describe").get<std::string>() << "\n";
  os << "p = " << j.at("p") << ", r = " << j.at("r") << ", q = " << j.at("q") << "\n";
  os << "modulus: " << j.at("modulus_text").get<std::string>() << "\n";
  if (j.contains("traces")) os << "traces: " << join(j.at("traces"), " ") << "\n";
  return os.str();
}

std::string text_eval(const Json& j) { return value_text(j.at("value")) + "\n"; }

std::string text_values(const Json& j) {
  std::ostringstream os;
  unsigned n = j.at("n_min").get<unsigned>();
  for (const auto& v : j.at("values")) os << n++ << "\t" << value_text(v) << "\n";
  return os.str();
}

std::string text_certificate(const Json& c) {
  std::ostringstream os;
  os << "certificate: " << (c.at("satisfied").get<bool>() ? "satisfied" : "violated")
     << " over " << c.at("checked_range") << " terms\n";
  return os.str();
}

std::string text_recurrence(const Json& j) {
  std::ostringstream os;
  const std::string mode = j.at("mode");
  os << "mode: " << mode << " (D = " << j.at("D") << ")\n";
  os << "poly: " << j.at("poly").at("expanded").get<std::string>() << "\n";
  os << "degree: " << j.at("poly").at("degree") << "\n";
  os << "factored: " << j.at("factored").at("text").get<std::string>() << "\n";
  os << "char_poly_degree: " << plain(j.at("char_poly_degree")) << "\n";
  os << "pochhammer_bound: " << plain(j.at("pochhammer_bound")) << "\n";
  if (mode == "minimal") {
    os << "terms: S(" << j.at("start_index") << ".." << j.at("terms") << ")\n";
    os << "divides_lcm: " << j.at("divides_lcm") << "\n";
    os << "divides_char: " << j.at("divides_char") << "\n";
    os << text_certificate(j.at("certificate"));
  }
  return os.str();
}

std::string text_sections(const Json& j) {
  std::ostringstream os;
  os << "n = " << j.at("n") << ", q = " << j.at("q") << ", p = " << j.at("p") << "\n";
  const auto& subs = j.at("sublists");
  const auto& sums = j.at("sums");
  for (std::size_t i = 0; i < subs.size(); ++i)
    os << "l_" << i << ": {" << join(subs[i]) << "}  sum = " << plain(sums[i]) << "\n";
  os << "balanced: " << j.at("balanced") << "\n";
  os << "trivial: " << j.at("trivial") << "\n";
  return os.str();
}

std::string text_diophantine(const Json& j) {
  std::ostringstream os;
  const auto& parts = j.at("partitions");
  const auto& deltas = j.at("deltas");
  for (std::size_t i = 0; i < parts.size(); ++i)
    os << "(" << join(parts[i]) << ")\t" << plain(deltas[i]) << "\n";
  os << "deltas: " << join(deltas) << "\n";
  os << "weighted_sum: " << plain(j.at("weighted_sum")) << "\n";
  os << "certified: " << j.at("certified") << "\n";
  return os.str();
}

std::string text_twisted(const Json& j) {
  std::ostringstream os;
  os << "kind: " << j.at("kind").get<std::string>() << " (D = " << j.at("D") << ")\n";
  os << text_values(j);
  os << "closed_matches_direct: " << j.at("closed_matches_direct") << "\n";
  os << "char_poly: " << j.at("char_poly").at("expanded").get<std::string>() << "\n";
  if (j.contains("certificate")) os << text_certificate(j.at("certificate"));
  if (j.contains("annihilator")) {
    os << "annihilator: " << j.at("annihilator").at("poly").at("expanded").get<std::string>()
       << " (from n = " << j.at("annihilator").at("start_index") << ")\n";
    if (j.at("annihilator").contains("certificate"))
      os << text_certificate(j.at("annihilator").at("certificate"));
  }
  return os.str();
}

std::string render(const Json& j, const std::string& format, std::string (*text)(const Json&)) {
  if (format == "json") return j.dump(2) + "\n";
  return text(j);
}

// --- commands ---------------------------------------------------------------

std::string run(const std::string& cmd, const Options& o) {
  char* raw = nullptr;
  if (cmd == "field-info") {
    Field f(o.field);
    check(symsum_field_info(f.get(), &raw));
    return render(take(raw), o.format, text_field);
  }
  if (cmd == "twisted-sum") {
    if (o.kind == "nega-hadamard") {
      check(symsum_twisted_nega_hadamard(o.degrees.data(), o.degrees.size(), o.n_min, o.n_max, &raw));
    } else if (o.kind == "pisano") {
      check(symsum_twisted_pisano(o.modulus, o.n_min, o.n_max, &raw));
    } else {
      throw Failure{2, "unknown kind: " + o.kind};
    }
    return render(take(raw), o.format, text_twisted);
  }

  Field f(o.field);
  Spec s(f, o.spec);
  if (cmd == "eval") {
    check(symsum_eval(f.get(), s.get(), o.n, parse_method(o.method), o.budget, &raw));
    return render(take(raw), o.format, text_eval);
  }
  if (cmd == "sequence") {
    check(symsum_sequence(f.get(), s.get(), o.n_min, o.n_max, parse_method(o.method), o.budget, &raw));
    return render(take(raw), o.format, text_values);
  }
  if (cmd == "recurrence") {
    check(symsum_recurrence(f.get(), s.get(), parse_mode(o.mode), o.terms, &raw));
    return render(take(raw), o.format, text_recurrence);
  }
  if (cmd == "sections") {
    check(symsum_sections(f.get(), s.get(), o.n, &raw));
    return render(take(raw), o.format, text_sections);
  }
  if (cmd == "diophantine") {
    check(symsum_diophantine(f.get(), s.get(), o.n, &raw));
    return render(take(raw), o.format, text_diophantine);
  }
  throw Failure{2, "unknown command: " + cmd};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponential sums of elementary symmetric polynomials over GF(p^r)"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", symsum_version());

  Options o;
  auto add_common = [&](CLI::App* sub, bool with_spec) {
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    if (!with_spec) return;
    sub->add_option("--field", o.field, "p^r or p^r/c0,...,cr")->required();
    sub->add_option("--spec", o.spec, "k1:b1,k2:b2,...")->required();
  };

  auto* info = app.add_subcommand("field-info", "Describe a field and its trace table");
  info->add_option("--field", o.field, "p^r or p^r/c0,...,cr")->required();
  add_common(info, false);

  auto* eval = app.add_subcommand("eval", "Evaluate the exponential sum at n");
  add_common(eval, true);
  eval->add_option("--n", o.n, "number of variables")->required();
  eval->add_option("--method", o.method, "brute, multinomial, partition or closed");
  eval->add_option("--budget", o.budget, "brute-force tuple budget (0 = default)");

  auto* seq = app.add_subcommand("sequence", "Evaluate the sum for a range of n");
  add_common(seq, true);
  seq->add_option("--n-min", o.n_min, "first n");
  seq->add_option("--n-max", o.n_max, "last n")->required();
  seq->add_option("--method", o.method, "brute, multinomial, partition or closed");
  seq->add_option("--budget", o.budget, "brute-force tuple budget (0 = default)");

  auto* rec = app.add_subcommand("recurrence", "Characteristic or minimal recurrence polynomial");
  add_common(rec, true);
  rec->add_option("--mode", o.mode, "char, lcm or minimal")->check(CLI::IsMember({"char", "lcm", "minimal"}));
  rec->add_option("--terms", o.terms, "sequence length for minimal mode (0 = automatic)");

  auto* sec = app.add_subcommand("sections", "(p,q)-section report at n");
  add_common(sec, true);
  sec->add_option("--n", o.n, "number of variables")->required();

  auto* dio = app.add_subcommand("diophantine", "Partition/delta certificate at n (p = 2)");
  add_common(dio, true);
  dio->add_option("--n", o.n, "number of variables")->required();

  auto* tw = app.add_subcommand("twisted-sum", "Nega-Hadamard or Pisano twisted binomial sums");
  add_common(tw, false);
  tw->add_option("--kind", o.kind, "nega-hadamard or pisano")
      ->check(CLI::IsMember({"nega-hadamard", "pisano"}));
  tw->add_option("--degrees", o.degrees, "degrees k_j for nega-hadamard")->delimiter(',');
  tw->add_option("--modulus", o.modulus, "modulus m for pisano");
  tw->add_option("--n-min", o.n_min, "first n");
  tw->add_option("--n-max", o.n_max, "last n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const std::string out = run(app.get_subcommands().front()->get_name(), o);
    std::cout << out;
    return 0;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

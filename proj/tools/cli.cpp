/*
 * Copyright 2026 The OSP Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "osp/osp.hpp"

namespace osp::cli {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return 99;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Options {
  std::string poly;
  unsigned width = 0;
  bool json = false;
  bool hex = false;
};

std::string format_word(const Word& v, bool hex) {
  if (!hex) return v.str();
  std::string s = v.str(0, std::ios_base::hex);
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return "0x" + s;
}

json json_word(const Word& v, bool hex) {
  if (hex) return format_word(v, true);
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

Residue parse_residue(const std::string& token, Width w, const char* what) {
  const BigInt v = parse_integer(token);
  if (v < 0 || v >= w.modulus()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " must be in [0, 2^" + std::to_string(w.bits()) + ")");
  }
  return static_cast<Word>(v);
}

BigInt parse_count(const std::string& token, const char* what) {
  const BigInt v = parse_integer(token);
  if (v < 0) parse_error(std::string(what) + " must be nonnegative");
  return v;
}

std::uint64_t exhaustive_budget() {
  const char* env = std::getenv("OSP_MAX_EXHAUSTIVE");
  if (env == nullptr || *env == '\0') return kDefaultExhaustiveBudget;
  const BigInt v = parse_integer(env);
  if (v <= 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    parse_error("OSP_MAX_EXHAUSTIVE must be a positive 64-bit integer");
  }
  return static_cast<std::uint64_t>(v);
}

void emit_value(std::ostream& out, const Options& o, const Word& v) {
  if (o.json) {
    out << json{{"result", json_word(v, o.hex)}}.dump() << '\n';
  } else {
    out << format_word(v, o.hex) << '\n';
  }
}

void add_common(CLI::App* cmd, Options& o, bool needs_width) {
  cmd->add_option("-p,--poly", o.poly, "coefficients a0,a1,...,aN")->required();
  auto* w = cmd->add_option("-w,--width", o.width, "ring width w (modulus 2^w)");
  if (needs_width) w->required();
  cmd->add_flag("--json", o.json, "emit JSON");
  cmd->add_flag("--hex", o.hex, "print residues as 0x hex");
}

void cmd_classify(std::ostream& out, const Options& o, bool explain) {
  const Polynomial p = parse_poly_spec(o.poly);
  const PermClass c = classify(p);
  const auto conds = one_stroke_conditions(p);
  if (o.json) {
    json j{{"result", std::string(to_string(c))}};
    if (explain) {
      json rows = json::array();
      for (const auto& k : conds) {
        rows.push_back({{"condition", k.name},
                        {"lhs", k.lhs.str()},
                        {"rhs", k.rhs.str()},
                        {"modulus", k.modulus},
                        {"pass", k.pass}});
      }
      j["conditions"] = rows;
    }
    out << j.dump() << '\n';
    return;
  }
  out << to_string(c) << '\n';
  if (!explain) return;
  for (const auto& k : conds) {
    const Width m(k.modulus == 2 ? 1 : 2);
    out << "  " << (k.pass ? "pass" : "FAIL") << "  " << k.name << ": " << k.lhs
        << " vs " << k.rhs << " (residues " << m.reduce(k.lhs) << " vs "
        << m.reduce(k.rhs) << ")\n";
  }
}

void cmd_orbit(std::ostream& out, const Options& o, const std::optional<std::string>& start) {
  const Polynomial p = parse_poly_spec(o.poly);
  const Width w(o.width);
  std::optional<std::uint64_t> only;
  if (start) only = static_cast<std::uint64_t>(parse_residue(*start, w, "--start"));
  const OrbitReport report = cycle_decomposition(p, w, exhaustive_budget());

  std::vector<const std::vector<std::uint64_t>*> shown;
  for (const auto& cycle : report.cycles) {
    if (!only || std::find(cycle.begin(), cycle.end(), *only) != cycle.end()) {
      shown.push_back(&cycle);
    }
  }
  if (o.json) {
    json cycles = json::array();
    for (const auto* cycle : shown) {
      json c = json::array();
      for (std::uint64_t x : *cycle) c.push_back(json_word(Word(x), o.hex));
      cycles.push_back(c);
    }
    out << json{{"result", cycles}}.dump() << '\n';
    return;
  }
  for (const auto* cycle : shown) {
    for (std::uint64_t x : *cycle) out << format_word(Word(x), o.hex) << " -> ";
    out << format_word(Word(cycle->front()), o.hex) << '\n';
  }
}

void cmd_gen(std::ostream& out, const Options& o, const std::string& seed,
             const std::string& count, const std::string& skip) {
  const Polynomial p = parse_poly_spec(o.poly);
  const Width w(o.width);
  const BigInt n = parse_count(count, "-n");
  if (n > std::numeric_limits<std::uint64_t>::max()) parse_error("-n is too large");
  Stream s(p, parse_residue(seed, w, "--seed"), w);
  if (const BigInt k = parse_count(skip, "--skip"); k != 0) s.seek(k);

  json values = json::array();
  for (auto i = static_cast<std::uint64_t>(n); i > 0; --i) {
    const Residue v = s.next();
    if (o.json) {
      values.push_back(json_word(v, o.hex));
    } else {
      out << format_word(v, o.hex) << '\n';
    }
  }
  if (o.json) out << json{{"result", values}}.dump() << '\n';
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return kExitParse;
    case ErrorCode::kBudgetExceeded:
      return kExitBudget;
    default:
      return kExitPrecondition;
  }
}

}  // namespace

BigInt parse_integer(std::string_view token) {
  std::string_view s = trim(token);
  const std::string original(token);
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  unsigned base = 10;
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    base = 16;
    s.remove_prefix(2);
  }
  if (s.empty()) parse_error("not a number: '" + original + "'");
  BigInt v = 0;
  for (char c : s) {
    const int d = digit_value(c);
    if (d >= static_cast<int>(base)) parse_error("not a number: '" + original + "'");
    v = v * base + d;
  }
  return negative ? BigInt(-v) : v;
}

Polynomial parse_poly_spec(std::string_view spec) {
  if (trim(spec).empty()) parse_error("empty polynomial");
  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = spec.find(',', pos);
    const std::string_view token =
        spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (trim(token).empty()) parse_error("empty coefficient in '" + std::string(spec) + "'");
    coeffs.push_back(parse_integer(token));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"One-stroke permutation polynomials over Z/2^w", "osp"};
  app.require_subcommand(1);

  Options o;
  bool explain = false;
  std::string x, y, from, to, k, seed, count = "0", skip = "0";
  std::optional<std::string> start;

  auto* classify_cmd = app.add_subcommand("classify", "classify by coefficient conditions");
  add_common(classify_cmd, o, false);
  classify_cmd->add_flag("--explain", explain, "show each one-stroke condition");

  auto* eval_cmd = app.add_subcommand("eval", "f(x) mod 2^w");
  add_common(eval_cmd, o, true);
  eval_cmd->add_option("-x", x, "argument")->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "cycle decomposition mod 2^w");
  add_common(orbit_cmd, o, true);
  orbit_cmd->add_option("--start", start, "only the cycle through this residue");

  auto* invert_cmd = app.add_subcommand("invert", "x with f(x) == y mod 2^w");
  add_common(invert_cmd, o, true);
  invert_cmd->add_option("-y", y, "image")->required();

  auto* dlog_cmd = app.add_subcommand("dlog", "j with f^j(from) == to mod 2^w");
  add_common(dlog_cmd, o, true);
  dlog_cmd->add_option("--from", from, "start residue")->required();
  dlog_cmd->add_option("--to", to, "target residue")->required();

  auto* jump_cmd = app.add_subcommand("jump", "f^k(from) mod 2^w");
  add_common(jump_cmd, o, true);
  jump_cmd->add_option("--from", from, "start residue")->required();
  jump_cmd->add_option("-k", k, "number of steps")->required();

  auto* gen_cmd = app.add_subcommand("gen", "full-period residue stream");
  add_common(gen_cmd, o, true);
  gen_cmd->add_option("--seed", seed, "initial state")->required();
  gen_cmd->add_option("-n", count, "number of outputs");
  gen_cmd->add_option("--skip", skip, "steps to seek before output");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*classify_cmd) {
      cmd_classify(out, o, explain);
    } else if (*eval_cmd) {
      const Width w(o.width);
      emit_value(out, o, eval_mod(parse_poly_spec(o.poly), parse_residue(x, w, "-x"), w));
    } else if (*orbit_cmd) {
      cmd_orbit(out, o, start);
    } else if (*invert_cmd) {
      const Width w(o.width);
      emit_value(out, o, invert(parse_poly_spec(o.poly), parse_residue(y, w, "-y"), w));
    } else if (*dlog_cmd) {
      const Width w(o.width);
      const Polynomial p = parse_poly_spec(o.poly);
      const Residue a = parse_residue(from, w, "--from");
      const Residue b = parse_residue(to, w, "--to");
      emit_value(out, o, dlog(Ladder(p, w), a, b));
    } else if (*jump_cmd) {
      const Width w(o.width);
      const Polynomial p = parse_poly_spec(o.poly);
      const Residue a = parse_residue(from, w, "--from");
      const BigInt steps = parse_count(k, "-k");
      emit_value(out, o, jump(Ladder(p, w), a, steps));
    } else if (*gen_cmd) {
      cmd_gen(out, o, seed, count, skip);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  }
  return kExitOk;
}

}  // namespace osp::cli

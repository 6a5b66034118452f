// Copyright 2026 The rsedkit Authors
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

#include <charconv>
#include <sstream>
#include <string>

#include "json.hpp"
#include "rsed/circuits.hpp"
#include "rsed/errors.hpp"

namespace rsed {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string &tok, std::size_t line, const char *what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected an integer ") + what + ", got '" + tok + "'");
  }
  return value;
}

void expect_args(const std::vector<std::string> &tok, std::size_t count, std::size_t line) {
  if (tok.size() != count + 1) {
    throw ParseError(line, "'" + tok[0] + "' takes " + std::to_string(count) + " argument(s), got " +
                               std::to_string(tok.size() - 1));
  }
}

}  // namespace

std::string serialize(const GateCircuit &c) {
  std::ostringstream out;
  out << "RSEDCIRC 1 n=" << c.n() << '\n';
  for (const auto &op : c.ops()) {
    switch (op.kind) {
      case OpKind::kGate:
        out << gate_mnemonic(op.gate.kind);
        for (int i = 0; i < gate_arity(op.gate.kind); ++i) out << ' ' << op.gate.q[i];
        break;
      case OpKind::kPerm: out << "PERM " << (op.direction == PermDirection::kForward ? "fwd " : "inv ") << op.ref; break;
      case OpKind::kPhaseF: out << "PHASE_F " << op.ref; break;
      case OpKind::kSubU: out << "SUBU " << op.ref; break;
      case OpKind::kRound: out << "ROUND " << op.ref << ' ' << op.round; break;
    }
    out << '\n';
  }
  return out.str();
}

GateCircuit parse_circuit(std::string_view text) {
  std::optional<GateCircuit> circuit;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokenize(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (!circuit) {
      if (tok.size() != 3 || tok[0] != "RSEDCIRC" || tok[1] != "1" || tok[2].rfind("n=", 0) != 0) {
        throw ParseError(line_no, "expected header 'RSEDCIRC 1 n=<n>'");
      }
      const int n = parse_int(tok[2].substr(2), line_no, "qubit count");
      try {
        circuit.emplace(n);
      } catch (const DomainError &e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }

    try {
      const std::string &op = tok[0];
      if (const auto kind = gate_from_mnemonic(op)) {
        const int arity = gate_arity(*kind);
        expect_args(tok, static_cast<std::size_t>(arity), line_no);
        Gate g{*kind};
        for (int i = 0; i < arity; ++i) g.q[i] = parse_int(tok[static_cast<std::size_t>(i) + 1], line_no, "qubit");
        circuit->add_gate(g);
      } else if (op == "PERM") {
        expect_args(tok, 2, line_no);
        if (tok[1] != "fwd" && tok[1] != "inv") throw ParseError(line_no, "PERM direction must be fwd or inv");
        circuit->add_perm(tok[1] == "fwd" ? PermDirection::kForward : PermDirection::kInverse, tok[2]);
      } else if (op == "PHASE_F") {
        expect_args(tok, 1, line_no);
        circuit->add_phase_f(tok[1]);
      } else if (op == "SUBU") {
        expect_args(tok, 1, line_no);
        circuit->add_sub_unitary(tok[1]);
      } else if (op == "ROUND") {
        expect_args(tok, 2, line_no);
        circuit->add_round(tok[1], parse_int(tok[2], line_no, "round"));
      } else {
        throw ParseError(line_no, "unknown mnemonic '" + op + "'");
      }
    } catch (const DomainError &e) {
      throw ParseError(line_no, e.what());
    }
    if (end == text.size()) break;
  }
  if (!circuit) throw ParseError(line_no, "missing 'RSEDCIRC 1 n=<n>' header");
  return std::move(*circuit);
}

namespace {

std::string perm_backend_name(PermutationBackend b) {
  switch (b) {
    case PermutationBackend::kIdentity: return "identity";
    case PermutationBackend::kExplicitTable: return "table";
    case PermutationBackend::kFeistel: return "feistel";
    case PermutationBackend::kAuto: return "auto";
  }
  return "auto";
}

PermutationBackend perm_backend_from(const std::string &s) {
  if (s == "identity") return PermutationBackend::kIdentity;
  if (s == "table") return PermutationBackend::kExplicitTable;
  if (s == "feistel") return PermutationBackend::kFeistel;
  if (s == "auto") return PermutationBackend::kAuto;
  throw ValidationError("manifest: unknown permutation backend '" + s + "'");
}

std::string sign_backend_name(SignBackend b) {
  switch (b) {
    case SignBackend::kZero: return "zero";
    case SignBackend::kExplicitTable: return "table";
    case SignBackend::kKeyedPrf: return "prf";
    case SignBackend::kAuto: return "auto";
  }
  return "auto";
}

SignBackend sign_backend_from(const std::string &s) {
  if (s == "zero") return SignBackend::kZero;
  if (s == "table") return SignBackend::kExplicitTable;
  if (s == "prf") return SignBackend::kKeyedPrf;
  if (s == "auto") return SignBackend::kAuto;
  throw ValidationError("manifest: unknown sign backend '" + s + "'");
}

}  // namespace

CircuitManifest make_manifest(const SystemShape &shape, const USpec &u, std::uint64_t perm_seed,
                              std::uint64_t sign_seed, const SynthesisOptions &options, const GateCircuit &c) {
  CircuitManifest m;
  m.n = shape.n();
  m.k = shape.k();
  m.u_spec = u.name();
  m.u_seed = u.seed;
  m.perm_seed = perm_seed;
  m.sign_seed = sign_seed;
  m.perm_backend = perm_backend_name(options.perm_backend);
  m.sign_backend = sign_backend_name(options.sign_backend);
  m.feistel_rounds = options.feistel_rounds;
  m.gate_counts = c.gate_counts();
  return m;
}

std::string manifest_to_json(const CircuitManifest &m) {
  nlohmann::json j;
  j["format"] = "rsed-circuit-manifest";
  j["version"] = 1;
  j["subsystem"] = {{"n", m.n}, {"k", m.k}, {"u_spec", m.u_spec}, {"u_seed", m.u_seed}};
  j["seeds"] = {{"perm", m.perm_seed}, {"sign", m.sign_seed}};
  j["backends"] = {{"perm", m.perm_backend}, {"sign", m.sign_backend}, {"feistel_rounds", m.feistel_rounds}};
  j["gate_counts"] = m.gate_counts;
  return j.dump(2);
}

CircuitManifest manifest_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    CircuitManifest m;
    m.n = j.at("subsystem").at("n").get<int>();
    m.k = j.at("subsystem").at("k").get<int>();
    m.u_spec = j.at("subsystem").at("u_spec").get<std::string>();
    m.u_seed = j.at("subsystem").at("u_seed").get<std::uint64_t>();
    m.perm_seed = j.at("seeds").at("perm").get<std::uint64_t>();
    m.sign_seed = j.at("seeds").at("sign").get<std::uint64_t>();
    m.perm_backend = j.at("backends").at("perm").get<std::string>();
    m.sign_backend = j.at("backends").at("sign").get<std::string>();
    m.feistel_rounds = j.at("backends").at("feistel_rounds").get<int>();
    m.gate_counts = j.at("gate_counts").get<std::map<std::string, int>>();
    return m;
  } catch (const nlohmann::json::exception &e) {
    throw ValidationError(std::string("manifest: ") + e.what());
  }
}

SynthesizedCircuit regenerate(const CircuitManifest &m) {
  USpec u;
  if (m.u_spec == "identity") u = USpec::identity();
  else if (m.u_spec == "hadamard") u = USpec::hadamard();
  else if (m.u_spec == "random_sign_hadamard") u = USpec::random_sign_hadamard(m.u_seed);
  else throw ValidationError("manifest: u_spec '" + m.u_spec + "' cannot be regenerated");
  SynthesisOptions options;
  options.perm_backend = perm_backend_from(m.perm_backend);
  options.sign_backend = sign_backend_from(m.sign_backend);
  options.feistel_rounds = m.feistel_rounds;
  return synthesize_rsed_circuit(SystemShape(m.n, m.k), u, m.perm_seed, m.sign_seed, options);
}

}  // namespace rsed

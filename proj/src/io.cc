// Copyright 2026 The qegraph Authors
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

#include "qegraph/io.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace qegraph {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (const std::size_t hash = line.find('#'); hash != line.npos) {
      line = line.substr(0, hash);
    }
    Line out{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
        ++j;
      if (j > i) out.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!out.tokens.empty()) lines.push_back(std::move(out));
  }
  return lines;
}

template <typename Int>
Int parse_int(std::string_view token, int line) {
  Int value{};
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::pair<int, int>> parse_pairs(const std::vector<Line>& lines,
                                             std::size_t first) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = first; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 2) {
      throw ParseError("line " + std::to_string(l.number) +
                       ": expected two vertex indices");
    }
    pairs.emplace_back(parse_int<int>(l.tokens[0], l.number),
                       parse_int<int>(l.tokens[1], l.number));
  }
  return pairs;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view uri) {
  std::vector<int> out;
  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view part = text.substr(0, comma);
    try {
      out.push_back(parse_int<int>(part, 1));
    } catch (const ParseError&) {
      throw ParseError("malformed graph URI '" + std::string(uri) + "'");
    }
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

nlohmann::json rationals_to_json(const std::vector<Rational>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& r : v) out.push_back(to_string(r));
  return out;
}

nlohmann::json edges_to_json(const std::vector<DirectedEdge>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (const DirectedEdge& e : edges) out.push_back({e.tail, e.head});
  return out;
}

std::vector<DirectedEdge> edges_from_json(const nlohmann::json& j) {
  std::vector<DirectedEdge> out;
  for (const auto& e : j) out.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return out;
}

Rational exact_form(std::span<const Rational> m, const std::vector<Rational>& v) {
  const std::size_t n = v.size();
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) row += m[i * n + j] * v[j];
    total += v[i] * row;
  }
  return total;
}

std::vector<Rational> exact_certificate_from_json(const nlohmann::json& ev) {
  std::vector<Rational> v;
  if (ev.contains("exact_certificate")) {
    for (const auto& s : ev["exact_certificate"]) {
      v.push_back(parse_rational(s.get<std::string>()));
    }
  }
  return v;
}

QeDecision decision_of(bool qe) { return qe ? QeDecision::kQe : QeDecision::kNonQe; }

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError("edge list is empty");
  if (lines[0].tokens.size() != 1) {
    throw ParseError("line " + std::to_string(lines[0].number) +
                     ": expected the vertex count alone");
  }
  const int n = parse_int<int>(lines[0].tokens[0], lines[0].number);
  try {
    return Graph(n, parse_pairs(lines, 1));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph read_edge_list(const std::filesystem::path& path) {
  return parse_edge_list(slurp(path));
}

LoadedGraph load_graph(std::string_view uri) {
  auto starts = [&](std::string_view prefix) { return uri.starts_with(prefix); };
  try {
    if (starts("theta:")) {
      const auto v = parse_int_list(uri.substr(6), uri);
      if (v.size() != 3) {
        throw ParseError("theta URI needs three lengths: '" + std::string(uri) + "'");
      }
      const ThetaSpec spec{v[0], v[1], v[2]};
      return {make_theta(spec), spec, std::string(uri)};
    }
    if (starts("path:") || starts("cycle:")) {
      const bool path = starts("path:");
      const auto v = parse_int_list(uri.substr(path ? 5 : 6), uri);
      if (v.size() != 1) throw ParseError("malformed graph URI '" + std::string(uri) + "'");
      return {path ? make_path(v[0]) : make_cycle(v[0]), std::nullopt,
              std::string(uri)};
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return {read_edge_list(std::filesystem::path(uri)), std::nullopt,
          std::string(uri)};
}

std::vector<DirectedEdge> parse_tree_edges(std::string_view text) {
  std::vector<DirectedEdge> out;
  for (auto [a, b] : parse_pairs(tokenize(text), 0)) out.push_back({a, b});
  return out;
}

OrientedTree read_tree(const Graph& g, const std::filesystem::path& path) {
  try {
    return oriented_tree_from_edges(g, parse_tree_edges(slurp(path)));
  } catch (const std::invalid_argument& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

RationalMatrix parse_matrix(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError("matrix is empty");
  if (lines[0].tokens.size() != 1) {
    throw ParseError("line " + std::to_string(lines[0].number) +
                     ": expected the dimension alone");
  }
  RationalMatrix m;
  m.n = parse_int<int>(lines[0].tokens[0], lines[0].number);
  if (m.n < 0) throw ParseError("negative matrix dimension");
  if (static_cast<int>(lines.size()) - 1 != m.n) {
    throw ParseError("expected " + std::to_string(m.n) + " rows, got " +
                     std::to_string(lines.size() - 1));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (static_cast<int>(lines[i].tokens.size()) != m.n) {
      throw ParseError("line " + std::to_string(lines[i].number) + ": expected " +
                       std::to_string(m.n) + " entries");
    }
    for (std::string_view tok : lines[i].tokens) {
      try {
        m.entries.push_back(parse_rational(tok));
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lines[i].number) +
                         ": bad entry '" + std::string(tok) + "'");
      }
    }
  }
  return m;
}

RationalMatrix read_matrix(const std::filesystem::path& path) {
  return parse_matrix(slurp(path));
}

std::vector<long long> read_integer_vector(const std::filesystem::path& path) {
  const std::string text = slurp(path);
  std::vector<long long> out;
  for (const Line& l : tokenize(text)) {
    for (std::string_view tok : l.tokens) {
      out.push_back(parse_int<long long>(tok, l.number));
    }
  }
  return out;
}

void write_matrix(std::ostream& out, const DistanceMatrix& d) {
  out << d.size() << '\n';
  for (int i = 0; i < d.size(); ++i) {
    for (int j = 0; j < d.size(); ++j) out << (j ? " " : "") << d(i, j);
    out << '\n';
  }
}

void write_kernel(std::ostream& out, const KernelMatrix& k, bool exact) {
  out << k.m << '\n';
  for (int i = 0; i < k.m; ++i) {
    for (int j = 0; j < k.m; ++j) {
      if (j) out << ' ';
      if (exact) {
        out << to_string(k.exact(i, j));
      } else {
        out << k(i, j);
      }
    }
    out << '\n';
  }
}

void write_matrix(std::ostream& out, const SymMatrix& m) {
  out << m.size() << '\n' << std::setprecision(12);
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

nlohmann::json verdict_to_json(const std::string& graph_name,
                               const QeVerdict& verdict,
                               std::optional<double> qec_value) {
  nlohmann::json j;
  j["graph"] = graph_name;
  j["method"] = std::string(to_string(verdict.method));
  j["decision"] = std::string(to_string(verdict.decision));
  j["qec"] = qec_value ? nlohmann::json(*qec_value) : nlohmann::json(nullptr);
  nlohmann::json ev = nlohmann::json::object();
  if (!verdict.rule.empty()) ev["rule"] = verdict.rule;
  if (verdict.cnd) {
    const CndVerdict& c = *verdict.cnd;
    ev["mode"] = std::string(to_string(c.mode));
    ev["escalated"] = c.escalated;
    ev["lambda_max"] = c.lambda_max;
    if (!c.cnd) {
      ev["certificate"] = c.certificate;
      ev["certificate_value"] = c.certificate_value;
      if (!c.exact_certificate.empty()) {
        ev["exact_certificate"] = rationals_to_json(c.exact_certificate);
      }
    }
  }
  if (verdict.psd) {
    const PsdVerdict& p = *verdict.psd;
    ev["mode"] = std::string(to_string(p.mode));
    ev["escalated"] = p.escalated;
    ev["lambda_min"] = p.lambda_min;
    ev["lambda_max"] = p.lambda_max;
    if (!p.psd) {
      ev["certificate"] = p.certificate;
      ev["certificate_value"] = p.certificate_value;
      if (!p.exact_certificate.empty()) {
        ev["exact_certificate"] = rationals_to_json(p.exact_certificate);
      }
    }
  }
  if (verdict.tree) {
    ev["tree"] = edges_to_json(verdict.tree->tree_edges);
    ev["orientation"] = edges_to_json(verdict.tree->host_orientation);
    ev["root"] = verdict.tree->root;
  }
  j["evidence"] = ev;
  return j;
}

QeDecision reverify_verdict_json(const nlohmann::json& verdict, const Graph& g,
                                 const Tolerances& tol) {
  const Method method = parse_method(verdict.at("method").get<std::string>());
  const std::string decision = verdict.at("decision").get<std::string>();
  const nlohmann::json& ev = verdict.at("evidence");
  const DistanceMatrix d = distance_matrix(g);
  const bool claims_qe = decision == "QE";
  if (!claims_qe && decision != "NonQE") {
    throw ParseError("unknown decision '" + decision + "'");
  }

  if (method == Method::kClosedForm) {
    return decision_of(is_cnd(d, Mode::kExact, tol).cnd);
  }

  // Matrix the certificate refers to: D for schoenberg, K for winkler.
  std::vector<Rational> m;
  int n = 0;
  if (method == Method::kSchoenberg) {
    n = d.size();
    m.assign(d.entries().begin(), d.entries().end());
  } else {
    OrientedTree t;
    t.num_vertices = g.num_vertices();
    t.tree_edges = edges_from_json(ev.at("tree"));
    t.host_orientation = edges_from_json(ev.at("orientation"));
    t.root = ev.value("root", 0);
    t.validate(g);
    const KernelMatrix k = winkler_kernel(d, t);
    n = k.m;
    for (int v : k.twice) m.push_back(Rational(v, 2));
  }

  if (claims_qe) {
    if (method == Method::kSchoenberg) {
      return decision_of(is_cnd(d, Mode::kExact, tol).cnd);
    }
    return decision_of(is_psd_exact(n, m).psd);
  }

  std::vector<Rational> v = exact_certificate_from_json(ev);
  if (v.empty()) {
    // Float certificate: doubles convert to rationals exactly.
    for (double x : ev.at("certificate").get<std::vector<double>>()) {
      v.push_back(Rational(x));
    }
  }
  if (static_cast<int>(v.size()) != n) {
    throw ParseError("certificate has " + std::to_string(v.size()) +
                     " entries, expected " + std::to_string(n));
  }
  const Rational value = exact_form(m, v);
  if (method == Method::kSchoenberg) {
    double sum = 0.0;
    double norm = 0.0;
    for (const Rational& x : v) {
      sum += x.convert_to<double>();
      norm += std::abs(x.convert_to<double>());
    }
    if (std::abs(sum) > 1e-8 * std::max(1.0, norm) || value <= 0) {
      throw ParseError("certificate does not re-verify");
    }
  } else if (value >= 0) {
    throw ParseError("certificate does not re-verify");
  }
  return QeDecision::kNonQe;
}

void write_sweep_csv(std::ostream& out, const SweepReport& report) {
  out << "alpha,beta,gamma,n,closed_form,schoenberg,winkler,qec\n"
      << std::setprecision(12);
  for (const SweepRow& r : report.rows) {
    out << r.spec.alpha << ',' << r.spec.beta << ',' << r.spec.gamma << ','
        << r.n << ',' << to_string(r.closed_form) << ','
        << to_string(r.schoenberg) << ',' << to_string(r.winkler) << ','
        << r.qec << '\n';
  }
}

nlohmann::json sweep_to_json(const SweepReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRow& r : report.rows) {
    rows.push_back({{"alpha", r.spec.alpha},
                    {"beta", r.spec.beta},
                    {"gamma", r.spec.gamma},
                    {"n", r.n},
                    {"closed_form", std::string(to_string(r.closed_form))},
                    {"schoenberg", std::string(to_string(r.schoenberg))},
                    {"winkler", std::string(to_string(r.winkler))},
                    {"qec", r.qec},
                    {"agree", r.agree()}});
  }
  return {{"rows", rows},
          {"disagreements", report.disagreements},
          {"qe_count", report.qe_count},
          {"non_qe_count", report.non_qe_count}};
}

}  // namespace qegraph

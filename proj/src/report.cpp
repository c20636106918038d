#include "qtoledo/report.hpp"

#include <sstream>

namespace qtoledo {

Json to_json(const Vec &v) {
  Json out = Json::array();
  for (const auto &x : v) out.push_back(x.str());
  return out;
}

Json to_json(const PullbackReport &r) {
  return Json{{"schema_version", kSchemaVersion},
              {"embedding", r.embedding},
              {"n", r.n},
              {"omega_on_basis", r.omega_value.str()},
              {"omega0_squared_on_basis", r.omega0sq_value.str()},
              {"ratio_to_OmegaB2", r.ratio.str()},
              {"convention", r.convention}};
}

Json to_json(const std::string &check, const MaskVerdict &v) {
  Json viol = Json::array();
  for (const auto &x : v.violations)
    viol.push_back(Json{{"position", position_name(x.row, x.col)}, {"value", x.value.str()}});
  return Json{{"check", check},
              {"input", Json{{"a", to_json(v.input)}}},
              {"verdict", Json{{"member", v.member}}},
              {"violations", std::move(viol)}};
}

Json to_json(const HorizontalityReport &r, const Vec &v0, const Vec &w) {
  Json res = Json::array();
  for (const auto &x : r.line_sq_residues) res.push_back(Json{{"curve", "L^2"}, {"residue", to_json(x)}});
  for (const auto &x : r.sym_perp_residues) res.push_back(Json{{"curve", "S^2 L^perp"}, {"residue", to_json(x)}});
  return Json{{"check", "horizontality"},
              {"input", Json{{"v0", to_json(v0)}, {"w", to_json(w)}}},
              {"verdict", Json{{"horizontal", r.horizontal}}},
              {"violations", Json::array()},
              {"residues", std::move(res)}};
}

Json to_json(const LinearityTable &t) {
  Json cols = Json::array();
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    Json comps = Json::array();
    for (auto l : t.components[c]) comps.push_back(to_string(l));
    cols.push_back(Json{{"column", c + 1}, {"class", to_string(t.columns[c])}, {"components", std::move(comps)}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"embedding", t.embedding},
              {"columns", std::move(cols)},
              {"twistor_condition", t.twistor_condition}};
}

namespace {

Json subspace_json(const Subspace &s) {
  Json basis = Json::array();
  for (const auto &v : s.basis()) basis.push_back(to_json(v));
  return Json{{"dim", s.dim()}, {"definiteness", to_string(s.definiteness(kSigW))}, {"basis", std::move(basis)}};
}

} // namespace

Json to_json(const PeriodTriple &t) {
  return Json{{"schema_version", kSchemaVersion},
              {"S2_Lperp", subspace_json(t.sym_perp)},
              {"L2", subspace_json(t.line_sq)},
              {"L_Lperp", subspace_json(t.mixed)}};
}

std::string render_text(const PullbackReport &r) {
  std::ostringstream os;
  os << "# convention: " << r.convention << "\n"
     << "embedding: " << r.embedding << "\n"
     << "n: " << r.n << "\n"
     << "omega on basis: " << r.omega_value << "\n"
     << "Omega0^2 on basis: " << r.omega0sq_value << "\n"
     << "OmegaB^2 on basis: " << omega_b_squared_on_basis(r.n) << "\n"
     << "ratio: " << r.ratio << "\n";
  return os.str();
}

std::string render_text(const LinearityTable &t) {
  std::ostringstream os;
  os << "embedding: " << t.embedding << "\n";
  os << "row  column1           column2\n";
  const std::size_t rows = t.components.empty() ? 0 : t.components[0].size();
  for (std::size_t r = 0; r < rows; ++r) {
    os << r + 1 << (r + 1 < 10 ? "    " : "   ");
    for (std::size_t c = 0; c < t.components.size(); ++c) {
      std::string cell = to_string(t.components[c][r]);
      cell.resize(18, ' ');
      os << cell;
    }
    os << "\n";
  }
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    os << "column " << c + 1 << ": " << to_string(t.columns[c]) << "\n";
  os << "twistor lift condition (U1 conjugate-linear, U2 linear): " << (t.twistor_condition ? "satisfied" : "violated")
     << "\n";
  return os.str();
}

std::string render_text(const PeriodTriple &t) {
  std::ostringstream os;
  const auto line = [&](const char *name, const Subspace &s) {
    os << name << ": dim " << s.dim() << ", " << to_string(s.definiteness(kSigW)) << ", " << to_string(s) << "\n";
  };
  line("S^2 L^perp", t.sym_perp);
  line("L^2", t.line_sq);
  line("L.L^perp", t.mixed);
  return os.str();
}

Vec parse_vector(const std::string &text) {
  std::string body = text;
  const auto first = body.find_first_not_of(" \t");
  const auto last = body.find_last_not_of(" \t");
  if (first == std::string::npos) throw ParseError("empty vector");
  body = body.substr(first, last - first + 1);
  if (body.front() == '(' || body.front() == '[') {
    if (body.size() < 2 || (body.back() != ')' && body.back() != ']')) throw ParseError("unbalanced brackets in vector");
    body = body.substr(1, body.size() - 2);
  }
  Vec out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = body.find(',', start);
    out.push_back(FieldElem::parse(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

} // namespace qtoledo

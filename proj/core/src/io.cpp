#include "monoidlab/io.hpp"

#include <sstream>

#include <json.hpp>

namespace monoidlab {

namespace {

using nlohmann::json;

json set_json(const std::vector<int>& s) { return json(s); }

std::string set_str(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

std::string quiver_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (const auto& v : q.vertices) os << "  " << v << ";\n";
  for (const auto& a : q.arrows)
    for (int m = 0; m < a.mult; ++m)
      os << "  " << q.vertices[a.src] << " -> " << q.vertices[a.dst] << ";\n";
  os << "}\n";
  return os.str();
}

std::string quiver_json(const Quiver& q) {
  json j;
  j["vertices"] = q.vertices;
  j["arrows"] = json::array();
  for (const auto& a : q.arrows)
    j["arrows"].push_back({{"src", q.vertices[a.src]},
                           {"dst", q.vertices[a.dst]},
                           {"mult", a.mult}});
  j["rad_square_zero"] = q.relations_all_length2_zero;
  return j.dump(2) + "\n";
}

std::string quiver_text(const Quiver& q) {
  std::ostringstream os;
  os << q.vertices.size() << " vertices, " << q.arrows.size() << " arrows";
  const auto comps = quiver_components(q);
  os << ", " << comps.size() << " component" << (comps.size() == 1 ? "" : "s") << "\n";
  for (const auto& a : q.arrows) {
    os << "  " << q.vertices[a.src] << " -> " << q.vertices[a.dst];
    if (a.mult != 1) os << "  (x" << a.mult << ")";
    os << "\n";
  }
  os << "rad^2 = 0: " << (q.relations_all_length2_zero ? "yes" : "no") << "\n";
  return os.str();
}

std::string eggbox_text(const EggboxView& v) {
  std::ostringstream os;
  os << "J_" << v.k << " of " << to_string(v.kind) << "_" << v.n << ": "
     << v.r_count() << " R-classes x " << v.l_count() << " L-classes, "
     << v.ofd_row_count << " rows with 1 in the image\n";
  // header
  std::size_t col_width = 6;
  for (const auto& x : v.col_kernels)
    col_width = std::max(col_width, set_str(x).size() + 1);
  std::size_t row_width = 0;
  for (const auto& y : v.row_images)
    row_width = std::max(row_width, set_str(y).size() + 1);
  os << std::string(row_width, ' ');
  for (const auto& x : v.col_kernels) {
    const std::string s = set_str(x);
    os << s << std::string(col_width - s.size(), ' ');
  }
  os << "\n";
  for (int r = 0; r < v.r_count(); ++r) {
    const std::string rs = set_str(v.row_images[r]);
    os << rs << std::string(row_width - rs.size(), ' ');
    for (int c = 0; c < v.l_count(); ++c) {
      std::string cell = "[" + std::to_string(v.h_size[r][c]) +
                         (v.has_idempotent[r][c] ? "*" : "") + "]";
      os << cell << std::string(col_width - cell.size(), ' ');
    }
    os << "\n";
  }
  return os.str();
}

std::string eggbox_json(const EggboxView& v) {
  json j;
  j["monoid"] = to_string(v.kind);
  j["n"] = v.n;
  j["k"] = v.k;
  j["r_classes"] = v.r_count();
  j["l_classes"] = v.l_count();
  j["ofd_r_classes"] = v.ofd_row_count;
  j["row_images"] = json::array();
  for (const auto& y : v.row_images) j["row_images"].push_back(set_json(y));
  j["col_kernels"] = json::array();
  for (const auto& x : v.col_kernels) j["col_kernels"].push_back(set_json(x));
  j["h_sizes"] = v.h_size;
  j["idempotents"] = json::array();  // bitmask rows, one int list per R-class
  for (int r = 0; r < v.r_count(); ++r) {
    std::vector<int> row;
    for (int c = 0; c < v.l_count(); ++c) row.push_back(v.has_idempotent[r][c] ? 1 : 0);
    j["idempotents"].push_back(row);
  }
  return j.dump(2) + "\n";
}

namespace {

std::string entry_str(std::int8_t e) {
  if (e == 0) return "0";
  return e == 1 ? "1" : "g";
}

}  // namespace

std::string sandwich_text(const SandwichMatrix& p, const SandwichInvertibility& inv) {
  std::ostringstream os;
  os << "sandwich matrix of J_" << p.k << " (" << to_string(p.kind) << "_" << p.n
     << "), " << p.rows() << " x " << p.cols() << " over "
     << (p.group_z2 ? "Z_2" : "trivial group") << " u {0}\n";
  std::size_t w = 4;
  for (const auto& y : p.col_images) w = std::max(w, set_str(y).size() + 1);
  std::size_t rw = 0;
  for (const auto& x : p.row_kernels) rw = std::max(rw, set_str(x).size() + 1);
  os << std::string(rw, ' ');
  for (const auto& y : p.col_images) {
    const std::string s = set_str(y);
    os << s << std::string(w - s.size(), ' ');
  }
  os << "\n";
  for (std::size_t r = 0; r < p.rows(); ++r) {
    const std::string rs = set_str(p.row_kernels[r]);
    os << rs << std::string(rw - rs.size(), ' ');
    for (std::size_t c = 0; c < p.cols(); ++c) {
      const std::string cell = entry_str(p.at(r, c));
      os << cell << std::string(w - cell.size(), ' ');
    }
    os << "\n";
  }
  os << "right invertible over kG_J: " << (inv.right_invertible ? "yes" : "no");
  if (inv.right_invertible)
    os << " (certificate " << (inv.certificate_verified ? "verified" : "FAILED") << ")";
  os << "\n";
  return os.str();
}

std::string sandwich_json(const SandwichMatrix& p, const SandwichInvertibility& inv,
                          std::uint32_t prime) {
  json j;
  j["monoid"] = to_string(p.kind);
  j["n"] = p.n;
  j["k"] = p.k;
  j["group"] = p.group_z2 ? "Z2" : "trivial";
  j["prime"] = prime;
  j["rows"] = json::array();
  for (const auto& x : p.row_kernels) j["rows"].push_back(set_json(x));
  j["cols"] = json::array();
  for (const auto& y : p.col_images) j["cols"].push_back(set_json(y));
  j["entries"] = json::array();
  for (std::size_t r = 0; r < p.rows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < p.cols(); ++c) row.push_back(entry_str(p.at(r, c)));
    j["entries"].push_back(row);
  }
  j["right_invertible"] = inv.right_invertible;
  j["certificate_verified"] = inv.certificate_verified;
  return j.dump(2) + "\n";
}

std::string homdims_text(const HomDimTable& t) {
  std::ostringstream os;
  os << "Hom dimensions for " << to_string(t.kind) << "_" << t.n << " (p = "
     << t.prime << ")\n";
  for (const auto& e : t.pairs) {
    if (e.dim == 0 && e.h_tilde_size == 0) continue;
    os << "  Hom(kL_" << set_str(e.Y) << ", kL_" << set_str(e.X) << ") = " << e.dim
       << "  |H~| = " << e.h_tilde_size << (e.dim == e.h_tilde_size ? "" : "  MISMATCH")
       << "\n";
  }
  os << (t.all_match ? "all dimensions match |H~|" : "MISMATCH FOUND") << "\n";
  return os.str();
}

std::string homdims_json(const HomDimTable& t) {
  json j;
  j["n"] = t.n;
  j["monoid"] = to_string(t.kind);
  j["pairs"] = json::array();
  for (const auto& e : t.pairs)
    j["pairs"].push_back({{"Y", set_json(e.Y)},
                          {"X", set_json(e.X)},
                          {"dim", e.dim},
                          {"h_tilde", e.h_tilde_size}});
  return j.dump(2) + "\n";
}

std::string relations_text(const RelationReport& r) {
  std::ostringstream os;
  os << "relation suite for " << (r.kind == SkeletonKind::An ? "od" : "cod") << "_"
     << r.n << " (p = " << r.prime << ")\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << " ("
       << c.instances << " instances)";
    if (!c.pass) os << "  first failure: " << c.first_failure;
    os << "\n";
  }
  os << (r.ok ? "all identities hold" : "IDENTITY FAILED") << "\n";
  return os.str();
}

std::string relations_json(const RelationReport& r) {
  json j;
  j["monoid"] = r.kind == SkeletonKind::An ? "od" : "cod";
  j["n"] = r.n;
  j["prime"] = r.prime;
  j["identities"] = json::array();
  for (const auto& c : r.checks)
    j["identities"].push_back({{"name", c.name},
                               {"instances", c.instances},
                               {"pass", c.pass}});
  j["ok"] = r.ok;
  return j.dump(2) + "\n";
}

std::string decomposition_text(const DecompositionReport& r) {
  std::ostringstream os;
  os << "cod decomposition (n = " << r.n << ", p = " << r.prime << "): dim k0Dn = "
     << r.dim_k0dn << ", dim CAn = " << r.dim_can << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.pass && !c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  os << (r.ok ? "kCOD_n ~ kOp_n x kOp_n certified at this scale"
              : "DECOMPOSITION CHECK FAILED")
     << "\n";
  return os.str();
}

std::string decomposition_json(const DecompositionReport& r) {
  json j;
  j["n"] = r.n;
  j["prime"] = r.prime;
  j["dim_k0dn"] = r.dim_k0dn;
  j["dim_can"] = r.dim_can;
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    json jc = {{"name", c.name}, {"pass", c.pass}};
    jc["counterexample"] = c.pass || c.detail.empty() ? json(nullptr) : json(c.detail);
    j["checks"].push_back(jc);
  }
  j["ok"] = r.ok;
  return j.dump(2) + "\n";
}

std::string straightline_text(const StraightlineReport& r) {
  std::ostringstream os;
  os << "straightline checks (n = " << r.n << ", p = " << r.prime << ")\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  return os.str();
}

std::string checks_text(const std::vector<NamedCheck>& checks) {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << "[" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  return os.str();
}

std::string checks_json(const std::string& command, MonoidKind kind, int n,
                        std::uint32_t prime, const std::vector<NamedCheck>& checks) {
  json j;
  j["command"] = command;
  j["monoid"] = to_string(kind);
  j["n"] = n;
  j["prime"] = prime;
  j["checks"] = json::array();
  bool ok = true;
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}});
    ok = ok && c.pass;
  }
  j["ok"] = ok;
  return j.dump(2) + "\n";
}

}  // namespace monoidlab

#include "dualco/parse.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace dualco {

namespace {

[[noreturn]] void err(std::size_t line, const std::string& msg) {
  throw input_error("line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

// Statements with their one-based source lines.
std::vector<std::pair<std::size_t, std::string>> statements_of(const std::string& text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t line = 1;
  std::string cur;
  auto flush = [&]() {
    std::string s = trim(cur);
    cur.clear();
    if (s.empty() || s[0] == '#') return;
    out.emplace_back(line, s);
  };
  for (char ch : text) {
    if (ch == '\n') {
      flush();
      ++line;
    } else if (ch == ';') {
      flush();
    } else {
      cur += ch;
    }
  }
  flush();
  return out;
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Linear combination scanner.  `resolve` turns one path word (labels
// between '*'s) into an index-path; the caller interprets it.
struct Combo {
  std::vector<std::pair<Scalar, std::vector<std::string>>> terms;
};

Combo scan_combo(std::size_t line, const Field& F, const std::string& src) {
  Combo out;
  std::size_t i = 0;
  auto skip = [&]() {
    while (i < src.size() && (src[i] == ' ' || src[i] == '\t')) ++i;
  };
  skip();
  if (i < src.size() && src[i] == '0' && (i + 1 == src.size() || !ident_char(src[i + 1]))) {
    // A bare zero stands for the empty combination.
    ++i;
    skip();
    if (i != src.size()) err(line, "unexpected input after 0");
    return out;
  }
  bool first = true;
  while (true) {
    skip();
    if (i == src.size()) {
      if (first) err(line, "expected a linear combination");
      break;
    }
    Scalar sign(1);
    if (src[i] == '+' || src[i] == '-') {
      if (src[i] == '-') sign = Scalar(-1);
      ++i;
      skip();
    } else if (!first) {
      err(line, std::string("expected '+' or '-' before '") + src[i] + "'");
    }
    first = false;
    // Optional coefficient: integer or integer/integer.
    Scalar coef = F.one();
    if (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
      long num = 0;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
        num = num * 10 + (src[i++] - '0');
      long den = 1;
      if (i < src.size() && src[i] == '/') {
        ++i;
        if (i == src.size() || !std::isdigit(static_cast<unsigned char>(src[i])))
          err(line, "expected a denominator after '/'");
        den = 0;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
          den = den * 10 + (src[i++] - '0');
      }
      coef = F.from_ratio(num, den);
      skip();
      if (i < src.size() && src[i] == '*') {
        ++i;
        skip();
      }
    }
    // Path word: identifiers separated by '*'.
    std::vector<std::string> word;
    while (true) {
      if (i == src.size() || !(std::isalpha(static_cast<unsigned char>(src[i])) || src[i] == '_'))
        err(line, "expected a path word");
      std::size_t b = i;
      while (i < src.size() && ident_char(src[i])) ++i;
      word.push_back(src.substr(b, i - b));
      skip();
      if (i < src.size() && src[i] == '*') {
        ++i;
        skip();
        continue;
      }
      break;
    }
    out.terms.emplace_back(F.mul(sign, coef), word);
  }
  return out;
}

}  // namespace

ParsedInput parse_input(const std::string& text,
                        const std::optional<std::string>& field_override) {
  std::optional<Field> field;
  Quiver quiver;
  std::vector<std::pair<std::size_t, Relation>> relations;
  std::optional<std::size_t> truncate;
  bool saw_quiver_stmt = false;

  std::optional<std::size_t> alg_dim;
  std::vector<std::vector<Vec>> table;
  std::optional<Vec> unit;
  std::vector<std::string> alg_names;

  auto parse_field = [](std::size_t line, const std::string& tok) -> Field {
    if (tok == "Q") return Field::rationals();
    if (tok.size() >= 2 && tok[0] == 'F') {
      for (std::size_t k = 1; k < tok.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(tok[k])))
          err(line, "unknown field '" + tok + "'");
      try {
        return Field::prime(std::stoul(tok.substr(1)));
      } catch (const input_error& e) {
        err(line, e.what());
      }
    }
    err(line, "unknown field '" + tok + "' (expected Q or F<p>)");
  };
  auto need_field = [&](std::size_t line) -> const Field& {
    if (!field) err(line, "a field statement must come first");
    return *field;
  };
  auto vertex_index = [&](std::size_t line, const std::string& name) -> std::size_t {
    for (std::size_t v = 0; v < quiver.vertices.size(); ++v)
      if (quiver.vertices[v] == name) return v;
    err(line, "unknown vertex '" + name + "'");
  };
  auto basis_index = [&](std::size_t line, const std::string& name) -> std::size_t {
    for (std::size_t k = 0; k < alg_names.size(); ++k)
      if (alg_names[k] == name) return k;
    err(line, "unknown basis element '" + name + "'");
  };
  auto combo_to_vec = [&](std::size_t line, const std::string& src) -> Vec {
    const Field& F = need_field(line);
    Vec v(*alg_dim, Scalar(0));
    for (auto& [c, word] : scan_combo(line, F, src).terms) {
      if (word.size() != 1) err(line, "structure-constant combos take single basis names");
      std::size_t k = basis_index(line, word[0]);
      v[k] = F.add(v[k], c);
    }
    return v;
  };

  // The override must win before any coefficient is reduced.
  if (field_override) {
    try {
      field = parse_field(0, *field_override);
    } catch (const input_error& e) {
      std::string m = e.what();
      const std::string pre = "line 0: ";
      if (m.rfind(pre, 0) == 0) m = m.substr(pre.size());
      throw input_error("field override: " + m);
    }
  }

  for (auto& [line, stmt] : statements_of(text)) {
    std::vector<std::string> toks = tokens_of(stmt);
    const std::string& kw = toks[0];

    if (kw == "field") {
      if (toks.size() != 2) err(line, "usage: field Q|F<p>");
      Field f = parse_field(line, toks[1]);
      if (!field_override) field = f;
    } else if (kw == "vertices") {
      if (toks.size() < 2) err(line, "at least one vertex label required");
      saw_quiver_stmt = true;
      quiver.vertices.assign(toks.begin() + 1, toks.end());
    } else if (kw == "arrows") {
      saw_quiver_stmt = true;
      std::string rest = trim(stmt.substr(kw.size()));
      std::size_t colon = rest.find(':');
      if (colon == std::string::npos) err(line, "usage: arrows <label>: <src>-><dst>");
      std::string label = trim(rest.substr(0, colon));
      std::string ends = rest.substr(colon + 1);
      std::size_t ar = ends.find("->");
      if (label.empty() || ar == std::string::npos)
        err(line, "usage: arrows <label>: <src>-><dst>");
      std::string s = trim(ends.substr(0, ar)), d = trim(ends.substr(ar + 2));
      if (s.empty() || d.empty()) err(line, "usage: arrows <label>: <src>-><dst>");
      quiver.arrows.push_back({label, vertex_index(line, s), vertex_index(line, d)});
    } else if (kw == "relations") {
      saw_quiver_stmt = true;
      const Field& F = need_field(line);
      Combo combo = scan_combo(line, F, trim(stmt.substr(kw.size())));
      Relation rel;
      for (auto& [c, word] : combo.terms) {
        Path p;
        p.arrows.reserve(word.size());
        for (const std::string& lbl : word) {
          std::size_t j = quiver.arrows.size();
          for (std::size_t k = 0; k < quiver.arrows.size(); ++k)
            if (quiver.arrows[k].label == lbl) {
              j = k;
              break;
            }
          if (j == quiver.arrows.size()) err(line, "unknown arrow '" + lbl + "'");
          if (!p.arrows.empty() && quiver.arrows[p.arrows.back()].dst != quiver.arrows[j].src)
            err(line, "arrows '" + quiver.arrows[p.arrows.back()].label + "' and '" + lbl +
                          "' do not compose");
          if (p.arrows.empty()) p.source = quiver.arrows[j].src;
          p.arrows.push_back(j);
        }
        if (p.arrows.size() < 2) err(line, "relation terms must have length at least 2");
        rel.terms.emplace_back(c, p);
      }
      if (rel.terms.empty()) err(line, "empty relation");
      relations.emplace_back(line, rel);
    } else if (kw == "truncate") {
      if (toks.size() != 2) err(line, "usage: truncate <N>");
      saw_quiver_stmt = true;
      long n = std::stol(toks[1]);
      if (n < 1) err(line, "truncation must be at least 1");
      truncate = static_cast<std::size_t>(n);
    } else if (kw == "algebra") {
      if (toks.size() != 3 || toks[1] != "dim") err(line, "usage: algebra dim <n>");
      long n = std::stol(toks[2]);
      if (n < 1) err(line, "dimension must be positive");
      alg_dim = static_cast<std::size_t>(n);
      table.assign(*alg_dim, std::vector<Vec>(*alg_dim, Vec(*alg_dim, Scalar(0))));
      alg_names.clear();
      for (std::size_t k = 0; k < *alg_dim; ++k) alg_names.push_back("b" + std::to_string(k));
    } else if (kw == "mult") {
      if (!alg_dim) err(line, "mult before 'algebra dim'");
      std::size_t eq = stmt.find('=');
      if (eq == std::string::npos) err(line, "usage: mult <i> <j> = <combo>");
      std::vector<std::string> lhs = tokens_of(stmt.substr(0, eq));
      if (lhs.size() != 3) err(line, "usage: mult <i> <j> = <combo>");
      long i = std::stol(lhs[1]), j = std::stol(lhs[2]);
      if (i < 0 || j < 0 || std::size_t(i) >= *alg_dim || std::size_t(j) >= *alg_dim)
        err(line, "basis index out of range");
      table[i][j] = combo_to_vec(line, trim(stmt.substr(eq + 1)));
    } else if (kw == "unit") {
      if (!alg_dim) err(line, "unit before 'algebra dim'");
      std::size_t eq = stmt.find('=');
      if (eq == std::string::npos) err(line, "usage: unit = <combo>");
      unit = combo_to_vec(line, trim(stmt.substr(eq + 1)));
    } else {
      err(line, "unknown statement '" + kw + "'");
    }
  }

  if (!field) throw input_error("missing field statement");

  ParsedInput out;
  if (alg_dim) {
    if (saw_quiver_stmt)
      throw input_error("cannot mix quiver statements with structure constants");
    if (!unit) throw input_error("missing unit statement");
    out.algebra.field = *field;
    out.algebra.basis_names = alg_names;
    out.algebra.table = std::move(table);
    out.algebra.unit = *unit;
    try {
      check_unital(out.algebra);
      check_associative(out.algebra);
    } catch (const check_error& e) {
      throw input_error(std::string("structure constants: ") + e.what());
    }
    return out;
  }
  if (!saw_quiver_stmt) throw input_error("empty input");
  if (quiver.vertices.empty()) throw input_error("missing vertices statement");
  if (!truncate) throw input_error("missing truncate statement");

  QuiverPresentation p;
  p.field = *field;
  p.quiver = quiver;
  p.truncate = *truncate;
  for (auto& [line, rel] : relations) p.relations.push_back(rel);
  p.validate();
  out.algebra = build_algebra(p);
  out.pres = std::move(p);
  return out;
}

}  // namespace dualco

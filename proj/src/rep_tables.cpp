// Generator matrices and idempotent data for every Cl(p,q), 1 <= p+q <= 6.
#include <array>
#include <cctype>
#include <map>
#include <utility>

#include "cliffroot/rep.hpp"

namespace cliffroot {

namespace {

struct TableRow {
  int p, q, dim;
  std::vector<const char *> generators;
  std::vector<const char *> factors, ring, ideal;
  bool doubled;
};

// Item 4 strings are transcribed verbatim; items 1-3 name blades.
const std::vector<TableRow> &rows() {
  static const std::vector<TableRow> r = {
      {1, 0, 2, {"E11 - E22"}, {"e1"}, {"1"}, {"1"}, true},
      {0, 1, 1, {"iE11"}, {}, {"1", "e1"}, {"1"}, false},

      {2, 0, 2, {"E11 - E22", "E12 + E21"}, {"e1"}, {"1"}, {"1", "e2"}, false},
      {1, 1, 2, {"E11 - E22", "-E12 + E21"}, {"e1"}, {"1"}, {"1", "e2"}, false},
      {0, 2, 1, {"q1E11", "q2E11"}, {}, {"1", "e1", "e2"}, {"1"}, false},

      {3, 0, 2, {"E11 - E22", "E12 + E21", "i(-E12 + E21)"}, {"e1"}, {"1", "e23"}, {"1", "e2"}, false},
      {2, 1, 4,
       {"E11 - E22 - E33 + E44", "E12 + E21 - E34 - E43", "-E12 + E21 + E34 - E43"},
       {"e1", "e23"}, {"1"}, {"1", "e2"}, true},
      {1, 2, 2, {"E11 - E22", "-E12 + E21", "-iE12 - iE21"}, {"e1"}, {"1", "e23"}, {"1", "e2"}, false},
      {0, 3, 2, {"-q1E11 + q1E22", "-q2E11 + q2E22", "-q3E11 + q3E22"},
       {"e123"}, {"1", "e1", "e2", "e3"}, {"e3"}, true},

      {4, 0, 2, {"E11 - E22", "E12 + E21", "-q1E12 + q1E21", "-q2E12 + q2E21"},
       {"e1"}, {"1", "e23", "e24", "e34"}, {"1", "e2"}, false},
      {3, 1, 4,
       {"E11 - E22 - E33 + E44", "E12 + E21 + E34 + E43", "E13 - E24 + E31 - E42",
        "-E12 + E21 - E34 + E43"},
       {"e1", "e24"}, {"1"}, {"1", "e2", "e3", "e23"}, false},
      {2, 2, 4,
       {"E11 - E22 - E33 + E44", "E12 + E21 + E34 + E43", "-E12 + E21 - E34 + E43",
        "-E13 + E24 + E31 - E42"},
       {"e1", "e23"}, {"1"}, {"1", "e2", "e4", "e24"}, false},
      {1, 3, 2, {"E11 - E22", "-E12 + E21", "-q1E12 - q1E21", "-q2E12 - q2E21"},
       {"e1"}, {"1", "e23", "e24", "e34"}, {"1", "e2"}, false},
      {0, 4, 2, {"-q1E11 + q1E22", "-q2E11 + q2E22", "-q3E11 + q3E22", "E12 - E21"},
       {"e123"}, {"1", "e1", "e2", "e3"}, {"e3", "e34"}, false},

      {5, 0, 4,
       {"E11 - E22 - E33 + E44", "E12 + E21 - E34 - E43", "q1(E12 - E21 - E34 + E43)",
        "q2(E12 - E21 - E34 + E43)", "q3(-E12 + E21 + E34 - E43)"},
       {"e1", "e2345"}, {"1", "e23", "e24", "e25"}, {"e25", "e5"}, true},
      {4, 1, 4,
       {"E11 - E22 - E33 + E44", "E12 + E21 + E34 + E43", "E13 - E24 + E31 - E42",
        "i(-E13 + E24 + E31 - E42)", "-E12 + E21 - E34 + E43"},
       {"e1", "e25"}, {"1", "e34"}, {"1", "e2", "e3", "e23"}, false},
      {3, 2, 8,
       {"E11 - E22 - E33 + E44 - E55 + E66 + E77 - E88",
        "E12 + E21 + E34 + E43 - E56 - E65 - E78 - E87",
        "E13 - E24 + E31 - E42 - E57 + E68 - E75 + E86",
        "-E12 + E21 - E34 + E43 + E56 - E65 + E78 - E87",
        "-E13 + E24 + E31 - E42 + E57 - E68 - E75 + E86"},
       {"e1", "e24", "e35"}, {"1"}, {"1", "e2", "e3", "e23"}, true},
      {2, 3, 4,
       {"E11 - E22 - E33 + E44", "E12 + E21 + E34 + E43", "-E12 + E21 - E34 + E43",
        "-E13 + E24 + E31 - E42", "i(-E13 + E24 - E31 + E42)"},
       {"e1", "e23"}, {"1", "e45"}, {"1", "e2", "e4", "e24"}, false},
      {1, 4, 4,
       {"E11 - E22 - E33 + E44", "E12 - E21 - E34 + E43", "q1(-E12 - E21 + E34 + E43)",
        "q2(-E12 - E21 + E34 + E43)", "q3(-E12 - E21 + E34 + E43)"},
       {"e1", "e2345"}, {"1", "e23", "e24", "e25"}, {"e25", "e5"}, true},
      {0, 5, 4,
       {"i(E11 - E22 - E33 + E44)", "-E12 + E21 - E34 + E43", "i(E12 + E21 + E34 + E43)",
        "-E13 + E24 + E31 - E42", "i(E13 - E24 + E31 - E42)"},
       {"e123", "e145"}, {"1", "e1"}, {"1", "e2", "e4", "e24"}, false},

      {6, 0, 4,
       {"E11 - E22 - E33 + E44", "E12 + E21 + E34 + E43", "q1(E12 - E21 + E34 - E43)",
        "q2(E12 - E21 + E34 - E43)", "q3(-E12 + E21 - E34 + E43)", "E13 - E24 + E31 - E42"},
       {"e1", "e2345"}, {"1", "e23", "e24", "e25"}, {"e25", "e5", "e256", "e56"}, false},
      {5, 1, 4,
       {"E11 - E22 - E33 + E44", "E12 + E21 + E34 + E43", "E13 - E24 + E31 - E42",
        "q1(-E13 + E24 + E31 - E42)", "q2(-E13 + E24 + E31 - E42)", "-E12 + E21 - E34 + E43"},
       {"e1", "e26"}, {"1", "e34", "e35", "e45"}, {"1", "e2", "e3", "e23"}, false},
      {4, 2, 8,
       {"E11 - E22 - E33 + E44 - E55 + E66 + E77 - E88",
        "E12 + E21 + E34 + E43 + E56 + E65 + E78 + E87",
        "E13 - E24 + E31 - E42 + E57 - E68 + E75 - E86",
        "E15 - E26 - E37 + E48 + E51 - E62 - E73 + E84",
        "-E12 + E21 - E34 + E43 - E56 + E65 - E78 + E87",
        "-E13 + E24 + E31 - E42 - E57 + E68 + E75 - E86"},
       {"e1", "e25", "e36"}, {"1"}, {"1", "e2", "e3", "e23", "e4", "e24", "e34", "e234"}, false},
      {3, 3, 8,
       {"E11 - E22 - E33 + E44 - E55 + E66 + E77 - E88",
        "E12 + E21 + E34 + E43 + E56 + E65 + E78 + E87",
        "E13 - E24 + E31 - E42 + E57 - E68 + E75 - E86",
        "-E12 + E21 - E34 + E43 - E56 + E65 - E78 + E87",
        "-E13 + E24 + E31 - E42 - E57 + E68 + E75 - E86",
        "-E15 + E26 + E37 - E48 + E51 - E62 - E73 + E84"},
       {"e1", "e24", "e35"}, {"1"}, {"1", "e2", "e3", "e23", "e6", "e26", "e36", "e236"}, false},
      {2, 4, 4,
       {"E11 - E22 - E33 + E44", "E12 + E21 + E34 + E43", "-E12 + E21 - E34 + E43",
        "-E13 + E24 + E31 - E42", "q1(-E13 + E24 - E31 + E42)", "q2(-E13 + E24 - E31 + E42)"},
       {"e1", "e23"}, {"1", "e45", "e46", "e56"}, {"1", "e2", "e4", "e24"}, false},
      {1, 5, 4,
       {"E11 - E22 - E33 + E44", "E12 - E21 + E34 - E43", "q1(-E12 - E21 - E34 - E43)",
        "q2(-E12 - E21 - E34 - E43)", "q3(-E12 - E21 - E34 - E43)", "-E13 + E24 + E31 - E42"},
       {"e1", "e2345"}, {"1", "e23", "e24", "e25"}, {"e25", "e5", "e256", "e56"}, false},
      {0, 6, 8,
       {"-E12 + E21 + E34 - E43 + E56 - E65 - E78 + E87",
        "-E13 - E24 + E31 + E42 + E57 + E68 - E75 - E86",
        "-E14 + E23 - E32 + E41 + E58 - E67 + E76 - E85",
        "-E15 - E26 - E37 - E48 + E51 + E62 + E73 + E84",
        "-E16 + E25 - E38 + E47 - E52 + E61 - E74 + E83",
        "-E17 + E28 + E35 - E46 - E53 + E64 + E71 - E82"},
       {"e123", "e145", "e246"}, {"1"}, {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e16"}, false},
  };
  return r;
}

const TableRow &row_for(Signature sig) {
  for (const TableRow &r : rows())
    if (r.p == sig.p && r.q == sig.q)
      return r;
  throw AlgebraError("no representation table for " + sig.name());
}

Blade blade_from(const char *s) {
  if (s[0] == '1' && s[1] == '\0')
    return 0;
  Blade b = 0;
  for (const char *c = s + 1; *c; ++c)
    b |= 1u << (*c - '1');
  return b;
}

std::vector<Blade> blades_from(const std::vector<const char *> &names) {
  std::vector<Blade> out;
  for (const char *n : names)
    out.push_back(blade_from(n));
  return out;
}

// Reads sums of E_ij terms with optional unit prefixes (i, q1, q2, q3) and parentheses.
class EntryParser {
public:
  EntryParser(const char *text, int dim) : s_(text), m_{dim, std::vector<UnitEntry>(static_cast<size_t>(dim) * dim)} {}

  SymbolicMatrix run() {
    expr(1, 0);
    skip();
    if (s_[pos_] != '\0')
      fail();
    return m_;
  }

private:
  const char *s_;
  size_t pos_ = 0;
  SymbolicMatrix m_;

  [[noreturn]] void fail() const {
    throw AlgebraError(std::string("malformed table entry: ") + s_);
  }
  void skip() {
    while (s_[pos_] == ' ')
      ++pos_;
  }

  void expr(int sign, int unit) {
    skip();
    int s = 1;
    if (s_[pos_] == '-' || s_[pos_] == '+') {
      s = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    term(sign * s, unit);
    for (;;) {
      skip();
      const char c = s_[pos_];
      if (c != '+' && c != '-')
        return;
      ++pos_;
      term(sign * (c == '-' ? -1 : 1), unit);
    }
  }

  void term(int sign, int unit) {
    skip();
    int u = 0;
    if (s_[pos_] == 'i') {
      u = 1;
      ++pos_;
    } else if (s_[pos_] == 'q') {
      u = s_[pos_ + 1] - '0';
      if (u < 1 || u > 3)
        fail();
      pos_ += 2;
    }
    if (u != 0 && unit != 0)
      fail();
    const int combined = u != 0 ? u : unit;
    skip();
    if (s_[pos_] == '(') {
      ++pos_;
      expr(sign, combined);
      skip();
      if (s_[pos_] != ')')
        fail();
      ++pos_;
      return;
    }
    if (s_[pos_] != 'E' || !std::isdigit(s_[pos_ + 1]) || !std::isdigit(s_[pos_ + 2]))
      fail();
    const int i = s_[pos_ + 1] - '1', j = s_[pos_ + 2] - '1';
    pos_ += 3;
    if (i < 0 || j < 0 || i >= m_.dim || j >= m_.dim)
      fail();
    UnitEntry &e = m_.entries[static_cast<size_t>(i) * m_.dim + j];
    int *slot[] = {&e.w, &e.x, &e.y, &e.z};
    *slot[combined] += sign;
  }
};

} // namespace

std::vector<SymbolicMatrix> basis_rep_table(Signature sig) {
  const TableRow &row = row_for(Signature::make(sig.p, sig.q));
  std::vector<SymbolicMatrix> out;
  for (const char *g : row.generators)
    out.push_back(EntryParser(g, row.dim).run());
  return out;
}

const IdealData &ideal_data(Signature sig) {
  static const std::map<std::pair<int, int>, IdealData> cache = [] {
    std::map<std::pair<int, int>, IdealData> m;
    for (const TableRow &r : rows())
      m[{r.p, r.q}] = IdealData{blades_from(r.factors), blades_from(r.ring), blades_from(r.ideal), r.doubled};
    return m;
  }();
  const auto it = cache.find({sig.p, sig.q});
  if (it == cache.end())
    throw AlgebraError("no idempotent data for " + sig.name());
  return it->second;
}

} // namespace cliffroot

#include "boysfn/tables.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>

namespace boysfn {

TableParseError::TableParseError(int line_no, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + message), line(line_no) {}

void validate_tables(const CoefficientTableSet& set) {
  if (set.k_max < 0) throw std::invalid_argument("tables: k_max must be non-negative");
  if (!(set.eps_tol > 0)) throw std::invalid_argument("tables: eps_tol must be positive");
  if (!(set.x0 > 0 && set.x0 < set.x1)) throw std::invalid_argument("tables: need 0 < x0 < x1");
  if (set.r_A.size() != static_cast<size_t>(set.k_max) + 1)
    throw std::invalid_argument("tables: need exactly k_max+1 region-A tables");
  auto check = [](const RationalApproximant& r, const std::string& what) {
    if (r.numer.empty() || r.denom.empty())
      throw std::invalid_argument("tables: empty coefficient vector in " + what);
    for (double c : r.numer)
      if (!std::isfinite(c)) throw std::invalid_argument("tables: non-finite value in " + what);
    for (double c : r.denom)
      if (!std::isfinite(c)) throw std::invalid_argument("tables: non-finite value in " + what);
    if (r.denom.back() != 1.0)
      throw std::invalid_argument("tables: non-monic denominator in " + what);
  };
  check(set.r_B, "r_B");
  for (size_t k = 0; k < set.r_A.size(); ++k) check(set.r_A[k], "r_A[" + std::to_string(k) + "]");
}

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  int line_no = 0;

  // Next non-empty line with comments stripped; empty optional at EOF.
  bool next(std::string& out) {
    while (pos < text.size()) {
      size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view line = text.substr(pos, eol - pos);
      pos = eol + 1;
      ++line_no;
      if (size_t hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
      size_t b = line.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) continue;
      size_t e = line.find_last_not_of(" \t\r");
      out.assign(line.substr(b, e - b + 1));
      return true;
    }
    return false;
  }
};

double parse_double(const std::string& token, int line_no) {
  const char* s = token.c_str();
  char* end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s || *end != '\0')
    throw TableParseError(line_no, "expected a coefficient, got '" + token + "'");
  if (!std::isfinite(v)) throw TableParseError(line_no, "non-finite value '" + token + "'");
  return v;
}

}  // namespace

CoefficientTableSet parse_tables(std::string_view text) {
  Cursor cur{text};
  std::string line;

  if (!cur.next(line)) throw TableParseError(0, "empty input");
  CoefficientTableSet set;
  {
    char eps_buf[64], x0_buf[64], x1_buf[64];
    if (std::sscanf(line.c_str(), "boys-minimax v1 kmax=%d eps=%63s x0=%63s x1=%63s",
                    &set.k_max, eps_buf, x0_buf, x1_buf) != 4)
      throw TableParseError(cur.line_no, "malformed header '" + line + "'");
    set.eps_tol = parse_double(eps_buf, cur.line_no);
    set.x0 = parse_double(x0_buf, cur.line_no);
    set.x1 = parse_double(x1_buf, cur.line_no);
    if (set.k_max < 0) throw TableParseError(cur.line_no, "kmax must be non-negative");
  }

  set.r_A.resize(static_cast<size_t>(set.k_max) + 1);
  std::vector<bool> seen_a(set.k_max + 1, false);
  bool seen_b = false;

  while (cur.next(line)) {
    char kind = 0;
    int k = 0, n = 0, m = 0;
    if (std::sscanf(line.c_str(), "table %c k=%d n=%d m=%d", &kind, &k, &n, &m) != 4 ||
        (kind != 'A' && kind != 'B'))
      throw TableParseError(cur.line_no, "expected a table header, got '" + line + "'");
    if (n < 0 || m < 0) throw TableParseError(cur.line_no, "negative degree");

    RationalApproximant r;
    r.numer.reserve(n + 1);
    r.denom.reserve(m + 1);
    for (int i = 0; i < n + m + 2; ++i) {
      if (!cur.next(line))
        throw TableParseError(cur.line_no, "wrong coefficient count: table ended early");
      if (line.rfind("table ", 0) == 0)
        throw TableParseError(cur.line_no, "wrong coefficient count: next table too soon");
      double v = parse_double(line, cur.line_no);
      if (i <= n)
        r.numer.push_back(v);
      else
        r.denom.push_back(v);
    }
    if (r.denom.back() != 1.0)
      throw TableParseError(cur.line_no, "non-monic denominator (top coefficient must be 1)");

    if (kind == 'B') {
      if (k != 0) throw TableParseError(cur.line_no, "table B must have k=0");
      if (seen_b) throw TableParseError(cur.line_no, "duplicate table B");
      seen_b = true;
      set.r_B = std::move(r);
    } else {
      if (k < 0 || k > set.k_max)
        throw TableParseError(cur.line_no, "table A k out of range");
      if (seen_a[k]) throw TableParseError(cur.line_no, "duplicate table A k=" + std::to_string(k));
      seen_a[k] = true;
      set.r_A[k] = std::move(r);
    }
  }

  if (!seen_b) throw TableParseError(cur.line_no, "missing table B");
  for (int k = 0; k <= set.k_max; ++k)
    if (!seen_a[k]) throw TableParseError(cur.line_no, "missing table A k=" + std::to_string(k));
  validate_tables(set);
  return set;
}

std::string emit_tables(const CoefficientTableSet& set) {
  validate_tables(set);
  std::ostringstream out;
  out << "boys-minimax v1 kmax=" << set.k_max << " eps=" << fmt_double(set.eps_tol)
      << " x0=" << fmt_double(set.x0) << " x1=" << fmt_double(set.x1) << "\n";
  auto emit_one = [&out](char kind, int k, const RationalApproximant& r) {
    out << "table " << kind << " k=" << k << " n=" << r.degree_n() << " m=" << r.degree_m()
        << "\n";
    for (double c : r.numer) out << fmt_double(c) << "\n";
    for (double c : r.denom) out << fmt_double(c) << "\n";
  };
  emit_one('B', 0, set.r_B);
  for (int k = 0; k <= set.k_max; ++k) emit_one('A', k, set.r_A[k]);
  return out.str();
}

}  // namespace boysfn

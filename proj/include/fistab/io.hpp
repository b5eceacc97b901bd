#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fistab/bounds.hpp"
#include "fistab/fi_complex.hpp"
#include "fistab/fi_module.hpp"

// Line-oriented text formats.
//
//   FIMODULE
//   name <text>                       (optional)
//   ring Q|Z
//   truncation N
//   dims d_0 ... d_N
//   iota n rows cols e_11 e_12 ...    (one line per n = 0..N-1)
//   trans n i rows cols e_11 ...      (one line per n = 2..N, i = 1..n-1)
//   END
//
//   FICOMPLEX
//   name <text>                       (optional)
//   ring Q|Z
//   truncation N
//   degrees qmin qmax
//   module q                          (then an FIMODULE block, per degree)
//   diff q n rows cols e_11 ...       (one line per q = qmin+1..qmax, n = 0..N)
//   END
//
//   CUBE
//   n K
//   sizes k_1 ... k_K                 (symmetric), or
//   subset i,j,... k                  (one line per nonempty subset)
//   END
//
// Entries are integers or reduced fractions a/b; cube values may be inf.
// Blank lines and lines starting with '#' are ignored.

namespace fistab {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A parsed object failed validation; `problems` lists the violated relations.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> problems)
      : Error(join(problems)), problems_(std::move(problems)) {}
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& p) {
    std::string s = "validation failed";
    for (const auto& x : p) s += "\n  " + x;
    return s;
  }
  std::vector<std::string> problems_;
};

// ---------------------------------------------------------------------------
// Writing

namespace detail {

inline void write_entries(std::ostream& os, const ExactMatrix& m) {
  os << m.rows() << ' ' << m.cols();
  for (const auto& e : m.entries()) os << ' ' << e.get_str();
}

}  // namespace detail

inline void write_module(std::ostream& os, const FIModule& v) {
  os << "FIMODULE\n";
  if (!v.name.empty()) os << "name " << v.name << '\n';
  os << "ring " << ring_name(v.ring) << '\n' << "truncation " << v.N << '\n' << "dims";
  for (auto d : v.dims) os << ' ' << d;
  os << '\n';
  for (std::size_t n = 0; n < v.N; ++n) {
    os << "iota " << n << ' ';
    detail::write_entries(os, v.iota[n]);
    os << '\n';
  }
  for (std::size_t n = 2; n <= v.N; ++n)
    for (std::size_t i = 1; i < n; ++i) {
      os << "trans " << n << ' ' << i << ' ';
      detail::write_entries(os, v.s(n, i));
      os << '\n';
    }
  os << "END\n";
}

inline void write_complex(std::ostream& os, const FIComplex& w) {
  os << "FICOMPLEX\n";
  if (!w.name.empty()) os << "name " << w.name << '\n';
  os << "ring " << ring_name(w.ring) << '\n'
     << "truncation " << w.N << '\n'
     << "degrees " << w.qmin << ' ' << w.qmax << '\n';
  for (int q = w.qmin; q <= w.qmax; ++q) {
    os << "module " << q << '\n';
    write_module(os, w.module(q));
  }
  for (int q = w.qmin + 1; q <= w.qmax; ++q)
    for (std::size_t n = 0; n <= w.N; ++n) {
      os << "diff " << q << ' ' << n << ' ';
      detail::write_entries(os, w.diff(q).f[n]);
      os << '\n';
    }
  os << "END\n";
}

inline void write_cube(std::ostream& os, const CubeSpec& s) {
  os << "CUBE\nn " << s.n << '\n';
  for (std::uint32_t m = 1; m < s.k.size(); ++m) {
    os << "subset ";
    bool first = true;
    for (int i = 0; i < s.n; ++i)
      if (m & (1u << i)) {
        os << (first ? "" : ",") << i;
        first = false;
      }
    os << ' ' << s.k[m].to_string() << '\n';
  }
  os << "END\n";
}

inline std::string to_text(const FIModule& v) {
  std::ostringstream os;
  write_module(os, v);
  return os.str();
}
inline std::string to_text(const FIComplex& w) {
  std::ostringstream os;
  write_complex(os, w);
  return os.str();
}
inline std::string to_text(const CubeSpec& s) {
  std::ostringstream os;
  write_cube(os, s);
  return os.str();
}

// ---------------------------------------------------------------------------
// Reading

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  /// Next non-blank, non-comment line split into whitespace tokens.
  std::optional<std::vector<std::string>> next() {
    std::string raw;
    while (std::getline(is_, raw)) {
      ++line_;
      std::istringstream ls(raw);
      std::vector<std::string> toks;
      for (std::string t; ls >> t;) toks.push_back(t);
      if (toks.empty() || toks[0][0] == '#') continue;
      last_raw_ = raw;
      return toks;
    }
    return std::nullopt;
  }

  std::optional<std::vector<std::string>> expect(const std::string& keyword) {
    auto t = next();
    if (!t) throw ParseError(line_, "unexpected end of input, expected '" + keyword + "'");
    if ((*t)[0] != keyword) throw ParseError(line_, "expected '" + keyword + "', found '" + (*t)[0] + "'");
    return *t;
  }

  /// Rest of the current line after the first token, whitespace trimmed.
  std::string rest_of_line() const {
    auto p = last_raw_.find_first_not_of(" \t");
    p = last_raw_.find_first_of(" \t", p);
    if (p == std::string::npos) return "";
    auto b = last_raw_.find_first_not_of(" \t", p);
    auto e = last_raw_.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : last_raw_.substr(b, e - b + 1);
  }

  std::size_t line() const { return line_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

 private:
  std::istream& is_;
  std::size_t line_ = 0;
  std::string last_raw_;
};

inline long parse_long(const LineReader& r, const std::string& tok, const std::string& field) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    r.fail(field + ": expected an integer, found '" + tok + "'");
  }
}

inline std::size_t parse_count(const LineReader& r, const std::string& tok, const std::string& field) {
  long v = parse_long(r, tok, field);
  if (v < 0) r.fail(field + ": expected a nonnegative count, found '" + tok + "'");
  return static_cast<std::size_t>(v);
}

inline mpq_class parse_scalar(const LineReader& r, const std::string& tok, const std::string& field) {
  auto bad = [&] { r.fail(field + ": malformed entry '" + tok + "'"); };
  const auto slash = tok.find('/');
  auto digits = [](const std::string& s, bool sign_ok) {
    std::size_t i = sign_ok && !s.empty() && s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos ? !digits(tok, true)
                                 : !digits(tok.substr(0, slash), true) || !digits(tok.substr(slash + 1), false))
    bad();
  mpq_class q(tok, 10);
  if (q.get_den() == 0) r.fail(field + ": zero denominator in '" + tok + "'");
  q.canonicalize();
  return q;
}

/// rows cols e... starting at token index `at`.
inline ExactMatrix parse_matrix(const LineReader& r, const std::vector<std::string>& t, std::size_t at, Ring ring,
                                const std::string& field) {
  if (t.size() < at + 2) r.fail(field + ": missing matrix shape");
  const auto rows = parse_count(r, t[at], field + " rows"), cols = parse_count(r, t[at + 1], field + " cols");
  if (t.size() != at + 2 + rows * cols)
    r.fail(field + ": expected " + std::to_string(rows * cols) + " entries, found " + std::to_string(t.size() - at - 2));
  ExactMatrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      auto q = parse_scalar(r, t[at + 2 + i * cols + j], field);
      if (ring == Ring::Integers && q.get_den() != 1) r.fail(field + ": fraction in an integer matrix");
      m.set(i, j, q);
    }
  return m;
}

inline Ring parse_ring(const LineReader& r, const std::vector<std::string>& t) {
  if (t.size() != 2 || (t[1] != "Q" && t[1] != "Z")) r.fail("ring: expected 'ring Q' or 'ring Z'");
  return t[1] == "Z" ? Ring::Integers : Ring::Rationals;
}

inline void check_shape(const LineReader& r, const ExactMatrix& m, std::size_t rows, std::size_t cols,
                        const std::string& field) {
  if (m.rows() != rows || m.cols() != cols)
    r.fail(field + ": shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
           std::to_string(rows) + "x" + std::to_string(cols));
}

inline FIModule read_module_body(LineReader& r) {
  FIModule v;
  auto t = r.next();
  if (!t) r.fail("unexpected end of input in module");
  if ((*t)[0] == "name") {
    v.name = r.rest_of_line();
    t = r.next();
    if (!t) r.fail("unexpected end of input in module");
  }
  if ((*t)[0] != "ring") r.fail("expected 'ring'");
  v.ring = parse_ring(r, *t);
  t = r.expect("truncation");
  if (t->size() != 2) r.fail("truncation: expected one value");
  v.N = parse_count(r, (*t)[1], "truncation");
  t = r.expect("dims");
  if (t->size() != v.N + 2) r.fail("dims: expected " + std::to_string(v.N + 1) + " values");
  for (std::size_t n = 0; n <= v.N; ++n) v.dims.push_back(parse_count(r, (*t)[n + 1], "dims"));
  for (std::size_t n = 0; n < v.N; ++n) {
    t = r.expect("iota");
    const std::string f = "iota " + std::to_string(n);
    if (t->size() < 2 || parse_count(r, (*t)[1], "iota level") != n) r.fail("iota: expected level " + std::to_string(n));
    v.iota.push_back(parse_matrix(r, *t, 2, v.ring, f));
    check_shape(r, v.iota.back(), v.dims[n + 1], v.dims[n], f);
  }
  v.trans.resize(v.N + 1);
  for (std::size_t n = 2; n <= v.N; ++n)
    for (std::size_t i = 1; i < n; ++i) {
      t = r.expect("trans");
      const std::string f = "trans " + std::to_string(n) + " " + std::to_string(i);
      if (t->size() < 3 || parse_count(r, (*t)[1], "trans level") != n || parse_count(r, (*t)[2], "trans index") != i)
        r.fail("trans: expected level " + std::to_string(n) + " generator " + std::to_string(i));
      v.trans[n].push_back(parse_matrix(r, *t, 3, v.ring, f));
      check_shape(r, v.trans[n].back(), v.dims[n], v.dims[n], f);
    }
  r.expect("END");
  return v;
}

}  // namespace detail

/// Parse without validating relations.
inline FIModule read_module_raw(std::istream& is) {
  detail::LineReader r(is);
  r.expect("FIMODULE");
  return detail::read_module_body(r);
}

inline FIModule read_module(std::istream& is) {
  auto v = read_module_raw(is);
  auto bad = validate(v);
  if (!bad.empty()) throw ValidationError(std::move(bad));
  return v;
}

inline FIComplex read_complex_raw(std::istream& is) {
  detail::LineReader r(is);
  r.expect("FICOMPLEX");
  FIComplex w;
  auto t = r.next();
  if (!t) r.fail("unexpected end of input in complex");
  if ((*t)[0] == "name") {
    w.name = r.rest_of_line();
    t = r.next();
    if (!t) r.fail("unexpected end of input in complex");
  }
  if ((*t)[0] != "ring") r.fail("expected 'ring'");
  w.ring = detail::parse_ring(r, *t);
  t = r.expect("truncation");
  if (t->size() != 2) r.fail("truncation: expected one value");
  w.N = detail::parse_count(r, (*t)[1], "truncation");
  t = r.expect("degrees");
  if (t->size() != 3) r.fail("degrees: expected qmin qmax");
  w.qmin = static_cast<int>(detail::parse_long(r, (*t)[1], "degrees"));
  w.qmax = static_cast<int>(detail::parse_long(r, (*t)[2], "degrees"));
  if (w.qmax < w.qmin) r.fail("degrees: qmax < qmin");
  for (int q = w.qmin; q <= w.qmax; ++q) {
    t = r.expect("module");
    if (t->size() != 2 || detail::parse_long(r, (*t)[1], "module degree") != q)
      r.fail("module: expected degree " + std::to_string(q));
    r.expect("FIMODULE");
    w.modules.push_back(detail::read_module_body(r));
    if (w.modules.back().ring != w.ring || w.modules.back().N != w.N)
      r.fail("module in degree " + std::to_string(q) + ": ring or truncation differs from the complex");
  }
  for (int q = w.qmin + 1; q <= w.qmax; ++q) {
    FIMorphism d{w.module(q), w.module(q - 1), {}};
    for (std::size_t n = 0; n <= w.N; ++n) {
      t = r.expect("diff");
      const std::string f = "diff " + std::to_string(q) + " " + std::to_string(n);
      if (t->size() < 3 || detail::parse_long(r, (*t)[1], "diff degree") != q ||
          detail::parse_count(r, (*t)[2], "diff level") != n)
        r.fail("diff: expected degree " + std::to_string(q) + " level " + std::to_string(n));
      d.f.push_back(detail::parse_matrix(r, *t, 3, w.ring, f));
      detail::check_shape(r, d.f.back(), d.target.dims[n], d.source.dims[n], f);
    }
    w.diffs.push_back(std::move(d));
  }
  r.expect("END");
  return w;
}

inline FIComplex read_complex(std::istream& is) {
  auto w = read_complex_raw(is);
  auto bad = validate(w);
  if (!bad.empty()) throw ValidationError(std::move(bad));
  return w;
}

inline CubeSpec read_cube(std::istream& is) {
  detail::LineReader r(is);
  r.expect("CUBE");
  auto t = r.expect("n");
  if (t->size() != 2) r.fail("n: expected one value");
  const long n = detail::parse_long(r, (*t)[1], "n");
  if (n < 1 || n > 16) r.fail("n: must be in 1..16");
  auto value = [&](const std::string& tok) -> ExtInt {
    if (tok == "inf") return ExtInt::pos_inf();
    return detail::parse_long(r, tok, "connectivity");
  };
  CubeSpec s;
  t = r.next();
  if (!t) r.fail("unexpected end of input in cube");
  if ((*t)[0] == "sizes") {
    if (t->size() != static_cast<std::size_t>(n) + 1) r.fail("sizes: expected " + std::to_string(n) + " values");
    std::vector<ExtInt> by(static_cast<std::size_t>(n) + 1, ExtInt(0));
    for (long c = 1; c <= n; ++c) by[static_cast<std::size_t>(c)] = value((*t)[static_cast<std::size_t>(c)]);
    s = CubeSpec::by_size(static_cast<int>(n), by);
    r.expect("END");
    return s;
  }
  s.n = static_cast<int>(n);
  s.k.assign(std::size_t{1} << n, ExtInt(0));
  std::vector<bool> seen(s.k.size(), false);
  for (;; t = r.next()) {
    if (!t) r.fail("unexpected end of input in cube");
    if ((*t)[0] == "END") break;
    if ((*t)[0] != "subset" || t->size() != 3) r.fail("expected 'subset i,j,... value' or 'END'");
    std::uint32_t mask = 0;
    std::istringstream ss((*t)[1]);
    for (std::string item; std::getline(ss, item, ',');) {
      const long i = detail::parse_long(r, item, "subset element");
      if (i < 0 || i >= n) r.fail("subset element " + item + " outside 0.." + std::to_string(n - 1));
      if (mask & (1u << i)) r.fail("subset element " + item + " repeated");
      mask |= 1u << i;
    }
    if (mask == 0) r.fail("empty subset");
    if (seen[mask]) r.fail("subset " + (*t)[1] + " given twice");
    seen[mask] = true;
    s.k[mask] = value((*t)[2]);
  }
  for (std::uint32_t m = 1; m < s.k.size(); ++m)
    if (!seen[m]) r.fail("cube: missing value for subset mask " + std::to_string(m));
  return s;
}

inline FIModule module_from_text(const std::string& s) {
  std::istringstream is(s);
  return read_module(is);
}
inline FIComplex complex_from_text(const std::string& s) {
  std::istringstream is(s);
  return read_complex(is);
}
inline CubeSpec cube_from_text(const std::string& s) {
  std::istringstream is(s);
  return read_cube(is);
}

}  // namespace fistab

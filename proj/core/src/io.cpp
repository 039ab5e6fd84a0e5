#include "sbnet/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sbnet/errors.hpp"

namespace sbnet {

namespace {

// Pull the next nonempty line, skipping blanks and trailing whitespace.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

std::string expect_header(std::istream& in, const std::string& magic) {
  std::string line;
  if (!next_line(in, line)) throw InputError("empty input, expected " + magic + " header");
  std::istringstream h(line);
  std::string word, version;
  h >> word >> version;
  if (word != magic) throw InputError("bad header: expected " + magic + ", got '" + word + "'");
  if (version != "v1") throw InputError("unsupported version '" + version + "' for " + magic);
  std::string rest;
  std::getline(h, rest);
  return rest;
}

long parse_param(const std::string& params, const std::string& key) {
  std::istringstream p(params);
  std::string tok;
  while (p >> tok) {
    if (tok.rfind(key + "=", 0) == 0) {
      try {
        std::size_t pos = 0;
        const std::string val = tok.substr(key.size() + 1);
        const long v = std::stol(val, &pos);
        if (pos != val.size()) throw std::invalid_argument("");
        return v;
      } catch (const std::exception&) {
        throw InputError("bad value for header parameter '" + key + "'");
      }
    }
  }
  throw InputError("missing header parameter '" + key + "'");
}

Rational parse_rational(const std::string& tok) {
  const auto slash = tok.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(tok));
    const BigInt p(tok.substr(0, slash));
    const BigInt q(tok.substr(slash + 1));
    if (q <= 0) throw InputError("rational denominator must be positive: " + tok);
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw InputError("bad rational literal: " + tok);
  }
}

std::string format_rational(const Rational& v) {
  std::ostringstream out;
  out << numerator(v);
  if (denominator(v) != 1) out << '/' << denominator(v);
  return out.str();
}

int parse_sign(long long v, const std::string& what) {
  if (v != 1 && v != -1) throw InputError(what + " must be +1 or -1");
  return static_cast<int>(v);
}

}  // namespace

void write_signs(std::ostream& out, const SignAssignment& A) {
  out << "sbnet-signs v1 n=" << A.n() << '\n';
  for_each_box(A.n(), [&](int k, std::uint64_t ix, std::uint64_t iy) {
    out << k << ' ' << ix << ' ' << iy << ' ' << (A.sign(k, ix, iy) > 0 ? "1" : "-1") << '\n';
  });
}

SignAssignment read_signs(std::istream& in) {
  const long n = parse_param(expect_header(in, "sbnet-signs"), "n");
  if (n < 0 || n > 40) throw InputError("sbnet-signs: n out of range");
  SignAssignment A(static_cast<int>(n));
  std::vector<bool> seen(hyperbolic_table_size(static_cast<int>(n)), false);
  std::string line;
  while (next_line(in, line)) {
    std::istringstream rec(line);
    long long k, ix, iy, v;
    if (!(rec >> k >> ix >> iy >> v)) throw InputError("sbnet-signs: bad record '" + line + "'");
    std::string extra;
    if (rec >> extra) throw InputError("sbnet-signs: trailing tokens in '" + line + "'");
    if (k < 0 || k > n || ix < 0 || ix >= (1LL << k) || iy < 0 || iy >= (1LL << (n - k)))
      throw InputError("sbnet-signs: index out of range in '" + line + "'");
    const std::size_t off = hyperbolic_offset(static_cast<int>(n), static_cast<int>(k),
                                              static_cast<std::uint64_t>(ix),
                                              static_cast<std::uint64_t>(iy));
    if (seen[off]) throw InputError("sbnet-signs: duplicate box in '" + line + "'");
    seen[off] = true;
    A.set(static_cast<int>(k), static_cast<std::uint64_t>(ix), static_cast<std::uint64_t>(iy),
          parse_sign(v, "sign"));
  }
  for (bool b : seen)
    if (!b) throw InputError("sbnet-signs: missing boxes (all must appear exactly once)");
  return A;
}

void write_coeffs(std::ostream& out, const CoefficientAssignment& A) {
  out << "sbnet-coeffs v1 n=" << A.n() << '\n';
  for_each_box(A.n(), [&](int k, std::uint64_t ix, std::uint64_t iy) {
    out << k << ' ' << ix << ' ' << iy << ' ' << format_rational(A.coeff(k, ix, iy)) << '\n';
  });
}

CoefficientAssignment read_coeffs(std::istream& in) {
  const long n = parse_param(expect_header(in, "sbnet-coeffs"), "n");
  if (n < 0 || n > 40) throw InputError("sbnet-coeffs: n out of range");
  CoefficientAssignment A(static_cast<int>(n));
  std::vector<bool> seen(hyperbolic_table_size(static_cast<int>(n)), false);
  std::string line;
  while (next_line(in, line)) {
    std::istringstream rec(line);
    long long k, ix, iy;
    std::string val;
    if (!(rec >> k >> ix >> iy >> val)) throw InputError("sbnet-coeffs: bad record '" + line + "'");
    std::string extra;
    if (rec >> extra) throw InputError("sbnet-coeffs: trailing tokens in '" + line + "'");
    if (k < 0 || k > n || ix < 0 || ix >= (1LL << k) || iy < 0 || iy >= (1LL << (n - k)))
      throw InputError("sbnet-coeffs: index out of range in '" + line + "'");
    const std::size_t off = hyperbolic_offset(static_cast<int>(n), static_cast<int>(k),
                                              static_cast<std::uint64_t>(ix),
                                              static_cast<std::uint64_t>(iy));
    if (seen[off]) throw InputError("sbnet-coeffs: duplicate box in '" + line + "'");
    seen[off] = true;
    A.set(static_cast<int>(k), static_cast<std::uint64_t>(ix), static_cast<std::uint64_t>(iy),
          parse_rational(val));
  }
  for (bool b : seen)
    if (!b) throw InputError("sbnet-coeffs: missing boxes (all must appear exactly once)");
  return A;
}

void write_net(std::ostream& out, const Net& P) {
  Net canon = P;
  canon.canonicalize();
  out << "sbnet-net v1 b=" << canon.base << " m=" << canon.m << " d=2\n";
  for (const auto& [x, y] : canon.points) out << x << ' ' << y << '\n';
}

Net read_net(std::istream& in) {
  const std::string params = expect_header(in, "sbnet-net");
  const long b = parse_param(params, "b");
  const long m = parse_param(params, "m");
  const long d = parse_param(params, "d");
  if (d != 2) throw InputError("sbnet-net: only d=2 is supported");
  if (b < 2 || b > 64) throw InputError("sbnet-net: base out of range");
  if (m < 0) throw InputError("sbnet-net: m out of range");
  Net P;
  P.base = static_cast<int>(b);
  P.m = static_cast<int>(m);
  const std::uint64_t side = ipow(static_cast<std::uint64_t>(b), static_cast<int>(m));
  std::string line;
  while (next_line(in, line)) {
    std::istringstream rec(line);
    std::uint64_t x, y;
    if (!(rec >> x >> y)) throw InputError("sbnet-net: bad record '" + line + "'");
    std::string extra;
    if (rec >> extra) throw InputError("sbnet-net: trailing tokens in '" + line + "'");
    if (x >= side || y >= side) throw InputError("sbnet-net: point out of range in '" + line + "'");
    P.points.emplace_back(x, y);
  }
  P.canonicalize();
  P.validate();  // cardinality + distinctness
  return P;
}

void write_perms(std::ostream& out, const PermAssignment& A) {
  out << "sbnet-perms v1 b=" << A.base() << " m=" << A.m() << '\n';
  const int nn = A.m() - 1;
  const std::uint64_t b = static_cast<std::uint64_t>(A.base());
  for (int k = 0; k <= nn; ++k)
    for (std::uint64_t ix = 0; ix < ipow(b, k); ++ix)
      for (std::uint64_t iy = 0; iy < ipow(b, nn - k); ++iy) {
        out << k << ' ' << ix << ' ' << iy;
        for (int d = 0; d < A.base(); ++d) out << ' ' << A.perm(k, ix, iy, d);
        out << '\n';
      }
}

PermAssignment read_perms(std::istream& in) {
  const std::string params = expect_header(in, "sbnet-perms");
  const long b = parse_param(params, "b");
  const long m = parse_param(params, "m");
  if (b < 2 || b > 16) throw InputError("sbnet-perms: base out of range");
  if (m < 1) throw InputError("sbnet-perms: m must be at least 1");
  PermAssignment A(static_cast<int>(b), static_cast<int>(m));
  const int nn = static_cast<int>(m) - 1;
  std::vector<bool> seen(A.box_count(), false);
  std::string line;
  std::size_t box_seq = 0;
  (void)box_seq;
  while (next_line(in, line)) {
    std::istringstream rec(line);
    long long k, ix, iy;
    if (!(rec >> k >> ix >> iy)) throw InputError("sbnet-perms: bad record '" + line + "'");
    if (k < 0 || k > nn) throw InputError("sbnet-perms: shape out of range in '" + line + "'");
    const std::uint64_t nx = ipow(static_cast<std::uint64_t>(b), static_cast<int>(k));
    const std::uint64_t ny = ipow(static_cast<std::uint64_t>(b), nn - static_cast<int>(k));
    if (ix < 0 || static_cast<std::uint64_t>(ix) >= nx || iy < 0 ||
        static_cast<std::uint64_t>(iy) >= ny)
      throw InputError("sbnet-perms: index out of range in '" + line + "'");
    std::vector<int> pi(static_cast<std::size_t>(b));
    for (long i = 0; i < b; ++i)
      if (!(rec >> pi[static_cast<std::size_t>(i)]))
        throw InputError("sbnet-perms: short permutation in '" + line + "'");
    std::string extra;
    if (rec >> extra) throw InputError("sbnet-perms: trailing tokens in '" + line + "'");
    // Recompute the flat offset to detect duplicates.
    std::size_t off = 0;
    {
      const std::uint64_t per_shape = ipow(static_cast<std::uint64_t>(b), nn);
      off = static_cast<std::size_t>(k) * per_shape +
            static_cast<std::size_t>(static_cast<std::uint64_t>(ix) * ny +
                                     static_cast<std::uint64_t>(iy));
    }
    if (seen[off]) throw InputError("sbnet-perms: duplicate box in '" + line + "'");
    seen[off] = true;
    A.set_perm(static_cast<int>(k), static_cast<std::uint64_t>(ix),
               static_cast<std::uint64_t>(iy), pi);  // validates bijection
  }
  for (bool s : seen)
    if (!s) throw InputError("sbnet-perms: missing boxes (all must appear exactly once)");
  return A;
}

void write_ext1d(std::ostream& out, const IntervalSigns& E) {
  out << "sbnet-ext1d v1 n=" << E.n << '\n';
  for (int k = 0; k <= E.n; ++k)
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << k); ++idx)
      out << k << ' ' << idx << ' ' << (E.at(k, idx) > 0 ? "1" : "-1") << '\n';
}

IntervalSigns read_ext1d(std::istream& in) {
  const long n = parse_param(expect_header(in, "sbnet-ext1d"), "n");
  if (n < 0 || n > 40) throw InputError("sbnet-ext1d: n out of range");
  IntervalSigns E(static_cast<int>(n));
  std::vector<bool> seen(E.s.size(), false);
  std::string line;
  while (next_line(in, line)) {
    std::istringstream rec(line);
    long long k, idx, v;
    if (!(rec >> k >> idx >> v)) throw InputError("sbnet-ext1d: bad record '" + line + "'");
    std::string extra;
    if (rec >> extra) throw InputError("sbnet-ext1d: trailing tokens in '" + line + "'");
    if (k < 0 || k > n || idx < 0 || idx >= (1LL << k))
      throw InputError("sbnet-ext1d: index out of range in '" + line + "'");
    const std::size_t off = (std::size_t{1} << k) - 1 + static_cast<std::size_t>(idx);
    if (seen[off]) throw InputError("sbnet-ext1d: duplicate interval in '" + line + "'");
    seen[off] = true;
    E.set(static_cast<int>(k), static_cast<std::uint64_t>(idx), parse_sign(v, "sign"));
  }
  for (bool s : seen)
    if (!s) throw InputError("sbnet-ext1d: missing intervals (all must appear exactly once)");
  return E;
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  return in;
}

}  // namespace

SignAssignment read_signs_file(const std::string& path) {
  auto in = open_input(path);
  return read_signs(in);
}

CoefficientAssignment read_coeffs_file(const std::string& path) {
  auto in = open_input(path);
  return read_coeffs(in);
}

Net read_net_file(const std::string& path) {
  auto in = open_input(path);
  return read_net(in);
}

PermAssignment read_perms_file(const std::string& path) {
  auto in = open_input(path);
  return read_perms(in);
}

IntervalSigns read_ext1d_file(const std::string& path) {
  auto in = open_input(path);
  return read_ext1d(in);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw InputError("write failed: " + path);
}

}  // namespace sbnet

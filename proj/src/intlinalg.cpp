#include "sol/intlinalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

namespace sol {

std::string to_text(const Mat2Z &m) {
  std::ostringstream os;
  os << m(0, 0) << ' ' << m(0, 1) << "; " << m(1, 0) << ' ' << m(1, 1);
  return os.str();
}

namespace {

constexpr std::int64_t kEntryLimit = std::numeric_limits<std::int32_t>::max();

std::int64_t checked_entry(long long v) {
  if (v > kEntryLimit || v < -kEntryLimit)
    throw ParseError("matrix entry " + std::to_string(v) + " exceeds the supported range +-" +
                     std::to_string(kEntryLimit));
  return v;
}

std::vector<std::int64_t> parse_row(const std::string &row) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < row.size()) {
    const char ch = row[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    if (row[j] == '-' || row[j] == '+')
      ++j;
    const std::size_t digits = j;
    while (j < row.size() && std::isdigit(static_cast<unsigned char>(row[j])))
      ++j;
    if (j == digits)
      throw ParseError("unexpected character '" + std::string(1, ch) + "' in matrix text");
    const std::string token = row.substr(i, j - i);
    long long v = 0;
    try {
      v = std::stoll(token);
    } catch (const std::out_of_range &) {
      throw ParseError("matrix entry " + token + " is out of range");
    }
    out.push_back(checked_entry(v));
    i = j;
  }
  return out;
}

Mat2Z parse_json_mat2(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("malformed JSON matrix: ") + e.what());
  }
  if (!j.is_array() || j.size() != 2)
    throw ParseError("JSON matrix must be [[r,s],[t,u]]");
  Mat2Z m;
  for (int i = 0; i < 2; ++i) {
    if (!j[i].is_array() || j[i].size() != 2)
      throw ParseError("JSON matrix must be [[r,s],[t,u]]");
    for (int k = 0; k < 2; ++k) {
      if (!j[i][k].is_number_integer())
        throw ParseError("JSON matrix entries must be integers");
      m(i, k) = checked_entry(j[i][k].get<long long>());
    }
  }
  return m;
}

} // namespace

Mat2Z parse_mat2(const std::string &text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw ParseError("empty matrix text");
  if (text[first] == '[')
    return parse_json_mat2(text);

  const auto semi = text.find(';');
  if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
    throw ParseError("matrix text must have exactly two rows separated by ';'");
  const auto top = parse_row(text.substr(0, semi));
  const auto bottom = parse_row(text.substr(semi + 1));
  if (top.size() != 2 || bottom.size() != 2)
    throw ParseError("each matrix row must have exactly two integers");
  return mat2(top[0], top[1], bottom[0], bottom[1]);
}

// ---------------------------------------------------------------------------

BigInt AbelianGroup::torsion_order() const {
  BigInt order = 1;
  for (const BigInt &d : invariant_factors)
    order *= d;
  return order;
}

AbelianGroup abelian_group_from_cyclic(const std::vector<BigInt> &orders) {
  AbelianGroup g;
  std::map<std::uint64_t, std::vector<unsigned>> primary;
  for (const BigInt &n : orders) {
    if (n == 0) {
      ++g.free_rank;
      continue;
    }
    const BigInt a = abs(n);
    if (a > std::numeric_limits<std::int64_t>::max())
      throw OverflowError("cyclic order too large to factor");
    for (const auto &[p, e] : factorize(static_cast<std::int64_t>(a)))
      primary[p].push_back(e);
  }
  std::size_t count = 0;
  for (auto &[p, exps] : primary) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    count = std::max(count, exps.size());
  }
  // largest factor collects the top power of every prime, and so on down
  std::vector<BigInt> factors(count, BigInt(1));
  for (const auto &[p, exps] : primary)
    for (std::size_t i = 0; i < exps.size(); ++i)
      factors[count - 1 - i] *= boost::multiprecision::pow(BigInt(p), exps[i]);
  g.invariant_factors = std::move(factors);
  return g;
}

std::string to_text(const AbelianGroup &g) {
  std::string out;
  auto add = [&](const std::string &s) {
    if (!out.empty())
      out += " + ";
    out += s;
  };
  for (std::size_t i = 0; i < g.free_rank; ++i)
    add("Z");
  for (const BigInt &d : g.invariant_factors)
    add("Z_" + d.str());
  return out.empty() ? "0" : out;
}

std::string to_dotted(const AbelianGroup &g) {
  std::string out;
  for (const BigInt &d : g.invariant_factors)
    out += (out.empty() ? "" : ".") + d.str();
  for (std::size_t i = 0; i < g.free_rank; ++i)
    out += out.empty() ? "0" : ".0";
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

/// Position of the nonzero entry of least absolute value in m[k.., k..].
bool min_pivot(const IntMatrix &m, Eigen::Index k, Eigen::Index &pi, Eigen::Index &pj) {
  bool found = false;
  BigInt best;
  for (Eigen::Index i = k; i < m.rows(); ++i)
    for (Eigen::Index j = k; j < m.cols(); ++j) {
      if (m(i, j) == 0)
        continue;
      const BigInt a = abs(m(i, j));
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

} // namespace

std::vector<BigInt> smith_diagonal(IntMatrix m) {
  const Eigen::Index n = std::min(m.rows(), m.cols());
  std::vector<BigInt> diag(static_cast<std::size_t>(n), BigInt(0));
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pi = 0, pj = 0;
    if (!min_pivot(m, k, pi, pj))
      break;
    for (;;) {
      m.row(k).swap(m.row(pi));
      m.col(k).swap(m.col(pj));
      const BigInt pivot = m(k, k);

      bool clean = true;
      for (Eigen::Index i = k + 1; i < m.rows(); ++i) {
        if (m(i, k) == 0)
          continue;
        const BigInt q = m(i, k) / pivot;
        m.row(i) -= q * m.row(k);
        clean = clean && m(i, k) == 0;
      }
      for (Eigen::Index j = k + 1; j < m.cols(); ++j) {
        if (m(k, j) == 0)
          continue;
        const BigInt q = m(k, j) / pivot;
        m.col(j) -= q * m.col(k);
        clean = clean && m(k, j) == 0;
      }
      if (!clean) {
        // a remainder smaller than the pivot survives in row or column k
        min_pivot(m, k, pi, pj);
        continue;
      }

      bool divides = true;
      for (Eigen::Index i = k + 1; i < m.rows() && divides; ++i)
        for (Eigen::Index j = k + 1; j < m.cols(); ++j)
          if (m(i, j) % pivot != 0) {
            m.row(k) += m.row(i);
            divides = false;
            break;
          }
      if (!divides) {
        pi = k;
        pj = k;
        continue;
      }
      break;
    }
    diag[static_cast<std::size_t>(k)] = abs(m(k, k));
  }
  return diag;
}

namespace detail {

AbelianGroup smith_reduce(IntMatrix m) {
  const auto cols = static_cast<std::size_t>(m.cols());
  AbelianGroup g;
  std::size_t rank = 0;
  for (const BigInt &d : smith_diagonal(std::move(m))) {
    if (d == 0)
      continue;
    ++rank;
    if (d != 1)
      g.invariant_factors.push_back(d);
  }
  g.free_rank = cols - rank;
  return g;
}

} // namespace detail

// ---------------------------------------------------------------------------

FactorMap factorize(std::int64_t x) {
  if (x < 1)
    throw DomainError("factorize requires a positive integer, got " + std::to_string(x));
  FactorMap out;
  auto n = static_cast<std::uint64_t>(x);
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e)
      out.emplace_back(p, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

unsigned valuation(std::int64_t x, std::uint64_t p) {
  if (x == 0)
    throw DomainError("valuation of zero is undefined");
  if (p < 2)
    throw DomainError("valuation base must be a prime");
  std::uint64_t n = x < 0 ? 0 - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::int64_t ipow(std::int64_t base, unsigned exp) {
  std::int64_t out = 1;
  for (unsigned i = 0; i < exp; ++i)
    out = checked_mul(out, base);
  return out;
}

std::int64_t part_supported_on(std::int64_t x, std::int64_t primes_of) {
  if (primes_of < 1)
    throw DomainError("prime support must come from a positive integer");
  std::int64_t part = 1;
  for (const auto &[p, e] : factorize(primes_of))
    part = checked_mul(part, ipow(static_cast<std::int64_t>(p), valuation(x, p)));
  return part;
}

} // namespace sol

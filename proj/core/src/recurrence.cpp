#include "slope_kernel/recurrence.hpp"

#include <cstdint>
#include <sstream>

namespace slope_kernel {
namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

constexpr std::size_t kMargin = 4;
constexpr int kMaxPrimes = 4000;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e > 0) {
    if (e & 1) {
      r = mulmod(r, a, p);
    }
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 mod_of(const BigInt& x, u64 p) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), BigInt(std::to_string(p)).get_mpz_t());
  return std::stoull(r.get_str());
}

struct ModularNullspace {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  std::vector<u64> vector;  // empty when the nullspace is trivial
};

// Row reduction of a dense matrix over F_p. The returned vector is the
// canonical kernel element with the last free column set to 1.
ModularNullspace nullspace_mod(std::vector<std::vector<u64>> a, std::size_t cols, u64 p) {
  ModularNullspace out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.size() && a[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == a.size()) {
      continue;
    }
    std::swap(a[row], a[pivot]);
    const u64 inv = powmod(a[row][col], p - 2, p);
    for (std::size_t j = col; j < cols; ++j) {
      a[row][j] = mulmod(a[row][j], inv, p);
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) {
        continue;
      }
      const u64 f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        a[i][j] = (a[i][j] + p - mulmod(f, a[row][j], p)) % p;
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  if (out.rank == cols) {
    return out;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : out.pivots) {
    is_pivot[c] = true;
  }
  std::size_t free_col = cols;
  while (is_pivot[free_col - 1]) {
    --free_col;
  }
  --free_col;
  out.vector.assign(cols, 0);
  out.vector[free_col] = 1;
  for (std::size_t r = 0; r < out.rank; ++r) {
    out.vector[out.pivots[r]] = (p - a[r][free_col]) % p;
  }
  return out;
}

// p/q with |p|, |q| <= sqrt(m / 2) and p = q x mod m, if one exists.
std::optional<Rational> rational_reconstruction(const BigInt& x, const BigInt& m) {
  BigInt bound;
  mpz_sqrt(bound.get_mpz_t(), BigInt(m / 2).get_mpz_t());
  BigInt r0 = m;
  BigInt r1 = x;
  BigInt t0 = 0;
  BigInt t1 = 1;
  while (r1 > bound) {
    const BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) {
    return std::nullopt;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) {
    return std::nullopt;
  }
  return make_rational(r1, t1);
}

struct Shape {
  int r;
  int d;
  std::size_t unknowns() const { return static_cast<std::size_t>((r + 1) * (d + 1)); }
  // Unknown (i, j) multiplies n^j a_{n+i}.
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * (d + 1) + j); }
};

std::vector<std::vector<u64>> modular_system(const std::vector<u64>& a_mod, const Shape& s, int offset,
                                             std::size_t rows, u64 p) {
  std::vector<std::vector<u64>> m(rows, std::vector<u64>(s.unknowns()));
  for (std::size_t row = 0; row < rows; ++row) {
    const u64 n = (static_cast<u64>(static_cast<long long>(row) + offset) % p + p) % p;
    u64 power = 1;
    for (int j = 0; j <= s.d; ++j) {
      for (int i = 0; i <= s.r; ++i) {
        m[row][s.index(i, j)] = mulmod(power, a_mod[row + static_cast<std::size_t>(i)], p);
      }
      power = mulmod(power, n, p);
    }
  }
  return m;
}

BigInt relation_value(const std::vector<BigInt>& v, const Shape& s, const std::vector<BigInt>& terms,
                      int offset, std::size_t row) {
  const BigInt n = static_cast<long>(row) + offset;
  BigInt total = 0;
  for (int i = 0; i <= s.r; ++i) {
    BigInt poly = 0;
    for (int j = s.d; j >= 0; --j) {
      poly = poly * n + v[s.index(i, j)];
    }
    total += poly * terms[row + static_cast<std::size_t>(i)];
  }
  return total;
}

PRecurrence to_recurrence(std::vector<BigInt> v, const Shape& s, int offset) {
  BigInt g = 0;
  for (const BigInt& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  // Sign: leading coefficient of the polynomial at a_{n+r} positive.
  int sign = 0;
  for (int j = s.d; j >= 0 && sign == 0; --j) {
    sign = sgn(v[s.index(s.r, j)]);
  }
  if (sign < 0) {
    g = -g;
  }
  PRecurrence rec;
  rec.order = s.r;
  rec.offset = offset;
  rec.coeffs.assign(static_cast<std::size_t>(s.r + 1), std::vector<Rational>(static_cast<std::size_t>(s.d + 1)));
  int degree = 0;
  for (int i = 0; i <= s.r; ++i) {
    for (int j = 0; j <= s.d; ++j) {
      const BigInt x = v[s.index(i, j)] / g;
      // c_0 sits at a_{n+r}; the others move to the right-hand side.
      rec.coeffs[static_cast<std::size_t>(s.r - i)][static_cast<std::size_t>(j)] =
          i == s.r ? Rational(x) : Rational(-x);
      if (x != 0) {
        degree = std::max(degree, j);
      }
    }
  }
  for (auto& c : rec.coeffs) {
    c.resize(static_cast<std::size_t>(degree + 1));
  }
  rec.degree = degree;
  return rec;
}

// Lifts the canonical modular kernel vector to Z and checks it exactly.
std::optional<PRecurrence> lift(const std::vector<BigInt>& terms, const Shape& s, int offset,
                                std::size_t fit_rows, const ModularNullspace& first, u64 first_prime) {
  const std::size_t unknowns = s.unknowns();
  std::vector<BigInt> residues(unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) {
    residues[k] = static_cast<unsigned long>(first.vector[k]);
  }
  BigInt modulus = static_cast<unsigned long>(first_prime);
  BigInt prime = modulus;
  std::vector<Rational> previous;
  for (int attempt = 0; attempt < kMaxPrimes; ++attempt) {
    std::vector<Rational> candidate;
    for (std::size_t k = 0; k < unknowns; ++k) {
      auto q = rational_reconstruction(residues[k], modulus);
      if (!q) {
        break;
      }
      candidate.push_back(*q);
    }
    if (candidate.size() == unknowns && candidate == previous) {
      BigInt lcm = 1;
      for (const Rational& q : candidate) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
      }
      std::vector<BigInt> v;
      for (const Rational& q : candidate) {
        v.emplace_back(q.get_num() * (lcm / q.get_den()));
      }
      bool fits = true;
      for (std::size_t row = 0; row < fit_rows && fits; ++row) {
        fits = relation_value(v, s, terms, offset, row) == 0;
      }
      if (fits) {
        const std::size_t all_rows = terms.size() - static_cast<std::size_t>(s.r);
        for (std::size_t row = fit_rows; row < all_rows; ++row) {
          if (relation_value(v, s, terms, offset, row) != 0) {
            return std::nullopt;
          }
        }
        return to_recurrence(std::move(v), s, offset);
      }
    }
    if (candidate.size() == unknowns) {
      previous = std::move(candidate);
    }

    // Next good prime: same pivot structure as the first one.
    ModularNullspace ns;
    u64 p = 0;
    do {
      mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
      p = std::stoull(prime.get_str());
      std::vector<u64> a_mod;
      for (const BigInt& t : terms) {
        a_mod.push_back(mod_of(t, p));
      }
      ns = nullspace_mod(modular_system(a_mod, s, offset, fit_rows, p), unknowns, p);
      if (ns.rank > first.rank) {
        return std::nullopt;  // the first prime was unlucky; the rank over Q is larger
      }
    } while (ns.rank != first.rank || ns.pivots != first.pivots);

    const BigInt bp = static_cast<unsigned long>(p);
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), bp.get_mpz_t());
    for (std::size_t k = 0; k < unknowns; ++k) {
      // x = r + M * ((v - r) * M^-1 mod p)
      BigInt delta = (BigInt(static_cast<unsigned long>(ns.vector[k])) - residues[k]) * inv;
      mpz_fdiv_r(delta.get_mpz_t(), delta.get_mpz_t(), bp.get_mpz_t());
      residues[k] += modulus * delta;
    }
    modulus *= bp;
  }
  return std::nullopt;
}

std::size_t fit_count(std::size_t total) { return total - total / 3; }

}  // namespace

Rational PRecurrence::c(int i, const BigInt& n) const {
  Rational v = 0;
  const auto& poly = coeffs.at(static_cast<std::size_t>(i));
  for (std::size_t j = poly.size(); j-- > 0;) {
    v = v * n + poly[j];
  }
  return v;
}

Rational PRecurrence::predict(const std::vector<BigInt>& terms, int n) const {
  const auto base = static_cast<std::size_t>(n - offset);
  if (n < offset || base + static_cast<std::size_t>(order) > terms.size()) {
    throw std::out_of_range("not enough terms to predict");
  }
  const BigInt nn = n;
  const Rational lead = c(0, nn);
  if (lead == 0) {
    throw std::domain_error("leading coefficient vanishes at n = " + std::to_string(n));
  }
  Rational rhs = 0;
  for (int i = 1; i <= order; ++i) {
    rhs += c(i, nn) * terms[base + static_cast<std::size_t>(order - i)];
  }
  return Rational(rhs / lead);
}

bool PRecurrence::holds_on(const std::vector<BigInt>& terms) const {
  for (std::size_t base = 0; base + static_cast<std::size_t>(order) < terms.size(); ++base) {
    const BigInt n = static_cast<long>(base) + offset;
    Rational lhs = c(0, n) * terms[base + static_cast<std::size_t>(order)];
    for (int i = 1; i <= order; ++i) {
      lhs -= c(i, n) * terms[base + static_cast<std::size_t>(order - i)];
    }
    if (lhs != 0) {
      return false;
    }
  }
  return true;
}

std::string PRecurrence::to_string() const {
  auto poly = [](const std::vector<Rational>& p) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = p.size(); j-- > 0;) {
      if (p[j] == 0) {
        continue;
      }
      out << (first ? "" : " + ") << "(" << p[j].get_str() << ")";
      if (j > 0) {
        out << "*n" << (j > 1 ? "^" + std::to_string(j) : "");
      }
      first = false;
    }
    return first ? std::string("0") : out.str();
  };
  std::ostringstream out;
  out << "[" << poly(coeffs[0]) << "] a(n+" << order << ") =";
  for (int i = 1; i <= order; ++i) {
    out << (i > 1 ? " +" : "") << " [" << poly(coeffs[static_cast<std::size_t>(i)]) << "] a(n+" << order - i
        << ")";
  }
  return out.str();
}

std::size_t required_terms(int max_order, int max_degree) {
  if (max_order < 1 || max_degree < 0) {
    throw std::invalid_argument("need max_order >= 1 and max_degree >= 0");
  }
  const std::size_t need = static_cast<std::size_t>((max_order + 1) * (max_degree + 1)) + kMargin;
  std::size_t total = static_cast<std::size_t>(max_order) + 1;
  while (fit_count(total) < need + static_cast<std::size_t>(max_order) || total / 3 < 2) {
    ++total;
  }
  return total;
}

std::optional<PRecurrence> guess_precurrence(const std::vector<BigInt>& terms, const GuessOptions& options) {
  const std::size_t need = required_terms(options.max_order, options.max_degree);
  if (terms.size() < need) {
    throw InsufficientTermsError("recurrence search up to order " + std::to_string(options.max_order) +
                                 " and degree " + std::to_string(options.max_degree) + " needs " +
                                 std::to_string(need) + " terms, got " + std::to_string(terms.size()));
  }
  const std::size_t fit = fit_count(terms.size());
  BigInt prime = BigInt(1) << 62;
  mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
  const u64 p = std::stoull(prime.get_str());
  std::vector<u64> a_mod;
  for (const BigInt& t : terms) {
    a_mod.push_back(mod_of(t, p));
  }
  for (int r = 1; r <= options.max_order; ++r) {
    const std::size_t rows = fit - static_cast<std::size_t>(r);
    for (int d = 0; d <= options.max_degree; ++d) {
      const Shape s{r, d};
      const ModularNullspace ns = nullspace_mod(modular_system(a_mod, s, options.offset, rows, p), s.unknowns(), p);
      if (ns.rank == s.unknowns()) {
        continue;  // no relation of this shape over Q either
      }
      if (auto rec = lift(terms, s, options.offset, rows, ns, p)) {
        return rec;
      }
    }
  }
  return std::nullopt;
}

}  // namespace slope_kernel

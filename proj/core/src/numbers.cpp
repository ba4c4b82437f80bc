#include "hankeldet/numbers.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "hankeldet/error.hpp"

namespace hankeldet {

namespace {

struct Table {
  std::mutex mu;
  std::vector<Rational> values;
};

Table& bernoulli_table() {
  static Table t;
  return t;
}

Table& euler_table() {
  static Table t;
  return t;
}

void require_nonnegative(long n, const char* what) {
  if (n < 0) throw Error(ErrorCode::InvalidParameters, std::string(what) + " index must be nonnegative");
}

// Next Bernoulli number given B_0..B_{n-1}.
Rational next_bernoulli(const std::vector<Rational>& b) {
  const long n = static_cast<long>(b.size());
  if (n == 0) return Rational(1);
  Rational sum;
  for (long j = 0; j < n; ++j) {
    if (!b[j].is_zero()) sum += binomial(n + 1, j) * b[j];
  }
  return -sum / Rational(n + 1);
}

// Next Euler number given E_0..E_{n-1}.
Rational next_euler(const std::vector<Rational>& e) {
  const long n = static_cast<long>(e.size());
  if (n == 0) return Rational(1);
  if (n % 2 == 1) return Rational(0);
  Rational sum;
  for (long k = 0; k < n; k += 2) sum += binomial(n, k) * e[k];
  return -sum;
}

template <typename Next>
Rational memo_lookup(Table& t, long n, Next next) {
  std::lock_guard lock(t.mu);
  while (static_cast<long>(t.values.size()) <= n) t.values.push_back(next(t.values));
  return t.values[static_cast<std::size_t>(n)];
}

}  // namespace

Rational bernoulli_number(long n) {
  require_nonnegative(n, "Bernoulli");
  return memo_lookup(bernoulli_table(), n, next_bernoulli);
}

Rational euler_number(long n) {
  require_nonnegative(n, "Euler");
  return memo_lookup(euler_table(), n, next_euler);
}

UniPoly bernoulli_poly(long n) {
  require_nonnegative(n, "Bernoulli polynomial");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j) c[static_cast<std::size_t>(n - j)] = binomial(n, j) * bernoulli_number(j);
  return UniPoly(std::move(c));
}

UniPoly euler_poly(long n) {
  require_nonnegative(n, "Euler polynomial");
  const UniPoly shifted = UniPoly::linear(Rational(1), Rational(-1, 2));
  std::vector<UniPoly> powers{UniPoly(Rational(1))};
  for (long i = 1; i <= n; ++i) powers.push_back(powers.back() * shifted);
  UniPoly result;
  for (long j = 0; j <= n; ++j) {
    const Rational e = euler_number(j);
    if (e.is_zero()) continue;
    result += powers[static_cast<std::size_t>(n - j)] * (binomial(n, j) * e / Rational(2).pow(j));
  }
  return result;
}

Rational zigzag_number(long n) {
  require_nonnegative(n, "zigzag");
  const long k = n / 2;
  const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
  if (n % 2 == 0) return sign * euler_number(n);
  return sign * Rational(2).pow(n) * euler_poly(n)(Rational(1));
}

Rational tangent_number(long k) {
  if (k < 1) throw Error(ErrorCode::InvalidParameters, "tangent numbers start at k = 1");
  const Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
  return sign * Rational(2).pow(2 * k) * (Rational(2).pow(2 * k) - 1) / Rational(2 * k) * bernoulli_number(2 * k);
}

Rational power_sum(long s, long k) {
  if (s < 1) throw Error(ErrorCode::InvalidParameters, "power sum needs s >= 1");
  require_nonnegative(k, "power sum");
  if (k == 0) return Rational(0);
  Rational sum;
  for (long j = 1; j <= s; ++j) sum += Rational(j).pow(k - 1);
  return Rational(k) * sum;
}

Rational alt_power_sum(long s, long k) {
  if (s < 1) throw Error(ErrorCode::InvalidParameters, "alternating power sum needs s >= 1");
  require_nonnegative(k, "alternating power sum");
  Rational sum;
  for (long j = 1; j <= s; ++j) {
    const Rational term = Rational(j).pow(k);
    if (j % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

namespace {

template <typename Next>
std::size_t load_table(Table& t, const std::filesystem::path& file, Next next) {
  std::ifstream in(file);
  if (!in) return 0;
  std::vector<Rational> loaded;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    long index = -1;
    std::string value;
    if (!(ls >> index >> value) || index != static_cast<long>(loaded.size())) break;
    Rational v;
    try {
      v = Rational::parse(value);
    } catch (const Error&) {
      break;
    }
    if (v != next(loaded)) break;
    loaded.push_back(std::move(v));
  }
  const std::size_t accepted = loaded.size();
  std::lock_guard lock(t.mu);
  if (accepted > t.values.size()) t.values = std::move(loaded);
  return accepted;
}

void save_table(Table& t, const std::filesystem::path& file) {
  std::vector<Rational> snapshot;
  {
    std::lock_guard lock(t.mu);
    snapshot = t.values;
  }
  std::ofstream out(file);
  if (!out) throw Error(ErrorCode::InvalidParameters, "cannot write " + file.string());
  for (std::size_t i = 0; i < snapshot.size(); ++i) out << i << ' ' << snapshot[i].to_string() << '\n';
}

}  // namespace

std::size_t load_number_tables(const std::filesystem::path& dir) {
  return load_table(bernoulli_table(), dir / "bernoulli.txt", next_bernoulli) +
         load_table(euler_table(), dir / "euler.txt", next_euler);
}

void save_number_tables(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  save_table(bernoulli_table(), dir / "bernoulli.txt");
  save_table(euler_table(), dir / "euler.txt");
}

}  // namespace hankeldet

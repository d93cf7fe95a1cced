#include "superjac/finite_field.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <unordered_map>

#include "superjac/kernels.hpp"

namespace superjac {

namespace {

u64 env_u64(const char* name, u64 fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  unsigned long long x = std::strtoull(v, &end, 0);
  if (end == v || *end) throw std::invalid_argument(std::string("bad value for ") + name);
  return x;
}

using Poly = std::vector<u32>;

// out = a * b mod f (f monic of degree m, a and b of length m). Requires p < 2^20.
void mulmod_raw(const u32* a, const u32* b, const u32* f, unsigned m, u64 p, u32* out) {
  if (m == 1) {
    out[0] = static_cast<u32>(u64(a[0]) * b[0] % p);
    return;
  }
  u64 t[128];
  std::vector<u64> big;
  u64* acc = t;
  if (2 * m - 1 > 128) {
    big.assign(2 * m - 1, 0);
    acc = big.data();
  } else {
    std::fill(t, t + 2 * m - 1, 0);
  }
  for (unsigned i = 0; i < m; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < m; ++j) acc[i + j] += u64(a[i]) * b[j];
  }
  for (unsigned k = 2 * m - 2; k >= m; --k) {
    u64 c = acc[k] % p;
    if (c) {
      for (unsigned j = 0; j < m; ++j) acc[k - m + j] += c * (p - f[j]);
    }
  }
  for (unsigned i = 0; i < m; ++i) out[i] = static_cast<u32>(acc[i] % p);
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  unsigned m = static_cast<unsigned>(f.size() - 1);
  Poly out(m);
  mulmod_raw(a.data(), b.data(), f.data(), m, p, out.data());
  return out;
}

Poly powmod_poly(Poly base, u64 e, const Poly& f, u64 p) {
  unsigned m = static_cast<unsigned>(f.size() - 1);
  Poly r(m, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly x_poly(unsigned m, u64 p, const Poly& f) {
  Poly x(m, 0);
  if (m == 1)
    x[0] = static_cast<u32>((p - f[0]) % p);  // root of x + f0
  else
    x[1] = 1;
  return x;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// gcd over F_p of two polynomials (trimmed, constant-first)
Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    u64 inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
      u64 c = u64(a.back()) * inv % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j)
        a[shift + j] = static_cast<u32>((a[shift + j] + (p - c) * b[j]) % p);
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

bool is_one_poly(const Poly& a) {
  if (a.empty() || a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i]) return false;
  return true;
}

std::recursive_mutex& modulus_mutex() {
  static std::recursive_mutex mu;
  return mu;
}
std::map<std::pair<u64, unsigned>, Poly>& modulus_cache() {
  static std::map<std::pair<u64, unsigned>, Poly> cache;
  return cache;
}

constexpr u64 kMaxConcreteSize = u64(1) << 62;

Poly conway_search(u64 p, unsigned m);

const Poly& conway(u64 p, unsigned m) {
  std::lock_guard<std::recursive_mutex> lock(modulus_mutex());
  auto key = std::make_pair(p, m);
  auto& cache = modulus_cache();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Poly f = conway_search(p, m);
  return cache.emplace(key, std::move(f)).first->second;
}

// Lexicographically least (c_1, ..., c_m) with f = x^m + sum (-1)^k c_k x^{m-k}
// irreducible, primitive, and compatible with every proper subfield.
Poly conway_search(u64 p, unsigned m) {
  if (!ipow_fits(p, m, kMaxConcreteSize)) throw BudgetExceeded("field too large for concrete arithmetic");
  const u64 size = ipow(p, m);
  const u64 N = size - 1;
  const Factorization nf = factor(N);
  std::vector<unsigned> sub;
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) sub.push_back(d);
  std::vector<const Poly*> sub_mod;
  for (unsigned d : sub) sub_mod.push_back(&conway(p, d));
  std::vector<unsigned> m_primes;
  for (u64 l : prime_divisors(m == 1 ? 1 : m)) m_primes.push_back(static_cast<unsigned>(l));

  std::vector<u32> c(m + 1, 0);  // c[1..m]
  Poly f(m + 1, 0);
  while (true) {
    // advance counter, c_m is least significant
    unsigned pos = m;
    while (pos >= 1) {
      if (++c[pos] < p) break;
      c[pos] = 0;
      --pos;
    }
    if (pos == 0) break;
    if (c[m] == 0) continue;
    f[m] = 1;
    for (unsigned k = 1; k <= m; ++k) f[m - k] = (k % 2 == 0) ? c[k] : static_cast<u32>((p - c[k]) % p);
    Poly x = x_poly(m, p, f);
    if (m > 1) {
      // Rabin irreducibility: x^{p^m} = x and gcd(x^{p^{m/l}} - x, f) = 1
      std::vector<Poly> frob(m + 1);
      frob[0] = x;
      for (unsigned j = 1; j <= m; ++j) frob[j] = powmod_poly(frob[j - 1], p, f, p);
      if (frob[m] != x) continue;
      bool irreducible = true;
      for (unsigned l : m_primes) {
        Poly h = frob[m / l];
        h[1] = static_cast<u32>((h[1] + p - 1) % p);
        if (poly_gcd(h, f, p).size() != 1) {
          irreducible = false;
          break;
        }
      }
      if (!irreducible) continue;
    }
    // primitivity of x
    bool primitive = true;
    for (auto& [l, e] : nf) {
      Poly y = powmod_poly(x, N / l, f, p);
      if (is_one_poly(y)) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    // norm compatibility: f_d(x^{(p^m-1)/(p^d-1)}) = 0
    bool compatible = true;
    for (std::size_t s = 0; s < sub.size() && compatible; ++s) {
      unsigned d = sub[s];
      u64 e = N / (ipow(p, d) - 1);
      Poly y = powmod_poly(x, e, f, p);
      const Poly& fd = *sub_mod[s];
      Poly acc(m, 0);
      for (int k = static_cast<int>(d); k >= 0; --k) {
        acc = mulmod(acc, y, f, p);
        acc[0] = static_cast<u32>((acc[0] + fd[k]) % p);
      }
      for (u32 v : acc)
        if (v) {
          compatible = false;
          break;
        }
    }
    if (!compatible) continue;
    return f;
  }
  throw std::logic_error("no Conway-style polynomial found");
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  b.field_elements = env_u64("SUPERJAC_FIELD_BUDGET", b.field_elements);
  b.transform_elements = env_u64("SUPERJAC_TRANSFORM_BUDGET", b.transform_elements);
  b.orbit_elements = env_u64("SUPERJAC_ORBIT_BUDGET", b.orbit_elements);
  return b;
}

// ---------------- Field ----------------

Field::Field(u64 p, unsigned m, std::vector<u32> modulus, u64 twist, const FieldTower* tower)
    : p_(p), m_(m), size_(ipow(p, m)), modulus_(std::move(modulus)), twist_(twist), tower_(tower) {
  u64 N = size_ - 1;
  unit_factors_ = factor(N);
  if (N > 1 && gcd_u64(twist_ % N, N) != 1) throw std::invalid_argument("generator twist not coprime to |F^x|");
  twist_inv_ = N == 1 ? 0 : invmod(twist_ % N, N);
  trace_form_.assign(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    std::vector<u32> xi = xpow(u64(i));
    std::vector<u32> acc(m_, 0), cur = xi;
    for (unsigned j = 0; j < m_; ++j) {
      for (unsigned k = 0; k < m_; ++k) acc[k] = static_cast<u32>((acc[k] + cur[k]) % p_);
      // cur = cur^p
      std::vector<u32> base = cur, r(m_, 0);
      r[0] = 1;
      u64 e = p_;
      while (e) {
        if (e & 1) {
          std::vector<u32> t(m_);
          mul(r.data(), base.data(), t.data());
          r = t;
        }
        std::vector<u32> t(m_);
        mul(base.data(), base.data(), t.data());
        base = t;
        e >>= 1;
      }
      cur = r;
    }
    trace_form_[i] = acc[0];
  }
}

std::string Field::id() const {
  return "F_" + std::to_string(p_) + "^" + std::to_string(m_) + (twist_ == 1 ? "" : "/t" + std::to_string(twist_));
}

void Field::mul(const u32* a, const u32* b, u32* out) const { mulmod_raw(a, b, modulus_.data(), m_, p_, out); }

void Field::mul_by_x(u32* a) const {
  if (m_ == 1) {
    a[0] = static_cast<u32>(u64(a[0]) * ((p_ - modulus_[0]) % p_) % p_);
    return;
  }
  u64 top = a[m_ - 1];
  for (unsigned i = m_ - 1; i > 0; --i) a[i] = a[i - 1];
  a[0] = 0;
  if (top) {
    for (unsigned i = 0; i < m_; ++i) a[i] = static_cast<u32>((a[i] + top * (p_ - modulus_[i])) % p_);
  }
}

std::vector<u32> Field::xpow(u64 k) const { return xpow(mpz_class(static_cast<unsigned long>(k))); }

std::vector<u32> Field::xpow(const mpz_class& kk) const {
  mpz_class k = kk % mpz_class(static_cast<unsigned long>(unit_order()));
  if (k < 0) k += static_cast<unsigned long>(unit_order());
  std::vector<u32> base = x_poly(m_, p_, modulus_), r(m_, 0), t(m_);
  r[0] = 1;
  std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  if (k == 0) return r;
  for (std::size_t i = bits; i-- > 0;) {
    mul(r.data(), r.data(), t.data());
    r.swap(t);
    if (mpz_tstbit(k.get_mpz_t(), i)) {
      mul(r.data(), base.data(), t.data());
      r.swap(t);
    }
  }
  return r;
}

u64 Field::index_of(const u32* c) const {
  u64 idx = 0;
  for (unsigned i = m_; i-- > 0;) idx = idx * p_ + c[i];
  return idx;
}

void Field::coeffs_of(u64 index, u32* c) const {
  for (unsigned i = 0; i < m_; ++i) {
    c[i] = static_cast<u32>(index % p_);
    index /= p_;
  }
}

const std::vector<std::uint16_t>& Field::trace_table() const {
  std::call_once(trace_once_, [this] {
    if (p_ > 65535) throw std::invalid_argument("trace table needs p < 2^16");
    const u64 N = unit_order();
    trace_table_.assign(N, 0);
    constexpr std::size_t B = 4096;
    std::vector<u32> digits(std::size_t(m_) * B), out(B), cur(m_, 0);
    cur[0] = 1;
    for (u64 start = 0; start < N; start += B) {
      std::size_t cnt = static_cast<std::size_t>(std::min<u64>(B, N - start));
      for (std::size_t e = 0; e < cnt; ++e) {
        for (unsigned d = 0; d < m_; ++d) digits[d * cnt + e] = cur[d];
        mul_by_x(cur.data());
      }
      kernels::linear_forms_mod_p(digits.data(), m_, cnt, trace_form_.data(), 1, static_cast<u32>(p_), out.data());
      for (std::size_t e = 0; e < cnt; ++e) trace_table_[start + e] = static_cast<std::uint16_t>(out[e]);
    }
  });
  return trace_table_;
}

void Field::build_tables() const {
  std::call_once(table_once_, [this] {
    if (size_ > (u64(1) << 27)) throw BudgetExceeded("log tables limited to 2^27 elements");
    const u64 N = unit_order();
    exp_table_.assign(N, 0);
    log_table_.assign(size_, 0xffffffffu);
    std::vector<u32> cur(m_, 0);
    cur[0] = 1;
    for (u64 k = 0; k < N; ++k) {
      u64 idx = index_of(cur.data());
      exp_table_[k] = static_cast<u32>(idx);
      log_table_[idx] = static_cast<u32>(k);
      mul_by_x(cur.data());
    }
  });
}

const std::vector<u32>& Field::log_table() const {
  build_tables();
  return log_table_;
}
const std::vector<u32>& Field::exp_table() const {
  build_tables();
  return exp_table_;
}

// ---------------- FieldElt ----------------

FieldElt::FieldElt(FieldPtr f, std::vector<u32> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  if (c_.size() != f_->degree()) throw std::invalid_argument("coefficient vector length != degree");
  for (auto& v : c_) v = static_cast<u32>(v % f_->p());
}

bool FieldElt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](u32 v) { return v == 0; });
}

bool FieldElt::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](u32 v) { return v == 0; });
}

void FieldElt::check_same(const FieldElt& o) const {
  if (!f_ || !o.f_ || (f_ != o.f_ && (f_->p() != o.f_->p() || f_->degree() != o.f_->degree())))
    throw std::invalid_argument("field mismatch");
}

FieldElt FieldElt::operator+(const FieldElt& o) const {
  check_same(o);
  std::vector<u32> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<u32>((u64(c_[i]) + o.c_[i]) % f_->p());
  return FieldElt(f_, std::move(r));
}

FieldElt FieldElt::operator-(const FieldElt& o) const {
  check_same(o);
  std::vector<u32> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<u32>((u64(c_[i]) + f_->p() - o.c_[i]) % f_->p());
  return FieldElt(f_, std::move(r));
}

FieldElt FieldElt::operator-() const { return zero(f_) - *this; }

FieldElt FieldElt::operator*(const FieldElt& o) const {
  check_same(o);
  std::vector<u32> r(c_.size());
  f_->mul(c_.data(), o.c_.data(), r.data());
  return FieldElt(f_, std::move(r));
}

bool FieldElt::operator==(const FieldElt& o) const {
  check_same(o);
  return c_ == o.c_;
}

FieldElt FieldElt::pow(const mpz_class& ee) const {
  if (is_zero()) {
    if (ee == 0) return one(f_);
    if (ee < 0) throw std::domain_error("zero to a negative power");
    return *this;
  }
  mpz_class N = static_cast<unsigned long>(f_->unit_order());
  mpz_class e = ee % N;
  if (e < 0) e += N;
  std::vector<u32> r(c_.size(), 0), t(c_.size());
  r[0] = 1;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return FieldElt(f_, r);
  for (std::size_t i = bits; i-- > 0;) {
    f_->mul(r.data(), r.data(), t.data());
    r.swap(t);
    if (mpz_tstbit(e.get_mpz_t(), i)) {
      f_->mul(r.data(), c_.data(), t.data());
      r.swap(t);
    }
  }
  return FieldElt(f_, std::move(r));
}

FieldElt FieldElt::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return pow(mpz_class(-1));
}

// ---------------- tower ----------------

std::shared_ptr<FieldTower> FieldTower::get(u64 p, u64 twist) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (twist == 0) throw std::invalid_argument("twist must be positive");
  static std::mutex mu;
  static std::map<std::pair<u64, u64>, std::shared_ptr<FieldTower>> towers;
  std::lock_guard<std::mutex> lock(mu);
  auto& t = towers[{p, twist}];
  if (!t) t = std::shared_ptr<FieldTower>(new FieldTower(p, twist));
  return t;
}

std::vector<u32> FieldTower::conway_modulus(unsigned m) const { return conway(p_, m); }

FieldPtr FieldTower::field(unsigned m) const {
  if (m == 0) throw std::invalid_argument("extension degree must be positive");
  if (p_ > 65535) throw std::invalid_argument("concrete fields need p < 2^16");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (fields_.size() <= m) fields_.resize(m + 1);
  if (!fields_[m]) fields_[m] = std::make_shared<Field>(p_, m, conway_modulus(m), twist_, this);
  return fields_[m];
}

FieldPtr FieldTower::field_checked(unsigned m, const Budget& budget) const {
  if (m == 0) throw std::invalid_argument("extension degree must be positive");
  if (!ipow_fits(p_, m, budget.field_elements)) throw BudgetExceeded("field size exceeds element budget");
  return field(m);
}

// ---------------- constructors ----------------

FieldElt zero(const FieldPtr& f) { return FieldElt(f, std::vector<u32>(f->degree(), 0)); }

FieldElt one(const FieldPtr& f) {
  std::vector<u32> c(f->degree(), 0);
  c[0] = 1;
  return FieldElt(f, c);
}

FieldElt from_int(const FieldPtr& f, i64 v) {
  std::vector<u32> c(f->degree(), 0);
  c[0] = static_cast<u32>(mod_floor(v, static_cast<i64>(f->p())));
  return FieldElt(f, c);
}

FieldElt x_power(const FieldPtr& f, const mpz_class& k) { return FieldElt(f, f->xpow(k)); }

FieldElt generator(const FieldPtr& f) { return x_power(f, mpz_class(static_cast<unsigned long>(f->twist()))); }

FieldElt gen_power(const FieldPtr& f, const mpz_class& e) {
  return x_power(f, e * mpz_class(static_cast<unsigned long>(f->twist())));
}

FieldElt from_index(const FieldPtr& f, u64 idx) {
  if (idx >= f->size()) throw std::out_of_range("element index");
  std::vector<u32> c(f->degree());
  f->coeffs_of(idx, c.data());
  return FieldElt(f, c);
}

// ---------------- operations ----------------

FieldPtr make_field(u64 p, unsigned m, const Budget& budget) {
  if (!is_prime(p)) throw std::invalid_argument("p is not prime");
  if (m == 0) throw std::invalid_argument("m must be positive");
  return FieldTower::get(p)->field_checked(m, budget);
}

u64 element_order(const FieldElt& x) {
  if (x.is_zero()) throw std::domain_error("order of zero");
  const FieldPtr& f = x.field();
  u64 ord = f->unit_order();
  for (auto& [l, e] : f->unit_factorization()) {
    for (int k = 0; k < e; ++k) {
      if (x.pow(ord / l).is_one())
        ord /= l;
      else
        break;
    }
  }
  return ord;
}

bool has_full_order(const FieldElt& x) { return !x.is_zero() && element_order(x) == x.field()->unit_order(); }

bool generator_order_check(const FieldPtr& f) { return has_full_order(generator(f)); }

FieldElt frobenius(const FieldElt& x, i64 t) {
  const FieldPtr& f = x.field();
  i64 s = mod_floor(t, static_cast<i64>(f->degree()));
  FieldElt y = x;
  for (i64 k = 0; k < s; ++k) y = y.pow(f->p());
  return y;
}

namespace {

void check_subfield(const FieldPtr& big, const FieldPtr& sub) {
  if (big->p() != sub->p() || big->degree() % sub->degree() != 0)
    throw std::invalid_argument("not a subfield");
}

}  // namespace

FieldElt embed(const FieldElt& x, const FieldPtr& big) {
  const FieldPtr& sub = x.field();
  check_subfield(big, sub);
  u64 e = big->unit_order() / sub->unit_order();
  FieldElt y = x_power(big, mpz_class(static_cast<unsigned long>(e)));
  FieldElt acc = zero(big), pw = one(big);
  for (unsigned i = 0; i < sub->degree(); ++i) {
    acc = acc + pw * from_int(big, x.coeffs()[i]);
    pw = pw * y;
  }
  return acc;
}

FieldElt restrict_to(const FieldElt& yv, const FieldPtr& sub) {
  const FieldPtr& big = yv.field();
  check_subfield(big, sub);
  const unsigned M = big->degree(), d = sub->degree();
  const u64 p = big->p();
  u64 e = big->unit_order() / sub->unit_order();
  FieldElt y = x_power(big, mpz_class(static_cast<unsigned long>(e)));
  // augmented M x (d + 1) system
  std::vector<std::vector<u64>> a(M, std::vector<u64>(d + 1));
  FieldElt pw = one(big);
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned r = 0; r < M; ++r) a[r][i] = pw.coeffs()[r];
    pw = pw * y;
  }
  for (unsigned r = 0; r < M; ++r) a[r][d] = yv.coeffs()[r];
  unsigned row = 0;
  std::vector<int> pivot_col(M, -1);
  for (unsigned col = 0; col < d && row < M; ++col) {
    unsigned sel = row;
    while (sel < M && a[sel][col] == 0) ++sel;
    if (sel == M) continue;
    std::swap(a[sel], a[row]);
    u64 inv = invmod(a[row][col], p);
    for (auto& v : a[row]) v = v * inv % p;
    for (unsigned r = 0; r < M; ++r) {
      if (r == row || a[r][col] == 0) continue;
      u64 c = a[r][col];
      for (unsigned k = 0; k <= d; ++k) a[r][k] = (a[r][k] + (p - c) * a[row][k]) % p;
    }
    pivot_col[row] = static_cast<int>(col);
    ++row;
  }
  for (unsigned r = row; r < M; ++r)
    if (a[r][d] != 0) throw std::invalid_argument("element is not in the subfield");
  std::vector<u32> c(d, 0);
  for (unsigned r = 0; r < row; ++r) c[pivot_col[r]] = static_cast<u32>(a[r][d]);
  return FieldElt(sub, c);
}

FieldElt trace(const FieldElt& x, const FieldPtr& sub) {
  const FieldPtr& f = x.field();
  check_subfield(f, sub);
  const unsigned d = sub->degree();
  FieldElt acc = zero(f), cur = x;
  for (unsigned k = 0; k < f->degree() / d; ++k) {
    acc = acc + cur;
    cur = frobenius(cur, d);
  }
  return restrict_to(acc, sub);
}

FieldElt norm(const FieldElt& x, const FieldPtr& sub) {
  const FieldPtr& f = x.field();
  check_subfield(f, sub);
  if (x.is_zero()) return zero(sub);
  return restrict_to(x.pow(f->unit_order() / sub->unit_order()), sub);
}

bool is_nth_power(const FieldElt& x, u64 n) {
  if (x.is_zero()) throw std::domain_error("is_nth_power of zero");
  if (n == 0) throw std::invalid_argument("n must be positive");
  u64 N = x.field()->unit_order();
  u64 d = gcd_u64(n, N);
  return x.pow(N / d).is_one();
}

namespace {

// log base x (the modulus root) by Pohlig-Hellman with baby-step/giant-step digits.
u64 log_x_pohlig_hellman(const FieldElt& y) {
  const FieldPtr& f = y.field();
  const u64 N = f->unit_order();
  const FieldElt x = x_power(f, mpz_class(1));
  u128 result = 0, modulus = 1;
  for (auto& [l, e] : f->unit_factorization()) {
    u64 le = ipow(l, static_cast<unsigned>(e));
    u64 cof = N / le;
    FieldElt gl = x.pow(cof);         // order l^e
    FieldElt yl = y.pow(cof);
    FieldElt gamma = gl.pow(le / l);  // order l
    // baby steps for gamma
    u64 s = 1;
    while (s * s < l) ++s;
    std::unordered_map<u64, u64> baby;
    FieldElt cur = one(f);
    for (u64 j = 0; j < s; ++j) {
      baby.emplace(cur.index(), j);
      cur = cur * gamma;
    }
    FieldElt giant = gamma.pow(s).inverse();
    u64 k = 0, lk = 1;
    FieldElt gl_inv = gl.inverse();
    for (int i = 0; i < e; ++i) {
      // h = (yl * gl^{-k})^{l^{e-1-i}}
      FieldElt h = (yl * gl_inv.pow(k)).pow(le / (lk * l));
      u64 digit = 0;
      FieldElt t = h;
      bool found = false;
      for (u64 g = 0; g <= l / s + 1; ++g) {
        auto it = baby.find(t.index());
        if (it != baby.end()) {
          digit = (g * s + it->second) % l;
          found = true;
          break;
        }
        t = t * giant;
      }
      if (!found) throw std::logic_error("discrete log digit not found");
      k += digit * lk;
      lk *= l;
    }
    // CRT merge: result mod modulus, k mod le
    u64 rm = static_cast<u64>(result % le);
    u64 t = superjac::mulmod((k + le - rm) % le, superjac::invmod(static_cast<u64>(modulus % le), le), le);
    result += modulus * t;
    modulus *= le;
  }
  return static_cast<u64>(result % N);
}

}  // namespace

u64 discrete_log(const FieldElt& x) {
  if (x.is_zero()) throw std::domain_error("discrete log of zero");
  const FieldPtr& f = x.field();
  const u64 N = f->unit_order();
  u64 lx;
  if (f->size() <= (u64(1) << 16))
    lx = f->log_table()[x.index()];
  else
    lx = log_x_pohlig_hellman(x);
  return N == 1 ? 0 : static_cast<u64>(static_cast<u128>(lx) * f->twist_inverse() % N);
}

bool exponent_in_subfield(u64 p, const mpz_class& e, unsigned from, unsigned sub) {
  if (from % sub != 0) throw std::invalid_argument("exponent_in_subfield: degree mismatch");
  mpz_class Nf = mpz_pow(p, from) - 1, Ns = mpz_pow(p, sub) - 1;
  mpz_class K = Nf / Ns;
  mpz_class r = e % Nf;
  if (r < 0) r += Nf;
  return r % K == 0;
}

mpz_class transport_exponent(u64 p, const mpz_class& e, unsigned from, unsigned to) {
  unsigned c = static_cast<unsigned>(std::gcd(from, to));
  mpz_class Nf = mpz_pow(p, from) - 1, Nc = mpz_pow(p, c) - 1, Nt = mpz_pow(p, to) - 1;
  mpz_class K = Nf / Nc;
  mpz_class r = e % Nf;
  if (r < 0) r += Nf;
  if (r % K != 0) throw std::invalid_argument("element does not lie in the common subfield");
  mpz_class ec = (r / K) % Nc;
  return ec * (Nt / Nc);
}

}  // namespace superjac

#include "cflab/kernels.hpp"

#include <omp.h>

#include <vector>

namespace cflab::kernels {

namespace {

struct Fraction {
  BigInt p = 0;
  BigInt q = 1;
};

Fraction merge(const Fraction& a, const Fraction& b) {
  if (a.q == b.q) return {a.p + b.p, a.q};
  return {a.p * b.q + b.p * a.q, a.q * b.q};
}

Fraction split(const TermFn& t, long lo, long hi) {
  if (hi - lo == 1) {
    Rational v = t(lo);
    return {v.get_num(), v.get_den()};
  }
  long mid = lo + (hi - lo) / 2;
  return merge(split(t, lo, mid), split(t, mid, hi));
}

Rational reduce(const Fraction& f) { return make_rational(f.p, f.q); }

BigInt floor_scaled(const Rational& v, const BigInt& one) {
  BigInt num = v.get_num() * one, m;
  mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), v.get_den_mpz_t());
  return m;
}

}  // namespace

Rational exact_sum_fold(const TermFn& t, long count) {
  Rational sum = 0;
  for (long i = 0; i < count; ++i) sum += t(i);
  return sum;
}

Rational exact_sum_split(const TermFn& t, long count) {
  if (count <= 0) return 0;
  return reduce(split(t, 0, count));
}

Rational exact_sum_parallel(const TermFn& t, long count) {
  if (count <= 0) return 0;
  const long chunks = std::min<long>(count, 4L * omp_get_max_threads());
  std::vector<Fraction> parts(static_cast<size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 1)
  for (long c = 0; c < chunks; ++c) {
    long lo = count * c / chunks, hi = count * (c + 1) / chunks;
    parts[static_cast<size_t>(c)] = split(t, lo, hi);
  }
  // pairwise tree over the chunk results keeps operand sizes balanced
  while (parts.size() > 1) {
    std::vector<Fraction> next((parts.size() + 1) / 2);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(next.size()); ++i) {
      size_t j = static_cast<size_t>(2 * i);
      next[static_cast<size_t>(i)] = j + 1 < parts.size() ? merge(parts[j], parts[j + 1]) : parts[j];
    }
    parts.swap(next);
  }
  return reduce(parts.front());
}

BigInt fixed_sum_serial(const TermFn& t, long count, long scale) {
  const BigInt one = pow10(scale);
  BigInt sum = 0;
  for (long i = 0; i < count; ++i) sum += floor_scaled(t(i), one);
  return sum;
}

BigInt fixed_sum_parallel(const TermFn& t, long count, long scale) {
  const BigInt one = pow10(scale);
  const int threads = omp_get_max_threads();
  std::vector<BigInt> partial(static_cast<size_t>(threads));
#pragma omp parallel num_threads(threads)
  {
    BigInt local = 0;
#pragma omp for schedule(static)
    for (long i = 0; i < count; ++i) local += floor_scaled(t(i), one);
    partial[static_cast<size_t>(omp_get_thread_num())] = local;
  }
  BigInt sum = 0;
  for (const BigInt& p : partial) sum += p;
  return sum;
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace cflab::kernels

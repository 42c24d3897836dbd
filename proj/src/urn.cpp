#include "sortnet/urn.hpp"

#include <stdexcept>

namespace sortnet::urn {

namespace {

const BigInt& two_pow_64() {
  static const BigInt v = BigInt(1) << 64;
  return v;
}

}  // namespace

UrnState initial_state() { return {make_rational(3, 2), make_rational(3, 2)}; }

Ball step(UrnState& state, Rng& rng) {
  if (state.white < 0 || state.black < 0 || state.total() <= 0)
    throw std::invalid_argument("urn state must have positive total");
  // u = r / 2^64 < white/total, compared exactly over the rationals.
  const Rational u = make_rational(BigInt(rng.next_u64()), two_pow_64());
  const bool white = u * state.total() < state.white;
  if (white)
    state.white += 1;
  else
    state.black += 1;
  return white ? Ball::white : Ball::black;
}

Rational sequence_probability(const ColorSequence& colors) {
  UrnState state = initial_state();
  Rational p = 1;
  for (Ball b : colors) {
    if (b == Ball::white) {
      p *= state.white / state.total();
      state.white += 1;
    } else {
      p *= state.black / state.total();
      state.black += 1;
    }
  }
  return p;
}

std::vector<Rational> white_count_pmf(int n) {
  if (n < 2) throw std::invalid_argument("white_count_pmf needs n >= 2");
  std::vector<Rational> pmf;
  pmf.reserve(static_cast<size_t>(n) - 1);
  for (int k = 1; k <= n - 1; ++k) {
    ColorSequence colors(static_cast<size_t>(n) - 2, Ball::black);
    std::fill_n(colors.begin(), k - 1, Ball::white);
    pmf.push_back(Rational(binomial(static_cast<unsigned long>(n - 2),
                                    static_cast<unsigned long>(k - 1))) *
                  sequence_probability(colors));
  }
  return pmf;
}

std::vector<int> coupled_first_swaps(int n_max, Rng& rng) {
  if (n_max < 2) throw std::invalid_argument("coupled_first_swaps needs n_max >= 2");
  std::vector<int> s;
  s.reserve(static_cast<size_t>(n_max) - 1);
  UrnState state = initial_state();
  int whites = 0;
  s.push_back(1);  // s(2): no additions yet
  for (int n = 3; n <= n_max; ++n) {
    if (step(state, rng) == Ball::white) ++whites;
    s.push_back(1 + whites);
  }
  return s;
}

bool exchangeability_check(int n) {
  const int length = n - 2;
  if (length < 0 || length > 12)
    throw std::invalid_argument("exchangeability_check needs 0 <= n-2 <= 12");
  // Group the 2^(n-2) sequences by white count; each class must have one
  // common probability.
  std::vector<Rational> class_value(static_cast<size_t>(length) + 1, Rational(-1));
  for (unsigned long mask = 0; mask < (1UL << length); ++mask) {
    ColorSequence colors(static_cast<size_t>(length));
    int whites = 0;
    for (int i = 0; i < length; ++i) {
      const bool white = mask & (1UL << i);
      colors[i] = white ? Ball::white : Ball::black;
      whites += white;
    }
    const Rational p = sequence_probability(colors);
    if (class_value[whites] == -1)
      class_value[whites] = p;
    else if (class_value[whites] != p)
      return false;
  }
  return true;
}

}  // namespace sortnet::urn

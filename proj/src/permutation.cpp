#include "operadkit/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "operadkit/errors.hpp"

namespace operadkit {

Permutation::Permutation(std::size_t n) : images_(n) {
  if (n == 0) throw DimensionMismatch("permutation on zero letters");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const auto n = images_.size();
  if (n == 0) throw DimensionMismatch("permutation on zero letters");
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v - 1]) {
      std::ostringstream os;
      os << "not a bijection of {1.." << n << "}";
      throw DimensionMismatch(os.str());
    }
    seen[v - 1] = true;
  }
}

Permutation::Permutation(std::initializer_list<int> images)
    : Permutation(std::vector<int>(images)) {}

Permutation Permutation::transposition(std::size_t n, int a, int b) {
  Permutation p(n);
  if (a < 1 || b < 1 || static_cast<std::size_t>(std::max(a, b)) > n) {
    throw DimensionMismatch("transposition letter out of range");
  }
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::adjacent(std::size_t n, int k) {
  return transposition(n, k, k + 1);
}

Permutation Permutation::cycle(std::size_t n, std::initializer_list<int> letters) {
  Permutation p(n);
  std::vector<int> ls(letters);
  for (std::size_t t = 0; t < ls.size(); ++t) {
    const int from = ls[t];
    const int to = ls[(t + 1) % ls.size()];
    if (from < 1 || static_cast<std::size_t>(from) > n) {
      throw DimensionMismatch("cycle letter out of range");
    }
    p.images_[from - 1] = to;
  }
  return Permutation(p.images_);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    inv[images_[k] - 1] = static_cast<int>(k) + 1;
  }
  Permutation r;
  r.images_ = std::move(inv);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

std::size_t Permutation::inversions() const {
  std::size_t count = 0;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t b = a + 1; b < images_.size(); ++b) {
      if (images_[a] > images_[b]) ++count;
    }
  }
  return count;
}

std::vector<int> Permutation::adjacent_word() const {
  // p = p' * s_k with p' = p * s_k whenever k is a descent of p; p' has one
  // inversion fewer. Peel descents off the right end.
  std::vector<int> reversed;
  std::vector<int> cur = images_;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (cur[k] > cur[k + 1]) {
        std::swap(cur[k], cur[k + 1]);
        reversed.push_back(static_cast<int>(k) + 1);
        changed = true;
        break;
      }
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) os << ',';
    os << images_[k];
  }
  os << ']';
  return os.str();
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DimensionMismatch("composing permutations of different sizes");
  Permutation r(p.size());
  for (std::size_t k = 0; k < q.size(); ++k) r.images_[k] = p.images_[q.images_[k] - 1];
  return r;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_string();
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation block_substitution(const Permutation& outer,
                               std::span<const std::size_t> block_sizes,
                               std::span<const Permutation> inners) {
  const std::size_t k = outer.size();
  if (block_sizes.size() != k || inners.size() != k) {
    throw DimensionMismatch("block substitution: need one block size and one inner permutation per outer letter");
  }
  std::vector<std::size_t> offset(k + 1, 0);
  for (std::size_t j = 0; j < k; ++j) {
    if (block_sizes[j] == 0 || inners[j].size() != block_sizes[j]) {
      throw DimensionMismatch("block substitution: inner permutation size differs from its block size");
    }
    offset[j + 1] = offset[j] + block_sizes[j];
  }
  // Block sitting at position q after rearrangement is outer^{-1}(q).
  const Permutation back = outer.inverse();
  std::vector<std::size_t> new_offset(k + 1, 0);
  for (std::size_t q = 0; q < k; ++q) {
    new_offset[q + 1] = new_offset[q] + block_sizes[back(static_cast<int>(q) + 1) - 1];
  }
  std::vector<int> images(offset[k]);
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t target = new_offset[outer(static_cast<int>(j) + 1) - 1];
    for (std::size_t r = 1; r <= block_sizes[j]; ++r) {
      images[offset[j] + r - 1] = static_cast<int>(target) + inners[j](static_cast<int>(r));
    }
  }
  return Permutation(std::move(images));
}

namespace {

std::vector<std::size_t> slot_blocks(std::size_t m, int i, std::size_t n) {
  std::vector<std::size_t> sizes(m, 1);
  sizes[i - 1] = n;
  return sizes;
}

void check_slot(std::size_t m, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > m) {
    throw DimensionMismatch("slot " + std::to_string(i) + " out of range 1.." + std::to_string(m));
  }
}

}  // namespace

Permutation sigma_prime(std::size_t m, int i, const Permutation& sigma) {
  check_slot(m, i);
  const auto sizes = slot_blocks(m, i, sigma.size());
  std::vector<Permutation> inners(m, Permutation(1));
  inners[i - 1] = sigma;
  return block_substitution(Permutation(m), sizes, inners);
}

Permutation phi_doubleprime(const Permutation& phi, int i, std::size_t n) {
  check_slot(phi.size(), i);
  if (n == 0) throw DimensionMismatch("inner arity must be positive");
  const auto sizes = slot_blocks(phi.size(), i, n);
  std::vector<Permutation> inners(phi.size(), Permutation(1));
  inners[i - 1] = Permutation(n);
  return block_substitution(phi, sizes, inners);
}

bool SignLemmaReport::all_passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.passed(); });
}

bool SignLemmaReport::family_2_passed() const {
  for (const auto& c : cases) {
    if (c.name.size() == 2 && c.name[0] == '2' && !c.passed()) return false;
  }
  return true;
}

namespace {

void record(SignLemmaCase& c, bool ok, const std::string& witness) {
  ++c.checked;
  if (!ok) {
    if (c.failed == 0) c.first_failure = witness;
    ++c.failed;
  }
}

int neg_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

SignLemmaReport verify_sign_lemma(std::size_t m_max, std::size_t n_max) {
  if (m_max < 2) throw DimensionMismatch("m_max must be at least 2");
  SignLemmaReport report;
  report.m_max = m_max;
  report.n_max = n_max;
  SignLemmaCase c1{"1", "sgn(sigma') = sgn(sigma)"};
  SignLemmaCase c2{"2", "sgn(phi'') = (-1)^((n-1)(phi(i)-i)) sgn(phi)"};
  SignLemmaCase c2a{"2a", "n odd => sgn(phi'') = sgn(phi)"};
  SignLemmaCase c2b{"2b", "phi(i) = i => sgn(phi'') = sgn(phi)"};
  SignLemmaCase c2c{"2c", "n even, phi = (a,i) a<i => (-1)^(i-a-1); phi = (i,b) i<b => (-1)^(b-i-1)"};
  SignLemmaCase c2d{"2d", "n even, phi = (a,a+1,a+2): i=a => -1, i=a+1 => -1, i=a+2 => +1"};

  for (std::size_t m = 1; m <= m_max; ++m) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (const auto& sigma : all_permutations(n)) {
        for (int i = 1; i <= static_cast<int>(m); ++i) {
          const auto sp = sigma_prime(m, i, sigma);
          record(c1, sp.sign() == sigma.sign(),
                 "m=" + std::to_string(m) + " i=" + std::to_string(i) + " sigma=" + sigma.to_string());
        }
      }
      for (const auto& phi : all_permutations(m)) {
        for (int i = 1; i <= static_cast<int>(m); ++i) {
          const int s = phi_doubleprime(phi, i, n).sign();
          const std::string witness =
              "phi=" + phi.to_string() + " i=" + std::to_string(i) + " n=" + std::to_string(n);
          const long shift = static_cast<long>(phi(i)) - i;
          record(c2, s == neg_one_pow(static_cast<long>(n - 1) * shift) * phi.sign(), witness);
          if (n % 2 == 1) record(c2a, s == phi.sign(), witness);
          if (phi(i) == i) record(c2b, s == phi.sign(), witness);
          if (n % 2 == 0) {
            for (int other = 1; other <= static_cast<int>(m); ++other) {
              if (other == i || phi != Permutation::transposition(m, other, i)) continue;
              const int expected = other < i ? neg_one_pow(i - other - 1) : neg_one_pow(other - i - 1);
              record(c2c, s == expected, witness);
            }
            for (int a = 1; a + 2 <= static_cast<int>(m); ++a) {
              if (phi != Permutation::cycle(m, {a, a + 1, a + 2})) continue;
              if (i == a || i == a + 1) record(c2d, s == -1, witness);
              if (i == a + 2) record(c2d, s == 1, witness);
            }
          }
        }
      }
    }
  }
  report.cases = {c1, c2, c2a, c2b, c2c, c2d};
  return report;
}

}  // namespace operadkit

#include "operadkit/functors.hpp"

#include <sstream>

#include "operadkit/errors.hpp"

namespace operadkit {

namespace {

std::string first_of(const std::vector<Violation>& v) { return v.front().to_string(); }

void require_operad(const TruncatedOperad& p) {
  const auto v = check_axioms(p);
  if (!v.empty()) throw InvalidStructure("operad fails its axioms: " + first_of(v));
}

void require_associative(const GradedAlgebra& a) {
  const auto v = check_associativity(a);
  if (!v.empty()) throw InvalidStructure("algebra is not unital associative: " + first_of(v));
}

Scalar sign(const Field& f, std::size_t exponent) { return Scalar(f, exponent % 2 == 0 ? 1L : -1L); }

// Diagonal with entries +-1; the type of basis vector a is 1 iff entry -1.
bool is_signed_diagonal(const Matrix& m) {
  const Scalar one = Scalar::one(m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& e = m(r, c);
      if (r != c) {
        if (!e.is_zero()) return false;
      } else if (e != one && e != -one) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

GradedAlgebra forget_F(const TruncatedOperad& p, bool validate) {
  if (validate) require_operad(p);
  const std::size_t d_max = p.max_arity() - 1;
  AlgebraData d;
  d.field = p.field();
  d.max_degree = d_max;
  for (std::size_t i = 0; i <= d_max; ++i) d.dims.push_back(p.dim(i + 1));
  d.unit = p.identity();
  for (std::size_t i = 0; i <= d_max; ++i) {
    for (std::size_t j = 0; i + j <= d_max; ++j) d.products.emplace(ProductKey{i, j}, p.composition(i + 1, j + 1, 1));
  }
  return GradedAlgebra(std::move(d));
}

TruncatedOperad g_sigma_triv(const GradedAlgebra& a, bool validate) {
  if (validate) {
    require_associative(a);
    const auto v = check_gperm(a);
    if (!v.empty()) throw NotGPerm("algebra is not GPerm: " + first_of(v));
  }
  const std::size_t n_max = a.max_degree() + 1;
  OperadData d;
  d.field = a.field();
  d.max_arity = n_max;
  d.dims.push_back(0);
  for (std::size_t n = 1; n <= n_max; ++n) d.dims.push_back(a.dim(n - 1));
  d.identity = a.unit();
  for (std::size_t m = 1; m <= n_max; ++m) {
    for (std::size_t n = 1; m + n - 1 <= n_max; ++n) {
      for (std::size_t i = 1; i <= m; ++i) d.compositions.emplace(CompositionKey{m, n, i}, a.product(m - 1, n - 1));
    }
  }
  return TruncatedOperad(std::move(d));
}

TruncatedOperad g_a_triv(const GradedAlgebra& a, bool validate) {
  if (!a.typed()) throw MissingTyping("g_a_triv needs an even/odd typing");
  const Field& f = a.field();
  if (f.characteristic() == 2) throw CharTwo("g_a_triv needs char != 2");
  if (validate) {
    require_associative(a);
    const auto v = check_pgperm(a);
    if (!v.empty()) throw NotPGPerm("algebra is not PGPerm: " + first_of(v));
  }
  const std::size_t n_max = a.max_degree() + 1;
  OperadData d;
  d.field = f;
  d.max_arity = n_max;
  d.dims.push_back(0);
  for (std::size_t n = 1; n <= n_max; ++n) d.dims.push_back(a.dim(n - 1));
  d.identity = a.unit();
  d.actions.resize(n_max + 1);
  for (std::size_t n = 2; n <= n_max; ++n) {
    Matrix s(f, d.dims[n], d.dims[n]);
    for (std::size_t b = 0; b < d.dims[n]; ++b) s(b, b) = sign(f, a.type_of(n - 1, b));
    d.actions[n].assign(n - 1, s);
  }
  for (std::size_t m = 1; m <= n_max; ++m) {
    for (std::size_t n = 1; m + n - 1 <= n_max; ++n) {
      const std::size_t dm = d.dims[m], dn = d.dims[n];
      for (std::size_t i = 1; i <= m; ++i) {
        Matrix c(f, d.dims[m + n - 1], dm * dn);
        for (std::size_t x = 0; x < dm; ++x) {
          const int tx = m >= 2 ? a.type_of(m - 1, x) : 0;
          for (std::size_t y = 0; y < dn; ++y) {
            const int ty = n >= 2 ? a.type_of(n - 1, y) : 0;
            Vector v;
            if (m >= 3) {
              v = scaled(sign(f, (n - 1) * (i - 1) * tx), a.multiply_basis(m - 1, x, n - 1, y));
            } else if (m == 2 && i == 2) {
              const Vector xx = a.xi(unit_vector(f, dm, x));
              const Vector ey = unit_vector(f, dn, y);
              if (n == 1) {
                v = a.xi(a.multiply(1, xx, 0, ey));
              } else {
                v = scaled(sign(f, n * ty), a.multiply(1, xx, n - 1, ey));
              }
            } else {
              v = a.multiply_basis(m - 1, x, n - 1, y);
            }
            for (std::size_t r = 0; r < v.size(); ++r) c(r, x * dn + y) = v[r];
          }
        }
        d.compositions.emplace(CompositionKey{m, n, i}, std::move(c));
      }
    }
  }
  return TruncatedOperad(std::move(d));
}

std::vector<Matrix> adapted_bases(const TruncatedOperad& p) {
  std::vector<Matrix> bases;
  for (std::size_t n = 0; n <= p.max_arity(); ++n) {
    if (n < 2 || is_signed_diagonal(p.action(n, 1))) {
      bases.push_back(Matrix::identity(p.field(), p.dim(n)));
      continue;
    }
    const auto [triv, sgn] = triv_sign_split(p, n);
    std::vector<Vector> cols = triv.basis_vectors();
    for (auto& v : sgn.basis_vectors()) cols.push_back(std::move(v));
    bases.push_back(Matrix::from_columns(p.field(), p.dim(n), cols));
  }
  return bases;
}

GradedAlgebra f_a_triv(const TruncatedOperad& p, bool validate) {
  if (p.field().characteristic() == 2) throw CharTwo("f_a_triv needs char != 2");
  if (validate) require_operad(p);
  for (std::size_t n = 2; n <= p.max_arity(); ++n) {
    if (!arity_is_a_trivial(p, n)) throw NotATrivial("arity " + std::to_string(n) + " is not A-trivial");
  }
  const TruncatedOperad q = change_basis(p, adapted_bases(p));
  const GradedAlgebra plain = forget_F(q, false);
  Typing t(plain.max_degree() + 1);
  for (std::size_t i = 1; i <= plain.max_degree(); ++i) {
    const Matrix& s = q.action(i + 1, 1);
    for (std::size_t b = 0; b < plain.dim(i); ++b) t[i].push_back(!s(b, b).is_one());
  }
  return with_typing(plain, std::move(t));
}

TruncatedOperad g_sigma_sign(const GradedAlgebra& a, bool validate) {
  if (validate) {
    const auto v = check_graded_commutative(a);
    if (!v.empty()) throw NotCommutative("algebra is not graded-commutative: " + first_of(v));
  }
  return g_a_triv(all_odd_typing(a), validate);
}

namespace {

void diff_matrix(const std::string& what, const Matrix& x, const Matrix& y, std::vector<std::string>& out) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    out.push_back(what + ": shape " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + " vs " +
                  std::to_string(y.rows()) + "x" + std::to_string(y.cols()));
    return;
  }
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      if (x(r, c) != y(r, c)) {
        out.push_back(what + "[" + std::to_string(r) + "," + std::to_string(c) + "]: " + x(r, c).to_string() +
                      " vs " + y(r, c).to_string());
        return;
      }
    }
  }
}

void diff_vector(const std::string& what, const Vector& x, const Vector& y, std::vector<std::string>& out) {
  if (x != y) out.push_back(what + ": " + to_string(x) + " vs " + to_string(y));
}

std::string dims_string(const std::vector<std::size_t>& d) {
  std::ostringstream os;
  for (std::size_t k = 0; k < d.size(); ++k) os << (k ? "," : "(") << d[k];
  os << ")";
  return os.str();
}

}  // namespace

std::vector<std::string> diff(const TruncatedOperad& p, const TruncatedOperad& q) {
  std::vector<std::string> out;
  if (p.field() != q.field()) out.push_back("field: " + p.field().to_string() + " vs " + q.field().to_string());
  if (p.dims() != q.dims()) out.push_back("dims: " + dims_string(p.dims()) + " vs " + dims_string(q.dims()));
  if (!out.empty()) return out;
  diff_vector("identity", p.identity(), q.identity(), out);
  for (std::size_t n = 2; n <= p.max_arity(); ++n) {
    for (int k = 1; k < static_cast<int>(n); ++k) {
      diff_matrix("action(" + std::to_string(n) + ",s" + std::to_string(k) + ")", p.action(n, k), q.action(n, k), out);
    }
  }
  for (const auto& [key, c] : p.data().compositions) {
    const auto [m, n, i] = key;
    diff_matrix("composition(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(i) + ")", c,
                q.composition(m, n, i), out);
  }
  return out;
}

std::vector<std::string> diff(const GradedAlgebra& a, const GradedAlgebra& b) {
  std::vector<std::string> out;
  if (a.field() != b.field()) out.push_back("field: " + a.field().to_string() + " vs " + b.field().to_string());
  if (a.dims() != b.dims()) out.push_back("dims: " + dims_string(a.dims()) + " vs " + dims_string(b.dims()));
  if (!out.empty()) return out;
  diff_vector("unit", a.unit(), b.unit(), out);
  for (const auto& [key, c] : a.data().products) {
    diff_matrix("product(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")", c,
                b.product(key.first, key.second), out);
  }
  if (a.typed() != b.typed()) {
    out.push_back(std::string("typing: ") + (a.typed() ? "present" : "absent") + " vs " +
                  (b.typed() ? "present" : "absent"));
  } else if (a.typed()) {
    for (std::size_t i = 1; i <= a.max_degree(); ++i) {
      for (std::size_t k = 0; k < a.dim(i); ++k) {
        if (a.type_of(i, k) != b.type_of(i, k)) {
          out.push_back("typing(" + std::to_string(i) + "," + std::to_string(k) + "): " +
                        std::to_string(a.type_of(i, k)) + " vs " + std::to_string(b.type_of(i, k)));
        }
      }
    }
  }
  return out;
}

RoundtripReport roundtrip(const GradedAlgebra& a, FunctorPair pair) {
  RoundtripReport r;
  if (pair == FunctorPair::sigma_trivial) {
    r.composite = "forget_F(g_sigma_triv(A))";
    r.differences = diff(erase_typing(a), forget_F(g_sigma_triv(a)));
  } else {
    r.composite = "f_a_triv(g_a_triv(A))";
    r.differences = diff(a, f_a_triv(g_a_triv(a)));
  }
  return r;
}

RoundtripReport roundtrip(const TruncatedOperad& p, FunctorPair pair) {
  RoundtripReport r;
  if (pair == FunctorPair::sigma_trivial) {
    r.composite = "g_sigma_triv(forget_F(P))";
    r.differences = diff(p, g_sigma_triv(forget_F(p)));
  } else {
    r.composite = "g_a_triv(f_a_triv(P))";
    const GradedAlgebra a = f_a_triv(p);
    r.differences = diff(change_basis(p, adapted_bases(p)), g_a_triv(a));
  }
  return r;
}

std::vector<Violation> check_a_trivial_commutation(const TruncatedOperad& p) {
  for (std::size_t n = 2; n <= p.max_arity(); ++n) {
    if (!arity_is_a_trivial(p, n)) throw NotATrivial("arity " + std::to_string(n) + " is not A-trivial");
  }
  const TruncatedOperad q = change_basis(p, adapted_bases(p));
  const Field& f = q.field();
  auto type = [&](std::size_t n, std::size_t b) -> std::size_t {
    return n >= 2 && !q.action(n, 1)(b, b).is_one() ? 1 : 0;
  };
  std::vector<Violation> out;
  const std::size_t n_max = q.max_arity();
  for (std::size_t m = 1; m <= n_max; ++m) {
    for (std::size_t n = 1; m + n - 1 <= n_max; ++n) {
      bool swap_failed = false;
      std::vector<bool> slot_failed(m + 1, false);
      for (std::size_t x = 0; x < q.dim(m); ++x) {
        for (std::size_t y = 0; y < q.dim(n); ++y) {
          const std::size_t tt = type(m, x) * type(n, y);
          const Vector first = q.compose_basis_right(m, unit_vector(f, q.dim(m), x), 1, n, y);
          if (!swap_failed) {
            const Vector other = q.compose_basis_right(n, unit_vector(f, q.dim(n), y), 1, m, x);
            if (first != scaled(sign(f, (m - 1) * (n - 1) * tt), other)) {
              swap_failed = true;
              out.push_back({"swap", {m, n}, 1,
                             "mu=e" + std::to_string(x) + " nu=e" + std::to_string(y) + " lhs=" + to_string(first) +
                                 " rhs=" + to_string(other)});
            }
          }
          for (std::size_t i = 2; i <= m; ++i) {
            if (slot_failed[i]) continue;
            const Vector vi = q.compose_basis_right(m, unit_vector(f, q.dim(m), x), i, n, y);
            if (vi != scaled(sign(f, (n - 1) * (i - 1) * tt), first)) {
              slot_failed[i] = true;
              out.push_back({"slot", {m, n}, i,
                             "mu=e" + std::to_string(x) + " nu=e" + std::to_string(y) + " lhs=" + to_string(vi) +
                                 " first=" + to_string(first)});
            }
          }
        }
      }
    }
  }
  sort_violations(out);
  return out;
}

}  // namespace operadkit

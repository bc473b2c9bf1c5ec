#include "jtk/jordan/triple.hpp"

#include <charconv>

#include "jtk/error.hpp"

namespace jtk {
namespace {

std::string idx_str(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

// Determinant of a square matrix of polynomials by Laplace expansion on the first row.
Poly poly_det(const std::vector<std::vector<Poly>>& m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(nvars, ExactScalar(1));
  if (n == 1) return m[0][0];
  Poly acc(nvars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    Poly term = m[0][j] * poly_det(sub, nvars);
    if (j % 2) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return acc;
}

// Pfaffian of an antisymmetric matrix of polynomials (even size).
Poly poly_pfaffian(const std::vector<std::vector<Poly>>& m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(nvars, ExactScalar(1));
  Poly acc(nvars);
  for (std::size_t j = 1; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::size_t> keep;
    for (std::size_t k = 1; k < n; ++k)
      if (k != j) keep.push_back(k);
    std::vector<std::vector<Poly>> sub;
    for (auto r : keep) {
      std::vector<Poly> row;
      for (auto c : keep) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    Poly term = m[0][j] * poly_pfaffian(sub, nvars);
    if (j % 2) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

unsigned parse_uint(std::string_view s, std::string_view whole) {
  unsigned v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw InvalidArgument("bad triple descriptor '" + std::string(whole) + "'");
  return v;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::matrix: return "matrix";
    case Family::symmetric: return "sym";
    case Family::antisymmetric: return "asym";
    case Family::spin: return "spin";
    case Family::zero: return "zero";
    case Family::generic: return "generic";
  }
  return "?";
}

Vec JordanTriple::frame_sum(unsigned l) const {
  if (l > frame_.size()) throw InvalidArgument("frame_sum: l exceeds rank");
  Vec c(dim_);
  for (unsigned j = 0; j < l; ++j) c = vec_add(c, frame_[j]);
  return c;
}

const Poly& JordanTriple::minor_poly(unsigned m) const {
  if (m < 1 || m > minors_.size()) throw InvalidArgument("minor index out of range for " + descriptor_);
  return minors_[m - 1];
}

bool JordanTriple::has_matrix_form() const noexcept {
  auto f = params_.family;
  return f == Family::matrix || f == Family::symmetric || f == Family::antisymmetric;
}

ExactMatrix JordanTriple::to_matrix(std::span<const ExactScalar> z) const {
  if (!has_matrix_form()) throw InvalidArgument("to_matrix: no matrix realization for " + descriptor_);
  if (z.size() != dim_) throw DimensionMismatch("to_matrix: vector length mismatch");
  ExactMatrix m(mrows_, mcols_);
  for (std::size_t k = 0; k < dim_; ++k) {
    m(row_[k], col_[k]) += z[k];
    if (mirror_ != 0 && row_[k] != col_[k]) m(col_[k], row_[k]) += ExactScalar(mirror_) * z[k];
  }
  return m;
}

Vec JordanTriple::from_matrix(const ExactMatrix& m) const {
  if (!has_matrix_form()) throw InvalidArgument("from_matrix: no matrix realization for " + descriptor_);
  if (m.rows() != mrows_ || m.cols() != mcols_) throw DimensionMismatch("from_matrix: shape mismatch");
  Vec z(dim_);
  for (std::size_t k = 0; k < dim_; ++k) z[k] = m(row_[k], col_[k]);
  return z;
}

TriplePtr JordanTriple::make(const TripleParams& p, bool checked) {
  std::shared_ptr<JordanTriple> t(new JordanTriple());
  t->params_ = p;
  switch (p.family) {
    case Family::matrix: {
      if (p.r < 1 || p.s < 1) throw InvalidArgument("matrix triple needs r, s >= 1");
      if (checked && p.r > p.s) throw InvalidArgument("matrix triple requires r <= s");
      if (p.r > p.s) throw InvalidArgument("matrix triple requires r <= s");
      t->descriptor_ = "matrix:" + std::to_string(p.r) + "x" + std::to_string(p.s);
      t->mrows_ = p.r;
      t->mcols_ = p.s;
      for (std::size_t i = 0; i < p.r; ++i)
        for (std::size_t j = 0; j < p.s; ++j) {
          t->row_.push_back(i);
          t->col_.push_back(j);
          t->names_.push_back("E" + std::to_string(i + 1) + "," + std::to_string(j + 1));
        }
      t->rank_ = p.r;
      t->a_ = 2;
      t->b_ = p.s - p.r;
      break;
    }
    case Family::symmetric: {
      if (p.n < 1) throw InvalidArgument("symmetric triple needs n >= 1");
      t->descriptor_ = "sym:" + std::to_string(p.n);
      t->mrows_ = t->mcols_ = p.n;
      t->mirror_ = 1;
      for (std::size_t i = 0; i < p.n; ++i)
        for (std::size_t j = i; j < p.n; ++j) {
          t->row_.push_back(i);
          t->col_.push_back(j);
          std::string e = "E" + std::to_string(i + 1) + "," + std::to_string(j + 1);
          t->names_.push_back(i == j ? e : e + "+E" + std::to_string(j + 1) + "," + std::to_string(i + 1));
        }
      t->rank_ = p.n;
      t->a_ = 1;
      t->b_ = 0;
      break;
    }
    case Family::antisymmetric: {
      if (p.n < 2 || p.n % 2 != 0) throw InvalidArgument("antisymmetric triple needs even n");
      if (checked && p.n < 4) throw InvalidArgument("antisymmetric triple requires even n >= 4");
      t->descriptor_ = "asym:" + std::to_string(p.n);
      t->mrows_ = t->mcols_ = p.n;
      t->mirror_ = -1;
      for (std::size_t i = 0; i < p.n; ++i)
        for (std::size_t j = i + 1; j < p.n; ++j) {
          t->row_.push_back(i);
          t->col_.push_back(j);
          t->names_.push_back("E" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "-E" +
                              std::to_string(j + 1) + "," + std::to_string(i + 1));
        }
      t->rank_ = p.n / 2;
      t->a_ = 4;
      t->b_ = 0;
      break;
    }
    case Family::spin: {
      if (p.n < 1) throw InvalidArgument("spin triple needs d >= 1");
      if (checked && p.n < 3) throw InvalidArgument("spin triple requires d >= 3");
      t->descriptor_ = "spin:" + std::to_string(p.n);
      for (std::size_t i = 0; i < p.n; ++i) t->names_.push_back("e" + std::to_string(i + 1));
      t->rank_ = 2;
      t->a_ = p.n - 2;
      t->b_ = 0;
      break;
    }
    case Family::zero: {
      t->descriptor_ = "zero";
      break;
    }
    case Family::generic:
      throw InvalidArgument("generic triples are built by restriction");
  }
  t->dim_ = t->names_.size();
  t->build_tensor();
  t->build_minors();
  t->fock_ = std::make_shared<const FockSpace>(t->metric_);
  t->verify();
  return t;
}

void JordanTriple::build_tensor() {
  const std::size_t d = dim_;
  tensor_.assign(d * d * d, SparseVec{});
  metric_ = ExactMatrix(d, d);
  if (has_matrix_form()) {
    std::vector<ExactMatrix> basis;
    for (std::size_t k = 0; k < d; ++k) basis.push_back(to_matrix(unit_vector(d, k)));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        ExactMatrix uv = basis[i] * basis[j].conj_transpose();
        ExactMatrix vu = basis[j].conj_transpose();
        for (std::size_t k = 0; k < d; ++k) {
          ExactMatrix prod = uv * basis[k] + basis[k] * vu * basis[i];
          tensor_[(i * d + j) * d + k] = to_sparse(from_matrix(prod));
        }
      }
    // Trace form, halved for antisymmetric matrices so that frame blocks have norm 1.
    ExactScalar scale = params_.family == Family::antisymmetric ? ExactScalar(Rational(1, 2)) : ExactScalar(1);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        ExactMatrix m = basis[i] * basis[j].conj_transpose();
        ExactScalar tr;
        for (std::size_t k = 0; k < m.rows(); ++k) tr += m(k, k);
        metric_(i, j) = scale * tr;
      }
    for (unsigned k = 0; k < rank_; ++k) {
      ExactMatrix e(mrows_, mcols_);
      if (params_.family == Family::antisymmetric) {
        e(2 * k, 2 * k + 1) = ExactScalar(1);
        e(2 * k + 1, 2 * k) = ExactScalar(-1);
      } else {
        e(k, k) = ExactScalar(1);
      }
      frame_.push_back(from_matrix(e));
    }
  } else if (params_.family == Family::spin) {
    // {u v* w} = (u|v) w + (w|v) u - 2 (u.w) conj(v) with (u|v) = 2 u.conj(v).
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          Vec v(d);
          if (i == j) v[k] += ExactScalar(2);
          if (k == j) v[i] += ExactScalar(2);
          if (i == k) v[j] -= ExactScalar(2);
          tensor_[(i * d + j) * d + k] = to_sparse(v);
        }
    for (std::size_t i = 0; i < d; ++i) metric_(i, i) = ExactScalar(2);
    Vec c(d);
    c[0] = ExactScalar(Rational(1, 2));
    c[1] = ExactScalar(Rational(0), Rational(1, 2));
    frame_.push_back(c);
    frame_.push_back(vec_conj(c));
  }
}

void JordanTriple::build_minors() {
  const std::size_t d = dim_;
  minors_.clear();
  if (has_matrix_form()) {
    std::vector<std::vector<Poly>> m(mrows_, std::vector<Poly>(mcols_, Poly(d)));
    for (std::size_t k = 0; k < d; ++k) {
      m[row_[k]][col_[k]] += Poly::variable(d, static_cast<unsigned>(k));
      if (mirror_ != 0 && row_[k] != col_[k])
        m[col_[k]][row_[k]] += ExactScalar(mirror_) * Poly::variable(d, static_cast<unsigned>(k));
    }
    for (unsigned l = 1; l <= rank_; ++l) {
      std::size_t sz = params_.family == Family::antisymmetric ? 2 * l : l;
      std::vector<std::vector<Poly>> lead;
      for (std::size_t i = 0; i < sz; ++i) lead.emplace_back(m[i].begin(), m[i].begin() + static_cast<std::ptrdiff_t>(sz));
      minors_.push_back(params_.family == Family::antisymmetric ? poly_pfaffian(lead, d) : poly_det(lead, d));
    }
  } else if (params_.family == Family::spin) {
    Poly n1(d);
    n1.add_term(mono::var(0), ExactScalar(1));
    n1.add_term(mono::var(1), ExactScalar(Rational(0), Rational(-1)));
    Poly n2(d);
    for (unsigned i = 0; i < d; ++i) n2.add_term(mono::var(i, 2), ExactScalar(1));
    minors_.push_back(std::move(n1));
    minors_.push_back(std::move(n2));
  }
}

void JordanTriple::verify() const {
  const std::size_t d = dim_;
  auto fail = [&](const std::string& what) { throw InvariantViolation(descriptor_ + ": " + what); };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = i + 1; k < d; ++k)
        if (tensor(i, j, k) != tensor(k, j, i)) fail("product not symmetric in outer arguments at " + idx_str(i, j, k));

  if (metric_.conj_transpose() != metric_) fail("metric not hermitian");
  // Box operators b_i [] b_j* as matrices.
  std::vector<ExactMatrix> box(d * d, ExactMatrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (const auto& [r, x] : tensor(i, j, k)) box[i * d + j](r, k) = x;

  // Metric invariance: ({b_i b_j* b_k} | b_l) = (b_k | {b_j b_i* b_l}).
  auto pair = [&](const SparseVec& x, std::size_t l) {
    ExactScalar s;
    for (const auto& [r, v] : x) s += v * metric_(r, l);
    return s;
  };
  auto pair_rev = [&](std::size_t k, const SparseVec& y) {
    ExactScalar s;
    for (const auto& [r, v] : y) s += metric_(k, r) * v.conj();
    return s;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          if (pair(tensor(i, j, k), l) != pair_rev(k, tensor(j, i, l)))
            fail("metric not invariant at " + idx_str(i, j, k) + "," + std::to_string(l));

  // Jordan triple identity [u□v*, z□w*] = {uv*z}□w* − z□{wu*v}* on basis quadruples.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const ExactMatrix& bij = box[i * d + j];
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          const ExactMatrix& bkl = box[k * d + l];
          ExactMatrix lhs = bij * bkl - bkl * bij;
          ExactMatrix rhs(d, d);
          for (const auto& [a, x] : tensor(i, j, k)) rhs = rhs + x * box[a * d + l];
          for (const auto& [b, y] : tensor(l, i, j)) rhs = rhs - y.conj() * box[k * d + b];
          if (lhs != rhs)
            fail("Jordan triple identity fails at quadruple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(k) + "," + std::to_string(l) + ")");
        }
    }

  if (params_.family == Family::generic) return;
  if (2 * d != static_cast<std::size_t>(rank_) * (2 + a_ * (rank_ > 0 ? rank_ - 1 : 0) + 2 * b_))
    fail("multiplicity relation d/r = 1 + (a/2)(r-1) + b violated");
  if (frame_.size() != rank_) fail("frame length differs from rank");
  auto tp = [&](const Vec& u, const Vec& v, const Vec& w) {
    Vec out(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t k = 0; k < d; ++k) {
          if (w[k].is_zero()) continue;
          ExactScalar f = u[i] * v[j].conj() * w[k];
          for (const auto& [r, x] : tensor(i, j, k)) out[r] += f * x;
        }
      }
    }
    return out;
  };
  Vec e(d);
  for (std::size_t a = 0; a < rank_; ++a) {
    const Vec& ea = frame_[a];
    if (tp(ea, ea, ea) != vec_scale(ExactScalar(2), ea)) fail("frame element " + std::to_string(a + 1) + " is not a tripotent");
    for (std::size_t b = 0; b < rank_; ++b) {
      ExactScalar ip;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) ip += ea[i] * metric_(i, j) * frame_[b][j].conj();
      if (ip != ExactScalar(a == b ? 1 : 0)) fail("frame not orthonormal at (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
      if (a != b) {
        if (!vec_is_zero(tp(ea, ea, frame_[b]))) fail("frame elements " + std::to_string(a + 1) + "," + std::to_string(b + 1) + " not orthogonal");
        for (std::size_t k = 0; k < d; ++k)
          if (!vec_is_zero(tp(ea, frame_[b], unit_vector(d, k))))
            fail("frame box operator e_" + std::to_string(a + 1) + " [] e_" + std::to_string(b + 1) + "* is nonzero");
      }
    }
    e = vec_add(e, ea);
  }
  // Maximality: the Peirce 0-space of e vanishes, i.e. D = e□e* has no kernel.
  ExactMatrix de(d, d);
  for (std::size_t k = 0; k < d; ++k) de.set_column(k, tp(e, e, unit_vector(d, k)));
  if (d > 0 && de.rank() != d) fail("sum of frame elements is not a maximal tripotent");
  for (unsigned m = 1; m <= minors_.size(); ++m) {
    if (minors_[m - 1].eval(frame_sum(m)) != ExactScalar(1)) fail("minor N_" + std::to_string(m) + " not normalized");
  }
}

TriplePtr JordanTriple::parse(std::string_view desc) {
  auto colon = desc.find(':');
  std::string_view fam = desc.substr(0, colon);
  if (colon == std::string_view::npos) {
    if (fam == "zero") return make({Family::zero, 0, 0, 0});
    throw InvalidArgument("bad triple descriptor '" + std::string(desc) + "'");
  }
  std::string_view rest = desc.substr(colon + 1);
  if (fam == "matrix") {
    auto x = rest.find('x');
    if (x == std::string_view::npos) throw InvalidArgument("bad triple descriptor '" + std::string(desc) + "'");
    return make({Family::matrix, parse_uint(rest.substr(0, x), desc), parse_uint(rest.substr(x + 1), desc), 0});
  }
  unsigned n = parse_uint(rest, desc);
  if (fam == "sym") return make({Family::symmetric, 0, 0, n});
  if (fam == "asym") return make({Family::antisymmetric, 0, 0, n});
  if (fam == "spin") return make({Family::spin, 0, 0, n});
  throw InvalidArgument("unknown triple family '" + std::string(fam) + "'");
}

TriplePtr JordanTriple::restrict_to(const JordanTriple& t, const std::vector<Vec>& basis) {
  std::shared_ptr<JordanTriple> w(new JordanTriple());
  const std::size_t k = basis.size();
  const std::size_t d = t.dim();
  ExactMatrix emb = ExactMatrix::from_columns(basis, d);
  if (emb.rank() != k) throw InvalidArgument("restrict_to: basis is not independent");
  w->params_.family = Family::generic;
  w->params_.n = static_cast<unsigned>(k);
  w->descriptor_ = "generic:" + std::to_string(k) + "<" + t.descriptor() + ">";
  w->dim_ = k;
  for (std::size_t i = 0; i < k; ++i) w->names_.push_back("w" + std::to_string(i + 1));
  w->tensor_.assign(k * k * k, SparseVec{});
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        Vec x(d);
        for (std::size_t p = 0; p < d; ++p) {
          if (basis[i][p].is_zero()) continue;
          for (std::size_t q = 0; q < d; ++q) {
            if (basis[j][q].is_zero()) continue;
            for (std::size_t r = 0; r < d; ++r) {
              if (basis[l][r].is_zero()) continue;
              ExactScalar f = basis[i][p] * basis[j][q].conj() * basis[l][r];
              for (const auto& [o, v] : t.tensor(p, q, r)) x[o] += f * v;
            }
          }
        }
        auto y = emb.solve(x);
        if (!y) throw InvariantViolation("restrict_to: span is not closed under the triple product at " + idx_str(i, j, l));
        w->tensor_[(i * k + j) * k + l] = to_sparse(*y);
      }
  w->metric_ = ExactMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      ExactScalar s;
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) s += basis[i][p] * t.metric()(p, q) * basis[j][q].conj();
      w->metric_(i, j) = s;
    }
  w->fock_ = std::make_shared<const FockSpace>(w->metric_);
  w->verify();
  return w;
}

TriplePtr make_triple(Family family, unsigned p1, unsigned p2) {
  TripleParams p;
  p.family = family;
  if (family == Family::matrix) {
    p.r = p1;
    p.s = p2;
  } else {
    p.n = p1;
  }
  return JordanTriple::make(p);
}

}  // namespace jtk

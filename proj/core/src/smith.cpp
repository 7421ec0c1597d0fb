#include "nk/smith.hpp"

#include <cstdlib>

namespace nk::linalg {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Row/column operations applied simultaneously to D and to the recorded
// transforms.  Row ops touch U (and columns of U_inv); column ops touch V
// (and rows of V_inv).
struct Work {
  IntMatrix d, u, v, u_inv, v_inv;

  void row_swap(std::size_t i, std::size_t j) {
    d.swap_rows(i, j);
    u.swap_rows(i, j);
    u_inv.swap_cols(i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    d.swap_cols(i, j);
    v.swap_cols(i, j);
    v_inv.swap_rows(i, j);
  }
  // row i += c * row j
  void row_add(std::size_t i, std::size_t j, const Int& c) {
    d.add_row_multiple(i, j, c);
    u.add_row_multiple(i, j, c);
    u_inv.add_col_multiple(j, i, Int(-c));
  }
  // col i += c * col j
  void col_add(std::size_t i, std::size_t j, const Int& c) {
    d.add_col_multiple(i, j, c);
    v.add_col_multiple(i, j, c);
    v_inv.add_row_multiple(j, i, Int(-c));
  }
  void row_negate(std::size_t i) {
    d.negate_row(i);
    u.negate_row(i);
    u_inv.negate_col(i);
  }
};

// Smallest-|value| nonzero pivot in d[t.., t..]; lowest row, then lowest
// column, wins ties.  Returns false when the submatrix is zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Int a = abs_int(d(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

std::vector<Int> SmithDecomposition::diagonal() const {
  std::vector<Int> out;
  const std::size_t n = std::min(d.rows(), d.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  Work w;
  w.d = m;
  w.u = IntMatrix::identity(m.rows());
  w.u_inv = w.u;
  w.v = IntMatrix::identity(m.cols());
  w.v_inv = w.v;

  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(w.d, t, pi, pj)) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < w.d.rows(); ++i) {
        if (w.d(i, t) == 0) continue;
        Int q = w.d(i, t) / w.d(t, t);
        if (q != 0) w.row_add(i, t, Int(-q));
        if (w.d(i, t) != 0) clean = false;  // remainder became the new column entry
      }
      for (std::size_t j = t + 1; j < w.d.cols(); ++j) {
        if (w.d(t, j) == 0) continue;
        Int q = w.d(t, j) / w.d(t, t);
        if (q != 0) w.col_add(j, t, Int(-q));
        if (w.d(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t pi2 = t, pj2 = t;
        find_pivot(w.d, t, pi2, pj2);
        w.row_swap(t, pi2);
        w.col_swap(t, pj2);
        continue;
      }
      // Pivot must divide every remaining entry for the divisibility chain.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < w.d.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < w.d.cols() && divides_all; ++j)
          if (w.d(i, j) % w.d(t, t) != 0) {
            w.row_add(t, i, Int(1));  // pull the offending row up, retry
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (w.d(t, t) < 0) w.row_negate(t);
  }

  SmithDecomposition out;
  out.u = std::move(w.u);
  out.d = std::move(w.d);
  out.v = std::move(w.v);
  out.u_inv = std::move(w.u_inv);
  out.v_inv = std::move(w.v_inv);
  return out;
}

std::vector<Int> CokernelStructure::canonical_label(const std::vector<Int>& x) const {
  if (x.size() != factors_.size())
    throw DimensionError("canonical_label: vector length mismatch");
  std::vector<Int> y = smith_.u.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (factors_[i] == 0) continue;
    Int r = y[i] % factors_[i];
    if (r < 0) r += factors_[i];
    y[i] = r;
  }
  return y;
}

std::vector<std::vector<Int>> CokernelStructure::coset_representatives(
    const Int& cap) const {
  if (!finite())
    throw DomainError("coset_representatives: cokernel is infinite");
  if (*order_ > cap)
    throw CapError("coset_representatives: order exceeds enumeration cap");
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(factors_.size(), 0);
  const std::size_t n = factors_.size();
  for (;;) {
    out.push_back(cur);
    std::size_t i = n;
    while (i > 0) {
      --i;
      cur[i] += 1;
      if (cur[i] < factors_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;  // zero-dimensional: single trivial coset
  }
}

std::vector<Int> CokernelStructure::representative_in_source(
    const std::vector<Int>& label) const {
  return smith_.u_inv.apply(label);
}

CokernelStructure cokernel(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("cokernel: matrix not square");
  CokernelStructure c;
  c.smith_ = smith_normal_form(m);
  c.factors_ = c.smith_.diagonal();
  bool finite = true;
  Int order = 1;
  for (const Int& f : c.factors_) {
    if (f == 0) {
      finite = false;
      break;
    }
    order *= f;
  }
  if (finite) c.order_ = order;
  return c;
}

}  // namespace nk::linalg

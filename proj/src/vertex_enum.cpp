#include "tsf/vertex_enum.hpp"

#include <algorithm>
#include <bitset>
#include <vector>

namespace tsf {

namespace {

constexpr int kMaxVars = 12;
constexpr int kMaxRows = 48;
constexpr size_t kBits = 64;  // homogenized rows <= kMaxRows + 1

struct HRow {
  std::vector<mpz_class> a;  // width d = n+1, constraint a.z <= 0
  bool eq = false;
};

struct Gen {
  std::vector<mpz_class> z;   // length d, gcd-reduced
  std::bitset<kBits> tight;   // over processed row indices
};

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  mpz_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void gcd_reduce(std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : v) c /= g;
}

// Integerize one constraint row of the cone.
std::vector<mpz_class> cone_row(const LinearConstraint& r, int n) {
  std::vector<Rat> q(n + 1, Rat(0));
  for (const auto& [v, c] : r.form.coeffs) q[v] = c;
  q[n] = -r.rhs;
  mpz_class den = 1;
  for (auto& c : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> out(n + 1);
  for (int i = 0; i <= n; ++i) {
    Rat s = q[i] * Rat(den);
    s.canonicalize();
    out[i] = s.get_num();
  }
  gcd_reduce(out);
  return out;
}

// Rank of the rows tight at both generators; adjacency in a pointed cone is
// equivalent to "no third generator is tight on the whole common set".
bool adjacent(const std::vector<Gen>& gens, size_t i, size_t o, int d) {
  std::bitset<kBits> common = gens[i].tight & gens[o].tight;
  if ((int)common.count() < d - 2) return false;
  for (size_t g = 0; g < gens.size(); ++g) {
    if (g == i || g == o) continue;
    if ((common & ~gens[g].tight).none()) return false;
  }
  return true;
}

} // namespace

VertexSet enumerate_vertices(const Polyhedron& P) {
  const int n = (int)P.vars.size();
  if (n > kMaxVars)
    throw TooLarge("enumerate_vertices: " + std::to_string(n) + " variables (max 12)");
  if ((int)P.rows.size() > kMaxRows)
    throw TooLarge("enumerate_vertices: " + std::to_string(P.rows.size()) + " rows (max 48)");
  VertexSet out;
  if (n == 0) return out;
  if (is_empty(P)) return out;

  const int d = n + 1;
  std::vector<HRow> rows;
  rows.reserve(P.rows.size() + 1);
  for (const auto& r : P.rows) rows.push_back({cone_row(r, n), r.sense == Sense::EQ});
  {
    HRow tpos;
    tpos.a.assign(d, 0);
    tpos.a[n] = -1;  // -t <= 0
    rows.push_back(std::move(tpos));
  }
  const int m = (int)rows.size();

  // Pick d independent rows by Gaussian elimination, in input order.
  std::vector<int> basis_rows;
  {
    std::vector<std::vector<Rat>> red;  // reduced copies
    for (int i = 0; i < m && (int)basis_rows.size() < d; ++i) {
      std::vector<Rat> w(d);
      for (int j = 0; j < d; ++j) w[j] = Rat(rows[i].a[j]);
      for (size_t k = 0; k < red.size(); ++k) {
        // red[k] has leading 1 at pivot column pk
        int pk = -1;
        for (int j = 0; j < d; ++j)
          if (red[k][j] != 0) { pk = j; break; }
        if (pk >= 0 && w[pk] != 0) {
          Rat f = w[pk] / red[k][pk];
          for (int j = 0; j < d; ++j) w[j] -= f * red[k][j];
        }
      }
      bool nonzero = false;
      for (int j = 0; j < d; ++j)
        if (w[j] != 0) { nonzero = true; break; }
      if (nonzero) {
        red.push_back(std::move(w));
        basis_rows.push_back(i);
      }
    }
    if ((int)basis_rows.size() < d) throw Unbounded();  // lineality present
  }

  // Invert the basis submatrix; generators of the simplicial start cone are
  // the negated inverse columns.
  std::vector<Gen> gens;
  {
    std::vector<std::vector<Rat>> M(d, std::vector<Rat>(2 * d, Rat(0)));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) M[i][j] = Rat(rows[basis_rows[i]].a[j]);
      M[i][d + i] = 1;
    }
    for (int c = 0; c < d; ++c) {
      int p = -1;
      for (int r2 = c; r2 < d; ++r2)
        if (M[r2][c] != 0) { p = r2; break; }
      std::swap(M[c], M[p]);
      Rat piv = M[c][c];
      for (int j = 0; j < 2 * d; ++j) M[c][j] /= piv;
      for (int r2 = 0; r2 < d; ++r2) {
        if (r2 == c || M[r2][c] == 0) continue;
        Rat f = M[r2][c];
        for (int j = 0; j < 2 * d; ++j) M[r2][j] -= f * M[c][j];
      }
    }
    for (int j = 0; j < d; ++j) {
      std::vector<Rat> col(d);
      for (int i = 0; i < d; ++i) col[i] = -M[i][d + j];
      mpz_class den = 1;
      for (auto& c : col) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      Gen g;
      g.z.resize(d);
      for (int i = 0; i < d; ++i) {
        Rat s = col[i] * Rat(den);
        s.canonicalize();
        g.z[i] = s.get_num();
      }
      gcd_reduce(g.z);
      for (int i = 0; i < d; ++i)
        g.tight[basis_rows[i]] = (dot(rows[basis_rows[i]].a, g.z) == 0);
      gens.push_back(std::move(g));
    }
  }

  std::vector<bool> processed(m, false);
  for (int i : basis_rows) processed[i] = true;

  // Insert rows in input order. Rows already in the start basis only need
  // work when they are equalities (the start cone used them as <=).
  for (int h = 0; h < m; ++h) {
    bool in_basis = processed[h];
    if (in_basis && !rows[h].eq) continue;

    std::vector<mpz_class> val(gens.size());
    std::vector<size_t> in_cls, on_cls, out_cls;
    for (size_t g = 0; g < gens.size(); ++g) {
      val[g] = dot(rows[h].a, gens[g].z);
      int s = sgn(val[g]);
      if (s < 0) in_cls.push_back(g);
      else if (s == 0) on_cls.push_back(g);
      else out_cls.push_back(g);
    }
    bool drop_in = rows[h].eq;
    if (!drop_in && out_cls.empty()) {  // nothing cut off
      if (!in_basis) {
        for (size_t g : on_cls) gens[g].tight[h] = true;
        processed[h] = true;
      }
      continue;
    }

    std::vector<Gen> next;
    for (size_t g : on_cls) {
      next.push_back(gens[g]);
      next.back().tight[h] = true;
    }
    if (!drop_in)
      for (size_t g : in_cls) next.push_back(gens[g]);

    for (size_t gi : in_cls) {
      for (size_t go : out_cls) {
        if (!adjacent(gens, gi, go, d)) continue;
        Gen nu;
        nu.z.resize(d);
        for (int j = 0; j < d; ++j)
          nu.z[j] = val[go] * gens[gi].z[j] - val[gi] * gens[go].z[j];
        gcd_reduce(nu.z);
        bool dup = false;
        for (const auto& e : next)
          if (e.z == nu.z) { dup = true; break; }
        if (dup) continue;
        nu.tight = (gens[gi].tight & gens[go].tight);
        nu.tight[h] = true;
        // Exact tight set over processed rows (combination can land on
        // additional hyperplanes).
        for (int r2 = 0; r2 < m; ++r2)
          if (processed[r2] && !nu.tight[r2] && dot(rows[r2].a, nu.z) == 0)
            nu.tight[r2] = true;
        next.push_back(std::move(nu));
      }
    }
    gens = std::move(next);
    processed[h] = true;
    if (gens.empty()) return out;  // equality sliced the cone to the origin
  }

  for (const auto& g : gens) {
    if (g.z[n] == 0) throw Unbounded();
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) {
      x[i] = Rat(g.z[i], g.z[n]);
      x[i].canonicalize();
    }
    out.points.push_back(std::move(x));
  }
  out.sort_unique();
  return out;
}

} // namespace tsf

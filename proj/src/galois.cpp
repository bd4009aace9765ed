#include "fermat/galois.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include "fermat/delta.hpp"
#include "fermat/homology.hpp"
#include "fermat/wedge.hpp"

namespace fermat {

namespace {

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// Projection data for the quotient H1(U; Z/p) / S.
struct ModQuotient {
  std::uint64_t p;
  ModMatrix stab_rref;                  // rank x d, reduced row echelon
  std::vector<std::size_t> pivot_cols;  // length rank
  std::vector<std::size_t> free_cols;   // quotient coordinates

  std::size_t ambient() const { return stab_rref.cols(); }
  std::size_t dim() const { return free_cols.size(); }

  // Quotient coordinates of a row vector: clear the pivot columns against
  // the echelon rows, then read off the free columns.
  std::vector<std::uint64_t> project(std::vector<std::uint64_t> v) const {
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      const std::uint64_t f = v[pivot_cols[r]] % p;
      if (f == 0) continue;
      for (std::size_t c = 0; c < v.size(); ++c)
        v[c] = (v[c] + (p - f) * stab_rref.at(r, c)) % p;
    }
    std::vector<std::uint64_t> out(free_cols.size());
    for (std::size_t c = 0; c < free_cols.size(); ++c) out[c] = v[free_cols[c]];
    return out;
  }
};

ModQuotient make_quotient(std::uint64_t p) {
  const int n = int(p);
  const std::size_t d = h1u_rank(n);
  ModMatrix stab(p, p - 1, d);
  for (int i = 1; i < n; ++i) {
    H1UClass row = to_e_coordinates(gamma(i, n));
    for (std::size_t c = 0; c < d; ++c)
      stab.at(i - 1, c) = mod_reduce(row.coords[c], p);
  }
  ModMatrix rref = stab;
  std::vector<std::size_t> pivots;
  {
    std::size_t pr = 0;
    for (std::size_t col = 0; col < d && pr < rref.rows(); ++col) {
      std::size_t sel = rref.rows();
      for (std::size_t r = pr; r < rref.rows(); ++r)
        if (rref.at(r, col) != 0) {
          sel = r;
          break;
        }
      if (sel == rref.rows()) continue;
      for (std::size_t c = 0; c < d; ++c)
        std::swap(rref.at(sel, c), rref.at(pr, c));
      const std::uint64_t inv = mod_inverse(rref.at(pr, col), p);
      for (std::size_t c = 0; c < d; ++c)
        rref.at(pr, c) = (rref.at(pr, c) * inv) % p;
      for (std::size_t r = 0; r < rref.rows(); ++r) {
        if (r == pr || rref.at(r, col) == 0) continue;
        const std::uint64_t f = rref.at(r, col);
        for (std::size_t c = 0; c < d; ++c)
          rref.at(r, c) = (rref.at(r, c) + (p - f) * rref.at(pr, c)) % p;
      }
      pivots.push_back(col);
      ++pr;
    }
  }
  ModQuotient q;
  q.p = p;
  q.pivot_cols = pivots;
  ModMatrix trimmed(p, pivots.size(), d);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < d; ++c) trimmed.at(r, c) = rref.at(r, c);
  q.stab_rref = std::move(trimmed);
  for (std::size_t c = 0; c < d; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
      q.free_cols.push_back(c);
  return q;
}

// Induced matrix on the quotient H1(X; Z/p).
ModMatrix h1x_matrix(const ModQuotient& q, const ModMatrix& m) {
  ModMatrix out(q.p, q.dim(), q.dim());
  for (std::size_t r = 0; r < q.dim(); ++r) {
    std::vector<std::uint64_t> row(m.row(q.free_cols[r]).begin(),
                                   m.row(q.free_cols[r]).end());
    std::vector<std::uint64_t> proj = q.project(std::move(row));
    for (std::size_t c = 0; c < q.dim(); ++c) out.at(r, c) = proj[c];
  }
  return out;
}

std::size_t pair_pos(std::size_t a, std::size_t b, std::size_t dim) {
  return a * dim - a * (a + 1) / 2 + (b - a - 1);
}

// rho as a vector in the wedge of H1(X; Z/p) coordinates.
std::vector<std::uint64_t> rho_mod(const ModQuotient& q) {
  const int n = int(q.p);
  const std::size_t dim = q.dim();
  std::vector<std::vector<std::uint64_t>> proj_basis(h1u_rank(n));
  for (std::size_t k = 0; k < proj_basis.size(); ++k) {
    std::vector<std::uint64_t> unit(h1u_rank(n), 0);
    unit[k] = 1;
    proj_basis[k] = q.project(std::move(unit));
  }
  std::vector<std::uint64_t> out(dim * (dim - 1) / 2, 0);
  const WedgeElt d = delta_formula(n);
  for (const auto& [idx, c] : d.terms()) {
    const std::uint64_t cc = mod_reduce(c, q.p);
    const auto& x = proj_basis[e_basis_index(idx.i1, idx.j1, n)];
    const auto& y = proj_basis[e_basis_index(idx.i2, idx.j2, n)];
    for (std::size_t u = 0; u < dim; ++u) {
      if (x[u] == 0) continue;
      for (std::size_t v = 0; v < dim; ++v) {
        if (u == v || y[v] == 0) continue;
        const std::uint64_t t = (cc * ((x[u] * y[v]) % q.p)) % q.p;
        if (u < v) {
          std::uint64_t& slot = out[pair_pos(u, v, dim)];
          slot = (slot + t) % q.p;
        } else {
          std::uint64_t& slot = out[pair_pos(v, u, dim)];
          slot = (slot + q.p - t) % q.p;
        }
      }
    }
  }
  return out;
}

// Deterministic quotient by the line spanned by rho: pivot on the first
// nonzero coordinate in the fixed wedge order.
struct RhoQuotient {
  std::uint64_t p;
  std::vector<std::uint64_t> rho;
  std::size_t pivot;
  std::vector<std::size_t> kept;

  std::vector<std::uint64_t> project(std::vector<std::uint64_t> v) const {
    const std::uint64_t f =
        (v[pivot] * mod_inverse(rho[pivot], p)) % p;
    if (f != 0)
      for (std::size_t c = 0; c < v.size(); ++c)
        v[c] = (v[c] + (p - f) * rho[c]) % p;
    std::vector<std::uint64_t> out(kept.size());
    for (std::size_t c = 0; c < kept.size(); ++c) out[c] = v[kept[c]];
    return out;
  }
};

RhoQuotient make_rho_quotient(const ModQuotient& q) {
  RhoQuotient rq;
  rq.p = q.p;
  rq.rho = rho_mod(q);
  rq.pivot = rq.rho.size();
  for (std::size_t c = 0; c < rq.rho.size(); ++c)
    if (rq.rho[c] != 0) {
      rq.pivot = c;
      break;
    }
  if (rq.pivot == rq.rho.size())
    throw ActionSpecError("internal consistency error: rho vanishes mod p");
  for (std::size_t c = 0; c < rq.rho.size(); ++c)
    if (c != rq.pivot) rq.kept.push_back(c);
  return rq;
}

bool preserves_rho_line(const ModQuotient& q,
                        const std::vector<std::uint64_t>& rho_vec,
                        const ModMatrix& wedge_m, bool exact) {
  const std::uint64_t p = q.p;
  std::vector<std::uint64_t> image(rho_vec.size(), 0);
  for (std::size_t r = 0; r < rho_vec.size(); ++r) {
    if (rho_vec[r] == 0) continue;
    for (std::size_t c = 0; c < rho_vec.size(); ++c)
      image[c] = (image[c] + rho_vec[r] * wedge_m.at(r, c)) % p;
  }
  if (exact) return image == rho_vec;
  // proportionality: image = lambda * rho for some scalar
  std::size_t piv = rho_vec.size();
  for (std::size_t c = 0; c < rho_vec.size(); ++c)
    if (rho_vec[c] != 0) {
      piv = c;
      break;
    }
  const std::uint64_t lambda =
      (image[piv] * mod_inverse(rho_vec[piv], p)) % p;
  for (std::size_t c = 0; c < rho_vec.size(); ++c)
    if (image[c] != (lambda * rho_vec[c]) % p) return false;
  return true;
}

}  // namespace

ActionSpec load_action(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("p") || !doc.contains("basis") ||
      !doc.contains("generators"))
    throw ActionSpecError(
        "schema violation: expected fields p, basis, generators");
  if (!doc["p"].is_number_integer())
    throw ActionSpecError("schema violation: p must be an integer");
  const std::int64_t p_raw = doc["p"].get<std::int64_t>();
  if (p_raw < 3 || !is_odd_prime(std::uint64_t(p_raw)))
    throw ActionSpecError("schema violation: p must be an odd prime");
  const std::uint64_t p = std::uint64_t(p_raw);
  if (doc["basis"].get<std::string>() != "E_lex_1..n-1")
    throw ActionSpecError("schema violation: basis must be \"E_lex_1..n-1\"");
  if (!doc["generators"].is_array() || doc["generators"].empty())
    throw ActionSpecError("schema violation: generators must be a nonempty array");

  const std::size_t d = (p - 1) * (p - 1);
  ActionSpec spec;
  spec.p = p;
  for (const auto& g : doc["generators"]) {
    if (!g.is_object() || !g.contains("name") || !g.contains("matrix"))
      throw ActionSpecError("schema violation: generator needs name and matrix");
    const std::string name = g["name"].get<std::string>();
    const auto& rows = g["matrix"];
    if (!rows.is_array() || rows.size() != d)
      throw ActionSpecError("size error: matrix of " + name + " must be " +
                            std::to_string(d) + "x" + std::to_string(d));
    ModMatrix m(p, d, d);
    for (std::size_t r = 0; r < d; ++r) {
      if (!rows[r].is_array() || rows[r].size() != d)
        throw ActionSpecError("size error: matrix of " + name + " must be " +
                              std::to_string(d) + "x" + std::to_string(d));
      for (std::size_t c = 0; c < d; ++c) {
        if (!rows[r][c].is_number_integer())
          throw ActionSpecError("schema violation: non-integer entry in " +
                                name);
        std::int64_t e = rows[r][c].get<std::int64_t>();
        std::int64_t rem = e % std::int64_t(p);
        if (rem < 0) rem += std::int64_t(p);
        m.at(r, c) = std::uint64_t(rem);
      }
    }
    if (!mod_is_invertible(m))
      throw ActionSpecError("non-invertible matrix: " + name);
    spec.generators.emplace_back(name, std::move(m));
  }

  // Each generator must map the relation submodule S into itself mod p.
  const int n = int(p);
  ModMatrix stab(p, p - 1, d);
  for (int i = 1; i < n; ++i) {
    H1UClass row = to_e_coordinates(gamma(i, n));
    for (std::size_t c = 0; c < d; ++c)
      stab.at(i - 1, c) = mod_reduce(row.coords[c], p);
  }
  for (const auto& [name, m] : spec.generators) {
    ModMatrix images = mod_mul(stab, m);
    for (std::size_t r = 0; r < images.rows(); ++r)
      if (!mod_in_row_span(stab, images.row(r)))
        throw ActionSpecError("relation not preserved by generator " + name);
  }
  return spec;
}

ActionSpec load_action_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ActionSpecError("external data required: cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ActionSpecError(std::string("schema violation: invalid JSON: ") +
                          e.what());
  }
  return load_action(doc);
}

std::size_t graded2_dimension(std::uint64_t p) {
  const std::size_t c = (p - 1) * (p - 2);
  return c * (c - 1) / 2 - 1;
}

std::vector<ModMatrix> graded2_action(const ActionSpec& spec) {
  const ModQuotient q = make_quotient(spec.p);
  const RhoQuotient rq = make_rho_quotient(q);
  const std::size_t dim = q.dim();

  std::vector<ModMatrix> out;
  out.reserve(spec.generators.size());
  for (const auto& [name, m] : spec.generators) {
    const ModMatrix mx = h1x_matrix(q, m);
    const ModMatrix w = mod_induced_wedge_matrix(mx, dim);
    if (!preserves_rho_line(q, rq.rho, w, /*exact=*/false))
      throw ActionSpecError(
          "internal consistency error: rho line not preserved by " + name);
    ModMatrix g(spec.p, rq.kept.size(), rq.kept.size());
    for (std::size_t r = 0; r < rq.kept.size(); ++r) {
      std::vector<std::uint64_t> row(w.row(rq.kept[r]).begin(),
                                     w.row(rq.kept[r]).end());
      std::vector<std::uint64_t> proj = rq.project(std::move(row));
      for (std::size_t c = 0; c < proj.size(); ++c) g.at(r, c) = proj[c];
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::size_t invariant_dimension(const ActionSpec& spec) {
  const std::vector<ModMatrix> gs = graded2_action(spec);
  const std::size_t dim = gs.front().rows();
  ModMatrix stacked(spec.p, dim, dim * gs.size());
  for (std::size_t k = 0; k < gs.size(); ++k)
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        stacked.at(r, k * dim + c) =
            (gs[k].at(r, c) + (r == c ? spec.p - 1 : 0)) % spec.p;
  return dim - mod_rank(stacked);
}

bool check_annihilator(const ActionSpec& spec) {
  const ModQuotient q = make_quotient(spec.p);
  const std::size_t dim = q.dim();
  ModMatrix prod = ModMatrix::identity(spec.p, dim);
  for (const auto& [name, m] : spec.generators) {
    const ModMatrix factor =
        mod_sub(h1x_matrix(q, m), ModMatrix::identity(spec.p, dim));
    prod = mod_mul(prod, factor);
  }
  return prod.is_zero();
}

std::vector<std::pair<std::string, bool>> rho_invariance(
    const ActionSpec& spec) {
  const ModQuotient q = make_quotient(spec.p);
  const std::vector<std::uint64_t> rho_vec = rho_mod(q);
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& [name, m] : spec.generators) {
    const ModMatrix w = mod_induced_wedge_matrix(h1x_matrix(q, m), q.dim());
    out.emplace_back(name, preserves_rho_line(q, rho_vec, w, /*exact=*/true));
  }
  return out;
}

}  // namespace fermat

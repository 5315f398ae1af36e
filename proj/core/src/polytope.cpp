#include "stp/polytope.hpp"

#include <string>
#include <utility>

namespace stp {

HRepresentation build_omega_h(int n) {
  if (n < 1) throw std::invalid_argument("build_omega_h: n must be positive");
  const std::size_t nn = static_cast<std::size_t>(n);
  HRepresentation h;
  h.n = n;
  h.equalities = RationalMatrix(3 * nn * nn, nn * nn * nn);
  h.rhs.assign(3 * nn * nn, Rational(1));
  const auto flat = [nn](std::size_t i, std::size_t j, std::size_t k) { return (i * nn + j) * nn + k; };
  for (std::size_t j = 0; j < nn; ++j) {
    for (std::size_t k = 0; k < nn; ++k) {
      for (std::size_t i = 0; i < nn; ++i) h.equalities(j * nn + k, flat(i, j, k)) = 1;
    }
  }
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t k = 0; k < nn; ++k) {
      for (std::size_t j = 0; j < nn; ++j) h.equalities(nn * nn + i * nn + k, flat(i, j, k)) = 1;
    }
  }
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = 0; j < nn; ++j) {
      for (std::size_t k = 0; k < nn; ++k) h.equalities(2 * nn * nn + i * nn + j, flat(i, j, k)) = 1;
    }
  }
  return h;
}

std::size_t dimension(const HRepresentation& h) { return h.ambient_dim() - rank(h.equalities); }

std::size_t facet_count(const HRepresentation& h) { return h.inequality_count(); }

AffineHull affine_hull(const HRepresentation& h) {
  auto base = solve(h.equalities, h.rhs);
  if (!base) throw EmptyPolytopeError("equality system is inconsistent; the polytope is empty");
  const auto basis = nullspace_basis(h.equalities);
  AffineHull hull;
  hull.base_point = std::move(*base);
  hull.directions = RationalMatrix(h.ambient_dim(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (std::size_t r = 0; r < h.ambient_dim(); ++r) hull.directions(r, c) = basis[c][r];
  }
  hull.equality_rank = h.ambient_dim() - basis.size();  // rank-nullity
  return hull;
}

namespace {

std::vector<std::size_t> active_coordinates(const StochasticTensor& t) {
  std::vector<std::size_t> active;
  for (std::size_t f = 0; f < t.entries.size(); ++f) {
    if (t.entries[f] == 0) active.push_back(f);
  }
  return active;
}

RationalMatrix gather_rows(const RationalMatrix& m, const std::vector<std::size_t>& which) {
  RationalMatrix out(which.size(), m.cols());
  for (std::size_t r = 0; r < which.size(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(which[r], c);
  }
  return out;
}

void require_member(const HRepresentation& h, const StochasticTensor& t, const char* op) {
  if (t.n != h.n) throw std::invalid_argument(std::string(op) + ": tensor order does not match the polytope");
  if (auto violation = validate(t)) throw std::invalid_argument(std::string(op) + ": " + violation->message());
}

// Walks a valid member down to a vertex of its minimal face: while the
// active rows of the kernel basis are rank deficient, step along their
// first canonical kernel vector (forward orientation preferred) until the
// exact minimum ratio pins another coordinate at zero. Every step raises
// the active rank, so at most dim steps happen.
StochasticTensor descend_to_vertex(const AffineHull& hull, StochasticTensor point) {
  const std::size_t dim = hull.directions.cols();
  if (dim == 0) return point;
  while (true) {
    const auto active = active_coordinates(point);
    const auto kernel = nullspace_basis(gather_rows(hull.directions, active));
    if (kernel.empty()) return point;

    RationalVector dir = multiply(hull.directions, kernel.front());
    bool decreases = false;
    for (const Rational& v : dir) {
      if (v < 0) {
        decreases = true;
        break;
      }
    }
    if (!decreases) {  // nonzero direction, so the reverse one decreases somewhere
      for (Rational& v : dir) v = -v;
    }

    std::size_t blocking = dir.size();
    Rational step;
    for (std::size_t f = 0; f < dir.size(); ++f) {
      if (dir[f] >= 0) continue;
      const Rational ratio = point.entries[f] / Rational(-dir[f]);
      if (blocking == dir.size() || ratio < step) {  // strict: ties keep the lowest index
        step = ratio;
        blocking = f;
      }
    }
    for (std::size_t f = 0; f < dir.size(); ++f) {
      if (dir[f] != 0) point.entries[f] += step * dir[f];
    }
  }
}

}  // namespace

VertexCertificate is_vertex(const HRepresentation& h, const AffineHull& hull, const StochasticTensor& t) {
  require_member(h, t, "is_vertex");
  VertexCertificate cert;
  cert.point = t;
  cert.active = active_coordinates(t);
  cert.ambient_dim = h.ambient_dim();
  cert.active_rank = hull.equality_rank + rank(gather_rows(hull.directions, cert.active));
  return cert;
}

VertexCertificate is_vertex(const HRepresentation& h, const StochasticTensor& t) {
  return is_vertex(h, affine_hull(h), t);
}

std::vector<WeightedVertex> caratheodory_decompose(const HRepresentation& h, const AffineHull& hull,
                                                   const StochasticTensor& t) {
  require_member(h, t, "caratheodory_decompose");
  std::vector<WeightedVertex> terms;
  StochasticTensor current = t;
  Rational remaining(1);
  while (true) {
    const StochasticTensor v = descend_to_vertex(hull, current);
    if (v == current) {
      terms.push_back({remaining, v});
      return terms;
    }
    // farthest boundary point r on the ray from v through current:
    // current = (1 - 1/s) v + (1/s) r, where s > 1 exactly because every
    // coordinate that shrinks toward r is still positive at current
    Rational s;
    bool first = true;
    for (std::size_t f = 0; f < current.entries.size(); ++f) {
      if (current.entries[f] < v.entries[f]) {
        const Rational ratio = v.entries[f] / Rational(v.entries[f] - current.entries[f]);
        if (first || ratio < s) {
          s = ratio;
          first = false;
        }
      }
    }
    StochasticTensor r(h.n);
    for (std::size_t f = 0; f < current.entries.size(); ++f) {
      r.entries[f] = v.entries[f] + s * (current.entries[f] - v.entries[f]);
    }
    const Rational theta = 1 - 1 / s;  // weight carried by v, strictly inside (0, 1)
    terms.push_back({remaining * theta, v});
    remaining *= 1 - theta;
    current = std::move(r);
  }
}

std::vector<WeightedVertex> caratheodory_decompose(const HRepresentation& h, const StochasticTensor& t) {
  return caratheodory_decompose(h, affine_hull(h), t);
}

}  // namespace stp

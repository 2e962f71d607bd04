#include "ckf/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace ckf {

namespace {

ExactVec unit(int dim, int i) {
  ExactVec v(dim, QF(Rat(0)));
  v[i] = QF(Rat(1));
  return v;
}

void check_rank(LieType t, int rank) {
  auto fail = [&]() {
    throw RangeError("unsupported rank " + std::to_string(rank) + " for type " + type_name(t));
  };
  switch (t) {
    case LieType::A: if (rank < 1) fail(); break;
    case LieType::B: if (rank < 2) fail(); break;
    case LieType::C: if (rank < 3) fail(); break;
    case LieType::D: if (rank < 4) fail(); break;
    case LieType::E6: if (rank != 6) fail(); break;
    case LieType::E7: if (rank != 7) fail(); break;
    case LieType::E8: if (rank != 8) fail(); break;
    case LieType::F4: if (rank != 4) fail(); break;
    case LieType::G2: if (rank != 2) fail(); break;
  }
}

void push_pm(std::vector<ExactVec>& roots, const ExactVec& v) {
  roots.push_back(v);
  roots.push_back(-v);
}

// all +-e_i +- e_j for i<j
void push_d_roots(std::vector<ExactVec>& roots, int dim, int upto) {
  for (int i = 0; i < upto; ++i) {
    for (int j = i + 1; j < upto; ++j) {
      ExactVec v(dim, QF(Rat(0)));
      v[i] = QF(Rat(1));
      v[j] = QF(Rat(1));
      push_pm(roots, v);
      v[j] = QF(Rat(-1));
      push_pm(roots, v);
    }
  }
}

// Extract a base: positive system w.r.t. a generic functional, then the
// indecomposable positive roots. Used for the exceptional presentations.
std::vector<ExactVec> compute_base(const std::vector<ExactVec>& roots, int dim) {
  // generic rational functional; retried with a different slope if some root
  // is orthogonal to it
  for (std::int64_t slope = 257; ; slope += 97) {
    ExactVec lambda(dim);
    Rat w(1);
    for (int i = dim - 1; i >= 0; --i) {
      lambda[i] = QF(w);
      w = w * Rat(slope, 100);
    }
    bool generic = true;
    for (const auto& r : roots)
      if (dot(lambda, r).is_zero()) { generic = false; break; }
    if (!generic) continue;

    std::vector<ExactVec> positive;
    for (const auto& r : roots)
      if (dot(lambda, r).sign() > 0) positive.push_back(r);
    std::set<ExactVec, ExactVecLess> pos_set(positive.begin(), positive.end());
    std::vector<ExactVec> base;
    for (const auto& p : positive) {
      bool decomposable = false;
      for (const auto& q : positive) {
        if (lex_compare(p, q) == 0) continue;
        if (pos_set.count(p - q)) { decomposable = true; break; }
      }
      if (!decomposable) base.push_back(p);
    }
    std::sort(base.begin(), base.end(), ExactVecLess{});
    return base;
  }
}

int exact_rank(const std::vector<ExactVec>& vecs, int dim) {
  // Gaussian elimination over QF
  std::vector<ExactVec> rows = vecs;
  int rank = 0;
  for (int col = 0; col < dim && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (!rows[r][col].is_zero()) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      QF f = rows[r][col] / rows[rank][col];
      for (int c = 0; c < dim; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_classical(LieType t) {
  return t == LieType::A || t == LieType::B || t == LieType::C || t == LieType::D;
}

std::string type_name(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::E6: return "E6";
    case LieType::E7: return "E7";
    case LieType::E8: return "E8";
    case LieType::F4: return "F4";
    case LieType::G2: return "G2";
  }
  return "?";
}

LieType type_from_name(const std::string& s) {
  if (s == "A") return LieType::A;
  if (s == "B") return LieType::B;
  if (s == "C") return LieType::C;
  if (s == "D") return LieType::D;
  if (s == "E6") return LieType::E6;
  if (s == "E7") return LieType::E7;
  if (s == "E8") return LieType::E8;
  if (s == "F4") return LieType::F4;
  if (s == "G2") return LieType::G2;
  throw RangeError("unknown Lie type '" + s + "'");
}

long expected_root_count(LieType t, int rank) {
  long q = rank;
  switch (t) {
    case LieType::A: return q * (q + 1);
    case LieType::B: return 2 * q * q;
    case LieType::C: return 2 * q * q;
    case LieType::D: return 2 * q * (q - 1);
    case LieType::E6: return 72;
    case LieType::E7: return 126;
    case LieType::E8: return 240;
    case LieType::F4: return 48;
    case LieType::G2: return 12;
  }
  return 0;
}

bool RootSystem::contains_root(const ExactVec& alpha) const {
  for (const auto& r : roots)
    if (lex_compare(r, alpha) == 0) return true;
  return false;
}

std::vector<ExactVec> RootSystem::positive_roots() const {
  // A root is positive iff its expansion over the simple base has
  // nonnegative coefficients; solved exactly per root.
  std::vector<ExactVec> pos;
  const int k = static_cast<int>(simple_roots.size());
  for (const auto& r : roots) {
    // Gaussian elimination on [B | r] with B columns = simple roots.
    std::vector<std::vector<QF>> m(coord_dim, std::vector<QF>(k + 1));
    for (int row = 0; row < coord_dim; ++row) {
      for (int col = 0; col < k; ++col) m[row][col] = simple_roots[col][row];
      m[row][k] = r[row];
    }
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < k && row < coord_dim; ++col) {
      int p = -1;
      for (int rr = row; rr < coord_dim; ++rr)
        if (!m[rr][col].is_zero()) { p = rr; break; }
      if (p < 0) continue;
      std::swap(m[row], m[p]);
      for (int rr = 0; rr < coord_dim; ++rr) {
        if (rr == row || m[rr][col].is_zero()) continue;
        QF f = m[rr][col] / m[row][col];
        for (int cc = col; cc <= k; ++cc) m[rr][cc] -= f * m[row][cc];
      }
      pivot_col_of_row.push_back(col);
      ++row;
    }
    bool nonneg = true;
    std::vector<QF> coeff(k);
    for (int rr = 0; rr < row; ++rr) coeff[pivot_col_of_row[rr]] = m[rr][k] / m[rr][pivot_col_of_row[rr]];
    for (int rr = row; rr < coord_dim; ++rr)
      if (!m[rr][k].is_zero()) nonneg = false;  // not in the span: not positive
    for (int c = 0; c < k && nonneg; ++c)
      if (coeff[c].sign() < 0) nonneg = false;
    if (nonneg) pos.push_back(r);
  }
  if (2 * pos.size() != roots.size())
    throw std::logic_error("positive system does not split the roots in half");
  return pos;
}

RootSystem build_root_system(LieType t, int rank) {
  check_rank(t, rank);
  RootSystem rs;
  rs.type = t;
  rs.label = type_name(t) + (is_classical(t) ? std::to_string(rank) : "");
  rs.rank = rank;
  rs.coord_dim = (t == LieType::A) ? rank + 1 : rank;
  const QF one(Rat(1));
  const QF half(Rat(1, 2));
  const int dim = rs.coord_dim;

  switch (t) {
    case LieType::A: {
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) push_pm(rs.roots, unit(dim, i) - unit(dim, j));
      for (int i = 0; i + 1 < dim; ++i) rs.simple_roots.push_back(unit(dim, i) - unit(dim, i + 1));
      rs.scale_note = "t identified with (e1+...+e_{n+1})^perp in R^{n+1}; all roots have norm^2 = 2";
      break;
    }
    case LieType::B: {
      for (int i = 0; i < dim; ++i) push_pm(rs.roots, unit(dim, i));
      push_d_roots(rs.roots, dim, dim);
      for (int i = 0; i + 1 < dim; ++i) rs.simple_roots.push_back(unit(dim, i) - unit(dim, i + 1));
      rs.simple_roots.push_back(unit(dim, dim - 1));
      rs.scale_note = "short roots e_i have norm^2 = 1, long roots e_i+-e_j have norm^2 = 2";
      break;
    }
    case LieType::C: {
      for (int i = 0; i < dim; ++i) push_pm(rs.roots, QF(Rat(2)) * unit(dim, i));
      push_d_roots(rs.roots, dim, dim);
      for (int i = 0; i + 1 < dim; ++i) rs.simple_roots.push_back(unit(dim, i) - unit(dim, i + 1));
      rs.simple_roots.push_back(QF(Rat(2)) * unit(dim, dim - 1));
      rs.scale_note = "short roots e_i+-e_j have norm^2 = 2, long roots 2e_i have norm^2 = 4";
      break;
    }
    case LieType::D: {
      push_d_roots(rs.roots, dim, dim);
      for (int i = 0; i + 1 < dim; ++i) rs.simple_roots.push_back(unit(dim, i) - unit(dim, i + 1));
      rs.simple_roots.push_back(unit(dim, dim - 2) + unit(dim, dim - 1));
      rs.scale_note = "all roots e_i+-e_j have norm^2 = 2";
      break;
    }
    case LieType::E6: {
      push_d_roots(rs.roots, 6, 5);
      // 1/2(+-e1 ... +-e5) +- (sqrt3/2) e6 with an odd number of + signs
      // counted over all six coefficients (negation closure forces the
      // all-six convention).
      for (int mask = 0; mask < 64; ++mask) {
        int plus = 0;
        for (int b = 0; b < 6; ++b)
          if (!(mask & (1 << b))) ++plus;
        if (plus % 2 == 0) continue;
        ExactVec v(6);
        for (int b = 0; b < 5; ++b) v[b] = (mask & (1 << b)) ? -half : half;
        QF s6 = QF(Rat(1, 2)) * QF::sqrt3();
        v[5] = (mask & (1 << 5)) ? -s6 : s6;
        rs.roots.push_back(v);
      }
      rs.simple_roots = compute_base(rs.roots, 6);
      rs.scale_note = "all roots have norm^2 = 2; sqrt3 coordinates exact in Q(sqrt2,sqrt3)";
      break;
    }
    case LieType::E7: {
      push_d_roots(rs.roots, 7, 6);
      {
        ExactVec v(7);
        v[6] = QF::sqrt2();
        push_pm(rs.roots, v);
      }
      // 1/2(+-e1 ... +-e6 +- sqrt2 e7), odd number of plus signs among the
      // first six coefficients
      for (int mask = 0; mask < 128; ++mask) {
        int plus = 0;
        for (int b = 0; b < 6; ++b)
          if (!(mask & (1 << b))) ++plus;
        if (plus % 2 == 0) continue;
        ExactVec v(7);
        for (int b = 0; b < 6; ++b) v[b] = (mask & (1 << b)) ? -half : half;
        QF s7 = QF(Rat(1, 2)) * QF::sqrt2();
        v[6] = (mask & (1 << 6)) ? -s7 : s7;
        rs.roots.push_back(v);
      }
      rs.simple_roots = compute_base(rs.roots, 7);
      rs.scale_note = "all roots have norm^2 = 2; sqrt2 coordinates exact in Q(sqrt2,sqrt3)";
      break;
    }
    case LieType::E8: {
      push_d_roots(rs.roots, 8, 8);
      // 1/2(+-e1 ... +-e8) with an even number of +'s
      for (int mask = 0; mask < 256; ++mask) {
        int plus = 0;
        for (int b = 0; b < 8; ++b)
          if (!(mask & (1 << b))) ++plus;
        if (plus % 2 != 0) continue;
        ExactVec v(8);
        for (int b = 0; b < 8; ++b) v[b] = (mask & (1 << b)) ? -half : half;
        rs.roots.push_back(v);
      }
      rs.simple_roots = compute_base(rs.roots, 8);
      rs.scale_note = "all roots have norm^2 = 2";
      break;
    }
    case LieType::F4: {
      for (int i = 0; i < 4; ++i) push_pm(rs.roots, unit(4, i));
      push_d_roots(rs.roots, 4, 4);
      for (int mask = 0; mask < 16; ++mask) {
        ExactVec v(4);
        for (int b = 0; b < 4; ++b) v[b] = (mask & (1 << b)) ? -half : half;
        rs.roots.push_back(v);
      }
      rs.simple_roots = compute_base(rs.roots, 4);
      rs.scale_note = "short roots norm^2 = 1, long roots norm^2 = 2; contains the B4 roots";
      break;
    }
    case LieType::G2: {
      QF s3 = QF::sqrt3();
      QF s3h = QF(Rat(1, 2)) * QF::sqrt3();
      auto mk = [](QF x, QF y) { return ExactVec{x, y}; };
      push_pm(rs.roots, mk(s3, QF(Rat(0))));
      push_pm(rs.roots, mk(s3h, QF(Rat(3, 2))));
      push_pm(rs.roots, mk(s3h, -QF(Rat(3, 2))));
      push_pm(rs.roots, mk(QF(Rat(0)), one));
      push_pm(rs.roots, mk(s3h, half));
      push_pm(rs.roots, mk(s3h, -half));
      rs.simple_roots = compute_base(rs.roots, 2);
      rs.scale_note = "short roots norm^2 = 1, long roots norm^2 = 3";
      break;
    }
  }

  if (static_cast<long>(rs.roots.size()) != expected_root_count(t, rank))
    throw std::logic_error("root count mismatch for " + rs.label);
  return rs;
}

ExactVec reflect(const ExactVec& v, const ExactVec& alpha) {
  QF aa = norm2(alpha);
  if (aa.is_zero()) throw std::invalid_argument("reflect: alpha must be nonzero");
  QF coef = (QF(Rat(2)) * dot(v, alpha)) / aa;
  return v - coef * alpha;
}

std::vector<int> OrbitSet::word(std::size_t index) const {
  std::vector<int> w;
  for (int i = static_cast<int>(index); parent[i] >= 0; i = parent[i]) w.push_back(via_generator[i]);
  std::reverse(w.begin(), w.end());
  return w;
}

OrbitSet weyl_orbit(const ExactVec& v, const std::vector<ExactVec>& generators, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("weyl_orbit: cap must be positive");
  OrbitSet orbit;
  orbit.cap = cap;
  std::map<ExactVec, int, ExactVecLess> seen;
  std::deque<int> queue;
  orbit.vectors.push_back(v);
  orbit.parent.push_back(-1);
  orbit.via_generator.push_back(-1);
  seen.emplace(v, 0);
  queue.push_back(0);
  while (!queue.empty()) {
    int idx = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < generators.size(); ++g) {
      ExactVec w = reflect(orbit.vectors[idx], generators[g]);
      if (seen.count(w)) continue;
      if (orbit.vectors.size() >= cap) {
        orbit.truncated = true;
        return orbit;
      }
      int nid = static_cast<int>(orbit.vectors.size());
      orbit.vectors.push_back(std::move(w));
      orbit.parent.push_back(idx);
      orbit.via_generator.push_back(static_cast<int>(g));
      seen.emplace(orbit.vectors.back(), nid);
      queue.push_back(nid);
    }
  }
  return orbit;
}

ExactVec dominant_representative(const ExactVec& v, const std::vector<ExactVec>& simple_roots) {
  ExactVec w = v;
  // straightening terminates within |W| reflections; the cap only guards
  // against a malformed base
  const long cap = 1000000;
  for (long iter = 0; iter < cap; ++iter) {
    bool moved = false;
    for (const auto& a : simple_roots) {
      if (dot(w, a).sign() < 0) {
        w = reflect(w, a);
        moved = true;
        break;
      }
    }
    if (!moved) return w;
  }
  throw std::logic_error("dominant_representative: iteration cap exceeded");
}

std::vector<std::pair<ExactVec, ExactVec>> orthogonal_root_pairs(const RootSystem& rs) {
  std::vector<std::pair<ExactVec, ExactVec>> pairs;
  const auto& r = rs.roots;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (!dot(r[i], r[j]).is_zero()) continue;
      if (lex_compare(r[j], -r[i]) == 0) continue;  // cannot happen when orthogonal, kept explicit
      pairs.emplace_back(r[i], r[j]);
    }
  }
  return pairs;
}

RootSystem subsystem(const RootSystem& rs, const std::function<bool(const ExactVec&)>& pred,
                     const std::string& label) {
  RootSystem sub;
  sub.type = rs.type;
  sub.label = label;
  sub.coord_dim = rs.coord_dim;
  for (const auto& r : rs.roots)
    if (pred(r)) sub.roots.push_back(r);
  for (const auto& r : sub.roots)
    if (!sub.contains_root(-r))
      throw std::invalid_argument("subsystem: selected set not closed under negation");
  sub.rank = exact_rank(sub.roots, sub.coord_dim);
  sub.simple_roots = compute_base(sub.roots, sub.coord_dim);
  sub.scale_note = "subsystem of " + rs.label;
  return sub;
}

ExactVec canonical_up_to_weyl_scale(const ExactVec& v, const std::vector<ExactVec>& simple_roots,
                                    bool dn_outer_flip) {
  auto canon_one = [&](ExactVec w) {
    w = dominant_representative(w, simple_roots);
    if (dn_outer_flip && !w.empty() && w.back().sign() < 0) {
      w.back() = -w.back();
      w = dominant_representative(w, simple_roots);
    }
    QF maxabs;
    for (const auto& x : w) {
      QF a = x.abs();
      if (a > maxabs) maxabs = a;
    }
    if (!maxabs.is_zero())
      for (auto& x : w) x /= maxabs;
    return w;
  };
  ExactVec c1 = canon_one(v);
  ExactVec c2 = canon_one(-v);
  return lex_compare(c1, c2) <= 0 ? c1 : c2;
}

}  // namespace ckf

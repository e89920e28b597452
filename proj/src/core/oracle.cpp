#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace mpr {

namespace {

// Position of every ambient coordinate in a pattern DBM (0 is the constant).
std::vector<std::size_t> positions(const std::vector<std::size_t>& coords, std::size_t n) {
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t p = 0; p < coords.size(); ++p) pos[coords[p]] = p + 1;
  return pos;
}

std::vector<std::size_t> pattern(unsigned mask, std::size_t n) {
  std::vector<std::size_t> c;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (1u << i)) c.push_back(i);
  return c;
}

MpVector restricted_point(const std::vector<std::size_t>& coords, const MpVector& x) {
  MpVector y(coords.size() + 1);
  y[0] = MpValue(0);
  for (std::size_t p = 0; p < coords.size(); ++p) y[p + 1] = x[coords[p]];
  return y;
}

void check_cap(std::size_t count, const OracleLimits& lim) {
  if (count > lim.max_members)
    throw OracleCapExceeded("oracle exceeded " + std::to_string(lim.max_members) + " DBMs");
}

struct Entry {
  std::size_t i, j;
  Bound b;
};
using Alternative = std::vector<Entry>;

// One side of a literal on a pattern: (position, offset) pairs, with the
// constant c sitting on position 0.
std::vector<std::pair<std::size_t, Rational>> side(const MpVector& coef, const MpValue& constant,
                                                  const std::vector<std::size_t>& coords) {
  std::vector<std::pair<std::size_t, Rational>> s;
  if (constant.is_finite()) s.emplace_back(0, constant.value());
  for (std::size_t p = 0; p < coords.size(); ++p)
    if (coef[coords[p]].is_finite()) s.emplace_back(p + 1, coef[coords[p]].value());
  return s;
}

std::vector<Alternative> literal_alternatives(const Literal& lit, const std::vector<std::size_t>& coords) {
  auto lhs = side(lit.h.a, lit.h.c, coords);
  auto rhs = side(lit.h.b, lit.h.d, coords);
  std::vector<Alternative> alts;
  if (!lit.complemented) {
    // max L <= max R: some r dominates every l.
    if (lhs.empty()) return {Alternative{}};
    for (const auto& [r, br] : rhs) {
      Alternative a;
      for (const auto& [l, al] : lhs) a.push_back({l, r, Bound::le(br - al)});
      alts.push_back(std::move(a));
    }
  } else {
    // max R < max L: some l beats every r.
    if (rhs.empty()) return lhs.empty() ? std::vector<Alternative>{} : std::vector<Alternative>{Alternative{}};
    for (const auto& [l, al] : lhs) {
      Alternative a;
      for (const auto& [r, br] : rhs) a.push_back({r, l, Bound::lt(al - br)});
      alts.push_back(std::move(a));
    }
  }
  return alts;
}

std::string key(const PatternDbm& m) {
  std::string k;
  for (auto c : m.coords) k += std::to_string(c) + ",";
  return k + "|" + to_string(m.dbm);
}

// For canonical DBMs on the same pattern: region(a) is inside region(b).
bool subsumed(const PatternDbm& a, const PatternDbm& b) {
  for (std::size_t i = 0; i < a.dbm.dim(); ++i)
    for (std::size_t j = 0; j < a.dbm.dim(); ++j)
      if (!looser_or_equal(b.dbm(i, j), a.dbm(i, j))) return false;
  return true;
}

// Drops duplicates and members contained in another member of the same pattern.
void dedupe(DbmUnion& u) {
  std::unordered_set<std::string> seen;
  std::map<std::vector<std::size_t>, std::vector<PatternDbm>> groups;
  for (auto& m : u.members)
    if (seen.insert(key(m)).second) groups[m.coords].push_back(std::move(m));
  u.members.clear();
  for (auto& [coords, group] : groups) {
    std::vector<PatternDbm> kept;
    for (std::size_t i = 0; i < group.size(); ++i) {
      bool covered = false;
      for (std::size_t j = 0; j < group.size() && !covered; ++j)
        covered = j != i && subsumed(group[i], group[j]) && (j < i || !subsumed(group[j], group[i]));
      if (!covered) kept.push_back(group[i]);
    }
    for (auto& m : kept) u.members.push_back(std::move(m));
  }
}

// Prunes once the cap is reached, and only then gives up.
void enforce_cap(DbmUnion& u, const OracleLimits& lim) {
  if (u.members.size() <= lim.max_members) return;
  dedupe(u);
  check_cap(u.members.size(), lim);
}

Bound shifted(const Bound& b, const Rational& delta) {
  if (!b.is_finite()) return b;
  return Bound::finite(b.magnitude() + delta, b.strict());
}

}  // namespace

bool PatternDbm::contains(const MpVector& x) const {
  std::size_t p = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    bool in_pattern = p < coords.size() && coords[p] == i;
    if (in_pattern) ++p;
    if (in_pattern != x[i].is_finite()) return false;
  }
  return dbm_member(dbm, restricted_point(coords, x));
}

bool PatternDbm::closure_contains(const MpVector& x) const {
  std::size_t p = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    bool in_pattern = p < coords.size() && coords[p] == i;
    if (in_pattern) ++p;
    if (!in_pattern && x[i].is_finite()) return false;
  }
  return dbm_member(dbm_close(dbm), restricted_point(coords, x));
}

bool DbmUnion::contains(const MpVector& x) const {
  if (x.size() != dim) throw DimensionError("DbmUnion::contains: dimension mismatch");
  return std::any_of(members.begin(), members.end(), [&](const PatternDbm& m) { return m.contains(x); });
}

bool DbmUnion::closure_contains(const MpVector& x) const {
  if (x.size() != dim) throw DimensionError("DbmUnion::closure_contains: dimension mismatch");
  return std::any_of(members.begin(), members.end(),
                     [&](const PatternDbm& m) { return m.closure_contains(x); });
}

void DbmUnion::add(PatternDbm m) {
  m.dbm = kleene_star(m.dbm);
  if (dbm_is_empty(m.dbm)) return;
  members.push_back(std::move(m));
}

DbmUnion setexpr_to_dbm_union(const SetExpr& s, std::size_t n, const OracleLimits& lim) {
  if (n > lim.max_dim) throw OracleCapExceeded("oracle dimension cap exceeded");
  s.check_dim(n);
  const auto terms = literal_dnf(s);
  DbmUnion u;
  u.dim = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const auto coords = pattern(mask, n);
    for (const auto& t : terms) {
      std::vector<Dbm> partial{Dbm(coords.size() + 1)};
      for (const auto& lit : t) {
        auto alts = literal_alternatives(lit, coords);
        std::vector<Dbm> next;
        for (const auto& d : partial)
          for (const auto& alt : alts) {
            Dbm e = d;
            for (const auto& c : alt) e.constrain(c.i, c.j, c.b);
            e = kleene_star(e);
            if (!dbm_is_empty(e)) next.push_back(std::move(e));
          }
        partial = std::move(next);
        check_cap(partial.size() + u.members.size(), lim);
      }
      for (auto& d : partial) u.add({coords, std::move(d)});
    }
  }
  dedupe(u);
  return u;
}

std::vector<PwaRegion> pwa_partition(const MpMatrix& f, const OracleLimits& lim) {
  const std::size_t k = f.cols();
  if (k > lim.max_dim) throw OracleCapExceeded("oracle dimension cap exceeded");
  std::vector<PwaRegion> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    const auto coords = pattern(mask, k);
    const auto pos = positions(coords, k);
    std::vector<std::vector<std::size_t>> candidates(f.rows());
    for (std::size_t i = 0; i < f.rows(); ++i)
      for (auto j : coords)
        if (f(i, j).is_finite()) candidates[i].push_back(j);

    // Odometer over one candidate per row; rows without candidates stay epsilon.
    std::vector<std::size_t> pick(f.rows(), 0);
    for (;;) {
      PwaRegion r;
      r.region.coords = coords;
      r.region.dbm = Dbm(coords.size() + 1);
      for (std::size_t i = 0; i < f.rows(); ++i) {
        if (candidates[i].empty()) {
          r.selection.emplace_back();
          r.offsets.emplace_back();
          continue;
        }
        const std::size_t g = candidates[i][pick[i]];
        r.selection.emplace_back(g);
        r.offsets.push_back(f(i, g));
        for (auto j : candidates[i])
          r.region.dbm.constrain(pos[j], pos[g], Bound::le(f(i, g).value() - f(i, j).value()));
      }
      r.region.dbm = kleene_star(r.region.dbm);
      if (!dbm_is_empty(r.region.dbm)) {
        out.push_back(std::move(r));
        check_cap(out.size(), lim);
      }
      std::size_t i = 0;
      for (; i < f.rows(); ++i) {
        if (candidates[i].empty()) continue;
        if (++pick[i] < candidates[i].size()) break;
        pick[i] = 0;
      }
      if (i == f.rows()) break;
    }
  }
  return out;
}

DbmUnion inverse_image(const MpMatrix& f, const DbmUnion& x, const OracleLimits& lim) {
  if (x.dim != f.rows()) throw DimensionError("inverse_image: dimension mismatch");
  const auto regions = pwa_partition(f, lim);
  DbmUnion out;
  out.dim = f.cols();
  for (const auto& r : regions) {
    std::vector<std::size_t> image;
    for (std::size_t i = 0; i < r.selection.size(); ++i)
      if (r.selection[i]) image.push_back(i);
    const auto ypos = positions(r.region.coords, f.cols());

    // Position in the region DBM and offset of each position of an X member.
    std::vector<std::size_t> to(image.size() + 1, 0);
    std::vector<Rational> off(image.size() + 1, Rational(0));
    for (std::size_t p = 0; p < image.size(); ++p) {
      to[p + 1] = ypos[*r.selection[image[p]]];
      off[p + 1] = r.offsets[image[p]].value();
    }
    for (const auto& m : x.members) {
      if (m.coords != image) continue;
      Dbm d = r.region.dbm;
      for (std::size_t i = 0; i < to.size(); ++i)
        for (std::size_t j = 0; j < to.size(); ++j) {
          const Bound& b = m.dbm(i, j);
          if (b.is_pos_inf()) continue;
          d.constrain(to[i], to[j], shifted(b, off[j] - off[i]));
        }
      out.add({r.region.coords, std::move(d)});
      enforce_cap(out, lim);
    }
  }
  dedupe(out);
  return out;
}

DbmUnion oracle_backward(const MplSystem& sys, const DbmUnion& target, const OracleLimits& lim) {
  sys.validate();
  if (sys.n + sys.m > lim.max_dim) throw OracleCapExceeded("oracle dimension cap exceeded (n + m > 6)");
  if (target.dim != sys.n) throw DimensionError("oracle_backward: target dimension mismatch");
  const DbmUnion pre = inverse_image(hconcat(sys.A, sys.B), target, lim);
  const DbmUnion u = setexpr_to_dbm_union(sys.U, sys.m, lim);

  DbmUnion out;
  out.dim = sys.n;
  for (const auto& p : pre.members) {
    std::vector<std::size_t> xs, us, keep{0};
    for (std::size_t q = 0; q < p.coords.size(); ++q) {
      if (p.coords[q] < sys.n) {
        xs.push_back(p.coords[q]);
        keep.push_back(q + 1);
      } else {
        us.push_back(p.coords[q] - sys.n);
      }
    }
    // Control coordinates come after the state ones in p.coords.
    const std::size_t first_u = xs.size() + 1;
    for (const auto& c : u.members) {
      if (c.coords != us) continue;
      Dbm d = p.dbm;
      for (std::size_t i = 0; i <= us.size(); ++i)
        for (std::size_t j = 0; j <= us.size(); ++j) {
          const Bound& b = c.dbm(i, j);
          if (b.is_pos_inf()) continue;
          d.constrain(i ? first_u + i - 1 : 0, j ? first_u + j - 1 : 0, b);
        }
      out.add({xs, dbm_restrict(d, keep)});
      enforce_cap(out, lim);
    }
  }
  dedupe(out);
  return out;
}

DbmUnion oracle_backward(const MplSystem& sys, const SetExpr& target, const OracleLimits& lim) {
  return oracle_backward(sys, setexpr_to_dbm_union(target, sys.n, lim), lim);
}

DbmUnion oracle_backward(const MplSystem& sys, const SetExpr& target, unsigned steps,
                         const OracleLimits& lim) {
  if (steps == 0) throw DomainError("the number of steps must be at least 1");
  DbmUnion x = setexpr_to_dbm_union(target, sys.n, lim);
  for (unsigned k = 0; k < steps; ++k) x = oracle_backward(sys, x, lim);
  return x;
}

}  // namespace mpr

// Copyright 2026 The Geomink Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "proximity.hpp"

#include <deque>

#include "minkowski.hpp"

namespace geomink {

const char* placement_name(Placement p) {
  switch (p) {
    case Placement::INSIDE: return "inside";
    case Placement::ON_BOUNDARY: return "on_boundary";
    case Placement::OUTSIDE: return "outside";
  }
  return "?";
}

PolytopeQuery::PolytopeQuery(GaussianMap m) : m_(std::move(m)) {
  t_ = facet_table(m_);
  mesh_ = primal_mesh(m_);
  for (const auto& v : mesh_.vertices) c_ = c_ + v;
  c_ = Rational(1, static_cast<long>(mesh_.vertices.size())) * c_;
}

namespace {

Witness make_witness(const FacetTable& t, int f, Placement p, int steps) {
  return Witness{p, f, t.normal[f], t.offset[f], steps};
}

Placement place(const Rational& exit_t) {
  if (exit_t > 1) return Placement::INSIDE;
  if (exit_t == 1) return Placement::ON_BOUNDARY;
  return Placement::OUTSIDE;
}

}  // namespace

Witness PolytopeQuery::classify(const Vec3& s, std::optional<int> hint) const {
  const int nf = static_cast<int>(t_.normal.size());
  Vec3 r = s - c_;
  if (r.is_zero()) return make_witness(t_, 0, Placement::INSIDE, 0);
  // Ray c + t r leaves facet f's halfspace at t_f when <n_f, r> > 0.
  auto facing = [&](int f) { return dot_sign(t_.normal[f], r) == Sign::POSITIVE; };
  auto exit_t = [&](int f) -> Rational { return (t_.offset[f] - dot(t_.normal[f], c_)) / dot(t_.normal[f], r); };

  int cur = -1;
  if (hint && *hint >= 0 && *hint < nf && facing(*hint)) cur = *hint;
  if (cur < 0) {
    // Best direction match: maximize <n, r>^2 / |n|^2 over facing facets.
    Rational best;
    for (int f = 0; f < nf; ++f) {
      if (!facing(f)) continue;
      Rational d = dot(t_.normal[f], r);
      Rational score = d * d / norm2(t_.normal[f]);
      if (cur < 0 || score > best) {
        cur = f;
        best = score;
      }
    }
  }
  Rational tc = exit_t(cur);
  int steps = 0;
  for (;;) {
    int nxt = -1;
    Rational tn;
    for (int g : t_.adj[cur]) {
      if (!facing(g)) continue;
      Rational tg = exit_t(g);
      if (tg < tc && (nxt < 0 || tg < tn)) {
        nxt = g;
        tn = tg;
      }
    }
    if (nxt < 0) break;
    cur = nxt;
    tc = tn;
    ++steps;
  }
  // All facets whose planes hold the exit point are connected through
  // adjacency; report the lexicographically smallest normal.
  std::vector<char> seen(nf, 0);
  std::deque<int> queue{cur};
  seen[cur] = 1;
  int pick = cur;
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    if (lex_less(t_.normal[f], t_.normal[pick])) pick = f;
    for (int g : t_.adj[f])
      if (!seen[g] && facing(g) && exit_t(g) == tc) {
        seen[g] = 1;
        queue.push_back(g);
      }
  }
  return make_witness(t_, pick, place(tc), steps);
}

Placement PolytopeQuery::classify_brute(const Vec3& s) const {
  bool on = false;
  for (size_t f = 0; f < t_.normal.size(); ++f) {
    Rational d = dot(t_.normal[f], s);
    if (d > t_.offset[f]) return Placement::OUTSIDE;
    if (d == t_.offset[f]) on = true;
  }
  return on ? Placement::ON_BOUNDARY : Placement::INSIDE;
}

Witness classify_point(const PolytopeQuery& q, const Vec3& s, std::optional<int> hint) {
  return q.classify(s, hint);
}

Collision collide(const GaussianMap& p, const GaussianMap& q, const Vec3& u, const Vec3& w,
                  std::unique_ptr<PolytopeQuery>* cache) {
  std::unique_ptr<PolytopeQuery> local;
  std::unique_ptr<PolytopeQuery>& slot = cache ? *cache : local;
  if (!slot) slot = std::make_unique<PolytopeQuery>(minkowski(p, reflect(q)));
  Collision c;
  c.witness = slot->classify(w - u);
  c.contact = c.witness.placement != Placement::OUTSIDE;
  return c;
}

Rational separation_sq(const PolytopeQuery& q, const Vec3& s) {
  if (q.classify(s).placement != Placement::OUTSIDE) return Rational(0);
  const Mesh& m = q.mesh();
  bool have = false;
  Rational best;
  auto consider = [&](const Rational& d) {
    if (!have || d < best) {
      best = d;
      have = true;
    }
  };
  for (size_t f = 0; f < m.facets.size(); ++f) {
    const auto& c = m.facets[f];
    Vec3 n = facet_normal(m, static_cast<int>(f));
    Rational h = dot(n, m.vertices[c[0]]);
    Rational gap = dot(n, s) - h;
    Vec3 proj = s - (gap / norm2(n)) * n;
    bool inside = true;
    for (size_t i = 0; i < c.size() && inside; ++i) {
      const Vec3& a = m.vertices[c[i]];
      const Vec3& b = m.vertices[c[(i + 1) % c.size()]];
      inside = dot_sign(cross(b - a, proj - a), n) != Sign::NEGATIVE;
    }
    if (inside) consider(gap * gap / norm2(n));
    for (size_t i = 0; i < c.size(); ++i) {
      const Vec3& a = m.vertices[c[i]];
      const Vec3& b = m.vertices[c[(i + 1) % c.size()]];
      Vec3 e = b - a;
      Rational t = dot(s - a, e) / norm2(e);
      if (t < 0) t = 0;
      if (t > 1) t = 1;
      consider(norm2(s - (a + t * e)));
    }
  }
  return best;
}

Penetration directional_penetration(const PolytopeQuery& q, const Vec3& s, const Vec3& r) {
  if (r.is_zero()) fail(ErrorCode::kZeroVector, "penetration direction is zero");
  if (q.classify(s).placement == Placement::OUTSIDE)
    fail(ErrorCode::kPointOutside, "query point lies outside the polytope");
  const FacetTable& t = q.facets();
  Penetration p;
  for (int f = 0; f < static_cast<int>(t.normal.size()); ++f) {
    Rational d = dot(t.normal[f], r);
    if (sign_of(d) != Sign::POSITIVE) continue;
    Rational a = (t.offset[f] - dot(t.normal[f], s)) / d;
    if (p.facet < 0 || a < p.alpha || (a == p.alpha && lex_less(t.normal[f], t.normal[p.facet]))) {
      p.alpha = a;
      p.facet = f;
    }
  }
  p.exit = s + p.alpha * r;
  return p;
}

}  // namespace geomink

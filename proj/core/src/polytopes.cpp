#include "weylext/polytopes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "weylext/digits.hpp"

namespace weylext {

namespace {
using Wide = __int128;  // membership accepts arbitrary tuples
}

bool in_poly_c(Prime pr, const PolytopeElement4& e) {
  const Int p = pr.value();
  if (!(1 <= e.s && e.s <= e.t && e.t <= p)) return false;
  if (!(0 <= e.j0 + e.k0 && e.j0 + e.k0 <= 1)) return false;
  if (e.t - e.s != e.j0 + 2 * e.k0) return false;
  if (e.s == e.t && !(e.j0 == 0 && e.k0 == 0)) return false;
  return true;
}

bool in_poly_zero(Prime pr, const PolytopeElement4& e) {
  const Int p = pr.value();
  if (!(1 <= e.s && e.s <= p && 1 <= e.t && e.t <= p)) return false;
  if (e.s + e.t != p + 1) return false;
  if (e.j0 != 0 || e.k0 != 0) return false;
  if (e.s == p && e.t == 1) return false;  // excluded corner (p,0,0,1)
  return true;
}

bool in_poly_m(Prime pr, const PolytopeElement4& e) {
  const Int p = pr.value();
  if (!(1 <= e.s && e.s <= p && 1 <= e.t && e.t <= p)) return false;
  if (e.j0 + 2 * e.k0 + 2 != e.t - 1 - e.s + p) return false;
  if (!(0 <= e.j0 + e.k0 + 2 && e.j0 + e.k0 + 2 <= 1)) return false;
  return true;
}

bool in_poly_mbar(Prime pr, const PolytopeElement4& e) {
  const Int p = pr.value();
  if (e.s == p && e.j0 == 0 && e.k0 == -1 && e.t == 1)
    return false;  // excluded corner (p,0,-1,1)
  return in_poly_m(pr, e);
}

std::array<Int, 3> convert_ijk(Prime pr, Int j0, Int k0, Int a, Int b) {
  if (a < b - 1) throw std::domain_error("degree conversion needs a >= b-1");
  const Int p = pr.value();
  auto narrow = [](Wide value) {
    if (value > std::numeric_limits<Int>::max() ||
        value < std::numeric_limits<Int>::min())
      throw std::out_of_range("converted degree exceeds the representable range");
    return static_cast<Int>(value);
  };
  const Int i = narrow(-Wide{a} - b);
  Int j, k;
  if (a >= b + 1) {
    j = narrow(j0 - (Wide{a} - b - 1) * p + 1);
    k = narrow(k0 + (Wide{a} - b - 1) * (p - 1));
  } else if (a == b) {
    j = j0;
    k = k0;
  } else {  // a == b - 1
    j = j0 + 1;
    k = k0;
  }
  return {i, j, k};
}

bool in_s1(Prime pr, const UpsilonElement& v) {
  const Int p = pr.value();
  if (!(1 <= v.s && v.s <= p && 1 <= v.t && v.t <= p)) return false;
  if (!(v.a >= v.b && v.b >= 0)) return false;
  const Wide c = Wide{v.a} - v.b;
  const Int w = v.t - v.s;
  if (c == 0 && w < 0) return false;
  if (v.i != -Wide{v.a} - v.b) return false;
  // Recover u from the j-component, then check the k-component and the two
  // degenerate-side conditions.
  const Wide two_u = v.j + p * c + w;
  if (two_u != 0 && two_u != 2) return false;
  const Int u = static_cast<Int>(two_u / 2);
  if (v.k != (p - 1) * c + w - u) return false;
  if (w == 0 && c == 0 && u != 0) return false;
  if (u == 1 && c == 1 && w < 2 - p) return false;
  return true;
}

bool in_s2(Prime pr, const UpsilonElement& v) {
  const Int p = pr.value();
  if (!(1 <= v.s && v.s <= p - 1)) return false;
  if (v.t != p + 1 - v.s) return false;
  if (v.a < 0 || v.b != v.a + 1) return false;
  return v.i == -2 * Wide{v.a} - 1 && v.j == 1 && v.k == 0;
}

bool in_s3(Prime pr, const UpsilonElement& v) {
  const Int p = pr.value();
  if (!(1 <= v.s && v.s <= p)) return false;
  return v.i == 1 && v.j == 1 && v.k == 0 && v.a == 0 && v.b == 0 &&
         v.t == p + 1 - v.s;
}

std::vector<UpsilonElement> enumerate_upsilon(Prime pr, Int s, Int t, Int i) {
  const Int p = pr.value();
  if (i < -(Int{1} << 31))
    throw std::out_of_range("fiber exceeds the serviceable size");
  std::vector<UpsilonElement> out;
  if (i <= 0) {
    // S1: a + b = -i, a >= b >= 0, u in {0,1}. Candidates are built and then
    // filtered through the membership test so the side conditions live in
    // exactly one place.
    for (Int b = 0; b <= (-i) / 2; ++b) {
      const Int a = -i - b;
      const Int c = a - b;
      for (Int u = 0; u <= 1; ++u) {
        UpsilonElement v{s,
                         i,
                         -p * c - (t - s) + 2 * u,
                         (p - 1) * c + (t - s) - u,
                         a,
                         b,
                         t};
        if (in_s1(pr, v)) out.push_back(v);
      }
    }
    // S2 needs i odd and negative.
    if (i < 0 && mod_residue(i, 2) == 1) {
      const Int a = (-i - 1) / 2;
      UpsilonElement v{s, i, 1, 0, a, a + 1, t};
      if (in_s2(pr, v)) out.push_back(v);
    }
  } else if (i == 1) {
    UpsilonElement v{s, 1, 1, 0, 0, 0, t};
    if (in_s3(pr, v)) out.push_back(v);
  }
  for (const auto& v : out)
    if (v.k < 0)
      throw std::logic_error("element with negative cohomological degree");
  return out;
}

std::vector<BasisTuple> enumerate_basis(Prime pr, int q, Int k, Int m,
                                        Int ell) {
  const auto sc = digits_of(pr, q, m);
  const auto tc = digits_of(pr, q, ell);

  std::vector<BasisTuple> tuples;
  BasisTuple partial;
  partial.reserve(static_cast<std::size_t>(q));

  // Depth-first chaining; pruning by partial degree sum is valid because
  // every fiber element has k >= 0 (enforced in enumerate_upsilon).
  auto dfs = [&](auto&& self, int g, Int chain_i, Int ksum) -> void {
    if (g > q) {
      if (ksum == k) tuples.push_back(partial);
      return;
    }
    const std::size_t idx = static_cast<std::size_t>(g - 1);
    for (const auto& v :
         enumerate_upsilon(pr, sc.digits[idx], tc.digits[idx], chain_i)) {
      if (ksum + v.k > k) continue;
      partial.push_back(v);
      self(self, g + 1, v.j, ksum + v.k);
      partial.pop_back();
    }
  };
  dfs(dfs, 1, 0, 0);
  return tuples;
}

namespace {

// Shared state for the case-shape enumeration.
struct CaseContext {
  Prime p;
  int q;
  Int k;
  std::vector<Int> s, t, w;
  std::vector<int> parW;
  std::vector<BasisTuple>* out;
};

UpsilonElement make_run_element(const CaseContext& ctx, int g, Int c_prev,
                                Int u_prev, Int c, Int u) {
  const Int p = ctx.p.value();
  const std::size_t gi = static_cast<std::size_t>(g - 1);
  const Int w_prev = g >= 2 ? ctx.w[gi - 1] : 0;
  const Int w_cur = ctx.w[gi];
  const Int head = p * c_prev + w_prev - 2 * u_prev;
  if (parity(c + head) != 0)
    throw std::logic_error("odd diagonal split in case enumeration");
  return UpsilonElement{ctx.s[gi],
                        -head,
                        -p * c - w_cur + 2 * u,
                        (p - 1) * c + w_cur - u,
                        (c + head) / 2,
                        (-c + head) / 2,
                        ctx.t[gi]};
}

bool mirrored_tail(const CaseContext& ctx, int from) {
  const Int p = ctx.p.value();
  for (int g = from; g <= ctx.q; ++g) {
    const std::size_t gi = static_cast<std::size_t>(g - 1);
    if (ctx.t[gi] != p + 1 - ctx.s[gi]) return false;
  }
  return true;
}

// Enumerates the leading run of length h over (u_g, c_g), calling emit with
// (c_h, u_h, degree sum) for every run satisfying the two-sided bound chain.
// If allow_final_degenerate is true the position g = h may instead take the
// degenerate branch c_h = 0, u_h = 1 (requires w_h = 1), which closes a run
// that is followed by mirror elements or ends the tuple.
template <typename Emit>
void enumerate_run(const CaseContext& ctx, int h, bool allow_final_degenerate,
                   bool two_sided_final, Emit&& emit) {
  const Int p = ctx.p.value();
  BasisTuple run;
  run.reserve(static_cast<std::size_t>(h));

  auto rec = [&](auto&& self, int g, Int c_prev, Int u_prev, Int ksum) -> void {
    if (g > h) {
      emit(run, c_prev, u_prev, ksum);
      return;
    }
    const std::size_t gi = static_cast<std::size_t>(g - 1);
    const Int w_prev = g >= 2 ? ctx.w[gi - 1] : 0;
    const Int w_cur = ctx.w[gi];
    const Int upper = p * c_prev + w_prev - 2 * u_prev;
    const bool last = g == h;
    for (Int u = 0; u <= 1; ++u) {
      if (!last || two_sided_final) {
        Int lo = ceil_div(2 * u - w_cur, p);
        if (parity(lo) != ctx.parW[gi]) ++lo;
        for (Int c = lo; c <= upper; c += 2) {
          const Int kg = (p - 1) * c + w_cur - u;
          if (ksum + kg > ctx.k) continue;
          run.push_back(make_run_element(ctx, g, c_prev, u_prev, c, u));
          self(self, g + 1, c, u, ksum + kg);
          run.pop_back();
        }
      }
      if (last && allow_final_degenerate && u == 1 && w_cur == 1 &&
          ctx.parW[gi] == 0 && 0 <= upper) {
        // degenerate close: c_h = 0, u_h = 1, w_h = 1; contributes degree 0
        run.push_back(make_run_element(ctx, g, c_prev, u_prev, 0, 1));
        self(self, g + 1, 0, 1, ksum);
        run.pop_back();
      }
    }
  };
  rec(rec, 1, 0, 0, 0);
}

void cases_shape_all_run(const CaseContext& ctx) {
  // shape (1^q): a full-length run; the last position may close degenerately.
  enumerate_run(ctx, ctx.q, /*allow_final_degenerate=*/true,
                /*two_sided_final=*/true,
                [&](const BasisTuple& run, Int, Int, Int ksum) {
                  if (ksum == ctx.k) ctx.out->push_back(run);
                });
}

void cases_shape_bridge(const CaseContext& ctx, int h) {
  // shape (1^h 2 3^(q-h-1)): run of length h, one bridging element, mirrors.
  const Int p = ctx.p.value();
  const std::size_t hi = static_cast<std::size_t>(h);
  if (ctx.parW[hi] != 1) return;
  if (ctx.s[hi] > p - 1) return;
  if (!mirrored_tail(ctx, h + 1)) return;
  enumerate_run(ctx, h, /*allow_final_degenerate=*/false,
                /*two_sided_final=*/true,
                [&](const BasisTuple& run, Int c_h, Int u_h, Int ksum) {
                  if (ksum != ctx.k) return;
                  BasisTuple tuple = run;
                  const Int w_h = ctx.w[hi - 1];
                  const Int head = p * c_h + w_h - 2 * u_h;
                  tuple.push_back(UpsilonElement{ctx.s[hi], -head, 1, 0,
                                                 (head - 1) / 2, (head + 1) / 2,
                                                 1 + p - ctx.s[hi]});
                  for (int g = h + 2; g <= ctx.q; ++g) {
                    const Int sg = ctx.s[static_cast<std::size_t>(g - 1)];
                    tuple.push_back(UpsilonElement{sg, 1, 1, 0, 0, 0, p + 1 - sg});
                  }
                  ctx.out->push_back(std::move(tuple));
                });
}

void cases_shape_mirror(const CaseContext& ctx, int h) {
  // shape (1^h 3^(q-h)): run of length h closed degenerately, then mirrors.
  const Int p = ctx.p.value();
  if (!mirrored_tail(ctx, h + 1)) return;
  enumerate_run(ctx, h, /*allow_final_degenerate=*/true,
                /*two_sided_final=*/false,
                [&](const BasisTuple& run, Int, Int, Int ksum) {
                  if (ksum != ctx.k) return;
                  BasisTuple tuple = run;
                  for (int g = h + 1; g <= ctx.q; ++g) {
                    const Int sg = ctx.s[static_cast<std::size_t>(g - 1)];
                    tuple.push_back(UpsilonElement{sg, 1, 1, 0, 0, 0, p + 1 - sg});
                  }
                  ctx.out->push_back(std::move(tuple));
                });
}

}  // namespace

std::vector<BasisTuple> enumerate_cases(Prime pr, int q, Int k, Int m,
                                        Int ell) {
  const auto sc = digits_of(pr, q, m);
  const auto tc = digits_of(pr, q, ell);
  const auto w = weight_deltas(sc.digits, tc.digits);
  const auto parW = parity_prefix(pr, w);

  std::vector<BasisTuple> tuples;
  CaseContext ctx{pr, q, k, sc.digits, tc.digits, w, parW, &tuples};

  cases_shape_all_run(ctx);
  for (int h = 1; h <= q - 1; ++h) {
    cases_shape_bridge(ctx, h);
    cases_shape_mirror(ctx, h);
  }
  std::sort(tuples.begin(), tuples.end());
  return tuples;
}

namespace {

// All (j0, k0) pairs lying in the given polytope for some (s, t); ranges are
// finite since each polytope pins j0 + 2*k0 and j0 + k0.
template <typename Member>
std::vector<PolytopeElement4> polytope_points(Prime pr, Member member) {
  const Int p = pr.value();
  std::vector<PolytopeElement4> pts;
  for (Int s = 1; s <= p; ++s)
    for (Int t = 1; t <= p; ++t)
      for (Int k0 = -2 * p - 4; k0 <= 2 * p + 4; ++k0)
        for (Int j0 = -4 * p - 8; j0 <= 4 * p + 8; ++j0) {
          PolytopeElement4 e{s, j0, k0, t};
          if (member(pr, e)) pts.push_back(e);
        }
  return pts;
}

}  // namespace

bool verify_decomposition(Prime pr, Int ab_bound) {
  const Int p = pr.value();

  // Image of the Z^6 construction within the (a, b) bound.
  std::set<UpsilonElement> constructed;
  auto add_points = [&](const std::vector<PolytopeElement4>& pts, Int a, Int b) {
    for (const auto& e : pts) {
      const auto ijk = convert_ijk(pr, e.j0, e.k0, a, b);
      constructed.insert(UpsilonElement{e.s, ijk[0], ijk[1], ijk[2], a, b, e.t});
    }
  };
  const auto pts_c = polytope_points(pr, in_poly_c);
  const auto pts_zero = polytope_points(pr, in_poly_zero);
  const auto pts_m = polytope_points(pr, in_poly_m);
  const auto pts_mbar = polytope_points(pr, in_poly_mbar);
  for (Int a = 0; a <= ab_bound; ++a)
    for (Int b = 0; b <= ab_bound; ++b) {
      if (a == b) add_points(pts_c, a, b);
      if (a == b - 1) add_points(pts_zero, a, b);
      if (a == b + 1) add_points(pts_mbar, a, b);
      if (a > b + 1) add_points(pts_m, a, b);
    }
  for (Int s = 1; s <= p; ++s)
    constructed.insert(UpsilonElement{s, 1, 1, 0, 0, 0, p + 1 - s});

  // Direct members of S1, S2, S3 within the bound.
  std::set<UpsilonElement> direct;
  for (Int s = 1; s <= p; ++s)
    for (Int t = 1; t <= p; ++t)
      for (Int a = 0; a <= ab_bound; ++a)
        for (Int b = 0; b <= ab_bound; ++b) {
          for (Int u = 0; u <= 1; ++u) {
            UpsilonElement v{s,
                             -a - b,
                             -p * (a - b) - (t - s) + 2 * u,
                             (p - 1) * (a - b) + (t - s) - u,
                             a,
                             b,
                             t};
            if (in_s1(pr, v)) direct.insert(v);
          }
          UpsilonElement v2{s, -2 * a - 1, 1, 0, a, a + 1, t};
          if (v2.b <= ab_bound && in_s2(pr, v2)) direct.insert(v2);
          UpsilonElement v3{s, 1, 1, 0, 0, 0, t};
          if (in_s3(pr, v3)) direct.insert(v3);
        }

  // (a) pairwise disjointness on everything seen.
  for (const auto& v : direct) {
    const int hits = (in_s1(pr, v) ? 1 : 0) + (in_s2(pr, v) ? 1 : 0) +
                     (in_s3(pr, v) ? 1 : 0);
    if (hits != 1) return false;
  }
  // (b) the two constructions agree.
  return constructed == direct;
}

}  // namespace weylext

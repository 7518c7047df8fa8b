#include "segtool/cancel.hpp"

#include "segtool/error.hpp"
#include "segtool/random.hpp"

namespace segtool {

namespace {

void check_input(const CancellationInput& in) {
  const int n = in.x.ambient_dim();
  if (in.y_degrees.rank() > n)
    throw Error(ErrorCode::rank_mismatch, "Y is cut by " + std::to_string(in.y_degrees.rank()) +
                                              " hypersurfaces in P^" + std::to_string(n));
  for (int d : in.y_degrees.degrees)
    if (d < 1) throw Error(ErrorCode::out_of_range, "hypersurface degrees must be positive");
  if (in.dim_x < 0 || in.dim_x > n - in.y_degrees.rank())
    throw Error(ErrorCode::out_of_range, "dim X = " + std::to_string(in.dim_x) +
                                             " does not fit inside Y");
  if (in.y) {
    if (!same_ring(in.y->ring(), in.x.ring()))
      throw Error(ErrorCode::ring_mismatch, "X and Y live in different rings");
    if (!in.y->is_homogeneous())
      throw Error(ErrorCode::inhomogeneous, "equations of Y are not homogeneous");
    const HilbertData hy = hilbert_dim_degree(*in.y);
    if (hy.projective_dim != n - in.y_degrees.rank())
      throw Error(ErrorCode::rank_mismatch,
                  "Y has dimension " + std::to_string(hy.projective_dim) + ", but " +
                      std::to_string(in.y_degrees.rank()) + " equations in P^" +
                      std::to_string(n) + " cut out dimension " +
                      std::to_string(n - in.y_degrees.rank()));
    if (!ideal_contains(in.x.ideal, *in.y))
      throw Error(ErrorCode::containment, "'" + in.x.label + "' is not contained in Y");
  }
  if (in.point && static_cast<int>(in.point->size()) != n + 1)
    throw Error(ErrorCode::invalid_argument, "point has the wrong number of coordinates");
}

}  // namespace

std::string CancellationReport::label() const {
  return hypothesis_asserted ? "cancellation value" : "formal pipeline value";
}

CancellationReport cancel_segre(const CancellationInput& in, std::uint64_t seed,
                                const SegreOptions& options) {
  check_input(in);
  CancellationReport out;
  out.hypothesis_asserted = in.hypothesis_asserted;
  out.sxz = segre_class(in.x, seed, options);
  out.seeds.push_back(seed);
  if (options.check_second_seed) out.seeds.push_back(derive_seed(seed, 0x5e9e));
  if (out.sxz.dim_x != in.dim_x)
    throw Error(ErrorCode::invalid_argument,
                "'" + in.x.label + "' has dimension " + std::to_string(out.sxz.dim_x) +
                    ", not " + std::to_string(in.dim_x));
  out.sxy = to_dim_indexed(cap_with_bundle(in.y_degrees, out.sxz.cls), in.dim_x);

  if (in.point && in.dim_x == 0) {
    // Y = P^n is smooth everywhere.
    out.direct_check = in.y ? point_segre_multiplicity(SchemeSpec(*in.y, "Y"), *in.point)
                            : Integer(1);
    out.agrees = out.sxy.at(0) == Rational(*out.direct_check);
  }
  return out;
}

IndependenceReport verify_independence(const CancellationInput& a, const CancellationInput& b,
                                       std::uint64_t seed, const SegreOptions& options) {
  if (a.dim_x != b.dim_x)
    throw Error(ErrorCode::invalid_comparison,
                "embeddings disagree on dim X (" + std::to_string(a.dim_x) + " vs " +
                    std::to_string(b.dim_x) + ")");
  IndependenceReport r;
  r.first = cancel_segre(a, seed, options);
  r.second = cancel_segre(b, seed, options);
  r.agree = r.first.sxy == r.second.sxy;
  return r;
}

CancellationInput embed_in_hyperplane(const CancellationInput& in, const Polynomial& l) {
  const RingPtr& ring = in.x.ring();
  if (!same_ring(l.ring(), ring))
    throw Error(ErrorCode::ring_mismatch, "linear form lives in another ring");
  if (!l.is_homogeneous() || l.total_degree() != 1)
    throw Error(ErrorCode::invalid_argument, "embedding needs a linear form");

  std::vector<std::string> vars = ring->variables();
  std::string t = "t";
  for (int k = 1; ring->index_of(t); ++k) t = "t" + std::to_string(k);
  vars.push_back(t);
  const RingPtr target = Ring::make(ring->name() + "_" + t, std::move(vars));

  std::vector<Polynomial> forms;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) forms.push_back(Polynomial::variable(ring, i));
  forms.push_back(l);

  CancellationInput out{SchemeSpec(image_under_map(in.x.ideal, forms, target), in.x.label),
                        in.y_degrees, in.dim_x, in.hypothesis_asserted, std::nullopt,
                        std::nullopt};
  out.y_degrees.degrees.push_back(1);
  out.y = image_under_map(in.y ? *in.y : Ideal::zero(ring), forms, target);
  if (in.point) {
    std::vector<Rational> p = *in.point;
    p.push_back(l.evaluate(*in.point));
    out.point = std::move(p);
  }
  return out;
}

CompositionReport verify_composition(int r, int m, int n, const SplitBundle& degrees_y_in_z,
                                     const SplitBundle& degrees_x_in_y) {
  if (r < 0 || r > m || m > n)
    throw Error(ErrorCode::out_of_range, "flag dimensions need 0 <= r <= m <= n");
  if (degrees_x_in_y.rank() != m - r || degrees_y_in_z.rank() != n - m)
    throw Error(ErrorCode::rank_mismatch, "normal bundle ranks must be m - r and n - m");
  for (const auto* b : {&degrees_y_in_z, &degrees_x_in_y})
    for (int d : b->degrees)
      if (d < 1) throw Error(ErrorCode::out_of_range, "hypersurface degrees must be positive");

  Integer deg_y = 1, cut = 1;
  for (int d : degrees_y_in_z.degrees) deg_y *= d;
  for (int d : degrees_x_in_y.degrees) cut *= d;

  const SegreResult s_xz = regular_segre_oracle(r, deg_y * cut, degrees_x_in_y + degrees_y_in_z, n);
  const SegreResult s_yz = regular_segre_oracle(m, deg_y, degrees_y_in_z, n);

  CompositionReport out{false, cap_with_bundle(degrees_x_in_y, s_xz.cls),
                        // i_* i^* a = a . [X] in Y, and [X] is cut by the d_j h
                        class_mul(s_yz.cls, ChowClass::power_of_h(n, m - r, Rational(cut)))};
  out.holds = out.lhs == out.rhs;
  return out;
}

}  // namespace segtool

#include "kplab/diff_op.hpp"

namespace kplab {

DiffOp<GridCoeff> to_grid(const DiffOp<ExpCoeff>& x, const OpContext& grid_ctx, const Rat& lo,
                          const Rat& hi, const Rat& step) {
  const ParamEnv& env = x.env();
  Rat zero(0);
  return map_coeffs<ExpCoeff, GridCoeff>(x, grid_ctx, [&](const ExpCoeff& c) {
    std::vector<TPoly> samples;
    for (Rat s = lo; s <= hi; s += step) samples.push_back(TPoly::constant(grid_ctx.ring, c.sample(s, env, zero)));
    return GridCoeff(lo, step, std::move(samples));
  });
}

DiffOp<ExpSeriesT> to_tseries(const DiffOp<ExpCoeff>& x, const OpContext& t_ctx) {
  return map_coeffs<ExpCoeff, ExpSeriesT>(x, t_ctx, [&](const ExpCoeff& c) {
    ExpSeriesT r;
    for (const auto& [k, v] : c.terms()) r = r + ExpSeriesT::term(k, TPoly::constant(t_ctx.ring, v));
    return r;
  });
}

DiffOp<ExpCoeff> t_zero_slice(const DiffOp<ExpSeriesT>& x, const OpContext& exp_ctx) {
  return map_coeffs<ExpSeriesT, ExpCoeff>(x, exp_ctx, [](const ExpSeriesT& c) {
    ExpCoeff r;
    for (const auto& [k, v] : c.terms()) r = r + ExpCoeff::term(k, v.constant_term());
    return r;
  });
}

GridCoeff t_zero_slice(const GridCoeff& c, const TRingPtr& ring0) {
  if (c.is_constant()) return GridCoeff::constant(TPoly::constant(ring0, c.constant_value().constant_term()));
  std::vector<TPoly> out;
  for (const auto& p : c.samples()) out.push_back(TPoly::constant(ring0, p.constant_term()).truncated(p.valid_through() < 0 ? -1 : 0));
  return GridCoeff(c.lo(), c.step(), std::move(out));
}

}  // namespace kplab

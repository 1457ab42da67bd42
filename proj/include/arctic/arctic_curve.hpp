#pragma once

#include <vector>

#include "arctic/asymptotics.hpp"
#include "arctic/params.hpp"

namespace arctic {

// Tangent family member: the line y + A x - B = 0 at parameter xi.
struct TangentLine {
  MPScalar A, B, xi;
};

struct CurvePoint {
  MPScalar x, y;
};

enum class BranchId { NE, SE, FullAnalytic };
std::string branch_name(BranchId b);

struct Branch {
  Model model = Model::SixV;
  BranchId id = BranchId::NE;
  MPScalar xi_lo, xi_hi;
  std::vector<TangentLine> lines;   // transformed so each row satisfies
  std::vector<CurvePoint> points;   // y + A x - B = 0 exactly
};

// (A[xi], B[xi]) of the NE tangent family.
TangentLine tangent_line(const ModelParams& params, const MPScalar& xi, mpfr_prec_t precision);

// Envelope point X = B'/A', Y = B - (A/A') B', derivatives by dual numbers.
CurvePoint envelope_point(const ModelParams& params, const MPScalar& xi, mpfr_prec_t precision);

// Weight-swapping involution *: 6V u-v -> pi-(u-v); 6V' (u,v) -> (-u,-pi-v);
// 20V (u,v) -> (u,-pi-v).
ModelParams star_involution(const ModelParams& params);

// Coordinate map taking the starred NE branch to the SE branch:
// (x,y) -> (x, mu-y) for 6V/6V', (x,y) -> (x, 2-x-y) for 20V.
CurvePoint se_branch_map(Model model, const CurvePoint& p);

// Sampled branch; SE is produced by star involution + NE sampling + map,
// with tangent lines transformed alongside the points. DT supports NE and
// FullAnalytic (extended range xi in [-3pi/8, 0]).
Branch branch_curve(const ModelParams& params, BranchId id, int num_points,
                    mpfr_prec_t precision);

// Central-symmetry completion (x,y) -> (-1-x, 1-y); valid for the 6V model
// only, producing the SW/NW images of NE/SE.
Branch central_symmetry_completion_6v(const Branch& b);

enum class AlgebraicShift { None, TwentyV, DT };
// The degree-10 polynomial satisfied by the uniform-20V NE branch (after
// moving the origin) and by the DT curve. None evaluates at the point as
// given; TwentyV at (x+2, y-1); DT at (x+2, y).
MPScalar algebraic_residual_20v(const CurvePoint& p, AlgebraicShift shift);

}  // namespace arctic

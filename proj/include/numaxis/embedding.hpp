#pragma once

#include <string>
#include <vector>

namespace numaxis {

/// Line element of the target plane.
enum class PlaneSignature {
    Euclidean,      // dl^2 = dx^2 + dy^2
    PseudoXminusY,  // dl^2 = dx^2 - dy^2
    PseudoYminusX,  // dl^2 = dy^2 - dx^2
};

/// Embedding domains, in z = x / x_c:
///   I   z < -1       dx^2 - dy^2
///   II  z > -1       dy^2 - dx^2
///   III -1 < z < 0   dx^2 + dy^2
enum class Region { I, II, III };

enum class Branch : int { Plus = 1, Minus = -1 };

struct RegionInterval {
    double lo;  // open, may be -inf
    double hi;  // open, may be +inf
};

PlaneSignature signature_of(Region region);
RegionInterval interval_of(Region region);
std::string to_string(Region region);
std::string to_string(PlaneSignature signature);
Region parse_region(const std::string& text);
double sign_of(Branch branch);

struct CurvePoint {
    double x;
    double y;
};

struct EmbeddingCurve {
    Region region;
    Branch branch;
    std::vector<CurvePoint> samples;
    double xc;
};

/// (dy/dx)^2 that makes the plane's line element reproduce dx^2 / (1 + z):
/// I -> z/(1+z), II -> (2+z)/(1+z), III -> -z/(1+z).
///
/// Throws SignatureError when that value is negative (no real slope exists
/// in this signature) and RegionError when z is otherwise outside the region.
double rhs_squared(double z, Region region);

/// Closed-form embedding curve, anchored at y = 0 on z = -1 (I, II) or z = 0 (III):
///   I    x_c (arccosh sqrt(-z) + sqrt(z (1+z)))
///   II   x_c (arcsinh sqrt(1+z) + sqrt((1+z)(2+z)))
///   III  x_c (arcsin sqrt(-z) - sqrt(-z (1+z)))
/// times the branch sign.
double closed_form_y(double z, Region region, Branch branch, double xc);

/// Numerical solution of the embedding equation: y(z) is the quadrature of
/// x_c sqrt(rhs_squared) from the region's anchor, sampled at n_samples
/// uniform points of [z_from, z_to]. Returns the +1 branch.
EmbeddingCurve integrate_embedding(Region region, double z_from, double z_to, int n_samples, double xc);

/// Regions whose open interval contains z. Throws BoundaryError at z = -1 or z = 0.
std::vector<Region> admissible_regions(double z);

/// Both branches of every region, sampled in x with a margin of margin * x_c
/// from finite interval ends; unbounded ends are clipped at |x| = 5 x_c.
std::vector<EmbeddingCurve> figure1_curves(double xc, double margin, int n);

}  // namespace numaxis

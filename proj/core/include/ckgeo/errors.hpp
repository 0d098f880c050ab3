#pragma once

#include <stdexcept>
#include <string>

namespace ck {

enum class errc {
  zero_vector,
  full_rank,
  rank_deficient_ambiguous,
  coincident_arguments,
  not_collinear,
  coincident_points,
  p_coincides_with_endpoint,
  under_determined,
  degenerate_input,
  singular_conic,
  zero_polar,
  line_in_conic,
  isotropic_point,
  isotropic_mirror,
  zero_image,
  isotropic_endpoint,
  not_on_line,
  no_proper_midpoint,
  degenerate_basis,
  no_circumcircle,
  degenerate_triangle,
  degenerate_quadrangle,
  k_is_absolute,
  point_on_conic,
  isotropic_element,
  frame_not_realizable,
  parameter_out_of_range,
  k_not_through_vertices,
  parallel_tangents,
  k_is_circle,
  coincident_midpoints,
  undefined_centroid,
  coincident_centroids,
  degenerate_symmetric_input,
  p_not_inside,
  non_convex,
  side_condition_violated,
  line_through_vertex,
  not_normalizable,
  radicand_mismatch,
  invalid_theorem_id,
  invalid_scene,
  unknown_fixture,
  unrenderable_element,
};

const char* errc_name(errc c);

class geom_error : public std::runtime_error {
 public:
  geom_error(errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw geom_error(c, what); }

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::zero_vector: return "ZeroVector";
    case errc::full_rank: return "FullRank";
    case errc::rank_deficient_ambiguous: return "RankDeficientAmbiguous";
    case errc::coincident_arguments: return "CoincidentArguments";
    case errc::not_collinear: return "NotCollinear";
    case errc::coincident_points: return "CoincidentPoints";
    case errc::p_coincides_with_endpoint: return "PCoincidesWithEndpoint";
    case errc::under_determined: return "UnderDetermined";
    case errc::degenerate_input: return "DegenerateInput";
    case errc::singular_conic: return "SingularConic";
    case errc::zero_polar: return "ZeroPolar";
    case errc::line_in_conic: return "LineInConic";
    case errc::isotropic_point: return "IsotropicPoint";
    case errc::isotropic_mirror: return "IsotropicMirror";
    case errc::zero_image: return "ZeroImage";
    case errc::isotropic_endpoint: return "IsotropicEndpoint";
    case errc::not_on_line: return "NotOnLine";
    case errc::no_proper_midpoint: return "NoProperMidpoint";
    case errc::degenerate_basis: return "DegenerateBasis";
    case errc::no_circumcircle: return "NoCircumcircle";
    case errc::degenerate_triangle: return "DegenerateTriangle";
    case errc::degenerate_quadrangle: return "DegenerateQuadrangle";
    case errc::k_is_absolute: return "KIsAbsolute";
    case errc::point_on_conic: return "PointOnConic";
    case errc::isotropic_element: return "IsotropicElement";
    case errc::frame_not_realizable: return "FrameNotRealizable";
    case errc::parameter_out_of_range: return "ParameterOutOfRange";
    case errc::k_not_through_vertices: return "KNotThroughVertices";
    case errc::parallel_tangents: return "ParallelTangents";
    case errc::k_is_circle: return "KIsCircle";
    case errc::coincident_midpoints: return "CoincidentMidpoints";
    case errc::undefined_centroid: return "UndefinedCentroid";
    case errc::coincident_centroids: return "CoincidentCentroids";
    case errc::degenerate_symmetric_input: return "DegenerateSymmetricInput";
    case errc::p_not_inside: return "PNotInside";
    case errc::non_convex: return "NonConvex";
    case errc::side_condition_violated: return "SideConditionViolated";
    case errc::line_through_vertex: return "LineThroughVertex";
    case errc::not_normalizable: return "NotNormalizable";
    case errc::radicand_mismatch: return "RadicandMismatch";
    case errc::invalid_theorem_id: return "InvalidTheoremId";
    case errc::invalid_scene: return "InvalidScene";
    case errc::unknown_fixture: return "UnknownFixture";
    case errc::unrenderable_element: return "UnrenderableElement";
  }
  return "Unknown";
}

}  // namespace ck

#pragma once

// Ground-plane homography estimated from floor marks, and the per-point
// scale factor used to size keypoint radii and bounding-box padding.

#include <Eigen/Dense>
#include <array>
#include <filesystem>
#include <vector>

#include "crowdspeak/core.hpp"

namespace crowdspeak::geom {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double dist(const Vec2& a, const Vec2& b) {
  double dx = a.x - b.x, dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

// A maps ground-plane meters to image pixels; immutable after construction.
class Homography {
public:
  Homography(const Eigen::Matrix3d& ground_to_image, const Vec2& reference_point,
             double reprojection_rms);

  Vec2 ground_to_image(const Vec2& g) const;
  Vec2 image_to_ground(const Vec2& p) const;  // throws GeometryError at/behind horizon

  // Local image-pixels-per-ground-meter at image point p, averaged over the
  // two ground axis directions displaced by delta meters.
  double pixels_per_meter(const Vec2& p, double delta = 0.01) const;

  // S(p) = pixels_per_meter(p) / pixels_per_meter(reference); S(ref) == 1.
  double scale_factor(const Vec2& p, double delta = 0.01) const;

  const Eigen::Matrix3d& matrix() const { return a_; }
  const Vec2& reference_point() const { return ref_; }
  double reprojection_rms() const { return rms_; }

private:
  Eigen::Matrix3d a_;      // ground -> image, normalized so a_(2,2) = 1
  Eigen::Matrix3d a_inv_;  // image -> ground
  Vec2 ref_;
  double ref_ppm_ = 1.0;   // cached pixels_per_meter at ref with default delta
  double rms_ = 0.0;

  Vec2 apply(const Eigen::Matrix3d& m, const Vec2& v, double* w_out) const;
};

struct Correspondence {
  Vec2 ground;  // meters on the floor plane
  Vec2 image;   // pixels
};

// Direct linear transform over >= 4 correspondences. Throws ConfigError on
// arity, GeometryError on degenerate configurations. When reference is
// nullptr the reference point defaults to the image of the ground centroid
// of the marks.
Homography estimate_homography(const std::vector<Correspondence>& correspondences,
                               const Vec2* reference = nullptr);

// calib.json: {"ground":[[x,y]...],"image":[[u,v]...],"ref":[u,v]?}
Homography load_calibration(const std::filesystem::path& path);
void save_calibration(const std::filesystem::path& path,
                      const std::vector<Correspondence>& correspondences,
                      const Vec2* reference = nullptr);

}  // namespace crowdspeak::geom

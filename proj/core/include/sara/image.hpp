#ifndef SARA_IMAGE_HPP
#define SARA_IMAGE_HPP

#include <Eigen/Core>
#include <stdexcept>

namespace sara {

/// Real-valued pixel grid, stored row-major: pixel(r, c) = pixels[r * width + c].
struct Image {
  int width = 0;
  int height = 0;
  Eigen::VectorXd pixels;

  Image() = default;
  Image(int height_, int width_, Eigen::VectorXd pixels_)
      : width(width_), height(height_), pixels(std::move(pixels_)) {
    if (width <= 0 || height <= 0)
      throw std::invalid_argument("Image: dimensions must be positive");
    if (pixels.size() != static_cast<Eigen::Index>(width) * height)
      throw std::invalid_argument("Image: pixel count does not match dimensions");
  }

  static Image zero(int height, int width) {
    return Image(height, width, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(width) * height));
  }

  Eigen::Index size() const { return pixels.size(); }
  double& at(int r, int c) { return pixels[static_cast<Eigen::Index>(r) * width + c]; }
  double at(int r, int c) const { return pixels[static_cast<Eigen::Index>(r) * width + c]; }

  bool all_finite() const { return pixels.allFinite(); }
  bool nonnegative() const { return (pixels.array() >= 0.0).all(); }

  /// Ground-truth inputs must be finite and nonnegative.
  void validate_ground_truth() const {
    if (!all_finite()) throw std::invalid_argument("Image: non-finite pixel values");
    if (!nonnegative()) throw std::invalid_argument("Image: negative pixel values");
  }
};

}  // namespace sara

#endif

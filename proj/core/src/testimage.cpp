#include "sara/testimage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sara/rng.hpp"

namespace sara {

namespace {

double smoothstep(double edge0, double edge1, double x) {
  const double t = std::clamp((x - edge0) / (edge1 - edge0), 0.0, 1.0);
  return t * t * (3.0 - 2.0 * t);
}

// Bilinear upsampling of a (gh x gw) grid onto (h x w).
void add_upsampled(Image& img, const std::vector<double>& grid, int gh, int gw, double amp) {
  for (int r = 0; r < img.height; ++r) {
    const double gy = static_cast<double>(r) / img.height * (gh - 1);
    const int y0 = static_cast<int>(gy);
    const int y1 = std::min(y0 + 1, gh - 1);
    const double fy = gy - y0;
    for (int c = 0; c < img.width; ++c) {
      const double gx = static_cast<double>(c) / img.width * (gw - 1);
      const int x0 = static_cast<int>(gx);
      const int x1 = std::min(x0 + 1, gw - 1);
      const double fx = gx - x0;
      const double v = (1 - fy) * ((1 - fx) * grid[y0 * gw + x0] + fx * grid[y0 * gw + x1]) +
                       fy * ((1 - fx) * grid[y1 * gw + x0] + fx * grid[y1 * gw + x1]);
      img.at(r, c) += amp * v;
    }
  }
}

void box_blur3(Image& img) {
  Image tmp = img;
  for (int r = 0; r < img.height; ++r)
    for (int c = 0; c < img.width; ++c) {
      double acc = 0.0;
      for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
          const int rr = std::clamp(r + dr, 0, img.height - 1);
          const int cc = std::clamp(c + dc, 0, img.width - 1);
          acc += tmp.at(rr, cc);
        }
      img.at(r, c) = acc / 9.0;
    }
}

struct Ellipse {
  double cy, cx, a, b, angle, value, edge;
};

// Blends img toward e.value inside the ellipse, with a soft edge.
void paint_ellipse(Image& img, const Ellipse& e) {
  const double ca = std::cos(e.angle), sa = std::sin(e.angle);
  for (int r = 0; r < img.height; ++r)
    for (int c = 0; c < img.width; ++c) {
      const double dy = (r - e.cy), dx = (c - e.cx);
      const double u = (ca * dx + sa * dy) / e.a;
      const double v = (-sa * dx + ca * dy) / e.b;
      const double rho = std::sqrt(u * u + v * v);
      const double alpha = 1.0 - smoothstep(1.0 - e.edge, 1.0 + e.edge, rho);
      if (alpha > 0) img.at(r, c) = (1 - alpha) * img.at(r, c) + alpha * e.value;
    }
}

}  // namespace

Image make_natural_scene(int size) {
  if (size < 16 || size % 8 != 0)
    throw std::invalid_argument("make_natural_scene: size must be a multiple of 8, >= 16");
  Rng rng(0x5ce9e001u);
  Image img = Image::zero(size, size);

  // smooth background ramp
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c)
      img.at(r, c) = 150.0 - 60.0 * (static_cast<double>(r) / size) +
                     15.0 * (static_cast<double>(c) / size);

  // multiscale random field, coarse scales strongest (roughly 1/f statistics)
  for (int cells : {4, 8, 16, 32, 64}) {
    const int gh = cells + 1, gw = cells + 1;
    std::vector<double> grid(static_cast<std::size_t>(gh) * gw);
    for (auto& g : grid) g = rng.normal();
    const double amp = 36.0 * std::pow(4.0 / cells, 0.75);
    add_upsampled(img, grid, gh, gw, amp);
  }

  const double s = size;
  paint_ellipse(img, {0.22 * s, 0.74 * s, 0.10 * s, 0.10 * s, 0.0, 236.0, 0.05});
  paint_ellipse(img, {0.70 * s, 0.30 * s, 0.17 * s, 0.11 * s, 0.5, 72.0, 0.04});
  paint_ellipse(img, {0.56 * s, 0.62 * s, 0.06 * s, 0.13 * s, -0.3, 180.0, 0.06});

  // soft-edged rectangular block with vertical shading
  {
    const int r0 = static_cast<int>(0.58 * s), r1 = static_cast<int>(0.95 * s);
    const int c0 = static_cast<int>(0.08 * s), c1 = static_cast<int>(0.28 * s);
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c) {
        const double ar = smoothstep(r0 - 2.0, r0 + 2.0, r) * (1.0 - smoothstep(r1 - 2.0, r1 + 2.0, r));
        const double ac = smoothstep(c0 - 2.0, c0 + 2.0, c) * (1.0 - smoothstep(c1 - 2.0, c1 + 2.0, c));
        const double alpha = ar * ac;
        if (alpha > 0) {
          const double v = 96.0 + 26.0 * (static_cast<double>(r - r0) / std::max(1, r1 - r0));
          img.at(r, c) = (1 - alpha) * img.at(r, c) + alpha * v;
        }
      }
  }

  box_blur3(img);
  for (Eigen::Index i = 0; i < img.size(); ++i)
    img.pixels[i] = std::clamp(img.pixels[i], 2.0, 253.0);
  return img;
}

Image make_brain_phantom(int height, int width) {
  if (height < 32 || width < 32)
    throw std::invalid_argument("make_brain_phantom: dimensions too small");
  Rng rng(0xb4a19ad0u);
  Image img = Image::zero(height, width);
  const double cy = 0.50 * height, cx = 0.50 * width;
  const double a = 0.44 * width, b = 0.46 * height;

  // skull ring then interior tissue
  paint_ellipse(img, {cy, cx, a, b, 0.0, 228.0, 0.015});
  paint_ellipse(img, {cy, cx, 0.90 * a, 0.92 * b, 0.0, 132.0, 0.02});

  // smooth tissue shading and a slow texture inside the brain
  std::vector<double> grid(81);
  for (auto& g : grid) g = rng.normal();
  Image tex = Image::zero(height, width);
  add_upsampled(tex, grid, 9, 9, 1.0);
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c) {
      const double u = (c - cx) / (0.90 * a), v = (r - cy) / (0.92 * b);
      const double rho2 = u * u + v * v;
      if (rho2 < 1.0) {
        const double shade = -26.0 * rho2 + 9.0 * tex.at(r, c);
        img.at(r, c) += shade * (1.0 - smoothstep(0.93, 1.0, std::sqrt(rho2)));
      }
    }

  // ventricles (dark), deep gray nuclei and small lesions
  paint_ellipse(img, {0.42 * height, 0.42 * width, 0.050 * width, 0.16 * height, 0.18, 38.0, 0.10});
  paint_ellipse(img, {0.42 * height, 0.58 * width, 0.050 * width, 0.16 * height, -0.18, 38.0, 0.10});
  paint_ellipse(img, {0.60 * height, 0.44 * width, 0.040 * width, 0.045 * height, 0.0, 96.0, 0.15});
  paint_ellipse(img, {0.60 * height, 0.56 * width, 0.040 * width, 0.045 * height, 0.0, 96.0, 0.15});
  paint_ellipse(img, {0.26 * height, 0.50 * width, 0.035 * width, 0.030 * height, 0.0, 196.0, 0.18});
  paint_ellipse(img, {0.72 * height, 0.50 * width, 0.030 * width, 0.035 * height, 0.3, 186.0, 0.18});
  paint_ellipse(img, {0.50 * height, 0.30 * width, 0.022 * width, 0.030 * height, -0.4, 176.0, 0.2});

  for (Eigen::Index i = 0; i < img.size(); ++i)
    img.pixels[i] = std::clamp(img.pixels[i], 0.0, 255.0);
  return img;
}

Image center_crop(const Image& img, int height, int width) {
  if (height > img.height || width > img.width)
    throw std::invalid_argument("center_crop: crop larger than image");
  const int r0 = (img.height - height) / 2;
  const int c0 = (img.width - width) / 2;
  Image out = Image::zero(height, width);
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c) out.at(r, c) = img.at(r0 + r, c0 + c);
  return out;
}

}  // namespace sara

#ifndef SARA_TESTIMAGE_HPP
#define SARA_TESTIMAGE_HPP

#include "sara/image.hpp"

namespace sara {

/// Deterministic synthetic scene with natural-image statistics: a multiscale
/// random field over a smooth background plus soft-edged objects.  Pixel
/// values in [0, 255]; size must be a multiple of 8.
Image make_natural_scene(int size);

/// Deterministic brain-like phantom: bright skull ring, shaded tissue, dark
/// ventricles and small lesions on a zero background.
Image make_brain_phantom(int height = 224, int width = 168);

Image center_crop(const Image& img, int height, int width);

}  // namespace sara

#endif

#ifndef SARA_PGM_HPP
#define SARA_PGM_HPP

#include <string>

#include "sara/image.hpp"

namespace sara {

/// Decodes a binary 8-bit grayscale PGM (P5, maxval 255) to reals in [0, 255].
Image load_image(const std::string& path);

/// Clamps to [0, 255], rounds half to even, writes binary 8-bit PGM (P5).
void save_image(const Image& img, const std::string& path);

}  // namespace sara

#endif

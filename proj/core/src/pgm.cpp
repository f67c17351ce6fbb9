#include "sara/pgm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace sara {

namespace {

// Reads the next header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) continue;
    tok.push_back(static_cast<char>(c));
    while ((c = in.peek()) != EOF && !std::isspace(c) && c != '#')
      tok.push_back(static_cast<char>(in.get()));
    return tok;
  }
  return tok;
}

}  // namespace

Image load_image(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_image: cannot open " + path);
  const std::string magic = next_token(in);
  if (magic != "P5")
    throw std::runtime_error("load_image: " + path + ": unsupported format '" + magic +
                             "' (want binary PGM P5)");
  int width = 0, height = 0, maxval = 0;
  try {
    width = std::stoi(next_token(in));
    height = std::stoi(next_token(in));
    maxval = std::stoi(next_token(in));
  } catch (const std::exception&) {
    throw std::runtime_error("load_image: " + path + ": corrupt header");
  }
  if (width <= 0 || height <= 0 || maxval != 255)
    throw std::runtime_error("load_image: " + path + ": need positive dims and maxval 255");
  in.get();  // single whitespace after maxval
  const std::size_t n = static_cast<std::size_t>(width) * height;
  std::vector<unsigned char> buf(n);
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n)
    throw std::runtime_error("load_image: " + path + ": truncated pixel data");
  Eigen::VectorXd pixels(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) pixels[static_cast<Eigen::Index>(i)] = buf[i];
  return Image(height, width, std::move(pixels));
}

void save_image(const Image& img, const std::string& path) {
  if (!img.all_finite()) throw std::invalid_argument("save_image: non-finite pixels");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_image: cannot open " + path + " for writing");
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  std::vector<unsigned char> buf(static_cast<std::size_t>(img.size()));
  for (Eigen::Index i = 0; i < img.size(); ++i) {
    double v = std::clamp(img.pixels[i], 0.0, 255.0);
    // nearbyint under the default rounding mode is round-half-to-even
    buf[static_cast<std::size_t>(i)] = static_cast<unsigned char>(std::nearbyint(v));
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("save_image: write failed for " + path);
}

}  // namespace sara

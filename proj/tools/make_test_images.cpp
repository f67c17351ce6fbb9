// Regenerates the bundled deterministic test images under data/.

#include <cstdio>
#include <string>

#include "sara/pgm.hpp"
#include "sara/testimage.hpp"

int main(int argc, char** argv) {
  const std::string dir = (argc > 1) ? argv[1] : "data";
  const sara::Image scene256 = sara::make_natural_scene(256);
  const sara::Image scene128 = sara::make_natural_scene(128);
  const sara::Image scene64 = sara::center_crop(scene128, 64, 64);
  const sara::Image brain = sara::make_brain_phantom(224, 168);

  sara::save_image(scene256, dir + "/scene256.pgm");
  sara::save_image(scene128, dir + "/scene128.pgm");
  sara::save_image(scene64, dir + "/scene64.pgm");
  sara::save_image(brain, dir + "/brain224x168.pgm");
  std::printf("wrote scene256/scene128/scene64 and brain224x168 under %s/\n", dir.c_str());
  return 0;
}

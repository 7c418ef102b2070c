#pragma once

#include <cstdint>
#include <vector>

namespace specref {

/// 8-bit RGB image, interleaved, row-major (as stored in binary PPM / P6).
struct Image {
    uint32_t width = 0;
    uint32_t height = 0;
    std::vector<uint8_t> pixels;  // height * width * 3

    bool operator==(const Image& o) const {
        return width == o.width && height == o.height && pixels == o.pixels;
    }
};

/// 8-bit grayscale image (binary PGM / P5). Used for mask input.
struct GrayImage {
    uint32_t width = 0;
    uint32_t height = 0;
    std::vector<uint8_t> pixels;  // height * width

    bool operator==(const GrayImage& o) const {
        return width == o.width && height == o.height && pixels == o.pixels;
    }
};

}  // namespace specref

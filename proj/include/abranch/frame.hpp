#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace abranch {

// Row-major dense raster; the scalar is templated so pixel planes (uint8) and
// derived maps (double) share one representation.
template <class Scalar>
using Image = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Single-channel 8-bit plane. rows() = height, cols() = width.
using GrayFrame = Image<std::uint8_t>;

// Raster frame as stored on disk: interleaved samples when channels = 3.
struct Frame {
  int width = 0;
  int height = 0;
  int channels = 1;  // 1 (gray) or 3 (RGB)
  std::vector<std::uint8_t> pixels;

  std::size_t expected_size() const {
    return static_cast<std::size_t>(width) * height * channels;
  }
};

// Binary PGM (P5) / PPM (P6) with maxval 255. Header comments (#) are skipped.
Frame load_frame(const std::filesystem::path& path);
void store_frame(const Frame& frame, const std::filesystem::path& path);

Frame frame_from_gray(const GrayFrame& gray);

// BT.601 luma, rounded half-up. 1-channel input passes through unchanged.
GrayFrame to_grayscale(const Frame& frame);

GrayFrame extract_channel(const Frame& frame, int channel_index);

// Nearest-neighbor resampling with center-aligned source index
// floor((i + 0.5) * src / dst).
GrayFrame resize_nearest(const GrayFrame& src, int out_width, int out_height);

}  // namespace abranch

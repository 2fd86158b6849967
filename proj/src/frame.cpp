#include "abranch/frame.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <string>

#include "abranch/error.hpp"

namespace abranch {

namespace {

// Reads the next header token, skipping whitespace and '#' comments that run
// to end-of-line. PNM headers allow comments anywhere between tokens.
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
    break;
  }
  if (c == EOF) return tok;
  tok.push_back(static_cast<char>(c));
  while ((c = in.get()) != EOF && !std::isspace(c) && c != '#') {
    tok.push_back(static_cast<char>(c));
  }
  if (c == '#') in.unget();
  return tok;
}

int parse_header_int(std::istream& in, const std::filesystem::path& path, const char* what) {
  std::string tok = next_token(in);
  if (tok.empty()) fail(Errc::pnm_bad_header, path.string() + ": missing " + what);
  for (char ch : tok) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      fail(Errc::pnm_bad_header, path.string() + ": bad " + what + " '" + tok + "'");
    }
  }
  long v = std::stol(tok);
  if (v <= 0 || v > 1 << 20) {
    fail(Errc::pnm_bad_header, path.string() + ": out-of-range " + what + " " + tok);
  }
  return static_cast<int>(v);
}

}  // namespace

Frame load_frame(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::file_not_found, "no such frame file: " + path.string());

  std::string magic = next_token(in);
  int channels;
  if (magic == "P5") {
    channels = 1;
  } else if (magic == "P6") {
    channels = 3;
  } else {
    fail(Errc::pnm_bad_magic, path.string() + ": unsupported magic '" + magic + "'");
  }

  Frame f;
  f.channels = channels;
  f.width = parse_header_int(in, path, "width");
  f.height = parse_header_int(in, path, "height");
  int maxval = parse_header_int(in, path, "maxval");
  if (maxval != 255) {
    fail(Errc::pnm_bad_maxval, path.string() + ": maxval " + std::to_string(maxval) +
                                   ", only 255 supported");
  }
  // Exactly one whitespace byte separates the header from the payload; the
  // comment-skipping tokenizer has already consumed it as the token delimiter.

  f.pixels.resize(f.expected_size());
  in.read(reinterpret_cast<char*>(f.pixels.data()), static_cast<std::streamsize>(f.pixels.size()));
  if (static_cast<std::size_t>(in.gcount()) != f.pixels.size()) {
    fail(Errc::pnm_truncated, path.string() + ": expected " + std::to_string(f.pixels.size()) +
                                  " payload bytes, got " + std::to_string(in.gcount()));
  }
  return f;
}

void store_frame(const Frame& frame, const std::filesystem::path& path) {
  if (frame.width < 1 || frame.height < 1 || (frame.channels != 1 && frame.channels != 3)) {
    fail(Errc::bad_argument, "store_frame: invalid frame geometry");
  }
  if (frame.pixels.size() != frame.expected_size()) {
    fail(Errc::bad_argument, "store_frame: pixel buffer size mismatch");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io_failure, "cannot write " + path.string());
  out << (frame.channels == 1 ? "P5" : "P6") << "\n"
      << frame.width << " " << frame.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(frame.pixels.data()),
            static_cast<std::streamsize>(frame.pixels.size()));
  if (!out) fail(Errc::io_failure, "short write to " + path.string());
}

Frame frame_from_gray(const GrayFrame& gray) {
  Frame f;
  f.width = static_cast<int>(gray.cols());
  f.height = static_cast<int>(gray.rows());
  f.channels = 1;
  f.pixels.assign(gray.data(), gray.data() + gray.size());
  return f;
}

GrayFrame to_grayscale(const Frame& frame) {
  if (frame.channels == 1) {
    return Eigen::Map<const GrayFrame>(frame.pixels.data(), frame.height, frame.width);
  }
  if (frame.channels != 3) {
    fail(Errc::channel_out_of_range,
         "to_grayscale: unsupported channel count " + std::to_string(frame.channels));
  }
  GrayFrame out(frame.height, frame.width);
  const std::uint8_t* p = frame.pixels.data();
  for (int y = 0; y < frame.height; ++y) {
    for (int x = 0; x < frame.width; ++x, p += 3) {
      double luma = 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
      double rounded = std::floor(luma + 0.5);
      if (rounded < 0.0) rounded = 0.0;
      if (rounded > 255.0) rounded = 255.0;
      out(y, x) = static_cast<std::uint8_t>(rounded);
    }
  }
  return out;
}

GrayFrame extract_channel(const Frame& frame, int channel_index) {
  if (channel_index < 0 || channel_index >= frame.channels) {
    fail(Errc::channel_out_of_range, "extract_channel: index " + std::to_string(channel_index) +
                                         " out of range for " + std::to_string(frame.channels) +
                                         " channel(s)");
  }
  GrayFrame out(frame.height, frame.width);
  const std::uint8_t* p = frame.pixels.data() + channel_index;
  for (int y = 0; y < frame.height; ++y) {
    for (int x = 0; x < frame.width; ++x, p += frame.channels) {
      out(y, x) = *p;
    }
  }
  return out;
}

GrayFrame resize_nearest(const GrayFrame& src, int out_width, int out_height) {
  if (out_width < 1 || out_height < 1) {
    fail(Errc::bad_argument, "resize_nearest: target dimensions must be >= 1");
  }
  const int src_w = static_cast<int>(src.cols());
  const int src_h = static_cast<int>(src.rows());
  if (src_w == out_width && src_h == out_height) return src;

  GrayFrame out(out_height, out_width);
  std::vector<int> col_of(out_width);
  for (int x = 0; x < out_width; ++x) {
    int sx = static_cast<int>(std::floor((x + 0.5) * src_w / out_width));
    col_of[x] = std::min(sx, src_w - 1);
  }
  for (int y = 0; y < out_height; ++y) {
    int sy = static_cast<int>(std::floor((y + 0.5) * src_h / out_height));
    sy = std::min(sy, src_h - 1);
    for (int x = 0; x < out_width; ++x) {
      out(y, x) = src(sy, col_of[x]);
    }
  }
  return out;
}

}  // namespace abranch

#include "abranch/protocol.hpp"

#include <netdb.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <chrono>
#include <cstring>

#include "abranch/csvutil.hpp"
#include "abranch/error.hpp"

namespace abranch {

FdChannel::FdChannel(int fd) : fd_(fd) {
  if (fd_ < 0) fail(Errc::connect_failed, "FdChannel: bad descriptor");
}

FdChannel::~FdChannel() {
  if (fd_ >= 0) ::close(fd_);
}

void FdChannel::send_line(const std::string& line) {
  std::string data = line;
  data.push_back('\n');
  std::size_t sent = 0;
  while (sent < data.size()) {
    ssize_t n = ::write(fd_, data.data() + sent, data.size() - sent);
    if (n < 0) {
      if (errno == EINTR) continue;
      fail(Errc::io_failure, std::string("protocol send: ") + std::strerror(errno));
    }
    sent += static_cast<std::size_t>(n);
  }
}

std::string FdChannel::recv_line(int timeout_ms) {
  using clock = std::chrono::steady_clock;
  const auto deadline = clock::now() + std::chrono::milliseconds(timeout_ms);
  for (;;) {
    auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    auto remaining =
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - clock::now()).count();
    if (remaining <= 0) fail(Errc::timeout, "protocol: response timed out");

    pollfd pfd{fd_, POLLIN, 0};
    int rc = ::poll(&pfd, 1, static_cast<int>(remaining));
    if (rc < 0) {
      if (errno == EINTR) continue;
      fail(Errc::io_failure, std::string("protocol poll: ") + std::strerror(errno));
    }
    if (rc == 0) fail(Errc::timeout, "protocol: response timed out");

    char chunk[4096];
    ssize_t n = ::read(fd_, chunk, sizeof(chunk));
    if (n < 0) {
      if (errno == EINTR) continue;
      fail(Errc::io_failure, std::string("protocol read: ") + std::strerror(errno));
    }
    if (n == 0) fail(Errc::protocol_violation, "protocol: peer closed the stream mid-response");
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

std::unique_ptr<LineChannel> connect_tcp(const std::string& endpoint, int timeout_ms) {
  auto colon = endpoint.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == endpoint.size()) {
    fail(Errc::connect_failed, "endpoint must be host:port, got '" + endpoint + "'");
  }
  std::string host = endpoint.substr(0, colon);
  std::string port = endpoint.substr(colon + 1);

  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  int rc = ::getaddrinfo(host.c_str(), port.c_str(), &hints, &res);
  if (rc != 0) fail(Errc::connect_failed, "cannot resolve " + endpoint);

  int fd = -1;
  for (addrinfo* ai = res; ai; ai = ai->ai_next) {
    fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(res);
  if (fd < 0) fail(Errc::connect_failed, "cannot connect to " + endpoint);
  (void)timeout_ms;
  return std::make_unique<FdChannel>(fd);
}

std::string format_infer_request(const ApproxBranch& branch,
                                 const std::filesystem::path& frame_path) {
  return "INFER " + std::to_string(branch.side) + " " + std::to_string(branch.outport) + " " +
         frame_path.string();
}

ProtocolResponse parse_infer_response(const std::string& line) {
  if (line.rfind("ERR ", 0) == 0) {
    fail(Errc::responder_error, "responder error: " + line.substr(4));
  }
  if (line == "ERR") fail(Errc::responder_error, "responder error");
  if (line.rfind("OK ", 0) != 0) {
    fail(Errc::protocol_violation, "malformed response: '" + line + "'");
  }
  auto rest = line.substr(3);
  auto space = rest.find(' ');
  if (space == std::string::npos) {
    fail(Errc::protocol_violation, "malformed response: '" + line + "'");
  }
  ProtocolResponse out;
  try {
    out.reported_ms = csv::parse_double(rest.substr(0, space), "protocol latency");
  } catch (const Error&) {
    fail(Errc::protocol_violation, "malformed latency in response: '" + line + "'");
  }
  for (const auto& label : csv::split(rest.substr(space + 1), ',')) {
    if (!label.empty()) out.labels.push_back(label);
  }
  if (out.labels.empty() || out.labels.size() > 5) {
    fail(Errc::protocol_violation, "expected 1..5 labels, got '" + line + "'");
  }
  return out;
}

InferenceResult external_infer(const ApproxBranch& branch,
                               const std::filesystem::path& frame_path, LineChannel& channel,
                               const ProtocolConfig& cfg) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  channel.send_line(format_infer_request(branch, frame_path));
  ProtocolResponse resp = parse_infer_response(channel.recv_line(cfg.timeout_ms));
  const auto t1 = clock::now();

  InferenceResult result;
  result.branch_used = branch;
  result.top5 = std::move(resp.labels);
  result.reported_ms = resp.reported_ms;
  result.measured_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return result;
}

}  // namespace abranch

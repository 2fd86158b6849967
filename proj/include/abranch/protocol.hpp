#pragma once

#include <memory>
#include <string>

#include "abranch/executor.hpp"

namespace abranch {

// Newline-delimited request/response byte stream. One request in flight;
// callers serialize.
class LineChannel {
 public:
  virtual ~LineChannel() = default;
  virtual void send_line(const std::string& line) = 0;
  // Blocks until a full line arrives or timeout_ms elapses (Errc::timeout).
  virtual std::string recv_line(int timeout_ms) = 0;
};

// Channel over an open file descriptor (socket, pipe, socketpair). Takes
// ownership of the descriptor.
class FdChannel : public LineChannel {
 public:
  explicit FdChannel(int fd);
  ~FdChannel() override;
  FdChannel(const FdChannel&) = delete;
  FdChannel& operator=(const FdChannel&) = delete;

  void send_line(const std::string& line) override;
  std::string recv_line(int timeout_ms) override;

 private:
  int fd_;
  std::string buffer_;
};

// Connects to `host:port`; failures raise Errc::connect_failed.
std::unique_ptr<LineChannel> connect_tcp(const std::string& endpoint, int timeout_ms = 5000);

struct ProtocolConfig {
  int timeout_ms = 5000;
};

struct ProtocolResponse {
  double reported_ms = 0.0;
  std::vector<std::string> labels;
};

std::string format_infer_request(const ApproxBranch& branch,
                                 const std::filesystem::path& frame_path);
// Parses `OK <latency_ms> <l1>,...,<l5>`; `ERR <msg>` raises responder_error,
// anything else protocol_violation.
ProtocolResponse parse_infer_response(const std::string& line);

// One INFER round trip. measured_ms is caller-observed wall time; the
// responder's self-reported latency is kept in reported_ms.
InferenceResult external_infer(const ApproxBranch& branch,
                               const std::filesystem::path& frame_path, LineChannel& channel,
                               const ProtocolConfig& cfg = {});

// Executor facade over a connected protocol channel.
class ExternalExecutor : public Executor {
 public:
  ExternalExecutor(std::unique_ptr<LineChannel> channel, ProtocolConfig cfg = {})
      : channel_(std::move(channel)), cfg_(cfg) {}

  InferenceResult infer(const InferRequest& req) override {
    return external_infer(req.branch, req.frame_path, *channel_, cfg_);
  }

 private:
  std::unique_ptr<LineChannel> channel_;
  ProtocolConfig cfg_;
};

}  // namespace abranch

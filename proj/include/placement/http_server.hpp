#pragma once

#include <memory>
#include <string>

#include "placement/service.hpp"

namespace placement {

// Thin httplib front: every request is translated into an ApiRequest and
// answered by Service::handle.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Port 0 binds an ephemeral port. Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace placement

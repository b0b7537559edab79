#include "placement/http_server.hpp"

#include <algorithm>
#include <cctype>

#include <httplib.h>

namespace placement {

struct HttpServer::Impl {
  Service& service;
  httplib::Server server;

  explicit Impl(Service& s) : service(s) {
    auto forward = [this](const httplib::Request& req, httplib::Response& res) {
      ApiRequest api;
      api.method = req.method;
      api.path = req.path;
      api.body = req.body;
      for (const auto& [k, v] : req.params) api.query.emplace(k, v);
      for (const auto& [k, v] : req.headers) {
        std::string name = k;
        std::transform(name.begin(), name.end(), name.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        api.headers.emplace(std::move(name), v);
      }
      const ApiResponse out = service.handle(api);
      res.status = out.status;
      res.set_content(out.payload(), out.contentType);
    };
    server.Get(".*", forward);
    server.Post(".*", forward);
    server.Put(".*", forward);
    server.Delete(".*", forward);
    server.Patch(".*", forward);
  }
};

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>(service)) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host.c_str());
  return impl_->server.bind_to_port(host.c_str(), port) ? port : -1;
}

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace placement

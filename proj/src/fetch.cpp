// Single blocking GET used by the optional b-file fetch path. Kept in its own
// translation unit so the header-only HTTP client is compiled once.
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <string>

#include "graham/error.hpp"

namespace graham {

std::string fetch_url_body(const std::string& scheme, const std::string& host,
                           const std::string& target) {
  auto get = [&](auto& client) {
    client.set_follow_location(true);
    auto res = client.Get(target);
    if (!res) throw IoFailure("fetch failed: no response from " + host);
    if (res->status != 200)
      throw IoFailure("fetch failed: HTTP " + std::to_string(res->status) + " from " + host);
    return res->body;
  };
  if (scheme == "https") {
    httplib::SSLClient client(host);
    return get(client);
  }
  if (scheme == "http") {
    httplib::Client client(host);
    return get(client);
  }
  throw IoFailure("unsupported url scheme: " + scheme);
}

}  // namespace graham

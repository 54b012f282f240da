#ifndef QANALOGY_SERVICE_SERVER_HPP
#define QANALOGY_SERVICE_SERVER_HPP

#include <chrono>
#include <memory>
#include <string>
#include <string_view>

#include "qanalogy/service/session_host.hpp"

namespace qanalogy::service {

struct ServerOptions {
    std::string address = "127.0.0.1";
    unsigned short port = 0;  // 0 picks a free port
    int threads = 2;
    std::chrono::seconds reap_interval{30};
};

struct HttpReply {
    unsigned status = 200;
    nlohmann::json body;
};

/// HTTP routes without the socket, mapped onto host verbs:
///
///   GET  /lessons                  LessonList
///   POST /sessions                 {lesson, seed?} -> SessionCreated
///   POST /sessions/{id}/events     {type, payload, seq?} -> every message produced
///   POST /analogy/validate         {concept, object} -> ValidationResult
///   POST /quiz                     {session_id, answers} -> QuizResult
///   GET  /framework                framework table rows
///
/// Error replies map to 404 for unknown_session and 400 otherwise.
HttpReply handle_http(SessionHost& host, std::string_view method, std::string_view target, std::string_view body);

/// HTTP and WebSocket on one port. GET /ws upgrades; each text frame then
/// carries one envelope in either direction.
class Server {
  public:
    Server(SessionHost& host, ServerOptions options = {});
    ~Server();

    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    /// Binds and starts the worker threads. Throws on bind failure.
    void start();
    /// Stops accepting, closes connections, joins workers, persists sessions.
    void stop();
    /// Blocks until stop() is called or SIGINT/SIGTERM arrives.
    void wait();

    unsigned short port() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace qanalogy::service

#endif  // QANALOGY_SERVICE_SERVER_HPP

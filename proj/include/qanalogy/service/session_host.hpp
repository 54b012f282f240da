#ifndef QANALOGY_SERVICE_SESSION_HOST_HPP
#define QANALOGY_SERVICE_SESSION_HOST_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qanalogy/analogy/catalog.hpp"
#include "qanalogy/lessons/engine.hpp"
#include "qanalogy/service/result_store.hpp"
#include "qanalogy/service/wire.hpp"

namespace qanalogy::service {

using Clock = std::chrono::steady_clock;
using PeerId = std::uint64_t;
using Sink = std::function<void(const WireMessage&)>;

struct HostOptions {
    std::chrono::milliseconds idle_timeout = std::chrono::minutes(30);
    ResultStore* store = nullptr;              // not owned; null disables persistence
    std::function<Clock::time_point()> clock;  // defaults to Clock::now
};

/// Transport-agnostic session service. Front ends register a peer with a
/// sink, then feed it envelopes; replies and session output come back
/// through sinks.
///
/// Each session is serialized by its own mutex. Output for a session is
/// delivered to every subscribed peer while that mutex is held, so sinks see
/// it in seq order and must not call back into the host.
///
/// A peer is subscribed to a session when it creates it or posts to it.
/// Lesson output carries the session's outbound seq (1, 2, ...). Direct
/// replies carry a per-peer seq and echo the request's seq as in_reply_to.
class SessionHost {
  public:
    explicit SessionHost(HostOptions options = {}, lessons::LessonEngine engine = lessons::LessonEngine());
    ~SessionHost();

    SessionHost(const SessionHost&) = delete;
    SessionHost& operator=(const SessionHost&) = delete;

    PeerId connect(Sink sink);
    void disconnect(PeerId peer);

    /// Exactly one Error reply for text that is not a valid envelope.
    void dispatch(PeerId peer, std::string_view text);
    void dispatch(PeerId peer, const WireMessage& msg);

    /// Drops sessions idle longer than the timeout, persisting each first.
    /// Returns how many were reaped.
    std::size_t reap_idle();

    /// Persists every live session. Called on shutdown.
    void persist_all();

    std::optional<SessionRecord> record(const std::string& session_id) const;
    std::optional<lessons::SessionState> state(const std::string& session_id) const;
    std::size_t session_count() const;

    const lessons::LessonEngine& engine() const { return engine_; }

  private:
    struct Session;
    struct Peer;

    void reply(PeerId peer, WireMessage msg, const WireMessage& request);
    void fail(PeerId peer, const WireMessage& request, const std::string& code, const std::string& message);
    std::shared_ptr<Session> find_session(const std::string& id) const;
    bool accept_seq(PeerId peer, const WireMessage& msg);
    void persist(const Session& s);

    void create_session(PeerId peer, const WireMessage& msg);
    void list_lessons(PeerId peer, const WireMessage& msg);
    void validate_analogy(PeerId peer, const WireMessage& msg);
    void submit_quiz(PeerId peer, const WireMessage& msg);
    void post_event(PeerId peer, const WireMessage& msg);

    Clock::time_point now() const;
    std::string new_session_id();

    HostOptions options_;
    lessons::LessonEngine engine_;

    mutable std::mutex sessions_mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::uint64_t next_session_ = 1;

    mutable std::mutex peers_mutex_;
    std::map<PeerId, std::shared_ptr<Peer>> peers_;
    PeerId next_peer_ = 1;
};

/// Fresh seed from the platform entropy source.
std::uint64_t entropy_seed();

}  // namespace qanalogy::service

#endif  // QANALOGY_SERVICE_SESSION_HOST_HPP

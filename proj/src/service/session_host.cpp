#include "qanalogy/service/session_host.hpp"

#include <cstdio>
#include <ctime>
#include <random>

namespace qanalogy::service {

using nlohmann::json;

struct SessionHost::Session {
    std::mutex mutex;
    SessionRecord record;
    lessons::SessionState state;
    std::uint64_t out_seq = 0;
    std::uint64_t in_seq = 0;
    std::set<PeerId> subscribers;
    Clock::time_point last_active;
    bool closed = false;  // reaped; late posts see unknown_session
};

struct SessionHost::Peer {
    Sink sink;
    std::uint64_t reply_seq = 0;
    std::map<std::string, std::uint64_t> last_inbound;  // by session id, "" for session-less verbs
};

std::uint64_t entropy_seed() {
    std::random_device rd;
    return (std::uint64_t(rd()) << 32) | rd();
}

namespace {

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    const auto n = std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
    std::snprintf(buf + n, sizeof buf - n, ".%03dZ", int(ms));
    return buf;
}

bool is_non_negative_integer(const json& j) {
    return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

WireMessage make(std::string_view type, std::string session_id, json payload) {
    WireMessage m;
    m.type = type;
    m.session_id = std::move(session_id);
    m.payload = std::move(payload);
    return m;
}

}  // namespace

SessionHost::SessionHost(HostOptions options, lessons::LessonEngine engine)
    : options_(std::move(options)), engine_(std::move(engine)) {
    if (!options_.clock) options_.clock = [] { return Clock::now(); };
}

SessionHost::~SessionHost() = default;

Clock::time_point SessionHost::now() const { return options_.clock(); }

std::string SessionHost::new_session_id() {
    std::uint64_t n;
    {
        std::lock_guard lock(sessions_mutex_);
        n = next_session_++;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "s%llu-%08x", static_cast<unsigned long long>(n),
                  static_cast<unsigned>(entropy_seed() & 0xffffffffU));
    return buf;
}

PeerId SessionHost::connect(Sink sink) {
    auto peer = std::make_shared<Peer>();
    peer->sink = std::move(sink);
    std::lock_guard lock(peers_mutex_);
    const PeerId id = next_peer_++;
    peers_.emplace(id, std::move(peer));
    return id;
}

void SessionHost::disconnect(PeerId peer) {
    std::lock_guard lock(peers_mutex_);
    peers_.erase(peer);
}

void SessionHost::reply(PeerId peer, WireMessage msg, const WireMessage& request) {
    if (request.seq) msg.payload["in_reply_to"] = *request.seq;
    Sink sink;
    {
        std::lock_guard lock(peers_mutex_);
        auto it = peers_.find(peer);
        if (it == peers_.end()) return;
        msg.seq = ++it->second->reply_seq;
        sink = it->second->sink;
    }
    sink(msg);
}

void SessionHost::fail(PeerId peer, const WireMessage& request, const std::string& code,
                       const std::string& message) {
    reply(peer, error_message(request.session_id, code, message), request);
}

bool SessionHost::accept_seq(PeerId peer, const WireMessage& msg) {
    if (!msg.seq) return true;
    std::lock_guard lock(peers_mutex_);
    auto it = peers_.find(peer);
    if (it == peers_.end()) return false;
    auto& last = it->second->last_inbound;
    auto seen = last.find(msg.session_id);
    if (seen != last.end() && *msg.seq <= seen->second) return false;
    last[msg.session_id] = *msg.seq;
    return true;
}

std::shared_ptr<SessionHost::Session> SessionHost::find_session(const std::string& id) const {
    std::lock_guard lock(sessions_mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

void SessionHost::persist(const Session& s) {
    if (options_.store != nullptr) options_.store->append(s.record);
}

void SessionHost::dispatch(PeerId peer, std::string_view text) {
    WireMessage msg;
    try {
        msg = parse_wire(text);
    } catch (const WireError& e) {
        fail(peer, WireMessage{}, e.code(), e.what());
        return;
    }
    dispatch(peer, msg);
}

void SessionHost::dispatch(PeerId peer, const WireMessage& msg) {
    if (msg.type == kCreateSession) {
        create_session(peer, msg);
    } else if (msg.type == kListLessons) {
        list_lessons(peer, msg);
    } else if (msg.type == kValidateAnalogy) {
        validate_analogy(peer, msg);
    } else if (msg.type == kSubmitQuiz) {
        submit_quiz(peer, msg);
    } else if (lessons::is_input_type(msg.type)) {
        post_event(peer, msg);
    } else {
        fail(peer, msg, "unknown_type", "unknown message type '" + msg.type + "'");
    }
}

void SessionHost::create_session(PeerId peer, const WireMessage& msg) {
    const auto& p = msg.payload;
    if (!p.contains("lesson") || !p["lesson"].is_string()) {
        fail(peer, msg, "invalid_payload", "CreateSession needs a string 'lesson'");
        return;
    }
    const auto lesson = lessons::parse_lesson_id(p["lesson"].get<std::string>());
    if (!lesson) {
        fail(peer, msg, "unknown_lesson", "unknown lesson '" + p["lesson"].get<std::string>() + "'");
        return;
    }
    std::optional<std::uint64_t> seed;
    if (p.contains("seed") && !p["seed"].is_null()) {
        if (!is_non_negative_integer(p["seed"])) {
            fail(peer, msg, "invalid_payload", "'seed' must be a non-negative integer");
            return;
        }
        seed = p["seed"].get<std::uint64_t>();
    }
    if (!accept_seq(peer, msg)) {
        fail(peer, msg, "out_of_order", "seq must increase");
        return;
    }

    auto s = std::make_shared<Session>();
    s->record.session_id = new_session_id();
    s->record.lesson = *lesson;
    s->record.seed = seed ? *seed : entropy_seed();
    s->record.created_at = utc_timestamp();
    s->state = engine_.start_lesson(*lesson, s->record.seed);
    s->subscribers.insert(peer);
    s->last_active = now();
    const std::string id = s->record.session_id;
    const std::uint64_t recorded_seed = s->record.seed;
    {
        std::lock_guard lock(sessions_mutex_);
        sessions_.emplace(id, std::move(s));
    }
    reply(peer,
          make(kSessionCreated, id,
               {{"session_id", id}, {"lesson", lessons::to_string(*lesson)}, {"seed", recorded_seed}}),
          msg);
}

void SessionHost::list_lessons(PeerId peer, const WireMessage& msg) {
    reply(peer,
          make(kLessonList, msg.session_id,
               {{"version", kProtocolVersion}, {"lessons", lesson_list_json(engine_.library())}}),
          msg);
}

void SessionHost::validate_analogy(PeerId peer, const WireMessage& msg) {
    const auto& p = msg.payload;
    if (!p.contains("concept") || !p["concept"].is_string() || !p.contains("object") || !p["object"].is_string()) {
        fail(peer, msg, "invalid_payload", "ValidateAnalogy needs string 'concept' and 'object'");
        return;
    }
    const auto qc = analogy::parse_concept(p["concept"].get<std::string>());
    if (!qc) {
        fail(peer, msg, "unknown_concept", "unknown concept '" + p["concept"].get<std::string>() + "'");
        return;
    }
    const auto& catalog = analogy::default_catalog();
    const auto* object = analogy::find_object(catalog, p["object"].get<std::string>());
    if (object == nullptr) {
        fail(peer, msg, "unknown_object", "no catalog object '" + p["object"].get<std::string>() + "'");
        return;
    }
    reply(peer, make(kValidationResult, msg.session_id, validation_json(*qc, *object, analogy::validate_analogy(*qc, *object))),
          msg);
}

void SessionHost::submit_quiz(PeerId peer, const WireMessage& msg) {
    auto s = find_session(msg.session_id);
    if (!s) {
        fail(peer, msg, "unknown_session", "no session '" + msg.session_id + "'");
        return;
    }
    const auto& p = msg.payload;
    std::vector<int> answers;
    try {
        answers = p.at("answers").get<std::vector<int>>();
    } catch (const json::exception&) {
        fail(peer, msg, "invalid_payload", "SubmitQuiz needs an integer array 'answers'");
        return;
    }
    lessons::QuizScore score;
    try {
        score = lessons::grade(lessons::shipped_quiz(), answers);
    } catch (const std::domain_error& e) {
        fail(peer, msg, "invalid_answers", e.what());
        return;
    }
    if (!accept_seq(peer, msg)) {
        fail(peer, msg, "out_of_order", "seq must increase");
        return;
    }
    {
        std::lock_guard lock(s->mutex);
        if (s->closed) {
            fail(peer, msg, "unknown_session", "session '" + msg.session_id + "' has expired");
            return;
        }
        s->record.quiz_score = score;
        s->last_active = now();
        try {
            persist(*s);
        } catch (const StoreError& e) {
            fail(peer, msg, "storage_error", e.what());
            return;
        }
    }
    reply(peer, make(kQuizResult, msg.session_id, quiz_score_json(score)), msg);
}

void SessionHost::post_event(PeerId peer, const WireMessage& msg) {
    auto s = find_session(msg.session_id);
    if (!s) {
        fail(peer, msg, "unknown_session", "no session '" + msg.session_id + "'");
        return;
    }
    lessons::InputEvent ev;
    try {
        ev = lessons::input_from_payload(msg.type, msg.payload);
    } catch (const lessons::EventFormatError& e) {
        fail(peer, msg, e.code(), e.what());
        return;
    }
    if (auto problem = lessons::check_event(ev)) {
        fail(peer, msg, *problem, "event rejected: " + *problem);
        return;
    }
    if (!accept_seq(peer, msg)) {
        fail(peer, msg, "out_of_order", "seq must increase");
        return;
    }

    std::lock_guard lock(s->mutex);
    if (s->closed) {
        fail(peer, msg, "unknown_session", "session '" + msg.session_id + "' has expired");
        return;
    }
    auto reaction = engine_.handle_event(s->state, ev);
    s->state = std::move(reaction.state);
    s->last_active = now();
    s->subscribers.insert(peer);

    WireMessage inbound = msg;
    inbound.seq = ++s->in_seq;
    s->record.transcript.push_back({Direction::Inbound, std::move(inbound)});

    std::vector<Sink> sinks;
    {
        std::lock_guard peers_lock(peers_mutex_);
        for (auto it = s->subscribers.begin(); it != s->subscribers.end();) {
            auto peer_it = peers_.find(*it);
            if (peer_it == peers_.end()) {
                it = s->subscribers.erase(it);
            } else {
                sinks.push_back(peer_it->second->sink);
                ++it;
            }
        }
    }
    for (const auto& out : reaction.outputs) {
        WireMessage m = make(lessons::type_tag(out), msg.session_id, lessons::to_payload(out));
        m.seq = ++s->out_seq;
        s->record.transcript.push_back({Direction::Outbound, m});
        for (const auto& sink : sinks) sink(m);
    }
}

std::size_t SessionHost::reap_idle() {
    const auto cutoff = now() - options_.idle_timeout;
    std::vector<std::shared_ptr<Session>> expired;
    {
        std::lock_guard lock(sessions_mutex_);
        for (auto it = sessions_.begin(); it != sessions_.end();) {
            std::lock_guard session_lock(it->second->mutex);
            if (it->second->last_active <= cutoff) {
                it->second->closed = true;
                expired.push_back(it->second);
                it = sessions_.erase(it);
            } else {
                ++it;
            }
        }
    }
    for (const auto& s : expired) {
        std::lock_guard lock(s->mutex);
        persist(*s);
    }
    return expired.size();
}

void SessionHost::persist_all() {
    std::vector<std::shared_ptr<Session>> live;
    {
        std::lock_guard lock(sessions_mutex_);
        for (const auto& [id, s] : sessions_) live.push_back(s);
    }
    for (const auto& s : live) {
        std::lock_guard lock(s->mutex);
        persist(*s);
    }
}

std::optional<SessionRecord> SessionHost::record(const std::string& session_id) const {
    auto s = find_session(session_id);
    if (!s) return std::nullopt;
    std::lock_guard lock(s->mutex);
    return s->record;
}

std::optional<lessons::SessionState> SessionHost::state(const std::string& session_id) const {
    auto s = find_session(session_id);
    if (!s) return std::nullopt;
    std::lock_guard lock(s->mutex);
    return s->state;
}

std::size_t SessionHost::session_count() const {
    std::lock_guard lock(sessions_mutex_);
    return sessions_.size();
}

}  // namespace qanalogy::service

#include "qanalogy/service/server.hpp"

#include <condition_variable>
#include <deque>
#include <iostream>
#include <thread>

#include <boost/asio/signal_set.hpp>
#include <boost/asio/steady_timer.hpp>
#include <boost/asio/strand.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>

namespace qanalogy::service {

namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
namespace net = boost::asio;
using tcp = net::ip::tcp;
using nlohmann::json;

// ---- routes ------------------------------------------------------------------

namespace {

unsigned status_for(const WireMessage& m) {
    if (m.type != kError) return 200;
    return m.payload.value("code", "") == "unknown_session" ? 404 : 400;
}

HttpReply malformed(const std::string& why) {
    return {400, to_json(error_message("", "malformed", why))};
}

// Runs one request through a short-lived peer and returns what it received.
std::vector<WireMessage> exchange(SessionHost& host, const WireMessage& request) {
    std::mutex m;
    std::vector<WireMessage> received;
    const PeerId peer = host.connect([&](const WireMessage& msg) {
        std::lock_guard lock(m);
        received.push_back(msg);
    });
    host.dispatch(peer, request);
    host.disconnect(peer);
    std::lock_guard lock(m);
    return received;
}

HttpReply single_reply(SessionHost& host, const WireMessage& request) {
    for (const auto& msg : exchange(host, request)) {
        if (!lessons::is_output_type(msg.type)) return {status_for(msg), to_json(msg)};
    }
    return {500, to_json(error_message("", "internal", "no reply"))};
}

}  // namespace

HttpReply handle_http(SessionHost& host, std::string_view method, std::string_view target, std::string_view body) {
    target = target.substr(0, target.find('?'));
    const bool get = method == "GET";
    const bool post = method == "POST";

    if (get && target == "/framework") return {200, framework_json()};
    if (get && target == "/lessons") return single_reply(host, WireMessage{std::string(kListLessons), "", {}, {}});

    if (!post) return {404, to_json(error_message("", "not_found", "no route for " + std::string(target)))};

    json doc = json::parse(body.empty() ? std::string_view("{}") : body, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) return malformed("request body must be a JSON object");

    if (target == "/sessions") return single_reply(host, WireMessage{std::string(kCreateSession), "", {}, doc});
    if (target == "/analogy/validate") {
        return single_reply(host, WireMessage{std::string(kValidateAnalogy), "", {}, doc});
    }
    if (target == "/quiz") {
        const std::string id = doc.contains("session_id") && doc["session_id"].is_string()
                                   ? doc["session_id"].get<std::string>()
                                   : std::string();
        doc.erase("session_id");
        return single_reply(host, WireMessage{std::string(kSubmitQuiz), id, {}, doc});
    }

    constexpr std::string_view prefix = "/sessions/";
    constexpr std::string_view suffix = "/events";
    if (target.starts_with(prefix) && target.ends_with(suffix) && target.size() > prefix.size() + suffix.size()) {
        WireMessage msg;
        try {
            doc["session_id"] = std::string(target.substr(prefix.size(), target.size() - prefix.size() - suffix.size()));
            msg = parse_wire(doc.dump());
        } catch (const WireError& e) {
            return malformed(e.what());
        }
        json out = json::array();
        for (const auto& m : exchange(host, msg)) {
            if (m.type == kError) return {status_for(m), to_json(m)};
            out.push_back(to_json(m));
        }
        return {200, std::move(out)};
    }
    return {404, to_json(error_message("", "not_found", "no route for " + std::string(target)))};
}

// ---- connections -------------------------------------------------------------

namespace {

void log_error(const char* what, beast::error_code ec) {
    if (ec == net::error::operation_aborted || ec == websocket::error::closed) return;
    std::cerr << "qanalogy: " << what << ": " << ec.message() << '\n';
}

class WsSession : public std::enable_shared_from_this<WsSession> {
  public:
    WsSession(tcp::socket&& socket, SessionHost& host) : ws_(std::move(socket)), host_(host) {}

    ~WsSession() {
        if (peer_ != 0) host_.disconnect(peer_);
    }

    void run(http::request<http::string_body> req) {
        std::weak_ptr<WsSession> weak = shared_from_this();
        peer_ = host_.connect([weak](const WireMessage& m) {
            if (auto self = weak.lock()) self->send(to_text(m));
        });
        ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
        ws_.async_accept(req, beast::bind_front_handler(&WsSession::on_accept, shared_from_this()));
    }

    void send(std::string text) {
        net::post(ws_.get_executor(), [self = shared_from_this(), text = std::move(text)]() mutable {
            self->queue_.push_back(std::move(text));
            if (self->queue_.size() == 1) self->write_next();
        });
    }

  private:
    void on_accept(beast::error_code ec) {
        if (ec) return log_error("websocket accept", ec);
        do_read();
    }

    void do_read() { ws_.async_read(buffer_, beast::bind_front_handler(&WsSession::on_read, shared_from_this())); }

    void on_read(beast::error_code ec, std::size_t) {
        if (ec) {
            log_error("websocket read", ec);
            host_.disconnect(peer_);
            return;
        }
        const std::string text = beast::buffers_to_string(buffer_.data());
        buffer_.consume(buffer_.size());
        host_.dispatch(peer_, text);
        do_read();
    }

    void write_next() {
        ws_.text(true);
        ws_.async_write(net::buffer(queue_.front()),
                        beast::bind_front_handler(&WsSession::on_write, shared_from_this()));
    }

    void on_write(beast::error_code ec, std::size_t) {
        if (ec) return log_error("websocket write", ec);
        queue_.pop_front();
        if (!queue_.empty()) write_next();
    }

    websocket::stream<beast::tcp_stream> ws_;
    beast::flat_buffer buffer_;
    std::deque<std::string> queue_;
    SessionHost& host_;
    PeerId peer_ = 0;
};

class HttpSession : public std::enable_shared_from_this<HttpSession> {
  public:
    HttpSession(tcp::socket&& socket, SessionHost& host) : stream_(std::move(socket)), host_(host) {}

    void run() {
        net::dispatch(stream_.get_executor(), beast::bind_front_handler(&HttpSession::do_read, shared_from_this()));
    }

  private:
    void do_read() {
        req_ = {};
        stream_.expires_after(std::chrono::seconds(30));
        http::async_read(stream_, buffer_, req_, beast::bind_front_handler(&HttpSession::on_read, shared_from_this()));
    }

    void on_read(beast::error_code ec, std::size_t) {
        if (ec == http::error::end_of_stream) return close();
        if (ec) return log_error("http read", ec);

        if (websocket::is_upgrade(req_) && req_.target() == "/ws") {
            beast::get_lowest_layer(stream_).expires_never();
            std::make_shared<WsSession>(stream_.release_socket(), host_)->run(std::move(req_));
            return;
        }

        auto res = std::make_shared<http::response<http::string_body>>();
        res->version(req_.version());
        res->keep_alive(req_.keep_alive());
        res->set(http::field::content_type, "application/json");
        res->set(http::field::access_control_allow_origin, "*");
        if (req_.method() == http::verb::options) {
            res->result(http::status::no_content);
            res->set(http::field::access_control_allow_methods, "GET, POST, OPTIONS");
            res->set(http::field::access_control_allow_headers, "Content-Type");
        } else {
            const auto reply = handle_http(host_, std::string_view(req_.method_string().data(), req_.method_string().size()),
                                           std::string_view(req_.target().data(), req_.target().size()), req_.body());
            res->result(reply.status);
            res->body() = reply.body.dump();
        }
        res->prepare_payload();
        http::async_write(stream_, *res, [self = shared_from_this(), res](beast::error_code ec, std::size_t) {
            if (ec) return log_error("http write", ec);
            if (!res->keep_alive()) return self->close();
            self->do_read();
        });
    }

    void close() {
        beast::error_code ec;
        stream_.socket().shutdown(tcp::socket::shutdown_send, ec);
    }

    beast::tcp_stream stream_;
    beast::flat_buffer buffer_;
    http::request<http::string_body> req_;
    SessionHost& host_;
};

class Listener : public std::enable_shared_from_this<Listener> {
  public:
    Listener(net::io_context& ioc, tcp::endpoint endpoint, SessionHost& host)
        : ioc_(ioc), acceptor_(net::make_strand(ioc)), host_(host) {
        acceptor_.open(endpoint.protocol());
        acceptor_.set_option(net::socket_base::reuse_address(true));
        acceptor_.bind(endpoint);
        acceptor_.listen(net::socket_base::max_listen_connections);
    }

    void run() { do_accept(); }
    void close() {
        net::post(acceptor_.get_executor(), [self = shared_from_this()] {
            beast::error_code ec;
            self->acceptor_.close(ec);
        });
    }
    unsigned short port() const { return acceptor_.local_endpoint().port(); }

  private:
    void do_accept() {
        acceptor_.async_accept(net::make_strand(ioc_),
                               beast::bind_front_handler(&Listener::on_accept, shared_from_this()));
    }

    void on_accept(beast::error_code ec, tcp::socket socket) {
        if (ec) {
            if (ec == net::error::operation_aborted) return;
            log_error("accept", ec);
        } else {
            std::make_shared<HttpSession>(std::move(socket), host_)->run();
        }
        do_accept();
    }

    net::io_context& ioc_;
    tcp::acceptor acceptor_;
    SessionHost& host_;
};

}  // namespace

// ---- server ------------------------------------------------------------------

struct Server::Impl {
    Impl(SessionHost& h, ServerOptions o) : host(h), options(std::move(o)), reaper(ioc) {}

    void schedule_reap() {
        reaper.expires_after(options.reap_interval);
        reaper.async_wait([this](beast::error_code ec) {
            if (ec) return;
            try {
                host.reap_idle();
            } catch (const std::exception& e) {
                std::cerr << "qanalogy: reaping sessions failed: " << e.what() << '\n';
            }
            schedule_reap();
        });
    }

    SessionHost& host;
    ServerOptions options;
    net::io_context ioc;
    net::steady_timer reaper;
    std::shared_ptr<Listener> listener;
    std::vector<std::thread> workers;
    unsigned short bound_port = 0;

    std::mutex mutex;
    std::condition_variable stopped_cv;
    bool stop_requested = false;
    bool running = false;
};

Server::Server(SessionHost& host, ServerOptions options) : impl_(std::make_unique<Impl>(host, std::move(options))) {}

Server::~Server() {
    try {
        stop();
    } catch (const std::exception& e) {
        std::cerr << "qanalogy: shutdown: " << e.what() << '\n';
    }
}

void Server::start() {
    auto& d = *impl_;
    const tcp::endpoint endpoint(net::ip::make_address(d.options.address), d.options.port);
    d.listener = std::make_shared<Listener>(d.ioc, endpoint, d.host);
    d.bound_port = d.listener->port();
    d.listener->run();
    d.schedule_reap();
    d.running = true;
    for (int i = 0; i < std::max(1, d.options.threads); ++i) d.workers.emplace_back([&d] { d.ioc.run(); });
}

void Server::stop() {
    auto& d = *impl_;
    if (!d.running) return;
    d.running = false;
    d.listener->close();
    d.reaper.cancel();
    d.ioc.stop();
    for (auto& t : d.workers) t.join();
    d.workers.clear();
    {
        std::lock_guard lock(d.mutex);
        d.stop_requested = true;
    }
    d.stopped_cv.notify_all();
    d.host.persist_all();
}

void Server::wait() {
    auto& d = *impl_;
    net::signal_set signals(d.ioc, SIGINT, SIGTERM);
    signals.async_wait([&d](beast::error_code ec, int) {
        if (ec) return;
        std::lock_guard lock(d.mutex);
        d.stop_requested = true;
        d.stopped_cv.notify_all();
    });
    {
        std::unique_lock lock(d.mutex);
        d.stopped_cv.wait(lock, [&d] { return d.stop_requested; });
    }
    stop();
}

unsigned short Server::port() const { return impl_->bound_port; }

}  // namespace qanalogy::service

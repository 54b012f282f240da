#include "qanalogy/lessons/engine.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qanalogy/qcore.hpp"

namespace qanalogy::lessons {

namespace {

using qcore::GateLabel;
using qcore::StateVector;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const std::vector<std::string> kQubitLabels = {"|0⟩", "|1⟩"};
const std::vector<std::string> kPairLabels = {"|00⟩", "|01⟩", "|10⟩", "|11⟩"};

// Object ids shared with clients.
constexpr const char* kCoin = "coin";
constexpr const char* kLeftCoin = "left_coin";
constexpr const char* kRightCoin = "right_coin";
constexpr const char* kSourceCoin = "source_coin";
constexpr const char* kDestCoin = "dest_coin";

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0 ? a + kTwoPi : a;
}

Face face_for_bit(std::size_t bit) { return bit ? Face::Tail : Face::Head; }
double face_angle(Face f) { return f == Face::Head ? 0.0 : std::numbers::pi; }

bool is_gate_lesson(LessonId id) {
    return id == LessonId::GateIdentity || id == LessonId::GatePauliX || id == LessonId::GateHadamard;
}

bool is_cube(ObjectKind k) { return k == ObjectKind::CubeI || k == ObjectKind::CubeX || k == ObjectKind::CubeH; }

GateLabel gate_for(LessonId id) {
    switch (id) {
        case LessonId::GateIdentity:
            return GateLabel::Identity;
        case LessonId::GatePauliX:
            return GateLabel::PauliX;
        default:
            return GateLabel::Hadamard;
    }
}

std::string math_expression(GateLabel g) {
    switch (g) {
        case GateLabel::Identity:
            return "math.identity_product";
        case GateLabel::PauliX:
            return "math.pauli_x_product";
        default:
            return "math.hadamard_product";
    }
}

PanelUpdate register_panel(std::string panel, const StateVector& s) {
    const auto p = qcore::probabilities(s);
    return {std::move(panel), s.num_qubits() == 1 ? kQubitLabels : kPairLabels,
            std::vector<double>(p.data(), p.data() + p.size())};
}

PanelUpdate qubit_panel(std::string panel, const StateVector& s, int qubit) {
    const auto p = qcore::qubit_probabilities(s, qubit);
    return {std::move(panel), kQubitLabels, {p[0], p[1]}};
}

std::string coin_id(LessonId lesson, const Placement& p) {
    if (lesson == LessonId::Entanglement) return p.zone == "right_circle" ? kRightCoin : kLeftCoin;
    if (lesson == LessonId::Teleportation) return kSourceCoin;
    return kCoin;
}

/// Working copy for one handler call.
class Turn {
  public:
    Turn(const LessonScript& script, SessionState state) : script_(script), s(std::move(state)) {}

    const LessonScript& script() const { return script_; }

    void emit(OutputEvent ev) {
        if (const auto* panel = std::get_if<PanelUpdate>(&ev)) s.panel = *panel;
        out.push_back(std::move(ev));
    }

    void narrate(const std::string& text_id) {
        if (!text_id.empty()) emit(Narration{text_id});
    }

    void enter_step(std::size_t step) {
        s.step = step;
        s.placed.clear();
        narrate(script_.steps.at(step).narration);
    }

    // Equal superposition H|0> on a single coin, shown on a panel.
    void superpose(const std::string& object, const std::string& panel, double speed) {
        s.qubits = qcore::apply_gate(StateVector::basis(1, 0), qcore::standard_gate(GateLabel::Hadamard), {0});
        s.animation[object].speed = speed;
        emit(StartRotation{object, speed});
        emit(register_panel(panel, *s.qubits));
    }

    void measure_coin(const std::string& object) {
        const auto r = qcore::measure_all(*s.qubits, s.rng);
        s.qubits = r.collapsed;
        const Face face = face_for_bit(r.outcome);
        s.animation[object] = ObjectMotion{face_angle(face), 0.0};
        emit(StopRotation{object, face});
        emit(register_panel("main", *s.qubits));
    }

    Reaction finish() && { return {std::move(s), std::move(out)}; }

  private:
    const LessonScript& script_;

  public:
    SessionState s;
    std::vector<OutputEvent> out;
};

void apply_gate_lesson(Turn& t, double slider) {
    const GateLabel label = gate_for(t.s.lesson);
    const auto input = qcore::state_from_slider(slider);
    const auto output = qcore::apply_gate(input, qcore::standard_gate(label), {0});
    const auto p = qcore::probabilities(output);
    t.s.qubits = output;
    t.s.slider = slider;
    t.emit(register_panel("output", output));
    t.emit(VirtualCutterOutput{p[0]});
    t.emit(ShowMath{math_expression(label)});
}

void on_placement_complete(Turn& t) {
    const auto lesson = t.s.lesson;
    if (lesson == LessonId::Entanglement) {
        const double speed = t.script().params.rotation_speed;
        t.s.qubits = qcore::bell_psi_plus();
        t.s.animation[kLeftCoin].speed = speed;
        t.s.animation[kRightCoin].speed = speed;
        t.emit(StartRotation{kLeftCoin, speed});
        t.emit(StartRotation{kRightCoin, speed});
        t.emit(register_panel("pair", *t.s.qubits));
        t.enter_step(1);
    } else if (is_gate_lesson(lesson)) {
        const double slider = *t.s.slider;
        t.enter_step(1);
        apply_gate_lesson(t, slider);
    } else {
        t.enter_step(1);
    }
}

void on_detection(Turn& t, const ObjectDetected& seen) {
    const auto lesson = t.s.lesson;
    if (t.s.step != 0) {
        // a detector may keep reporting the cutter; only a moved slider matters
        if (is_gate_lesson(lesson) && seen.kind == ObjectKind::PaperCutter &&
            *accept_slider(*seen.slider) != *t.s.slider) {
            apply_gate_lesson(t, *accept_slider(*seen.slider));
        }
        return;
    }

    const auto& awaits = t.script().steps.front().awaits;
    const Placement* match = nullptr;
    for (const auto& p : awaits) {
        if (p.kind == seen.kind && p.zone == seen.zone) match = &p;
    }
    if (match == nullptr) {
        if (is_gate_lesson(lesson) && is_cube(seen.kind)) t.narrate(std::string(kCubeMismatchNarration));
        return;
    }
    for (const auto& done : t.s.placed) {
        if (done == *match) {
            if (seen.kind == ObjectKind::PaperCutter) t.s.slider = *accept_slider(*seen.slider);
            return;
        }
    }
    t.s.placed.push_back(*match);
    if (seen.kind == ObjectKind::PaperCutter) t.s.slider = *accept_slider(*seen.slider);
    if (seen.kind == ObjectKind::Coin) t.s.animation[coin_id(lesson, *match)] = ObjectMotion{};

    if (t.s.placed.size() == awaits.size()) {
        on_placement_complete(t);
    } else {
        t.narrate(match->narration);
    }
}

void on_fist(Turn& t) {
    const auto& params = t.script().params;
    const auto step = t.s.step;
    switch (t.s.lesson) {
        case LessonId::Superposition:
            if (step == 1) {
                t.superpose(kCoin, "main", params.rotation_speed);
                t.enter_step(2);
            }
            break;
        case LessonId::Measurement:
            if (step == 1) {
                t.superpose(kCoin, "main", params.rotation_speed);
                t.enter_step(2);
            } else if (step == 2) {
                t.measure_coin(kCoin);
                t.enter_step(3);
            }
            break;
        case LessonId::Decoherence:
            if (step == 1) {
                t.superpose(kCoin, "main", params.decay_omega0);
                t.emit(Animate{AnimationKind::EnvironmentInteraction, kCoin, "", {}});
                t.emit(Animate{AnimationKind::DecoherenceSlowdown,
                               kCoin,
                               "",
                               {{"omega0", params.decay_omega0},
                                {"tau", params.decay_tau},
                                {"stop_speed", params.decay_stop_speed}}});
                t.s.decay_time = 0.0;
                t.enter_step(2);
            }
            break;
        case LessonId::Tunneling:
            if (step == 1) {
                t.superpose(kCoin, "main", params.rotation_speed);
                t.emit(Animate{AnimationKind::TunnelThroughBarrier,
                               kCoin,
                               "table",
                               {{"transmission", params.tunnel_transmission}}});
                t.enter_step(2);
            }
            break;
        case LessonId::Teleportation:
            if (step == 1) {
                t.superpose(kSourceCoin, "source_coin", params.rotation_speed);
                // destination coin joins the register as a blank |0>
                t.s.qubits = qcore::tensor_product(*t.s.qubits, StateVector::basis(1, 0));
                t.enter_step(2);
            } else if (step == 2) {
                // SWAP as three CNOTs: the destination takes the state, the
                // source is left blank; nothing is copied
                const auto cnot = qcore::standard_gate(GateLabel::CNOT);
                auto q = qcore::apply_gate(*t.s.qubits, cnot, {0, 1});
                q = qcore::apply_gate(q, cnot, {1, 0});
                q = qcore::apply_gate(q, cnot, {0, 1});
                t.s.qubits = q;
                const ObjectMotion carried = t.s.animation[kSourceCoin];
                t.emit(Animate{AnimationKind::TeleportTransfer,
                               kSourceCoin,
                               kDestCoin,
                               {{"angle", carried.angle}, {"speed", carried.speed}}});
                t.s.animation[kSourceCoin] = ObjectMotion{};
                t.s.animation[kDestCoin] = carried;
                t.emit(StartRotation{kDestCoin, carried.speed});
                t.emit(qubit_panel("source_coin", q, 0));
                t.emit(qubit_panel("dest_coin", q, 1));
                t.enter_step(3);
            }
            break;
        case LessonId::Entanglement:
            if (step == 1) {
                const auto r = qcore::measure_qubit(*t.s.qubits, 0, t.s.rng);
                t.s.qubits = r.collapsed;
                const auto right = qcore::qubit_probabilities(r.collapsed, 1);
                const Face left_face = face_for_bit(r.outcome);
                const Face right_face = right[1] > 0.5 ? Face::Tail : Face::Head;
                t.s.animation[kLeftCoin] = ObjectMotion{face_angle(left_face), 0.0};
                t.s.animation[kRightCoin] = ObjectMotion{face_angle(right_face), 0.0};
                t.emit(StopRotation{kLeftCoin, left_face});
                t.emit(StopRotation{kRightCoin, right_face});
                t.emit(qubit_panel("left_coin", r.collapsed, 0));
                t.emit(qubit_panel("right_coin", r.collapsed, 1));
                t.enter_step(2);
            }
            break;
        default:
            break;
    }
}

void on_slider(Turn& t, double s) {
    if (!is_gate_lesson(t.s.lesson)) return;
    if (t.s.step == 1) {
        apply_gate_lesson(t, s);
    } else if (t.s.slider) {
        t.s.slider = s;
    }
}

void advance(Turn& t, double dt) {
    if (dt == 0.0) return;
    t.s.elapsed += dt;
    for (auto& [id, motion] : t.s.animation) motion.angle = wrap_angle(motion.angle + motion.speed * dt);

    if (t.s.lesson != LessonId::Decoherence || t.s.step != 2 || t.s.in_menu) return;
    const auto& p = t.script().params;
    t.s.decay_time += dt;
    const double speed = p.decay_omega0 * std::exp(-t.s.decay_time / p.decay_tau);
    if (speed < p.decay_stop_speed) {
        t.measure_coin(kCoin);
        t.enter_step(3);
    } else {
        t.s.animation[kCoin].speed = speed;
    }
}

}  // namespace

LessonEngine::LessonEngine(LessonLibrary library) : library_(std::move(library)) {}

SessionState LessonEngine::start_lesson(LessonId id, std::uint64_t seed) const {
    SessionState s;
    s.lesson = id;
    s.rng = qcore::RandomSource(seed);
    return s;
}

const StepSpec& LessonEngine::current_step(const SessionState& state) const {
    return library_.script(state.lesson).steps.at(state.step);
}

Reaction LessonEngine::handle_event(const SessionState& state, const InputEvent& ev) const {
    if (auto problem = check_event(ev)) {
        const auto text = *problem == "invalid_slider" ? kInvalidSliderNarration : kInvalidEventNarration;
        return {state, {Narration{std::string(text)}}};
    }
    if (const auto* t = std::get_if<Tick>(&ev)) return tick(state, t->dt);

    if (const auto* g = std::get_if<Gesture>(&ev); g && g->kind == GestureKind::ThumbsUp) {
        SessionState next = start_lesson(state.lesson, 0);
        next.rng = state.rng;
        next.elapsed = state.elapsed;
        next.in_menu = true;
        return {std::move(next), {ReturnToMenu{}}};
    }
    if (const auto* m = std::get_if<MenuSelect>(&ev)) {
        SessionState next = start_lesson(m->lesson, 0);
        next.rng = state.rng;
        next.elapsed = state.elapsed;
        Turn t(library_.script(m->lesson), std::move(next));
        t.narrate(t.script().steps.front().narration);
        return std::move(t).finish();
    }
    if (state.in_menu) return {state, {}};

    Turn t(library_.script(state.lesson), state);
    if (std::holds_alternative<Gesture>(ev)) {
        on_fist(t);
    } else if (const auto* seen = std::get_if<ObjectDetected>(&ev)) {
        on_detection(t, *seen);
    } else if (const auto* moved = std::get_if<SliderMoved>(&ev)) {
        on_slider(t, *accept_slider(moved->s));
    }
    return std::move(t).finish();
}

Reaction LessonEngine::tick(const SessionState& state, double dt) const {
    if (!(dt >= 0.0) || !std::isfinite(dt)) {
        throw std::domain_error("tick interval must be a finite non-negative number of seconds");
    }
    Turn t(library_.script(state.lesson), state);
    advance(t, dt);
    return std::move(t).finish();
}

namespace {
const LessonEngine& shipped_engine() {
    static const LessonEngine engine;
    return engine;
}
}  // namespace

SessionState start_lesson(LessonId id, std::uint64_t seed) { return shipped_engine().start_lesson(id, seed); }
Reaction handle_event(const SessionState& state, const InputEvent& ev) { return shipped_engine().handle_event(state, ev); }
Reaction tick(const SessionState& state, double dt) { return shipped_engine().tick(state, dt); }

}  // namespace qanalogy::lessons

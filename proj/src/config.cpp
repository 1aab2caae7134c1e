#include "dephase/config.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <map>
#include <sstream>

#include "dephase/errors.hpp"

namespace dephase {

namespace {

struct Entry {
    std::string value;
    int line;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

const std::map<std::string_view, bool>& known_keys() {
    // key -> required
    static const std::map<std::string_view, bool> keys{
        {"N", true},       {"q", false},     {"a", false},      {"x1", true},      {"xN", false},
        {"spacing", false}, {"v", false},    {"xA", false},     {"xB", false},     {"omegaA", false},
        {"omegaB", false}, {"omega", false}, {"state", true},   {"c1", false},     {"c2", false},
        {"c3", false},     {"sign", false},  {"engine", false}, {"t_max", true},   {"steps", true},
        {"out", false},
    };
    return keys;
}

class Entries {
public:
    explicit Entries(std::map<std::string, Entry> e) : entries_(std::move(e)) {}

    bool has(const std::string& key) const { return entries_.count(key) != 0; }
    int line(const std::string& key) const { return has(key) ? entries_.at(key).line : 0; }
    const std::string& text(const std::string& key) const { return entries_.at(key).value; }

    double real(const std::string& key) const {
        const auto& e = entries_.at(key);
        double v = 0.0;
        const char* end = e.value.data() + e.value.size();
        const auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
        if (ec != std::errc() || ptr != end || !std::isfinite(v))
            throw ParseError(e.line, fmt::format("{}: '{}' is not a finite number", key, e.value));
        return v;
    }

    double real_or(const std::string& key, double fallback) const { return has(key) ? real(key) : fallback; }

    long long integer(const std::string& key) const {
        const auto& e = entries_.at(key);
        long long v = 0;
        const char* end = e.value.data() + e.value.size();
        const auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
        if (ec != std::errc() || ptr != end)
            throw ParseError(e.line, fmt::format("{}: '{}' is not an integer", key, e.value));
        return v;
    }

    void forbid(const std::string& key, const std::string& why) const {
        if (has(key)) throw ParseError(line(key), fmt::format("{} {}", key, why));
    }

private:
    std::map<std::string, Entry> entries_;
};

Entries tokenize(std::string_view text) {
    std::map<std::string, Entry> entries;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const auto line = trim(raw);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, fmt::format("expected key=value, got '{}'", line));
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (!known_keys().count(key)) throw ParseError(line_no, fmt::format("unknown key '{}'", key));
        if (value.empty()) throw ParseError(line_no, fmt::format("{}: missing value", key));
        if (entries.count(key))
            throw ParseError(line_no, fmt::format("{} repeated (first set on line {})", key, entries.at(key).line));
        entries.emplace(key, Entry{value, line_no});
    }
    return Entries(std::move(entries));
}

StateKind parse_state(const Entries& e) {
    const auto& s = e.text("state");
    if (s == "phi+") return StateKind::phi_plus;
    if (s == "phi-") return StateKind::phi_minus;
    if (s == "psi+") return StateKind::psi_plus;
    if (s == "psi-") return StateKind::psi_minus;
    if (s == "bd") return StateKind::bell_diagonal;
    if (s == "mixture") return StateKind::mixture;
    throw ParseError(e.line("state"), fmt::format("state: unknown value '{}' (phi+|phi-|psi+|psi-|bd|mixture)", s));
}

Engine parse_engine(const Entries& e) {
    if (!e.has("engine")) return Engine::limit;
    const auto& s = e.text("engine");
    if (s == "exact") return Engine::exact;
    if (s == "limit") return Engine::limit;
    if (s == "limit_same") return Engine::limit_same;
    if (s == "limit_distinct") return Engine::limit_distinct;
    throw ParseError(e.line("engine"),
                     fmt::format("engine: unknown value '{}' (exact|limit|limit_same|limit_distinct)", s));
}

template <class F>
void check(bool ok, int line, F&& message) {
    if (!ok) throw ParseError(line, message());
}

}  // namespace

BellDiagonalState InitialStateSpec::state() const {
    switch (kind) {
        case StateKind::phi_plus: return bell_state(BellLabel::phi_plus);
        case StateKind::phi_minus: return bell_state(BellLabel::phi_minus);
        case StateKind::psi_plus: return bell_state(BellLabel::psi_plus);
        case StateKind::psi_minus: return bell_state(BellLabel::psi_minus);
        case StateKind::bell_diagonal: return make_bell_diagonal(c1, c2, c3);
        case StateKind::mixture: return mixture_state(c3, sign);
    }
    throw InvalidStateError("unknown initial state kind");
}

void RunConfig::validate() const {
    model.validate();
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("t_max must be > 0");
    if (steps < 2) throw DomainError("steps must be >= 2");
    if (engine == Engine::limit_same && !model.same_position())
        throw ConfigurationError("engine limit_same needs xA == xB");
    (void)initial.state();
}

RunConfig parse_config(std::string_view text) {
    const Entries e = tokenize(text);

    std::string missing;
    for (const auto& [key, required] : known_keys())
        if (required && !e.has(std::string(key))) missing += (missing.empty() ? "" : ", ") + std::string(key);
    if (!e.has("q") && !e.has("a")) missing += (missing.empty() ? "" : ", ") + std::string("q or a");
    if (!missing.empty()) throw ParseError(0, "required keys missing: " + missing);

    RunConfig cfg;
    ModelParams& m = cfg.model;

    const long long n = e.integer("N");
    check(n >= 1, e.line("N"), [&] { return fmt::format("N must be >= 1, got {}", n); });
    m.n_spins = static_cast<std::size_t>(n);

    if (e.has("q")) {
        e.forbid("a", "conflicts with q");
        const double q = e.real("q");
        check(q >= 0.0 && q <= 1.0, e.line("q"), [&] { return fmt::format("q must lie in [0, 1], got {}", q); });
        m.coupling_angle = std::asin(std::sqrt(q));
    } else {
        m.coupling_angle = e.real("a");
    }

    m.x1 = e.real("x1");
    if (e.has("xN")) {
        e.forbid("spacing", "conflicts with xN");
        const double xN = e.real("xN");
        if (m.n_spins == 1) {
            check(xN == m.x1, e.line("xN"), [] { return std::string("xN must equal x1 when N = 1"); });
        } else {
            check(xN > m.x1, e.line("xN"), [] { return std::string("xN must exceed x1"); });
            m.spacing = (xN - m.x1) / static_cast<double>(m.n_spins - 1);
        }
    } else {
        m.spacing = e.real_or("spacing", 1.0);
        check(m.spacing > 0.0, e.line("spacing"), [] { return std::string("spacing must be > 0"); });
    }

    m.velocity = e.real_or("v", 1.0);
    check(m.velocity > 0.0, e.line("v"), [] { return std::string("v must be > 0"); });
    m.xA = e.real_or("xA", 0.0);
    m.xB = e.real_or("xB", 0.0);
    check(m.xA < m.x1, e.line("xA"), [] { return std::string("xA must be < x1"); });
    check(m.xB < m.x1, e.line("xB"), [] { return std::string("xB must be < x1"); });
    m.omegaA = e.real_or("omegaA", 0.0);
    m.omegaB = e.real_or("omegaB", 0.0);
    m.array_frequency = e.real_or("omega", 0.0);
    check(m.array_frequency >= 0.0, e.line("omega"), [] { return std::string("omega must be >= 0"); });

    InitialStateSpec& s = cfg.initial;
    s.kind = parse_state(e);
    const int state_line = e.line("state");
    switch (s.kind) {
        case StateKind::bell_diagonal:
            for (const char* key : {"c1", "c2", "c3"})
                check(e.has(key), state_line, [&] { return fmt::format("state=bd needs {}", key); });
            e.forbid("sign", "is only used by state=mixture");
            s.c1 = e.real("c1");
            s.c2 = e.real("c2");
            s.c3 = e.real("c3");
            break;
        case StateKind::mixture: {
            check(e.has("c3"), state_line, [] { return std::string("state=mixture needs c3"); });
            e.forbid("c1", "is fixed by sign for state=mixture");
            e.forbid("c2", "is fixed by c3 and sign for state=mixture");
            s.c3 = e.real("c3");
            check(std::abs(s.c3) < 1.0, e.line("c3"),
                  [&] { return fmt::format("|c3| < 1 violated for state=mixture: c3 = {}", s.c3); });
            if (e.has("sign")) {
                const long long sign = e.integer("sign");
                check(sign == 1 || sign == -1, e.line("sign"), [] { return std::string("sign must be 1 or -1"); });
                s.sign = static_cast<int>(sign);
            }
            break;
        }
        default:
            for (const char* key : {"c1", "c2", "c3", "sign"})
                e.forbid(key, fmt::format("is not used by state={}", e.text("state")));
            break;
    }
    try {
        (void)s.state();
    } catch (const std::exception& ex) {
        throw ParseError(state_line, ex.what());
    }

    cfg.engine = parse_engine(e);
    cfg.t_max = e.real("t_max");
    check(cfg.t_max > 0.0, e.line("t_max"), [] { return std::string("t_max must be > 0"); });
    const long long steps = e.integer("steps");
    check(steps >= 2 && steps <= 100'000'000, e.line("steps"),
          [&] { return fmt::format("steps must lie in [2, 1e8], got {}", steps); });
    cfg.steps = static_cast<int>(steps);
    if (e.has("out")) cfg.output = e.text("out");

    try {
        cfg.validate();
    } catch (const std::exception& ex) {
        throw ParseError(e.has("engine") ? e.line("engine") : 0, ex.what());
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigurationError(fmt::format("cannot read config file '{}'", path));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string_view to_string(Engine e) {
    switch (e) {
        case Engine::exact: return "exact";
        case Engine::limit: return "limit";
        case Engine::limit_same: return "limit_same";
        case Engine::limit_distinct: return "limit_distinct";
    }
    return "?";
}

std::string_view to_string(StateKind k) {
    switch (k) {
        case StateKind::phi_plus: return "phi+";
        case StateKind::phi_minus: return "phi-";
        case StateKind::psi_plus: return "psi+";
        case StateKind::psi_minus: return "psi-";
        case StateKind::bell_diagonal: return "bd";
        case StateKind::mixture: return "mixture";
    }
    return "?";
}

std::string serialize_config(const RunConfig& cfg) {
    const ModelParams& m = cfg.model;
    std::string out;
    auto put = [&out](std::string_view key, const auto& value) { out += fmt::format("{}={}\n", key, value); };
    put("N", m.n_spins);
    put("a", m.coupling_angle);
    put("x1", m.x1);
    put("spacing", m.spacing);
    put("v", m.velocity);
    put("xA", m.xA);
    put("xB", m.xB);
    put("omegaA", m.omegaA);
    put("omegaB", m.omegaB);
    put("omega", m.array_frequency);
    put("state", to_string(cfg.initial.kind));
    if (cfg.initial.kind == StateKind::bell_diagonal) {
        put("c1", cfg.initial.c1);
        put("c2", cfg.initial.c2);
        put("c3", cfg.initial.c3);
    } else if (cfg.initial.kind == StateKind::mixture) {
        put("c3", cfg.initial.c3);
        put("sign", cfg.initial.sign);
    }
    put("engine", to_string(cfg.engine));
    put("t_max", cfg.t_max);
    put("steps", cfg.steps);
    if (!cfg.output.empty()) put("out", cfg.output);
    return out;
}

}  // namespace dephase

#include "paritylane/qasm.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace paritylane {

namespace {

std::string fmt_angle(double a) {
    std::ostringstream os;
    os << std::setprecision(17) << a;
    return os.str();
}

}  // namespace

std::string to_qasm(const Circuit& c) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    os << "gate iswap a,b { s a; s b; h a; cx a,b; cx b,a; h b; }\n";
    os << "qreg q[" << c.n_qubits() << "];\n";
    if (c.n_cbits() > 0) os << "creg m[" << c.n_cbits() << "];\n";
    for (const auto& g : c.gates()) {
        switch (g.kind) {
            case GateKind::CNOT:
                os << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
                break;
            case GateKind::RZ:
                // internal RZ(phi) = exp(i phi Z) = rz(-2 phi) up to phase
                os << "rz(" << fmt_angle(-2 * g.angle) << ") q[" << g.q0 << "];\n";
                break;
            case GateKind::RX:
                os << "rx(" << fmt_angle(-2 * g.angle) << ") q[" << g.q0 << "];\n";
                break;
            case GateKind::H:
                os << "h q[" << g.q0 << "];\n";
                break;
            case GateKind::CP:
                os << "cu1(" << fmt_angle(g.angle) << ") q[" << g.q0 << "],q[" << g.q1 << "];\n";
                break;
            case GateKind::CZ:
                os << "cz q[" << g.q0 << "],q[" << g.q1 << "];\n";
                break;
            case GateKind::ISWAP:
                os << "iswap q[" << g.q0 << "],q[" << g.q1 << "];\n";
                break;
            case GateKind::MEASURE_X:
                os << "h q[" << g.q0 << "];\n";
                os << "measure q[" << g.q0 << "] -> m[" << g.cbit << "];\n";
                break;
            case GateKind::COND_Z:
                os << "if(m==" << (1 << g.cbit) << ") z q[" << g.q0 << "];\n";
                break;
        }
    }
    return os.str();
}

namespace {

struct Tok {
    std::string text;
};

int parse_index(const std::string& s, std::size_t& pos, char reg) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size() || s[pos] != reg) throw std::runtime_error("qasm: expected register");
    ++pos;
    if (pos >= s.size() || s[pos] != '[') throw std::runtime_error("qasm: expected [");
    ++pos;
    std::size_t end = s.find(']', pos);
    int idx = std::stoi(s.substr(pos, end - pos));
    pos = end + 1;
    return idx;
}

}  // namespace

Circuit from_qasm(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int nq = -1, nc = 0;
    std::vector<std::string> body;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        line = line.substr(first);
        if (line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0 ||
            line.rfind("gate ", 0) == 0 || line.rfind("//", 0) == 0)
            continue;
        if (line.rfind("qreg", 0) == 0) {
            auto l = line.find('['), r = line.find(']');
            nq = std::stoi(line.substr(l + 1, r - l - 1));
            continue;
        }
        if (line.rfind("creg", 0) == 0) {
            auto l = line.find('['), r = line.find(']');
            nc = std::stoi(line.substr(l + 1, r - l - 1));
            continue;
        }
        body.push_back(line);
    }
    if (nq < 1) throw std::runtime_error("qasm: missing qreg");
    Circuit c(nq, nc);
    // the if(m==K) z ... form references a precomputed mask; measurement order
    // tracking maps it back to a cbit
    for (std::size_t li = 0; li < body.size(); ++li) {
        const std::string& s = body[li];
        auto starts = [&](const char* p) { return s.rfind(p, 0) == 0; };
        std::size_t pos;
        if (starts("cx")) {
            pos = 2;
            int a = parse_index(s, pos, 'q');
            ++pos;  // comma
            int b = parse_index(s, pos, 'q');
            c.append(Gate::cnot(a, b));
        } else if (starts("rz(") || starts("rx(")) {
            bool z = s[1] == 'z';
            auto close = s.find(')');
            double lam = std::stod(s.substr(3, close - 3));
            pos = close + 1;
            int q = parse_index(s, pos, 'q');
            double phi = -lam / 2;
            c.append(z ? Gate::rz(q, phi) : Gate::rx(q, phi));
        } else if (starts("h ")) {
            pos = 1;
            int q = parse_index(s, pos, 'q');
            // h followed by measure = MEASURE_X
            if (li + 1 < body.size() && body[li + 1].rfind("measure", 0) == 0) {
                const std::string& m = body[li + 1];
                std::size_t mp = 7;
                int mq = parse_index(m, mp, 'q');
                if (mq == q) {
                    auto arrow = m.find("->");
                    std::size_t cp = arrow + 2;
                    int cb = parse_index(m, cp, 'm');
                    c.append(Gate::measure_x(q, cb));
                    ++li;
                    continue;
                }
            }
            c.append(Gate::h(q));
        } else if (starts("cu1(")) {
            auto close = s.find(')');
            double th = std::stod(s.substr(4, close - 4));
            pos = close + 1;
            int a = parse_index(s, pos, 'q');
            ++pos;
            int b = parse_index(s, pos, 'q');
            c.append(Gate::cp(a, b, th));
        } else if (starts("cz")) {
            pos = 2;
            int a = parse_index(s, pos, 'q');
            ++pos;
            int b = parse_index(s, pos, 'q');
            c.append(Gate::cz(a, b));
        } else if (starts("iswap")) {
            pos = 5;
            int a = parse_index(s, pos, 'q');
            ++pos;
            int b = parse_index(s, pos, 'q');
            c.append(Gate::iswap(a, b));
        } else if (starts("if(")) {
            auto eq = s.find("==");
            auto close = s.find(')');
            long mask = std::stol(s.substr(eq + 2, close - eq - 2));
            int cb = 0;
            while ((mask >> cb) > 1) ++cb;
            auto zpos = s.find('z', close);
            pos = zpos + 1;
            int q = parse_index(s, pos, 'q');
            c.append(Gate::cond_z(q, cb));
        } else if (starts("measure")) {
            throw std::runtime_error("qasm: bare measure without X-basis h");
        } else {
            throw std::runtime_error("qasm: unsupported statement: " + s);
        }
    }
    return c;
}

}  // namespace paritylane

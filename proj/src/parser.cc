// Copyright 2026 The gkpsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <cmath>
#include <sstream>

#include "gkpsim/circuit.h"
#include "gkpsim/error.h"

namespace gkpsim {

namespace {

struct Token {
    std::string_view text;
    size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    size_t k = 0;
    while (k < line.size()) {
        if (line[k] == ' ' || line[k] == '\t' || line[k] == '\r') {
            k++;
            continue;
        }
        size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') {
            k++;
        }
        out.push_back(Token{line.substr(start, k - start), start + 1});
    }
    return out;
}

class LineParser {
   public:
    LineParser(size_t line_number, std::vector<Token> tokens) : line_(line_number), tokens_(std::move(tokens)) {
    }

    [[noreturn]] void fail(size_t column, const std::string &message) const {
        throw ParseError(line_, column, message);
    }

    const Token &at(size_t k, const char *what) const {
        if (k >= tokens_.size()) {
            size_t column = tokens_.empty() ? 1 : tokens_.back().column + tokens_.back().text.size();
            fail(column, std::string("expected ") + what);
        }
        return tokens_[k];
    }

    void expect_count(size_t count) const {
        if (tokens_.size() > count) {
            fail(tokens_[count].column, "unexpected token '" + std::string(tokens_[count].text) + "'");
        }
    }

    std::int64_t integer(size_t k, const char *what) const {
        const Token &tok = at(k, what);
        std::int64_t value = 0;
        const char *end = tok.text.data() + tok.text.size();
        auto res = std::from_chars(tok.text.data(), end, value);
        if (res.ec != std::errc() || res.ptr != end) {
            fail(tok.column, std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
        }
        return value;
    }

    int mode(size_t k, int n) const {
        std::int64_t value = integer(k, "mode index");
        if (value < 1 || value > n) {
            fail(at(k, "mode index").column,
                 "mode index " + std::to_string(value) + " outside 1.." + std::to_string(n));
        }
        return static_cast<int>(value);
    }

    double real(size_t k, const char *what) const {
        const Token &tok = at(k, what);
        double value = 0;
        const char *end = tok.text.data() + tok.text.size();
        auto res = std::from_chars(tok.text.data(), end, value);
        if (res.ec != std::errc() || res.ptr != end || !std::isfinite(value)) {
            fail(tok.column, std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
        }
        return value;
    }

    Rational rational(size_t k, const char *what) const {
        const Token &tok = at(k, what);
        try {
            return Rational::parse(tok.text);
        } catch (const Error &) {
            fail(tok.column, std::string("malformed ") + what + " '" + std::string(tok.text) + "'");
        }
    }

    Rational fraction(size_t k) const {
        const Token &tok = at(k, "fraction u/v");
        size_t slash = tok.text.find('/');
        std::string_view num = tok.text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view("1") : tok.text.substr(slash + 1);
        auto is_int = [](std::string_view s) {
            size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            if (s.size() <= start) {
                return false;
            }
            for (size_t i = start; i < s.size(); i++) {
                if (s[i] < '0' || s[i] > '9') {
                    return false;
                }
            }
            return true;
        };
        if (!is_int(num) || !is_int(den)) {
            fail(tok.column, "malformed fraction '" + std::string(tok.text) + "'");
        }
        Integer u(std::string(num[0] == '+' ? num.substr(1) : num));
        Integer v(std::string(den[0] == '+' ? den.substr(1) : den));
        if (v == 0) {
            fail(tok.column, "malformed fraction '" + std::string(tok.text) + "': zero denominator");
        }
        return reduce_fraction(u, v);
    }

    size_t size() const {
        return tokens_.size();
    }
    const Token &operator[](size_t k) const {
        return tokens_[k];
    }

   private:
    size_t line_;
    std::vector<Token> tokens_;
};

Gate parse_gate(const LineParser &p, int n) {
    std::string_view op = p[0].text;
    if (op == "R") {
        int mode = p.mode(1, n);
        const Token &kind = p.at(2, "angle kind (cot, pi or rad)");
        AngleSpec angle;
        if (kind.text == "cot") {
            angle = CotRational{p.fraction(3)};
        } else if (kind.text == "pi") {
            angle = PiMultiple{p.integer(3, "integer multiple of pi")};
        } else if (kind.text == "rad") {
            angle = Radians{p.real(3, "angle in radians")};
        } else {
            p.fail(kind.column, "unknown angle kind '" + std::string(kind.text) + "'");
        }
        p.expect_count(4);
        return Rotation{mode, angle};
    }
    if (op == "F") {
        int mode = p.mode(1, n);
        p.expect_count(2);
        return Fourier{mode};
    }
    if (op == "S") {
        int mode = p.mode(1, n);
        Rational s = p.rational(2, "squeeze parameter");
        if (s.is_zero()) {
            p.fail(p[2].column, "zero squeeze");
        }
        p.expect_count(3);
        return Squeeze{mode, s};
    }
    if (op == "P") {
        int mode = p.mode(1, n);
        Rational sigma = p.rational(2, "shear parameter");
        p.expect_count(3);
        return Shear{mode, sigma};
    }
    if (op == "SUM") {
        int control = p.mode(1, n);
        int target = p.mode(2, n);
        if (control == target) {
            p.fail(p[2].column, "SUM control and target must differ");
        }
        p.expect_count(3);
        return Sum{control, target};
    }
    if (op == "DQ" || op == "DP") {
        int mode = p.mode(1, n);
        double c = p.real(2, "displacement");
        p.expect_count(3);
        if (op == "DQ") {
            return DisplaceQ{mode, c};
        }
        return DisplaceP{mode, c};
    }
    p.fail(p[0].column, "unknown instruction '" + std::string(op) + "'");
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit circ;
    bool have_modes = false;
    bool have_measure = false;
    size_t line_number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        line_number++;
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        LineParser p(line_number, tokenize(line));
        if (p.size() == 0) {
            continue;
        }
        if (have_measure) {
            p.fail(p[0].column, "MEASURE must be the last instruction");
        }
        if (!have_modes) {
            if (p[0].text != "modes") {
                p.fail(p[0].column, "expected 'modes <n>' first");
            }
            std::int64_t n = p.integer(1, "mode count");
            if (n < 1 || n > 100000) {
                p.fail(p[1].column, "mode count must be positive");
            }
            p.expect_count(2);
            circ.n = static_cast<int>(n);
            have_modes = true;
            continue;
        }
        if (p[0].text == "MEASURE") {
            if (p.size() < 2) {
                p.fail(p[0].column + 7, "MEASURE needs at least one mode");
            }
            for (size_t k = 1; k < p.size(); k++) {
                int j = p.mode(k, circ.n);
                for (int prev : circ.measured) {
                    if (prev == j) {
                        p.fail(p[k].column, "mode " + std::to_string(j) + " measured twice");
                    }
                }
                circ.measured.push_back(j);
            }
            have_measure = true;
            continue;
        }
        circ.gates.push_back(parse_gate(p, circ.n));
    }
    if (!have_modes) {
        throw ParseError(line_number, 1, "missing 'modes <n>' line");
    }
    if (!have_measure) {
        throw ParseError(line_number, 1, "missing MEASURE line");
    }
    return circ;
}

std::string render_circuit(const Circuit &circ) {
    std::ostringstream out;
    out << "modes " << circ.n << "\n";
    for (const Gate &g : circ.gates) {
        out << gate_str(g) << "\n";
    }
    out << "MEASURE";
    for (int j : circ.measured) {
        out << " " << j;
    }
    out << "\n";
    return out.str();
}

}  // namespace gkpsim

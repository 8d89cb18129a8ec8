#include "strand/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace strand {

namespace {

struct Tokenizer {
    const std::string& text;
    int line;
    std::size_t pos = 0;
    int col = 1;

    Tokenizer(const std::string& t, int line_no) : text(t), line(line_no) {}

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++col;
        }
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    char take() {
        skip_space();
        char c = text[pos++];
        ++col;
        return c;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, line, col);
    }
    std::int64_t integer() {
        skip_space();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer");
        std::int64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > (std::int64_t{1} << 56)) fail("integer literal too large");
            ++pos;
            ++col;
        }
        return v;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, RingContext ring,
                            int line_no) {
    Tokenizer tk(text, line_no);
    Gf gf = ring.field();
    std::vector<Term> terms;
    bool first = true;
    while (!tk.done()) {
        // sign
        std::int64_t sign = 1;
        char c = tk.peek();
        if (c == '+' || c == '-') {
            tk.take();
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            tk.fail("expected '+' or '-' between terms");
        }
        first = false;
        // term: factors joined by '*'
        std::uint32_t coeff = gf.from_int(sign);
        std::vector<std::int32_t> exps(ring.nvars, 0);
        bool saw_factor = false;
        for (;;) {
            char f = tk.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                std::int64_t v = tk.integer();
                coeff = gf.mul(coeff, gf.from_int(v));
                saw_factor = true;
            } else if (f == 'x') {
                tk.take();
                if (!std::isdigit(static_cast<unsigned char>(tk.peek())))
                    tk.fail("expected a variable index after 'x'");
                std::int64_t idx = tk.integer();
                if (idx >= ring.nvars)
                    tk.fail("variable x" + std::to_string(idx) +
                            " outside the declared ring (vars " +
                            std::to_string(ring.nvars) + ")");
                std::int64_t e = 1;
                if (tk.peek() == '^') {
                    tk.take();
                    e = tk.integer();
                    if (e < 0 || e > 1000) tk.fail("unreasonable exponent");
                }
                exps[static_cast<std::size_t>(idx)] += static_cast<std::int32_t>(e);
                saw_factor = true;
            } else {
                tk.fail("expected a coefficient or a variable");
            }
            if (tk.peek() == '*') {
                tk.take();
                continue;
            }
            break;
        }
        if (!saw_factor) tk.fail("empty term");
        if (coeff != 0) terms.push_back(Term{Monomial(std::move(exps)), coeff});
    }
    if (first) tk.fail("empty polynomial");
    return Polynomial(ring, std::move(terms));
}

std::string format_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (auto& t : f.terms()) {
        if (!s.empty()) s += " + ";
        std::string mono = t.monomial.is_one() ? "" : t.monomial.str();
        if (mono.empty()) {
            s += std::to_string(t.coeff);
        } else if (t.coeff == 1) {
            s += mono;
        } else {
            s += std::to_string(t.coeff) + "*" + mono;
        }
    }
    return s;
}

IdealFile parse_ideal_file_text(const std::string& text) {
    IdealFile out;
    std::istringstream is(text);
    std::string raw;
    int line_no = 0;
    bool saw_vars = false;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string linestr = raw;
        auto hash = linestr.find('#');
        if (hash != std::string::npos) linestr = linestr.substr(0, hash);
        std::istringstream ls(linestr);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "name") {
            ls >> out.name;
        } else if (head == "prime") {
            long long p = 0;
            if (!(ls >> p) || p < 3)
                throw ParseError("bad prime directive", line_no, 1);
            out.prime = static_cast<std::uint32_t>(p);
        } else if (head == "vars") {
            if (!(ls >> out.nvars) || out.nvars < 1)
                throw ParseError("bad vars directive", line_no, 1);
            saw_vars = true;
        } else if (head == "meta") {
            std::string key, value;
            ls >> key;
            std::getline(ls, value);
            while (!value.empty() && std::isspace(static_cast<unsigned char>(value.front())))
                value.erase(value.begin());
            out.metadata[key] = value;
        } else {
            if (!saw_vars)
                throw ParseError("generator before the vars directive",
                                 line_no, 1);
            std::string expr = linestr;
            out.generator_text.push_back(expr);
        }
    }
    if (!saw_vars) throw ParseError("missing vars directive", line_no, 1);
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write file: " + path);
    f << content;
}

IdealFile read_ideal_file(const std::string& path) {
    return parse_ideal_file_text(read_text_file(path));
}

Ideal parse_ideal(const IdealFile& file, std::uint32_t prime_override) {
    std::uint32_t prime = prime_override != 0 ? prime_override : file.prime;
    RingContext ring = make_ring(prime, file.nvars);
    std::vector<Polynomial> gens;
    int line_no = 0;
    for (auto& text : file.generator_text) {
        ++line_no;
        Polynomial f = parse_polynomial(text, ring, line_no);
        if (f.is_zero()) continue;
        if (!f.is_homogeneous()) {
            std::map<int, int> degs;
            for (auto& t : f.terms()) degs[t.monomial.degree()]++;
            std::string found;
            for (auto& [d, c] : degs)
                found += (found.empty() ? "" : ", ") + std::to_string(d);
            throw ParseError(
                "inhomogeneous generator (degrees " + found + "): " + text,
                line_no, 1);
        }
        gens.push_back(std::move(f));
    }
    return Ideal{ring, std::move(gens)};
}

std::string emit_ideal_file(const Ideal& ideal, const std::string& name) {
    std::ostringstream os;
    if (!name.empty()) os << "name " << name << "\n";
    os << "prime " << ideal.ring.prime << "\n";
    os << "vars " << ideal.ring.nvars << "\n";
    for (auto& g : ideal.gens)
        if (!g.is_zero()) os << format_polynomial(g) << "\n";
    return os.str();
}

RationalBettiTable parse_rational_table_text(const std::string& text) {
    RationalBettiTable out;
    std::istringstream is(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::istringstream ls(raw);
        int i = 0, total = 0;
        std::string value;
        if (!(ls >> i)) continue;
        if (!(ls >> total >> value))
            throw ParseError("expected: <step> <total degree> <value>",
                             line_no, 1);
        auto slash = value.find('/');
        Rational v;
        if (slash == std::string::npos) {
            v = Rational(std::stoll(value));
        } else {
            v = Rational(std::stoll(value.substr(0, slash)),
                         std::stoll(value.substr(slash + 1)));
        }
        out.set(i, total, v);
    }
    return out;
}

RationalBettiTable read_rational_table(const std::string& path) {
    return parse_rational_table_text(read_text_file(path));
}

}  // namespace strand

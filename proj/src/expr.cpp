#include "superfrieze/expr.hpp"

#include <cctype>

#include "superfrieze/errors.hpp"

namespace superfrieze {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    SuperScalar parse() {
        SuperScalar r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("at position " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    SuperScalar expr() {
        SuperScalar r = term();
        while (true) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }

    SuperScalar term() {
        SuperScalar r = factor();
        while (true) {
            if (eat('*')) r = r * factor();
            else if (eat('/')) {
                const std::size_t at = pos_;
                SuperScalar d = factor();
                try {
                    r = r / d;
                } catch (const NotInvertible& e) {
                    pos_ = at;
                    fail(e.what());
                }
            } else {
                return r;
            }
        }
    }

    SuperScalar factor() {
        if (eat('-')) return -factor();
        SuperScalar a = atom();
        if (eat('^')) {
            const int e = integer();
            try {
                a = a.pow(e);
            } catch (const NotInvertible& e2) {
                fail(e2.what());
            }
        }
        return a;
    }

    int integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000'000L) fail("exponent/integer literal too large");
            ++pos_;
        }
        return static_cast<int>(neg ? -v : v);
    }

    SuperScalar atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("expected a value");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            SuperScalar r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            return SuperScalar(Rat(boost::multiprecision::cpp_int(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
                name += s_[pos_++];
            int index = -1;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                std::string digits;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    digits += s_[pos_++];
                index = std::stoi(digits);
            }
            const Parity p = name.front() == 'b' ? Parity::Odd : Parity::Even;
            return SuperScalar::generator(GeneratorId{name, index, p});
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

SuperScalar parse_scalar(const std::string& text) { return Parser(text).parse(); }

std::vector<SuperScalar> parse_scalar_list(const std::string& text) {
    std::vector<SuperScalar> out;
    std::string piece;
    int depth = 0;
    for (const char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(parse_scalar(piece));
            piece.clear();
        } else {
            piece += c;
        }
    }
    out.push_back(parse_scalar(piece));
    return out;
}

} // namespace superfrieze

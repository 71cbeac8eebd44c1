#pragma once

#include "qrious/ratio_spec.hpp"

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qrious {

struct ParseError : std::runtime_error {
    std::size_t position;

    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error("parse error at offset " + std::to_string(pos) + ": " + msg),
          position(pos) {}
};

namespace detail {

// Recursive-descent parser for the ratio grammar:
//
//   spec  := forms "/" forms
//   forms := form ("," form)*
//   form  := term (("+" | "-") term)*
//   term  := [unsigned-integer] letter | unsigned-integer
//
// Whitespace is insignificant. Parameter order is first appearance in the
// input, scanning numerator before denominator. Pure-integer terms are
// accepted syntactically but every form's constant part must cancel to zero.
class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    RatioSpec parse() {
        auto parse_forms = [&](std::vector<RawForm>& out) {
            while (true) {
                RawForm form;
                form.pos = skip_ws();
                bool first = true;
                while (true) {
                    skip_ws();
                    int sign = 1;
                    if (!first) {
                        if (peek() == '+') {
                            ++pos_;
                        } else if (peek() == '-') {
                            sign = -1;
                            ++pos_;
                        } else {
                            break;
                        }
                    }
                    Term t = parse_term();
                    t.coeff *= sign;
                    form.terms.push_back(t);
                    first = false;
                }
                if (form.terms.empty()) throw ParseError(pos_, "expected a term");
                out.push_back(std::move(form));
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                break;
            }
        };

        std::vector<RawForm> raw_num, raw_den;
        parse_forms(raw_num);
        skip_ws();
        if (peek() != '/') throw ParseError(pos_, "expected '/' between numerator and denominator");
        ++pos_;
        parse_forms(raw_den);
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");

        RatioSpec spec;
        spec.params = params_;
        auto lower = [&](const std::vector<RawForm>& raw, std::vector<LinearForm>& out) {
            for (const auto& rf : raw) {
                LinearForm f;
                f.coeffs.assign(params_.size(), 0);
                i64 constant = 0;
                for (const auto& t : rf.terms) {
                    if (t.param < 0)
                        constant += t.coeff;
                    else
                        f.coeffs[static_cast<std::size_t>(t.param)] += t.coeff;
                }
                if (constant != 0)
                    throw ParseError(rf.pos, "constant part of a form must cancel to zero");
                if (f.all_zero())
                    throw ParseError(rf.pos, "form has no nonzero parameter coefficient");
                out.push_back(std::move(f));
            }
        };
        lower(raw_num, spec.num);
        lower(raw_den, spec.den);
        spec.validate();
        return spec;
    }

private:
    struct Term {
        i64 coeff;
        int param;  // index into params_, -1 for a constant term
        std::size_t pos;
    };
    struct RawForm {
        std::vector<Term> terms;
        std::size_t pos;
    };

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<char> params_;

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::size_t skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return pos_;
    }

    Term parse_term() {
        skip_ws();
        std::size_t start = pos_;
        bool saw_digits = false;
        i64 value = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            saw_digits = true;
            value = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                int digit = text_[pos_] - '0';
                if (value > (INT64_MAX - digit) / 10)
                    throw ParseError(start, "integer literal too large");
                value = value * 10 + digit;
                ++pos_;
            }
            skip_ws();
        }
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            char name = text_[pos_];
            ++pos_;
            return {value, param_index(name), start};
        }
        if (!saw_digits) throw ParseError(pos_, "expected a coefficient or parameter letter");
        return {value, -1, start};
    }

    int param_index(char name) {
        for (std::size_t i = 0; i < params_.size(); ++i)
            if (params_[i] == name) return static_cast<int>(i);
        params_.push_back(name);
        return static_cast<int>(params_.size() - 1);
    }
};

}  // namespace detail

inline RatioSpec parse_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

}  // namespace qrious

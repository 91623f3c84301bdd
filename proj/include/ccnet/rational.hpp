#pragma once
#include <gmpxx.h>
#include <string>

#include "ccnet/errors.hpp"

namespace ccnet {

// Exact rational scalar. All arithmetic in the library is exact; no floats
// appear anywhere, including serialized output.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw validation_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Canonical "p/q" (or "p" when q == 1), sign on the numerator.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Parses "p" or "p/q" with optional sign. Throws validation_error on junk.
inline Rat rat_parse(const std::string& text) {
    auto digits = [](const std::string& s, size_t from, size_t to) {
        if (from >= to) return false;
        for (size_t i = from; i < to; ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    size_t start = (!text.empty() && (text[0] == '+' || text[0] == '-')) ? 1 : 0;
    size_t slash = text.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = digits(text, start, text.size());
    } else {
        ok = digits(text, start, slash) && digits(text, slash + 1, text.size());
    }
    if (!ok) throw validation_error("not a rational literal: '" + text + "'");
    Rat r(text);
    if (r.get_den() == 0) throw validation_error("rational with zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

} // namespace ccnet

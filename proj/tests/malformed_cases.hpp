#pragma once

#include "sgeval/parser.hpp"

namespace testing {

struct MalformedCase {
    const char* text;
    sgeval::ParseErrorKind kind;
    int line, column;
};

inline constexpr MalformedCase kMalformed[] = {
    {"a1 a => b @ 0.5\n", sgeval::ParseErrorKind::Syntax, 1, 4},
    {"a1: a => b\n", sgeval::ParseErrorKind::Syntax, 1, 11},
    {"a1: a & ~a => b @ 1\n", sgeval::ParseErrorKind::InconsistentPremise, 1, 5},
    {"a1: a => b @ 1.5\n", sgeval::ParseErrorKind::WeightOutOfRange, 1, 14},
    {"a1: a => b @ 1\na1: c => d @ 1\n", sgeval::ParseErrorKind::DuplicateId, 2, 1},
    {"a1: a => b @ 1\na2: a => b @ 1\n", sgeval::ParseErrorKind::DuplicateStatement, 2, 1},
    {"%foo\n", sgeval::ParseErrorKind::UnknownDirective, 1, 2},
    {"%version 2\n", sgeval::ParseErrorKind::Syntax, 1, 10},
    {"a1: T & a => b @ 1\n", sgeval::ParseErrorKind::Syntax, 1, 7},
    {"a1: a => T @ 1\n", sgeval::ParseErrorKind::Syntax, 1, 10},
    {"a1: ~T => b @ 1\n", sgeval::ParseErrorKind::Syntax, 1, 6},
    {"a1: a => b @ 0.5 extra\n", sgeval::ParseErrorKind::Syntax, 1, 18},
    {"a1: a => b @ -0.5\n", sgeval::ParseErrorKind::Syntax, 1, 14},
    {"# fine\na1: a => => b @ 1\n", sgeval::ParseErrorKind::Syntax, 2, 10},
};

}  // namespace testing

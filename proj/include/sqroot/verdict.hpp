#pragma once

#include <string_view>

namespace sqroot {

enum class Verdict {
    Yes,
    No,
    Timeout,
    NotApplicable,
};

constexpr std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "YES";
        case Verdict::No: return "NO";
        case Verdict::Timeout: return "TIMEOUT";
        case Verdict::NotApplicable: return "NOT-APPLICABLE";
    }
    return "?";
}

}  // namespace sqroot

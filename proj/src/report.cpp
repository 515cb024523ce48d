#include "rrb/report.hpp"

#include <sstream>

namespace rrb {

std::string tuple_string(const std::vector<std::size_t>& tuple) {
    std::string s = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(tuple[i] + 1);
    }
    return s + ")";
}

void Report::add(std::string identity, std::vector<std::size_t> tuple, Vec lhs, Vec rhs) {
    violations_.push_back({std::move(identity), std::move(tuple), std::move(lhs), std::move(rhs)});
}

void Report::merge(const Report& other, const std::string& scope) {
    for (const auto& v : other.violations_) {
        Violation c = v;
        if (!scope.empty()) c.identity = scope + ": " + c.identity;
        violations_.push_back(std::move(c));
    }
}

bool Report::fails(const std::string& prefix) const {
    for (const auto& v : violations_) {
        if (v.identity.rfind(prefix, 0) == 0) return true;
    }
    return false;
}

std::string Report::first_failure() const { return ok() ? std::string() : violations_.front().identity; }

std::string Report::str(std::size_t limit) const {
    if (ok()) return "ok";
    std::ostringstream os;
    os << violations_.size() << " violation(s)";
    for (std::size_t i = 0; i < violations_.size() && i < limit; ++i) {
        const auto& v = violations_[i];
        os << "\n  " << v.identity << " at basis tuple " << tuple_string(v.tuple) << ": lhs " << to_string(v.lhs)
           << " != rhs " << to_string(v.rhs);
    }
    if (violations_.size() > limit) os << "\n  ...";
    return os.str();
}

}  // namespace rrb

#pragma once

#include <string>
#include <vector>

#include "rrb/matrix.hpp"

namespace rrb {

/// One failed instance of an identity on a tuple of basis indices.
struct Violation {
    std::string identity;
    std::vector<std::size_t> tuple;
    Vec lhs;
    Vec rhs;
};

/// Outcome of an axiom check: empty means every identity held exactly.
class Report {
public:
    bool ok() const { return violations_.empty(); }
    explicit operator bool() const { return ok(); }

    const std::vector<Violation>& violations() const { return violations_; }
    void add(Violation v) { violations_.push_back(std::move(v)); }
    void add(std::string identity, std::vector<std::size_t> tuple, Vec lhs, Vec rhs);
    /// Appends another report, prefixing identity names with `scope`.
    void merge(const Report& other, const std::string& scope = "");

    /// Whether some violation's identity name starts with `prefix`.
    bool fails(const std::string& prefix) const;
    /// Name of the first violated identity, or "" when ok().
    std::string first_failure() const;

    /// Human-readable listing, truncated after `limit` violations.
    std::string str(std::size_t limit = 10) const;

private:
    std::vector<Violation> violations_;
};

std::string tuple_string(const std::vector<std::size_t>& tuple);

/// Checks lhs == rhs for every tuple of basis indices with the given factor
/// dimensions. `f` maps a tuple of basis indices to the pair (lhs, rhs).
template <class F>
void check_identity(Report& report, const std::string& name, const std::vector<std::size_t>& dims, F&& f) {
    TensorIndex idx(dims);
    idx.for_each([&](const std::vector<std::size_t>& t, std::size_t) {
        auto [lhs, rhs] = f(t);
        if (lhs != rhs) report.add(name, t, std::move(lhs), std::move(rhs));
    });
}

}  // namespace rrb

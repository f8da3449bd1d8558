#include "genrec/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace genrec {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::malformed_cycle: return "MalformedCycle";
        case Errc::repeated_point: return "RepeatedPoint";
        case Errc::out_of_range: return "OutOfRange";
        case Errc::degree_mismatch: return "DegreeMismatch";
        case Errc::not_a_permutation: return "NotAPermutation";
        case Errc::not_transitive: return "NotTransitive";
        case Errc::not_two_transitive: return "NotTwoTransitive";
        case Errc::budget_exceeded: return "BudgetExceeded";
        case Errc::not_prime_power: return "NotPrimePower";
        case Errc::equal_points: return "EqualPoints";
        case Errc::unknown_family: return "UnknownFamily";
        case Errc::bad_params: return "BadParams";
        case Errc::no_gap: return "NoGap";
        case Errc::degenerate_line: return "DegenerateLine";
        case Errc::line_too_large: return "LineTooLarge";
        case Errc::inconsistent_lines: return "InconsistentLines";
        case Errc::insufficient_samples: return "InsufficientSamples";
        case Errc::not_projective_parameters: return "NotProjectiveParameters";
        case Errc::completion_failed: return "CompletionFailed";
        case Errc::not_a_collineation: return "NotACollineation";
        case Errc::not_a_block_system: return "NotABlockSystem";
        case Errc::dimension_too_small: return "DimensionTooSmall";
        case Errc::io_error: return "IOError";
        case Errc::parse_error: return "ParseError";
        case Errc::internal: return "InternalError";
    }
    return "UnknownError";
}

Permutation::Permutation(int degree) {
    if (degree < 1)
        raise(Errc::bad_params, "permutation degree must be >= 1");
    images_.resize(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) images_[static_cast<std::size_t>(i)] = i;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int m = degree();
    if (m < 1)
        raise(Errc::bad_params, "permutation degree must be >= 1");
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (int x : images_) {
        if (x < 0 || x >= m)
            raise(Errc::not_a_permutation, "image out of range");
        if (seen[static_cast<std::size_t>(x)])
            raise(Errc::not_a_permutation, "image array is not a bijection");
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i)
        inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

std::vector<int> Permutation::support() const {
    std::vector<int> moved;
    for (int i = 0; i < degree(); ++i)
        if (images_[static_cast<std::size_t>(i)] != i) moved.push_back(i);
    return moved;
}

int Permutation::smallest_moved_point() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[static_cast<std::size_t>(i)] != i) return i;
    return -1;
}

std::size_t Permutation::hash() const {
    // FNV-1a over the image array.
    std::size_t h = 1469598103934665603ull;
    for (int x : images_) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ull;
    }
    return h;
}

Permutation compose(const Permutation& p, const Permutation& r) {
    if (p.degree() != r.degree())
        raise(Errc::degree_mismatch, "compose: degrees differ");
    std::vector<int> im(static_cast<std::size_t>(p.degree()));
    for (int x = 0; x < p.degree(); ++x)
        im[static_cast<std::size_t>(x)] = r(p(x));
    return Permutation(std::move(im));
}

Permutation Permutation::parse_cycles(std::string_view text, int degree) {
    if (degree < 1)
        raise(Errc::bad_params, "degree must be >= 1");
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
    std::vector<char> used(static_cast<std::size_t>(degree), 0);

    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };

    bool saw_cycle = false;
    skip_ws();
    while (i < n) {
        if (text[i] != '(')
            raise(Errc::malformed_cycle, "expected '(' in cycle notation");
        ++i;
        std::vector<int> cycle;
        skip_ws();
        while (i < n && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                raise(Errc::malformed_cycle, "non-numeric token in cycle");
            long value = 0;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + (text[i] - '0');
                if (value > degree)
                    raise(Errc::out_of_range, "point name exceeds degree");
                ++i;
            }
            if (value < 1)
                raise(Errc::malformed_cycle, "point names are 1-based");
            int pt = static_cast<int>(value) - 1;
            if (used[static_cast<std::size_t>(pt)])
                raise(Errc::repeated_point, "point appears twice");
            used[static_cast<std::size_t>(pt)] = 1;
            cycle.push_back(pt);
            skip_ws();
        }
        if (i >= n)
            raise(Errc::malformed_cycle, "unbalanced parenthesis");
        ++i;  // ')'
        saw_cycle = true;
        if (cycle.size() >= 2) {
            for (std::size_t k = 0; k < cycle.size(); ++k)
                images[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
        }
        skip_ws();
    }
    if (!saw_cycle)
        raise(Errc::malformed_cycle, "empty permutation text; use \"()\" for the identity");
    return Permutation(std::move(images));
}

std::string Permutation::to_cycles() const {
    std::ostringstream out;
    std::vector<char> seen(images_.size(), 0);
    bool any = false;
    for (int start = 0; start < degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        int len = 0;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            ++len;
        }
        if (len < 2) continue;
        any = true;
        out << '(';
        int x = start;
        for (int k = 0; k < len; ++k) {
            if (k) out << ' ';
            out << (x + 1);
            x = images_[static_cast<std::size_t>(x)];
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

} // namespace genrec
